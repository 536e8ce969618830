#pragma once

#include "epc/matrix.hpp"
#include "epc/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace epc {

/// Closed rectangle [re_min, re_max] x [im_min, im_max].
struct ComplexRegion {
    long double re_min = -1;
    long double re_max = 1;
    long double im_min = -1;
    long double im_max = 1;
};

struct PseudoGrid {
    ComplexRegion region;
    std::vector<long double> re_axis;
    std::vector<long double> im_axis;
    /// sigma_min(z I - H), row-major with the imaginary axis as rows:
    /// values[i * re_axis.size() + j] belongs to z = re_axis[j] + i im_axis[i].
    std::vector<long double> sigma_min;

    long double at(std::size_t im_index, std::size_t re_index) const {
        return sigma_min[im_index * re_axis.size() + re_index];
    }
};

Matrix<long double> to_numeric(const Matrix<Rational>& h);

/// Smallest singular value of z I - H.
long double sigma_min(const Matrix<long double>& h, std::complex<long double> z);

/// sigma_min over an nx x ny grid covering the region (axes include both
/// ends). Needs nx, ny >= 2 and a nonempty region. Values are independent of
/// `jobs`.
PseudoGrid pseudospectrum(const Matrix<long double>& h, const ComplexRegion& region, std::size_t nx,
                          std::size_t ny, int jobs = 1);

}  // namespace epc
