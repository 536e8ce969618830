#pragma once

#include "epc/exactpoly/bipoly.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/matrix.hpp"
#include "epc/rational.hpp"

#include <cstddef>

namespace epc {

/// One Hamiltonian entry: a polynomial in the scale variable u, u^m = lambda.
using ScaledPoly = UniPoly;

/// H(lambda) as an N x N array of polynomials in u = lambda^(1/m).
class ScaledMatrix {
public:
    ScaledMatrix() = default;
    ScaledMatrix(std::size_t n, int scale_base);
    ScaledMatrix(Matrix<ScaledPoly> entries, int scale_base);

    std::size_t size() const { return entries_.rows(); }
    int scale_base() const { return scale_base_; }
    const Matrix<ScaledPoly>& entries() const { return entries_; }

    /// Zero-based access.
    ScaledPoly& operator()(std::size_t r, std::size_t c) { return entries_(r, c); }
    const ScaledPoly& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

    /// Same matrix expressed with a finer scale base (must be a multiple).
    ScaledMatrix rebased(int new_base) const;

    /// H evaluated at u = s, i.e. lambda = s^m.
    Matrix<Rational> at(const Rational& s) const;

    /// H - e * u^k * I as a matrix of BiPolys in (e, u). k = 0 gives the raw
    /// secular matrix in the energy E.
    Matrix<BiPoly> minus_energy(int energy_u_power) const;

    /// det(H - e * u^k * I).
    BiPoly secular_determinant(int energy_u_power) const;

    /// det(H(s) - E I) as a polynomial in E.
    UniPoly characteristic_polynomial_at(const Rational& s) const;

    friend bool operator==(const ScaledMatrix& a, const ScaledMatrix& b) {
        return a.scale_base_ == b.scale_base_ && a.entries_ == b.entries_;
    }

private:
    Matrix<ScaledPoly> entries_;
    int scale_base_ = 1;
};

}  // namespace epc
