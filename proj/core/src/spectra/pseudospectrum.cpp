#include "epc/spectra/pseudospectrum.hpp"

#include "epc/error.hpp"
#include "epc/parallel.hpp"

#include <Eigen/SVD>

namespace epc {

Matrix<long double> to_numeric(const Matrix<Rational>& h) {
    return h.map([](const Rational& q) { return to_long_double(q); });
}

long double sigma_min(const Matrix<long double>& h, std::complex<long double> z) {
    if (!h.is_square() || h.rows() == 0) throw InvalidArgument("sigma_min: matrix must be square and nonempty");
    using CMat = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
    const auto n = static_cast<Eigen::Index>(h.rows());
    CMat a(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            a(r, c) = -h(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) + (r == c ? z : 0.0L);
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues()(n - 1);
}

namespace {

std::vector<long double> axis(long double lo, long double hi, std::size_t n) {
    std::vector<long double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<long double>(i) / static_cast<long double>(n - 1);
    return out;
}

}  // namespace

PseudoGrid pseudospectrum(const Matrix<long double>& h, const ComplexRegion& region, std::size_t nx,
                          std::size_t ny, int jobs) {
    if (nx < 2 || ny < 2) throw InvalidArgument("pseudospectrum: resolution must be at least 2x2");
    if (!(region.re_min < region.re_max) || !(region.im_min < region.im_max))
        throw InvalidArgument("pseudospectrum: empty region");
    PseudoGrid g;
    g.region = region;
    g.re_axis = axis(region.re_min, region.re_max, nx);
    g.im_axis = axis(region.im_min, region.im_max, ny);
    g.sigma_min.assign(nx * ny, 0);
    parallel_for(nx * ny, jobs, [&](std::size_t k) {
        std::size_t i = k / nx, j = k % nx;
        g.sigma_min[k] = sigma_min(h, {g.re_axis[j], g.im_axis[i]});
    });
    return g;
}

}  // namespace epc
