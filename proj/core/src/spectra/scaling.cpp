#include "epc/spectra/scaling.hpp"

#include "epc/error.hpp"
#include "epc/parallel.hpp"
#include "epc/spectra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace epc {

SpectrumSource scaled_matrix_source(ScaledMatrix h, int digits) {
    return [h = std::move(h), digits](const Rational& lambda) {
        return eigenvalues_numeric(h, scale_from_lambda(lambda, h.scale_base()).s, digits);
    };
}

SpectrumSource es_source(ESParams params, int digits) {
    return [params = std::move(params), digits](const Rational& g) {
        ESParams p = params;
        p.g = g;
        return complex_roots(es_characteristic_polynomial(p), ComplexRootOptions{digits, 2000});
    };
}

namespace {

using Cplx = std::complex<long double>;

std::vector<Cplx> to_points(const std::vector<ComplexRoot>& roots) {
    std::vector<Cplx> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.emplace_back(to_long_double(r.re), to_long_double(r.im));
    return out;
}

bool close_moduli(long double a, long double b) {
    return std::fabs(a - b) <= 1e-12L * std::max(std::fabs(a), std::fabs(b));
}

// Sort by modulus then angle; within groups of equal modulus, reorder to
// follow the previous sample's branches greedily.
std::vector<Cplx> pair_branches(std::vector<Cplx> pts, const std::vector<Cplx>* previous) {
    std::sort(pts.begin(), pts.end(), [](const Cplx& a, const Cplx& b) {
        long double ma = std::abs(a), mb = std::abs(b);
        if (!close_moduli(ma, mb)) return ma < mb;
        return std::arg(a) < std::arg(b);
    });
    if (!previous) return pts;
    std::size_t start = 0;
    while (start < pts.size()) {
        std::size_t end = start + 1;
        while (end < pts.size() && close_moduli(std::abs(pts[start]), std::abs(pts[end]))) ++end;
        if (end - start > 1) {
            std::vector<Cplx> group(pts.begin() + static_cast<std::ptrdiff_t>(start),
                                    pts.begin() + static_cast<std::ptrdiff_t>(end));
            for (std::size_t slot = start; slot < end; ++slot) {
                const Cplx& target = (*previous)[slot];
                auto best = std::min_element(group.begin(), group.end(), [&](const Cplx& a, const Cplx& b) {
                    // Compare directions; magnitudes differ by the scaling itself.
                    return std::abs(std::arg(a / target)) < std::abs(std::arg(b / target));
                });
                pts[slot] = *best;
                group.erase(best);
            }
        }
        start = end;
    }
    return pts;
}

}  // namespace

ScalingFit scaling_fit(const SpectrumSource& source, std::span<const Rational> samples, int jobs) {
    if (samples.size() < 3) throw InvalidArgument("scaling_fit: need at least 3 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] <= 0) throw InvalidArgument("scaling_fit: samples must be positive");
        if (i > 0 && !(samples[i] < samples[i - 1]))
            throw InvalidArgument("scaling_fit: samples must be strictly decreasing toward 0");
    }

    std::vector<std::vector<Cplx>> raw(samples.size());
    parallel_for(samples.size(), jobs, [&](std::size_t i) { raw[i] = to_points(source(samples[i])); });

    const std::size_t branches = raw.front().size();
    for (const auto& r : raw)
        if (r.size() != branches) throw InvalidArgument("scaling_fit: eigenvalue count changes across samples");

    ScalingFit fit;
    fit.samples.assign(samples.begin(), samples.end());
    std::vector<std::vector<Cplx>> paired(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        paired[i] = pair_branches(raw[i], i == 0 ? nullptr : &paired[i - 1]);

    fit.moduli.resize(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (const auto& z : paired[i]) fit.moduli[i].push_back(std::abs(z));

    std::vector<long double> x;
    for (const auto& s : samples) x.push_back(std::log(to_long_double(s)));
    long double x_mean = 0;
    for (auto v : x) x_mean += v;
    x_mean /= static_cast<long double>(x.size());
    long double sxx = 0;
    for (auto v : x) sxx += (v - x_mean) * (v - x_mean);

    fit.branch_slopes.assign(branches, 0);
    fit.branch_excluded.assign(branches, false);
    long double pooled_num = 0, pooled_den = 0;
    std::vector<long double> y_means(branches, 0);
    for (std::size_t b = 0; b < branches; ++b) {
        std::vector<long double> y;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            long double m = fit.moduli[i][b];
            if (m == 0) {
                fit.branch_excluded[b] = true;
                break;
            }
            y.push_back(std::log(m));
        }
        if (fit.branch_excluded[b]) continue;
        long double y_mean = 0;
        for (auto v : y) y_mean += v;
        y_mean /= static_cast<long double>(y.size());
        y_means[b] = y_mean;
        long double sxy = 0;
        for (std::size_t i = 0; i < y.size(); ++i) sxy += (x[i] - x_mean) * (y[i] - y_mean);
        fit.branch_slopes[b] = sxy / sxx;
        pooled_num += sxy;
        pooled_den += sxx;
    }
    if (pooled_den == 0) throw InvalidArgument("scaling_fit: every branch has a zero eigenvalue");
    fit.pooled_slope = pooled_num / pooled_den;

    long double ss = 0;
    std::size_t count = 0;
    for (std::size_t b = 0; b < branches; ++b) {
        if (fit.branch_excluded[b]) continue;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            long double pred = y_means[b] + fit.pooled_slope * (x[i] - x_mean);
            long double d = std::log(fit.moduli[i][b]) - pred;
            ss += d * d;
            ++count;
        }
    }
    fit.residual = std::sqrt(ss / static_cast<long double>(count));
    return fit;
}

}  // namespace epc
