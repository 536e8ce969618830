#pragma once

#include "epc/exactpoly/roots.hpp"
#include "epc/models/es_model.hpp"
#include "epc/models/scaled_matrix.hpp"
#include "epc/rational.hpp"

#include <functional>
#include <span>
#include <vector>

namespace epc {

/// Eigenvalues as a function of the swept parameter (lambda, or g for the
/// chain model).
using SpectrumSource = std::function<std::vector<ComplexRoot>(const Rational& parameter)>;

/// lambda -> eigenvalues of H(lambda). When lambda is not an exact m-th
/// power, s is its m-th root rounded to 30 significant digits.
SpectrumSource scaled_matrix_source(ScaledMatrix h, int digits = 40);

/// g -> eigenvalues of the chain with the given coupling profile.
SpectrumSource es_source(ESParams params, int digits = 40);

struct ScalingFit {
    /// Parameter samples, strictly decreasing toward zero.
    std::vector<Rational> samples;
    /// moduli[i][b]: |E_b| at sample i after branch pairing.
    std::vector<std::vector<long double>> moduli;
    /// Least-squares slope of log|E_b| against log(sample), per branch.
    std::vector<long double> branch_slopes;
    /// Branches with a zero eigenvalue in some sample carry no slope.
    std::vector<bool> branch_excluded;
    /// Common slope with one intercept per branch, over non-excluded branches.
    long double pooled_slope = 0;
    /// RMS residual of the pooled fit.
    long double residual = 0;
};

/// Fits log|E| = slope * log(parameter) + c per eigenvalue branch.
/// Branches are paired across samples by sorting on (modulus, angle), ties
/// resolved by proximity to the previous sample. Samples are evaluated on
/// up to `jobs` threads; the result does not depend on `jobs`.
ScalingFit scaling_fit(const SpectrumSource& source, std::span<const Rational> samples, int jobs = 1);

}  // namespace epc
