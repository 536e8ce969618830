#pragma once

#include "epc/exactpoly/roots.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/models/scaled_matrix.hpp"
#include "epc/rational.hpp"

#include <string>
#include <vector>

namespace epc {

enum class Verdict { AllReal, Broken };

std::string to_string(Verdict v);

/// Largest dimension handled through exact characteristic polynomials.
inline constexpr std::size_t kMaxSpectrumDimension = 16;

struct SpectrumOptions {
    /// Skip eigenvalue refinement; only the exact counts and verdict are filled.
    bool counts_only = false;
    /// Width of the isolating intervals of real eigenvalues.
    Rational real_precision = pow(Rational(10), -40);
    /// Requested digits for non-real eigenvalues.
    int complex_digits = 40;
};

struct SpectrumReport {
    /// u = s, so lambda = s^m.
    Rational s;
    Rational lambda;
    std::size_t n = 0;
    /// det(H - E) in E.
    UniPoly char_poly;
    /// Real eigenvalues counted with multiplicity.
    int real_count = 0;
    int complex_pairs = 0;
    Verdict verdict = Verdict::Broken;
    /// Exact isolation of the real eigenvalues.
    RootIsolation real_roots;
    /// All n eigenvalues (real ones included), empty when counts_only.
    std::vector<ComplexRoot> eigenvalues;
};

/// Exact reality verdict of H(lambda = s^m): Sturm counting on the exact
/// characteristic polynomial, no floating point involved in the decision.
SpectrumReport classify_reality(const ScaledMatrix& h, const Rational& s, const SpectrumOptions& options = {});

/// Same analysis for an already computed characteristic polynomial.
SpectrumReport classify_polynomial(const UniPoly& char_poly, const SpectrumOptions& options = {});

/// Eigenvalues of H(lambda = s^m) from roots of the exact characteristic
/// polynomial (never from a floating-point matrix factorization).
std::vector<ComplexRoot> eigenvalues_numeric(const ScaledMatrix& h, const Rational& s, int digits = 40);

/// lambda = s^m rounded to a nearby s when lambda is not an exact m-th power.
struct ScaleChoice {
    Rational s;
    Rational lambda;
    bool exact = true;
};

/// Exact m-th root when it exists; otherwise s is the m-th root rounded to
/// `digits` significant digits (half-even) and lambda is recomputed as s^m.
ScaleChoice scale_from_lambda(const Rational& lambda, int m, int digits = 30);

}  // namespace epc
