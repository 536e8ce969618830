#pragma once

#include "epc/exactpoly/unipoly.hpp"
#include "epc/rational.hpp"

#include <optional>
#include <vector>

namespace epc {

/// Sturm chain of the square-free part of a polynomial. Build once, query
/// sign variations at many points.
class SturmSequence {
public:
    explicit SturmSequence(const UniPoly& p);

    /// Sign variations at x; nullopt means -inf (lower) / +inf (upper) via
    /// the `positive_infinity` flag.
    int variations_at(const Rational& x) const;
    int variations_at_infinity(bool positive) const;

    /// Distinct real roots in (lo, hi]; nullopt bounds are -inf / +inf.
    int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

    const UniPoly& square_free() const { return chain_.front(); }
    const std::vector<UniPoly>& chain() const { return chain_; }

private:
    std::vector<UniPoly> chain_;
};

/// Number of distinct real roots of p in (a, b]. Unbounded ends are nullopt.
/// Throws on the zero polynomial or a >= b.
int sturm_count(const UniPoly& p, const std::optional<Rational>& a = std::nullopt,
                const std::optional<Rational>& b = std::nullopt);

/// Number of real roots counted with multiplicity.
int real_root_count_with_multiplicity(const UniPoly& p);

struct RealRoot {
    /// Isolating interval [lo, hi]; lo == hi when the root was hit exactly.
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    /// Half-width: |root - midpoint()| <= error_bound().
    Rational error_bound() const { return (hi - lo) / 2; }
};

struct RootIsolation {
    /// Sorted by position, pairwise disjoint.
    std::vector<RealRoot> roots;

    int distinct_count() const { return static_cast<int>(roots.size()); }
    int count_with_multiplicity() const;
};

/// Isolates every distinct real root and refines each interval to width
/// <= precision by exact-sign bisection on the square-free part.
RootIsolation isolate_real_roots(const UniPoly& p, const Rational& precision);

/// If the root isolated by `root` is rational, returns it exactly.
/// `p` must vanish somewhere in the root's interval.
std::optional<Rational> rational_root_in(const UniPoly& p, const RealRoot& root);

/// Upper bound on the modulus of every complex root (Cauchy).
Rational root_modulus_bound(const UniPoly& p);

struct ComplexRoot {
    Rational re;
    Rational im;
    /// Radius of a disc around (re, im) guaranteed to contain a root,
    /// n * |p/p'| at the approximation (rounded up).
    Rational error_bound;
    /// |p(z)| evaluated in working precision for the square-free factor the
    /// root belongs to.
    Rational residual;
    int multiplicity = 1;

    bool is_real() const { return im == 0; }
};

struct ComplexRootOptions {
    /// Requested accuracy in decimal digits (<= 90); the working precision is
    /// fixed at 100 digits.
    int digits = 50;
    int max_iterations = 2000;
};

/// All deg(p) complex roots (repeated per multiplicity), computed by Aberth-
/// Ehrlich iteration on each square-free factor. Real roots are taken from
/// exact isolation, non-real ones come in exact conjugate pairs.
/// Sorted by real part, then imaginary part.
/// Throws ConvergenceError when the iteration cap is reached.
std::vector<ComplexRoot> complex_roots(const UniPoly& p, const ComplexRootOptions& options = {});

/// Convenience wrapper taking the precision as a rational tolerance
/// (e.g. 10^-30), mapped to the matching number of digits.
std::vector<ComplexRoot> complex_roots(const UniPoly& p, const Rational& precision);

}  // namespace epc
