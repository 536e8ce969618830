#pragma once

#include "epc/exactpoly/bipoly.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/rational.hpp"

#include <vector>

namespace epc {

/// One edge of the lower Newton polygon of P(E, u).
struct Balance {
    /// Roots on this edge scale as E = eps * lambda^slope.
    Rational slope;
    /// Same exponent in units of u (slope * scale base).
    Rational u_slope;
    /// Leading-balance polynomial in eps; its degree is the number of roots
    /// on this branch and its constant term is nonzero.
    UniPoly leading;
};

struct DominantBalances {
    /// Ordered by increasing slope (largest roots first).
    std::vector<Balance> balances;
    /// Roots identically zero (P divisible by E^k).
    int exact_zero_roots = 0;
    /// Roots escaping to infinity as lambda -> 0 (negative-slope edges).
    int infinite_branches = 0;
};

/// Newton-polygon dominant-balance analysis of P(E, u) with u^m = lambda.
/// The first BiPoly variable is the raw energy E. Throws InvalidArgument if
/// P is zero or independent of E.
DominantBalances dominant_balances(const BiPoly& p);

}  // namespace epc
