#pragma once

#include "epc/exactpoly/roots.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/models/hamiltonians.hpp"
#include "epc/rational.hpp"
#include "epc/spectra/spectrum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epc {

struct LeadingSecular {
    int n = 0;
    /// Polynomial in eps with E = E0 + eps * t, t = lambda^(1/2).
    UniPoly polynomial;
    /// Power of t at which it arises (always n for hierarchical specs).
    int order = 0;
    std::string provenance;
};

/// Coefficient of t^N in det(H - E0 - eps t I) for a hierarchical spec.
/// Verifies that every lower power of t vanishes. Throws InvalidArgument for
/// bounded specs (use dominant_balances on the raw determinant instead).
LeadingSecular leading_secular(const JordanSpec& j, const PerturbationSpec& v);

struct CorridorResult {
    LeadingSecular leading;
    /// Real roots of the leading polynomial, with multiplicity, equal n.
    bool member = false;
    int real_count = 0;
    /// All roots simple.
    bool distinct = false;
    /// Member with a repeated root: on the corridor boundary.
    bool marginal = false;
    RootIsolation witness;
    /// Smallest gap between adjacent distinct real roots (members only).
    std::optional<long double> min_root_gap;

    /// Filled when a verification scale was requested.
    std::optional<Rational> verify_s;
    std::optional<Verdict> full_verdict;
    /// member == (full_verdict == AllReal).
    std::optional<bool> agreement;
};

/// Leading secular polynomial with every subdiagonal entry kept as a symbol.
/// coefficients[i] maps a monomial (sorted positions, each at most once) to
/// its integer coefficient in front of eps^i.
struct SymbolicSecular {
    int n = 0;
    std::vector<std::map<std::vector<Position>, Integer>> coefficients;

    /// Value at concrete parameters; missing entries count as zero.
    UniPoly evaluate(const std::map<Position, Rational>& values) const;
    /// e.g. "h[3,1] - h[2,1]*h[5,4]"; symbol(r, c) names the entry.
    std::string coefficient_string(int power) const;
};

/// Expands det over the 2^(N-1) permutations that avoid zero entries.
SymbolicSecular symbolic_leading_secular(int n);

CorridorResult corridor_membership(const JordanSpec& j, const PerturbationSpec& v,
                                   const std::optional<Rational>& verify_at = std::nullopt);

}  // namespace epc
