#pragma once

#include "epc/exactpoly/roots.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace epc {

/// Membership of the cubic gamma' + 3 rho^2 eps - eps^3 over a (rho, gamma')
/// grid, i.e. beta_1 + beta_2 = 3 rho^2.
struct RegionMap {
    std::vector<Rational> rho_axis;
    std::vector<Rational> gamma_axis;
    /// member[i * rho_axis.size() + j] for gamma_axis[i], rho_axis[j].
    std::vector<bool> member;
    /// Per rho column: midpoint between the outermost member cell and its
    /// non-member neighbour; nullopt when the membership reaches the grid
    /// edge or the column has no member.
    std::vector<std::optional<Rational>> upper_boundary;
    std::vector<std::optional<Rational>> lower_boundary;
    /// Every cell with |gamma'| < rho^3 is a member.
    bool stated_box_contained = false;
    /// Largest |boundary| - 2 rho^3 mismatch, in units of the local gamma
    /// step, over all located boundary points.
    long double sharp_boundary_max_deviation_cells = 0;

    bool at(std::size_t gamma_index, std::size_t rho_index) const {
        return member[gamma_index * rho_axis.size() + rho_index];
    }
};

/// gamma' + 3 rho^2 eps - eps^3.
UniPoly lemma1_cubic(const Rational& rho, const Rational& gamma);

/// Both axes must be strictly increasing and rho > 0.
RegionMap lemma1_region(const std::vector<Rational>& rho_axis, const std::vector<Rational>& gamma_axis,
                        int jobs = 1);

/// The k-th real root (0-based, ascending, counted with multiplicity) of a
/// polynomial, kept exactly as an isolating interval.
struct AlgebraicNumber {
    UniPoly defining;
    RealRoot root;
    std::optional<Rational> exact;

    long double approx() const;
    std::string to_string(int digits) const;
};

struct Lemma2Interval {
    bool empty = true;
    std::string reason;
    /// Open interval (lower, upper) of gamma~.
    std::optional<AlgebraicNumber> lower;
    std::optional<AlgebraicNumber> upper;
    /// Cubic whose roots are the critical values of
    /// eps^4 - alpha eps^2 - beta eps.
    UniPoly critical_value_polynomial;
};

/// The gamma~ for which eps^4 - alpha eps^2 - beta eps - gamma has four
/// distinct real roots: (second critical value, largest critical value).
Lemma2Interval lemma2_interval(const Rational& alpha, const Rational& beta);

}  // namespace epc
