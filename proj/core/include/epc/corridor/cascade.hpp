#pragma once

#include "epc/exactpoly/newton.hpp"
#include "epc/models/hamiltonians.hpp"
#include "epc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epc {

struct Demotion {
    Position position;
    Rational from;
    Rational to;
};

struct CascadeStep {
    /// Lambda exponents in force when the balance was found.
    std::map<Position, Rational> exponents;
    /// The balance whose leading polynomial cannot have only real roots.
    Balance offending;
    std::vector<Demotion> demotions;
};

struct CascadeReport {
    std::vector<CascadeStep> steps;
    std::map<Position, Rational> final_exponents;
    /// Every nonzero entry below the diagonal ends at lambda^((k+1)/2).
    bool reached_theorem1 = false;
    /// Set when an offending balance sits at the lambda^(1/2) scale.
    std::optional<std::string> obstruction;
};

/// A leading balance is offending when its support skips two consecutive
/// powers of eps: such a polynomial never has only real roots.
bool is_offending(const UniPoly& leading);

/// Repeatedly demotes the entries of a bounded perturbation until no leading
/// balance is offending. A balance E ~ lambda^(1/q) pushes every entry on
/// subdiagonal k to at least lambda^((k+1)/q'), q' the largest integer below
/// q. Throws ConvergenceError after N steps.
CascadeReport cascade_report(const JordanSpec& j, const PerturbationSpec& v);

}  // namespace epc
