#pragma once

#include "epc/models/scaled_matrix.hpp"
#include "epc/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace epc {

/// J^(N)(E0): E0 on the diagonal, ones on the superdiagonal.
struct JordanSpec {
    int n = 1;
    Rational e0{0};
};

enum class PerturbationKind {
    /// lambda * V with lambda-independent entries anywhere in the matrix.
    Bounded,
    /// Strictly lower-triangular; the entry on subdiagonal k scales as
    /// lambda^((k+1)/2).
    Hierarchical,
};

std::string to_string(PerturbationKind kind);

/// 1-based (row, col) position.
using Position = std::pair<int, int>;

struct PerturbationSpec {
    int n = 1;
    PerturbationKind kind = PerturbationKind::Bounded;
    std::map<Position, Rational> entries;

    /// Throws InvalidArgument on out-of-range positions or, for the
    /// hierarchical kind, entries on or above the diagonal.
    void validate() const;

    Rational value(int row, int col) const;
    void set(int row, int col, const Rational& v);

    /// Power of lambda multiplying entry (row, col) in H.
    Rational lambda_exponent(int row, int col) const;
};

/// A perturbation whose entries carry arbitrary rational powers of lambda:
/// H = J + sum value * lambda^exponent * e_(row,col).
struct GradedPerturbation {
    struct Term {
        Rational value;
        Rational lambda_exponent;
    };
    int n = 1;
    std::map<Position, Term> entries;
};

ScaledMatrix jordan_block(const JordanSpec& spec);

/// J^(N)(E0) + lambda V. Bounded specs use scale base 2 (lambda = u^2) so
/// the result composes with hierarchical ones; hierarchical entries on
/// subdiagonal k become u^(k+1) * value.
ScaledMatrix build_hamiltonian(const JordanSpec& j, const PerturbationSpec& v);

/// Smallest scale base in which every exponent of the graded perturbation
/// becomes an integer power of u (always a multiple of `at_least`).
int common_scale_base(const GradedPerturbation& v, int at_least = 1);

/// J + graded perturbation in the given scale base; throws if an exponent
/// is not representable (denominator must divide scale_base).
ScaledMatrix build_graded_hamiltonian(const JordanSpec& j, const GradedPerturbation& v, int scale_base);

/// Graded view of a bounded or hierarchical spec.
GradedPerturbation to_graded(const PerturbationSpec& v);

}  // namespace epc
