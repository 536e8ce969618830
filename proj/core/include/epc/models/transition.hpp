#pragma once

#include "epc/matrix.hpp"
#include "epc/rational.hpp"

#include <string>

namespace epc {

/// Q with H Q = Q J^(N)(E0).
struct TransitionMatrix {
    Matrix<Rational> q;
    /// How the non-unique Q was pinned down.
    std::string normalization;
};

/// Jordan chain of a matrix with a single maximal Jordan block at E0.
///
/// Columns satisfy (H - E0) q_1 = 0 and (H - E0) q_{k+1} = q_k. q_1 is the
/// kernel vector scaled so its first nonzero component is 1; every later
/// column is the particular solution with zeros in the free coordinates.
/// Throws InvalidArgument("not a maximal EP") unless (H - E0)^N = 0 and
/// (H - E0)^(N-1) != 0.
TransitionMatrix transition_matrix(const Matrix<Rational>& h, const Rational& e0);

/// H Q - Q J^(N)(E0).
Matrix<Rational> jordan_residual(const Matrix<Rational>& h, const Matrix<Rational>& q, const Rational& e0);

/// Transition matrix of the chain's EP limit (lone subdiagonal -2), compared
/// with the antidiagonal candidate Q_{N-j+1,j} = (-2)^(j-1).
struct EPLimitTransition {
    int n = 0;
    TransitionMatrix computed;
    bool residual_zero = false;
    bool antidiagonal = false;
    /// The candidate with growing powers of -2.
    Matrix<Rational> growing_powers;
    bool growing_powers_satisfies_chain = false;
};

EPLimitTransition ep_limit_transition(int n);

bool is_antidiagonal(const Matrix<Rational>& q);

}  // namespace epc
