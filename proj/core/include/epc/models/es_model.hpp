#pragma once

// Exactly solvable tridiagonal chain: zero diagonal, superdiagonal -1 + p_j,
// subdiagonal -1 - p_j with p_j = sqrt(1 - c_j g) and a palindromic coupling
// profile c_j. The EP limit g -> 0 leaves a lone subdiagonal of -2.

#include "epc/exactpoly/unipoly.hpp"
#include "epc/matrix.hpp"
#include "epc/models/scaled_matrix.hpp"
#include "epc/rational.hpp"

#include <vector>

namespace epc {

/// r + c * sqrt(d) with rational r, c and radicand d >= 0.
struct QuadraticSurd {
    Rational rational_part{0};
    Rational surd_coefficient{0};
    Rational radicand{0};

    long double approx() const;
    bool is_rational() const { return surd_coefficient == 0 || radicand == 0; }
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Exact product; both factors must share the radicand unless one of them
/// is rational.
QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);

struct ESParams {
    /// Even dimension.
    int n = 8;
    /// Half-profile ordered from the centre of the chain outwards: for N = 8
    /// these are (a, b, c, d), so the centre pair uses a and the edge pairs d.
    std::vector<Rational> couplings;
    Rational g{0};

    /// Coupling c_j multiplying g on bond j (1-based, j = 1..n-1).
    const Rational& bond_coupling(int j) const;
    /// Throws InvalidArgument unless n is even, couplings has n/2 positive
    /// entries and g >= 0.
    void validate() const;
    /// Largest g keeping every radicand 1 - c_j g nonnegative.
    Rational g_max() const;
};

struct ESModel {
    Matrix<QuadraticSurd> entries;
    /// True for n != 8; the chain is only documented at n = 8.
    bool extrapolated = false;

    Matrix<long double> numeric() const;
};

/// Builds the chain; throws InvalidArgument when g is outside [0, g_max]
/// (entries would be complex).
ESModel es_hamiltonian(const ESParams& p);

/// det(H - E) of the chain, valid for every g >= 0. Only the bond products
/// (-1 + p)(-1 - p) = c g enter, so this is exact even when p is complex.
UniPoly es_characteristic_polynomial(const ESParams& p);

/// Lone subdiagonal of -2 (any n >= 2).
ScaledMatrix es_ep_limit(int n);

/// P*H^T*P == H for the antidiagonal unit matrix P.
bool is_pt_symmetric(const Matrix<QuadraticSurd>& h);

}  // namespace epc
