#pragma once

// Fraction-free (Bareiss) elimination over an integral domain.
//
// Every intermediate entry after step k is a (k+1)x(k+1) minor of the input,
// so the division by the previous pivot is exact and coefficient growth stays
// polynomial. Works for Rational, UniPoly and BiPoly entries.

#include "epc/exactpoly/bipoly.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/matrix.hpp"
#include "epc/rational.hpp"

#include <cstddef>

namespace epc {

inline bool is_zero(const Rational& q) { return q == 0; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

template <class Ring>
Ring bareiss_determinant(Matrix<Ring> m, const Ring& one) {
    if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return one;
    bool negate = false;
    Ring prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return one * Ring{};
            m.swap_rows(k, p);
            negate = !negate;
        }
        const Ring pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring t = pivot * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_div(t, prev);
            }
            m(i, k) = Ring{};
        }
        prev = pivot;
    }
    Ring d = m(n - 1, n - 1);
    return negate ? Ring(-d) : d;
}

/// Exact determinant of a matrix of BiPolys.
/// Throws InvalidArgument for non-square input or mixed scale bases.
BiPoly bipoly_det(const Matrix<BiPoly>& m);

/// Exact determinant of a matrix of univariate polynomials.
UniPoly unipoly_det(const Matrix<UniPoly>& m);

/// Exact determinant of a rational matrix.
Rational rational_det(const Matrix<Rational>& m);

/// det(A - x I) as a polynomial in x.
UniPoly characteristic_polynomial(const Matrix<Rational>& a);

}  // namespace epc
