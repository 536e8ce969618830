#pragma once

#include "epc/exactpoly/unipoly.hpp"
#include "epc/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace epc {

/// Sparse polynomial in two variables (e, u) over Q.
///
/// `e` is the energy-like variable (either the raw energy E or the rescaled
/// epsilon) and `u` is the scale variable with u^m = lambda, where m is the
/// scale base. Two BiPolys may only be combined when their scale bases agree.
class BiPoly {
public:
    /// (power of e, power of u)
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    explicit BiPoly(int scale_base);
    BiPoly(const Rational& constant, int scale_base);

    /// c * e^i * u^j
    static BiPoly monomial(const Rational& c, int e_power, int u_power, int scale_base);
    /// Lifts a polynomial in u (no e dependence).
    static BiPoly from_u_poly(const UniPoly& p, int scale_base);

    int scale_base() const { return scale_base_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int e_power, int u_power) const;

    int degree_e() const;
    int degree_u() const;
    /// Smallest u-power present; throws on the zero polynomial.
    int min_degree_u() const;

    /// Coefficient of u^k as a polynomial in e.
    UniPoly coefficient_of_u(int k) const;
    /// Coefficient of e^i as a polynomial in u.
    UniPoly coefficient_of_e(int i) const;

    /// Substitutes u = s (lambda = s^m) leaving a polynomial in e.
    UniPoly substitute_u(const Rational& s) const;
    /// Multiplies every u exponent by new_base / scale_base (must divide).
    BiPoly rebased(int new_base) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    BiPoly operator-() const;

    /// Equality ignores the scale base of the zero polynomial.
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    std::string to_string(const std::string& e_var = "e", const std::string& u_var = "u") const;

private:
    void check_base(const BiPoly& o) const;
    int scale_base_ = 1;
    Terms terms_;
};

/// Exact quotient a / b in Q[e, u]; throws InvalidArgument if b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

bool is_zero(const BiPoly& p);

}  // namespace epc
