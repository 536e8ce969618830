#pragma once

#include "epc/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace epc {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
///
/// The representation is canonical: trailing zero coefficients are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);
    explicit UniPoly(const Rational& constant);

    /// c * x^k
    static UniPoly monomial(const Rational& c, std::size_t k);
    /// x
    static UniPoly x() { return monomial(Rational(1), 1); }
    /// (x - r)
    static UniPoly linear_root(const Rational& r) { return UniPoly{-r, Rational(1)}; }
    /// prod (x - r_i)
    static UniPoly from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    /// Sign of p(x).
    int sign_at(const Rational& x) const;
    /// Sign of p(x) as x -> +inf (positive=true) or -inf.
    int sign_at_infinity(bool positive) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Divides by |leading|, which keeps sign information intact.
    UniPoly sign_normalized() const;
    /// Integer coefficients with content 1 and positive leading coefficient;
    /// same roots.
    std::vector<Integer> primitive_integer_coefficients() const;
    /// p(-x)
    UniPoly reflected() const;
    /// p(c x)
    UniPoly scaled_argument(const Rational& c) const;
    /// Number of trailing zero coefficients (multiplicity of the root x = 0).
    std::size_t zero_root_multiplicity() const;
    /// p / x^k for k = zero_root_multiplicity()
    UniPoly without_zero_roots() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws InvalidArgument when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

/// Yun factorization: p = c * prod_i f_i^i with f_i square-free, pairwise
/// coprime and monic. Entry i-1 of the result is f_i (possibly 1).
std::vector<UniPoly> square_free_factorization(const UniPoly& p);

bool is_zero(const UniPoly& p);

}  // namespace epc
