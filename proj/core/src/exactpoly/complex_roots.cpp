#include "epc/error.hpp"
#include "epc/exactpoly/roots.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <sstream>

namespace epc {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                           boost::multiprecision::et_off>;
constexpr int kWorkingDigits = 100;

struct Cx {
    Real re{0};
    Real im{0};
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real modulus(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Rational to_rational(const Real& r) {
    Rational q;
    mpfr_get_q(q.backend().data(), r.backend().data());
    return q;
}

// Rounds a nonnegative error quantity up to a short rational so reports stay
// readable; never rounds down.
Rational round_up_bound(const Real& v) {
    if (v == 0) return Rational(0);
    Real scaled = v;
    long e = 0;
    // Keep 4 significant binary-decimal digits: find e with 10^3 <= v*10^e < 10^4.
    while (scaled >= 10000) {
        scaled /= 10;
        --e;
    }
    while (scaled < 1000) {
        scaled *= 10;
        ++e;
    }
    Real c = ceil(scaled);
    Rational q = to_rational(c);
    return e >= 0 ? Rational(q / pow(Rational(10), e)) : Rational(q * pow(Rational(10), -e));
}

struct Horner {
    Cx value;
    Cx derivative;
};

Horner evaluate(const std::vector<Real>& c, const Cx& z) {
    Cx p{c.back(), Real(0)};
    Cx dp{Real(0), Real(0)};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + Cx{c[k], Real(0)};
    }
    return {p, dp};
}

// Aberth-Ehrlich on a square-free polynomial with nonzero constant term.
std::vector<Cx> aberth(const UniPoly& f, const ComplexRootOptions& opt) {
    const int n = f.degree();
    std::vector<Real> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (const auto& q : f.coefficients()) c.push_back(to_real(q));

    if (n == 1) return {Cx{-c[0] / c[1], Real(0)}};

    // Initial guesses on a circle of radius (|a0/an|)^(1/n), the geometric
    // mean of the root moduli, rotated off the real axis.
    Real radius = pow(abs(c[0] / c[static_cast<std::size_t>(n)]), Real(1) / n);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    std::vector<Cx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Real theta = two_pi * k / n + Real(0.4);
        z[static_cast<std::size_t>(k)] = {radius * cos(theta), radius * sin(theta)};
    }

    const Real tol = pow(Real(10), -(std::min(opt.digits, kWorkingDigits - 10) + 5));
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int it = 0; it < opt.max_iterations; ++it) {
        bool all_done = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (done[k]) continue;
            Horner h = evaluate(c, z[k]);
            if (h.value.re == 0 && h.value.im == 0) {
                done[k] = true;
                continue;
            }
            Cx ratio = h.value / h.derivative;
            Cx sum{Real(0), Real(0)};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) sum = sum + Cx{Real(1), Real(0)} / (z[k] - z[j]);
            Cx corr = ratio / (Cx{Real(1), Real(0)} - ratio * sum);
            z[k] = z[k] - corr;
            if (modulus(corr) <= tol * modulus(z[k]))
                done[k] = true;
            else
                all_done = false;
        }
        if (all_done) {
            // One Newton polish per root.
            for (auto& zk : z) {
                Horner h = evaluate(c, zk);
                if (h.derivative.re != 0 || h.derivative.im != 0) zk = zk - h.value / h.derivative;
            }
            return z;
        }
    }
    std::ostringstream msg;
    msg << "complex_roots: Aberth iteration did not converge within " << opt.max_iterations
        << " iterations for degree-" << n << " factor " << f.to_string();
    throw ConvergenceError(msg.str());
}

// gcd of Re f(iy) and Im f(iy); its real roots y give the roots iy of f on
// the imaginary axis.
UniPoly imaginary_axis_factor(const UniPoly& f) {
    std::vector<Rational> re, im;
    const auto& c = f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Rational sgn = (k / 2) % 2 == 0 ? Rational(1) : Rational(-1);
        auto& target = k % 2 == 0 ? re : im;
        if (target.size() <= k) target.resize(k + 1);
        target[k] = sgn * c[k];
    }
    return gcd(UniPoly(std::move(re)), UniPoly(std::move(im)));
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const UniPoly& p, const ComplexRootOptions& options) {
    if (p.is_zero()) throw InvalidArgument("complex_roots: zero polynomial");
    if (options.digits < 1 || options.digits > kWorkingDigits - 10)
        throw InvalidArgument("complex_roots: digits must lie in [1, 90]");
    std::vector<ComplexRoot> out;
    if (p.degree() < 1) return out;

    std::size_t zeros = p.zero_root_multiplicity();
    if (zeros > 0) out.push_back({Rational(0), Rational(0), Rational(0), Rational(0), static_cast<int>(zeros)});

    UniPoly rest = p.without_zero_roots();
    Rational real_precision = pow(Rational(10), -(options.digits + 5));
    auto factors = rest.degree() < 1 ? std::vector<UniPoly>{} : square_free_factorization(rest);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const UniPoly& f = factors[i];
        if (f.degree() < 1) continue;
        const int mult = static_cast<int>(i + 1);
        std::vector<Real> coeffs;
        for (const auto& q : f.coefficients()) coeffs.push_back(to_real(q));
        const int n = f.degree();

        // Real roots exactly.
        RootIsolation iso = isolate_real_roots(f, real_precision);
        for (const auto& r : iso.roots) {
            Real x = to_real(r.midpoint());
            Horner h = evaluate(coeffs, Cx{x, Real(0)});
            out.push_back({r.midpoint(), Rational(0), r.error_bound(), round_up_bound(modulus(h.value)), mult});
        }
        const int pairs = (n - iso.distinct_count()) / 2;
        if (pairs == 0) continue;

        std::vector<Cx> z = aberth(f, options);
        std::sort(z.begin(), z.end(), [](const Cx& a, const Cx& b) { return abs(a.im) > abs(b.im); });
        std::vector<Cx> upper;
        for (int k = 0; k < 2 * pairs; ++k) {
            Cx w = z[static_cast<std::size_t>(k)];
            if (w.im > 0) upper.push_back(w);
        }
        if (static_cast<int>(upper.size()) != pairs) {
            std::ostringstream msg;
            msg << "complex_roots: could not pair " << 2 * pairs << " non-real roots of " << f.to_string();
            throw ConvergenceError(msg.str());
        }
        // Roots on the imaginary axis get an exact zero real part.
        std::vector<bool> on_axis(upper.size(), false);
        if (UniPoly axis = imaginary_axis_factor(f); axis.degree() >= 1) {
            for (const auto& y : isolate_real_roots(axis, real_precision).roots) {
                if (y.hi <= 0) continue;
                std::size_t best = upper.size();
                Real best_d(0);
                for (std::size_t k = 0; k < upper.size(); ++k) {
                    if (on_axis[k]) continue;
                    Real d = modulus(upper[k] - Cx{Real(0), to_real(y.midpoint())});
                    if (best == upper.size() || d < best_d) {
                        best = k;
                        best_d = d;
                    }
                }
                if (best == upper.size()) continue;
                on_axis[best] = true;
                Cx w{Real(0), to_real(y.midpoint())};
                Rational res = round_up_bound(modulus(evaluate(coeffs, w).value));
                out.push_back({Rational(0), y.midpoint(), y.error_bound(), res, mult});
                out.push_back({Rational(0), -y.midpoint(), y.error_bound(), res, mult});
            }
        }
        for (std::size_t k = 0; k < upper.size(); ++k) {
            if (on_axis[k]) continue;
            const Cx& w = upper[k];
            Horner h = evaluate(coeffs, w);
            // Floor at the working-precision rounding level of z itself.
            Real ratio = modulus(h.value) / modulus(h.derivative);
            Real floor_level = modulus(w) * pow(Real(10), -(kWorkingDigits - 5));
            Rational bound = round_up_bound(ratio * n + floor_level);
            Rational res = round_up_bound(modulus(h.value));
            Rational re = to_rational(w.re);
            Rational im = to_rational(w.im);
            out.push_back({re, im, bound, res, mult});
            out.push_back({re, -im, bound, res, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    std::vector<ComplexRoot> expanded;
    expanded.reserve(static_cast<std::size_t>(p.degree()));
    for (const auto& r : out)
        for (int k = 0; k < r.multiplicity; ++k) expanded.push_back(r);
    return expanded;
}

std::vector<ComplexRoot> complex_roots(const UniPoly& p, const Rational& precision) {
    if (precision <= 0) throw InvalidArgument("complex_roots: precision must be positive");
    long e = decimal_exponent(precision);
    int digits = static_cast<int>(std::clamp<long>(-e, 1, kWorkingDigits - 10));
    return complex_roots(p, ComplexRootOptions{digits, 2000});
}

}  // namespace epc
