#include "epc/rational.hpp"

#include "epc/error.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cctype>
#include <string>

namespace epc {

namespace {

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.backend().data(), 10, e);
    return r;
}

std::optional<Integer> exact_integer_root(const Integer& z, unsigned m) {
    if (z.sign() < 0) return std::nullopt;
    Integer r;
    int exact = mpz_root(r.backend().data(), z.backend().data(), m);
    if (!exact) return std::nullopt;
    return r;
}

[[noreturn]] void malformed(std::string_view text) {
    throw InvalidArgument("malformed number: '" + std::string(text) + "'");
}

}  // namespace

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw InvalidArgument("pow: zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Integer num = numerator_of(base);
    Integer den = denominator_of(base);
    Integer pn, pd;
    mpz_pow_ui(pn.backend().data(), num.backend().data(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(pd.backend().data(), den.backend().data(), static_cast<unsigned long>(exponent));
    return Rational(pn, pd);
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) malformed(text);

    auto all_digits = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den)) malformed(text);
        Integer n{std::string(num)};
        Integer d{std::string(den)};
        if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        Rational q(n, d);
        return negative ? Rational(-q) : q;
    }

    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
            exp_negative = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 6) malformed(text);
        exponent = std::stol(std::string(exp));
        if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) malformed(text);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) malformed(text);
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) malformed(text);
        digits = std::string(s);
    }
    Rational q{Integer(digits)};
    if (exponent > 0) q *= Rational(pow10(static_cast<unsigned long>(exponent)));
    if (exponent < 0) q /= Rational(pow10(static_cast<unsigned long>(-exponent)));
    return negative ? Rational(-q) : q;
}

std::optional<Rational> exact_root(const Rational& x, unsigned m) {
    if (m == 0) throw InvalidArgument("exact_root: m must be positive");
    if (x.sign() < 0) return std::nullopt;
    auto n = exact_integer_root(numerator_of(x), m);
    auto d = exact_integer_root(denominator_of(x), m);
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

long decimal_exponent(const Rational& x) {
    if (x == 0) throw InvalidArgument("decimal_exponent of zero");
    Rational a = abs(x);
    long e = static_cast<long>(mpz_sizeinbase(numerator_of(a).backend().data(), 10)) -
             static_cast<long>(mpz_sizeinbase(denominator_of(a).backend().data(), 10));
    // sizeinbase may overshoot by one; settle so that 10^e <= a < 10^(e+1).
    while (a < pow(Rational(10), e)) --e;
    while (a >= pow(Rational(10), e + 1)) ++e;
    return e;
}

std::string to_scientific(const Rational& x, int digits) {
    if (digits < 1) throw InvalidArgument("to_scientific: digits must be >= 1");
    if (x == 0) return "0";
    Rational a = abs(x);
    long e = decimal_exponent(a);
    Rational scaled = a * pow(Rational(10), digits - 1 - e);
    Integer q = numerator_of(scaled) / denominator_of(scaled);
    Rational rem = scaled - Rational(q);
    int cmp = (rem * 2).compare(Rational(1));
    if (cmp > 0 || (cmp == 0 && (q % 2) != 0)) q += 1;
    if (q == pow10(static_cast<unsigned long>(digits))) {
        q /= 10;
        ++e;
    }
    std::string m = q.str();
    std::string out;
    if (x.sign() < 0) out += '-';
    out += m[0];
    if (m.size() > 1) {
        out += '.';
        out += m.substr(1);
    }
    out += 'e';
    out += e < 0 ? '-' : '+';
    long ae = e < 0 ? -e : e;
    if (ae < 10) out += '0';
    out += std::to_string(ae);
    return out;
}

std::string to_fraction_string(const Rational& x) {
    Integer d = denominator_of(x);
    if (d == 1) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + d.str();
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
    if (lo_in > hi_in) return simplest_between(hi_in, lo_in);
    if (lo_in.sign() <= 0 && hi_in.sign() >= 0) return Rational(0);
    if (hi_in.sign() < 0) return -simplest_between(-hi_in, -lo_in);
    // 0 < lo <= hi: continued-fraction descent.
    Rational lo = lo_in, hi = hi_in;
    Integer fl = numerator_of(lo) / denominator_of(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational lo_frac = lo - Rational(fl);
    Rational hi_frac = hi - Rational(fl);
    Rational inner = simplest_between(Rational(1) / hi_frac, Rational(1) / lo_frac);
    return Rational(fl) + Rational(1) / inner;
}

double to_double(const Rational& x) {
    mpfr_t f;
    mpfr_init2(f, 128);
    mpfr_set_q(f, x.backend().data(), MPFR_RNDN);
    double r = mpfr_get_d(f, MPFR_RNDN);
    mpfr_clear(f);
    return r;
}

long double to_long_double(const Rational& x) {
    mpfr_t f;
    mpfr_init2(f, 128);
    mpfr_set_q(f, x.backend().data(), MPFR_RNDN);
    long double r = mpfr_get_ld(f, MPFR_RNDN);
    mpfr_clear(f);
    return r;
}

}  // namespace epc
