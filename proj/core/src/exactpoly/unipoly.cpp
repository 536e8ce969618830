#include "epc/exactpoly/unipoly.hpp"

#include "epc/error.hpp"

#include <algorithm>
#include <sstream>

namespace epc {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly::UniPoly(const Rational& constant) : coeffs_{constant} { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> cs(k + 1);
    cs[k] = c;
    return UniPoly(std::move(cs));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p(Rational(1));
    for (const auto& r : roots) p *= linear_root(r);
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int UniPoly::sign_at(const Rational& x) const { return (*this)(x).sign(); }

int UniPoly::sign_at_infinity(bool positive) const {
    if (is_zero()) return 0;
    int s = leading().sign();
    if (!positive && degree() % 2 == 1) s = -s;
    return s;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    Rational inv = Rational(1) / leading();
    r *= inv;
    return r;
}

UniPoly UniPoly::sign_normalized() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    r *= Rational(1) / abs(leading());
    return r;
}

std::vector<Integer> UniPoly::primitive_integer_coefficients() const {
    if (is_zero()) return {};
    Integer l(1);
    for (const auto& c : coeffs_) l = boost::multiprecision::lcm(l, denominator_of(c));
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer g(0);
    for (const auto& c : coeffs_) {
        Rational scaled = c * Rational(l);
        out.push_back(numerator_of(scaled));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (out.back().sign() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

UniPoly UniPoly::reflected() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

UniPoly UniPoly::scaled_argument(const Rational& c) const {
    UniPoly r = *this;
    Rational f(1);
    for (auto& a : r.coeffs_) {
        a *= f;
        f *= c;
    }
    r.trim();
    return r;
}

std::size_t UniPoly::zero_root_multiplicity() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    return k;
}

UniPoly UniPoly::without_zero_roots() const {
    std::size_t k = zero_root_multiplicity();
    return UniPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = a == 1;
        if (!unit || k == 0) {
            bool paren = denominator_of(a) != 1 && k > 0;
            if (paren) os << "(";
            os << to_fraction_string(a);
            if (paren) os << ")";
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coefficients();
    Rational inv_lead = Rational(1) / b.leading();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv_lead;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidArgument("exact_div: divisor does not divide dividend");
    return q;
}

UniPoly gcd(const UniPoly& a_in, const UniPoly& b_in) {
    UniPoly a = a_in, b = b_in;
    while (!b.is_zero()) {
        UniPoly r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw InvalidArgument("square_free_part of the zero polynomial");
    if (p.degree() == 0) return UniPoly(Rational(1));
    return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> square_free_factorization(const UniPoly& p) {
    if (p.is_zero()) throw InvalidArgument("square_free_factorization of the zero polynomial");
    std::vector<UniPoly> out;
    if (p.degree() == 0) return out;
    UniPoly a = p.monic();
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = exact_div(a, c);
    UniPoly y = exact_div(b, c);
    UniPoly z = y - w.derivative();
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        out.push_back(g);
        w = exact_div(w, g);
        y = exact_div(z, g);
        z = y - w.derivative();
    }
    // Trailing trivial factors carry no information.
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

bool is_zero(const UniPoly& p) { return p.is_zero(); }

}  // namespace epc
