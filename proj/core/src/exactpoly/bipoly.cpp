#include "epc/exactpoly/bipoly.hpp"

#include "epc/error.hpp"

#include <algorithm>
#include <sstream>

namespace epc {

BiPoly::BiPoly(int scale_base) : scale_base_(scale_base) {
    if (scale_base < 1) throw InvalidArgument("scale base must be >= 1");
}

BiPoly::BiPoly(const Rational& constant, int scale_base) : BiPoly(scale_base) {
    if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

BiPoly BiPoly::monomial(const Rational& c, int e_power, int u_power, int scale_base) {
    if (e_power < 0 || u_power < 0) throw InvalidArgument("negative exponent in BiPoly monomial");
    BiPoly p(scale_base);
    if (c != 0) p.terms_.emplace(Exponent{e_power, u_power}, c);
    return p;
}

BiPoly BiPoly::from_u_poly(const UniPoly& p, int scale_base) {
    BiPoly out(scale_base);
    const auto& cs = p.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (cs[k] != 0) out.terms_.emplace(Exponent{0, static_cast<int>(k)}, cs[k]);
    return out;
}

Rational BiPoly::coeff(int e_power, int u_power) const {
    auto it = terms_.find({e_power, u_power});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_e() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.first;
}

int BiPoly::degree_u() const {
    int d = -1;
    for (const auto& [ex, c] : terms_) d = std::max(d, ex.second);
    return d;
}

int BiPoly::min_degree_u() const {
    if (terms_.empty()) throw InvalidArgument("min_degree_u of the zero polynomial");
    int d = terms_.begin()->first.second;
    for (const auto& [ex, c] : terms_) d = std::min(d, ex.second);
    return d;
}

UniPoly BiPoly::coefficient_of_u(int k) const {
    std::vector<Rational> cs;
    for (const auto& [ex, c] : terms_) {
        if (ex.second != k) continue;
        if (cs.size() <= static_cast<std::size_t>(ex.first)) cs.resize(static_cast<std::size_t>(ex.first) + 1);
        cs[static_cast<std::size_t>(ex.first)] = c;
    }
    return UniPoly(std::move(cs));
}

UniPoly BiPoly::coefficient_of_e(int i) const {
    std::vector<Rational> cs;
    for (const auto& [ex, c] : terms_) {
        if (ex.first != i) continue;
        if (cs.size() <= static_cast<std::size_t>(ex.second)) cs.resize(static_cast<std::size_t>(ex.second) + 1);
        cs[static_cast<std::size_t>(ex.second)] = c;
    }
    return UniPoly(std::move(cs));
}

UniPoly BiPoly::substitute_u(const Rational& s) const {
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(degree_e(), -1) + 1));
    for (const auto& [ex, c] : terms_) cs[static_cast<std::size_t>(ex.first)] += c * pow(s, ex.second);
    return UniPoly(std::move(cs));
}

BiPoly BiPoly::rebased(int new_base) const {
    if (new_base < 1 || new_base % scale_base_ != 0)
        throw InvalidArgument("rebase: new scale base " + std::to_string(new_base) +
                              " is not a multiple of " + std::to_string(scale_base_));
    int f = new_base / scale_base_;
    BiPoly out(new_base);
    for (const auto& [ex, c] : terms_) out.terms_.emplace(Exponent{ex.first, ex.second * f}, c);
    return out;
}

void BiPoly::check_base(const BiPoly& o) const {
    // The zero polynomial carries no scale information.
    if (terms_.empty() || o.terms_.empty()) return;
    if (scale_base_ != o.scale_base_)
        throw InvalidArgument("mixed scale bases " + std::to_string(scale_base_) + " and " +
                              std::to_string(o.scale_base_) + "; rebase first");
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    check_base(o);
    if (terms_.empty()) scale_base_ = o.scale_base_;
    for (const auto& [ex, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(ex, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    check_base(o);
    if (terms_.empty()) scale_base_ = o.scale_base_;
    for (const auto& [ex, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(ex, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.check_base(b);
    BiPoly out(a.terms_.empty() ? b.scale_base_ : a.scale_base_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            BiPoly::Exponent ex{ea.first + eb.first, ea.second + eb.second};
            Rational prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(ex, prod);
            if (!inserted) it->second += prod;
        }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [ex, v] : terms_) v *= c;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [ex, v] : r.terms_) v = -v;
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.scale_base_ == b.scale_base_ && a.terms_ == b.terms_;
}

std::string BiPoly::to_string(const std::string& e_var, const std::string& u_var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [ex, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = ex.first > 0 || ex.second > 0;
        if (a != 1 || !has_var) {
            os << to_fraction_string(a);
            if (has_var) os << "*";
        }
        bool need_star = false;
        if (ex.first > 0) {
            os << e_var;
            if (ex.first > 1) os << "^" << ex.first;
            need_star = true;
        }
        if (ex.second > 0) {
            if (need_star) os << "*";
            os << u_var;
            if (ex.second > 1) os << "^" << ex.second;
        }
    }
    return os.str();
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw InvalidArgument("BiPoly division by zero");
    if (a.is_zero()) return BiPoly(b.scale_base());
    if (a.scale_base() != b.scale_base()) throw InvalidArgument("exact_div: mixed scale bases; rebase first");
    // Lexicographic order with e major; map order makes rbegin() the leading term.
    const auto& [lead_ex, lead_c] = *b.terms().rbegin();
    BiPoly rem = a;
    BiPoly quot(a.scale_base());
    while (!rem.is_zero()) {
        const auto& [ex, c] = *rem.terms().rbegin();
        int de = ex.first - lead_ex.first;
        int du = ex.second - lead_ex.second;
        if (de < 0 || du < 0) throw InvalidArgument("exact_div: divisor does not divide dividend");
        BiPoly q = BiPoly::monomial(c / lead_c, de, du, a.scale_base());
        quot += q;
        rem -= q * b;
    }
    return quot;
}

bool is_zero(const BiPoly& p) { return p.is_zero(); }

}  // namespace epc
