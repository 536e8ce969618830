#include "epc/exactpoly/roots.hpp"

#include "epc/error.hpp"

#include <algorithm>
#include <utility>

namespace epc {

SturmSequence::SturmSequence(const UniPoly& p) {
    if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
    UniPoly p0 = square_free_part(p).sign_normalized();
    chain_.push_back(p0);
    if (p0.degree() <= 0) return;
    chain_.push_back(p0.derivative().sign_normalized());
    while (true) {
        UniPoly r = chain_[chain_.size() - 2] % chain_.back();
        if (r.is_zero()) break;
        chain_.push_back((-r).sign_normalized());
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.sign_at(x));
    return count_variations(signs);
}

int SturmSequence::variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.sign_at_infinity(positive));
    return count_variations(signs);
}

int SturmSequence::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    if (lo && hi && *lo >= *hi) throw InvalidArgument("sturm_count: empty interval (a >= b)");
    int va = lo ? variations_at(*lo) : variations_at_infinity(false);
    int vb = hi ? variations_at(*hi) : variations_at_infinity(true);
    return va - vb;
}

int sturm_count(const UniPoly& p, const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (p.is_zero()) throw InvalidArgument("sturm_count: zero polynomial");
    return SturmSequence(p).count(a, b);
}

int real_root_count_with_multiplicity(const UniPoly& p) {
    if (p.is_zero()) throw InvalidArgument("real root count of the zero polynomial");
    auto factors = square_free_factorization(p);
    int total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        total += static_cast<int>(i + 1) * SturmSequence(factors[i]).count(std::nullopt, std::nullopt);
    }
    return total;
}

int RootIsolation::count_with_multiplicity() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

Rational root_modulus_bound(const UniPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational lead = abs(p.leading());
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lead));
    return m + 1;
}

namespace {

// Shrinks (lo, hi] holding exactly one root of q to a closed interval whose
// endpoints are not roots of q, or to a point if the root is hit exactly.
RealRoot settle_interval(const SturmSequence& sturm, Rational lo, Rational hi) {
    const UniPoly& q = sturm.square_free();
    if (q.sign_at(hi) == 0) return {hi, hi, 1};
    while (q.sign_at(lo) == 0) {
        Rational mid = (lo + hi) / 2;
        if (q.sign_at(mid) == 0) return {mid, mid, 1};
        if (sturm.count(lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi, 1};
}

void refine(const UniPoly& q, RealRoot& r, const Rational& precision) {
    if (r.exact()) return;
    int s_lo = q.sign_at(r.lo);
    while (r.hi - r.lo > precision) {
        Rational mid = (r.lo + r.hi) / 2;
        int s = q.sign_at(mid);
        if (s == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (s == s_lo)
            r.lo = mid;
        else
            r.hi = mid;
    }
}

}  // namespace

RootIsolation isolate_real_roots(const UniPoly& p, const Rational& precision) {
    if (p.is_zero()) throw InvalidArgument("isolate_real_roots: zero polynomial");
    if (precision <= 0) throw InvalidArgument("isolate_real_roots: precision must be positive");
    RootIsolation out;
    if (p.degree() < 1) return out;

    SturmSequence sturm(p);
    const UniPoly& q = sturm.square_free();
    Rational bound = root_modulus_bound(q) + 1;

    // Depth-first bisection keeps intervals in ascending order.
    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack;
    int total = sturm.count(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 1) {
            out.roots.push_back(settle_interval(sturm, cur.lo, cur.hi));
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        int left = sturm.count(cur.lo, mid);
        int right = cur.count - left;
        if (right > 0) stack.push_back({mid, cur.hi, right});
        if (left > 0) stack.push_back({cur.lo, mid, left});
    }

    for (auto& r : out.roots) refine(q, r, precision);

    // Multiplicities: root r has multiplicity i iff it is a root of the i-th
    // Yun factor.
    auto factors = square_free_factorization(p);
    for (auto& r : out.roots) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const UniPoly& f = factors[i];
            if (f.degree() < 1) continue;
            bool vanishes = r.exact() ? f.sign_at(r.lo) == 0 : f.sign_at(r.lo) * f.sign_at(r.hi) < 0;
            if (vanishes) {
                r.multiplicity = static_cast<int>(i + 1);
                break;
            }
        }
    }
    return out;
}

std::optional<Rational> rational_root_in(const UniPoly& p, const RealRoot& root) {
    if (root.exact()) {
        if (p.sign_at(root.lo) == 0) return root.lo;
        return std::nullopt;
    }
    UniPoly q = square_free_part(p);
    std::vector<Integer> ints = q.primitive_integer_coefficients();
    Integer lead = abs(ints.back());
    Rational target = Rational(1) / Rational(lead * lead);
    RealRoot r = root;
    refine(q, r, target / 2);
    Rational candidate = simplest_between(r.lo, r.hi);
    if (q.sign_at(candidate) == 0) return candidate;
    return std::nullopt;
}

}  // namespace epc
