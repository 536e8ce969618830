#include "epc/corridor/leading.hpp"

#include "epc/error.hpp"

#include <algorithm>

namespace epc {

LeadingSecular leading_secular(const JordanSpec& j, const PerturbationSpec& v) {
    if (v.kind != PerturbationKind::Hierarchical)
        throw InvalidArgument("leading_secular needs a hierarchical perturbation; use dominant_balances on "
                              "det(H - E) for bounded specs");
    // E0 only shifts the spectrum.
    ScaledMatrix h = build_hamiltonian(JordanSpec{j.n, Rational(0)}, v);
    BiPoly det = h.secular_determinant(1);
    for (int k = 0; k < j.n; ++k)
        if (!det.coefficient_of_u(k).is_zero())
            throw Error("leading_secular: unexpected t^" + std::to_string(k) + " term " +
                        det.coefficient_of_u(k).to_string("eps"));
    LeadingSecular out;
    out.n = j.n;
    out.order = j.n;
    out.polynomial = det.coefficient_of_u(j.n);
    out.provenance = "coefficient of t^" + std::to_string(j.n) + " in det(H - E0 - eps*t*I), t = lambda^(1/2); " +
                     "t^0..t^" + std::to_string(j.n - 1) + " vanish";
    return out;
}

namespace {

// Permutations sigma with sigma(i) <= i + 1 of {0..n-1}: each row either
// stays, steps one to the right, or jumps back to close a cycle.
void expand(int n, int row, std::vector<int>& sigma, std::vector<bool>& used, SymbolicSecular& out) {
    if (row == n) {
        int eps_power = 0;
        std::vector<Position> symbols;
        for (int i = 0; i < n; ++i) {
            if (sigma[i] == i)
                ++eps_power;
            else if (sigma[i] < i)
                symbols.push_back({i + 1, sigma[i] + 1});
        }
        // Sign of the permutation times (-1)^eps_power from the -eps diagonal.
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        int transpositions = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int k = i; !seen[static_cast<std::size_t>(k)]; k = sigma[k]) {
                seen[static_cast<std::size_t>(k)] = true;
                ++len;
            }
            transpositions += len - 1;
        }
        int sign = ((transpositions + eps_power) % 2 == 0) ? 1 : -1;
        std::sort(symbols.begin(), symbols.end());
        auto& slot = out.coefficients[static_cast<std::size_t>(eps_power)][symbols];
        slot += sign;
        if (slot == 0) out.coefficients[static_cast<std::size_t>(eps_power)].erase(symbols);
        return;
    }
    for (int c = 0; c <= std::min(row + 1, n - 1); ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        used[static_cast<std::size_t>(c)] = true;
        sigma[row] = c;
        expand(n, row + 1, sigma, used, out);
        used[static_cast<std::size_t>(c)] = false;
    }
}

}  // namespace

SymbolicSecular symbolic_leading_secular(int n) {
    if (n < 1) throw InvalidArgument("symbolic_leading_secular: n must be >= 1");
    SymbolicSecular out;
    out.n = n;
    out.coefficients.resize(static_cast<std::size_t>(n) + 1);
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    expand(n, 0, sigma, used, out);
    return out;
}

UniPoly SymbolicSecular::evaluate(const std::map<Position, Rational>& values) const {
    std::vector<Rational> cs(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        for (const auto& [mono, c] : coefficients[i]) {
            Rational term(c);
            for (const auto& pos : mono) {
                auto it = values.find(pos);
                term *= it == values.end() ? Rational(0) : it->second;
            }
            cs[i] += term;
        }
    return UniPoly(std::move(cs));
}

std::string SymbolicSecular::coefficient_string(int power) const {
    if (power < 0 || power > n) throw InvalidArgument("coefficient_string: power out of range");
    const auto& terms = coefficients[static_cast<std::size_t>(power)];
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms) {
        Integer a = abs(c);
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (a != 1 || mono.empty()) out += a.str() + (mono.empty() ? "" : "*");
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (k) out += "*";
            out += "h[" + std::to_string(mono[k].first) + "," + std::to_string(mono[k].second) + "]";
        }
    }
    return out;
}

CorridorResult corridor_membership(const JordanSpec& j, const PerturbationSpec& v,
                                   const std::optional<Rational>& verify_at) {
    CorridorResult r;
    r.leading = leading_secular(j, v);
    const UniPoly& p = r.leading.polynomial;
    r.real_count = real_root_count_with_multiplicity(p);
    r.member = r.real_count == r.leading.n;
    r.witness = isolate_real_roots(p, pow(Rational(10), -30));
    r.distinct = r.witness.distinct_count() == p.degree();
    r.marginal = r.member && !r.distinct;
    if (r.member && r.witness.distinct_count() > 1) {
        long double gap = -1;
        for (std::size_t i = 1; i < r.witness.roots.size(); ++i) {
            long double d = to_long_double(r.witness.roots[i].midpoint() - r.witness.roots[i - 1].midpoint());
            if (gap < 0 || d < gap) gap = d;
        }
        r.min_root_gap = gap;
    }
    if (verify_at) {
        SpectrumOptions opts;
        opts.counts_only = true;
        SpectrumReport rep = classify_reality(build_hamiltonian(j, v), *verify_at, opts);
        r.verify_s = *verify_at;
        r.full_verdict = rep.verdict;
        r.agreement = r.member == (rep.verdict == Verdict::AllReal);
    }
    return r;
}

}  // namespace epc
