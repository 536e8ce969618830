#include "epc/corridor/cascade.hpp"

#include "epc/error.hpp"

namespace epc {

bool is_offending(const UniPoly& leading) {
    const int d = leading.degree();
    for (int i = 1; i + 1 < d; ++i)
        if (leading.coeff(static_cast<std::size_t>(i)) == 0 && leading.coeff(static_cast<std::size_t>(i + 1)) == 0)
            return true;
    return false;
}

namespace {

GradedPerturbation graded(const PerturbationSpec& v, const std::map<Position, Rational>& exponents) {
    GradedPerturbation g;
    g.n = v.n;
    for (const auto& [pos, val] : v.entries)
        if (val != 0) g.entries[pos] = {val, exponents.at(pos)};
    return g;
}

Integer ceil_of(const Rational& q) {
    Integer num = numerator_of(q), den = denominator_of(q);
    Integer f = num / den;
    if (num % den != 0 && q.sign() > 0) f += 1;
    return f;
}

}  // namespace

CascadeReport cascade_report(const JordanSpec& j, const PerturbationSpec& v) {
    if (v.kind != PerturbationKind::Bounded) throw InvalidArgument("cascade_report needs a bounded perturbation");
    v.validate();
    if (j.n != v.n) throw InvalidArgument("dimension mismatch between Jordan block and perturbation");

    CascadeReport report;
    std::map<Position, Rational> exponents;
    for (const auto& [pos, val] : v.entries)
        if (val != 0) exponents[pos] = Rational(1);

    const JordanSpec shifted{j.n, Rational(0)};
    for (int step = 0; step <= j.n; ++step) {
        GradedPerturbation g = graded(v, exponents);
        ScaledMatrix h = build_graded_hamiltonian(shifted, g, common_scale_base(g));
        DominantBalances db = dominant_balances(h.secular_determinant(0));

        const Balance* bad = nullptr;
        for (const auto& b : db.balances)
            if (is_offending(b.leading)) {
                bad = &b;
                break;
            }
        if (!bad) {
            report.final_exponents = exponents;
            report.reached_theorem1 = true;
            for (const auto& [pos, e] : exponents)
                if (pos.first > pos.second && e != Rational(pos.first - pos.second + 1, 2))
                    report.reached_theorem1 = false;
            return report;
        }
        if (step == j.n) break;

        CascadeStep cs;
        cs.exponents = exponents;
        cs.offending = *bad;
        if (bad->slope.sign() <= 0) {
            report.steps.push_back(cs);
            report.final_exponents = exponents;
            report.obstruction = "offending balance " + bad->leading.to_string("eps") + " is lambda-independent";
            return report;
        }
        const Rational q = 1 / bad->slope;
        const Integer q_below = ceil_of(q) - 1;
        if (q_below < 2) {
            report.steps.push_back(cs);
            report.final_exponents = exponents;
            report.obstruction = "offending balance " + bad->leading.to_string("eps") +
                                 " at E ~ lambda^" + to_fraction_string(bad->slope) +
                                 "; no demotion below the lambda^(1/2) scale";
            return report;
        }
        for (auto& [pos, e] : exponents) {
            if (pos.first <= pos.second) continue;
            Rational floor_exp(Integer(pos.first - pos.second + 1), q_below);
            if (e < floor_exp) {
                cs.demotions.push_back({pos, e, floor_exp});
                e = floor_exp;
            }
        }
        if (cs.demotions.empty()) {
            report.steps.push_back(cs);
            report.final_exponents = exponents;
            report.obstruction = "offending balance " + bad->leading.to_string("eps") +
                                 " is not removed by demoting entries below the diagonal";
            return report;
        }
        report.steps.push_back(std::move(cs));
    }
    throw ConvergenceError("cascade_report: no termination within " + std::to_string(j.n) + " steps");
}

}  // namespace epc
