#include "epc/models/hamiltonians.hpp"

#include "epc/error.hpp"

#include <numeric>

namespace epc {

std::string to_string(PerturbationKind kind) {
    return kind == PerturbationKind::Bounded ? "bounded" : "hierarchical";
}

namespace {

void check_position(int n, int row, int col) {
    if (row < 1 || row > n || col < 1 || col > n)
        throw InvalidArgument("perturbation entry (" + std::to_string(row) + "," + std::to_string(col) +
                              ") outside a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
}

}  // namespace

void PerturbationSpec::validate() const {
    if (n < 1) throw InvalidArgument("perturbation dimension must be >= 1");
    for (const auto& [pos, v] : entries) {
        check_position(n, pos.first, pos.second);
        if (kind == PerturbationKind::Hierarchical && pos.first <= pos.second)
            throw InvalidArgument("hierarchical perturbation entry (" + std::to_string(pos.first) + "," +
                                  std::to_string(pos.second) + ") is not strictly below the diagonal");
    }
}

Rational PerturbationSpec::value(int row, int col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? Rational(0) : it->second;
}

void PerturbationSpec::set(int row, int col, const Rational& v) {
    check_position(n, row, col);
    if (v == 0)
        entries.erase({row, col});
    else
        entries[{row, col}] = v;
}

Rational PerturbationSpec::lambda_exponent(int row, int col) const {
    check_position(n, row, col);
    if (kind == PerturbationKind::Bounded) return Rational(1);
    if (row <= col) throw InvalidArgument("hierarchical exponents exist only below the diagonal");
    return Rational(row - col + 1, 2);
}

ScaledMatrix jordan_block(const JordanSpec& spec) {
    if (spec.n < 1) throw InvalidArgument("Jordan block dimension must be >= 1");
    const auto n = static_cast<std::size_t>(spec.n);
    ScaledMatrix j(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = ScaledPoly(spec.e0);
        if (i + 1 < n) j(i, i + 1) = ScaledPoly(Rational(1));
    }
    return j;
}

GradedPerturbation to_graded(const PerturbationSpec& v) {
    v.validate();
    GradedPerturbation g;
    g.n = v.n;
    for (const auto& [pos, val] : v.entries)
        if (val != 0) g.entries[pos] = {val, v.lambda_exponent(pos.first, pos.second)};
    return g;
}

ScaledMatrix build_hamiltonian(const JordanSpec& j, const PerturbationSpec& v) {
    v.validate();
    if (j.n != v.n)
        throw InvalidArgument("dimension mismatch: Jordan block " + std::to_string(j.n) + " vs perturbation " +
                              std::to_string(v.n));
    return build_graded_hamiltonian(j, to_graded(v), 2);
}

int common_scale_base(const GradedPerturbation& v, int at_least) {
    long m = at_least;
    for (const auto& [pos, t] : v.entries) {
        long d = static_cast<long>(denominator_of(t.lambda_exponent));
        m = std::lcm(m, d);
    }
    return static_cast<int>(m);
}

ScaledMatrix build_graded_hamiltonian(const JordanSpec& j, const GradedPerturbation& v, int scale_base) {
    if (j.n != v.n)
        throw InvalidArgument("dimension mismatch: Jordan block " + std::to_string(j.n) + " vs perturbation " +
                              std::to_string(v.n));
    ScaledMatrix h = jordan_block(j).rebased(scale_base);
    for (const auto& [pos, t] : v.entries) {
        check_position(v.n, pos.first, pos.second);
        if (t.lambda_exponent.sign() < 0) throw InvalidArgument("negative lambda exponent");
        Rational u_power = t.lambda_exponent * scale_base;
        if (denominator_of(u_power) != 1)
            throw InvalidArgument("lambda exponent " + to_fraction_string(t.lambda_exponent) +
                                  " is not representable with scale base " + std::to_string(scale_base));
        auto k = static_cast<std::size_t>(numerator_of(u_power).convert_to<long>());
        h(static_cast<std::size_t>(pos.first - 1), static_cast<std::size_t>(pos.second - 1)) +=
            ScaledPoly::monomial(t.value, k);
    }
    return h;
}

}  // namespace epc
