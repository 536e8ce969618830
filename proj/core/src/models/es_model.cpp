#include "epc/models/es_model.hpp"

#include "epc/error.hpp"

#include <cmath>

namespace epc {

long double QuadraticSurd::approx() const {
    return to_long_double(rational_part) + to_long_double(surd_coefficient) * std::sqrt(to_long_double(radicand));
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.is_rational()) return {a.rational_part * b.rational_part, a.rational_part * b.surd_coefficient, b.radicand};
    if (b.is_rational()) return {a.rational_part * b.rational_part, a.surd_coefficient * b.rational_part, a.radicand};
    if (a.radicand != b.radicand) throw InvalidArgument("product of surds with different radicands");
    return {a.rational_part * b.rational_part + a.surd_coefficient * b.surd_coefficient * a.radicand,
            a.rational_part * b.surd_coefficient + a.surd_coefficient * b.rational_part, a.radicand};
}

const Rational& ESParams::bond_coupling(int j) const {
    if (j < 1 || j >= n) throw InvalidArgument("bond index out of range");
    int k = std::abs(j - n / 2);
    return couplings.at(static_cast<std::size_t>(k));
}

void ESParams::validate() const {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("chain dimension must be even and >= 2");
    if (static_cast<int>(couplings.size()) != n / 2)
        throw InvalidArgument("chain of dimension " + std::to_string(n) + " needs " + std::to_string(n / 2) +
                              " couplings, got " + std::to_string(couplings.size()));
    for (const auto& c : couplings)
        if (c <= 0) throw InvalidArgument("chain couplings must be positive");
    if (g < 0) throw InvalidArgument("chain parameter g must be >= 0");
}

Rational ESParams::g_max() const {
    Rational biggest(0);
    for (const auto& c : couplings) biggest = std::max(biggest, c);
    return Rational(1) / biggest;
}

Matrix<long double> ESModel::numeric() const {
    return entries.map([](const QuadraticSurd& q) { return q.approx(); });
}

ESModel es_hamiltonian(const ESParams& p) {
    p.validate();
    if (p.g > p.g_max())
        throw InvalidArgument("g = " + to_fraction_string(p.g) + " exceeds " + to_fraction_string(p.g_max()) +
                              "; chain entries would be complex");
    ESModel m;
    m.extrapolated = p.n != 8;
    m.entries = Matrix<QuadraticSurd>(static_cast<std::size_t>(p.n), static_cast<std::size_t>(p.n));
    for (int j = 1; j < p.n; ++j) {
        Rational radicand = Rational(1) - p.bond_coupling(j) * p.g;
        // Keep perfect-square radicands rational.
        QuadraticSurd root;
        if (auto r = exact_root(radicand, 2))
            root = {*r, Rational(0), Rational(0)};
        else
            root = {Rational(0), Rational(1), radicand};
        const auto r0 = static_cast<std::size_t>(j - 1);
        m.entries(r0, r0 + 1) = {root.rational_part - 1, root.surd_coefficient, root.radicand};
        m.entries(r0 + 1, r0) = {-root.rational_part - 1, -root.surd_coefficient, root.radicand};
    }
    return m;
}

UniPoly es_characteristic_polynomial(const ESParams& p) {
    p.validate();
    // Continuant: D_k = -E D_{k-1} - b_{k-1} D_{k-2}, b_j = c_j g.
    UniPoly prev2(Rational(1));
    UniPoly prev1 = -UniPoly::x();
    for (int k = 2; k <= p.n; ++k) {
        Rational bond = p.bond_coupling(k - 1) * p.g;
        UniPoly next = -UniPoly::x() * prev1 - prev2 * bond;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

ScaledMatrix es_ep_limit(int n) {
    if (n < 2) throw InvalidArgument("EP limit needs n >= 2");
    ScaledMatrix h(static_cast<std::size_t>(n), 1);
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(n); ++j) h(j + 1, j) = ScaledPoly(Rational(-2));
    return h;
}

bool is_pt_symmetric(const Matrix<QuadraticSurd>& h) {
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(h(n - 1 - j, n - 1 - i) == h(i, j))) return false;
    return true;
}

}  // namespace epc
