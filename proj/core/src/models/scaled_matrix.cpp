#include "epc/models/scaled_matrix.hpp"

#include "epc/error.hpp"
#include "epc/exactpoly/determinant.hpp"

namespace epc {

ScaledMatrix::ScaledMatrix(std::size_t n, int scale_base) : entries_(n, n), scale_base_(scale_base) {
    if (scale_base < 1) throw InvalidArgument("scale base must be >= 1");
}

ScaledMatrix::ScaledMatrix(Matrix<ScaledPoly> entries, int scale_base)
    : entries_(std::move(entries)), scale_base_(scale_base) {
    if (!entries_.is_square()) throw InvalidArgument("ScaledMatrix must be square");
    if (scale_base < 1) throw InvalidArgument("scale base must be >= 1");
}

ScaledMatrix ScaledMatrix::rebased(int new_base) const {
    if (new_base < 1 || new_base % scale_base_ != 0)
        throw InvalidArgument("rebase: " + std::to_string(new_base) + " is not a multiple of " +
                              std::to_string(scale_base_));
    const std::size_t f = static_cast<std::size_t>(new_base / scale_base_);
    Matrix<ScaledPoly> out = entries_.map([f](const ScaledPoly& p) {
        std::vector<Rational> cs;
        const auto& src = p.coefficients();
        if (!src.empty()) cs.resize((src.size() - 1) * f + 1);
        for (std::size_t k = 0; k < src.size(); ++k) cs[k * f] = src[k];
        return ScaledPoly(std::move(cs));
    });
    return ScaledMatrix(std::move(out), new_base);
}

Matrix<Rational> ScaledMatrix::at(const Rational& s) const {
    return entries_.map([&s](const ScaledPoly& p) { return p(s); });
}

Matrix<BiPoly> ScaledMatrix::minus_energy(int energy_u_power) const {
    if (energy_u_power < 0) throw InvalidArgument("energy scale exponent must be >= 0");
    const int m = scale_base_;
    Matrix<BiPoly> out = entries_.map([m](const ScaledPoly& p) { return BiPoly::from_u_poly(p, m); });
    for (std::size_t i = 0; i < size(); ++i) out(i, i) -= BiPoly::monomial(Rational(1), 1, energy_u_power, m);
    return out;
}

BiPoly ScaledMatrix::secular_determinant(int energy_u_power) const { return bipoly_det(minus_energy(energy_u_power)); }

UniPoly ScaledMatrix::characteristic_polynomial_at(const Rational& s) const {
    return characteristic_polynomial(at(s));
}

}  // namespace epc
