#include "epc/exactpoly/determinant.hpp"

namespace epc {

BiPoly bipoly_det(const Matrix<BiPoly>& m) {
    if (!m.is_square()) throw InvalidArgument("bipoly_det: matrix is not square");
    int base = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            int b = m(i, j).scale_base();
            if (base == 0) base = b;
            if (b != base)
                throw InvalidArgument("bipoly_det: entries carry mixed scale bases (" + std::to_string(base) +
                                      ", " + std::to_string(b) + "); rebase first");
        }
    if (base == 0) base = 1;
    return bareiss_determinant(m, BiPoly(Rational(1), base));
}

UniPoly unipoly_det(const Matrix<UniPoly>& m) { return bareiss_determinant(m, UniPoly(Rational(1))); }

Rational rational_det(const Matrix<Rational>& m) { return bareiss_determinant(m, Rational(1)); }

UniPoly characteristic_polynomial(const Matrix<Rational>& a) {
    if (!a.is_square()) throw InvalidArgument("characteristic_polynomial: matrix is not square");
    Matrix<UniPoly> shifted = a.map([](const Rational& q) { return UniPoly(q); });
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= UniPoly::x();
    return unipoly_det(shifted);
}

}  // namespace epc
