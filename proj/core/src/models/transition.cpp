#include "epc/models/transition.hpp"

#include "epc/error.hpp"
#include "epc/models/es_model.hpp"
#include "epc/models/hamiltonians.hpp"

#include <optional>
#include <vector>

namespace epc {

namespace {

using Vec = std::vector<Rational>;

struct Echelon {
    Matrix<Rational> r;            // reduced row echelon form of [A | b]
    std::vector<std::size_t> pivot_cols;
};

Echelon reduce(Matrix<Rational> m, std::size_t var_cols) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < var_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= f * m(row, c);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

// Particular solution of A x = b with zeros in the free coordinates.
std::optional<Vec> particular_solution(const Matrix<Rational>& a, const Vec& b) {
    const std::size_t n = a.cols();
    Matrix<Rational> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    Echelon e = reduce(aug, n);
    for (std::size_t i = e.pivot_cols.size(); i < a.rows(); ++i)
        if (e.r(i, n) != 0) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.r(i, n);
    return x;
}

Vec kernel_vector(const Matrix<Rational>& a) {
    const std::size_t n = a.cols();
    Echelon e = reduce(a, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::size_t free = n;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    if (free == n) throw InvalidArgument("not a maximal EP: H - E0 is invertible");
    Vec x(n);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = -e.r(i, free);
    for (const auto& v : x)
        if (v != 0) {
            Rational inv = Rational(1) / v;
            for (auto& w : x) w *= inv;
            break;
        }
    return x;
}

}  // namespace

Matrix<Rational> jordan_residual(const Matrix<Rational>& h, const Matrix<Rational>& q, const Rational& e0) {
    Matrix<Rational> j(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        j(i, i) = e0;
        if (i + 1 < h.rows()) j(i, i + 1) = 1;
    }
    return h * q - q * j;
}

TransitionMatrix transition_matrix(const Matrix<Rational>& h, const Rational& e0) {
    if (!h.is_square() || h.rows() == 0) throw InvalidArgument("transition_matrix: H must be square and non-empty");
    const std::size_t n = h.rows();
    Matrix<Rational> a = h;
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= e0;

    Matrix<Rational> power = identity<Rational>(n);
    for (std::size_t k = 0; k + 1 < n; ++k) power = power * a;
    if (is_zero_matrix(power)) throw InvalidArgument("not a maximal EP: (H - E0)^(N-1) = 0");
    if (!is_zero_matrix(power * a)) throw InvalidArgument("not a maximal EP: (H - E0)^N != 0");

    TransitionMatrix t;
    t.q = Matrix<Rational>(n, n);
    t.normalization = "q1 = kernel vector with first nonzero component 1; q(k+1) = particular solution with zero free coordinates";
    Vec col = kernel_vector(a);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) t.q(i, k) = col[i];
        if (k + 1 == n) break;
        auto next = particular_solution(a, col);
        if (!next) throw InvalidArgument("not a maximal EP: Jordan chain breaks at length " + std::to_string(k + 1));
        col = std::move(*next);
    }
    return t;
}

bool is_antidiagonal(const Matrix<Rational>& q) {
    const std::size_t n = q.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool on = i + j == n - 1;
            if (on && q(i, j) == 0) return false;
            if (!on && q(i, j) != 0) return false;
        }
    return true;
}

EPLimitTransition ep_limit_transition(int n) {
    EPLimitTransition out;
    out.n = n;
    Matrix<Rational> h = es_ep_limit(n).at(Rational(0));
    out.computed = transition_matrix(h, Rational(0));
    out.residual_zero = is_zero_matrix(jordan_residual(h, out.computed.q, Rational(0)));
    out.antidiagonal = is_antidiagonal(out.computed.q);
    const auto un = static_cast<std::size_t>(n);
    out.growing_powers = Matrix<Rational>(un, un);
    for (std::size_t j = 1; j <= un; ++j) out.growing_powers(un - j, j - 1) = pow(Rational(-2), static_cast<long>(j - 1));
    out.growing_powers_satisfies_chain = is_zero_matrix(jordan_residual(h, out.growing_powers, Rational(0)));
    return out;
}

}  // namespace epc
