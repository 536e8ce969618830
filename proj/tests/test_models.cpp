#include "oracles.hpp"

#include "epc/error.hpp"
#include "epc/models/es_model.hpp"
#include "epc/models/hamiltonians.hpp"
#include "epc/models/transition.hpp"

#include <gtest/gtest.h>

using namespace epc;

namespace {

Matrix<Rational> power(const Matrix<Rational>& a, int k) {
    Matrix<Rational> out = identity<Rational>(a.rows());
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

int rank_of(Matrix<Rational> m) {
    int rank = 0;
    for (std::size_t c = 0; c < m.cols() && static_cast<std::size_t>(rank) < m.rows(); ++c) {
        std::size_t r0 = static_cast<std::size_t>(rank);
        std::size_t p = r0;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r0);
        for (std::size_t r = r0 + 1; r < m.rows(); ++r) {
            Rational f = m(r, c) / m(r0, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(r0, k);
        }
        ++rank;
    }
    return rank;
}

const std::vector<Rational> kFigureCouplings{Rational(2), Rational(9, 5), Rational(8, 5), Rational(7, 5)};

}  // namespace

TEST(JordanBlock, Structure) {
    ScaledMatrix j = jordan_block({3, Rational(0)});
    Matrix<Rational> m = j.at(Rational(1));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m(r, c), c == r + 1 ? Rational(1) : Rational(0));
    ScaledMatrix j2 = jordan_block({4, Rational(5, 2)});
    EXPECT_EQ(j2.at(Rational(7))(2, 2), Rational(5, 2));
}

TEST(JordanBlock, NilpotentWithRankNMinusOne) {
    for (int n = 1; n <= 8; ++n) {
        Matrix<Rational> j = jordan_block({n, Rational(0)}).at(Rational(1));
        EXPECT_TRUE(is_zero_matrix(power(j, n)));
        EXPECT_EQ(rank_of(j), n - 1);
    }
}

TEST(BuildHamiltonian, HierarchicalExponents) {
    PerturbationSpec v{4, PerturbationKind::Hierarchical, {}};
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c < r; ++c) v.set(r, c, Rational(r * 10 + c));
    ScaledMatrix h = build_hamiltonian({4, Rational(0)}, v);
    EXPECT_EQ(h.scale_base(), 2);
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c < r; ++c) {
            const UniPoly& p = h(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
            EXPECT_EQ(p, UniPoly::monomial(Rational(r * 10 + c), static_cast<std::size_t>(r - c + 1)));
            EXPECT_EQ(v.lambda_exponent(r, c), Rational(r - c + 1, 2));
        }
}

TEST(BuildHamiltonian, ZeroParametersGiveJordanBlock) {
    PerturbationSpec v{5, PerturbationKind::Hierarchical, {}};
    EXPECT_EQ(build_hamiltonian({5, Rational(0)}, v).at(Rational(3)), jordan_block({5, Rational(0)}).at(Rational(3)));
}

TEST(BuildHamiltonian, AtZeroScaleIsJordanBlock) {
    oracle::RationalGen gen(41);
    for (auto kind : {PerturbationKind::Bounded, PerturbationKind::Hierarchical}) {
        PerturbationSpec v{4, kind, {}};
        for (int r = 1; r <= 4; ++r)
            for (int c = 1; c <= 4; ++c)
                if (kind == PerturbationKind::Bounded || r > c) v.set(r, c, gen.next());
        EXPECT_EQ(build_hamiltonian({4, Rational(1, 3)}, v).at(Rational(0)), jordan_block({4, Rational(1, 3)}).at(Rational(0)));
    }
}

TEST(BuildHamiltonian, BoundedTwoByTwo) {
    const Rational a1(2), mu(3), beta(5), a2(7);
    PerturbationSpec v{2, PerturbationKind::Bounded, {}};
    v.set(1, 1, a1);
    v.set(1, 2, mu);
    v.set(2, 1, beta);
    v.set(2, 2, a2);
    const Rational s(1, 10), lambda = s * s;
    Matrix<Rational> h = build_hamiltonian({2, Rational(0)}, v).at(s);
    EXPECT_EQ(h(0, 0), lambda * a1);
    EXPECT_EQ(h(0, 1), 1 + lambda * mu);
    EXPECT_EQ(h(1, 0), lambda * beta);
    EXPECT_EQ(h(1, 1), lambda * a2);
}

TEST(BuildHamiltonian, Errors) {
    PerturbationSpec v{4, PerturbationKind::Hierarchical, {}};
    v.entries[{1, 2}] = Rational(1);
    EXPECT_THROW(build_hamiltonian({4, Rational(0)}, v), InvalidArgument);
    PerturbationSpec w{3, PerturbationKind::Bounded, {}};
    EXPECT_THROW(build_hamiltonian({4, Rational(0)}, w), InvalidArgument);
    EXPECT_THROW(w.set(4, 1, Rational(1)), InvalidArgument);
}

TEST(ESModel, EPLimitAtGZero) {
    ESParams p{8, kFigureCouplings, Rational(0)};
    ESModel m = es_hamiltonian(p);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            const QuadraticSurd& q = m.entries(r, c);
            EXPECT_TRUE(q.is_rational());
            Rational expected = r == c + 1 ? Rational(-2) : Rational(0);
            EXPECT_EQ(q.rational_part, expected);
        }
    Matrix<Rational> limit = es_ep_limit(8).at(Rational(1));
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(m.entries(r, c).rational_part, limit(r, c));
    EXPECT_FALSE(m.extrapolated);
}

TEST(ESModel, FirstRowEntryIsEdgeCoupling) {
    const Rational g(1, 4);
    ESModel m = es_hamiltonian({8, kFigureCouplings, g});
    // -1 + delta, delta = sqrt(1 - d g) with d = 7/5
    const QuadraticSurd& q = m.entries(0, 1);
    EXPECT_EQ(q.rational_part, Rational(-1));
    EXPECT_EQ(q.surd_coefficient, Rational(1));
    EXPECT_EQ(q.radicand, 1 - Rational(7, 5) * g);
    // Centre bond (4,5) uses a = 2.
    EXPECT_EQ(m.entries(3, 4).radicand, Rational(1, 2));
}

TEST(ESModel, PTSymmetricAndBondProducts) {
    for (Rational g : {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
        ESParams p{8, kFigureCouplings, g};
        ESModel m = es_hamiltonian(p);
        EXPECT_TRUE(is_pt_symmetric(m.entries));
        for (int j = 1; j < 8; ++j) {
            const auto r = static_cast<std::size_t>(j - 1);
            QuadraticSurd prod = m.entries(r, r + 1) * m.entries(r + 1, r);
            EXPECT_EQ(prod.surd_coefficient, 0);
            EXPECT_EQ(prod.rational_part, p.bond_coupling(j) * g);
        }
    }
}

TEST(ESModel, PerfectSquareRadicandsStayRational) {
    // 1 - 2 * (3/8) = 1/4
    ESModel m = es_hamiltonian({2, {Rational(2)}, Rational(3, 8)});
    EXPECT_TRUE(m.entries(0, 1).is_rational());
    EXPECT_EQ(m.entries(0, 1).rational_part, Rational(-1, 2));
    EXPECT_TRUE(m.extrapolated);
}

TEST(ESModel, RangeAndShapeErrors) {
    EXPECT_THROW(es_hamiltonian({8, kFigureCouplings, Rational(1)}), InvalidArgument);
    EXPECT_THROW(es_hamiltonian({7, kFigureCouplings, Rational(0)}), InvalidArgument);
    EXPECT_THROW(es_hamiltonian({8, {Rational(1)}, Rational(0)}), InvalidArgument);
    EXPECT_THROW(es_hamiltonian({8, kFigureCouplings, Rational(-1)}), InvalidArgument);
}

TEST(ESModel, CharacteristicPolynomialMatchesMatrix) {
    // Perfect squares: with couplings (3/4, 5/9), g = 1: radicands 1/4, 4/9.
    ESParams p{4, {Rational(3, 4), Rational(5, 9)}, Rational(1)};
    ESModel m = es_hamiltonian(p);
    Matrix<Rational> h = m.entries.map([](const QuadraticSurd& q) { return q.rational_part; });
    std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(4));
    const Rational e(3, 7);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) rows[r][c] = h(r, c) - (r == c ? e : Rational(0));
    EXPECT_EQ(es_characteristic_polynomial(p)(e), oracle::cofactor_det(rows, Rational(0), Rational(1)));
}

TEST(ESModel, EPLimitNilpotentOfIndexN) {
    for (int n = 2; n <= 8; ++n) {
        Matrix<Rational> h = es_ep_limit(n).at(Rational(1));
        EXPECT_TRUE(is_zero_matrix(power(h, n)));
        EXPECT_FALSE(is_zero_matrix(power(h, n - 1)));
    }
    Matrix<Rational> h2 = es_ep_limit(2).at(Rational(1));
    EXPECT_EQ(h2(1, 0), Rational(-2));
    EXPECT_EQ(h2(0, 1), Rational(0));
}

TEST(Transition, JordanBlockGivesIdentity) {
    for (int n = 1; n <= 6; ++n) {
        Matrix<Rational> j = jordan_block({n, Rational(2)}).at(Rational(1));
        EXPECT_EQ(transition_matrix(j, Rational(2)).q, identity<Rational>(static_cast<std::size_t>(n)));
    }
}

TEST(Transition, TwoByTwoChainSolve) {
    Matrix<Rational> h(2, 2);
    h(1, 0) = Rational(-2);
    TransitionMatrix t = transition_matrix(h, Rational(0));
    // (H) q1 = 0 -> q1 = e2; H q2 = q1 -> -2 q2[0] = 1.
    EXPECT_EQ(t.q(0, 0), Rational(0));
    EXPECT_EQ(t.q(1, 0), Rational(1));
    EXPECT_EQ(t.q(0, 1), Rational(-1, 2));
    EXPECT_EQ(t.q(1, 1), Rational(0));
    EXPECT_TRUE(is_zero_matrix(jordan_residual(h, t.q, Rational(0))));
}

TEST(Transition, EPLimitAntidiagonal) {
    for (int n = 2; n <= 8; ++n) {
        EPLimitTransition t = ep_limit_transition(n);
        EXPECT_TRUE(t.residual_zero);
        EXPECT_TRUE(t.antidiagonal);
        EXPECT_FALSE(t.growing_powers_satisfies_chain);
        for (int j = 1; j <= n; ++j)
            EXPECT_EQ(t.computed.q(static_cast<std::size_t>(n - j), static_cast<std::size_t>(j - 1)), pow(Rational(-1, 2), j - 1));
    }
}

TEST(Transition, SimilarityResidualOnRandomConjugates) {
    oracle::RationalGen gen(43);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 4;
        Matrix<Rational> p(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) = r == c ? Rational(1) : (r < c ? gen.next() : Rational(0));
        // p is unit upper triangular; its inverse by back substitution.
        Matrix<Rational> inv = identity<Rational>(n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = n; r-- > 0;) {
                Rational s = inv(r, c);
                for (std::size_t k = r + 1; k < n; ++k) s -= p(r, k) * inv(k, c);
                inv(r, c) = s;
            }
        const Rational e0(-3, 2);
        Matrix<Rational> h = p * jordan_block({4, e0}).at(Rational(1)) * inv;
        TransitionMatrix t = transition_matrix(h, e0);
        EXPECT_TRUE(is_zero_matrix(jordan_residual(h, t.q, e0)));
    }
}

TEST(Transition, RejectsNonMaximal) {
    Matrix<Rational> h(3, 3);
    h(0, 1) = Rational(1);
    try {
        transition_matrix(h, Rational(0));
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("not a maximal EP"), std::string::npos);
    }
    EXPECT_THROW(transition_matrix(identity<Rational>(2), Rational(0)), InvalidArgument);
}
