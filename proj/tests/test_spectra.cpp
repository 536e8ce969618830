#include "oracles.hpp"

#include "epc/corridor/design.hpp"
#include "epc/error.hpp"
#include "epc/exactpoly/determinant.hpp"
#include "epc/models/es_model.hpp"
#include "epc/models/hamiltonians.hpp"
#include "epc/models/transition.hpp"
#include "epc/spectra/pseudospectrum.hpp"
#include "epc/spectra/scaling.hpp"
#include "epc/spectra/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace epc;

namespace {

ScaledMatrix bounded(int n, std::map<Position, Rational> entries) {
    return build_hamiltonian({n, Rational(0)}, PerturbationSpec{n, PerturbationKind::Bounded, std::move(entries)});
}

std::vector<Rational> lambdas(std::initializer_list<int> exponents) {
    std::vector<Rational> out;
    for (int k : exponents) out.push_back(pow(Rational(10), -k));
    return out;
}

const std::vector<Rational> kFigureCouplings{Rational(2), Rational(9, 5), Rational(8, 5), Rational(7, 5)};

}  // namespace

TEST(ClassifyReality, TwoByTwoPositiveBeta) {
    SpectrumReport r = classify_reality(bounded(2, {{{2, 1}, Rational(1)}}), Rational(1, 100));
    EXPECT_EQ(r.lambda, Rational(1, 10000));
    EXPECT_EQ(r.verdict, Verdict::AllReal);
    EXPECT_EQ(r.real_count, 2);
    ASSERT_EQ(r.eigenvalues.size(), 2u);
    EXPECT_NEAR(to_double(r.eigenvalues[0].re), -0.01, 1e-15);
    EXPECT_NEAR(to_double(r.eigenvalues[1].re), 0.01, 1e-15);
}

TEST(ClassifyReality, TwoByTwoNegativeBeta) {
    SpectrumReport r = classify_reality(bounded(2, {{{2, 1}, Rational(-1)}}), Rational(1, 100));
    EXPECT_EQ(r.verdict, Verdict::Broken);
    EXPECT_EQ(r.complex_pairs, 1);
    for (const auto& e : r.eigenvalues) {
        EXPECT_EQ(e.re, 0);
        EXPECT_NEAR(std::fabs(to_double(e.im)), 0.01, 1e-15);
    }
}

TEST(ClassifyReality, ThreeByThreeCorner) {
    SpectrumReport r = classify_reality(bounded(3, {{{3, 1}, Rational(1)}}), Rational(1, 1000));
    EXPECT_EQ(r.verdict, Verdict::Broken);
    EXPECT_EQ(r.real_count, 1);
    EXPECT_EQ(r.complex_pairs, 1);
}

TEST(ClassifyReality, CountsAddUpForRandomMatrices) {
    oracle::RationalGen gen(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = gen.integer(2, 6);
        std::map<Position, Rational> e;
        for (int k = 0; k < n; ++k) e[{gen.integer(1, n), gen.integer(1, n)}] = gen.next();
        SpectrumReport r = classify_reality(bounded(n, e), Rational(1, gen.integer(2, 50)));
        EXPECT_EQ(r.real_count + 2 * r.complex_pairs, n);
        EXPECT_EQ(r.verdict == Verdict::AllReal, r.complex_pairs == 0);
        EXPECT_EQ(r.eigenvalues.size(), static_cast<std::size_t>(n));
        for (const auto& ev : r.eigenvalues) EXPECT_LT(to_double(ev.residual), 1e-25);
    }
}

TEST(ClassifyReality, InvariantUnderTransitionSimilarity) {
    // Q from the EP-limit chain conjugates H into Jordan form; a perturbed
    // H and Q^-1 H Q share the characteristic polynomial.
    EPLimitTransition t = ep_limit_transition(4);
    Matrix<Rational> q = t.computed.q;
    Matrix<Rational> qinv(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (q(r, c) != 0) qinv(c, r) = 1 / q(r, c);
    ScaledMatrix h = bounded(4, {{{4, 1}, Rational(2)}, {{3, 2}, Rational(-1)}});
    Matrix<Rational> hs = h.at(Rational(1, 10));
    Matrix<Rational> conj = qinv * hs * q;
    SpectrumReport a = classify_polynomial(characteristic_polynomial(hs));
    SpectrumReport b = classify_polynomial(characteristic_polynomial(conj));
    EXPECT_EQ(a.char_poly, b.char_poly);
    EXPECT_EQ(a.verdict, b.verdict);
}

TEST(ClassifyReality, RejectsBadScaleAndHugeDimension) {
    EXPECT_THROW(classify_reality(bounded(2, {}), Rational(0)), InvalidArgument);
    EXPECT_THROW(classify_reality(jordan_block({17, Rational(0)}), Rational(1)), InvalidArgument);
}

TEST(Eigenvalues, JordanEightIsZero) {
    auto ev = eigenvalues_numeric(jordan_block({8, Rational(0)}), Rational(1, 10));
    ASSERT_EQ(ev.size(), 8u);
    for (const auto& e : ev) {
        EXPECT_EQ(e.re, 0);
        EXPECT_EQ(e.im, 0);
    }
}

TEST(Eigenvalues, CornerEightHasEqualModuli) {
    ScaledMatrix h = bounded(8, {{{8, 1}, Rational(1)}});
    const Rational s(1, 10000);
    UniPoly p = h.characteristic_polynomial_at(s);
    // Cofactor oracle: E^8 - lambda.
    EXPECT_EQ(p, UniPoly::monomial(Rational(1), 8) - UniPoly(s * s));
    for (const auto& e : eigenvalues_numeric(h, s)) {
        long double m = std::hypot(to_long_double(e.re), to_long_double(e.im));
        EXPECT_NEAR(static_cast<double>(m), 0.1, 1e-15);
    }
}

TEST(Eigenvalues, ESChainSpectrumIsSymmetric) {
    UniPoly p = es_characteristic_polynomial({8, kFigureCouplings, Rational(1)});
    // A zero-diagonal tridiagonal matrix is similar to its negative.
    EXPECT_EQ(p.reflected(), p);
    auto ev = complex_roots(p);
    ASSERT_EQ(ev.size(), 8u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(to_double(ev[i].re), -to_double(ev[7 - i].re), 1e-30);
}

TEST(ScaleFromLambda, ExactAndRounded) {
    ScaleChoice a = scale_from_lambda(Rational(1, 10000), 2);
    EXPECT_TRUE(a.exact);
    EXPECT_EQ(a.s, Rational(1, 100));
    ScaleChoice b = scale_from_lambda(Rational(1, 1000), 2, 10);
    EXPECT_FALSE(b.exact);
    EXPECT_EQ(b.lambda, b.s * b.s);
    EXPECT_NEAR(to_double(b.s), std::sqrt(1e-3), 1e-11);
}

TEST(ScalingFit, HierarchicalFourIsHalf) {
    PerturbationSpec v = design_perturbation({Rational(-2), Rational(-1), Rational(1), Rational(2)});
    ScaledMatrix h = build_hamiltonian({4, Rational(0)}, v);
    auto samples = lambdas({4, 5, 6, 7, 8});
    ScalingFit fit = scaling_fit(scaled_matrix_source(h), samples);
    EXPECT_NEAR(static_cast<double>(fit.pooled_slope), 0.5, 0.01);
    for (auto s : fit.branch_slopes) EXPECT_NEAR(static_cast<double>(s), 0.5, 0.01);
}

TEST(ScalingFit, BoundedCornerThreeIsThird) {
    ScaledMatrix h = bounded(3, {{{3, 1}, Rational(1)}});
    ScalingFit fit = scaling_fit(scaled_matrix_source(h), lambdas({4, 6, 8}));
    EXPECT_NEAR(static_cast<double>(fit.pooled_slope), 1.0 / 3.0, 0.01);
}

TEST(ScalingFit, ESChainIsHalfInG) {
    std::vector<Rational> gs{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 16)};
    ScalingFit fit = scaling_fit(es_source({8, kFigureCouplings, Rational(0)}), gs);
    EXPECT_NEAR(static_cast<double>(fit.pooled_slope), 0.5, 1e-12);
    EXPECT_LT(static_cast<double>(fit.residual), 1e-12);
}

TEST(ScalingFit, ZeroBranchIsExcluded) {
    // diag(0, lambda-ish): H = [[0, 0], [beta lambda, 0]] has two zero roots;
    // add a separate 1x1 style branch through a 3x3 block.
    ScaledMatrix h = bounded(3, {{{2, 1}, Rational(1)}});
    h(1, 2) = UniPoly{};
    ScalingFit fit = scaling_fit(scaled_matrix_source(h), lambdas({2, 3, 4}));
    int excluded = 0;
    for (bool b : fit.branch_excluded) excluded += b;
    EXPECT_EQ(excluded, 1);
    EXPECT_NEAR(static_cast<double>(fit.pooled_slope), 0.5, 1e-12);
}

TEST(ScalingFit, ParallelMatchesSequential) {
    ScaledMatrix h = bounded(3, {{{3, 1}, Rational(1)}, {{2, 1}, Rational(2)}});
    auto samples = lambdas({2, 3, 4, 5, 6});
    ScalingFit a = scaling_fit(scaled_matrix_source(h), samples, 1);
    ScalingFit b = scaling_fit(scaled_matrix_source(h), samples, 4);
    EXPECT_EQ(a.moduli, b.moduli);
    EXPECT_EQ(a.pooled_slope, b.pooled_slope);
}

TEST(ScalingFit, Preconditions) {
    ScaledMatrix h = bounded(2, {{{2, 1}, Rational(1)}});
    EXPECT_THROW(scaling_fit(scaled_matrix_source(h), lambdas({2, 4})), InvalidArgument);
    EXPECT_THROW(scaling_fit(scaled_matrix_source(h), lambdas({4, 2, 6})), InvalidArgument);
    EXPECT_THROW(scaling_fit(scaled_matrix_source(h), std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(0)}),
                 InvalidArgument);
}

TEST(Pseudospectrum, EigenvalueIsNearZero) {
    Matrix<Rational> h(2, 2);
    h(0, 0) = Rational(1);
    h(1, 1) = Rational(-1);
    h(0, 1) = Rational(3);
    EXPECT_LE(static_cast<double>(sigma_min(to_numeric(h), {1.0L, 0.0L})), 1e-12);
}

TEST(Pseudospectrum, JordanTwoAtI) {
    Matrix<Rational> j = jordan_block({2, Rational(0)}).at(Rational(1));
    const std::complex<long double> z(0, 1);
    long double expected = oracle::sigma_min_2x2(z, -1.0L, 0.0L, z);
    EXPECT_NEAR(static_cast<double>(sigma_min(to_numeric(j), z)), static_cast<double>(expected), 1e-15);
    EXPECT_NEAR(static_cast<double>(expected), std::sqrt((3 - std::sqrt(5.0)) / 2), 1e-15);
}

TEST(Pseudospectrum, FarFieldBound) {
    Matrix<Rational> h = es_ep_limit(8).at(Rational(1));
    PseudoGrid g = pseudospectrum(to_numeric(h), {-20, 20, -20, 20}, 9, 9, 2);
    ASSERT_EQ(g.sigma_min.size(), 81u);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            long double mod = std::abs(std::complex<long double>(g.re_axis[j], g.im_axis[i]));
            EXPECT_GE(g.at(i, j), 0);
            if (mod >= 10) {
                EXPECT_GE(g.at(i, j), mod - 3);
            }
        }
}

TEST(Pseudospectrum, ParallelMatchesSequentialAndValidates) {
    Matrix<long double> h = to_numeric(jordan_block({3, Rational(0)}).at(Rational(1)));
    ComplexRegion region{-1, 1, -1, 1};
    EXPECT_EQ(pseudospectrum(h, region, 5, 4, 1).sigma_min, pseudospectrum(h, region, 5, 4, 3).sigma_min);
    EXPECT_THROW(pseudospectrum(h, region, 1, 4), InvalidArgument);
    EXPECT_THROW(pseudospectrum(h, {1, 1, -1, 1}, 4, 4), InvalidArgument);
}
