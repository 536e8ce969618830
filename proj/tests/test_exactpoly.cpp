#include "oracles.hpp"

#include "epc/error.hpp"
#include "epc/exactpoly/bipoly.hpp"
#include "epc/exactpoly/determinant.hpp"
#include "epc/exactpoly/newton.hpp"
#include "epc/exactpoly/roots.hpp"
#include "epc/exactpoly/unipoly.hpp"
#include "epc/models/hamiltonians.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace epc;

namespace {

Rational R(const char* s) { return parse_rational(s); }

BiPoly mono(const Rational& c, int e, int u, int m = 1) { return BiPoly::monomial(c, e, u, m); }

}  // namespace

TEST(Rational, ParsesDecimalsExactly) {
    EXPECT_EQ(R("1e-4"), Rational(1, 10000));
    EXPECT_EQ(R("1.8"), Rational(9, 5));
    EXPECT_EQ(R("-3/7"), Rational(-3, 7));
    EXPECT_EQ(R("-2.5E+3"), Rational(-2500));
    EXPECT_EQ(R("12"), Rational(12));
    EXPECT_THROW(R("1.2.3"), InvalidArgument);
    EXPECT_THROW(R("abc"), InvalidArgument);
    EXPECT_THROW(R("1/0"), InvalidArgument);
    EXPECT_THROW(R(""), InvalidArgument);
}

TEST(Rational, ScientificRoundsHalfEven) {
    EXPECT_EQ(to_scientific(Rational(1, 8), 2), "1.2e-01");
    EXPECT_EQ(to_scientific(Rational(3, 8), 2), "3.8e-01");
    EXPECT_EQ(to_scientific(Rational(0), 5), "0");
    EXPECT_EQ(to_scientific(Rational(-1, 3), 3), "-3.33e-01");
    EXPECT_EQ(to_scientific(Rational(99999, 1000), 3), "1.00e+02");
    EXPECT_EQ(parse_rational(to_scientific(Rational(1, 7), 15)) - Rational(1, 7) < Rational(1, 1000000000000000LL), true);
}

TEST(Rational, ExactRootAndSimplest) {
    EXPECT_EQ(exact_root(Rational(1, 10000), 2), Rational(1, 100));
    EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
    EXPECT_EQ(exact_root(Rational(8, 27), 3), Rational(2, 3));
    EXPECT_EQ(simplest_between(Rational(3, 10), Rational(2, 5)), Rational(1, 3));
    EXPECT_EQ(decimal_exponent(Rational(1, 10000)), -4);
    EXPECT_EQ(decimal_exponent(Rational(999)), 2);
}

TEST(UniPoly, ArithmeticAndGcd) {
    UniPoly a = UniPoly::from_roots({Rational(1), Rational(2), Rational(2)});
    UniPoly b = UniPoly::from_roots({Rational(2), Rational(3)});
    EXPECT_EQ(gcd(a, b), UniPoly::from_roots({Rational(2)}));
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(exact_div(a, b), InvalidArgument);
    auto f = square_free_factorization(a);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], UniPoly::from_roots({Rational(1)}));
    EXPECT_EQ(f[1], UniPoly::from_roots({Rational(2)}));
}

TEST(UniPoly, FromRootsMatchesConvolution) {
    oracle::RationalGen gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0, n = gen.integer(1, 6); i < n; ++i) roots.push_back(gen.next());
        EXPECT_EQ(UniPoly::from_roots(roots).coefficients(), oracle::expand_roots(roots));
    }
}

TEST(BiPolyDet, TriangularExample) {
    // [[-eps t, 1], [0, -eps t]]
    Matrix<BiPoly> m(2, 2, BiPoly(1));
    m(0, 0) = mono(Rational(-1), 1, 1);
    m(0, 1) = mono(Rational(1), 0, 0);
    m(1, 1) = mono(Rational(-1), 1, 1);
    EXPECT_EQ(bipoly_det(m), mono(Rational(1), 2, 2));
}

TEST(BiPolyDet, TwoByTwoWithBeta) {
    const Rational beta(3);
    Matrix<BiPoly> m(2, 2, BiPoly(1));
    m(0, 0) = mono(Rational(-1), 1, 1);
    m(0, 1) = mono(Rational(1), 0, 0);
    m(1, 0) = mono(beta, 0, 2);
    m(1, 1) = mono(Rational(-1), 1, 1);
    EXPECT_EQ(bipoly_det(m), mono(Rational(1), 2, 2) - mono(beta, 0, 2));
}

TEST(BiPolyDet, RejectsMixedBasesAndNonSquare) {
    Matrix<BiPoly> m(2, 2, BiPoly(1));
    m(0, 0) = mono(Rational(1), 0, 1, 2);
    m(1, 1) = mono(Rational(1), 0, 1, 3);
    try {
        bipoly_det(m);
        FAIL() << "expected a mixed-base error";
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("rebase"), std::string::npos);
    }
    EXPECT_THROW(bipoly_det(Matrix<BiPoly>(2, 3, BiPoly(1))), InvalidArgument);
}

TEST(BiPolyDet, AgreesWithCofactorOnRandomMatrices) {
    oracle::RationalGen gen(11, 3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 5;
        Matrix<BiPoly> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), BiPoly(2));
        std::vector<std::vector<BiPoly>> rows(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                BiPoly p(2);
                for (int k = 0; k < 2; ++k)
                    if (gen.integer(0, 2) > 0) p += mono(gen.next(), gen.integer(0, 2), gen.integer(0, 3), 2);
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = p;
                rows[static_cast<std::size_t>(r)].push_back(p);
            }
        EXPECT_EQ(bipoly_det(m), oracle::cofactor_det(rows, BiPoly(2), BiPoly(Rational(1), 2))) << "n=" << n;
    }
}

TEST(RationalDet, AgreesWithCofactor) {
    oracle::RationalGen gen(5);
    for (int n = 1; n <= 5; ++n) {
        Matrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Rational v = gen.integer(0, 3) == 0 ? Rational(0) : gen.next();
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
                rows[static_cast<std::size_t>(r)].push_back(v);
            }
        EXPECT_EQ(rational_det(m), oracle::cofactor_det(rows, Rational(0), Rational(1)));
    }
}

TEST(Sturm, CountsMatchExamples) {
    EXPECT_EQ(sturm_count(UniPoly{Rational(-1), Rational(0), Rational(1)}), 2);
    EXPECT_EQ(sturm_count(UniPoly{Rational(1), Rational(-3), Rational(0), Rational(1)}), 3);
    EXPECT_EQ(sturm_count(UniPoly{Rational(1), Rational(1), Rational(0), Rational(1)}), 1);
    EXPECT_GT(oracle::cubic_discriminant(Rational(1), Rational(0), Rational(-3), Rational(1)), 0);
    EXPECT_EQ(oracle::cubic_discriminant(Rational(1), Rational(0), Rational(1), Rational(1)), Rational(-31));
}

TEST(Sturm, HalfOpenIntervalAndErrors) {
    UniPoly p = UniPoly::from_roots({Rational(0), Rational(1)});
    EXPECT_EQ(sturm_count(p, Rational(0), Rational(1)), 1);
    EXPECT_EQ(sturm_count(p, Rational(-1), Rational(0)), 1);
    EXPECT_THROW(sturm_count(UniPoly{}), InvalidArgument);
    EXPECT_THROW(sturm_count(p, Rational(1), Rational(1)), InvalidArgument);
}

TEST(Sturm, CubicCountAgreesWithDiscriminant) {
    oracle::RationalGen gen(3, 6, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Rational b = gen.next(), c = gen.next(), d = gen.next();
        Rational disc = oracle::cubic_discriminant(Rational(1), b, c, d);
        if (disc == 0) continue;
        EXPECT_EQ(sturm_count(UniPoly{d, c, b, Rational(1)}), disc > 0 ? 3 : 1);
    }
}

TEST(Isolation, SqrtTwo) {
    auto iso = isolate_real_roots(UniPoly{Rational(-2), Rational(0), Rational(1)}, Rational(1, 10000000000LL));
    ASSERT_EQ(iso.distinct_count(), 2);
    for (const auto& r : iso.roots) {
        EXPECT_LE(r.hi - r.lo, Rational(1, 10000000000LL));
        EXPECT_NEAR(std::fabs(to_double(r.midpoint())), 1.41421356237, 1e-10);
    }
    EXPECT_LT(iso.roots[0].hi, 0);
}

TEST(Isolation, DoubleRoot) {
    auto iso = isolate_real_roots(UniPoly::from_roots({Rational(1), Rational(1)}), Rational(1, 1000));
    ASSERT_EQ(iso.distinct_count(), 1);
    EXPECT_EQ(iso.roots[0].multiplicity, 2);
    EXPECT_EQ(iso.count_with_multiplicity(), 2);
}

TEST(Isolation, Lemma1CubicAtRhoOne) {
    // -eps^3 + 3 eps = -eps (eps^2 - 3)
    auto iso = isolate_real_roots(UniPoly{Rational(0), Rational(3), Rational(0), Rational(-1)}, Rational(1, 1000000));
    ASSERT_EQ(iso.distinct_count(), 3);
    EXPECT_TRUE(iso.roots[1].exact());
    EXPECT_EQ(iso.roots[1].lo, 0);
    for (int k : {0, 2}) {
        const auto& r = iso.roots[static_cast<std::size_t>(k)];
        Rational lo2 = r.lo * r.lo, hi2 = r.hi * r.hi;
        EXPECT_TRUE((lo2 - 3) * (hi2 - 3) <= 0);
    }
}

TEST(Isolation, EndpointsChangeSign) {
    oracle::RationalGen gen(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0, n = gen.integer(1, 5); i < n; ++i) roots.push_back(gen.next());
        UniPoly p = UniPoly::from_roots(roots) * UniPoly{Rational(1), Rational(0), Rational(1)};
        UniPoly q = square_free_part(p);
        auto iso = isolate_real_roots(p, Rational(1, 1000));
        for (const auto& r : iso.roots) {
            if (r.exact())
                EXPECT_EQ(q.sign_at(r.lo), 0);
            else
                EXPECT_LT(q.sign_at(r.lo) * q.sign_at(r.hi), 0);
        }
        EXPECT_EQ(iso.count_with_multiplicity(), static_cast<int>(roots.size()));
    }
}

TEST(Isolation, RationalRootRecovery) {
    UniPoly p = UniPoly::from_roots({Rational(-9, 4), Rational(1, 3)}) * UniPoly{Rational(-2), Rational(0), Rational(1)};
    auto iso = isolate_real_roots(p, Rational(1, 10));
    std::vector<std::optional<Rational>> found;
    for (const auto& r : iso.roots) found.push_back(rational_root_in(p, r));
    ASSERT_EQ(found.size(), 4u);
    EXPECT_EQ(found[0], Rational(-9, 4));
    EXPECT_FALSE(found[1].has_value());
    EXPECT_EQ(found[2], Rational(1, 3));
    EXPECT_FALSE(found[3].has_value());
}

TEST(ComplexRoots, ImaginaryUnit) {
    auto roots = complex_roots(UniPoly{Rational(1), Rational(0), Rational(1)}, Rational(1, 1000000000000LL));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].re, roots[1].re);
    EXPECT_EQ(roots[0].im, -roots[1].im);
    EXPECT_NEAR(to_double(roots[1].im), 1.0, 1e-12);
    EXPECT_NEAR(to_double(roots[1].re), 0.0, 1e-12);
}

TEST(ComplexRoots, CubeRootsOfGamma) {
    auto roots = complex_roots(UniPoly{Rational(-1), Rational(0), Rational(0), Rational(1)});
    ASSERT_EQ(roots.size(), 3u);
    int real = 0;
    for (const auto& r : roots) {
        std::complex<double> z(to_double(r.re), to_double(r.im));
        EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(z * z * z - 1.0), 0.0, 1e-12);
        real += r.is_real();
    }
    EXPECT_EQ(real, 1);
}

TEST(ComplexRoots, EighthRootsOfUnity) {
    UniPoly p = UniPoly::monomial(Rational(1), 8) - UniPoly(Rational(1));
    auto roots = complex_roots(p);
    ASSERT_EQ(roots.size(), 8u);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        std::complex<long double> z(to_long_double(roots[k].re), to_long_double(roots[k].im));
        EXPECT_NEAR(static_cast<double>(std::abs(z)), 1.0, 1e-15);
        long double angle = std::arg(z) / (std::acos(-1.0L) / 4);
        EXPECT_NEAR(static_cast<double>(angle), std::round(static_cast<double>(angle)), 1e-12);
    }
}

TEST(ComplexRoots, MultiplicityAndZeros) {
    UniPoly p = UniPoly::monomial(Rational(1), 2) * UniPoly::from_roots({Rational(3), Rational(3)}) *
                UniPoly{Rational(4), Rational(0), Rational(1)};
    auto roots = complex_roots(p);
    ASSERT_EQ(roots.size(), 6u);
    int zeros = 0, threes = 0;
    for (const auto& r : roots) {
        zeros += r.re == 0 && r.im == 0;
        threes += r.im == 0 && std::fabs(to_double(r.re) - 3) < 1e-30;
    }
    EXPECT_EQ(zeros, 2);
    EXPECT_EQ(threes, 2);
}

TEST(ComplexRoots, RealCountPlusPairsIsDegree) {
    oracle::RationalGen gen(23, 4, 2);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c;
        for (int i = 0, n = gen.integer(2, 7); i <= n; ++i) c.push_back(gen.next());
        c.back() = Rational(gen.integer(1, 3));
        UniPoly p = square_free_part(UniPoly(c));
        if (p.degree() < 1) continue;
        auto roots = complex_roots(p, ComplexRootOptions{30, 2000});
        int pairs = 0;
        for (const auto& r : roots) pairs += r.im > 0;
        EXPECT_EQ(sturm_count(p) + 2 * pairs, p.degree());
        for (const auto& r : roots) {
            // Residuals are tiny relative to the coefficient scale.
            EXPECT_LT(to_double(r.residual), 1e-20);
        }
    }
}

TEST(ComplexRoots, RejectsZeroPolynomial) {
    EXPECT_THROW(complex_roots(UniPoly{}), InvalidArgument);
}

TEST(DominantBalances, CornerPerturbation) {
    for (int n = 2; n <= 6; ++n) {
        // E^N - lambda * gamma with lambda = u^2
        const Rational gamma(3);
        BiPoly p = mono(Rational(1), n, 0, 2) - mono(gamma, 0, 2, 2);
        auto db = dominant_balances(p);
        ASSERT_EQ(db.balances.size(), 1u);
        EXPECT_EQ(db.balances[0].slope, Rational(1, n));
        UniPoly expected = UniPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - UniPoly(gamma);
        EXPECT_EQ(db.balances[0].leading, expected);
    }
}

TEST(DominantBalances, ExactAtBetaZero) {
    PerturbationSpec v{2, PerturbationKind::Bounded, {}};
    v.set(1, 1, Rational(2));
    v.set(2, 2, Rational(-5));
    BiPoly p = build_hamiltonian(JordanSpec{2, Rational(0)}, v).secular_determinant(0);
    auto db = dominant_balances(p);
    ASSERT_EQ(db.balances.size(), 1u);
    EXPECT_EQ(db.balances[0].slope, Rational(1));
    EXPECT_EQ(db.balances[0].leading.monic(), UniPoly::from_roots({Rational(2), Rational(-5)}));
}

TEST(DominantBalances, Theorem1GenericIsHalf) {
    oracle::RationalGen gen(29);
    for (int n = 2; n <= 5; ++n) {
        PerturbationSpec v{n, PerturbationKind::Hierarchical, {}};
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c < r; ++c) {
                Rational x = gen.next();
                v.set(r, c, x == 0 ? Rational(1) : x);
            }
        auto db = dominant_balances(build_hamiltonian(JordanSpec{n, Rational(0)}, v).secular_determinant(0));
        ASSERT_EQ(db.balances.size(), 1u) << n;
        EXPECT_EQ(db.balances[0].slope, Rational(1, 2));
        EXPECT_EQ(db.balances[0].leading.degree(), n);
    }
}

TEST(DominantBalances, DegreesAccountForEveryBranch) {
    oracle::RationalGen gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = gen.integer(2, 5);
        PerturbationSpec v{n, PerturbationKind::Bounded, {}};
        for (int k = 0; k < 3; ++k) v.set(gen.integer(1, n), gen.integer(1, n), gen.next());
        BiPoly p = build_hamiltonian(JordanSpec{n, Rational(0)}, v).secular_determinant(0);
        auto db = dominant_balances(p);
        int total = db.exact_zero_roots + db.infinite_branches;
        for (const auto& b : db.balances) total += b.leading.degree();
        EXPECT_EQ(total, n);
        for (std::size_t i = 1; i < db.balances.size(); ++i) EXPECT_LT(db.balances[i - 1].slope, db.balances[i].slope);
    }
}

TEST(DominantBalances, Errors) {
    EXPECT_THROW(dominant_balances(BiPoly(1)), InvalidArgument);
    EXPECT_THROW(dominant_balances(mono(Rational(1), 0, 3)), InvalidArgument);
}

TEST(Purity, RepeatedCallsAgree) {
    UniPoly p{Rational(1, 3), Rational(-2), Rational(0), Rational(5, 7), Rational(1)};
    auto a = complex_roots(p);
    auto b = complex_roots(p);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].re, b[i].re);
        EXPECT_EQ(a[i].im, b[i].im);
    }
    auto ia = isolate_real_roots(p, Rational(1, 1000000));
    auto ib = isolate_real_roots(p, Rational(1, 1000000));
    ASSERT_EQ(ia.roots.size(), ib.roots.size());
    for (std::size_t i = 0; i < ia.roots.size(); ++i) EXPECT_EQ(ia.roots[i].lo, ib.roots[i].lo);
}
