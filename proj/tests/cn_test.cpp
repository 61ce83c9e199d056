#include <gtest/gtest.h>

#include <set>

#include "qtheta/cn.hpp"
#include "qtheta/partitions.hpp"

using namespace qtheta;

TEST(Cn, SmallValues) {
    EXPECT_EQ(cn_evaluate(0, 1), 1);
    EXPECT_EQ(cn_evaluate(1, 1), 1);
    EXPECT_EQ(cn_partial(0, 1, 0), 0);
}

TEST(Cn, MatchesSeriesAndIsNonnegative) {
    for (long k = 1; k <= 5; ++k) {
        const Series s = p5_series(k, 500);
        for (long n = 0; n <= 500; ++n) {
            const mpz_class c = cn_evaluate(n, k);
            ASSERT_EQ(c, s.coefficient(n)) << "k=" << k << " n=" << n;
            ASSERT_GE(c, 0);
        }
    }
}

TEST(Cn, PartialSumReachesTheFullSum) {
    for (long k = 1; k <= 3; ++k)
        for (long n = 0; n <= 200; n += 7) EXPECT_EQ(cn_partial(n, k, 20), cn_evaluate(n, k));
}

TEST(Cn, ClosedBoundMatchesItsTerms) {
    for (long k = 1; k <= 4; ++k)
        for (long n0 = 0; n0 <= 5; ++n0)
            for (long n = 0; n <= 300; n += 13) EXPECT_EQ(cn_lower_bound(n, k, n0), cn_lower_bound_terms(n, k, n0));
}

TEST(Cn, BoundBelowPartialSumOnEveryWindow) {
    for (long k = 1; k <= 5; ++k)
        for (long n0 = 1; n0 <= 8; ++n0)
            for (int w = 1; w <= 4; ++w) {
                const CaseWindow cw = case_window(k, n0, w);
                for (long n = cw.lo; n <= cw.hi; ++n)
                    ASSERT_LT(cn_lower_bound(n, k, n0), mpq_class(cn_partial(n, k, n0)))
                        << "k=" << k << " n0=" << n0 << " n=" << n;
            }
}

TEST(Cn, BoundAndPartialSumAreEmptyAtZero) {
    for (long k = 1; k <= 3; ++k)
        for (long n = 0; n <= 50; ++n) {
            EXPECT_EQ(cn_partial(n, k, 0), 0);
            EXPECT_EQ(cn_lower_bound(n, k, 0), 0);
        }
}

TEST(Cn, WindowsTileTheInterval) {
    for (long k = 1; k <= 3; ++k)
        for (long n0 = 0; n0 <= 4; ++n0) {
            EXPECT_EQ(case_window(k, n0, 1).lo, 6 * n0 * n0 + 6 * k * n0 + n0);
            for (int w = 1; w < 4; ++w) EXPECT_EQ(case_window(k, n0, w).hi + 1, case_window(k, n0, w + 1).lo);
            EXPECT_EQ(case_window(k, n0, 4).hi, 6 * (n0 + 1) * (n0 + 1) + 6 * k * (n0 + 1) + n0);
        }
}

TEST(Cn, WindowClaims) {
    for (long k = 1; k <= 5; ++k)
        for (long n0 = 0; n0 <= 8; ++n0) {
            const WindowClaims w = case_window_claims(k, n0);
            EXPECT_TRUE(w.pass()) << "k=" << k << " n0=" << n0 << ": " << (w.failures.empty() ? "" : w.failures[0]);
            EXPECT_GT(w.points, 0);
        }
}

// Which displayed quantities agree with their recomputation.
TEST(Cn, DisplayAudit) {
    const std::set<std::string> never{"C^d(., n0+1) at the case 4 upper end", "C_3 at 6n0^2+6kn0+7n0+2"};
    const std::set<std::string> only_at_zero{"C_2 axis against the case 2 lower end", "C_3' at the case 3 upper end"};
    int seen = 0;
    for (long k = 1; k <= 5; ++k)
        for (long n0 = 0; n0 <= 8; ++n0)
            for (const auto& d : case_display_checks(k, n0)) {
                ++seen;
                bool expect = true;
                if (never.count(d.label)) expect = false;
                if (only_at_zero.count(d.label)) expect = n0 == 0;
                EXPECT_EQ(d.equal, expect) << d.label << " k=" << k << " n0=" << n0;
                EXPECT_TRUE(d.computed_sign_ok) << d.label << " k=" << k << " n0=" << n0;
                EXPECT_TRUE(d.printed_sign_ok) << d.label << " k=" << k << " n0=" << n0;
            }
    EXPECT_GT(seen, 600);
}

TEST(Recurrence, Indicator) {
    EXPECT_EQ(recurrence_indicator(0), 1);
    EXPECT_EQ(recurrence_indicator(6), -1);
    EXPECT_EQ(recurrence_indicator(5), 0);
    EXPECT_EQ(recurrence_indicator(12), -1);
    EXPECT_EQ(recurrence_indicator(30), 1);
    EXPECT_EQ(recurrence_indicator(42), 1);
    int nonzero = 0;
    for (long n = 0; n <= 1000; ++n) nonzero += recurrence_indicator(n) != 0;
    EXPECT_EQ(nonzero, 21);
}

TEST(P5, BoundsAndFloor) {
    const PartitionTable t = build_table(PartitionKind::p5(), 3000);
    for (long n = 0; n <= 3000; ++n) {
        EXPECT_EQ(p5_closed_form(n), t(n));
        auto [lo, hi] = p5_bounds(n);
        EXPECT_LT(lo, mpq_class(t(n)));
        EXPECT_LE(mpq_class(t(n)), hi);
    }
}

TEST(Poly, Arithmetic) {
    Poly p{{1, 2, 3}};
    EXPECT_EQ(p(2), 17);
    EXPECT_EQ(p.derivative()(2), 14);
    EXPECT_EQ(p.shifted(1)(3), p(2));
    EXPECT_EQ((p - p)(5), 0);
}
