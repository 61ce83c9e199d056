#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qtheta/errors.hpp"
#include "qtheta/series.hpp"

using namespace qtheta;

namespace {

Series poly(std::initializer_list<long> c, Exponent order, int grain = 1, long lo = 0) {
    std::vector<Term> t;
    long u = lo;
    for (long x : c) t.push_back({half(grain == 1 ? 2 * u : u), x}), ++u;
    return make_series(t, grain, order);
}

void expect_coeffs(const Series& s, std::initializer_list<long> c, long lo = 0) {
    long u = lo;
    for (long x : c) {
        EXPECT_EQ(s.at_units(u), x) << "at unit " << u << " in " << s.str();
        ++u;
    }
}

Series partitions(long n) {
    Series s = pochhammer(Pochhammer::infinite(1, 1), n);
    return invert(s);
}

Series random_series(std::mt19937& rng, int grain) {
    std::uniform_int_distribution<int> coef(-5, 5), lo(-3, 2), len(0, 12), ord(4, 16);
    const int l = lo(rng), n = len(rng);
    std::vector<Term> t;
    for (int i = 0; i < n; ++i) t.push_back({half(grain == 1 ? 2 * (l + i) : l + i), coef(rng)});
    return make_series(t, grain, Exponent(ord(rng)));
}

}  // namespace

TEST(MakeSeries, Examples) {
    Series a = make_series(std::vector<Term>{{0, 1}, {1, -1}}, 1, 5);
    expect_coeffs(a, {1, -1, 0, 0, 0, 0});
    EXPECT_EQ(a.order(), Exponent(5));

    Series b = make_series(std::vector<Term>{{half(1), 1}}, 2, 3);
    EXPECT_EQ(b.coefficient(half(1)), 1);
    EXPECT_EQ(b.coefficient(0), 0);
    EXPECT_EQ(b.order(), Exponent(3));

    Series c = make_series(std::vector<Term>{{-2, 3}, {-2, -3}}, 1, 4);
    EXPECT_TRUE(c.is_zero());
    EXPECT_EQ(c.min_exp(), Exponent(-2));
}

TEST(MakeSeries, RejectsHalfExponentInGrainOne) {
    EXPECT_THROW(make_series(std::vector<Term>{{half(1), 1}}, 1, 3), NotRepresentable);
}

TEST(Ring, Examples) {
    Series p = poly({1, -1}, 3) * poly({1, 1, 1, 1}, 3);
    expect_coeffs(p, {1, 0, 0, 0});
    EXPECT_EQ(p.order(), Exponent(3));

    Series m = Series::monomial(-1, 1, 5) * Series::monomial(1, 1, 5);
    EXPECT_EQ(m.coefficient(0), 1);
    EXPECT_EQ(m.order(), Exponent(4));

    Series e = partitions(10) * pochhammer(Pochhammer::infinite(1, 1), 10);
    EXPECT_EQ(e, Series::one(10));
}

TEST(Ring, MulOrderFollowsValuations) {
    Series a = Series::monomial(3, 1, 10);
    Series b = poly({1, 2, 3}, 6);
    Series ab = a * b;
    EXPECT_EQ(ab.order(), Exponent(9));
    EXPECT_EQ(ab.coefficient(5), 3);
}

TEST(Ring, LawsOnRandomSeries) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const int g = trial % 3 == 0 ? 2 : 1;
        Series a = random_series(rng, g), b = random_series(rng, g), c = random_series(rng, 1);
        auto agree = [](const Series& x, const Series& y) {
            const Exponent upto = std::min(x.order(), y.order());
            return !first_difference(x, y, upto).has_value();
        };
        ASSERT_TRUE(agree(a + b, b + a));
        ASSERT_TRUE(agree(a * b, b * a));
        ASSERT_TRUE(agree((a + b) + c, a + (b + c)));
        ASSERT_TRUE(agree((a * b) * c, a * (b * c)));
        ASSERT_TRUE(agree(a * (b + c), a * b + a * c));
    }
}

TEST(Invert, Examples) {
    expect_coeffs(invert(poly({1, -1}, 4)), {1, 1, 1, 1, 1});

    Series r = invert(poly({0, 1, -1}, 3));
    EXPECT_EQ(r.min_exp(), Exponent(-1));
    // a is known through q^3, so 1/a is certified through q^1 only
    EXPECT_EQ(r.order(), Exponent(1));
    expect_coeffs(r, {1, 1, 1}, -1);
    Series wider = invert(poly({0, 1, -1}, 5));
    expect_coeffs(wider, {1, 1, 1, 1}, -1);

    Series p = invert(pochhammer(Pochhammer::infinite(1, 1), 20));
    EXPECT_EQ(p.coefficient(5), 7);
    EXPECT_EQ(partitions(50).coefficient(10), 42);
}

TEST(Invert, TwoSided) {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-4, 4), v(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const int val = v(rng);
        std::vector<Term> t{{val, trial % 2 ? 1 : -1}};
        for (int i = 1; i < 10; ++i) t.push_back({val + i, coef(rng)});
        Series a = make_series(t, 1, 14);
        Series r = invert(a);
        Series one_l = a * r, one_r = r * a;
        ASSERT_EQ(one_l.order(), Exponent(14 - val));
        ASSERT_FALSE(first_difference(one_l, Series::one(one_l.order()), one_l.order()));
        ASSERT_FALSE(first_difference(one_r, Series::one(one_r.order()), one_r.order()));
    }
}

TEST(Invert, Errors) {
    EXPECT_THROW(invert(poly({2, 1}, 4)), NonUnit);
    EXPECT_THROW(invert(Series::zero(4)), NonUnit);
}

TEST(Pochhammer, Examples) {
    expect_coeffs(pochhammer(Pochhammer::finite(1, 1, 2), 5), {1, -1, -1, 1, 0, 0});
    expect_coeffs(pochhammer(Pochhammer::infinite(-1, 1, 2), 6), {1, 1, 0, 1, 1, 1, 1});
    Series h = pochhammer(Pochhammer::finite(1, half(1), 1), 2, 2);
    expect_coeffs(h, {1, -1, 0, 0, 0});
}

TEST(Pochhammer, InfiniteNeedsPositiveBase) {
    EXPECT_THROW(pochhammer(Pochhammer::infinite(1, 0), 5), InvalidParameter);
}

TEST(Pochhammer, MatchesFactorProduct) {
    for (int n = 0; n <= 12; ++n)
        for (int e = -3; e <= 5; ++e)
            for (int t = 1; t <= 3; ++t)
                for (int sign : {1, -1}) {
                    if (sign == 1 && e <= 0 && e + t * (n - 1) >= 0 && (-e) % t == 0 && n > 0) continue;
                    Series direct = Series::one(30);
                    for (int j = 0; j < n; ++j) {
                        std::vector<Term> f{{0, 1}, {e + j * t, -sign}};
                        direct *= make_series(f, 1, 30);
                    }
                    Series p = pochhammer(Pochhammer::finite(sign, e, n, t), 30);
                    const Exponent upto = std::min(p.order(), direct.order());
                    ASSERT_FALSE(first_difference(p, direct, upto)) << n << " " << e << " " << t << " " << sign;
                }
}

TEST(Pochhammer, ZeroFactor) {
    EXPECT_TRUE(pochhammer(Pochhammer::finite(1, -2, 4), 10).is_zero());
}

TEST(GaussBinomial, Examples) {
    expect_coeffs(gauss_binomial(2, 1, 1, 5), {1, 1, 0, 0, 0, 0});
    expect_coeffs(gauss_binomial(4, 2, 1, 6), {1, 1, 2, 1, 1, 0, 0});
    EXPECT_TRUE(gauss_binomial(3, 5, 1, 6).is_zero());
    EXPECT_TRUE(gauss_binomial(3, -1, 1, 6).is_zero());
}

TEST(GaussBinomial, QPascal) {
    const Exponent N = 80;
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            Series lhs = gauss_binomial(n, k, 1, N);
            Series rhs = gauss_binomial(n - 1, k, 1, N) + shifted(gauss_binomial(n - 1, k - 1, 1, N), n - k);
            ASSERT_FALSE(first_difference(lhs, rhs, N)) << n << " " << k;
            Series rhs2 = shifted(gauss_binomial(n - 1, k, 1, N), k) + gauss_binomial(n - 1, k - 1, 1, N);
            ASSERT_FALSE(first_difference(lhs, rhs2, N)) << n << " " << k;
        }
}

TEST(GaussBinomial, Dilated) {
    EXPECT_EQ(gauss_binomial(4, 2, 3, 20), gauss_binomial(4, 2, 1, 20).dilated(3).promoted(1).demoted().truncate(20));
}

TEST(Grain, RoundTrip) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Series a = random_series(rng, 1);
        Series b = a.promoted(2).demoted();
        ASSERT_EQ(a, b);
        ASSERT_EQ(b.order(), a.order());
    }
    Series h = make_series(std::vector<Term>{{half(1), 1}}, 2, 3);
    EXPECT_FALSE(h.integral());
    EXPECT_THROW(h.demoted(), NotRepresentable);
}

TEST(Coefficient, Contract) {
    Series a = poly({1, -1}, 5);
    EXPECT_EQ(a.coefficient(1), -1);
    EXPECT_EQ(a.coefficient(-7), 0);
    EXPECT_THROW(a.coefficient(6), UnknownCoefficient);
    EXPECT_THROW(first_difference(a, a, 6), UnknownCoefficient);
}

TEST(Binomial, NegativeExponent) {
    Series a = Series::one(6);
    a.times_binomial(1, -2);
    EXPECT_EQ(a.coefficient(0), 1);
    EXPECT_EQ(a.coefficient(-2), -1);
    a.divide_binomial(1, -2);
    EXPECT_FALSE(first_difference(a, Series::one(6), 6));
    EXPECT_THROW(Series::one(4).divide_binomial(1, 0), NonUnit);
}
