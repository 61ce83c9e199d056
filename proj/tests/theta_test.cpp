#include <gtest/gtest.h>

#include "qtheta/errors.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/theta.hpp"

using namespace qtheta;

namespace {

void expect_coeffs(const Series& s, std::initializer_list<long> c) {
    long n = 0;
    for (long x : c) {
        EXPECT_EQ(s.coefficient(n), x) << "q^" << n << " in " << s.str();
        ++n;
    }
}

void expect_same(const Series& a, const Series& b, Exponent upto) {
    auto d = first_difference(a, b, upto);
    EXPECT_FALSE(d) << "first difference at q^" << d->exponent.str() << ": " << d->lhs.get_str() << " vs "
                    << d->rhs.get_str();
}

Series odd_basis_lhs(long k, long i, long l, Exponent N) {
    Series s = theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::odd_basis(k, i), -l, l - 1), N);
    return s * invert(jtp_product(2 * k + 1, i + 1, N));
}

Series even_basis_lhs(long k, long i, long l, Exponent N) {
    Series s = theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::even_basis(k, i), -l + 1, l - 1), N);
    return s * invert(jtp_product(2 * k, k - i, N));
}

}  // namespace

TEST(ThetaSum, Examples) {
    expect_coeffs(theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::pentagonal(), -1, 0), 4), {1, -1, 0, 0, 0});
    Series euler = theta_partial_sum(ThetaSumSpec::bilateral(QuadraticLaw::pentagonal()), 15);
    expect_coeffs(euler, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1});
    expect_coeffs(theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::square(), 0, 2), 5), {1, -1, 0, 0, 1, 0});
}

TEST(ThetaSum, NegativeExponentNeedsLaurent) {
    auto spec = ThetaSumSpec::finite(QuadraticLaw::even_basis(1, 3), 1, 3);
    EXPECT_THROW(theta_partial_sum(spec, 10), InvalidParameter);
    spec.laurent = true;
    Series s = theta_partial_sum(spec, 10);
    // j = 1, 2 cancel at q^-2, j = 3 gives -q^0
    EXPECT_EQ(s.min_exp(), Exponent(-2));
    EXPECT_EQ(s.coefficient(-2), 0);
    EXPECT_EQ(s.coefficient(0), -1);
}

TEST(Jtp, Examples) {
    expect_same(jtp_product(3, 1, 15), theta_partial_sum(ThetaSumSpec::bilateral(QuadraticLaw::pentagonal()), 15), 15);
    expect_same(jtp_product(2, 1, 40), theta_partial_sum(ThetaSumSpec::bilateral(QuadraticLaw::square()), 40), 40);
    Series g2 = Series::one(40);
    for (long n = 1; n * n <= 40; ++n) g2 += Series::monomial(n * n, n % 2 ? -2 : 2, 40);
    expect_same(jtp_product(2, 1, 40), g2, 40);
    expect_same(jtp_product(4, 1, 10), theta_partial_sum(ThetaSumSpec::bilateral({4, -2}), 10), 10);
    EXPECT_THROW(jtp_product(3, 3, 10), InvalidParameter);
    EXPECT_THROW(jtp_product(3, 0, 10), InvalidParameter);
}

TEST(Jtp, AllSmallModuli) {
    for (long R = 2; R <= 12; ++R)
        for (long S = 1; S < R; ++S)
            expect_same(jtp_product(R, S, 200),
                        theta_partial_sum(ThetaSumSpec::bilateral(QuadraticLaw::general(R, S)), 200), 200);
}

TEST(Chain, EnumeratesNonincreasingTuples) {
    std::vector<long> c1{0, 0};
    int count = 0;
    for_each_chain(c1, 8, [&](std::span<const long> N, long cost) {
        EXPECT_GE(N[0], N[1]);
        EXPECT_EQ(cost, N[0] * N[0] + N[1] * N[1]);
        EXPECT_LE(cost, 8);
        ++count;
    });
    // (0,0) (1,0) (1,1) (2,0) (2,1) (2,2)
    EXPECT_EQ(count, 6);
}

TEST(OddBasis, Examples) {
    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= k; ++i) expect_same(ag_multisum_rhs(k, i, 0, 30), Series::zero(30), 30);
    Series r = ag_multisum_rhs(1, 0, 1, 8);
    expect_coeffs(r, {1, 0, 1, 1, 2, 2, 4, 4, 7});
    Series lhs = theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::pentagonal(), -1, 0), 8) *
                 generating_function(PartitionKind::unrestricted(), 8);
    expect_same(r, lhs, 8);
    expect_same(ag_multisum_rhs(2, 1, 1, 30), odd_basis_lhs(2, 1, 1, 30), 30);
}

TEST(OddBasis, PruningIsLossless) {
    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= k; ++i)
            for (long l = 0; l <= 2; ++l) {
                Series a = ag_multisum_rhs(k, i, l, 60);
                Series b = ag_multisum_rhs(k, i, l, 60, 120);
                expect_same(a, b, 60);
            }
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i < k; ++i)
            expect_same(even_multisum_rhs(k, i, 1, 60), even_multisum_rhs(k, i, 1, 60, 120), 60);
}

TEST(EvenBasis, Examples) {
    expect_same(even_multisum_rhs(2, 1, 1, 25), even_basis_lhs(2, 1, 1, 25), 25);
    expect_same(even_multisum_rhs(3, 2, 1, 20), even_basis_lhs(3, 2, 1, 20), 20);
    EXPECT_EQ(even_multisum_rhs(3, 1, 2, 10).coefficient(0), 1);
    EXPECT_THROW(even_multisum_rhs(2, 2, 1, 10), InvalidParameter);
}

TEST(AndrewsGordon, ProductForm) {
    for (long k = 1; k <= 4; ++k)
        for (long i = 1; i <= k; ++i) {
            Series prod = jtp_product(2 * k + 1, i, 100) * generating_function(PartitionKind::unrestricted(), 100);
            expect_same(agb_multisum(k, i, 100), prod, 100);
        }
}

TEST(SingleSum, Thm13Example) {
    Series r = single_sum_rhs("thm-1.3", {{"l", 1}}, 6);
    expect_coeffs(r, {1, 0, 1, 1, 2, 2, 4});
    EXPECT_THROW(single_sum_rhs("thm-9.9", {}, 6), UnknownIdentity);
    EXPECT_THROW(single_sum_rhs("thm-1.3", {}, 6), InvalidParameter);
}

TEST(SingleSum, ShanksIsPolynomial) {
    for (long k = 1; k <= 5; ++k) {
        const Exponent N = 3 * k * k + 2 * k + 10;
        Series rhs = single_sum_rhs("shanks", {{"k", k}}, N);
        expect_same(rhs, theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::pentagonal(), -k, k), N), N);
        // the range as printed, j <= k-1, misses the j = k term
        auto d = first_difference(rhs, theta_partial_sum(ThetaSumSpec::finite(QuadraticLaw::pentagonal(), -k, k - 1), N), N);
        ASSERT_TRUE(d);
        EXPECT_EQ(d->exponent, Exponent(k * (3 * k + 1) / 2));
    }
}

TEST(SingleSum, Cor33Printed) {
    expect_same(single_sum_rhs("cor-3.3", {{"k", 2}, {"i", 1}}, 20), jtp_product(4, 1, 20), 20);
}

TEST(Regularised, TwiceGConstantTerm) {
    for (long M = 0; M < 5; ++M) EXPECT_EQ(twice_g(M, 10).coefficient(0), 1);
}

TEST(Rewritten, SummandsNonnegativeAndSumToTail) {
    for (const char* id : {"thm-1.3", "thm-1.4", "thm-1.5"})
        for (long l = 1; l <= 4; ++l) {
            auto parts = rewritten_tail_summands(id, l, 120);
            Series sum = Series::zero(120);
            for (const auto& s : parts) {
                for (long n = 0; n <= 120; ++n) ASSERT_GE(s.coefficient(n), 0) << id << " l=" << l << " n=" << n;
                sum += s;
            }
            expect_same(sum, classical_tail(id, l, 120), 120);
        }
}
