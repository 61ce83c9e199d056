#include <gtest/gtest.h>

#include "qtheta/errors.hpp"
#include "qtheta/partitions.hpp"

using namespace qtheta;

TEST(BruteForce, Examples) {
    EXPECT_EQ(count_bruteforce(PartitionKind::unrestricted(), 5), 7);
    EXPECT_EQ(count_bruteforce(PartitionKind::pod(), 3), 2);
    EXPECT_EQ(count_bruteforce(PartitionKind::overpartition(), 0), 1);
    EXPECT_EQ(count_bruteforce(PartitionKind::p5(), 2), 2);
    EXPECT_EQ(count_bruteforce(PartitionKind::overpartition(), 3), 8);
    EXPECT_EQ(count_bruteforce(PartitionKind::unrestricted(), -1), 0);
    EXPECT_THROW(count_bruteforce(PartitionKind::unrestricted(), 61), AboveCeiling);
}

TEST(Table, Examples) {
    EXPECT_EQ(build_table(PartitionKind::unrestricted(), 10)(10), 42);
    // partitions of 7 avoiding part 6: all 15 except 6+1
    EXPECT_EQ(build_table(PartitionKind::regular(6), 7)(7), 14);
    EXPECT_EQ(build_table(PartitionKind::p5(), 0)(0), 1);
    auto t = build_table(PartitionKind::pod(), 5);
    EXPECT_EQ(t(-3), 0);
    EXPECT_THROW(t(6), InvalidParameter);
}

TEST(Table, AgreesWithBruteForce) {
    for (auto kind : {PartitionKind::unrestricted(), PartitionKind::pod(), PartitionKind::overpartition(),
                      PartitionKind::regular(2), PartitionKind::regular(3), PartitionKind::regular(6),
                      PartitionKind::regular(7), PartitionKind::p5()}) {
        const long top = kind.tag == PartitionKind::Tag::Overpartition ? 45 : kBruteForceCeiling;
        auto t = build_table(kind, top);
        for (long n = 0; n <= top; ++n) ASSERT_EQ(t(n), count_bruteforce(kind, n)) << kind.name() << " " << n;
    }
}

TEST(Table, OverpartitionsEven) {
    auto t = build_table(PartitionKind::overpartition(), 300);
    for (long n = 1; n <= 300; ++n) ASSERT_TRUE(mpz_even_p(t(n).get_mpz_t())) << n;
}

TEST(Kind, NamesRoundTrip) {
    for (auto name : {"p", "pod", "pbar", "b6", "p5"}) EXPECT_EQ(PartitionKind::parse(name).name(), name);
    EXPECT_THROW(PartitionKind::parse("b1"), InvalidParameter);
    EXPECT_THROW(PartitionKind::parse("q"), InvalidParameter);
}

TEST(Mk, Examples) {
    EXPECT_EQ(mk_statistic(2, 1), 1);
    EXPECT_EQ(mk_statistic(4, 1), 2);
    for (long k = 1; k <= 5; ++k) EXPECT_EQ(mk_statistic(0, k), 0);
}

TEST(P5, ClosedForm) {
    EXPECT_EQ(p5_closed_form(0), 1);
    EXPECT_EQ(p5_closed_form(1), 1);
    EXPECT_EQ(p5_closed_form(2), 2);
    auto t = build_table(PartitionKind::p5(), 2000);
    for (long n = 0; n <= 2000; ++n) ASSERT_EQ(p5_closed_form(n), t(n)) << n;
}

TEST(P5, Bounds) {
    auto [lo0, hi0] = p5_bounds(0);
    EXPECT_EQ(lo0, mpq_class(1, 16));
    EXPECT_EQ(hi0, mpq_class(9, 8));
    auto t = build_table(PartitionKind::p5(), 10000);
    EXPECT_EQ(t(10), count_bruteforce(PartitionKind::p5(), 10));
    for (long n = 0; n <= 10000; ++n) {
        auto [lo, hi] = p5_bounds(n);
        ASSERT_LT(lo, mpq_class(t(n))) << n;
        ASSERT_LE(mpq_class(t(n)), hi) << n;
    }
    for (long n = 0; n <= 100; ++n) ASSERT_LT(p5_bounds(n).first, mpq_class(p5_closed_form(n)));
}
