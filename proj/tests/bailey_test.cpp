#include <gtest/gtest.h>

#include <random>

#include "qtheta/bailey.hpp"
#include "qtheta/errors.hpp"

using namespace qtheta;

namespace {

Monomial q(long e, int sign = 1) { return Monomial::q(e, sign); }

void expect_pass(const CheckList& r) {
    ASSERT_FALSE(r.items.empty());
    const Check* f = r.first_failure();
    if (f) {
        ADD_FAILURE() << f->label << " differs at q^" << f->cmp.first->exponent.str() << ": " << f->cmp.first->lhs
                      << " vs " << f->cmp.first->rhs;
    }
}

void expect_equal_sides(const Sides& s, Exponent upto) {
    auto d = first_difference(s.first, s.second, upto);
    EXPECT_FALSE(d) << "differ at q^" << d->exponent.str() << ": " << d->lhs << " vs " << d->rhs;
}

}  // namespace

TEST(Monomial, ParseAndPrint) {
    EXPECT_EQ(parse_monomial("q^3"), q(3));
    EXPECT_EQ(parse_monomial("-q"), q(1, -1));
    EXPECT_EQ(parse_monomial("q^(3/2)"), Monomial::q(half(3)));
    EXPECT_EQ(parse_monomial("-q^(-1/2)"), Monomial::q(half(-1), -1));
    EXPECT_EQ(parse_monomial("1"), q(0));
    EXPECT_FALSE(parse_monomial("inf").has_value());
    EXPECT_THROW(parse_monomial("x^2"), InvalidParameter);
    for (const char* s : {"q^3", "-q", "q^(3/2)", "-q^(-1/2)", "1", "-q^(-2)"})
        EXPECT_EQ(parse_monomial(s)->str(), s);
}

TEST(BaileyPair, StartsAtOne) {
    for (const auto& p : {BaileyPair::pair1(3), BaileyPair::pair2(1), BaileyPair::six_phi_five(6, q(2), q(3))}) {
        EXPECT_EQ(p.alpha(0, 20), Series::one(20));
        EXPECT_EQ(p.beta(0, 20), Series::one(20));
    }
}

TEST(BaileyPair, Pair2FirstTerm) {
    const auto p = BaileyPair::pair2(1);
    Series expect = Series::one(30);
    expect.divide_binomial(1, 1).divide_binomial(1, 1);
    EXPECT_EQ(p.beta(1, 30), expect);
    auto r = verify_bailey_relation(p, 1, 30);
    expect_pass(r);
    EXPECT_EQ(r.items.size(), 2u);
}

TEST(BaileyPair, Pair1AtQCubed) { expect_pass(verify_bailey_relation(BaileyPair::pair1(3), 5, 40)); }

TEST(BaileyPair, NamedPairsGrid) {
    for (long a : {1, 3, 5}) {
        expect_pass(verify_bailey_relation(BaileyPair::pair1(a), 8, 60));
        expect_pass(verify_bailey_relation(BaileyPair::pair2(a), 8, 60));
    }
}

TEST(BaileyPair, SixPhiFiveMonomial) {
    expect_pass(verify_bailey_relation(BaileyPair::six_phi_five(6, q(2), q(3)), 6, 60));
    expect_pass(verify_bailey_relation(BaileyPair::six_phi_five(7, q(1, -1), q(2)), 5, 40));
    expect_pass(verify_bailey_relation(BaileyPair::six_phi_five(half(5), Monomial::q(half(1)), q(1, -1)), 4, 30));
}

TEST(BaileyPair, NonUnitSpecialisation) {
    // aq/b = 1
    EXPECT_THROW(verify_bailey_relation(BaileyPair::six_phi_five(1, q(2), q(3)), 2, 20), NonUnit);
    EXPECT_THROW(BaileyPair::pair2(0), InvalidParameter);
    EXPECT_THROW(BaileyPair::pair1(half(3)), NotRepresentable);
}

TEST(Lattice, SingleTerm) {
    LatticeCase c{1, 0, 0, {q(1)}, {q(2)}, false};
    auto s = lattice_sides(c, BaileyPair::pair2(3), 30);
    EXPECT_EQ(s.first, Series::one(30));
    EXPECT_EQ(s.second, Series::one(30));
}

TEST(Lattice, SpecExamples) {
    expect_equal_sides(lattice_sides({1, 1, 2, {q(1, -1)}, {q(2)}, false}, BaileyPair::pair2(3), 40), 40);
    expect_equal_sides(lattice_sides({2, 1, 3, {q(1, -1), q(2)}, {q(3), q(1, -1)}, false}, BaileyPair::pair2(5), 40),
                       40);
    expect_equal_sides(lattice_sides({2, 1, 3, {q(1, -1), q(2)}, {q(3), q(1, -1)}, false}, BaileyPair::pair1(5), 40),
                       40);
}

TEST(Lattice, Grid) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ex(1, 4), sg(0, 1);
    auto pick = [&] { return q(ex(rng), sg(rng) ? 1 : -1); };
    int cases = 0;
    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= k; ++i)
            for (long n = 0; n <= 4; ++n) {
                if (k == 3 && n == 4 && i % 2 == 1) continue;
                LatticeCase c{k, i, n, {}, {}, false};
                for (long s = 0; s < k; ++s) {
                    c.rho.push_back(pick());
                    c.sigma.push_back(pick());
                }
                const auto pair = (n % 2 == 0) ? BaileyPair::pair2(9) : BaileyPair::pair1(9);
                expect_equal_sides(lattice_sides(c, pair, 50), 50);
                ++cases;
            }
    EXPECT_GT(cases, 40);
}

TEST(Lattice, StrictLastInequalityFails) {
    LatticeCase c{2, 1, 3, {q(1, -1), q(2)}, {q(3), q(1, -1)}, true};
    auto s = lattice_sides(c, BaileyPair::pair2(5), 40);
    EXPECT_TRUE(first_difference(s.first, s.second, 40).has_value());
}

TEST(Lattice, IZeroFormAgrees) {
    for (long k = 1; k <= 3; ++k)
        for (long n = 0; n <= 3; ++n) {
            LatticeCase c{k, 0, n, {}, {}, false};
            for (long s = 0; s < k; ++s) {
                c.rho.push_back(q(s + 1, -1));
                c.sigma.push_back(q(2));
            }
            const auto pair = BaileyPair::pair1(7);
            auto a = lattice_sides(c, pair, 40);
            auto b = lattice_i0_sides(c, pair, 40);
            expect_equal_sides({a.first, b.first}, 40);
            expect_equal_sides({a.second, b.second}, 40);
            expect_equal_sides(b, 40);
        }
    EXPECT_THROW(lattice_i0_sides({1, 1, 1, {q(1)}, {q(2)}, false}, BaileyPair::pair2(3), 10), InvalidParameter);
}

TEST(LimitForm, SpecExamples) {
    LimitCase c;
    c.l = 1;
    expect_pass(verify_limit_form(LimitForm::Pf22, c, 30));
    expect_pass(verify_limit_form(LimitForm::SquPf, c, 30));
    c.k = 1;
    c.i = 0;
    expect_pass(verify_limit_form(LimitForm::ThmOnePf, c, 30));
}

TEST(LimitForm, ClosedFormsAcrossL) {
    for (long l = 1; l <= 4; ++l) {
        LimitCase c;
        c.l = l;
        expect_pass(verify_limit_form(LimitForm::Pf22, c, 80));
        expect_pass(verify_limit_form(LimitForm::SquPf, c, 80));
        for (long k = 1; k <= 3; ++k)
            for (long i = 0; i <= k; ++i) {
                c.k = k;
                c.i = i;
                expect_pass(verify_limit_form(LimitForm::ThmOnePf, c, 60));
                expect_pass(verify_limit_form(LimitForm::ProgressPr1, c, 60));
            }
    }
}

TEST(LimitForm, ProgressPrintedLinearTermFails) {
    LimitCase c;
    c.k = 3;
    c.i = 2;
    c.l = 1;
    c.printed = true;
    auto r = verify_limit_form(LimitForm::ProgressPr1, c, 40);
    EXPECT_FALSE(r.items[0].cmp.pass);
    EXPECT_TRUE(r.items[1].cmp.pass);
}

TEST(LimitForm, EvenModulus) {
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i < k; ++i)
            for (long l = 1; l <= 2; ++l) {
                LimitCase c;
                c.k = k;
                c.i = i;
                c.l = l;
                expect_pass(verify_limit_form(LimitForm::PfEvenmod, c, 50));
            }
}

TEST(LimitForm, GeneralPairForms) {
    const std::pair<Monomial, Monomial> rs[] = {{q(1), q(2)}, {q(1, -1), q(1)}, {q(2, -1), q(1, -1)}};
    for (const auto& pair : {BaileyPair::pair2(7), BaileyPair::pair1(7), BaileyPair::six_phi_five(7, q(1), q(2))})
        for (long k = 1; k <= 3; ++k)
            for (long i = 1; i <= k; ++i)
                for (const auto& [r, s] : rs) {
                    LimitCase c;
                    c.k = k;
                    c.i = i;
                    c.pair = pair;
                    c.rho = r;
                    c.sigma = s;
                    expect_pass(verify_limit_form(LimitForm::EvenPf, c, 40));
                    expect_pass(verify_limit_form(LimitForm::Pf12, c, 40));
                    expect_pass(verify_limit_form(LimitForm::Pf31, c, 40));
                }
}

TEST(LimitForm, IndexZeroOfSimplifiedLattice) {
    LimitCase c;
    c.k = 2;
    c.i = 0;
    EXPECT_FALSE(verify_limit_form(LimitForm::EvenPf, c, 40).pass());
    EXPECT_FALSE(verify_limit_form(LimitForm::Pf12, c, 40).pass());
}

TEST(LimitForm, Parameters) {
    LimitCase c;
    c.rho = q(7);
    EXPECT_THROW(verify_limit_form(LimitForm::EvenPf, c, 20), InvalidParameter);
    c = LimitCase{};
    c.l = 0;
    EXPECT_THROW(verify_limit_form(LimitForm::SquPf, c, 20), InvalidParameter);
    c = LimitCase{};
    c.k = 1;
    c.i = 1;
    EXPECT_THROW(verify_limit_form(LimitForm::PfEvenmod, c, 20), InvalidParameter);
    EXPECT_EQ(parse_limit_form("PF-2-2"), LimitForm::Pf22);
    EXPECT_THROW(parse_limit_form("PF-9"), UnknownIdentity);
    for (const auto& n : limit_form_names()) EXPECT_EQ(limit_form_name(parse_limit_form(n)), n);
}

TEST(ChainLemma, FirstLemma) {
    for (const auto& pair : {BaileyPair::pair2(1), BaileyPair::pair1(3), BaileyPair::six_phi_five(6, q(2), q(3))}) {
        ChainCase c{pair, q(1, -1), q(1), false};
        expect_pass(verify_chain_lemma(ChainLemma::Lemma61, c, 3, 40));
        c.sigma = std::nullopt;
        expect_pass(verify_chain_lemma(ChainLemma::Lemma61, c, 3, 40));
    }
}

TEST(ChainLemma, PrintedSpecialisationIsNotAUnit) {
    ChainCase c{BaileyPair::pair2(1), q(2), q(2), false};
    EXPECT_THROW(verify_chain_lemma(ChainLemma::Lemma61, c, 3, 40), NonUnit);
}

TEST(ChainLemma, SecondLemma) {
    for (const auto& pair : {BaileyPair::pair2(3), BaileyPair::pair1(3), BaileyPair::six_phi_five(6, q(2), q(3))}) {
        ChainCase c{pair, q(1, -1), q(1), false};
        expect_pass(verify_chain_lemma(ChainLemma::Lemma62, c, 3, 40));
        c.sigma = std::nullopt;
        expect_pass(verify_chain_lemma(ChainLemma::Lemma62, c, 3, 40));
    }
}

TEST(ChainLemma, SecondLemmaPrintedLeftSide) {
    ChainCase c{BaileyPair::pair2(3), q(1, -1), q(1), true};
    auto r = verify_chain_lemma(ChainLemma::Lemma62, c, 3, 40);
    EXPECT_TRUE(r.items[0].cmp.pass);
    EXPECT_FALSE(r.pass());
}

TEST(ChainLemma, ZeroLength) {
    ChainCase c;
    auto r = verify_chain_lemma(ChainLemma::Lemma62, c, 0, 20);
    expect_pass(r);
    EXPECT_EQ(r.items.size(), 1u);
}

TEST(ChainLemma, SecondLemmaGivesTriangularForm) {
    for (long l = 1; l <= 3; ++l) expect_pass(lemma62_pf22(l, 40));
}
