#include <gtest/gtest.h>

#include <set>

#include "qtheta/cn.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/identities.hpp"

using namespace qtheta;

namespace {

VerificationReport run_id(const std::string& id, Params p, Exponent order = 60,
                          std::map<std::string, std::string> m = {}) {
    return verify_identity({id, std::move(p), std::move(m), order});
}

std::string why(const VerificationReport& r) {
    const Check* f = r.checks.first_failure();
    if (!f) return "";
    return f->label + " at q^" + f->cmp.first->exponent.str() + ": " + f->cmp.first->lhs.get_str() + " vs " +
           f->cmp.first->rhs.get_str();
}

void expect_pass(const std::string& id, Params p, Exponent order = 60, std::map<std::string, std::string> m = {}) {
    auto r = run_id(id, p, order, m);
    EXPECT_TRUE(r.pass()) << id << ": " << why(r);
    EXPECT_FALSE(r.checks.items.empty()) << id;
}

}  // namespace

TEST(Registry, Catalog) {
    const auto& r = registry();
    EXPECT_GE(r.size(), 25u);
    std::set<std::string> ids;
    for (const auto& e : r) {
        EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
        EXPECT_FALSE(e.paper_display.empty()) << e.id;
    }
    EXPECT_TRUE(ids.count("thm-1.2"));
    EXPECT_TRUE(ids.count("heine"));
    EXPECT_TRUE(ids.count("rogers-fine"));
    EXPECT_EQ(registry_entry("thm-1.2").params, (std::vector<std::string>{"k", "i", "l"}));
    EXPECT_THROW(registry_entry("no-such-id"), UnknownIdentity);
}

TEST(Registry, ParameterChecks) {
    EXPECT_THROW(run_id("no-such-id", {}), UnknownIdentity);
    EXPECT_THROW(run_id("thm-1.3", {}), InvalidParameter);
    EXPECT_THROW(run_id("thm-1.3", {{"l", 1}, {"k", 2}}), InvalidParameter);
    EXPECT_THROW(run_id("thm-1.3", {{"l", 0}}), InvalidParameter);
    EXPECT_THROW(run_id("thm-3.2", {{"k", 2}, {"i", 2}, {"l", 1}}), InvalidParameter);
    EXPECT_THROW(run_id("ineq-1.6", {{"k", 1}}), InvalidParameter);
    EXPECT_THROW(run_id("heine", {}, 20, {{"w", "q"}}), InvalidParameter);
}

TEST(Identities, Background) {
    expect_pass("eq-1.1", {}, 300);
    expect_pass("eq-1.7", {}, 200);
    expect_pass("eq-1.8", {}, 200);
    for (long k = 1; k <= 4; ++k)
        for (const char* id : {"shanks", "eq-1.3", "eq-1.9", "eq-1.10", "eq-1.12", "eq-1.13", "xyz-display"})
            expect_pass(id, {{"k", k}}, 80);
    for (long k = 1; k <= 3; ++k)
        for (long i = 1; i <= k; ++i) expect_pass("eq-agb", {{"k", k}, {"i", i}}, 80);
}

TEST(Identities, Pentagonal) {
    expect_pass("thm-1.3", {{"l", 2}}, 200);
    const Series s = identity_lhs({"thm-1.3", {{"l", 1}}, {}, 6});
    const long expected[] = {1, 0, 1, 1, 2, 2, 4};
    for (long n = 0; n <= 6; ++n) EXPECT_EQ(s.coefficient(n), expected[n]) << n;
    expect_pass("thm-4.1", {{"l", 3}}, 150);
    for (long l = 1; l <= 3; ++l) expect_pass("thm-4.1-steps", {{"l", l}}, 80);
}

TEST(Identities, MkBridge) {
    for (long k = 1; k <= 4; ++k) expect_pass("eq-1.4", {{"k", k}}, 50);
    expect_pass("bm-mk-bridge", {{"k", 2}}, 120);
}

TEST(Identities, OddBasis) {
    for (long k = 1; k <= 2; ++k)
        for (long i = 0; i <= k; ++i)
            for (long l = 0; l <= 2; ++l) expect_pass("thm-1.2", {{"k", k}, {"i", i}, {"l", l}}, 50);
    auto r = run_id("thm-1.2", {{"k", 2}, {"i", 1}, {"l", 0}}, 40);
    EXPECT_EQ(r.checks.items.size(), 2u);
}

TEST(Identities, TriangularAndSquare) {
    for (long l = 1; l <= 3; ++l) {
        expect_pass("thm-1.4", {{"l", l}}, 100);
        expect_pass("thm-1.5", {{"l", l}}, 100);
        expect_pass("thm-4.5", {{"l", l}}, 100);
        expect_pass("thm-4.5-steps", {{"l", l}}, 80);
    }
}

TEST(Identities, SquareChainAsDisplayedFails) {
    for (long l = 1; l <= 3; ++l) {
        auto r = run_id("thm-4.5-steps-printed", {{"l", l}}, 60);
        EXPECT_FALSE(r.pass()) << l;
    }
}

TEST(Identities, EvenBasis) {
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i < k; ++i) expect_pass("thm-3.2", {{"k", k}, {"i", i}, {"l", 1}}, 50);
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i <= k; ++i) expect_pass("bressoud-even", {{"k", k}, {"i", i}}, 60);
}

TEST(Identities, EvenLimitNeedsItsConstant) {
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i <= k; ++i) {
            auto printed = run_id("cor-3.3", {{"k", k}, {"i", i}}, 40);
            ASSERT_FALSE(printed.pass());
            const Check* f = printed.checks.first_failure();
            EXPECT_EQ(f->cmp.first->exponent, Exponent(0));
            EXPECT_EQ(f->cmp.first->lhs - f->cmp.first->rhs, -1);
            expect_pass("cor-3.3-regularized", {{"k", k}, {"i", i}}, 40);
        }
    EXPECT_THROW(run_id("cor-3.3", {{"k", 1}, {"i", 1}}), InvalidParameter);
}

TEST(Identities, RegularPartitions) {
    expect_pass("eq-merca-recurrence", {}, 300);
    for (long k = 1; k <= 3; ++k) {
        for (long ell : {3, 6, 7}) expect_pass("thm-5.2-steps", {{"k", k}, {"l", ell}}, 100);
        for (long S = 1; S <= 3; ++S) expect_pass("thm-1.6-steps", {{"k", k}, {"S", S}}, 100);
        expect_pass("eq-p5cn", {{"k", k}}, 200);
    }
    expect_pass("eq-p5-floor", {}, 500);
}

TEST(Transformations, Defaults) {
    for (const char* id : {"heine", "phi32-a", "phi32-b", "rogers-fine"}) expect_pass(id, {}, 60);
    expect_pass("jtpi", {{"R", 3}}, 100);
    expect_pass("jtpi", {{"R", 5}}, 100, {{"a", "-q^2"}});
    expect_pass("heine", {}, 40, {{"a", "q^(1/2)"}, {"b", "q"}, {"c", "q^2"}, {"z", "q"}});
    expect_pass("rogers-fine", {}, 40, {{"alpha", "q"}, {"beta", "-q^2"}, {"tau", "-q"}});
    expect_pass("phi32-a", {}, 40, {{"a", "-q"}, {"b", "q^2"}, {"c", "q"}, {"d", "q^3"}, {"e", "q^4"}});
}

TEST(Transformations, JtpiIsThePentagonalTheorem) {
    auto m = std::map<std::string, Monomial>{{"a", Monomial::q(1)}};
    auto r = verify_transformation(Transformation::Jtpi, m, 100, 3);
    EXPECT_TRUE(r.pass());
    expect_pass("eq-1.1", {}, 100);
}

TEST(Transformations, DivergentSpecialisations) {
    // abz/c = 1
    EXPECT_THROW(run_id("heine", {}, 60, {{"c", "q^4"}}), InvalidParameter);
    EXPECT_THROW(run_id("rogers-fine", {}, 60, {{"tau", "1"}}), InvalidParameter);
    EXPECT_THROW(run_id("jtpi", {{"R", 3}}, 60, {{"a", "q^3"}}), InvalidParameter);
    EXPECT_THROW(run_id("heine", {}, 60, {{"z", "inf"}}), InvalidParameter);
    EXPECT_THROW(parse_transformation("heine-2"), UnknownIdentity);
}

TEST(Scans, Examples) {
    auto r = scan_nonnegativity({"ineq-1.6", {{"k", 3}}, 400});
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.threshold, 15);
    EXPECT_EQ(r.from, 1);
    r = scan_nonnegativity({"cor-4.4", {{"l", 2}}, 300});
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.threshold, 4);
    EXPECT_TRUE(scan_nonnegativity({"conj-strong", {{"R", 3}, {"S", 1}, {"k", 4}}, 500}).pass());
    EXPECT_TRUE(scan_bm_conjecture(1, 300, 6).pass());
    EXPECT_TRUE(scan_bm_conjecture(3, 300, 3).pass());
    r = scan_bm_conjecture(2, 300, 6);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.threshold, 7);
    EXPECT_FALSE(scan_bm_conjecture(2, 300, 7).threshold.has_value());
}

TEST(Scans, Families) {
    for (long l = 1; l <= 3; ++l) {
        EXPECT_TRUE(scan_nonnegativity({"cor-4.2", {{"l", l}}, 200}).pass());
        EXPECT_TRUE(scan_nonnegativity({"ineq-1.11-pod", {{"k", l}}, 200}).pass());
        EXPECT_TRUE(scan_nonnegativity({"ineq-1.11-overpartition", {{"k", l}}, 200}).pass());
        EXPECT_TRUE(scan_nonnegativity({"conj-weak", {{"R", 5}, {"S", 2}, {"l", l}}, 200}).pass());
        EXPECT_TRUE(scan_nonnegativity({"thm-5.1-series", {{"k", l}}, 200}).pass());
    }
    EXPECT_TRUE(scan_nonnegativity({"conj-strong", {{"R", 7}, {"S", 3}, {"k", 2}}, 200}).pass());
    EXPECT_TRUE(scan_nonnegativity({"thm-5.2-factor", {{"l", 3}}, 200}).pass());
    EXPECT_TRUE(scan_nonnegativity({"thm-5.2-factor", {{"l", 8}}, 200}).pass());
}

TEST(Scans, ModulusRange) {
    EXPECT_THROW(scan_bm_conjecture(1, 50, 4), InvalidParameter);
    EXPECT_THROW(scan_bm_conjecture(1, 50, 1, true), InvalidParameter);
    EXPECT_TRUE(scan_bm_conjecture(2, 200, 4, true).pass());
    auto r = scan_nonnegativity({"thm-5.2-factor", {{"l", 4}}, 50, true});
    EXPECT_FALSE(r.pass());
    ASSERT_FALSE(r.violations.empty());
    EXPECT_EQ(r.violations.front(), 4);
    EXPECT_THROW(scan_nonnegativity({"conj-weak", {{"R", 4}, {"S", 2}, {"l", 1}}, 50}), InvalidParameter);
    EXPECT_THROW(scan_nonnegativity({"thm-1.3", {{"l", 1}}, 50}), InvalidParameter);
    EXPECT_THROW(run_id("ineq-1.6", {{"k", 1}}), InvalidParameter);
}

TEST(Scans, SequenceMatchesCn) {
    auto v = scan_sequence({"thm-5.1-series", {{"k", 2}}, 300});
    ASSERT_EQ(v.size(), 301u);
    for (long n = 0; n <= 300; ++n) EXPECT_EQ(v[static_cast<size_t>(n)], cn_evaluate(n, 2));
}

TEST(Scans, WeakFormSkipsTheConstant) {
    auto v = scan_sequence({"conj-weak", {{"R", 3}, {"S", 1}, {"l", 2}}, 10});
    EXPECT_EQ(v[0], -1);
    EXPECT_TRUE(scan_nonnegativity({"conj-weak", {{"R", 3}, {"S", 1}, {"l", 2}}, 100}).pass());
}

TEST(BaileyEntries, Relations) {
    for (const char* id : {"bailey-pair-1", "bailey-pair-2", "bailey-6phi5"}) expect_pass(id, {{"n", 4}}, 40);
    expect_pass("lemma-2.1", {{"k", 2}, {"i", 1}, {"n", 3}, {"pair", 2}}, 40);
    expect_pass("lemma-2.1", {{"k", 2}, {"i", 0}, {"n", 2}, {"pair", 1}}, 40);
    expect_pass("lemma-2.1", {{"k", 1}, {"i", 1}, {"n", 2}, {"pair", 3}}, 40);
    EXPECT_THROW(run_id("lemma-2.1", {{"k", 2}, {"i", 1}, {"n", 1}, {"pair", 4}}), InvalidParameter);
    EXPECT_THROW(run_id("lemma-2.1", {{"k", 3}, {"i", 1}, {"n", 1}, {"pair", 2}}, 20, {{"rho", "q,q^2"}}),
                 InvalidParameter);
    expect_pass("lemma-6.1", {{"n", 3}, {"pair", 2}}, 40, {{"sigma", "inf"}});
    expect_pass("lemma-6.2", {{"n", 3}, {"pair", 1}}, 40);
    expect_pass("lemma62-pf22", {{"l", 2}}, 40);
}

TEST(BaileyEntries, LimitForms) {
    expect_pass("even-pf", {{"k", 2}, {"i", 1}, {"pair", 2}}, 40);
    expect_pass("pf-12", {{"k", 2}, {"i", 2}, {"pair", 1}}, 40);
    expect_pass("progress-pr-1", {{"k", 2}, {"i", 1}, {"l", 1}}, 40);
    expect_pass("thm-1-pf", {{"k", 2}, {"i", 1}, {"l", 1}}, 40);
    expect_pass("pf-evenmod", {{"k", 2}, {"i", 1}, {"l", 1}}, 40);
    expect_pass("pf-3-1", {{"k", 2}, {"pair", 2}}, 40);
    expect_pass("pf-2-2", {{"l", 2}}, 40);
    expect_pass("squ-pf", {{"l", 2}}, 40);
    EXPECT_FALSE(run_id("even-pf", {{"k", 1}, {"i", 0}, {"pair", 2}}, 40).pass());
}

TEST(Reports, CheckedOrderAndTiming) {
    auto r = run_id("thm-1.5", {{"l", 2}}, 70);
    EXPECT_EQ(r.checked, Exponent(70));
    EXPECT_GE(r.elapsed_ms, 0);
    EXPECT_THROW(identity_lhs({"heine", {}, {}, 10}), InvalidParameter);
}
