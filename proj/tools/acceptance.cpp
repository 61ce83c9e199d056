// One line per acceptance criterion. Every comparison is exact (integer or
// rational coefficients, tolerance 0). Exit 0 iff every failing sub-check is in
// the expected-failure list printed with its line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtheta/bailey.hpp"
#include "qtheta/cn.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/identities.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/theta.hpp"

using namespace qtheta;

namespace {

struct Criterion {
    int number = 0;
    std::string title;
    double limit_ms = 0;  // 0: no runtime bound
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> expected;

    void ok(bool pass, const std::string& what, bool expected_failure = false) {
        ++cases;
        if (pass) return;
        (expected_failure ? expected : failures).push_back(what);
    }
};

std::string describe(const VerificationReport& r) {
    std::ostringstream os;
    os << r.c.id;
    for (const auto& [k, v] : r.c.params) os << ' ' << k << '=' << v;
    if (const Check* f = r.checks.first_failure())
        os << ": " << f->label << " at q^" << f->cmp.first->exponent.str() << " (" << f->cmp.first->lhs << " vs "
           << f->cmp.first->rhs << ")";
    return os.str();
}

std::string describe(const InequalityReport& r) {
    std::ostringstream os;
    os << r.c.id;
    for (const auto& [k, v] : r.c.params) os << ' ' << k << '=' << v;
    if (!r.violations.empty()) os << ": negative at n=" << r.violations.front();
    if (!r.strictness_failures.empty()) os << ": zero at n=" << r.strictness_failures.front();
    return os.str();
}

void verify(Criterion& c, const std::string& id, Params p, Exponent order, bool expected_failure = false,
            std::map<std::string, std::string> m = {}) {
    try {
        const auto r = verify_identity({id, std::move(p), std::move(m), order});
        c.ok(r.pass() && !r.checks.items.empty(), describe(r), expected_failure);
    } catch (const Error& e) {
        c.ok(false, id + ": " + e.what(), expected_failure);
    }
}

void checks(Criterion& c, const std::string& what, const CheckList& l) {
    std::string why = what;
    if (const Check* f = l.first_failure()) why += ": " + f->label + " at q^" + f->cmp.first->exponent.str();
    c.ok(l.pass() && !l.items.empty(), why);
}

void scan(Criterion& c, const std::string& id, Params p, long n_max) {
    try {
        const auto r = scan_nonnegativity({id, std::move(p), n_max});
        c.ok(r.pass(), describe(r));
    } catch (const Error& e) {
        c.ok(false, id + ": " + e.what());
    }
}

std::string plural(long n, const char* word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

bool report(Criterion& c, double ms) {
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool clean = c.failures.empty() && in_time;
    std::printf("criterion %2d %s  %s  [%s, tol 0, %.0f ms", c.number, clean && c.expected.empty() ? "PASS" : "FAIL",
                c.title.c_str(), plural(c.cases, "case").c_str(), ms);
    if (c.limit_ms > 0) std::printf(" < %.0f ms", c.limit_ms);
    std::printf("]");
    if (!in_time) std::printf("  over time budget");
    if (!c.failures.empty())
        std::printf("  first failure: %s (%s)", c.failures.front().c_str(), plural(c.failures.size(), "failure").c_str());
    if (!c.expected.empty())
        std::printf("  expected: %s (%s)", c.expected.front().c_str(), plural(c.expected.size(), "case").c_str());
    std::printf("\n");
    std::fflush(stdout);
    return clean;
}

// ---------------------------------------------------------------- criteria

void c1(Criterion& c) { verify(c, "eq-1.1", {}, 300); }

void c2(Criterion& c) {
    for (long l = 1; l <= 6; ++l) verify(c, "thm-1.3", {{"l", l}}, 200);
    for (long l = 1; l <= 4; ++l) {
        verify(c, "thm-4.1", {{"l", l}}, 150);
        verify(c, "thm-4.1-steps", {{"l", l}}, 150);
    }
}

void c3(Criterion& c) {
    for (long k = 1; k <= 4; ++k)
        for (long i = 0; i <= k; ++i)
            for (long l = 0; l <= 3; ++l) verify(c, "thm-1.2", {{"k", k}, {"i", i}, {"l", l}}, 100);
    for (long k = 1; k <= 4; ++k)
        for (long i = 1; i <= k; ++i) verify(c, "eq-agb", {{"k", k}, {"i", i}}, 100);
}

void c4(Criterion& c) {
    for (long l = 1; l <= 6; ++l) {
        verify(c, "thm-1.4", {{"l", l}}, 200);
        verify(c, "thm-1.5", {{"l", l}}, 200);
    }
    for (long l = 1; l <= 4; ++l) {
        verify(c, "thm-4.5", {{"l", l}}, 150);
        verify(c, "thm-4.5-steps", {{"l", l}}, 150);
    }
}

// The corollary as displayed misses a constant term; its regularized form is checked alongside.
void c5(Criterion& c) {
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i < k; ++i)
            for (long l = 1; l <= 2; ++l) verify(c, "thm-3.2", {{"k", k}, {"i", i}, {"l", l}}, 100);
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i <= k; ++i) {
            verify(c, "cor-3.3", {{"k", k}, {"i", i}}, 100, true);
            verify(c, "cor-3.3-regularized", {{"k", k}, {"i", i}}, 100);
            verify(c, "bressoud-even", {{"k", k}, {"i", i}}, 100);
        }
}

void c6(Criterion& c) {
    for (long k = 1; k <= 4; ++k)
        for (const char* id : {"shanks", "eq-1.3", "eq-1.9", "eq-1.10", "eq-1.12", "eq-1.13", "xyz-display"})
            verify(c, id, {{"k", k}}, 150);
}

void c7(Criterion& c) {
    const auto q = [](long e, int s = 1) { return Monomial::q(e, s); };
    for (long a : {1, 3, 5}) {
        checks(c, "pair 1 a=q^" + std::to_string(a), verify_bailey_relation(BaileyPair::pair1(a), 8, 60));
        checks(c, "pair 2 a=q^" + std::to_string(a), verify_bailey_relation(BaileyPair::pair2(a), 8, 60));
    }
    checks(c, "6phi5 a=q^6 b=q^2 c=q^3", verify_bailey_relation(BaileyPair::six_phi_five(6, q(2), q(3)), 8, 60));

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> ex(1, 4), sg(0, 1);
    const auto pick = [&] { return q(ex(rng), sg(rng) ? 1 : -1); };
    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= k; ++i)
            for (long n = 0; n <= 4; ++n)
                for (int draw = 0; draw < 2; ++draw) {
                    LatticeCase lc{k, i, n, {}, {}, false};
                    std::string what = "lattice k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                       " n=" + std::to_string(n);
                    for (long s = 0; s < k; ++s) {
                        lc.rho.push_back(pick());
                        lc.sigma.push_back(pick());
                        what += " rho" + std::to_string(s + 1) + "=" + lc.rho.back().str() + " sigma" +
                                std::to_string(s + 1) + "=" + lc.sigma.back().str();
                    }
                    const auto pair = (n + draw) % 2 == 0 ? BaileyPair::pair2(9) : BaileyPair::pair1(9);
                    try {
                        const Sides sd = lattice_sides(lc, pair, 50);
                        c.ok(!first_difference(sd.first, sd.second, 50).has_value(), what);
                    } catch (const Error& e) {
                        c.ok(false, what + ": " + e.what());
                    }
                }

    for (auto which : {ChainLemma::Lemma61, ChainLemma::Lemma62})
        for (const auto& pair : {BaileyPair::pair2(3), BaileyPair::pair1(3), BaileyPair::six_phi_five(6, q(2), q(3))})
            for (bool finite : {true, false}) {
                ChainCase cc{pair, q(1, -1), q(1), false};
                if (!finite) cc.sigma = std::nullopt;
                checks(c,
                       std::string(which == ChainLemma::Lemma61 ? "lemma 6.1 " : "lemma 6.2 ") + pair.name() +
                           (finite ? "" : " sigma->inf"),
                       verify_chain_lemma(which, cc, 3, 50));
            }
}

void c8(Criterion& c) {
    for (long k = 2; k <= 5; ++k) scan(c, "ineq-1.6", {{"k", k}}, 400);
    for (long l = 1; l <= 5; ++l) {
        scan(c, "cor-4.2", {{"l", l}}, 400);
        scan(c, "cor-4.4", {{"l", l}}, 400);
    }
}

void c9(Criterion& c) {
    verify(c, "eq-p5-floor", {}, 2000);
    {
        const PartitionTable t = build_table(PartitionKind::p5(), 10000);
        long bad = -1;
        for (long n = 0; n <= 10000 && bad < 0; ++n) {
            const auto [lo, hi] = p5_bounds(n);
            const mpq_class v(t(n));
            if (!(lo < v && v <= hi)) bad = n;
        }
        c.ok(bad < 0, "p5 bounds at n=" + std::to_string(bad));
    }
    for (long k = 1; k <= 5; ++k) {
        const Series s = p5_series(k, 1000);
        long bad = -1;
        for (long n = 0; n <= 1000 && bad < 0; ++n) {
            const mpz_class v = cn_evaluate(n, k);
            if (v != s.coefficient(n) || v < 0) bad = n;
        }
        c.ok(bad < 0, "C(n) k=" + std::to_string(k) + " at n=" + std::to_string(bad));
    }
    // At n0 = 0 both sides are the empty sum, so the strict inequality cannot hold there.
    for (long k = 1; k <= 5; ++k)
        for (long n0 = 0; n0 <= 8; ++n0) {
            long bad = -1;
            for (int w = 1; w <= 4 && bad < 0; ++w) {
                const CaseWindow cw = case_window(k, n0, w);
                for (long n = cw.lo; n <= cw.hi && bad < 0; ++n)
                    if (!(cn_lower_bound(n, k, n0) < mpq_class(cn_partial(n, k, n0)))) bad = n;
            }
            c.ok(bad < 0,
                 "C^d < C k=" + std::to_string(k) + " n0=" + std::to_string(n0) + " at n=" + std::to_string(bad),
                 n0 == 0);
            const WindowClaims wc = case_window_claims(k, n0);
            c.ok(wc.pass(), "case claims k=" + std::to_string(k) + " n0=" + std::to_string(n0) + ": " +
                                (wc.failures.empty() ? "" : wc.failures.front()));
        }
    verify(c, "eq-merca-recurrence", {}, 500);
    for (long ell : {3, 6, 7, 8})
        for (long k = 1; k <= 5; ++k) {
            const auto r = scan_bm_conjecture(k, 500, ell);
            c.ok(r.pass(), describe(r) + " l=" + std::to_string(ell));
        }
    for (auto [R, S] : {std::pair{3L, 1L}, {6L, 2L}, {9L, 3L}})
        for (long k = 1; k <= 4; ++k) scan(c, "conj-strong", {{"R", R}, {"S", S}, {"k", k}}, 500);
}

Series random_series(std::mt19937& rng, int grain) {
    std::uniform_int_distribution<int> coef(-5, 5), lo(-3, 2), len(0, 12), ord(4, 16);
    const int l = lo(rng), n = len(rng);
    std::vector<Term> t;
    for (int i = 0; i < n; ++i) t.push_back({half(grain == 1 ? 2 * (l + i) : l + i), coef(rng)});
    return make_series(t, grain, Exponent(ord(rng)));
}

void c10(Criterion& c) {
    std::mt19937 rng(12345);
    long bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int g = trial % 3 == 0 ? 2 : 1;
        const Series a = random_series(rng, g), b = random_series(rng, g), d = random_series(rng, 1);
        const auto agree = [](const Series& x, const Series& y) {
            return !first_difference(x, y, std::min(x.order(), y.order())).has_value();
        };
        const bool pass = agree(a + b, b + a) && agree(a * b, b * a) && agree((a + b) + d, a + (b + d)) &&
                          agree((a * b) * d, a * (b * d)) && agree(a * (b + d), a * b + a * d) &&
                          agree(a - a, Series::zero(a.order()));
        bad += !pass;
    }
    c.ok(bad == 0, std::to_string(bad) + " ring-law trials");

    for (auto kind : {PartitionKind::unrestricted(), PartitionKind::pod(), PartitionKind::overpartition(),
                      PartitionKind::regular(6), PartitionKind::p5()}) {
        const PartitionTable t = build_table(kind, kBruteForceCeiling);
        long first = -1;
        for (long n = 0; n <= kBruteForceCeiling && first < 0; ++n)
            if (t(n) != count_bruteforce(kind, n)) first = n;
        c.ok(first < 0, kind.name() + " table vs enumeration at n=" + std::to_string(first));
    }

    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= k; ++i)
            for (long l = 0; l <= 2; ++l)
                c.ok(!first_difference(ag_multisum_rhs(k, i, l, 60), ag_multisum_rhs(k, i, l, 60, 120), 60),
                     "odd-basis pruning k=" + std::to_string(k) + " i=" + std::to_string(i) + " l=" + std::to_string(l));
    for (long k = 2; k <= 3; ++k)
        for (long i = 1; i < k; ++i)
            c.ok(!first_difference(even_multisum_rhs(k, i, 1, 60), even_multisum_rhs(k, i, 1, 60, 120), 60),
                 "even-basis pruning k=" + std::to_string(k) + " i=" + std::to_string(i));

    for (long k = 1; k <= 4; ++k) verify(c, "eq-1.4", {{"k", k}}, 50);
}

}  // namespace

int main() {
    struct Row {
        const char* title;
        double limit_ms;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Row> rows{
        {"pentagonal number theorem to order 300", 1000, c1},
        {"truncated pentagonal theorem and its Bailey-lattice equivalence", 30000, c2},
        {"odd-basis truncated Andrews-Gordon identities", 300000, c3},
        {"triangular and square truncated theta identities", 0, c4},
        {"even-basis truncated identities", 0, c5},
        {"background truncated displays", 0, c6},
        {"Bailey pairs, lattice and chain lemmas", 0, c7},
        {"nonnegativity scans with strictness thresholds", 0, c8},
        {"regular-partition and p5 suite", 0, c9},
        {"property suites", 0, c10},
    };
    bool all = true;
    for (size_t j = 0; j < rows.size(); ++j) {
        Criterion c;
        c.number = static_cast<int>(j + 1);
        c.title = rows[j].title;
        c.limit_ms = rows[j].limit_ms;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rows[j].run(c);
        } catch (const std::exception& e) {
            c.ok(false, std::string("uncaught: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        all = report(c, ms) && all;
    }
    std::printf("%s\n", all ? "acceptance: every failure is expected" : "acceptance: unexpected failures");
    return all ? 0 : 1;
}
