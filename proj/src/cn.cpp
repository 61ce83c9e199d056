#include "qtheta/cn.hpp"

#include <array>
#include <cmath>

#include "qtheta/errors.hpp"
#include "qtheta/partitions.hpp"

namespace qtheta {

namespace {

mpq_class Q(long a, long b) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

mpq_class pw(const mpq_class& x, int e) {
    mpq_class r = 1;
    for (int j = 0; j < e; ++j) r *= x;
    return r;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

// The four subtracted amounts of the j-th group of C(n).
std::array<long, 4> offsets(long k, long j) {
    const long b = 6 * j * j + 6 * k * j;
    return {b + j, b + 5 * j + 2 * k + 1, b + 7 * j + 3 * k + 2, b + 11 * j + 5 * k + 5};
}

const PartitionTable& p5_table(long n) {
    static PartitionTable t = build_table(PartitionKind::p5(), 1024);
    if (n > t.max_n) t = build_table(PartitionKind::p5(), 2 * n);
    return t;
}

mpz_class p5(long n) { return n < 0 ? mpz_class(0) : p5_table(n)(n); }

long group_count(long n, long k) {
    long j = 0;
    while (offsets(k, j)[0] <= n) ++j;
    return j;
}

mpz_class partial(long n, long k, long groups) {
    mpz_class s = 0;
    for (long j = 0; j < groups; ++j) {
        const auto o = offsets(k, j);
        s += p5(n - o[0]) - p5(n - o[1]) - p5(n - o[2]) + p5(n - o[3]);
    }
    return s;
}

// ---- printed displays, transcribed term by term

mpq_class cd_printed(const mpq_class& n, const mpq_class& k, const mpq_class& m) {
    return -n * n * m / 40 +
           n * (Q(3, 20) * k * k * m + Q(9, 20) * k * m * m - k * m / 40 + Q(3, 10) * pw(m, 3) - Q(19, 40) * m) +
           (-Q(9, 5) * k * k + Q(3, 20) * k + Q(61, 24)) * pw(m, 3) +
           (-Q(9, 20) * pw(k, 3) + Q(9, 40) * k * k + Q(61, 16) * k) * m * m +
           (Q(3, 40) * pw(k, 3) + Q(19, 16) * k * k - Q(19, 80) * k - Q(793, 240)) * m - Q(9, 4) * k * pw(m, 4) -
           Q(9, 10) * pw(m, 5);
}

mpq_class cd_summand_printed(const mpq_class& n, const mpq_class& k, const mpq_class& j) {
    return -Q(9, 2) * pw(j, 4) - 9 * pw(j, 3) * (1 + k) - j * (1 + k) * (-125 + 162 * k + 36 * k * k - 36 * n) / 40 -
           j * j * (55 + 522 * k + 216 * k * k - 36 * n) / 40 +
           (-30 * pw(k, 3) + k * k * (-31 + 12 * n) + 2 * k * (59 + 17 * n) - 2 * (7 * n + n * n) - 133) / 80;
}

mpq_class c1_printed(const mpq_class& n, const mpq_class& k, const mpq_class& m) {
    return pw(n, 3) / 240 + n * n * (-Q(3, 40) * k * m - Q(3, 40) * m * m - Q(3, 80) * m + Q(3, 40)) +
           n * (Q(9, 20) * k * k * m * m + Q(3, 20) * k * k * m + Q(9, 10) * k * pw(m, 3) + Q(3, 5) * k * m * m -
                Q(37, 40) * k * m + Q(9, 20) * pw(m, 4) + Q(9, 20) * pw(m, 3) - Q(71, 80) * m * m - Q(5, 8) * m +
                Q(89, 240)) -
           (Q(27, 10) * k * k + Q(63, 20) * k - Q(21, 8)) * pw(m, 4) +
           (-Q(9, 10) * pw(k, 3) - Q(9, 4) * k * k + Q(219, 40) * k + Q(55, 16)) * pw(m, 3) +
           (-Q(9, 20) * pw(k, 3) + Q(117, 40) * k * k + Q(377, 80) * k - Q(43, 20)) * m * m +
           (Q(3, 40) * pw(k, 3) + Q(19, 16) * k * k - Q(197, 80) * k - Q(147, 40)) * m +
           (-Q(27, 10) * k - Q(27, 20)) * pw(m, 5) - Q(9, 10) * pw(m, 6) + Q(1, 16);
}

mpq_class c2_printed(const mpq_class& n, const mpq_class& k, const mpq_class& m) {
    return n * n * (k / 40 + m / 40 + Q(1, 80)) +
           n * (-Q(3, 20) * k * k * m - k * k / 20 - Q(9, 20) * k * m * m - Q(17, 40) * k * m + k / 4 -
                Q(3, 10) * pw(m, 3) - Q(9, 20) * m * m + Q(3, 40)) +
           pw(k, 3) / 30 + (Q(9, 5) * k * k + Q(87, 20) * k + Q(5, 24)) * pw(m, 3) - k * k / 4 + Q(9, 10) * pw(m, 5) +
           (Q(9, 4) * k + Q(9, 4)) * pw(m, 4) + (Q(3, 8) * pw(k, 3) - k * k / 16 - Q(31, 16) * k - Q(527, 240)) * m +
           (Q(9, 20) * pw(k, 3) + Q(99, 40) * k * k + Q(7, 80) * k - Q(31, 16)) * m * m + Q(71, 120) * k - Q(7, 10);
}

mpq_class c3_printed(const mpq_class& n, const mpq_class& k, const mpq_class& m) {
    return -pw(n, 3) / 240 + n * n * (Q(3, 40) * k * m + k / 16 + Q(3, 40) * m * m + Q(9, 80) * m - Q(3, 80)) -
           n * (Q(9, 20) * k * k * m * m + Q(3, 5) * k * k * m + Q(13, 80) * k * k + Q(9, 10) * k * pw(m, 3) +
                Q(39, 20) * k * m * m + Q(7, 20) * k * m - Q(11, 20) * k + Q(9, 20) * pw(m, 4) + Q(27, 20) * pw(m, 3) +
                Q(37, 80) * m * m - Q(7, 10) * m + Q(13, 120)) -
           Q(7, 10) * k * k + Q(9, 10) * pw(k, 3) * pw(m, 3) + Q(9, 5) * pw(k, 3) * m * m + Q(21, 20) * pw(k, 3) * m +
           Q(7, 48) * pw(k, 3) + Q(27, 10) * k * k * pw(m, 4) + Q(153, 20) * k * k * pw(m, 3) +
           Q(9, 2) * k * k * m * m - Q(43, 40) * k * k * m + Q(27, 10) * k * pw(m, 5) + Q(99, 10) * k * pw(m, 4) +
           Q(303, 40) * k * pw(m, 3) - Q(163, 40) * k * m * m - Q(47, 16) * k * m + Q(137, 120) * k +
           Q(9, 10) * pw(m, 6) + Q(81, 20) * pw(m, 5) + Q(33, 8) * pw(m, 4) - Q(41, 16) * pw(m, 3) -
           Q(263, 80) * m * m - Q(73, 80) * m - Q(49, 40);
}

bool sign_ok(const mpq_class& v, int claim) {
    if (claim > 0) return v > 0;
    if (claim < 0) return v < 0;
    return true;
}

DisplayCheck point_check(std::string label, long at, const mpq_class& printed, const mpq_class& computed, int claim) {
    DisplayCheck d;
    d.label = std::move(label);
    d.at = at;
    d.printed = printed;
    d.computed = computed;
    d.equal = printed == computed;
    d.claim = claim;
    d.printed_sign_ok = sign_ok(printed, claim);
    d.computed_sign_ok = sign_ok(computed, claim);
    return d;
}

// A polynomial display compared at every point of [lo, hi]; the sign claim, if any, is checked at every point.
template <class F, class G>
DisplayCheck window_check(std::string label, long lo, long hi, F printed, G computed, int claim) {
    DisplayCheck d = point_check(std::move(label), lo, printed(lo), computed(lo), claim);
    for (long n = lo; n <= hi; ++n) {
        const mpq_class p = printed(n);
        const mpq_class c = computed(n);
        d.equal = d.equal && p == c;
        d.printed_sign_ok = d.printed_sign_ok && sign_ok(p, claim);
        d.computed_sign_ok = d.computed_sign_ok && sign_ok(c, claim);
    }
    return d;
}

}  // namespace

mpq_class Poly::operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (size_t j = c.size(); j-- > 0;) r = r * x + c[j];
    return r;
}

Poly Poly::derivative() const {
    Poly d;
    for (size_t j = 1; j < c.size(); ++j) d.c.push_back(c[j] * static_cast<long>(j));
    return d;
}

Poly Poly::shifted(long s) const {
    // Horner in (x - s)
    Poly r;
    for (size_t j = c.size(); j-- > 0;) {
        Poly t;
        t.c.assign(r.c.size() + 1, 0);
        for (size_t i = 0; i < r.c.size(); ++i) {
            t.c[i + 1] += r.c[i];
            t.c[i] -= r.c[i] * s;
        }
        t.c[0] += c[j];
        r = std::move(t);
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t j = 0; j < o.c.size(); ++j) c[j] += o.c[j];
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t j = 0; j < o.c.size(); ++j) c[j] -= o.c[j];
    return *this;
}

Poly p5_lower_poly() { return Poly{{Q(525, 480) - Q(1, 32) - 1, Q(193, 480) - Q(1, 32), Q(36, 480), Q(2, 480)}}; }

Poly p5_upper_poly() { return Poly{{Q(525, 480) + Q(1, 32), Q(193, 480) + Q(1, 32), Q(36, 480), Q(2, 480)}}; }

Series p5_series(long k, Exponent order) {
    require(k >= 1, "the p5 series needs k >= 1");
    std::vector<Term> terms;
    for (long j = 0;; ++j) {
        const long e = (3 * j * j + 6 * j * k + j) / 2;
        if (Exponent(e) > order) break;
        const long s = j % 2 == 0 ? 1 : -1;
        terms.push_back({e, s});
        terms.push_back({e + 2 * j + 2 * k + 1, -s});
    }
    Series s = make_series(terms, 1, order);
    for (long p : {1, 2, 4, 5}) s.divide_binomial(1, p);
    return s;
}

mpz_class cn_evaluate(long n, long k) {
    require(n >= 0 && k >= 1, "C(n) needs n >= 0, k >= 1");
    return partial(n, k, group_count(n, k));
}

mpz_class cn_partial(long n, long k, long n0) {
    require(n >= 0 && k >= 1 && n0 >= 0, "C(n, n0) needs n >= 0, k >= 1, n0 >= 0");
    return partial(n, k, n0);
}

mpq_class cn_lower_bound(long n, long k, long n0) {
    require(n >= 0 && k >= 1 && n0 >= 0, "C^d(n, n0) needs n >= 0, k >= 1, n0 >= 0");
    return cd_printed(n, k, n0);
}

Poly cn_lower_bound_poly(long k, long n0) {
    const Poly lo = p5_lower_poly();
    const Poly up = p5_upper_poly();
    Poly s;
    for (long j = 0; j < n0; ++j) {
        const auto o = offsets(k, j);
        s += lo.shifted(o[0]);
        s -= up.shifted(o[1]);
        s -= up.shifted(o[2]);
        s += lo.shifted(o[3]);
    }
    return s;
}

mpq_class cn_lower_bound_terms(long n, long k, long n0) {
    require(n >= 0 && k >= 1 && n0 >= 0, "C^d(n, n0) needs n >= 0, k >= 1, n0 >= 0");
    return cn_lower_bound_poly(k, n0)(n);
}

int recurrence_indicator(long n) {
    require(n >= 0, "the indicator needs n >= 0");
    // 9m^2 - 3m = n, m = (3 +- sqrt(9 + 36n)) / 18
    const long disc = 9 + 36 * n;
    long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (r * r > disc) --r;
    while ((r + 1) * (r + 1) <= disc) ++r;
    if (r * r != disc) return 0;
    for (long num : {3 + r, 3 - r})
        if (num % 18 == 0) {
            const long m = num / 18;
            return m % 2 == 0 ? 1 : -1;
        }
    return 0;
}

CaseWindow case_window(long k, long n0, int which) {
    require(k >= 1 && n0 >= 0, "case windows need k >= 1, n0 >= 0");
    const long b = 6 * n0 * n0 + 6 * k * n0;
    switch (which) {
        case 1: return {b + n0, b + 5 * n0 + 2 * k};
        case 2: return {b + 5 * n0 + 2 * k + 1, b + 7 * n0 + 3 * k + 1};
        case 3: return {b + 7 * n0 + 3 * k + 2, b + 11 * n0 + 5 * k + 4};
        case 4: return {b + 11 * n0 + 5 * k + 5, 6 * (n0 + 1) * (n0 + 1) + 6 * k * (n0 + 1) + n0};
        default: throw InvalidParameter("case must be 1..4");
    }
}

Poly case_bound_poly(long k, long n0, int which) {
    require(1 <= which && which <= 3, "case bound polynomials exist for cases 1..3");
    const auto o = offsets(k, n0);
    Poly s = cn_lower_bound_poly(k, n0) + p5_lower_poly().shifted(o[0]);
    if (which >= 2) s -= p5_upper_poly().shifted(o[1]);
    if (which >= 3) s -= p5_upper_poly().shifted(o[2]);
    return s;
}

std::vector<DisplayCheck> case_display_checks(long k, long n0) {
    require(k >= 1 && n0 >= 0, "case displays need k >= 1, n0 >= 0");
    const mpq_class K = k, M = n0;
    const Poly cd = cn_lower_bound_poly(k, n0);
    const Poly c1 = case_bound_poly(k, n0, 1);
    const Poly c2 = case_bound_poly(k, n0, 2);
    const Poly c3 = case_bound_poly(k, n0, 3);
    const CaseWindow w1 = case_window(k, n0, 1), w2 = case_window(k, n0, 2), w3 = case_window(k, n0, 3),
                     w4 = case_window(k, n0, 4);
    std::vector<DisplayCheck> out;

    out.push_back(window_check(
        "C^d closed form", w1.lo, w4.hi, [&](long n) -> mpq_class { return cd_printed(n, K, M); }, [&](long n) -> mpq_class { return cd(n); },
        0));
    out.push_back(window_check(
        "C^d summand form", w1.lo, w4.hi,
        [&](long n) -> mpq_class {
            mpq_class s = 0;
            for (long j = 0; j < n0; ++j) s += cd_summand_printed(n, K, j);
            return s;
        },
        [&](long n) -> mpq_class { return cd(n); }, 0));
    out.push_back(window_check(
        "C_1", w1.lo, w1.hi, [&](long n) -> mpq_class { return c1_printed(n, K, M); }, [&](long n) -> mpq_class { return c1(n); }, 0));
    if (n0 == 0)
        out.push_back(window_check(
            "C_1 at n0=0", w1.lo, w1.hi,
            [&](long n) -> mpq_class { return pw(n, 3) / 240 + Q(3, 40) * n * n + Q(89, 240) * n + Q(1, 16); },
            [&](long n) -> mpq_class { return c1(n); }, 1));
    if (k == 1 && n0 == 1)
        out.push_back(window_check(
            "C_1 at k=1, n0=1", w1.lo, w1.hi,
            [&](long n) -> mpq_class { return pw(n, 3) / 240 - Q(9, 80) * n * n + Q(14, 15) * n - Q(35, 16); },
            [&](long n) -> mpq_class { return c1(n); }, 1));
    if (n0 >= 2 || (k >= 2 && n0 >= 1)) {
        const long x = 6 * n0 * n0 + 6 * k * n0 + 3 * n0 - 6;
        const Poly d1 = c1.derivative();
        out.push_back(point_check("C_1' at 6n0^2+6kn0+3n0-6", x,
                                  (Q(3, 20) * K - Q(1, 10)) * M * M + (Q(3, 20) * K * K - K / 40 - Q(7, 40)) * M -
                                      Q(19, 240),
                                  d1(x), 1));
        out.push_back(point_check("C_1'' vanishes at 6n0^2+6kn0+3n0-6", x, 0, d1.derivative()(x), 0));
        out.push_back(point_check("C_1 at the case 1 lower end", w1.lo,
                                  Q(9, 20) * K * pw(M, 4) + (Q(9, 10) * K * K + Q(3, 20) * K - Q(1, 3)) * pw(M, 3) +
                                      (Q(9, 20) * pw(K, 3) + Q(9, 40) * K * K + Q(15, 16) * K - Q(19, 40)) * M * M +
                                      (Q(3, 40) * pw(K, 3) + Q(19, 16) * K * K - Q(19, 80) * K - Q(793, 240)) * M +
                                      Q(1, 16),
                                  c1(w1.lo), 1));
    }

    out.push_back(window_check(
        "C_2", w2.lo, w2.hi, [&](long n) -> mpq_class { return c2_printed(n, K, M); }, [&](long n) -> mpq_class { return c2(n); }, 0));
    out.push_back(point_check("C_2 axis against the case 2 lower end", w2.lo,
                              -Q(3, 20) * K * K * M - K * K / 20 - Q(9, 20) * K * M * M - Q(7, 40) * K * M -
                                  Q(7, 20) * K - Q(3, 10) * pw(M, 3) - M * M / 5 - Q(9, 40) * M - Q(1, 10),
                              -c2.coefficient(1) - 2 * c2.coefficient(2) * w2.lo, -1));
    out.push_back(point_check("[n^2] C_2", w2.lo, K / 40 + M / 40 + Q(1, 80), c2.coefficient(2), 1));
    out.push_back(point_check(
        "C_2 at the case 2 lower end", w2.lo,
        pw(K, 3) / 30 + (Q(9, 10) * K * K + Q(3, 4) * K - Q(2, 3)) * pw(M, 3) + Q(7, 20) * K * K +
            (Q(9, 20) * pw(K, 3) + Q(9, 8) * K * K + Q(71, 80) * K - Q(49, 40)) * M * M +
            (Q(3, 8) * pw(K, 3) + Q(111, 80) * K * K + Q(7, 80) * K - Q(401, 240)) * M + Q(9, 20) * K * pw(M, 4) +
            Q(16, 15) * K - Q(49, 80),
        c2(w2.lo), 1));

    out.push_back(window_check(
        "C_3", w3.lo, w3.hi, [&](long n) -> mpq_class { return c3_printed(n, K, M); }, [&](long n) -> mpq_class { return c3(n); }, 0));
    if (k == 1 && n0 == 0)
        out.push_back(window_check(
            "C_3 at k=1, n0=0", w3.lo, w3.hi,
            [&](long n) -> mpq_class { return -pw(n, 3) / 240 + Q(1, 40) * n * n + Q(67, 240) * n - Q(51, 80); },
            [&](long n) -> mpq_class { return c3(n); }, 1));
    if (n0 >= 1 || k >= 2) {
        const Poly d3 = c3.derivative();
        out.push_back(point_check("C_3' at the case 3 lower end", w3.lo,
                                  (Q(3, 20) * K * K + Q(9, 40) * K + Q(11, 40)) * M + K * K / 10 +
                                      (Q(3, 20) * K + Q(1, 20)) * M * M + Q(17, 40) * K - Q(37, 120),
                                  d3(w3.lo), 1));
        out.push_back(point_check("C_3' at the case 3 upper end", w3.hi,
                                  (Q(3, 20) * K * K + Q(13, 40) * K - Q(11, 80)) * M + Q(3, 20) * K * K +
                                      (Q(3, 20) * K + Q(1, 20)) * M * M + Q(7, 40) * K - Q(73, 120),
                                  d3(w3.hi), 1));
        const mpq_class c3_low = Q(13, 120) * pw(K, 3) + (Q(9, 10) * K * K + Q(21, 20) * K - Q(2, 3)) * pw(M, 3) +
                                 Q(13, 16) * K * K +
                                 (Q(9, 20) * pw(K, 3) + Q(63, 40) * K * K + Q(107, 80) * K - Q(31, 40)) * M * M +
                                 (Q(21, 40) * pw(K, 3) + Q(147, 80) * K * K + Q(99, 80) * K - Q(293, 240)) * M +
                                 Q(9, 20) * K * pw(M, 4) + Q(47, 30) * K - Q(13, 8);
        const long printed_at = 6 * n0 * n0 + 6 * k * n0 + 7 * n0 + 2;
        out.push_back(point_check("C_3 at 6n0^2+6kn0+7n0+2", printed_at, c3_low, c3(printed_at), 1));
        out.push_back(point_check("C_3 at the case 3 lower end", w3.lo, c3_low, c3(w3.lo), 1));
    }

    const Poly cd1 = cn_lower_bound_poly(k, n0 + 1);
    const mpq_class m1 = n0 + 1;
    out.push_back(point_check("C^d(., n0+1) at the case 4 lower end", w4.lo,
                              (Q(9, 10) * K * K - Q(3, 20) * K - Q(1, 3)) * pw(m1, 3) +
                                  (Q(9, 20) * pw(K, 3) - Q(9, 40) * K * K + Q(15, 16) * K + Q(19, 40)) * m1 * m1 +
                                  (-Q(3, 40) * pw(K, 3) + Q(19, 16) * K * K + Q(19, 80) * K - Q(793, 240)) * m1 +
                                  Q(9, 20) * K * pw(m1, 4),
                              cd1(w4.lo), 1));
    out.push_back(point_check("C^d(., n0+1) at the case 4 upper end", w4.hi,
                              (Q(9, 10) * K * K + Q(3, 20) * K - Q(1, 3)) * pw(m1, 3) +
                                  (Q(9, 20) * pw(K, 3) + Q(9, 40) * K * K + Q(15, 16) * K - Q(19, 40)) * m1 * m1 +
                                  (Q(3, 40) * pw(K, 3) + Q(19, 16) * K * K - Q(19, 80) * K - Q(793, 240)) * m1 +
                                  Q(9, 20) * K * pw(m1, 4),
                              cd1(w4.hi), 1));
    return out;
}

WindowClaims case_window_claims(long k, long n0) {
    require(k >= 1 && n0 >= 0, "case windows need k >= 1, n0 >= 0");
    WindowClaims r;
    const auto o = offsets(k, n0);
    const Poly cd = cn_lower_bound_poly(k, n0);
    const Poly cd1 = cn_lower_bound_poly(k, n0 + 1);
    const std::array<Poly, 3> bound{case_bound_poly(k, n0, 1), case_bound_poly(k, n0, 2), case_bound_poly(k, n0, 3)};
    auto fail = [&](int which, long n, const std::string& what) {
        r.failures.push_back("k=" + std::to_string(k) + " n0=" + std::to_string(n0) + " case " +
                             std::to_string(which) + " n=" + std::to_string(n) + ": " + what);
    };
    for (int which = 1; which <= 4; ++which) {
        const CaseWindow w = case_window(k, n0, which);
        for (long n = w.lo; n <= w.hi; ++n) {
            ++r.points;
            const mpz_class c = cn_evaluate(n, k);
            const mpz_class part = cn_partial(n, k, n0);
            if (c < 0) fail(which, n, "C(n) < 0");
            if (n0 >= 1 && !(cd(n) < part)) fail(which, n, "C^d(n, n0) < C(n, n0) fails");
            if (n0 == 0 && (cd(n) != 0 || part != 0)) fail(which, n, "empty partial sums differ from 0");
            if (which == 4) {
                if (c != cn_partial(n, k, n0 + 1)) fail(which, n, "C(n) != C(n, n0+1)");
                if (!(c > cd1(n))) fail(which, n, "C(n) > C^d(n, n0+1) fails");
                if (!(cd1(n) > 0)) fail(which, n, "C^d(n, n0+1) > 0 fails");
                continue;
            }
            mpz_class expect = part + p5(n - o[0]);
            if (which >= 2) expect -= p5(n - o[1]);
            if (which >= 3) expect -= p5(n - o[2]);
            if (c != expect) fail(which, n, "decomposition of C(n) fails");
            const Poly& b = bound[static_cast<size_t>(which - 1)];
            if (!(mpq_class(c) > b(n))) fail(which, n, "C(n) > C_case(n) fails");
            if (!(b(n) > 0)) fail(which, n, "C_case(n) > 0 fails");
        }
    }
    // monotonicity the argument relies on
    const CaseWindow w1 = case_window(k, n0, 1), w2 = case_window(k, n0, 2), w3 = case_window(k, n0, 3);
    if (n0 >= 2 || (k >= 2 && n0 >= 1))
        for (long n = w1.lo; n <= w1.hi; ++n)
            if (!(bound[0].derivative()(n) > 0)) fail(1, n, "C_1' > 0 fails");
    if (!(bound[1].coefficient(2) > 0 && -bound[1].coefficient(1) / (2 * bound[1].coefficient(2)) < w2.lo))
        fail(2, w2.lo, "axis of C_2 not below the window");
    if (n0 >= 1 || k >= 2)
        for (long n = w3.lo; n <= w3.hi; ++n)
            if (!(bound[2].derivative()(n) > 0)) fail(3, n, "C_3' > 0 fails");
    return r;
}

}  // namespace qtheta
