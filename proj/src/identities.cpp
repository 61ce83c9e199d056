#include "qtheta/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "qtheta/cn.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/partitions.hpp"

namespace qtheta {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

long sgn(long n) { return n % 2 == 0 ? 1 : -1; }

Series mono(Exponent e, long c, Exponent order) { return Series::monomial(e, c, order); }

Series inverse_euler(Exponent order) { return generating_function(PartitionKind::unrestricted(), order.whole()); }
Series pod_gf(Exponent order) { return generating_function(PartitionKind::pod(), order.whole()); }
Series pbar_gf(Exponent order) { return generating_function(PartitionKind::overpartition(), order.whole()); }

Series theta(QuadraticLaw law, long lo, long hi, Exponent order) {
    return theta_partial_sum(ThetaSumSpec::finite(law, lo, hi), order);
}

Series& fin(Series& s, int sign, Exponent base, long n, Exponent step = 1) {
    return times(s, Pochhammer::finite(sign, base, n, step));
}
Series& dfin(Series& s, int sign, Exponent base, long n, Exponent step = 1) {
    return divide(s, Pochhammer::finite(sign, base, n, step));
}
Series& inf(Series& s, int sign, Exponent base, Exponent step = 1) {
    return times(s, Pochhammer::infinite(sign, base, step));
}
Series& dinf(Series& s, int sign, Exponent base, Exponent step = 1) {
    return divide(s, Pochhammer::infinite(sign, base, step));
}

Series from_coefficients(const std::vector<mpz_class>& c, long from, Exponent order) {
    std::vector<Term> terms;
    for (long n = from; n < static_cast<long>(c.size()) && Exponent(n) <= order; ++n)
        if (c[static_cast<size_t>(n)] != 0) terms.push_back({n, c[static_cast<size_t>(n)]});
    return make_series(terms, 1, order);
}

// ---------------------------------------------------------------- registry

struct Builder;

struct Ctx {
    const RegistryEntry& e;
    Params p;
    std::map<std::string, std::string> mono_text;
    Exponent N;
    CheckList out;
    std::optional<Series> lhs;

    long operator[](const std::string& name) const { return param(p, name); }

    std::optional<Monomial> monomial_or_inf(const std::string& name) const {
        auto it = mono_text.find(name);
        if (it == mono_text.end()) throw InvalidParameter(e.id + " takes no monomial " + name);
        try {
            return parse_monomial(it->second);
        } catch (const InvalidParameter& err) {
            throw InvalidParameter("--" + name + ": " + err.what());
        }
    }
    Monomial monomial(const std::string& name) const {
        auto m = monomial_or_inf(name);
        require(m.has_value(), e.id + ": " + name + " cannot be infinite here");
        return *m;
    }
    std::vector<Monomial> monomial_list(const std::string& name, long k) const {
        auto it = mono_text.find(name);
        if (it == mono_text.end()) throw InvalidParameter(e.id + " takes no monomial " + name);
        std::vector<Monomial> v;
        std::stringstream ss(it->second);
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto m = parse_monomial(part);
            require(m.has_value(), name + " entries must be finite");
            v.push_back(*m);
        }
        require(static_cast<long>(v.size()) >= k, name + " needs at least k = " + std::to_string(k) + " entries");
        v.resize(static_cast<size_t>(k));
        return v;
    }

    void add(const std::string& label, const Series& l, const Series& r, std::optional<Exponent> upto = {}) {
        if (!lhs) lhs = l;
        out.add(label, l, r, upto.value_or(N));
    }
    void merge(const CheckList& c) {
        for (const auto& item : c.items) out.items.push_back(item);
    }
};

using BuildFn = std::function<void(Ctx&)>;

struct Entry {
    RegistryEntry info;
    BuildFn build;
};

// ----------------------------------------------------------- background

void eq_1_1(Ctx& c) {
    c.add("bilateral pentagonal sum = (q;q)_inf",
          theta_partial_sum(ThetaSumSpec::bilateral(QuadraticLaw::pentagonal()), c.N),
          pochhammer(Pochhammer::infinite(1, 1), c.N));
}

void shanks(Ctx& c) {
    const long k = c["k"];
    require(k >= 1, "shanks needs k >= 1");
    c.add("finite theta = finite sum", theta(QuadraticLaw::pentagonal(), -k, k, c.N), single_sum_rhs("shanks", c.p, c.N));
}

void eq_1_3(Ctx& c) {
    const long k = c["k"];
    require(k >= 1, "eq-1.3 needs k >= 1");
    c.add("lhs = rhs", theta(QuadraticLaw::pentagonal(), -k, k - 1, c.N) * inverse_euler(c.N),
          single_sum_rhs("eq-1.3", c.p, c.N));
}

Series mk_series(long k, long upto) {
    std::vector<Term> terms;
    for (long n = 1; n <= upto; ++n) {
        mpz_class v = mk_statistic(n, k);
        if (v != 0) terms.push_back({n, v});
    }
    return make_series(terms, 1, upto);
}

void eq_1_4(Ctx& c) {
    const long k = c["k"];
    require(k >= 1, "eq-1.4 needs k >= 1");
    const long upto = std::min<long>(c.N.whole(), kBruteForceCeiling);
    const PartitionTable p = build_table(PartitionKind::unrestricted(), upto);
    std::vector<Term> terms;
    for (long n = 1; n <= upto; ++n) {
        mpz_class s = 0;
        for (long j = 0; j < k; ++j)
            s += sgn(j) * (p(n - j * (3 * j + 1) / 2) - p(n - j * (3 * j + 5) / 2 - 1));
        s *= sgn(k - 1);
        if (s != 0) terms.push_back({n, s});
    }
    const Series mk = mk_series(k, upto);
    c.add("p-table sum = M_k", make_series(terms, 1, upto), mk, Exponent(upto));
    Series tail = single_sum_rhs("eq-1.3", c.p, upto) - Series::one(upto);
    c.add("sign-corrected tail of the truncated pentagonal form = M_k", tail * sgn(k - 1), mk, Exponent(upto));
}

void eq_1_7(Ctx& c) {
    Series l = pochhammer(Pochhammer::infinite(1, 2, 2), c.N);
    dinf(l, -1, 1, 2);
    std::vector<Term> terms;
    for (long n = 0; Exponent(n * (n + 1) / 2) <= c.N; ++n) terms.push_back({n * (n + 1) / 2, sgn(n * (n + 1) / 2)});
    c.add("product = triangular sum", l, make_series(terms, 1, c.N));
}

void eq_1_8(Ctx& c) {
    Series l = pochhammer(Pochhammer::infinite(1, 1), c.N);
    dinf(l, -1, 1);
    std::vector<Term> terms{{0, 1}};
    for (long n = 1; Exponent(n * n) <= c.N; ++n) terms.push_back({n * n, 2 * sgn(n)});
    c.add("product = square sum", l, make_series(terms, 1, c.N));
}

void triangular_display(Ctx& c, const std::string& id) {
    const long k = c["k"];
    require(k >= 1, id + " needs k >= 1");
    c.add("lhs = rhs", theta(QuadraticLaw::triangular(), -k, k - 1, c.N) * pod_gf(c.N), single_sum_rhs(id, c.p, c.N));
}

void square_display(Ctx& c, const std::string& id) {
    const long k = c["k"];
    require(k >= 1, id + " needs k >= 1");
    c.add("lhs = rhs", theta(QuadraticLaw::square(), -k, k, c.N) * pbar_gf(c.N), single_sum_rhs(id, c.p, c.N));
}

void xyz_display(Ctx& c) {
    const long k = c["k"];
    require(k >= 1, "xyz-display needs k >= 1");
    Series s = Series::zero(c.N);
    for (long n = 0; n < k; ++n) {
        Series t = mono(n * n + n, sgn(n), c.N);
        t.times_binomial(1, n + 1);
        t.times_binomial(1, n + 1);
        s += t;
    }
    c.add("lhs = rhs", s * pbar_gf(c.N), single_sum_rhs("xyz-display", c.p, c.N));
}

void eq_agb(Ctx& c) {
    const long k = c["k"], i = c["i"];
    require(k >= 1 && 1 <= i && i <= k, "eq-agb needs k >= 1, 1 <= i <= k");
    c.add("multisum = product", agb_multisum(k, i, c.N), jtp_product(2 * k + 1, i, c.N) * inverse_euler(c.N));
}

// ----------------------------------------------------------- main theorems

void thm_1_2(Ctx& c) {
    const long k = c["k"], i = c["i"], l = c["l"];
    require(k >= 1 && 0 <= i && i <= k && l >= 0, "thm-1.2 needs k >= 1, 0 <= i <= k, l >= 0");
    Series lhs = theta(QuadraticLaw::odd_basis(k, i), -l, l - 1, c.N) * invert(jtp_product(2 * k + 1, i + 1, c.N));
    c.add("lhs = rhs", lhs, ag_multisum_rhs(k, i, l, c.N));
    if (l == 0) {
        const long ip = std::min(i + 1, k);
        c.add("l = 0: Andrews-Gordon sum = product", agb_multisum(k, ip, c.N),
              jtp_product(2 * k + 1, i + 1, c.N) * inverse_euler(c.N));
    }
}

void thm_1_3(Ctx& c) {
    const long l = c["l"];
    require(l >= 1, "thm-1.3 needs l >= 1");
    Series lhs = theta(QuadraticLaw::pentagonal(), -l, l - 1, c.N) * inverse_euler(c.N);
    c.add("lhs = rhs", lhs, single_sum_rhs("thm-1.3", c.p, c.N));
    c.add("lhs = odd-basis multisum at k = 1, i = 0", lhs, ag_multisum_rhs(1, 0, l, c.N));
}

void thm_1_4(Ctx& c) {
    const long l = c["l"];
    require(l >= 1, "thm-1.4 needs l >= 1");
    c.add("lhs = rhs", theta(QuadraticLaw::triangular(), -l + 1, l, c.N) * pod_gf(c.N),
          single_sum_rhs("thm-1.4", c.p, c.N));
}

void square_theorem(Ctx& c, const std::string& id) {
    const long l = c["l"];
    require(l >= 1, id + " needs l >= 1");
    c.add("lhs = rhs", theta(QuadraticLaw::square(), -l + 1, l, c.N) * pbar_gf(c.N), single_sum_rhs(id, c.p, c.N));
}

void thm_3_2(Ctx& c) {
    const long k = c["k"], i = c["i"], l = c["l"];
    require(k >= 2 && 1 <= i && i <= k - 1 && l >= 1, "thm-3.2 needs k >= 2, 1 <= i <= k-1, l >= 1");
    Series lhs = theta(QuadraticLaw::even_basis(k, i), -l + 1, l - 1, c.N) * invert(jtp_product(2 * k, k - i, c.N));
    c.add("lhs = rhs", lhs, even_multisum_rhs(k, i, l, c.N));
}

// Twice the left side of the even-basis limit, m_1 summed through the regularised inner sum.
Series cor_3_3_twice_lhs(long k, long i, Exponent N) {
    std::vector<long> c1(static_cast<size_t>(k - 1));
    for (long j = 2; j <= k; ++j) c1[static_cast<size_t>(j - 2)] = j <= i ? 1 : 2;
    const long offset = k - std::max<long>(i, 1);
    Series acc = Series::zero(N);
    if (offset > N.whole()) return acc;
    std::map<long, Series> g;
    for_each_chain(c1, N.whole() - offset, [&](std::span<const long> M, long cost) {
        const long m2 = M[0] + 1;
        auto it = g.find(m2 - 1);
        if (it == g.end()) it = g.emplace(m2 - 1, twice_g(m2 - 1, N)).first;
        Series t = mono(cost + offset, sgn(m2), N);
        fin(t, 1, 2, m2 - 1, 2);
        for (size_t j = 0; j + 1 < M.size(); ++j) dfin(t, 1, 1, M[j] - M[j + 1]);
        dfin(t, 1, 1, M.back() + 1);
        dfin(t, 1, 1, M.back());
        acc += t * it->second;
    });
    return acc;
}

void cor_3_3(Ctx& c, bool regularized) {
    const long k = c["k"], i = c["i"];
    require(k >= 2 && 1 <= i && i <= k, c.e.id + " needs k >= 2, 1 <= i <= k");
    Series lhs = cor_3_3_twice_lhs(k, i, c.N);
    if (!regularized) {
        c.add("2 lhs = product", lhs, single_sum_rhs("cor-3.3", c.p, c.N));
    } else {
        Series rhs = (i == k ? Series::zero(c.N) : jtp_product(2 * k, k - i, c.N)) - Series::one(c.N);
        c.add("2 lhs = product - 1", lhs, rhs);
    }
}

void bressoud_even(Ctx& c) {
    const long k = c["k"], i = c["i"];
    require(k >= 2 && 1 <= i && i <= k, "bressoud-even needs k >= 2, 1 <= i <= k");
    c.add("multisum = product", bressoud_even_multisum(k, i, c.N), single_sum_rhs("bressoud-even", c.p, c.N));
}

// ----------------------------------------------------------- classical chains

Series am_tail(long l, Exponent N) {
    Series acc = Series::zero(N);
    for (long n = 1; Exponent(l * (l - 1) / 2 + (l + 1) * n) <= N; ++n) {
        Series t = mono(l * (l - 1) / 2 + (l + 1) * n, 1, N);
        dfin(t, 1, 1, n);
        acc += t * gauss_binomial(n - 1, l - 1, 1, N);
    }
    return acc;
}

void thm_4_1(Ctx& c) {
    const long l = c["l"];
    require(l >= 1, "thm-4.1 needs l >= 1");
    c.add("Andrews-Merca tail = odd-basis tail", am_tail(l, c.N), classical_tail("thm-1.3", l, c.N));
}

void thm_4_1_steps(Ctx& c) {
    const long l = c["l"];
    require(l >= 1, "thm-4.1-steps needs l >= 1");
    const Exponent N = c.N;
    const long pre = (3 * l * l + l) / 2;
    Series e1 = classical_tail("thm-1.3", l, N);

    Series e2 = Series::zero(N);
    for (long n = 0; Exponent(pre + (2 * l + 1) * n + n * n) <= N; ++n) {
        Series t = mono(pre + (2 * l + 1) * n + n * n, 1, N);
        fin(t, 1, l, n);
        dfin(t, 1, 1, n);
        dfin(t, 1, 2 * l + 1, n);
        dfin(t, 1, l + 1, n);
        e2 += t;
    }
    dfin(e2, 1, 1, 2 * l);

    Series e3 = Series::zero(N);
    for (long n = 0; Exponent(pre + (2 * l + 1) * n + n * (n - 1) / 2) <= N; ++n) {
        Series t = mono(pre + (2 * l + 1) * n + n * (n - 1) / 2, sgn(n), N);
        fin(t, 1, 1, n);
        dfin(t, 1, 1, n);
        dfin(t, 1, l + 1, n);
        e3 += t;
    }
    dfin(e3, 1, 1, 2 * l);
    dinf(e3, 1, 2 * l + 1);

    Series e4 = Series::zero(N);
    for (long n = 0; Exponent(pre + (l + 1) * n) <= N; ++n) {
        Series t = mono(pre + (l + 1) * n, 1, N);
        fin(t, 1, l, n);
        dfin(t, 1, 1, n);
        dfin(t, 1, l + 1, n);
        e4 += t;
    }
    inf(e4, 1, l + 1);
    dinf(e4, 1, 1);

    Series e5 = am_tail(l, N);
    c.add("tail = (q)_2l-normalised sum", e1, e2);
    c.add("3phi2 step", e2, e3);
    c.add("Heine step", e3, e4);
    c.add("shift n -> n - l", e4, e5);
}

void thm_4_5_steps(Ctx& c, bool printed) {
    const long l = c["l"];
    require(l >= 1, c.e.id + " needs l >= 1");
    const Exponent N = c.N;
    const long pre = l * l;
    auto front = [&](Series s, long lower) -> Series {
        s.shift(pre);
        fin(s, -1, 1, l);
        dfin(s, 1, 1, lower);
        return s;
    };

    Series f1 = Series::zero(N);
    for (long n = 0; Exponent(pre + (l + 1) * n + n * (n - 1) / 2) <= N; ++n) {
        Series t = mono(pre + (l + 1) * n + n * (n - 1) / 2, 1, N);
        fin(t, -1, 1, n + l);
        t.times_binomial(1, l);
        dfin(t, 1, 1, n);
        dfin(t, 1, 1, n + 2 * l);
        t.divide_binomial(1, n + l);
        f1 += t;
    }

    Series f2 = Series::zero(N);
    const long extra = printed ? pre : 0;
    for (long n = 0; Exponent(extra + (l + 1) * n + n * (n - 1) / 2) <= N; ++n) {
        Series t = mono(extra + (l + 1) * n + n * (n - 1) / 2, 1, N);
        fin(t, -1, l + 1, n);
        fin(t, 1, l, n);
        dfin(t, 1, 1, n);
        dfin(t, 1, 2 * l + 1, n);
        dfin(t, 1, l + 1, n);
        f2 += t;
    }
    f2 = front(f2, 2 * l);
    if (printed) {
        c.add("first step with the summand as displayed", f1, f2);
        return;
    }

    Series f3 = Series::zero(N);
    for (long n = 0; Exponent((l + 1) * n) <= N; ++n) {
        Series t = mono((l + 1) * n, sgn(n), N);
        fin(t, -1, l, n);
        fin(t, -1, 0, n);
        dfin(t, -1, l + 1, n);
        dfin(t, 1, 1, n);
        f3 += t;
    }
    inf(f3, -1, l + 1);
    inf(f3, -1, l + 1);
    dinf(f3, 1, l + 1);
    dinf(f3, 1, 2 * l + 1);
    f3 = front(f3, 2 * l);

    Series f4 = Series::zero(N);
    for (long n = 0; Exponent(l * n) <= N; ++n) {
        Series t = mono(l * n, 1, N);
        fin(t, 1, l + 1, n);
        dfin(t, -1, l + 1, n);
        f4 += t;
    }
    inf(f4, -1, l + 1);
    inf(f4, -1, l + 1);
    dinf(f4, 1, l + 1);
    dinf(f4, 1, 2 * l + 1);
    inf(f4, 1, l);
    dinf(f4, -1, l + 1);
    f4 = front(f4, 2 * l);

    Series f5 = Series::zero(N);
    for (long n = 0; Exponent(l * n) <= N; ++n) {
        Series t = mono(l * n, 1, N);
        inf(t, -1, n + l + 1);
        dinf(t, 1, n + l + 1);
        f5 += t;
    }
    f5 = front(f5, l - 1);

    c.add("square-number tail = first rewrite", classical_tail("thm-1.5", l, N), f1);
    c.add("(q)_2l-normalised sum", f1, f2);
    c.add("3phi2 step", f2, f3);
    c.add("Heine step", f3, f4);
    c.add("telescoped product", f4, f5);
    c.add("last form = second square-number truncation", Series::one(N) + f5 * sgn(l - 1),
          single_sum_rhs("thm-4.5", c.p, N));
}

// ----------------------------------------------------------- regular partitions

// sum_{j>=0} (-1)^j q^((3j^2+6jk+j)/2) (1 - q^(2j+2k+1)), through q^N
Series p5_numerator(long k, Exponent N) {
    std::vector<Term> terms;
    for (long j = 0; Exponent((3 * j * j + 6 * j * k + j) / 2) <= N; ++j) {
        const long e = (3 * j * j + 6 * j * k + j) / 2;
        terms.push_back({e, sgn(j)});
        if (Exponent(e + 2 * j + 2 * k + 1) <= N) terms.push_back({e + 2 * j + 2 * k + 1, -sgn(j)});
    }
    return make_series(terms, 1, N);
}

Series regular_product(long ell, Exponent N) { return pochhammer(Pochhammer::infinite(1, ell, ell), N); }

void thm_5_2_steps(Ctx& c) {
    const long k = c["k"], ell = c["l"];
    require(k >= 1 && ell >= 1, "thm-5.2-steps needs k >= 1, l >= 1");
    const Exponent N = c.N;
    const long pre = (3 * k * k + k) / 2;
    const Series Ql = regular_product(ell, N), P = inverse_euler(N);

    Series g1 = (Ql - Ql * P * theta(QuadraticLaw{3, -1}, -k + 1, k, N)) * sgn(k);

    std::vector<Term> tails;
    auto pent = [](long j) { return j * (3 * j - 1) / 2; };
    for (long j = k + 1; Exponent(pent(j)) <= N; ++j) tails.push_back({pent(j), sgn(j)});
    for (long j = -k; Exponent(pent(j)) <= N; --j) tails.push_back({pent(j), sgn(j)});
    Series g2 = Ql * P * make_series(tails, 1, N) * sgn(k);

    Series g3 = Ql * P * p5_numerator(k, N);
    g3.shift(pre);

    Series g4 = Ql * p5_series(k, N);
    g4.divide_binomial(1, 3);
    dinf(g4, 1, 6);
    g4.shift(pre);

    c.add("tails of the bilateral sum", g1, g2);
    c.add("j -> -j - k and j -> j + k + 1", g2, g3);
    c.add("p5 factorisation", g3, g4);
}

Series conj_strong_series(long R, long S, long k, Exponent N) {
    std::vector<Term> terms;
    for (long j = k;; ++j) {
        const long base = R * j * (j + 1) / 2;
        if (j > k && Exponent(base - S * j) > N) break;
        const long s = sgn(j) * sgn(k);
        if (Exponent(base - S * j) <= N) terms.push_back({base - S * j, s});
        if (Exponent(base + (j + 1) * S) <= N) terms.push_back({base + (j + 1) * S, -s});
    }
    Series s = make_series(terms, 1, N);
    dinf(s, 1, S, R);
    dinf(s, 1, R - S, R);
    return s;
}

void thm_1_6_steps(Ctx& c) {
    const long k = c["k"], S = c["S"];
    require(k >= 1 && S >= 1, "thm-1.6-steps needs k >= 1, S >= 1");
    const Exponent N = c.N;
    const long pre = (3 * k * k + k) / 2;
    const Series num = p5_numerator(k, N);

    Series h1 = regular_product(3, N) * inverse_euler(N) * num;
    h1.shift(pre);

    Series h2 = p5_series(k, N);
    dinf(h2, 1, 7, 3);
    dinf(h2, 1, 8, 3);
    h2.shift(pre);

    Series h3 = num;
    dinf(h3, 1, 1, 3);
    dinf(h3, 1, 2, 3);
    h3.shift(pre);

    std::vector<Term> split;
    for (long j = 0; Exponent((3 * j * j + 6 * j * k + j) / 2) <= N; ++j) {
        split.push_back({(3 * j * j + 6 * j * k + j) / 2, sgn(j)});
        const long e2 = (3 * j * j + 6 * j * k + 5 * j + 4 * k + 2) / 2;
        if (Exponent(e2) <= N) split.push_back({e2, -sgn(j)});
    }
    Series h4 = make_series(split, 1, N);
    dinf(h4, 1, 1, 3);
    dinf(h4, 1, 2, 3);
    h4.shift(pre);

    std::vector<Term> strong;
    for (long j = k; Exponent(3 * j * (j + 1) / 2 - j) <= N; ++j) {
        strong.push_back({3 * j * (j + 1) / 2 - j, sgn(j) * sgn(k)});
        if (Exponent(3 * j * (j + 1) / 2 + j + 1) <= N) strong.push_back({3 * j * (j + 1) / 2 + j + 1, -sgn(j) * sgn(k)});
    }
    Series h5 = make_series(strong, 1, N);
    dinf(h5, 1, 1, 3);
    dinf(h5, 1, 2, 3);

    c.add("l = 3 form = p5 form", h1, h2);
    c.add("(q^7,q^8;q^3) with the p5 denominator", h2, h3);
    c.add("split numerator", h3, h4);
    c.add("reindexed as the strong truncation at R = 3", h4, h5);
    c.add("q -> q^S against the strong truncation at R = 3S", h5.dilated(static_cast<int>(S)),
          conj_strong_series(3 * S, S, k, N));
}

Series indicator_series(Exponent N) {
    std::vector<Term> terms;
    for (long n = 0; Exponent(n) <= N; ++n)
        if (int v = recurrence_indicator(n)) terms.push_back({n, v});
    return make_series(terms, 1, N);
}

void merca_recurrence(Ctx& c) {
    const long n_max = c.N.whole();
    Series b6 = generating_function(PartitionKind::regular(6), n_max);
    const Series ind = indicator_series(c.N);
    c.add("b6 generating function times (q;q)_inf = indicator", b6 * pochhammer(Pochhammer::infinite(1, 1), c.N), ind);
    const PartitionTable t = build_table(PartitionKind::regular(6), n_max);
    std::vector<mpz_class> v(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n)
        for (long j = -n_max; j <= n_max; ++j) {
            const long e = j * (3 * j - 1) / 2;
            if (e <= n) v[static_cast<size_t>(n)] += sgn(j) * t(n - e);
        }
    c.add("alternating b6 table sum = indicator", from_coefficients(v, 0, c.N), ind);
}

void bm_mk_bridge(Ctx& c) {
    const long k = c["k"];
    require(k >= 1, "bm-mk-bridge needs k >= 1");
    const long upto = std::min<long>(c.N.whole(), 6 * kBruteForceCeiling);
    const PartitionTable b6 = build_table(PartitionKind::regular(6), upto);
    const PartitionTable p = build_table(PartitionKind::unrestricted(), upto);
    std::vector<mpz_class> mk(static_cast<size_t>(upto / 6 + 1));
    for (long j = 1; j <= upto / 6; ++j) mk[static_cast<size_t>(j)] = mk_statistic(j, k);
    std::vector<mpz_class> l(static_cast<size_t>(upto + 1)), r(static_cast<size_t>(upto + 1));
    for (long n = 0; n <= upto; ++n) {
        mpz_class s = b6(n);
        for (long j = -k + 1; j <= k; ++j) s -= sgn(j) * p(n - 3 * j * (3 * j - 1));
        l[static_cast<size_t>(n)] = s * sgn(k);
        for (long j = 0; 6 * j <= n; ++j) r[static_cast<size_t>(n)] += b6(n - 6 * j) * mk[static_cast<size_t>(j)];
    }
    c.add("truncated b6 deficit = b6 * M_k convolution", from_coefficients(l, 0, upto),
          from_coefficients(r, 0, upto), Exponent(upto));
}

mpz_class p5_enumerated(long n) {
    mpz_class count = 0;
    for (long a = 0; 5 * a <= n; ++a)
        for (long b = 0; 5 * a + 4 * b <= n; ++b) count += (n - 5 * a - 4 * b) / 2 + 1;
    return count;
}

void p5_floor(Ctx& c) {
    const long n_max = c.N.whole();
    std::vector<mpz_class> floor_v, enum_v;
    for (long n = 0; n <= n_max; ++n) {
        floor_v.push_back(p5_closed_form(n));
        enum_v.push_back(p5_enumerated(n));
    }
    const Series f = from_coefficients(floor_v, 0, c.N);
    c.add("floor formula = generating function", f, generating_function(PartitionKind::p5(), n_max));
    c.add("floor formula = enumeration over parts 5, 4, 2", f, from_coefficients(enum_v, 0, c.N));
}

void p5_cn(Ctx& c) {
    const long k = c["k"];
    require(k >= 1, "eq-p5cn needs k >= 1");
    std::vector<mpz_class> v;
    for (long n = 0; n <= c.N.whole(); ++n) v.push_back(cn_evaluate(n, k));
    c.add("series of the p5 form = four-term C(n)", p5_series(k, c.N), from_coefficients(v, 0, c.N));
}

// ----------------------------------------------------------- Bailey layer

BaileyPair pick_pair(const Ctx& c) {
    const long which = c["pair"];
    const Monomial a = c.monomial("a");
    require(a.sign == 1, "a must be a positive power of q");
    if (which == 1) return BaileyPair::pair1(a.exp);
    if (which == 2) return BaileyPair::pair2(a.exp);
    if (which == 3) return BaileyPair::six_phi_five(a.exp, c.monomial("b"), c.monomial("c"));
    throw InvalidParameter("pair must be 1, 2 or 3 (the 6phi5 pair)");
}

void bailey_relation(Ctx& c, int which) {
    const long n = c["n"];
    const Monomial a = c.monomial("a");
    require(a.sign == 1, "a must be a positive power of q");
    const BaileyPair pair = which == 1   ? BaileyPair::pair1(a.exp)
                            : which == 2 ? BaileyPair::pair2(a.exp)
                                         : BaileyPair::six_phi_five(a.exp, c.monomial("b"), c.monomial("c"));
    c.merge(verify_bailey_relation(pair, n, c.N));
}

void lemma_2_1(Ctx& c) {
    LatticeCase lc;
    lc.k = c["k"];
    lc.i = c["i"];
    lc.n = c["n"];
    require(lc.k >= 1, "lemma-2.1 needs k >= 1");
    lc.rho = c.monomial_list("rho", lc.k);
    lc.sigma = c.monomial_list("sigma", lc.k);
    const BaileyPair pair = pick_pair(c);
    auto s = lattice_sides(lc, pair, c.N);
    c.add("lhs = rhs", s.first, s.second);
    if (lc.i == 0) {
        auto t = lattice_i0_sides(lc, pair, c.N);
        c.add("i = 0: aq-relative form", t.first, t.second);
        c.add("i = 0: both left sides", s.first, t.first);
    }
}

void limit_form(Ctx& c, LimitForm form) {
    LimitCase lc;
    auto get = [&](const char* name, long fallback) {
        return c.p.count(name) ? c.p.at(name) : fallback;
    };
    lc.k = get("k", 1);
    lc.i = get("i", 0);
    lc.l = get("l", 1);
    if (c.p.count("pair")) lc.pair = pick_pair(c);
    if (c.mono_text.count("rho")) lc.rho = c.monomial("rho");
    if (c.mono_text.count("sigma")) lc.sigma = c.monomial("sigma");
    c.merge(verify_limit_form(form, lc, c.N));
}

void chain_lemma(Ctx& c, ChainLemma which) {
    ChainCase cc;
    cc.pair = pick_pair(c);
    cc.rho = c.monomial("rho");
    cc.sigma = c.monomial_or_inf("sigma");
    c.merge(verify_chain_lemma(which, cc, c["n"], c.N));
}

// ----------------------------------------------------------- table

using M = std::vector<std::pair<std::string, std::string>>;

RegistryEntry info(std::string id, EntryKind kind, std::string display, std::vector<std::string> params,
                   std::string constraints, M monomials = {}) {
    return {std::move(id), kind, std::move(display), std::move(params), std::move(monomials), std::move(constraints)};
}

const std::vector<Entry>& entries() {
    using K = EntryKind;
    static const std::vector<Entry> table = [] {
        std::vector<Entry> v;
        auto id_ = [&](RegistryEntry r, BuildFn f) { v.push_back({std::move(r), std::move(f)}); };
        auto none = [](Ctx&) {};

        id_(info("eq-1.1", K::Identity, "Euler's pentagonal number theorem: (q;q)_inf as a bilateral theta sum", {}, ""),
            eq_1_1);
        id_(info("shanks", K::Identity, "Shanks' finite truncation of the pentagonal sum", {"k"}, "k >= 1"), shanks);
        id_(info("eq-1.3", K::Identity,
                 "Andrews-Merca truncated pentagonal theorem with the Gaussian binomial tail", {"k"}, "k >= 1"),
            eq_1_3);
        id_(info("eq-1.4", K::Identity,
                 "Truncated pentagonal coefficients count M_k(n), least missing part k (brute force, n <= 60)",
                 {"k"}, "k >= 1"),
            eq_1_4);
        id_(info("eq-1.7", K::Identity, "Gauss' triangular-number theta series as a product", {}, ""), eq_1_7);
        id_(info("eq-1.8", K::Identity, "Gauss' square-number theta series as a product", {}, ""), eq_1_8);
        id_(info("eq-1.9", K::Identity, "Guo-Zeng truncation of the triangular-number series (pod)", {"k"}, "k >= 1"),
            [](Ctx& c) { triangular_display(c, "eq-1.9"); });
        id_(info("eq-1.10", K::Identity, "Guo-Zeng truncation of the square-number series (overpartitions)", {"k"},
                 "k >= 1"),
            [](Ctx& c) { square_display(c, "eq-1.10"); });
        id_(info("eq-1.12", K::Identity, "Andrews-Merca Rogers-Fine truncation of the triangular-number series",
                 {"k"}, "k >= 1"),
            [](Ctx& c) { triangular_display(c, "eq-1.12"); });
        id_(info("eq-1.13", K::Identity, "Andrews-Merca Rogers-Fine truncation of the square-number series", {"k"},
                 "k >= 1"),
            [](Ctx& c) { square_display(c, "eq-1.13"); });
        id_(info("xyz-display", K::Identity,
                 "Xia-Yee-Zhao truncation with the squared factor (1-q^(n+1))^2 and overpartitions", {"k"}, "k >= 1"),
            xyz_display);
        id_(info("eq-agb", K::Identity, "Andrews-Gordon identity, (k-1)-fold sum against the product", {"k", "i"},
                 "k >= 1, 1 <= i <= k"),
            eq_agb);
        id_(info("thm-1.2", K::Identity,
                 "Truncated Jacobi triple product of Andrews-Gordon type, odd basis q^((k+1/2)j^2+(k-i-1/2)j)",
                 {"k", "i", "l"}, "k >= 1, 0 <= i <= k, l >= 0"),
            thm_1_2);
        id_(info("thm-1.3", K::Identity, "Truncated pentagonal number theorem via the Bailey lattice", {"l"}, "l >= 1"),
            thm_1_3);
        id_(info("thm-1.4", K::Identity, "Truncated triangular-number series via the Bailey lattice (pod)", {"l"},
                 "l >= 1"),
            thm_1_4);
        id_(info("thm-1.5", K::Identity, "Truncated square-number series via the Bailey lattice (overpartitions)",
                 {"l"}, "l >= 1"),
            [](Ctx& c) { square_theorem(c, "thm-1.5"); });
        id_(info("thm-3.2", K::Identity, "Truncated Jacobi triple product, even basis q^(kn^2-in)", {"k", "i", "l"},
                 "k >= 2, 1 <= i <= k-1, l >= 1"),
            thm_3_2);
        id_(info("cor-3.3", K::Identity,
                 "Even-basis limit l -> 0 as displayed: half the product (q^(k-i),q^(k+i),q^2k;q^2k)", {"k", "i"},
                 "k >= 2, 1 <= i <= k"),
            [](Ctx& c) { cor_3_3(c, false); });
        id_(info("cor-3.3-regularized", K::Identity,
                 "Even-basis limit l -> 0 with the constant term restored: half of (product - 1)", {"k", "i"},
                 "k >= 2, 1 <= i <= k"),
            [](Ctx& c) { cor_3_3(c, true); });
        id_(info("bressoud-even", K::Identity, "Bressoud's even-basis identity", {"k", "i"}, "k >= 2, 1 <= i <= k"),
            bressoud_even);
        id_(info("thm-4.1", K::Identity,
                 "Equivalence of the Bailey-lattice and Andrews-Merca tails of the truncated pentagonal theorem",
                 {"l"}, "l >= 1"),
            thm_4_1);
        id_(info("thm-4.1-steps", K::Identity,
                 "The 3phi2, Heine and shift steps between the two truncated pentagonal tails", {"l"}, "l >= 1"),
            thm_4_1_steps);
        id_(info("thm-4.5", K::Identity,
                 "Second truncated square-number series with (-q^(n+l+1))_inf/(q^(n+l+1))_inf", {"l"}, "l >= 1"),
            [](Ctx& c) { square_theorem(c, "thm-4.5"); });
        id_(info("thm-4.5-steps", K::Identity,
                 "The 3phi2 and Heine steps between the two truncated square-number series", {"l"}, "l >= 1"),
            [](Ctx& c) { thm_4_5_steps(c, false); });
        id_(info("thm-4.5-steps-printed", K::Identity,
                 "First step of the square-number chain with q^(l^2) also inside the sum, as displayed", {"l"},
                 "l >= 1"),
            [](Ctx& c) { thm_4_5_steps(c, true); });
        id_(info("thm-5.2-steps", K::Identity,
                 "Chain from the l-regular truncated pentagonal series to the p5 form (l is the modulus)",
                 {"k", "l"}, "k >= 1, l >= 1"),
            thm_5_2_steps);
        id_(info("thm-1.6-steps", K::Identity,
                 "Chain from the 3-regular p5 form to the strong truncation at R = 3S", {"k", "S"}, "k >= 1, S >= 1"),
            thm_1_6_steps);
        id_(info("eq-merca-recurrence", K::Identity,
                 "6-regular recurrence: alternating pentagonal sum of b6 is (-1)^m at n = 3m(3m-1)", {}, ""),
            merca_recurrence);
        id_(info("bm-mk-bridge", K::Identity,
                 "Truncated 6-regular deficit equals the b6 * M_k(j) convolution (brute force, n <= 360)", {"k"},
                 "k >= 1"),
            bm_mk_bridge);
        id_(info("eq-p5-floor", K::Identity, "Floor formula for partitions into parts 1, 2, 4, 5", {}, ""), p5_floor);
        id_(info("eq-p5cn", K::Identity, "p5 series coefficients as the four-term C(n) sum", {"k"}, "k >= 1"), p5_cn);

        id_(info("heine", K::Transformation, "Heine's 2phi1 transformation", {}, "a, b, c, z as +-q^e",
                 {{"a", "q"}, {"b", "q^2"}, {"c", "q^3"}, {"z", "q"}}),
            none);
        id_(info("phi32-a", K::Transformation, "First 3phi2 transformation, argument e/a", {}, "a..e as +-q^e",
                 {{"a", "q"}, {"b", "q"}, {"c", "q"}, {"d", "q^2"}, {"e", "q^3"}}),
            none);
        id_(info("phi32-b", K::Transformation, "Second 3phi2 transformation, argument b", {}, "a..e as +-q^e",
                 {{"a", "q"}, {"b", "q"}, {"c", "q"}, {"d", "q^2"}, {"e", "q^3"}}),
            none);
        id_(info("rogers-fine", K::Transformation, "Rogers-Fine identity", {}, "tau = +-q^e with e >= 1",
                 {{"alpha", "-q^2"}, {"beta", "q^3"}, {"tau", "q"}}),
            none);
        id_(info("jtpi", K::Transformation, "Jacobi triple product identity in base q^R", {"R"}, "a = +-q^e, 0 < e < R",
                 {{"a", "q"}}),
            none);

        id_(info("conj-weak", K::Scan, "Truncated Jacobi triple product nonnegativity (weak form)", {"R", "S", "l"},
                 "1 <= S < R/2, l >= 1"),
            none);
        id_(info("conj-strong", K::Scan, "Truncated Jacobi triple product nonnegativity (strong form)",
                 {"R", "S", "k"}, "1 <= S < R, k >= 1"),
            none);
        id_(info("ineq-1.6", K::Scan, "Truncated pentagonal inequality for p(n), strict from k(3k+1)/2", {"k"},
                 "k >= 1"),
            none);
        id_(info("cor-4.2", K::Scan, "Truncated pod inequality, strict from (2l+1)l", {"l"}, "l >= 1"), none);
        id_(info("cor-4.4", K::Scan, "Truncated overpartition inequality, strict from l^2", {"l"}, "l >= 1"), none);
        id_(info("ineq-1.11-pod", K::Scan, "Guo-Zeng pod inequality", {"k"}, "k >= 1"), none);
        id_(info("ineq-1.11-overpartition", K::Scan, "Guo-Zeng overpartition inequality", {"k"}, "k >= 1"), none);
        id_(info("conj-bm", K::Scan, "Ballantine-Merca truncated l-regular inequality (l = 6 strict from k(3k+1)/2)",
                 {"k", "l"}, "k >= 1, l = 3 or l >= 6 (any l >= 2 with --permissive)"),
            none);
        id_(info("thm-5.1-series", K::Scan, "Nonnegativity of the p5 series", {"k"}, "k >= 1"), none);
        id_(info("thm-5.2-factor", K::Scan, "Nonnegativity of (q^l;q^l)_inf / ((1-q^3)(q^6;q)_inf)", {"l"},
                 "l = 3 or l >= 6 (any l >= 1 with --permissive)"),
            none);

        const M pair_m{{"a", "q"}, {"b", "q^2"}, {"c", "q^3"}};
        id_(info("bailey-pair-1", K::Bailey, "Bailey pair with b = q, c = (aq)^(1/2)", {"n"}, "n >= 0", {{"a", "q^3"}}),
            [](Ctx& c) { bailey_relation(c, 1); });
        id_(info("bailey-pair-2", K::Bailey, "Bailey pair with b = q, c -> inf", {"n"}, "n >= 0", {{"a", "q"}}),
            [](Ctx& c) { bailey_relation(c, 2); });
        id_(info("bailey-6phi5", K::Bailey, "Bailey pair from the 6phi5 summation", {"n"}, "n >= 0",
                 {{"a", "q^6"}, {"b", "q^2"}, {"c", "q^3"}}),
            [](Ctx& c) { bailey_relation(c, 3); });
        id_(info("lemma-2.1", K::Bailey, "Agarwal-Andrews-Bressoud Bailey lattice, finite n",
                 {"k", "i", "n", "pair"}, "k >= 1, 0 <= i <= k, n >= 0; pair 1, 2 or 3 (6phi5 with b, c)",
                 {{"a", "q^9"}, {"b", "q^2"}, {"c", "q^3"}, {"rho", "-q,q^2,-q^3,q^4"}, {"sigma", "q^3,-q,q^2,-q^4"}}),
            lemma_2_1);
        const M limit_m{{"a", "q^7"}, {"b", "q^2"}, {"c", "q^3"}, {"rho", "q"}, {"sigma", "q^2"}};
        const M limit_r{{"a", "q^7"}, {"b", "q^2"}, {"c", "q^3"}, {"rho", "q"}};
        id_(info("even-pf", K::Bailey, "Simplified lattice, n -> inf with rho_s, sigma_s -> inf for s >= 2",
                 {"k", "i", "pair"}, "k >= 1, 0 <= i <= k", limit_m),
            [](Ctx& c) { limit_form(c, LimitForm::EvenPf); });
        id_(info("pf-12", K::Bailey, "Simplified lattice with sigma -> inf", {"k", "i", "pair"}, "k >= 1, 0 <= i <= k",
                 limit_r),
            [](Ctx& c) { limit_form(c, LimitForm::Pf12); });
        id_(info("progress-pr-1", K::Bailey, "Odd-basis lattice limit before the theta reindexing",
                 {"k", "i", "l"}, "k >= 1, 0 <= i <= k, l >= 1"),
            [](Ctx& c) { limit_form(c, LimitForm::ProgressPr1); });
        id_(info("thm-1-pf", K::Bailey, "Odd-basis lattice limit as a bilateral theta tail", {"k", "i", "l"},
                 "k >= 1, 0 <= i <= k, l >= 1"),
            [](Ctx& c) { limit_form(c, LimitForm::ThmOnePf); });
        id_(info("pf-evenmod", K::Bailey, "Even-basis lattice limit with the regularised inner sum", {"k", "i", "l"},
                 "k >= 2, 1 <= i <= k-1, l >= 1"),
            [](Ctx& c) { limit_form(c, LimitForm::PfEvenmod); });
        id_(info("pf-3-1", K::Bailey, "Lattice at i = 0 with every sigma and rho_s (s >= 2) -> inf", {"k", "pair"},
                 "k >= 1", limit_r),
            [](Ctx& c) { limit_form(c, LimitForm::Pf31); });
        id_(info("pf-2-2", K::Bailey, "Triangular-number tail after q -> q^2", {"l"}, "l >= 1"),
            [](Ctx& c) { limit_form(c, LimitForm::Pf22); });
        id_(info("squ-pf", K::Bailey, "Square-number tail from the i = 0 lattice", {"l"}, "l >= 1"),
            [](Ctx& c) { limit_form(c, LimitForm::SquPf); });
        const M chain_m{{"a", "q"}, {"b", "q^2"}, {"c", "q^3"}, {"rho", "-q"}, {"sigma", "q"}};
        id_(info("lemma-6.1", K::Bailey, "Bailey chain move relative to a", {"n", "pair"}, "n >= 0; sigma may be inf",
                 chain_m),
            [](Ctx& c) { chain_lemma(c, ChainLemma::Lemma61); });
        id_(info("lemma-6.2", K::Bailey, "Bailey lattice move a -> a/q", {"n", "pair"}, "n >= 0; sigma may be inf",
                 {{"a", "q^3"}, {"b", "q^2"}, {"c", "q^3"}, {"rho", "-q"}, {"sigma", "q"}}),
            [](Ctx& c) { chain_lemma(c, ChainLemma::Lemma62); });
        id_(info("lemma62-pf22", K::Bailey,
                 "Lattice move with rho = -a^(1/2), sigma, n -> inf, against the triangular-number tail", {"l"},
                 "l >= 1"),
            [](Ctx& c) { c.merge(lemma62_pf22(c["l"], c.N)); });
        return v;
    }();
    return table;
}

const Entry& find_entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return e;
    throw UnknownIdentity("unknown identity '" + id + "'");
}

void check_params(const RegistryEntry& e, const Params& p) {
    for (const auto& name : e.params)
        if (!p.count(name)) throw InvalidParameter(e.id + " needs --" + name);
    for (const auto& [name, value] : p)
        if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
            throw InvalidParameter(e.id + " does not take --" + name);
}

std::map<std::string, std::string> merged_monomials(const RegistryEntry& e,
                                                    const std::map<std::string, std::string>& given) {
    std::map<std::string, std::string> m;
    for (const auto& [name, def] : e.monomials) m[name] = def;
    for (const auto& [name, value] : given) {
        if (!m.count(name)) throw InvalidParameter(e.id + " does not take --" + name);
        m[name] = value;
    }
    return m;
}

}  // namespace

std::string kind_name(EntryKind k) {
    switch (k) {
        case EntryKind::Identity: return "identity";
        case EntryKind::Transformation: return "transform";
        case EntryKind::Scan: return "scan";
        case EntryKind::Bailey: return "bailey";
    }
    return "?";
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> r = [] {
        std::vector<RegistryEntry> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return r;
}

const RegistryEntry& registry_entry(const std::string& id) { return find_entry(id).info; }

// ----------------------------------------------------------- transformations

Transformation parse_transformation(const std::string& id) {
    if (id == "heine") return Transformation::Heine;
    if (id == "phi32-a") return Transformation::Phi32A;
    if (id == "phi32-b") return Transformation::Phi32B;
    if (id == "rogers-fine") return Transformation::RogersFine;
    if (id == "jtpi") return Transformation::Jtpi;
    throw UnknownIdentity("unknown transformation '" + id + "'");
}

namespace {

const Monomial kQ = Monomial::q(1);

int grain_for(std::initializer_list<Monomial> ms) {
    for (const auto& m : ms)
        if (!m.exp.integral()) return 2;
    return 1;
}

void need_numerator(const Monomial& m, const std::string& what) {
    require(m.exp >= Exponent(0), what + " = " + m.str() + " must have a nonnegative exponent");
}
void need_denominator(const Monomial& m, const std::string& what) {
    require(m.exp > Exponent(0),
            what + " = " + m.str() + " must have a positive exponent for a unit denominator");
}
void need_argument(const Monomial& m, const std::string& what) {
    require(m.exp > Exponent(0), "argument " + what + " = " + m.str() + " must have a positive exponent to converge");
}

// sum_n (nums)_n / (q, dens)_n z^n with every numerator base of exponent >= 0
Series phi(const std::vector<Monomial>& nums, const std::vector<Monomial>& dens, const Monomial& z, Exponent N,
           int grain) {
    Series acc = Series::zero(N, grain);
    for (long n = 0; z.exp * n <= N; ++n) {
        Series t = Series::monomial(z.exp * n, z.pow(n).sign, N, grain);
        for (const auto& a : nums) times_poch(t, a, n);
        divide_poch(t, kQ, n);
        for (const auto& b : dens) divide_poch(t, b, n);
        acc += t;
    }
    return acc;
}

Series& times_inf_m(Series& s, const Monomial& m) { return times(s, Pochhammer::infinite(m.sign, m.exp)); }
Series& divide_inf_m(Series& s, const Monomial& m) { return divide(s, Pochhammer::infinite(m.sign, m.exp)); }

const Monomial& get(const std::map<std::string, Monomial>& m, const std::string& name) {
    auto it = m.find(name);
    if (it == m.end()) throw InvalidParameter("missing monomial " + name);
    return it->second;
}

}  // namespace

CheckList verify_transformation(Transformation which, const std::map<std::string, Monomial>& m, Exponent order,
                                long R) {
    CheckList out;
    const Exponent N = order;
    switch (which) {
        case Transformation::Heine: {
            const Monomial a = get(m, "a"), b = get(m, "b"), c = get(m, "c"), z = get(m, "z");
            const Monomial w = a * b * z / c;
            need_numerator(a, "a");
            need_numerator(b, "b");
            need_denominator(c, "c");
            need_argument(z, "z");
            need_argument(w, "abz/c");
            need_numerator(c / a, "c/a");
            need_numerator(c / b, "c/b");
            const int g = grain_for({a, b, c, z});
            Series lhs = phi({a, b}, {c}, z, N, g);
            Series rhs = phi({c / a, c / b}, {c}, w, N, g);
            times_inf_m(rhs, w);
            divide_inf_m(rhs, z);
            out.add("2phi1 = transformed 2phi1", lhs, rhs, N);
            break;
        }
        case Transformation::Phi32A:
        case Transformation::Phi32B: {
            const Monomial a = get(m, "a"), b = get(m, "b"), c = get(m, "c"), d = get(m, "d"), e = get(m, "e");
            const Monomial x = d * e / (a * b * c);
            need_numerator(a, "a");
            need_numerator(b, "b");
            need_numerator(c, "c");
            need_denominator(d, "d");
            need_denominator(e, "e");
            need_argument(x, "de/abc");
            const int g = grain_for({a, b, c, d, e});
            Series lhs = phi({a, b, c}, {d, e}, x, N, g);
            Series rhs;
            if (which == Transformation::Phi32A) {
                need_argument(e / a, "e/a");
                need_numerator(d / b, "d/b");
                need_numerator(d / c, "d/c");
                need_denominator(d * e / (b * c), "de/bc");
                rhs = phi({a, d / b, d / c}, {d, d * e / (b * c)}, e / a, N, g);
                times_inf_m(rhs, e / a);
                times_inf_m(rhs, d * e / (b * c));
                divide_inf_m(rhs, e);
                divide_inf_m(rhs, x);
            } else {
                need_argument(b, "b");
                need_numerator(d / b, "d/b");
                need_numerator(e / b, "e/b");
                need_denominator(d * e / (a * b), "de/ab");
                need_denominator(d * e / (b * c), "de/bc");
                rhs = phi({d / b, e / b, x}, {d * e / (a * b), d * e / (b * c)}, b, N, g);
                times_inf_m(rhs, b);
                times_inf_m(rhs, d * e / (a * b));
                times_inf_m(rhs, d * e / (b * c));
                divide_inf_m(rhs, d);
                divide_inf_m(rhs, e);
                divide_inf_m(rhs, x);
            }
            out.add("3phi2 = transformed 3phi2", lhs, rhs, N);
            break;
        }
        case Transformation::RogersFine: {
            const Monomial al = get(m, "alpha"), be = get(m, "beta"), ta = get(m, "tau");
            need_numerator(al, "alpha");
            need_denominator(be, "beta");
            require(ta.exp >= Exponent(1), "tau = " + ta.str() + " needs exponent >= 1");
            const Monomial x = al * ta * kQ / be;
            need_numerator(x, "alpha tau q/beta");
            const int g = grain_for({al, be, ta});
            Series lhs = Series::zero(N, g);
            for (long n = 0; ta.exp * n <= N; ++n) {
                Series t = Series::monomial(ta.exp * n, ta.pow(n).sign, N, g);
                times_poch(t, al, n);
                divide_poch(t, be, n);
                lhs += t;
            }
            Series rhs = Series::zero(N, g);
            const Monomial bt = be * ta;
            for (long n = 0;; ++n) {
                const Exponent lead = bt.exp * n + Exponent(n * n - n);
                if (n > 1 && lead > N) break;
                if (lead > N) continue;
                Series t = Series::monomial(lead, bt.pow(n).sign, N, g);
                times_poch(t, al, n);
                times_poch(t, x, n);
                t.times_binomial((al * ta).sign, (al * ta).exp + Exponent(2 * n));
                divide_poch(t, be, n);
                divide_poch(t, ta, n + 1);
                rhs += t;
            }
            out.add("Rogers-Fine", lhs, rhs, N);
            break;
        }
        case Transformation::Jtpi: {
            const Monomial a = get(m, "a");
            require(R >= 2, "jtpi needs R >= 2");
            require(a.exp > Exponent(0) && a.exp < Exponent(R), "jtpi needs a = +-q^e with 0 < e < R");
            const int g = grain_for({a});
            std::vector<Term> terms;
            auto add = [&](long j) {
                const Exponent e = Exponent(R * j * (j - 1) / 2) + a.exp * j;
                if (e <= N) terms.push_back({e, sgn(j) * a.pow(j).sign});
            };
            for (long j = 0; Exponent(R * j * (j - 1) / 2) + a.exp * j <= N; ++j) add(j);
            for (long j = -1; Exponent(R * j * (j - 1) / 2) + a.exp * j <= N; --j) add(j);
            Series lhs = make_series(terms, g, N);
            Series rhs = Series::one(N, g);
            times(rhs, Pochhammer::infinite(a.sign, a.exp, R));
            times(rhs, Pochhammer::infinite(a.sign, Exponent(R) - a.exp, R));
            times(rhs, Pochhammer::infinite(1, R, R));
            out.add("bilateral sum = triple product", lhs, rhs, N);
            break;
        }
    }
    return out;
}

// ----------------------------------------------------------- verification

VerificationReport verify_identity(const IdentityCase& c) {
    const auto t0 = Clock::now();
    const Entry& e = find_entry(c.id);
    if (e.info.kind == EntryKind::Scan) throw InvalidParameter(c.id + " is a scan target; use scan");
    require(c.order >= Exponent(0) && c.order.integral(), "order must be a nonnegative integer");
    check_params(e.info, c.params);
    const auto mono_text = merged_monomials(e.info, c.monomials);
    VerificationReport r{c, {}, c.order, 0};
    if (e.info.kind == EntryKind::Transformation) {
        std::map<std::string, Monomial> m;
        for (const auto& [name, text] : mono_text) {
            auto v = parse_monomial(text);
            require(v.has_value(), name + " cannot be infinite in a transformation");
            m[name] = *v;
        }
        const long R = c.params.count("R") ? c.params.at("R") : 3;
        r.checks = verify_transformation(parse_transformation(c.id), m, c.order, R);
    } else {
        Ctx ctx{e.info, c.params, mono_text, c.order, {}, std::nullopt};
        e.build(ctx);
        r.checks = std::move(ctx.out);
    }
    for (const auto& item : r.checks.items) r.checked = std::min(r.checked, item.cmp.checked);
    r.elapsed_ms = ms_since(t0);
    return r;
}

Series identity_lhs(const IdentityCase& c) {
    const Entry& e = find_entry(c.id);
    require(e.info.kind == EntryKind::Identity, c.id + " has no tabulated left side; only identity entries do");
    check_params(e.info, c.params);
    Ctx ctx{e.info, c.params, merged_monomials(e.info, c.monomials), c.order, {}, std::nullopt};
    e.build(ctx);
    require(ctx.lhs.has_value(), c.id + " produced no series");
    return *ctx.lhs;
}

// ----------------------------------------------------------- scans

namespace {

struct ScanSeries {
    std::vector<mpz_class> coeff;  // index n = 0 .. n_max
    std::vector<long> laurent;     // negative exponents with a nonzero coefficient
    long from = 0;
    std::optional<long> threshold;
};

std::vector<mpz_class> series_coefficients(const Series& s, long n_max, std::vector<long>* laurent = nullptr) {
    std::vector<mpz_class> v(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) v[static_cast<size_t>(n)] = s.coefficient(n);
    if (laurent)
        for (long u = s.min_units(); u < 0; ++u)
            if (s.at_units(u) != 0) laurent->push_back(u);
    return v;
}

std::vector<mpz_class> signed_table_sum(PartitionKind kind, long n_max, long lo, long hi,
                                        const std::function<long(long)>& offset, long sign) {
    const PartitionTable t = build_table(kind, n_max);
    std::vector<mpz_class> v(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        mpz_class s = 0;
        for (long j = lo; j <= hi; ++j) s += sgn(j) * t(n - offset(j));
        v[static_cast<size_t>(n)] = s * sign;
    }
    return v;
}

int alpha_regular(long ell, long n) {
    if (ell == 6) return recurrence_indicator(n);
    if (n % ell != 0) return 0;
    const long m = n / ell;
    for (long j = -m - 1; j <= m + 1; ++j)
        if (j * (3 * j - 1) / 2 == m) return static_cast<int>(sgn(j));
    return 0;
}

void check_modulus(long ell, bool permissive, long lowest) {
    if (permissive)
        require(ell >= lowest, "modulus l must be >= " + std::to_string(lowest));
    else
        require(ell == 3 || ell >= 6, "l must be 3 or >= 6 (pass --permissive to explore other moduli)");
}

std::vector<mpz_class> bm_sequence(long k, long n_max, long ell) {
    const PartitionTable b = build_table(PartitionKind::regular(static_cast<int>(ell)), n_max);
    std::vector<mpz_class> v(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        mpz_class s = alpha_regular(ell, n);
        for (long j = -k + 1; j <= k; ++j) s -= sgn(j) * b(n - j * (3 * j - 1) / 2);
        v[static_cast<size_t>(n)] = s * sgn(k);
    }
    return v;
}

ScanSeries build_scan(const ScanCase& c) {
    const Entry& e = find_entry(c.id);
    if (e.info.kind != EntryKind::Scan) throw InvalidParameter(c.id + " is not a scan target; use verify");
    check_params(e.info, c.params);
    require(c.n_max >= 0, "n_max must be nonnegative");
    const long n_max = c.n_max;
    const Exponent N = n_max;
    auto p = [&](const char* name) { return param(c.params, name); };
    ScanSeries s;
    const std::string& id = c.id;
    if (id == "conj-weak") {
        const long R = p("R"), S = p("S"), l = p("l");
        require(S >= 1 && 2 * S < R && l >= 1, "conj-weak needs 1 <= S < R/2, l >= 1");
        std::vector<Term> terms;
        for (long j = 0; j < l; ++j) {
            const long e0 = R * j * (j + 1) / 2 - S * j;
            terms.push_back({e0, sgn(j)});
            terms.push_back({e0 + (2 * j + 1) * S, -sgn(j)});
        }
        Series x = make_series(terms, 1, N) * sgn(l - 1);
        x = x * invert(jtp_product(R, S, N));
        s.coeff = series_coefficients(x, n_max, &s.laurent);
        s.from = 1;
    } else if (id == "conj-strong") {
        const long R = p("R"), S = p("S"), k = p("k");
        require(S >= 1 && S < R && k >= 1, "conj-strong needs 1 <= S < R, k >= 1");
        s.coeff = series_coefficients(conj_strong_series(R, S, k, N), n_max, &s.laurent);
    } else if (id == "ineq-1.6") {
        const long k = p("k");
        require(k >= 1, "ineq-1.6 needs k >= 1");
        s.coeff = signed_table_sum(PartitionKind::unrestricted(), n_max, -k, k - 1,
                                   [](long j) { return j * (3 * j + 1) / 2; }, sgn(k - 1));
        s.from = 1;
        s.threshold = k * (3 * k + 1) / 2;
    } else if (id == "cor-4.2") {
        const long l = p("l");
        require(l >= 1, "cor-4.2 needs l >= 1");
        s.coeff = signed_table_sum(PartitionKind::pod(), n_max, -l + 1, l, [](long j) { return j * (2 * j + 1); },
                                   sgn(l - 1));
        s.from = 1;
        s.threshold = (2 * l + 1) * l;
    } else if (id == "cor-4.4") {
        const long l = p("l");
        require(l >= 1, "cor-4.4 needs l >= 1");
        s.coeff = signed_table_sum(PartitionKind::overpartition(), n_max, -l + 1, l, [](long j) { return j * j; },
                                   sgn(l - 1));
        s.from = 1;
        s.threshold = l * l;
    } else if (id == "ineq-1.11-pod") {
        const long k = p("k");
        require(k >= 1, "ineq-1.11-pod needs k >= 1");
        s.coeff = signed_table_sum(PartitionKind::pod(), n_max, -k, k - 1, [](long j) { return j * (2 * j + 1); },
                                   sgn(k - 1));
        s.from = 1;
    } else if (id == "ineq-1.11-overpartition") {
        const long k = p("k");
        require(k >= 1, "ineq-1.11-overpartition needs k >= 1");
        s.coeff = signed_table_sum(PartitionKind::overpartition(), n_max, -k, k, [](long j) { return j * j; }, sgn(k));
        s.from = 1;
    } else if (id == "conj-bm") {
        const long k = p("k"), ell = p("l");
        require(k >= 1, "conj-bm needs k >= 1");
        check_modulus(ell, c.permissive, 2);
        s.coeff = bm_sequence(k, n_max, ell);
        if (ell == 6) s.threshold = k * (3 * k + 1) / 2;
    } else if (id == "thm-5.1-series") {
        const long k = p("k");
        require(k >= 1, "thm-5.1-series needs k >= 1");
        s.coeff = series_coefficients(p5_series(k, N), n_max);
    } else if (id == "thm-5.2-factor") {
        const long ell = p("l");
        check_modulus(ell, c.permissive, 1);
        Series x = regular_product(ell, N);
        x.divide_binomial(1, 3);
        dinf(x, 1, 6);
        s.coeff = series_coefficients(x, n_max);
    } else {
        throw UnknownIdentity("no scan for '" + id + "'");
    }
    return s;
}

InequalityReport report_from(const ScanCase& c, const ScanSeries& s, Clock::time_point t0) {
    InequalityReport r;
    r.c = c;
    r.from = s.from;
    r.threshold = s.threshold;
    r.violations = s.laurent;
    for (long n = s.from; n <= c.n_max; ++n) {
        const mpz_class& v = s.coeff[static_cast<size_t>(n)];
        if (v < 0) r.violations.push_back(n);
        if (s.threshold && n >= *s.threshold && v == 0) r.strictness_failures.push_back(n);
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace

InequalityReport scan_nonnegativity(const ScanCase& c) {
    const auto t0 = Clock::now();
    return report_from(c, build_scan(c), t0);
}

InequalityReport scan_bm_conjecture(long k, long n_max, long ell, bool permissive) {
    return scan_nonnegativity({"conj-bm", {{"k", k}, {"l", ell}}, n_max, permissive});
}

std::vector<mpz_class> scan_sequence(const ScanCase& c) { return build_scan(c).coeff; }

}  // namespace qtheta
