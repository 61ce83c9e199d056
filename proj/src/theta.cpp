#include "qtheta/theta.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "qtheta/errors.hpp"

namespace qtheta {

long param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw InvalidParameter("missing parameter " + name);
    return it->second;
}

namespace {

Series mono(Exponent e, long c, Exponent order) { return Series::monomial(e, c, order); }

long sign_of(long n) { return n % 2 == 0 ? 1 : -1; }

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

Series& times_finite(Series& s, int sign, Exponent base, long n, Exponent step = 1) {
    return times(s, Pochhammer::finite(sign, base, n, step));
}

Series& divide_finite(Series& s, int sign, Exponent base, long n, Exponent step = 1) {
    return divide(s, Pochhammer::finite(sign, base, n, step));
}

Series& times_infinite(Series& s, int sign, Exponent base, Exponent step = 1) {
    return times(s, Pochhammer::infinite(sign, base, step));
}

Series& divide_infinite(Series& s, int sign, Exponent base, Exponent step = 1) {
    return divide(s, Pochhammer::infinite(sign, base, step));
}

}  // namespace

Series theta_partial_sum(const ThetaSumSpec& spec, Exponent order) {
    const QuadraticLaw& law = spec.law;
    std::vector<Term> terms;
    auto add = [&](long j) {
        const Exponent e = law.at(j);
        if (e < Exponent(0) && !spec.laurent)
            throw InvalidParameter("theta exponent " + e.str() + " at j=" + std::to_string(j) +
                                   " is negative; request Laurent support");
        if (e <= order) terms.push_back({e, spec.alternating ? sign_of(j) : 1});
    };
    if (spec.lo.has_value() != spec.hi.has_value()) throw InvalidParameter("theta range needs both ends or neither");
    if (spec.lo) {
        require(*spec.lo <= *spec.hi + 1, "theta range is reversed");
        for (long j = *spec.lo; j <= *spec.hi; ++j) add(j);
    } else {
        require(law.a > 0, "bilateral theta sum needs a positive quadratic coefficient");
        // exponents grow once j passes the vertex -b/(2a)
        for (long j = 0;; ++j) {
            if (law.at(j) > order && 2 * law.a * j + law.b > 0) break;
            add(j);
        }
        for (long j = -1;; --j) {
            if (law.at(j) > order && 2 * law.a * j + law.b < 0) break;
            add(j);
        }
    }
    bool integral = true;
    for (const auto& t : terms) integral = integral && t.exponent.integral();
    return make_series(terms, integral ? 1 : 2, order);
}

Series jtp_product(long R, long S, Exponent order) {
    require(1 <= S && S < R, "jtp product needs 1 <= S < R");
    Series s = Series::one(order);
    times_infinite(s, 1, S, R);
    times_infinite(s, 1, R - S, R);
    times_infinite(s, 1, R, R);
    return s;
}

void for_each_chain(std::span<const long> c2, std::span<const long> c1, long budget,
                    const std::function<void(std::span<const long>, long)>& visit) {
    const size_t k = c1.size();
    require(c2.size() == k, "chain coefficient lists differ in length");
    for (size_t j = 0; j < k; ++j)
        require(c2[j] > 0 || (c2[j] == 0 && c1[j] >= 0), "chain cost is unbounded below");
    if (k > 0) require(c2[0] > 0 || c1[0] > 0, "chain cost does not grow in the top index");
    auto level_cost = [&](size_t j, long x) { return c2[j] * x * x + c1[j] * x; };
    // least value of each level's cost over x >= 0, suffix-summed
    std::vector<long> rest_min(k + 1, 0);
    for (size_t j = k; j-- > 0;) {
        long m = 0;
        if (c2[j] > 0) {
            const long v = -c1[j] / (2 * c2[j]);
            for (long x : {v - 1, v, v + 1})
                if (x >= 0) m = std::min(m, level_cost(j, x));
        }
        rest_min[j] = rest_min[j + 1] + m;
    }
    std::vector<long> N(k, 0);
    std::function<void(size_t, long, long)> rec = [&](size_t j, long cap, long cost) {
        if (j == k) {
            visit(N, cost);
            return;
        }
        for (long x = 0; x <= cap; ++x) {
            const long c = cost + level_cost(j, x);
            if (c + rest_min[j + 1] > budget) {
                if (2 * c2[j] * x + c1[j] >= 0) break;
                continue;
            }
            N[j] = x;
            rec(j + 1, x, c);
        }
    };
    if (k == 0) {
        if (budget >= 0) visit(N, 0);
        return;
    }
    // the top level is uncapped; its cost alone eventually exceeds the budget
    rec(0, std::numeric_limits<long>::max() / 4, 0);
}

void for_each_chain(std::span<const long> c1, long budget,
                    const std::function<void(std::span<const long>, long)>& visit) {
    const std::vector<long> c2(c1.size(), 1);
    for_each_chain(c2, c1, budget, visit);
}

std::vector<long> chain_differences(std::span<const long> N) {
    std::vector<long> n(N.size());
    for (size_t j = 0; j < N.size(); ++j) n[j] = N[j] - (j + 1 < N.size() ? N[j + 1] : 0);
    return n;
}

Series twice_g(long M, Exponent order) {
    require(M >= 0, "2g(M) needs M >= 0");
    Series bracket = Series::one(order);
    for (long n = 1; Exponent((M + 1) * n) <= order; ++n) {
        Series t = mono((M + 1) * n, 2 * sign_of(n), order);
        times_finite(t, -1, 1, n - 1);
        divide_finite(t, 1, 1, n);
        divide_finite(t, -1, M + 1, n);
        bracket += t;
    }
    Series s = std::move(bracket);
    times_infinite(s, -1, M + 1);
    times_infinite(s, -1, M + 1);
    divide_infinite(s, -1, 1);
    return s;
}

namespace {

// k-fold sum of the odd basis form, without prefactor.
Series ag_inner_sum(long k, long i, long l, Exponent order, long shift, std::optional<long> bound) {
    std::vector<long> c1(static_cast<size_t>(k));
    for (long j = 0; j < k; ++j) c1[static_cast<size_t>(j)] = 2 * l + 1 - (j < i ? 1 : 0);
    const long budget = bound.value_or(order.whole()) - shift;
    Series acc = Series::zero(order);
    for_each_chain(c1, budget, [&](std::span<const long> N, long cost) {
        const auto n = chain_differences(N);
        const long nk = n.back();
        if (l == 0 && nk != 0) return;
        Series t = mono(cost, 1, order);
        if (l > 0) {
            t.times_binomial(1, l);
            t.divide_binomial(1, l + nk);
        }
        for (long x : n) divide_finite(t, 1, 1, x);
        divide_finite(t, 1, 1, nk + 2 * l);
        acc += t;
    });
    return acc;
}

}  // namespace

Series ag_multisum_rhs(long k, long i, long l, Exponent order, std::optional<long> bound) {
    require(k >= 1 && 0 <= i && i <= k && l >= 0, "odd basis form needs k >= 1, 0 <= i <= k, l >= 0");
    const long pre = ((2 * k + 1) * (l * l + l) - 2 * (i + 1) * l) / 2;
    Series s = ag_inner_sum(k, i, l, order, pre, bound);
    s.shift(pre);
    s.truncate(order);
    times_infinite(s, 1, 1);
    s *= invert(jtp_product(2 * k + 1, i + 1, order));
    return Series::one(order) + s * sign_of(l - 1);
}

Series even_multisum_rhs(long k, long i, long l, Exponent order, std::optional<long> bound) {
    require(k >= 2 && 1 <= i && i <= k - 1 && l >= 1, "even basis form needs k >= 2, 1 <= i <= k-1, l >= 1");
    const long pre = k * l * l - i * l;
    std::vector<long> c1(static_cast<size_t>(k - 1));
    // free indices N_2 .. N_k
    for (long j = 2; j <= k; ++j) c1[static_cast<size_t>(j - 2)] = 2 * l - (j <= i ? 1 : 0);
    const long budget = bound.value_or(order.whole()) - pre;
    std::map<long, Series> g;
    Series acc = Series::zero(order);
    for_each_chain(c1, budget, [&](std::span<const long> N, long cost) {
        const auto n = chain_differences(N);
        const long M = N[0] + l - 1;
        auto it = g.find(M);
        if (it == g.end()) it = g.emplace(M, twice_g(M, order)).first;
        Series t = mono(cost, sign_of(N[0]), order);
        times_finite(t, 1, 2, M, 2);
        t *= it->second;
        for (long x : n) divide_finite(t, 1, 1, x);
        divide_finite(t, 1, 1, n.back() + 2 * l - 1);
        acc += t;
    });
    acc.shift(pre);
    acc.truncate(order);
    acc *= invert(jtp_product(2 * k, k - i, order));
    return Series::one(order) + acc * sign_of(l - 1);
}

namespace {

Series ag_family(long k, long i, Exponent order, bool even_last) {
    std::vector<long> c1(static_cast<size_t>(k - 1));
    for (long j = 1; j <= k - 1; ++j) c1[static_cast<size_t>(j - 1)] = j >= i ? 1 : 0;
    Series acc = Series::zero(order);
    for_each_chain(c1, order.whole(), [&](std::span<const long> N, long cost) {
        const auto n = chain_differences(N);
        Series t = mono(cost, 1, order);
        for (size_t j = 0; j < n.size(); ++j) {
            if (even_last && j + 1 == n.size())
                divide_finite(t, 1, 2, n[j], 2);
            else
                divide_finite(t, 1, 1, n[j]);
        }
        acc += t;
    });
    return acc;
}

}  // namespace

Series agb_multisum(long k, long i, Exponent order) {
    require(k >= 1 && 1 <= i && i <= k, "Andrews-Gordon sum needs 1 <= i <= k");
    return ag_family(k, i, order, false);
}

Series bressoud_even_multisum(long k, long i, Exponent order) {
    require(k >= 2 && 1 <= i && i <= k, "even Bressoud sum needs k >= 2, 1 <= i <= k");
    return ag_family(k, i, order, true);
}

namespace {

Series classical_summand(const std::string& id, long l, long n, Exponent order) {
    if (id == "thm-1.3") {
        Series t = mono((2 * l + 1) * n + n * n + (3 * l * l + l) / 2, 1, order);
        t.times_binomial(1, l);
        divide_finite(t, 1, 1, n);
        divide_finite(t, 1, 1, n + 2 * l);
        t.divide_binomial(1, n + l);
        return t;
    }
    if (id == "thm-1.4") {
        Series t = mono(2 * l * n + n * n + 2 * l * l - l, 1, order);
        times_finite(t, -1, 1, n + l, 2);
        t.times_binomial(1, 2 * l);
        divide_finite(t, 1, 2, n, 2);
        divide_finite(t, 1, 2, n + 2 * l, 2);
        t.divide_binomial(1, 2 * n + 2 * l);
        return t;
    }
    if (id == "thm-1.5") {
        Series t = mono(l * n + n * (n + 1) / 2 + l * l, 1, order);
        times_finite(t, -1, 1, n + l);
        t.times_binomial(1, l);
        divide_finite(t, 1, 1, n);
        divide_finite(t, 1, 1, n + 2 * l);
        t.divide_binomial(1, n + l);
        return t;
    }
    throw UnknownIdentity("no classical tail for " + id);
}

Exponent classical_lead(const std::string& id, long l, long n) {
    if (id == "thm-1.3") return (2 * l + 1) * n + n * n + (3 * l * l + l) / 2;
    if (id == "thm-1.4") return 2 * l * n + n * n + 2 * l * l - l;
    return l * n + n * (n + 1) / 2 + l * l;
}

void check_classical(const std::string& id, long l) {
    if (id != "thm-1.3" && id != "thm-1.4" && id != "thm-1.5") throw UnknownIdentity("no classical tail for " + id);
    require(l >= 1, id + " needs l >= 1");
}

}  // namespace

Series classical_tail(const std::string& id, long l, Exponent order) {
    check_classical(id, l);
    Series acc = Series::zero(order);
    for (long n = 0; classical_lead(id, l, n) <= order; ++n) acc += classical_summand(id, l, n, order);
    return acc;
}

std::vector<Series> rewritten_tail_summands(const std::string& id, long l, Exponent order) {
    check_classical(id, l);
    std::vector<Series> out;
    const bool doubled = id == "thm-1.4";
    const long t = doubled ? 2 : 1;
    for (long n = 0; classical_lead(id, l, n) <= order; ++n) {
        // (1 - q^(tl)) / (q^t;q^t)_(n+2l) = sum_{j<l} q^(tj) / (q^(2t);q^t)_(n+2l-1)
        Series geometric = Series::zero(order);
        for (long j = 0; j < l; ++j) geometric += mono(t * j, 1, order);
        Series s = mono(classical_lead(id, l, n), 1, order);
        s *= geometric;
        if (id == "thm-1.4") times_finite(s, -1, 1, n + l, 2);
        if (id == "thm-1.5") times_finite(s, -1, 1, n + l);
        divide_finite(s, 1, t, n, t);
        divide_finite(s, 1, 2 * t, n + 2 * l - 1, t);
        s.divide_binomial(1, t * (n + l));
        out.push_back(std::move(s));
    }
    return out;
}

const std::vector<std::string>& single_sum_ids() {
    static const std::vector<std::string> ids{"thm-1.3", "thm-1.4", "thm-1.5", "thm-4.5", "eq-1.3",
                                              "eq-1.9",  "eq-1.10", "eq-1.12", "eq-1.13", "xyz-display",
                                              "cor-3.3", "bressoud-even", "shanks"};
    return ids;
}

Series single_sum_rhs(const std::string& id, const Params& p, Exponent order) {
    const auto& ids = single_sum_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw UnknownIdentity("no single-sum right side for '" + id + "'");
    const Series one = Series::one(order);
    if (id == "thm-1.3" || id == "thm-1.4" || id == "thm-1.5") {
        const long l = param(p, "l");
        return one + classical_tail(id, l, order) * sign_of(l - 1);
    }
    if (id == "thm-4.5") {
        const long l = param(p, "l");
        require(l >= 1, "thm-4.5 needs l >= 1");
        Series acc = Series::zero(order);
        for (long n = 0; Exponent(l * l + l * n) <= order; ++n) {
            Series t = mono(l * l + l * n, 1, order);
            times_infinite(t, -1, n + l + 1);
            divide_infinite(t, 1, n + l + 1);
            acc += t;
        }
        times_finite(acc, -1, 1, l);
        divide_finite(acc, 1, 1, l - 1);
        return one + acc * sign_of(l - 1);
    }
    if (id == "shanks") {
        const long k = param(p, "k");
        require(k >= 1, "shanks needs k >= 1");
        Series acc = Series::zero(order);
        for (long n = 0; n <= k; ++n) {
            Series t = mono(n * (n - 1) / 2 + (k + 1) * n, sign_of(n), order);
            times_finite(t, 1, 1, k);
            divide_finite(t, 1, 1, n);
            acc += t;
        }
        return acc;
    }
    const long k = param(p, "k");
    if (id == "eq-1.3") {
        require(k >= 1, "eq-1.3 needs k >= 1");
        Series acc = Series::zero(order);
        for (long n = 1; Exponent(k * (k - 1) / 2 + (k + 1) * n) <= order; ++n) {
            Series t = mono(k * (k - 1) / 2 + (k + 1) * n, 1, order);
            divide_finite(t, 1, 1, n);
            t *= gauss_binomial(n - 1, k - 1, 1, order);
            acc += t;
        }
        return one + acc * sign_of(k - 1);
    }
    if (id == "eq-1.9") {
        require(k >= 1, "eq-1.9 needs k >= 1");
        Series acc = Series::zero(order);
        for (long n = k; Exponent(2 * (k + 1) * n - k) <= order; ++n) {
            Series t = mono(2 * (k + 1) * n - k, 1, order);
            times_finite(t, -1, 1, k, 2);
            times_finite(t, -1, 1, n - k, 2);
            divide_finite(t, 1, 2, n, 2);
            t *= gauss_binomial(n - 1, k - 1, 2, order);
            acc += t;
        }
        return one + acc * sign_of(k - 1);
    }
    if (id == "eq-1.10") {
        require(k >= 1, "eq-1.10 needs k >= 1");
        Series acc = Series::zero(order);
        for (long n = k + 1; Exponent((k + 1) * n) <= order; ++n) {
            Series t = mono((k + 1) * n, 1, order);
            times_finite(t, -1, 1, k);
            times_finite(t, -1, 0, n - k);
            divide_finite(t, 1, 1, n);
            t *= gauss_binomial(n - 1, k, 1, order);
            acc += t;
        }
        return one + acc * sign_of(k);
    }
    if (id == "eq-1.12") {
        require(k >= 1, "eq-1.12 needs k >= 1");
        Series acc = Series::zero(order);
        for (long j = 0; Exponent(k * (2 * j + 2 * k + 1)) <= order; ++j) {
            Series t = mono(k * (2 * j + 2 * k + 1), 1, order);
            times_infinite(t, -1, 2 * k + 2 * j + 3, 2);
            divide_infinite(t, 1, 2 * k + 2 * j + 2, 2);
            acc += t;
        }
        times_finite(acc, -1, 1, k, 2);
        divide_finite(acc, 1, 2, k - 1, 2);
        return one + acc * sign_of(k - 1);
    }
    if (id == "eq-1.13") {
        require(k >= 1, "eq-1.13 needs k >= 1");
        Series acc = Series::zero(order);
        for (long j = 0; Exponent((k + 1) * (k + j + 1)) <= order; ++j) {
            Series t = mono((k + 1) * (k + j + 1), 1, order);
            times_infinite(t, -1, k + j + 2);
            t.divide_binomial(1, k + j + 1);
            divide_infinite(t, 1, k + j + 2);
            acc += t;
        }
        times_finite(acc, -1, 1, k);
        divide_finite(acc, 1, 1, k);
        return one + acc * (2 * sign_of(k));
    }
    if (id == "xyz-display") {
        require(k >= 1, "xyz-display needs k >= 1");
        Series acc = Series::zero(order);
        for (long j = 0; Exponent(k * (k + 1 + j)) <= order; ++j) {
            Series t = mono(k * (k + 1 + j), 1, order);
            times_infinite(t, -1, k + 2 + j);
            divide_infinite(t, 1, k + 2 + j);
            acc += t;
        }
        times_finite(acc, -1, 1, k);
        divide_finite(acc, 1, 1, k - 1);
        return one + acc * sign_of(k - 1);
    }
    if (id == "cor-3.3") {
        const long i = param(p, "i");
        require(k >= 2 && 1 <= i && i <= k, "cor-3.3 needs k >= 2, 1 <= i <= k");
        // twice the printed right side, to stay integral
        if (i == k) return Series::zero(order);
        return jtp_product(2 * k, k - i, order);
    }
    if (id == "bressoud-even") {
        const long i = param(p, "i");
        require(k >= 2 && 1 <= i && i <= k, "bressoud-even needs k >= 2, 1 <= i <= k");
        Series s = jtp_product(2 * k, i, order);
        divide_infinite(s, 1, 1);
        return s;
    }
    throw UnknownIdentity("no single-sum right side for '" + id + "'");
}

}  // namespace qtheta
