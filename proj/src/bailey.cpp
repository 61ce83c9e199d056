#include "qtheta/bailey.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <span>

#include "qtheta/errors.hpp"
#include "qtheta/theta.hpp"

namespace qtheta {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

int sign_of(long n) { return n % 2 == 0 ? 1 : -1; }

const Monomial kQ = Monomial::q(1);

// sign q^(h/2) as a series known through order
Series mono_h(long h, int sign, Exponent order) {
    return Series::monomial(half(h), sign, order, h % 2 == 0 ? 1 : 2);
}

long pow_sign(const Monomial& m, long p) { return m.sign < 0 ? sign_of(p) : 1; }

Series& divide_q(Series& s, long n) { return divide_poch(s, kQ, n); }

}  // namespace

Monomial Monomial::sqrt() const {
    require(sign == 1, "square root of a negative monomial");
    if (exp.halves() % 2 != 0) throw NotRepresentable("q^" + exp.str() + " has no square root at grain 2");
    return {1, half(exp.halves() / 2)};
}

std::string Monomial::str() const {
    std::string s = sign < 0 ? "-" : "";
    if (exp == Exponent(0)) return s + "1";
    if (exp == Exponent(1)) return s + "q";
    const std::string e = exp.str();
    const bool plain = e.find_first_of("/-") == std::string::npos;
    return s + "q^" + (plain ? e : "(" + e + ")");
}

std::optional<Monomial> parse_monomial(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t == "inf" || t == "oo") return std::nullopt;
    auto bad = [&]() { return InvalidParameter("cannot read monomial '" + text + "'"); };
    Monomial m;
    size_t p = 0;
    if (p < t.size() && (t[p] == '-' || t[p] == '+')) {
        if (t[p] == '-') m.sign = -1;
        ++p;
    }
    const std::string rest = t.substr(p);
    if (rest == "1") return m;
    if (rest.empty() || rest[0] != 'q') throw bad();
    if (rest == "q") {
        m.exp = 1;
        return m;
    }
    if (rest.size() < 3 || rest[1] != '^') throw bad();
    std::string e = rest.substr(2);
    if (e.front() == '(') {
        if (e.back() != ')') throw bad();
        e = e.substr(1, e.size() - 2);
    }
    try {
        size_t used = 0;
        const long num = std::stol(e, &used);
        if (used == e.size()) {
            m.exp = num;
        } else if (e.substr(used) == "/2") {
            m.exp = half(num);
        } else {
            throw bad();
        }
    } catch (const std::logic_error&) {
        throw bad();
    }
    return m;
}

Series& times_poch(Series& s, const Monomial& m, long n) {
    require(n >= 0, "Pochhammer length is negative");
    return times(s, Pochhammer::finite(m.sign, m.exp, n));
}

Series& divide_poch(Series& s, const Monomial& m, long n) {
    require(n >= 0, "Pochhammer length is negative");
    return divide(s, Pochhammer::finite(m.sign, m.exp, n));
}

Series& times_power(Series& s, const Monomial& m, long p) {
    s.shift(m.exp * p);
    if (pow_sign(m, p) < 0) s.negate();
    return s;
}

// ---- pairs

BaileyPair BaileyPair::six_phi_five(Exponent a, Monomial b, Monomial c) {
    require(a != Exponent(0), "a = 1 makes (1 - a) vanish");
    BaileyPair p;
    p.family_ = Family::SixPhiFive;
    p.a_ = a;
    p.b_ = b;
    p.c_ = c;
    return p;
}

BaileyPair BaileyPair::pair1(Exponent a) {
    require(a != Exponent(0), "a = 1 makes (1 - a) vanish");
    if (!a.integral()) throw NotRepresentable("pair 1 needs a^(1/2) at grain 2, so a must be an integer power");
    BaileyPair p;
    p.family_ = Family::Pair1;
    p.a_ = a;
    p.b_ = kQ;
    p.c_ = Monomial::q(a + 1).sqrt();
    return p;
}

BaileyPair BaileyPair::pair2(Exponent a) {
    require(a != Exponent(0), "a = 1 makes (1 - a) vanish");
    BaileyPair p;
    p.family_ = Family::Pair2;
    p.a_ = a;
    p.b_ = kQ;
    return p;
}

std::string BaileyPair::name() const {
    const std::string a = "a=" + this->a().str();
    switch (family_) {
        case Family::Pair1: return "pair1(" + a + ")";
        case Family::Pair2: return "pair2(" + a + ")";
        case Family::SixPhiFive: break;
    }
    return "6phi5(" + a + ", b=" + b_->str() + ", c=" + c_->str() + ")";
}

Series& BaileyPair::alpha(long n, Series& s) const {
    if (n < 0) return s = Series::zero(s.order(), s.grain());
    s.times_binomial(1, a_ + Exponent(2 * n));
    s.divide_binomial(1, a_);
    const Monomial a = this->a();
    switch (family_) {
        case Family::Pair2:
            times_power(s, a, n);
            s.shift(n * n - n);
            break;
        case Family::Pair1:
            if (n % 2 != 0) s.negate();
            s.shift(n * (n - 1) / 2);
            times_power(s, a.sqrt() / Monomial::q(half(1)), n);
            break;
        case Family::SixPhiFive: {
            const Monomial aq = a * kQ;
            if (n % 2 != 0) s.negate();
            s.shift(n * (n - 1) / 2);
            times_poch(s, a, n);
            times_poch(s, *b_, n);
            times_poch(s, *c_, n);
            divide_q(s, n);
            divide_poch(s, aq / *b_, n);
            divide_poch(s, aq / *c_, n);
            times_power(s, aq / (*b_ * *c_), n);
            break;
        }
    }
    return s;
}

Series& BaileyPair::beta(long n, Series& s) const {
    const Monomial a = this->a();
    divide_q(s, n);
    switch (family_) {
        case Family::Pair2:
            divide_poch(s, a, n);
            break;
        case Family::Pair1: {
            const Monomial h = a.sqrt();
            times_poch(s, h / Monomial::q(half(1)), n);
            divide_poch(s, a, n);
            divide_poch(s, h * Monomial::q(half(1)), n);
            break;
        }
        case Family::SixPhiFive: {
            const Monomial aq = a * kQ;
            times_poch(s, aq / (*b_ * *c_), n);
            divide_poch(s, aq / *b_, n);
            divide_poch(s, aq / *c_, n);
            break;
        }
    }
    return s;
}

Series BaileyPair::alpha(long n, Exponent order) const {
    Series s = Series::one(order);
    return alpha(n, s);
}

Series BaileyPair::beta(long n, Exponent order) const {
    Series s = Series::one(order);
    return beta(n, s);
}

long BaileyPair::alpha_lead_halves(long n) const {
    switch (family_) {
        case Family::Pair2: return n * a_.halves() + 2 * (n * n - n);
        case Family::Pair1: return n * (n - 1) + n * (a_.halves() / 2 - 1);
        case Family::SixPhiFive: break;
    }
    return n * (n - 1) + n * (a() * kQ / (*b_ * *c_)).exp.halves();
}

bool BaileyPair::regular() const {
    if (a_ <= Exponent(0)) return false;
    switch (family_) {
        case Family::Pair2: return true;
        case Family::Pair1: return a_ >= Exponent(1);
        case Family::SixPhiFive: break;
    }
    const Monomial aq = a() * kQ;
    return b_->exp >= Exponent(0) && c_->exp >= Exponent(0) && (aq / *b_).exp >= Exponent(1) &&
           (aq / *c_).exp >= Exponent(1) && (aq / (*b_ * *c_)).exp >= Exponent(0);
}

CheckList verify_bailey_relation(const BaileyPair& pair, long n_max, Exponent order) {
    require(n_max >= 0, "n_max must be nonnegative");
    const Monomial aq = pair.a() * kQ;
    CheckList out;
    for (long n = 0; n <= n_max; ++n) {
        auto sides = at_target(
            [&](Exponent w) {
                Series lhs = pair.beta(n, w);
                Series rhs = Series::zero(w);
                for (long j = 0; j <= n; ++j) {
                    Series t = pair.alpha(j, w);
                    divide_q(t, n - j);
                    divide_poch(t, aq, n + j);
                    rhs += t;
                }
                return Sides{lhs, rhs};
            },
            order);
        out.add("n=" + std::to_string(n), sides.first, sides.second, order);
    }
    return out;
}

// ---- lattice

namespace {

void check_case(const LatticeCase& c) {
    require(c.k >= 1, "lattice needs k >= 1");
    require(0 <= c.i && c.i <= c.k, "lattice needs 0 <= i <= k");
    require(c.n >= 0, "lattice needs n >= 0");
    require(c.rho.size() == static_cast<size_t>(c.k) && c.sigma.size() == static_cast<size_t>(c.k),
            "lattice needs k values of rho and sigma");
}

// m_0 = n >= m_1 >= ... >= m_k >= 0
void for_each_lattice_chain(const LatticeCase& c, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> m(static_cast<size_t>(c.k + 1), 0);
    m[0] = c.n;
    std::function<void(size_t)> rec = [&](size_t s) {
        if (s > static_cast<size_t>(c.k)) {
            visit(m);
            return;
        }
        long top = m[s - 1];
        if (c.strict && s == static_cast<size_t>(c.k)) --top;
        for (long x = 0; x <= top; ++x) {
            m[s] = x;
            rec(s + 1);
        }
    };
    rec(1);
}

Sides lattice_at(const LatticeCase& c, const BaileyPair& pair, Exponent w) {
    const Monomial a = pair.a();
    const Monomial aq = a * kQ;
    const size_t k = static_cast<size_t>(c.k);
    const size_t i = static_cast<size_t>(c.i);
    Series lhs = Series::zero(w);
    for_each_lattice_chain(c, [&](const std::vector<long>& m) {
        Series t = pair.beta(m[k], w);
        for (size_t s = 1; s <= k; ++s) {
            const Monomial& r = c.rho[s - 1];
            const Monomial& g = c.sigma[s - 1];
            const Monomial base = s <= i ? a : aq;
            const long d = m[s - 1] - m[s];
            times_poch(t, r, m[s]);
            times_poch(t, g, m[s]);
            divide_q(t, d);
            times_poch(t, base / (r * g), d);
            divide_poch(t, base / r, m[s - 1]);
            divide_poch(t, base / g, m[s - 1]);
            times_power(t, a, m[s]);
            if (s > i) t.shift(m[s]);
            times_power(t, r * g, -m[s]);
        }
        lhs += t;
    });

    auto upper = [&](long u) {
        Series A = pair.alpha(u, w);
        for (size_t s = i; s < k; ++s) {
            const Monomial& r = c.rho[s];
            const Monomial& g = c.sigma[s];
            times_poch(A, r, u);
            times_poch(A, g, u);
            divide_poch(A, aq / r, u);
            divide_poch(A, aq / g, u);
            times_power(A, aq / (r * g), u);
        }
        return A;
    };
    Series rhs = pair.alpha(0, w);
    divide_q(rhs, c.n);
    divide_poch(rhs, a, c.n);
    for (long t = 1; t <= c.n; ++t) {
        Series A = upper(t);
        A.divide_binomial(1, a.exp + Exponent(2 * t));
        Series B = upper(t - 1);
        B.shift(a.exp + Exponent(2 * t - 2));
        B.divide_binomial(1, a.exp + Exponent(2 * t - 2));
        Series T = A - B;
        for (size_t s = 0; s < i; ++s) {
            const Monomial& r = c.rho[s];
            const Monomial& g = c.sigma[s];
            times_poch(T, r, t);
            times_poch(T, g, t);
            divide_poch(T, a / r, t);
            divide_poch(T, a / g, t);
            times_power(T, a / (r * g), t);
        }
        T.times_binomial(1, a.exp);
        divide_q(T, c.n - t);
        divide_poch(T, a, c.n + t);
        rhs += T;
    }
    return {lhs, rhs};
}

Sides lattice_i0_at(const LatticeCase& c, const BaileyPair& pair, Exponent w) {
    const Monomial a = pair.a();
    const Monomial aq = a * kQ;
    const size_t k = static_cast<size_t>(c.k);
    Monomial all{1, 0};
    for (size_t s = 0; s < k; ++s) all = all * c.rho[s] * c.sigma[s];

    Series lhs = Series::zero(w);
    for_each_lattice_chain(c, [&](const std::vector<long>& m) {
        Series t = Series::one(w);
        long total = 0;
        for (size_t s = 1; s <= k; ++s) {
            times_poch(t, c.rho[s - 1], m[s]);
            times_poch(t, c.sigma[s - 1], m[s]);
            total += m[s];
        }
        for (size_t s = 1; s <= k; ++s) {
            const Monomial& r = c.rho[s - 1];
            const Monomial& g = c.sigma[s - 1];
            divide_q(t, m[s - 1] - m[s]);
            times_poch(t, aq / (r * g), m[s - 1] - m[s]);
            divide_poch(t, aq / r, m[s - 1]);
            divide_poch(t, aq / g, m[s - 1]);
            times_power(t, r * g, -m[s]);
        }
        times_power(t, aq, total);
        pair.beta(m[k], t);
        lhs += t;
    });

    auto part = [&](long u) {
        Series A = pair.alpha(u, w);
        for (size_t s = 0; s < k; ++s) {
            times_poch(A, c.rho[s], u);
            times_poch(A, c.sigma[s], u);
            divide_poch(A, aq / c.rho[s], u);
            divide_poch(A, aq / c.sigma[s], u);
        }
        times_power(A, aq, c.k * u);
        times_power(A, all, -u);
        return A;
    };
    Series rhs = pair.alpha(0, w);
    divide_q(rhs, c.n);
    divide_poch(rhs, a, c.n);
    for (long t = 1; t <= c.n; ++t) {
        Series A = part(t);
        A.divide_binomial(1, a.exp + Exponent(2 * t));
        Series B = part(t - 1);
        B.shift(a.exp + Exponent(2 * t - 2));
        B.divide_binomial(1, a.exp + Exponent(2 * t - 2));
        Series T = A - B;
        T.times_binomial(1, a.exp);
        divide_q(T, c.n - t);
        divide_poch(T, a, c.n + t);
        rhs += T;
    }
    return {lhs, rhs};
}

}  // namespace

Sides lattice_sides(const LatticeCase& c, const BaileyPair& pair, Exponent order) {
    check_case(c);
    return at_target([&](Exponent w) { return lattice_at(c, pair, w); }, order);
}

Sides lattice_i0_sides(const LatticeCase& c, const BaileyPair& pair, Exponent order) {
    check_case(c);
    require(c.i == 0, "the aq-relative form is the i = 0 case");
    return at_target([&](Exponent w) { return lattice_i0_at(c, pair, w); }, order);
}

// ---- limit forms

namespace {

struct FormName {
    LimitForm form;
    const char* name;
};

constexpr FormName kForms[] = {
    {LimitForm::EvenPf, "EVEN-PF"},     {LimitForm::Pf12, "PF-12"},         {LimitForm::ProgressPr1, "PROGRESS-PR-1"},
    {LimitForm::ThmOnePf, "THM-1-PF"},  {LimitForm::PfEvenmod, "PF-EVENMOD"}, {LimitForm::Pf31, "PF-3-1"},
    {LimitForm::Pf22, "PF-2-2"},        {LimitForm::SquPf, "SQU-PF"},
};

// sum over n >= n0 of sign(n) q^(e(n)/2), e convex; stops once e passes the order and keeps rising
Series one_sided(long n0, const std::function<long(long)>& e, const std::function<int(long)>& sign, Exponent w) {
    const long wh = w.halves();
    Series acc = Series::zero(w);
    for (long n = n0;; ++n) {
        const long en = e(n);
        if (en > wh) {
            if (e(n + 1) > en) break;
            continue;
        }
        acc += mono_h(en, sign(n), w);
        require(n < n0 + 10'000'000, "single sum does not terminate");
    }
    return acc;
}

// Builds sum over n >= n0 of term(n, t) where t starts as the monomial of exponent e(n)/2
// and sign(n). Stops once e(n) + lead(n) passes the order and keeps rising.
Series limit_sum(long n0, const std::function<long(long)>& e, const std::function<long(long)>& lead,
                 const std::function<int(long)>& sign, const std::function<void(long, Series&)>& rest, Exponent w) {
    const long wh = w.halves();
    Series acc = Series::zero(w);
    for (long n = n0;; ++n) {
        const long en = e(n) + lead(n);
        if (en > wh) {
            if (e(n + 1) + lead(n + 1) > en) break;
            continue;
        }
        Series t = mono_h(e(n), sign(n), w);
        rest(n, t);
        acc += t;
        require(n < n0 + 10'000'000, "limit sum does not terminate");
    }
    return acc;
}

void need_power_series(const Monomial& m, const char* what) {
    require(m.exp >= Exponent(0), std::string(what) + " must have a nonnegative exponent");
}

void need_unit(const Monomial& m, const char* what) {
    require(m.exp >= Exponent(1), std::string(what) + " must have exponent >= 1 for a convergent unit denominator");
}

Series divide_diffs(Series t, std::span<const long> m) {
    for (size_t j = 0; j + 1 < m.size(); ++j) divide_q(t, m[j] - m[j + 1]);
    return t;
}

Series times_inf(Series s, const Monomial& m) { return times(s, Pochhammer::infinite(m.sign, m.exp)); }
Series divide_inf(Series s, const Monomial& m) { return divide(s, Pochhammer::infinite(m.sign, m.exp)); }

Sides even_pf(const LimitCase& c, Exponent w) {
    const BaileyPair& P = c.pair;
    const Monomial a = P.a(), r = c.rho, g = c.sigma, rg = r * g;
    const long k = c.k, i = c.i, ah = a.exp.halves();
    std::vector<long> c2(static_cast<size_t>(k), 2), c1(static_cast<size_t>(k));
    c2[0] = 0;
    c1[0] = ah - rg.exp.halves();
    for (long j = 2; j <= k; ++j) c1[static_cast<size_t>(j - 1)] = ah - (j <= i ? 2 : 0);
    Series lhs = Series::zero(w);
    for_each_chain(c2, c1, w.halves(), [&](std::span<const long> m, long cost) {
        Series t = mono_h(cost, pow_sign(rg, m[0]), w);
        times_poch(t, r, m[0]);
        times_poch(t, g, m[0]);
        t = divide_diffs(t, m);
        P.beta(m.back(), t);
        lhs += t;
    });

    auto factors = [&](long n, Series& t) {
        times_poch(t, r, n);
        times_poch(t, g, n);
        divide_poch(t, a / r, n);
        divide_poch(t, a / g, n);
    };
    const auto sgn = [&](long n) { return static_cast<int>(pow_sign(rg, n)); };
    Series s1 = limit_sum(
        0, [&](long n) { return k * n * ah + 2 * (k - 1) * n * n + 2 * (1 - i) * n - n * rg.exp.halves(); },
        [&](long n) { return P.alpha_lead_halves(n); }, sgn,
        [&](long n, Series& t) {
            factors(n, t);
            t.divide_binomial(1, a.exp + Exponent(2 * n));
            P.alpha(n, t);
        },
        w);
    Series s2 = limit_sum(
        1,
        [&](long n) {
            return ah * (k * n + i - k + 1) + 2 * (k - 1) * n * n + 2 * (3 + i - 2 * k) * n + 2 * (k - i - 2) -
                   n * rg.exp.halves();
        },
        [&](long n) { return P.alpha_lead_halves(n - 1); }, sgn,
        [&](long n, Series& t) {
            factors(n, t);
            t.divide_binomial(1, a.exp + Exponent(2 * n - 2));
            P.alpha(n - 1, t);
        },
        w);
    Series rhs = s1 - s2;
    rhs = times_inf(rhs, a / r);
    rhs = times_inf(rhs, a / g);
    rhs = divide_inf(rhs, a / rg);
    rhs = divide_inf(rhs, a * kQ);
    return {lhs, rhs};
}

Sides pf12(const LimitCase& c, Exponent w) {
    const BaileyPair& P = c.pair;
    const Monomial a = P.a(), r = c.rho, nr = -c.rho;
    const long k = c.k, i = c.i, ah = a.exp.halves(), rh = r.exp.halves();
    std::vector<long> c2(static_cast<size_t>(k), 2), c1(static_cast<size_t>(k));
    c2[0] = 1;
    c1[0] = ah - 1 - rh;
    for (long j = 2; j <= k; ++j) c1[static_cast<size_t>(j - 1)] = ah - (j <= i ? 2 : 0);
    Series lhs = Series::zero(w);
    for_each_chain(c2, c1, w.halves(), [&](std::span<const long> m, long cost) {
        Series t = mono_h(cost, pow_sign(nr, m[0]), w);
        times_poch(t, r, m[0]);
        t = divide_diffs(t, m);
        P.beta(m.back(), t);
        lhs += t;
    });
    const auto sgn = [&](long n) { return static_cast<int>(pow_sign(nr, n)); };
    Series s1 = limit_sum(
        0, [&](long n) { return -n * rh + k * n * ah + (2 * k - 1) * n * n + (1 - 2 * i) * n; },
        [&](long n) { return P.alpha_lead_halves(n); }, sgn,
        [&](long n, Series& t) {
            times_poch(t, r, n);
            divide_poch(t, a / r, n);
            t.divide_binomial(1, a.exp + Exponent(2 * n));
            P.alpha(n, t);
        },
        w);
    Series s2 = limit_sum(
        1,
        [&](long n) {
            return -n * rh + ah * (k * n + i - k + 1) + (2 * k - 1) * n * n + (5 + 2 * i - 4 * k) * n + 2 * (k - i - 2);
        },
        [&](long n) { return P.alpha_lead_halves(n - 1); }, sgn,
        [&](long n, Series& t) {
            times_poch(t, r, n);
            divide_poch(t, a / r, n);
            t.divide_binomial(1, a.exp + Exponent(2 * n - 2));
            P.alpha(n - 1, t);
        },
        w);
    Series rhs = s1 - s2;
    rhs = times_inf(rhs, a / r);
    rhs = divide_inf(rhs, a * kQ);
    return {lhs, rhs};
}

Sides pf31(const LimitCase& c, Exponent w) {
    const BaileyPair& P = c.pair;
    const Monomial a = P.a(), r = c.rho, nr = -c.rho, aq = P.a() * kQ;
    const long k = c.k, ah = a.exp.halves(), rh = r.exp.halves();
    std::vector<long> c2(static_cast<size_t>(k), 2), c1(static_cast<size_t>(k), ah);
    c2[0] = 1;
    c1[0] = ah + 1 - rh;
    Series lhs = Series::zero(w);
    for_each_chain(c2, c1, w.halves(), [&](std::span<const long> m, long cost) {
        Series t = mono_h(cost, pow_sign(nr, m[0]), w);
        times_poch(t, r, m[0]);
        t = divide_diffs(t, m);
        P.beta(m.back(), t);
        lhs += t;
    });
    Series s1 = limit_sum(
        0, [&](long n) { return -n * rh + k * n * ah + (2 * k - 1) * n * n + n; },
        [&](long n) { return P.alpha_lead_halves(n); }, [&](long n) { return static_cast<int>(pow_sign(nr, n)); },
        [&](long n, Series& t) {
            times_poch(t, r, n);
            divide_poch(t, aq / r, n);
            t.divide_binomial(1, a.exp + Exponent(2 * n));
            P.alpha(n, t);
        },
        w);
    Series s2 = limit_sum(
        1,
        [&](long n) {
            return -(n - 1) * rh + ah * (k * n - k + 1) + (2 * k - 1) * n * n + (7 - 4 * k) * n + 2 * (k - 3);
        },
        [&](long n) { return P.alpha_lead_halves(n - 1); },
        [&](long n) { return static_cast<int>(pow_sign(nr, n - 1)); },
        [&](long n, Series& t) {
            times_poch(t, r, n - 1);
            divide_poch(t, aq / r, n - 1);
            t.divide_binomial(1, a.exp + Exponent(2 * n - 2));
            P.alpha(n - 1, t);
        },
        w);
    Series rhs = s1 - s2;
    rhs = times_inf(rhs, aq / r);
    rhs = divide_inf(rhs, aq);
    return {lhs, rhs};
}

// Left side shared by PROGRESS-PR-1 and THM-1-PF. printed: linear term m_1 + m_3 + ... + m_i.
Series progress_lhs(long k, long i, long l, bool printed, Exponent w) {
    std::vector<long> c1(static_cast<size_t>(k));
    for (long j = 1; j <= k; ++j) {
        const bool in = printed ? (j == 1 || (j >= 3 && j <= i)) : j <= i;
        c1[static_cast<size_t>(j - 1)] = 2 * l + 1 - (in ? 1 : 0);
    }
    Series lhs = Series::zero(w);
    for_each_chain(c1, w.halves() / 2, [&](std::span<const long> m, long cost) {
        Series t = Series::monomial(cost, 1, w);
        const long mk = m.back();
        t.times_binomial(1, l);
        t.divide_binomial(1, mk + l);
        t = divide_diffs(t, m);
        divide_q(t, mk);
        divide_poch(t, Monomial::q(2 * l + 1), mk);
        lhs += t;
    });
    return lhs;
}

void need_k_i_l(const LimitCase& c) {
    require(c.k >= 1 && 0 <= c.i && c.i <= c.k, "needs k >= 1, 0 <= i <= k");
    require(c.l >= 1, "needs l >= 1");
}

}  // namespace

const std::vector<std::string>& limit_form_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& f : kForms) v.emplace_back(f.name);
        return v;
    }();
    return names;
}

LimitForm parse_limit_form(const std::string& name) {
    for (const auto& f : kForms)
        if (name == f.name) return f.form;
    throw UnknownIdentity("unknown limit form " + name);
}

std::string limit_form_name(LimitForm form) {
    for (const auto& f : kForms)
        if (form == f.form) return f.name;
    return "?";
}

CheckList verify_limit_form(LimitForm form, const LimitCase& c, Exponent order) {
    CheckList out;
    const long k = c.k, i = c.i, l = c.l;
    auto pair_forms = [&]() {
        require(c.k >= 1 && 0 <= c.i && c.i <= c.k, "needs k >= 1, 0 <= i <= k");
        require(c.pair.regular(), "the pair must be a power series with unit denominators");
    };
    switch (form) {
        case LimitForm::EvenPf: {
            pair_forms();
            const Monomial a = c.pair.a();
            need_power_series(c.rho, "rho");
            need_power_series(c.sigma, "sigma");
            need_unit(a / c.rho, "a/rho");
            need_unit(a / c.sigma, "a/sigma");
            need_unit(a / (c.rho * c.sigma), "a/(rho sigma)");
            auto s = at_target([&](Exponent w) { return even_pf(c, w); }, order);
            out.add("lhs = rhs", s.first, s.second, order);
            break;
        }
        case LimitForm::Pf12: {
            pair_forms();
            need_power_series(c.rho, "rho");
            need_unit(c.pair.a() / c.rho, "a/rho");
            auto s = at_target([&](Exponent w) { return pf12(c, w); }, order);
            out.add("lhs = rhs", s.first, s.second, order);
            break;
        }
        case LimitForm::Pf31: {
            require(c.k >= 1, "needs k >= 1");
            require(c.pair.regular(), "the pair must be a power series with unit denominators");
            need_power_series(c.rho, "rho");
            need_unit(c.pair.a() * kQ / c.rho, "aq/rho");
            auto s = at_target([&](Exponent w) { return pf31(c, w); }, order);
            out.add("lhs = rhs", s.first, s.second, order);
            break;
        }
        case LimitForm::ProgressPr1: {
            need_k_i_l(c);
            Series lhs = progress_lhs(k, i, l, c.printed, order);
            auto first = [&](long n) { return (2 * l + 1) * (2 * k + 1) * n + (2 * k + 1) * n * n - 2 * (i + 1) * n; };
            auto second = [&](long n) {
                return (2 * l + 1) * ((2 * k + 1) * n + 2 * i - 2 * k + 1) + (2 * k + 1) * n * n + 2 * (i - 2 * k) * n +
                       2 * k - 2 * i - 1;
            };
            Series r1 = one_sided(0, first, sign_of, order) -
                        one_sided(1, second, [](long n) { return sign_of(n - 1); }, order);
            r1 = divide_inf(r1, Monomial::q(2 * l + 1));
            auto third = [&](long n) {
                return (2 * k + 1) * (n + l) * (n + l) + (2 * k - 2 * i - 1) * n - (2 * k + 1) * l * l;
            };
            auto fourth = [&](long n) {
                return (2 * k + 1) * (n + l) * (n + l) + (2 * i - 2 * k + 1) * n + 2 * l * (2 * i - 2 * k + 1) -
                       (2 * k + 1) * l * l;
            };
            Series r2 = one_sided(0, third, sign_of, order) + one_sided(1, fourth, sign_of, order);
            r2 = divide_inf(r2, Monomial::q(2 * l + 1));
            out.add("lhs = first right side", lhs, r1, order);
            out.add("first right side = shifted form", r1, r2, order);
            break;
        }
        case LimitForm::ThmOnePf: {
            need_k_i_l(c);
            const long pre = (2 * k + 1) * l * l + (2 * k - 2 * i - 1) * l;
            auto s = at_target(
                [&](Exponent w) {
                    Series lhs = progress_lhs(k, i, l, false, w);
                    const auto law = QuadraticLaw::odd_basis(k, i);
                    Series t = theta_partial_sum(ThetaSumSpec::bilateral(law), w) -
                               theta_partial_sum(ThetaSumSpec::finite(law, -l, l - 1), w);
                    t.shift(half(-pre));
                    t = divide_inf(t, Monomial::q(2 * l + 1));
                    return Sides{lhs, t * sign_of(l)};
                },
                order, pre / 2 + 1);
            out.add("lhs = rhs", s.first, s.second, order);
            break;
        }
        case LimitForm::PfEvenmod: {
            require(k >= 2 && 1 <= i && i <= k - 1 && l >= 1, "needs k >= 2, 1 <= i <= k-1, l >= 1");
            auto s = at_target(
                [&](Exponent w) {
                    std::vector<long> c1(static_cast<size_t>(k - 1));
                    for (long j = 2; j <= k; ++j) c1[static_cast<size_t>(j - 2)] = 2 * l - (j <= i ? 1 : 0);
                    std::map<long, Series> g;
                    Series lhs = Series::zero(w);
                    for_each_chain(c1, w.halves() / 2, [&](std::span<const long> m, long cost) {
                        const long m2 = m[0], M = l + m2 - 1;
                        auto it = g.find(M);
                        if (it == g.end()) it = g.emplace(M, twice_g(M, w)).first;
                        Series t = Series::monomial(cost, sign_of(m2), w);
                        times(t, Pochhammer::finite(1, 2 * l, m2, 2));
                        t = divide_diffs(t, m);
                        divide_q(t, m.back());
                        divide_poch(t, Monomial::q(2 * l), m.back());
                        lhs += t * it->second;
                    });
                    return Sides{lhs, Series::zero(w)};
                },
                order);
            auto pre = [&](Series x) {
                x = times_inf(x, Monomial::q(l));
                x = times_inf(x, Monomial::q(l, -1));
                x = divide_inf(x, Monomial::q(1, -1));
                return divide_inf(x, Monomial::q(2 * l));
            };
            Series r1 = one_sided(0, [&](long n) { return 2 * (k * (n * n + 2 * l * n) - i * n); }, sign_of, order) -
                        one_sided(
                            1,
                            [&](long n) { return 2 * (k * (n * n + 2 * (l - 1) * n) + i * n + (2 * l - 1) * (i - k)); },
                            sign_of, order);
            r1 = pre(r1);
            const long shift = k * l * l - i * l;
            auto r2s = at_target(
                [&](Exponent w) {
                    const auto law = QuadraticLaw::even_basis(k, i);
                    Series t = theta_partial_sum(ThetaSumSpec::bilateral(law), w) -
                               theta_partial_sum(ThetaSumSpec::finite(law, -l + 1, l - 1), w);
                    t.shift(-shift);
                    t = pre(t) * sign_of(l);
                    return Sides{t, t};
                },
                order, shift + 1);
            out.add("twice lhs = twice first right side", s.first, r1, order);
            out.add("first right side = shifted form", r1, r2s.first, order);
            break;
        }
        case LimitForm::Pf22: {
            require(l >= 1, "needs l >= 1");
            const long pre = 2 * l * l - l;
            Series sum = limit_sum(
                0, [&](long n) { return 2 * ((2 * l + 1) * n + n * (n - 1)); }, [](long) { return 0L; },
                [](long) { return 1; },
                [&](long n, Series& t) {
                    times(t, Pochhammer::finite(-1, 1, n + l, 2));
                    t.times_binomial(1, 2 * l);
                    divide(t, Pochhammer::finite(1, 2, n, 2));
                    divide(t, Pochhammer::finite(1, 2, n + 2 * l, 2));
                    t.divide_binomial(1, 2 * n + 2 * l);
                },
                order);
            sum.shift(pre);
            sum.truncate(order);
            times(sum, Pochhammer::infinite(1, 2, 2));
            divide(sum, Pochhammer::infinite(-1, 1, 2));
            const auto law = QuadraticLaw::triangular();
            Series rhs = theta_partial_sum(ThetaSumSpec::bilateral(law), order) -
                         theta_partial_sum(ThetaSumSpec::finite(law, -l + 1, l), order);
            out.add("lhs = rhs", sum, rhs * sign_of(l), order);
            break;
        }
        case LimitForm::SquPf: {
            require(l >= 1, "needs l >= 1");
            Series lhs = limit_sum(
                0, [&](long n) { return 2 * (l + 1) * n + n * (n - 1); }, [](long) { return 0L; },
                [](long) { return 1; },
                [&](long n, Series& t) {
                    times_poch(t, Monomial::q(1, -1), n + l);
                    t.times_binomial(1, l);
                    divide_q(t, n);
                    divide_q(t, n + 2 * l);
                    t.divide_binomial(1, n + l);
                },
                order);
            auto pre = [&](Series x) {
                x = times_inf(x, Monomial::q(1, -1));
                return divide_inf(x, kQ);
            };
            auto sq = [&](long n) { return 2 * (n * n + 2 * l * n); };
            Series r1 = pre(one_sided(0, sq, sign_of, order) + one_sided(1, sq, sign_of, order));
            auto r2s = at_target(
                [&](Exponent w) {
                    const auto law = QuadraticLaw::square();
                    Series t = theta_partial_sum(ThetaSumSpec::bilateral(law), w) -
                               theta_partial_sum(ThetaSumSpec::finite(law, -l + 1, l), w);
                    t.shift(-l * l);
                    t = pre(t) * sign_of(l);
                    return Sides{t, t};
                },
                order, l * l + 1);
            out.add("lhs = first right side", lhs, r1, order);
            out.add("first right side = shifted form", r1, r2s.first, order);
            break;
        }
    }
    return out;
}

// ---- chain lemmas

namespace {

// s *= (sigma)_k (X/sigma)^k, or its sigma -> inf limit (-1)^k q^(k(k-1)/2) X^k
void sigma_power(Series& s, const std::optional<Monomial>& sigma, const Monomial& X, long k) {
    if (sigma) {
        times_poch(s, *sigma, k);
        times_power(s, X / *sigma, k);
    } else {
        if (k % 2 != 0) s.negate();
        s.shift(k * (k - 1) / 2);
        times_power(s, X, k);
    }
}

// (Y/sigma)_n, which tends to 1
void times_sigma_poch(Series& s, const std::optional<Monomial>& sigma, const Monomial& Y, long n) {
    if (sigma) times_poch(s, Y / *sigma, n);
}

void divide_sigma_poch(Series& s, const std::optional<Monomial>& sigma, const Monomial& Y, long n) {
    if (sigma) divide_poch(s, Y / *sigma, n);
}

Sides lemma61_at(const ChainCase& c, long n, Exponent w) {
    const BaileyPair& P = c.pair;
    const Monomial aq = P.a() * kQ, r = c.rho;
    Series lhs = Series::zero(w);
    for (long j = 0; j <= n; ++j) {
        Series t = P.beta(j, w);
        times_sigma_poch(t, c.sigma, aq / r, n - j);
        times_poch(t, r, j);
        sigma_power(t, c.sigma, aq / r, j);
        divide_q(t, n - j);
        divide_poch(t, aq / r, n);
        divide_sigma_poch(t, c.sigma, aq, n);
        lhs += t;
    }
    Series rhs = Series::zero(w);
    for (long j = 0; j <= n; ++j) {
        Series t = P.alpha(j, w);
        times_poch(t, r, j);
        sigma_power(t, c.sigma, aq / r, j);
        divide_poch(t, aq / r, j);
        divide_sigma_poch(t, c.sigma, aq, j);
        divide_q(t, n - j);
        divide_poch(t, aq, n + j);
        rhs += t;
    }
    return {lhs, rhs};
}

// alpha'_j of the a -> a/q move, sigma possibly infinite
Series lemma62_alpha(const BaileyPair& P, const Monomial& r, const std::optional<Monomial>& sigma, long j, Exponent w) {
    const Monomial a = P.a();
    Series A = P.alpha(j, w);
    A.divide_binomial(1, a.exp + Exponent(2 * j));
    if (j >= 1) {
        Series B = P.alpha(j - 1, w);
        B.shift(a.exp + Exponent(2 * j - 2));
        B.divide_binomial(1, a.exp + Exponent(2 * j - 2));
        A -= B;
    }
    A.times_binomial(1, a.exp);
    times_poch(A, r, j);
    sigma_power(A, sigma, a / r, j);
    divide_poch(A, a / r, j);
    divide_sigma_poch(A, sigma, a, j);
    return A;
}

Sides lemma62_at(const ChainCase& c, long n, Exponent w) {
    const BaileyPair& P = c.pair;
    const Monomial a = P.a(), r = c.rho;
    const Monomial left = c.printed_left ? a * kQ / r : a / r;
    Series lhs = Series::zero(w);
    for (long j = 0; j <= n; ++j) {
        Series t = P.beta(j, w);
        times_sigma_poch(t, c.sigma, left, n - j);
        times_poch(t, r, j);
        sigma_power(t, c.sigma, a / r, j);
        divide_q(t, n - j);
        divide_poch(t, a / r, n);
        divide_sigma_poch(t, c.sigma, a, n);
        lhs += t;
    }
    Series rhs = Series::zero(w);
    for (long j = 0; j <= n; ++j) {
        Series t = lemma62_alpha(P, r, c.sigma, j, w);
        divide_q(t, n - j);
        divide_poch(t, a, n + j);
        rhs += t;
    }
    return {lhs, rhs};
}

}  // namespace

CheckList verify_chain_lemma(ChainLemma which, const ChainCase& c, long n_max, Exponent order) {
    require(n_max >= 0, "n_max must be nonnegative");
    CheckList out;
    for (long n = 0; n <= n_max; ++n) {
        auto s = at_target(
            [&](Exponent w) { return which == ChainLemma::Lemma61 ? lemma61_at(c, n, w) : lemma62_at(c, n, w); },
            order);
        out.add("n=" + std::to_string(n), s.first, s.second, order);
    }
    return out;
}

CheckList lemma62_pf22(long l, Exponent order) {
    require(l >= 1, "needs l >= 1");
    const BaileyPair P = BaileyPair::pair1(2 * l + 1);
    const Monomial a = P.a(), r = -a.sqrt(), x = a / r;
    // the limit identity at grain 2 through q^(order), which is q^(2 order) after q -> q^2
    const Exponent w = order;
    const long xh = x.exp.halves();
    Series lhs = limit_sum(
        0, [&](long j) { return j * (j - 1) + j * xh; }, [](long) { return 0L; },
        [&](long j) { return static_cast<int>(pow_sign(x, j)) * sign_of(j); },
        [&](long j, Series& t) {
            times_poch(t, r, j);
            P.beta(j, t);
        },
        w);
    Series sum = Series::zero(w);
    for (long j = 0;; ++j) {
        const long lead = j * (j - 1) + j * xh +
                          std::min<long>(P.alpha_lead_halves(j), a.exp.halves() + 4 * j - 4 + P.alpha_lead_halves(j - 1));
        if (j > 1 && lead > w.halves()) break;
        sum += lemma62_alpha(P, r, std::nullopt, j, w);
    }
    Series rhs = sum;
    times(rhs, Pochhammer::infinite(x.sign, x.exp));
    divide(rhs, Pochhammer::infinite(a.sign, a.exp));
    CheckList out;
    out.add("limit identity", lhs, rhs, order);

    const Exponent w2 = order * 2;
    Series image = lhs.dilated(2).demoted();
    Series s22 = limit_sum(
        0, [&](long n) { return 2 * ((2 * l + 1) * n + n * (n - 1)); }, [](long) { return 0L; },
        [](long) { return 1; },
        [&](long n, Series& t) {
            times(t, Pochhammer::finite(-1, 1, n + l, 2));
            t.times_binomial(1, 2 * l);
            divide(t, Pochhammer::finite(1, 2, n, 2));
            divide(t, Pochhammer::finite(1, 2, n + 2 * l, 2));
            t.divide_binomial(1, 2 * n + 2 * l);
        },
        w2);
    times(s22, Pochhammer::finite(1, 2, 2 * l, 2));
    divide(s22, Pochhammer::finite(-1, 1, l, 2));
    out.add("left side after q -> q^2 against the PF-2-2 sum", image, s22, w2);
    return out;
}

}  // namespace qtheta
