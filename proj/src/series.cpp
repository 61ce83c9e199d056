#include "qtheta/series.hpp"

#include <algorithm>
#include <sstream>

#include "qtheta/errors.hpp"
#include "qtheta/kernels.hpp"

namespace qtheta {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

const mpz_class& zero_coefficient() {
    static const mpz_class z = 0;
    return z;
}

int common_grain(const Series& a, const Series& b) { return std::max(a.grain(), b.grain()); }

}  // namespace

long long Exponent::whole() const {
    if (!integral()) throw NotRepresentable("exponent " + str() + " is not an integer");
    return halves_ / 2;
}

long long Exponent::units(int grain) const {
    if (grain == 2) return halves_;
    return whole();
}

std::string Exponent::str() const {
    if (integral()) return std::to_string(halves_ / 2);
    return std::to_string(halves_) + "/2";
}

Series::Series() : Series(1, 0, 0) {}

Series::Series(int grain, long long lo, long long hi) : grain_(grain), lo_(lo), hi_(hi) {
    if (grain != 1 && grain != 2) throw InvalidParameter("grain must be 1 or 2");
    c_.resize(static_cast<size_t>(std::max(0LL, hi - lo + 1)));
}

Series Series::zero(Exponent order, int grain) {
    const long long hi = order.units(grain);
    return Series(grain, std::min(0LL, hi + 1), hi);
}

Series Series::one(Exponent order, int grain) {
    Series s = zero(order, grain);
    if (s.hi_ >= 0) s.ref(0) = 1;
    return s;
}

Series Series::monomial(Exponent e, const mpz_class& c, Exponent order, int grain) {
    const long long u = e.units(grain);
    Series s = zero(order, grain);
    if (u <= s.hi_ && c != 0) {
        s.extend_low(std::min(s.lo_, u));
        s.ref(u) = c;
    }
    return s;
}

std::optional<Exponent> Series::valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return at(lo_ + static_cast<long long>(k));
    return std::nullopt;
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

bool Series::integral() const {
    if (grain_ == 1) return true;
    for (long long u = lo_; u <= hi_; ++u)
        if ((u % 2 != 0) && sgn(c_[static_cast<size_t>(u - lo_)]) != 0) return false;
    return true;
}

const mpz_class& Series::at_units(long long u) const {
    if (u > hi_) throw UnknownCoefficient("coefficient above order " + order().str());
    if (u < lo_) return zero_coefficient();
    return c_[static_cast<size_t>(u - lo_)];
}

mpz_class Series::coefficient(Exponent e) const {
    if (e > order()) throw UnknownCoefficient("coefficient at " + e.str() + " above order " + order().str());
    if (grain_ == 1 && !e.integral()) return 0;
    return at_units(e.units(grain_));
}

void Series::extend_low(long long lo) {
    if (lo >= lo_) return;
    c_.insert(c_.begin(), static_cast<size_t>(lo_ - lo), mpz_class(0));
    lo_ = lo;
}

void Series::normalize() {
    long long target = std::min(0LL, hi_ + 1);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) != 0) {
            target = std::min(target, lo_ + static_cast<long long>(k));
            break;
        }
    }
    if (target < lo_) {
        extend_low(target);
    } else if (target > lo_) {
        c_.erase(c_.begin(), c_.begin() + (target - lo_));
        lo_ = target;
    }
}

Series& Series::operator+=(const Series& b) {
    if (b.grain_ != grain_) {
        const int g = common_grain(*this, b);
        if (grain_ != g) *this = promoted(g);
        if (b.grain_ != g) return *this += b.promoted(g);
    }
    const long long hi = std::min(hi_, b.hi_);
    if (hi < hi_) truncate(at(hi));
    extend_low(std::min(b.lo_, hi + 1));
    for (long long u = std::max(lo_, b.lo_); u <= hi; ++u) ref(u) += b.c_[static_cast<size_t>(u - b.lo_)];
    normalize();
    return *this;
}

Series& Series::operator-=(const Series& b) {
    Series nb = b;
    nb.negate();
    return *this += nb;
}

Series& Series::operator*=(const Series& b) {
    if (b.grain_ != grain_) {
        const int g = common_grain(*this, b);
        if (grain_ != g) *this = promoted(g);
        if (b.grain_ != g) return *this *= b.promoted(g);
    }
    auto val_units = [](const Series& s) {
        for (size_t k = 0; k < s.c_.size(); ++k)
            if (sgn(s.c_[k]) != 0) return s.lo_ + static_cast<long long>(k);
        return s.hi_ + 1;
    };
    const long long va = val_units(*this);
    const long long vb = val_units(b);
    const long long hi = std::min(hi_ + vb, b.hi_ + va);
    const long long v = va + vb;
    Series r(grain_, std::min({0LL, v, hi + 1}), hi);
    if (v <= hi) {
        const mpz_class* pa = c_.data() + (va - lo_);
        const mpz_class* pb = b.c_.data() + (vb - b.lo_);
        const size_t na = static_cast<size_t>(hi_ - va + 1);
        const size_t nb = static_cast<size_t>(b.hi_ - vb + 1);
        auto nonzeros = [](const mpz_class* p, size_t n) {
            return std::count_if(p, p + n, [](const mpz_class& x) { return sgn(x) != 0; });
        };
        mpz_class* out = r.c_.data() + (v - r.lo_);
        const size_t n_out = static_cast<size_t>(hi - v + 1);
        if (nonzeros(pa, na) <= nonzeros(pb, nb))
            kernel::convolve(out, n_out, pa, na, pb, nb);
        else
            kernel::convolve(out, n_out, pb, nb, pa, na);
    }
    r.normalize();
    *this = std::move(r);
    return *this;
}

Series& Series::operator*=(const mpz_class& m) {
    for (auto& x : c_) x *= m;
    normalize();
    return *this;
}

Series& Series::operator*=(long m) {
    if (m == 1) return *this;
    if (m == -1) return negate();
    for (auto& x : c_) x *= m;
    normalize();
    return *this;
}

Series& Series::negate() {
    for (auto& x : c_) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    return *this;
}

Series& Series::shift(Exponent e) {
    if (grain_ == 1 && !e.integral()) *this = promoted(2);
    const long long u = e.units(grain_);
    lo_ += u;
    hi_ += u;
    if (lo_ > hi_ + 1) {
        c_.clear();
        lo_ = hi_ + 1;
    }
    normalize();
    return *this;
}

Series& Series::times_binomial(int sign, Exponent e) {
    if (grain_ == 1 && !e.integral()) *this = promoted(2);
    const long long u = e.units(grain_);
    if (u > 0) {
        kernel::times_binomial(c_.data(), c_.size(), static_cast<size_t>(u), sign);
        return *this;
    }
    if (u == 0) {
        if (sign > 0) {
            for (auto& x : c_) x = 0;
            normalize();
        } else {
            *this *= 2L;
        }
        return *this;
    }
    // 1 - s q^e = -s q^e (1 - s q^-e)
    times_binomial(sign, -e);
    if (sign > 0) negate();
    return shift(e);
}

Series& Series::divide_binomial(int sign, Exponent e) {
    if (grain_ == 1 && !e.integral()) *this = promoted(2);
    const long long u = e.units(grain_);
    if (u > 0) {
        kernel::divide_binomial(c_.data(), c_.size(), static_cast<size_t>(u), sign);
        return *this;
    }
    if (u == 0) throw NonUnit(sign > 0 ? "division by 1 - 1" : "division by 2");
    divide_binomial(sign, -e);
    if (sign > 0) negate();
    return shift(-e);
}

Series& Series::truncate(Exponent order) {
    const long long hi = order.units(grain_);
    if (hi > hi_) throw InvalidParameter("truncate cannot raise the order");
    if (hi + 1 < lo_) {
        c_.clear();
        lo_ = hi + 1;
    } else {
        c_.resize(static_cast<size_t>(hi - lo_ + 1));
    }
    hi_ = hi;
    normalize();
    return *this;
}

Series Series::promoted(int grain) const {
    if (grain == grain_) return *this;
    if (grain != 2 || grain_ != 1) throw InvalidParameter("promotion goes from grain 1 to grain 2");
    Series r(2, 2 * lo_, 2 * hi_ + 1);
    for (long long u = lo_; u <= hi_; ++u) r.ref(2 * u) = c_[static_cast<size_t>(u - lo_)];
    r.normalize();
    return r;
}

Series Series::demoted() const {
    if (grain_ == 1) return *this;
    if (!integral()) throw NotRepresentable("series has half-integer exponents");
    const long long hi = floor_div(hi_, 2);
    const long long lo = std::min(ceil_div(lo_, 2), hi + 1);
    Series r(1, lo, hi);
    for (long long v = lo; v <= hi; ++v)
        if (2 * v >= lo_) r.ref(v) = c_[static_cast<size_t>(2 * v - lo_)];
    r.normalize();
    return r;
}

Series Series::dilated(int t) const {
    if (t < 1) throw InvalidParameter("dilation factor must be positive");
    Series r(grain_, t * lo_, t * (hi_ + 1) - 1);
    for (long long u = lo_; u <= hi_; ++u) r.ref(t * u) = c_[static_cast<size_t>(u - lo_)];
    r.normalize();
    return r;
}

std::string Series::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (long long u = lo_; u <= hi_ && shown < max_terms; ++u) {
        const mpz_class& c = c_[static_cast<size_t>(u - lo_)];
        if (sgn(c) == 0) continue;
        const mpz_class mag = abs(c);
        if (shown == 0)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        const std::string e = at(u).str();
        if (e == "0")
            os << mag.get_str();
        else {
            if (mag != 1) os << mag.get_str();
            os << "q";
            if (e != "1") os << "^" << (e.find('/') != std::string::npos || e[0] == '-' ? "(" + e + ")" : e);
        }
        ++shown;
    }
    if (shown == 0) os << "0";
    os << " + O(q^" << at(hi_ + 1).str() << ")";
    return os.str();
}

bool operator==(const Series& a, const Series& b) {
    const int g = common_grain(a, b);
    if (a.grain_ != g) return a.promoted(g) == b;
    if (b.grain_ != g) return a == b.promoted(g);
    if (a.hi_ != b.hi_) return false;
    for (long long u = std::min(a.lo_, b.lo_); u <= a.hi_; ++u)
        if (a.at_units(u) != b.at_units(u)) return false;
    return true;
}

Series make_series(std::span<const Term> terms, int grain, Exponent order) {
    const long long hi = order.units(grain);
    long long lo = std::min(0LL, hi + 1);
    for (const auto& t : terms) lo = std::min(lo, t.exponent.units(grain));
    Series s(grain, lo, hi);
    for (const auto& t : terms) {
        const long long u = t.exponent.units(grain);
        if (u <= hi) s.ref(u) += t.coefficient;
    }
    return s;
}

Series invert(const Series& a) {
    const auto v = a.valuation();
    if (!v) throw NonUnit("inverting a series that is zero to its order");
    const long long vu = v->units(a.grain_);
    const mpz_class& lead = a.at_units(vu);
    if (lead != 1 && lead != -1) throw NonUnit("leading coefficient " + lead.get_str() + " is not a unit");
    const long long n = a.hi_ - vu + 1;
    const long long hi = a.hi_ - 2 * vu;
    Series r(a.grain_, std::min(0LL, -vu), hi);
    kernel::invert_unit(r.c_.data() + (-vu - r.lo_), a.c_.data() + (vu - a.lo_), static_cast<size_t>(n));
    r.normalize();
    return r;
}

Series shifted(Series a, Exponent e) { return a.shift(e); }

std::optional<Discrepancy> first_difference(const Series& a, const Series& b, Exponent upto) {
    if (upto > a.order() || upto > b.order())
        throw UnknownCoefficient("comparison up to " + upto.str() + " exceeds order " +
                                 std::min(a.order(), b.order()).str());
    const int g = std::max(a.grain(), b.grain());
    const Series pa = a.promoted(g);
    const Series pb = b.promoted(g);
    const long long hi = g == 2 ? upto.halves() : floor_div(upto.halves(), 2);
    for (long long u = std::min(pa.min_units(), pb.min_units()); u <= hi; ++u) {
        if (pa.at_units(u) != pb.at_units(u))
            return Discrepancy{half(g == 1 ? 2 * u : u), pa.at_units(u), pb.at_units(u)};
    }
    return std::nullopt;
}

namespace {

template <class Op>
Series& apply_factors(Series& s, const Pochhammer& p, Op op) {
    if (p.step <= Exponent(0)) throw InvalidParameter("Pochhammer step must be positive");
    if (!p.length && p.base <= Exponent(0)) throw InvalidParameter("infinite Pochhammer needs a positive base exponent");
    if (p.length && *p.length < 0) throw InvalidParameter("negative Pochhammer length");
    for (long long j = 0; !p.length || j < *p.length; ++j) {
        const Exponent e = p.base + p.step * j;
        // once e exceeds the stored span every remaining factor is 1 there
        if (e > Exponent(0) && e > s.order() - s.min_exp()) break;
        op(s, p.sign, e);
    }
    return s;
}

}  // namespace

Series& times(Series& s, const Pochhammer& p) {
    return apply_factors(s, p, [](Series& x, int c, Exponent e) { x.times_binomial(c, e); });
}

Series& divide(Series& s, const Pochhammer& p) {
    return apply_factors(s, p, [](Series& x, int c, Exponent e) { x.divide_binomial(c, e); });
}

Series pochhammer(const Pochhammer& p, Exponent order, int grain) {
    Series s = Series::one(order, grain);
    return times(s, p);
}

Series gauss_binomial(long long n, long long k, long long t, Exponent order) {
    if (t < 1) throw InvalidParameter("q-binomial step must be positive");
    if (k < 0 || k > n) return Series::zero(order);
    const long long degree = t * k * (n - k);
    Series s = Series::one(std::max(order, Exponent(degree)));
    for (long long j = 1; j <= k; ++j) {
        s.times_binomial(1, t * (n - k + j));
        s.divide_binomial(1, t * j);
    }
    if (s.order() > order) s.truncate(order);
    return s;
}

}  // namespace qtheta
