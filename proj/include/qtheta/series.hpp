#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtheta {

// Exponent of q, a multiple of 1/2. Stored in halves.
class Exponent {
  public:
    constexpr Exponent() = default;
    constexpr Exponent(long long whole) : halves_(2 * whole) {}

    static constexpr Exponent from_halves(long long h) {
        Exponent e;
        e.halves_ = h;
        return e;
    }

    constexpr long long halves() const { return halves_; }
    constexpr bool integral() const { return halves_ % 2 == 0; }
    long long whole() const;
    // Value in units of 1/grain; throws NotRepresentable.
    long long units(int grain) const;
    std::string str() const;

    constexpr auto operator<=>(const Exponent&) const = default;

    constexpr Exponent operator-() const { return from_halves(-halves_); }
    constexpr Exponent& operator+=(Exponent o) {
        halves_ += o.halves_;
        return *this;
    }
    constexpr Exponent& operator-=(Exponent o) {
        halves_ -= o.halves_;
        return *this;
    }
    friend constexpr Exponent operator+(Exponent a, Exponent b) { return a += b; }
    friend constexpr Exponent operator-(Exponent a, Exponent b) { return a -= b; }
    friend constexpr Exponent operator*(Exponent a, long long m) { return from_halves(a.halves_ * m); }
    friend constexpr Exponent operator*(long long m, Exponent a) { return a * m; }

  private:
    long long halves_ = 0;
};

constexpr Exponent half(long long h) { return Exponent::from_halves(h); }

struct Term {
    Exponent exponent;
    mpz_class coefficient;
};

// Truncated Laurent series in q^(1/g), g in {1,2}. Coefficients are exact for
// every exponent <= order and unknown above it.
class Series {
  public:
    Series();

    static Series zero(Exponent order, int grain = 1);
    static Series one(Exponent order, int grain = 1);
    static Series monomial(Exponent e, const mpz_class& c, Exponent order, int grain = 1);

    int grain() const { return grain_; }
    Exponent order() const { return at(hi_); }
    Exponent min_exp() const { return at(lo_); }
    long long order_units() const { return hi_; }
    long long min_units() const { return lo_; }

    // Lowest exponent with a nonzero coefficient, if any up to the order.
    std::optional<Exponent> valuation() const;
    bool is_zero() const;
    // True when no coefficient sits at an odd multiple of 1/2.
    bool integral() const;

    mpz_class coefficient(Exponent e) const;
    const mpz_class& at_units(long long u) const;
    std::span<const mpz_class> coefficients() const { return c_; }

    Series& operator+=(const Series& b);
    Series& operator-=(const Series& b);
    Series& operator*=(const Series& b);
    Series& operator*=(const mpz_class& m);
    Series& operator*=(long m);
    Series& negate();

    // Multiply by q^e.
    Series& shift(Exponent e);
    // Multiply by (1 - sign q^e).
    Series& times_binomial(int sign, Exponent e);
    // Divide by (1 - sign q^e).
    Series& divide_binomial(int sign, Exponent e);
    // Forget coefficients above the new order (which must not exceed the old).
    Series& truncate(Exponent order);

    Series promoted(int grain) const;
    // Back to grain 1; throws NotRepresentable unless integral.
    Series demoted() const;
    // Substitute q -> q^t.
    Series dilated(int t) const;

    std::string str(int max_terms = 12) const;

    friend bool operator==(const Series& a, const Series& b);
    friend Series operator-(Series a) { return a.negate(); }

  private:
    Series(int grain, long long lo, long long hi);
    Exponent at(long long u) const { return half(grain_ == 1 ? 2 * u : u); }
    mpz_class& ref(long long u) { return c_[static_cast<size_t>(u - lo_)]; }
    void extend_low(long long lo);
    void normalize();
    friend Series invert(const Series& a);
    friend Series make_series(std::span<const Term> terms, int grain, Exponent order);

    int grain_ = 1;
    long long lo_ = 0;
    long long hi_ = 0;
    std::vector<mpz_class> c_;
};

inline Series operator+(Series a, const Series& b) { return a += b; }
inline Series operator-(Series a, const Series& b) { return a -= b; }
inline Series operator*(const Series& a, const Series& b) {
    Series r = a;
    return r *= b;
}
inline Series operator*(Series a, long m) { return a *= m; }

Series make_series(std::span<const Term> terms, int grain, Exponent order);
Series invert(const Series& a);
Series shifted(Series a, Exponent e);

struct Discrepancy {
    Exponent exponent;
    mpz_class lhs;
    mpz_class rhs;
};

// First exponent <= upto where the two series differ.
std::optional<Discrepancy> first_difference(const Series& a, const Series& b, Exponent upto);

// Factors (1 - sign q^(base + j step)) for j = 0 .. length-1, or infinitely many.
struct Pochhammer {
    int sign = 1;
    Exponent base = 1;
    Exponent step = 1;
    std::optional<long long> length;

    static Pochhammer finite(int sign, Exponent base, long long n, Exponent step = 1) {
        return {sign, base, step, n};
    }
    static Pochhammer infinite(int sign, Exponent base, Exponent step = 1) {
        return {sign, base, step, std::nullopt};
    }
};

Series pochhammer(const Pochhammer& p, Exponent order, int grain = 1);
Series& times(Series& s, const Pochhammer& p);
Series& divide(Series& s, const Pochhammer& p);

// [n choose k] in q^t.
Series gauss_binomial(long long n, long long k, long long t, Exponent order);

}  // namespace qtheta
