#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtheta/series.hpp"

namespace qtheta {

// Polynomial in one variable with rational coefficients, c[j] the coefficient of x^j.
struct Poly {
    std::vector<mpq_class> c;

    static Poly constant(const mpq_class& v) { return Poly{{v}}; }
    mpq_class operator()(const mpq_class& x) const;
    mpq_class coefficient(size_t j) const { return j < c.size() ? c[j] : mpq_class(0); }
    Poly derivative() const;
    // x -> x - s
    Poly shifted(long s) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }

// (2x^3 + 36x^2 + 193x + 525)/480 -+ (x + 1)/32, with the extra -1 on the lower one.
Poly p5_lower_poly();
Poly p5_upper_poly();

// Series (5.x): (1/((1-q)(1-q^2)(1-q^4)(1-q^5))) sum_j (-1)^j q^((3j^2+6jk+j)/2) (1 - q^(2j+2k+1)).
Series p5_series(long k, Exponent order);

// C(n): the four-term p5 form, all nonzero terms.
mpz_class cn_evaluate(long n, long k);
// C(n, n0): j < n0 only.
mpz_class cn_partial(long n, long k, long n0);
// C^d(n, n0) as the displayed closed polynomial.
mpq_class cn_lower_bound(long n, long k, long n0);
// The same bound as the sum of p5^d / p5^u terms it was derived from.
mpq_class cn_lower_bound_terms(long n, long k, long n0);
// C^d(., n0) as a polynomial in n, from the terms.
Poly cn_lower_bound_poly(long k, long n0);

// (-1)^m if n = 3m(3m-1), else 0.
int recurrence_indicator(long n);

struct CaseWindow {
    long lo = 0;
    long hi = 0;
};

// Case 1..4 of the interval [6n0^2+6kn0+n0, 6(n0+1)^2+6k(n0+1)+n0].
CaseWindow case_window(long k, long n0, int which);
// The lower bound polynomial used in case 1..3 (C_1, C_2, C_3), from the terms.
Poly case_bound_poly(long k, long n0, int which);

// One displayed quantity of the case analysis, next to its recomputed value.
struct DisplayCheck {
    std::string label;
    long at = 0;
    mpq_class printed;
    mpq_class computed;
    bool equal = false;
    // +1: claimed > 0, -1: claimed < 0, 0: no sign claim
    int claim = 0;
    bool printed_sign_ok = true;
    bool computed_sign_ok = true;
};

std::vector<DisplayCheck> case_display_checks(long k, long n0);

struct WindowClaims {
    long points = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Every pointwise claim of the four cases for this (k, n0): the decomposition of C(n), C(n) above its
// case bound, the bound positive, C^d(n, n0) < C(n, n0) for n0 >= 1, and the monotonicity used.
WindowClaims case_window_claims(long k, long n0);

}  // namespace qtheta
