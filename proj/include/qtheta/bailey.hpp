#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtheta/check.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

// sign * q^exp
struct Monomial {
    int sign = 1;
    Exponent exp;

    static Monomial q(Exponent e, int sign = 1) { return {sign, e}; }
    Monomial operator*(const Monomial& o) const { return {sign * o.sign, exp + o.exp}; }
    Monomial operator/(const Monomial& o) const { return {sign * o.sign, exp - o.exp}; }
    Monomial operator-() const { return {-sign, exp}; }
    Monomial pow(long p) const { return {(p % 2 != 0) ? sign : 1, exp * p}; }
    // Positive square root; needs sign +1.
    Monomial sqrt() const;
    std::string str() const;
    bool operator==(const Monomial&) const = default;
};

// "q^3", "-q", "q^(3/2)", "-q^(-1/2)", "1"; "inf" gives nullopt.
std::optional<Monomial> parse_monomial(const std::string& text);

// s *= (m;q)_n
Series& times_poch(Series& s, const Monomial& m, long n);
Series& divide_poch(Series& s, const Monomial& m, long n);
// s *= m^p, p of either sign
Series& times_power(Series& s, const Monomial& m, long p);

class BaileyPair {
  public:
    enum class Family { SixPhiFive, Pair1, Pair2 };

    static BaileyPair six_phi_five(Exponent a, Monomial b, Monomial c);
    // b = q, c = (aq)^(1/2)
    static BaileyPair pair1(Exponent a);
    // b = q, c -> inf
    static BaileyPair pair2(Exponent a);

    Family family() const { return family_; }
    Exponent a_exp() const { return a_; }
    Monomial a() const { return Monomial::q(a_); }
    std::optional<Monomial> b() const { return b_; }
    std::optional<Monomial> c() const { return c_; }
    std::string name() const;

    // Multiply s by alpha_n (zero for n < 0) or beta_n.
    Series& alpha(long n, Series& s) const;
    Series& beta(long n, Series& s) const;
    Series alpha(long n, Exponent order) const;
    Series beta(long n, Exponent order) const;

    // Exponent of the monomial part of alpha_n, in halves; the rest has valuation 0
    // when the pair is regular.
    long alpha_lead_halves(long n) const;
    // Every Pochhammer in alpha and beta is a power series with unit denominators.
    bool regular() const;

  private:
    Family family_ = Family::Pair2;
    Exponent a_;
    std::optional<Monomial> b_;
    std::optional<Monomial> c_;
};

// beta_n against sum_j alpha_j / ((q)_(n-j) (aq)_(n+j)) for every n <= n_max.
CheckList verify_bailey_relation(const BaileyPair& pair, long n_max, Exponent order);

struct LatticeCase {
    long k = 1;
    long i = 0;
    long n = 0;
    std::vector<Monomial> rho;
    std::vector<Monomial> sigma;
    // Last summation inequality read as m_(k-1) > m_k.
    bool strict = false;
};

Sides lattice_sides(const LatticeCase& c, const BaileyPair& pair, Exponent order);
// The same identity at i = 0 written with every chain step relative to aq; built
// independently of lattice_sides.
Sides lattice_i0_sides(const LatticeCase& c, const BaileyPair& pair, Exponent order);

enum class LimitForm { EvenPf, Pf12, ProgressPr1, ThmOnePf, PfEvenmod, Pf31, Pf22, SquPf };

const std::vector<std::string>& limit_form_names();
LimitForm parse_limit_form(const std::string& name);
std::string limit_form_name(LimitForm f);

struct LimitCase {
    long k = 1;
    long i = 0;
    long l = 1;
    // EVEN-PF, PF-12, PF-3-1 only.
    BaileyPair pair = BaileyPair::pair2(7);
    Monomial rho = Monomial::q(1);
    Monomial sigma = Monomial::q(2);
    // PROGRESS-PR-1 with the linear term exactly as displayed.
    bool printed = false;
};

CheckList verify_limit_form(LimitForm form, const LimitCase& c, Exponent order);

enum class ChainLemma { Lemma61, Lemma62 };

struct ChainCase {
    BaileyPair pair = BaileyPair::pair2(1);
    Monomial rho = Monomial::q(2, -1);
    // nullopt: sigma -> inf, in closed form.
    std::optional<Monomial> sigma = Monomial::q(3);
    // Lemma 6.2 with (aq/rho sigma)_(n-k) on the left, as in its summation display.
    bool printed_left = false;
};

CheckList verify_chain_lemma(ChainLemma which, const ChainCase& c, long n_max, Exponent order);

// Lemma 6.2 with pair 1, rho = -a^(1/2), sigma -> inf and n -> inf, a = q^(2l+1):
// the limit identity itself, and its q -> q^2 image against the PF-2-2 sum.
CheckList lemma62_pf22(long l, Exponent order);

}  // namespace qtheta
