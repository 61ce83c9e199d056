#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtheta/series.hpp"

namespace qtheta {

using Params = std::map<std::string, long>;

// Reads a named parameter; throws InvalidParameter when absent.
long param(const Params& p, const std::string& name);

// Exponent (a j^2 + b j) / 2.
struct QuadraticLaw {
    long a = 0;
    long b = 0;

    static QuadraticLaw pentagonal() { return {3, 1}; }
    static QuadraticLaw triangular() { return {4, 2}; }
    static QuadraticLaw square() { return {2, 0}; }
    // R j(j+1)/2 - S j
    static QuadraticLaw general(long R, long S) { return {R, R - 2 * S}; }
    // (k + 1/2) j^2 + (k - i - 1/2) j
    static QuadraticLaw odd_basis(long k, long i) { return {2 * k + 1, 2 * k - 2 * i - 1}; }
    // k j^2 - i j
    static QuadraticLaw even_basis(long k, long i) { return {2 * k, -2 * i}; }

    Exponent at(long j) const { return half(a * j * j + b * j); }
};

struct ThetaSumSpec {
    QuadraticLaw law;
    bool alternating = true;
    // Both empty means bilateral.
    std::optional<long> lo;
    std::optional<long> hi;
    bool laurent = false;

    static ThetaSumSpec finite(QuadraticLaw law, long lo, long hi, bool alternating = true) {
        return {law, alternating, lo, hi, false};
    }
    static ThetaSumSpec bilateral(QuadraticLaw law, bool alternating = true) {
        return {law, alternating, std::nullopt, std::nullopt, false};
    }
};

Series theta_partial_sum(const ThetaSumSpec& spec, Exponent order);

// (q^S, q^(R-S), q^R; q^R)_inf
Series jtp_product(long R, long S, Exponent order);

// Visits N_1 >= ... >= N_k >= 0 whose cost sum_j (N_j^2 + c1[j] N_j) is at most budget.
void for_each_chain(std::span<const long> c1, long budget,
                    const std::function<void(std::span<const long> N, long cost)>& visit);

// Same with cost sum_j (c2[j] N_j^2 + c1[j] N_j); each level needs c2 > 0, or c2 = 0 and c1 >= 0,
// and the top level must grow.
void for_each_chain(std::span<const long> c2, std::span<const long> c1, long budget,
                    const std::function<void(std::span<const long> N, long cost)>& visit);

// n_j = N_j - N_(j+1)
std::vector<long> chain_differences(std::span<const long> N);

// Regularised 2 g(M): the left side's divergent inner sum over the free top index,
// continued through Heine's transformation.
Series twice_g(long M, Exponent order);

// Right side of the truncated Andrews-Gordon form (odd basis). bound defaults to order.
Series ag_multisum_rhs(long k, long i, long l, Exponent order, std::optional<long> bound = std::nullopt);
// Right side of the even basis form.
Series even_multisum_rhs(long k, long i, long l, Exponent order, std::optional<long> bound = std::nullopt);

// (k-1)-fold Andrews-Gordon sum: sum q^(N_1^2+...+N_(k-1)^2+N_i+...+N_(k-1)) / (q)_n1 ... (q)_n(k-1).
Series agb_multisum(long k, long i, Exponent order);
// Same sum with (q^2;q^2) on the last difference.
Series bressoud_even_multisum(long k, long i, Exponent order);

// Ids accepted by single_sum_rhs.
const std::vector<std::string>& single_sum_ids();
Series single_sum_rhs(const std::string& id, const Params& p, Exponent order);

// Tails of the three classical truncations with (1-q^l)/(1-q) expanded as sum q^j, one series per summand.
// id in {thm-1.3, thm-1.4, thm-1.5}.
std::vector<Series> rewritten_tail_summands(const std::string& id, long l, Exponent order);
// The tail as stated, so the rewritten summands can be checked against it.
Series classical_tail(const std::string& id, long l, Exponent order);

}  // namespace qtheta
