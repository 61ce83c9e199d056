#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qtheta/series.hpp"

namespace qtheta {

struct PartitionKind {
    enum class Tag { Unrestricted, DistinctOddParts, Overpartition, EllRegular, Parts1245 };
    Tag tag = Tag::Unrestricted;
    int ell = 0;

    static PartitionKind unrestricted() { return {Tag::Unrestricted, 0}; }
    static PartitionKind pod() { return {Tag::DistinctOddParts, 0}; }
    static PartitionKind overpartition() { return {Tag::Overpartition, 0}; }
    static PartitionKind regular(int ell);
    static PartitionKind p5() { return {Tag::Parts1245, 0}; }

    // "p", "pod", "pbar", "b6", "p5"
    std::string name() const;
    static PartitionKind parse(const std::string& name);

    bool operator==(const PartitionKind&) const = default;
};

struct PartitionTable {
    PartitionKind kind;
    long max_n = 0;
    std::vector<mpz_class> values;

    // Zero below 0; throws InvalidParameter above max_n.
    const mpz_class& operator()(long n) const;
};

constexpr long kBruteForceCeiling = 60;

mpz_class count_bruteforce(PartitionKind kind, long n, long ceiling = kBruteForceCeiling);

// Generating function of the kind, to order max_n.
Series generating_function(PartitionKind kind, long max_n);
PartitionTable build_table(PartitionKind kind, long max_n);

// Partitions of n whose least missing part is k and that have more parts above k than below.
mpz_class mk_statistic(long n, long k, long ceiling = kBruteForceCeiling);

mpz_class p5_closed_form(long n);
// (p5^d(n), p5^u(n))
std::pair<mpq_class, mpq_class> p5_bounds(long n);

}  // namespace qtheta
