#include "qtheta/partitions.hpp"

#include <functional>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

// Visits each partition of n as a multiplicity vector m, m[j] = copies of part j.
void for_each_partition(long n, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> m(static_cast<size_t>(n + 1), 0);
    std::function<void(long, long)> rec = [&](long remaining, long largest) {
        if (remaining == 0) {
            visit(m);
            return;
        }
        for (long part = std::min(remaining, largest); part >= 1; --part) {
            for (long c = 1; c * part <= remaining; ++c) {
                m[static_cast<size_t>(part)] = c;
                rec(remaining - c * part, part - 1);
            }
            m[static_cast<size_t>(part)] = 0;
        }
    };
    rec(n, n);
}

void check_ceiling(long n, long ceiling) {
    if (n > ceiling)
        throw AboveCeiling("brute force limited to n <= " + std::to_string(ceiling) + "; use the table builder");
}

}  // namespace

PartitionKind PartitionKind::regular(int ell) {
    if (ell < 2) throw InvalidParameter("regular partitions need modulus >= 2");
    return {Tag::EllRegular, ell};
}

std::string PartitionKind::name() const {
    switch (tag) {
        case Tag::Unrestricted: return "p";
        case Tag::DistinctOddParts: return "pod";
        case Tag::Overpartition: return "pbar";
        case Tag::EllRegular: return "b" + std::to_string(ell);
        case Tag::Parts1245: return "p5";
    }
    return "?";
}

PartitionKind PartitionKind::parse(const std::string& name) {
    if (name == "p") return unrestricted();
    if (name == "pod") return pod();
    if (name == "pbar") return overpartition();
    if (name == "p5") return p5();
    if (name.size() > 1 && name[0] == 'b') {
        try {
            return regular(std::stoi(name.substr(1)));
        } catch (const std::logic_error&) {
        }
    }
    throw InvalidParameter("unknown partition kind '" + name + "'");
}

const mpz_class& PartitionTable::operator()(long n) const {
    static const mpz_class zero = 0;
    if (n < 0) return zero;
    if (n > max_n) throw InvalidParameter("table for " + kind.name() + " stops at " + std::to_string(max_n));
    return values[static_cast<size_t>(n)];
}

mpz_class count_bruteforce(PartitionKind kind, long n, long ceiling) {
    if (n < 0) return 0;
    check_ceiling(n, ceiling);
    mpz_class total = 0;
    for_each_partition(n, [&](const std::vector<long>& m) {
        switch (kind.tag) {
            case PartitionKind::Tag::Unrestricted: ++total; break;
            case PartitionKind::Tag::DistinctOddParts: {
                for (size_t j = 1; j < m.size(); j += 2)
                    if (m[j] > 1) return;
                ++total;
                break;
            }
            case PartitionKind::Tag::Overpartition: {
                long distinct = 0;
                for (long c : m) distinct += c > 0;
                total += mpz_class(1) << static_cast<mp_bitcnt_t>(distinct);
                break;
            }
            case PartitionKind::Tag::EllRegular: {
                for (size_t j = static_cast<size_t>(kind.ell); j < m.size(); j += static_cast<size_t>(kind.ell))
                    if (m[j] > 0) return;
                ++total;
                break;
            }
            case PartitionKind::Tag::Parts1245: {
                for (size_t j = 1; j < m.size(); ++j)
                    if (m[j] > 0 && j != 1 && j != 2 && j != 4 && j != 5) return;
                ++total;
                break;
            }
        }
    });
    return total;
}

Series generating_function(PartitionKind kind, long max_n) {
    Series s = Series::one(max_n);
    switch (kind.tag) {
        case PartitionKind::Tag::Unrestricted: divide(s, Pochhammer::infinite(1, 1)); break;
        case PartitionKind::Tag::DistinctOddParts:
            times(s, Pochhammer::infinite(-1, 1, 2));
            divide(s, Pochhammer::infinite(1, 2, 2));
            break;
        case PartitionKind::Tag::Overpartition:
            times(s, Pochhammer::infinite(-1, 1));
            divide(s, Pochhammer::infinite(1, 1));
            break;
        case PartitionKind::Tag::EllRegular:
            times(s, Pochhammer::infinite(1, kind.ell, kind.ell));
            divide(s, Pochhammer::infinite(1, 1));
            break;
        case PartitionKind::Tag::Parts1245:
            for (int part : {1, 2, 4, 5}) s.divide_binomial(1, part);
            break;
    }
    return s;
}

PartitionTable build_table(PartitionKind kind, long max_n) {
    if (max_n < 0) throw InvalidParameter("table size must be nonnegative");
    const Series s = generating_function(kind, max_n);
    PartitionTable t{kind, max_n, {}};
    t.values.reserve(static_cast<size_t>(max_n + 1));
    for (long n = 0; n <= max_n; ++n) t.values.push_back(s.coefficient(n));
    return t;
}

mpz_class mk_statistic(long n, long k, long ceiling) {
    if (k < 1) throw InvalidParameter("M_k needs k >= 1");
    if (n < 0) return 0;
    check_ceiling(n, ceiling);
    mpz_class total = 0;
    for_each_partition(n, [&](const std::vector<long>& m) {
        long missing = 1;
        while (missing < static_cast<long>(m.size()) && m[static_cast<size_t>(missing)] > 0) ++missing;
        if (missing != k) return;
        long above = 0, below = 0;
        for (size_t j = 1; j < m.size(); ++j) {
            if (static_cast<long>(j) > k) above += m[j];
            if (static_cast<long>(j) < k) below += m[j];
        }
        if (above > below) ++total;
    });
    return total;
}

namespace {

mpq_class p5_cubic(long n) {
    const mpz_class z = n;
    mpq_class c(2 * z * z * z + 36 * z * z + 193 * z + 525, 480);
    c.canonicalize();
    return c;
}

}  // namespace

mpz_class p5_closed_form(long n) {
    if (n < 0) return 0;
    mpq_class x = p5_cubic(n) + mpq_class(n % 2 == 0 ? n + 1 : -(n + 1), 32);
    x.canonicalize();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

std::pair<mpq_class, mpq_class> p5_bounds(long n) {
    mpq_class w(n + 1, 32);
    w.canonicalize();
    const mpq_class c = p5_cubic(n);
    return {c - w - 1, c + w};
}

}  // namespace qtheta
