#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtheta/bailey.hpp"
#include "qtheta/check.hpp"
#include "qtheta/series.hpp"
#include "qtheta/theta.hpp"

namespace qtheta {

enum class EntryKind { Identity, Transformation, Scan, Bailey };

std::string kind_name(EntryKind k);

struct RegistryEntry {
    std::string id;
    EntryKind kind = EntryKind::Identity;
    std::string paper_display;
    // Integer parameters, all required.
    std::vector<std::string> params;
    // Monomial parameters with their defaults; "rho"/"sigma" of lemma-2.1 are comma lists.
    std::vector<std::pair<std::string, std::string>> monomials;
    std::string constraints;
};

const std::vector<RegistryEntry>& registry();
// Throws UnknownIdentity.
const RegistryEntry& registry_entry(const std::string& id);

struct IdentityCase {
    std::string id;
    Params params;
    // Overrides of the entry's monomial defaults, as text.
    std::map<std::string, std::string> monomials;
    Exponent order = 100;
};

struct VerificationReport {
    IdentityCase c;
    CheckList checks;
    Exponent checked;
    double elapsed_ms = 0;

    bool pass() const { return checks.pass(); }
};

// Identity, Transformation and Bailey entries.
VerificationReport verify_identity(const IdentityCase& c);

enum class Transformation { Heine, Phi32A, Phi32B, RogersFine, Jtpi };

Transformation parse_transformation(const std::string& id);
// Named monomials: heine a b c z; phi32-a/-b a b c d e; rogers-fine alpha beta tau; jtpi a, with base q^R.
CheckList verify_transformation(Transformation which, const std::map<std::string, Monomial>& m, Exponent order,
                                long R = 3);

struct ScanCase {
    std::string id;
    Params params;
    long n_max = 200;
    // conj-bm for any modulus >= 2
    bool permissive = false;
};

struct InequalityReport {
    ScanCase c;
    // First n scanned; displays stated for n >= 1 start there.
    long from = 0;
    std::vector<long> violations;
    std::vector<long> strictness_failures;
    std::optional<long> threshold;
    double elapsed_ms = 0;

    bool pass() const { return violations.empty() && strictness_failures.empty(); }
};

InequalityReport scan_nonnegativity(const ScanCase& c);
InequalityReport scan_bm_conjecture(long k, long n_max, long ell = 6, bool permissive = false);
// The scanned coefficients for n = 0 .. n_max (index n), before the sign test.
std::vector<mpz_class> scan_sequence(const ScanCase& c);

// Left side of the first check of an identity entry, for tabulation.
Series identity_lhs(const IdentityCase& c);

}  // namespace qtheta
