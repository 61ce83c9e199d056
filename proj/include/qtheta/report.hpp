#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtheta/identities.hpp"

namespace qtheta {

using Json = nlohmann::ordered_json;

// "k=2;l=1"
std::string param_assignments(const Params& p);

// elapsed_ms only with timing, so equal runs serialize identically.
Json to_json(const VerificationReport& r, bool timing = false);
Json to_json(const InequalityReport& r, bool timing = false);
std::string to_text(const VerificationReport& r);
std::string to_text(const InequalityReport& r);

Json catalog_json();
std::string catalog_text();

struct TabulatedRow {
    std::string exponent;
    std::string coefficient;
};

std::vector<TabulatedRow> tabulate_series(const Series& s, Exponent from);
std::vector<TabulatedRow> tabulate_sequence(const std::vector<mpz_class>& v, long from);

void write_csv_header(std::ostream& os);
void write_csv(std::ostream& os, const std::string& id, const Params& p, const std::vector<TabulatedRow>& rows);

}  // namespace qtheta
