#include "qtheta/report.hpp"

#include <cstdio>
#include <sstream>

namespace qtheta {

namespace {

Json params_json(const Params& p) {
    Json j = Json::object();
    for (const auto& [name, value] : p) j[name] = value;
    return j;
}

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    return buf;
}

std::string list_text(const std::vector<long>& v, size_t cap = 10) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size() && i < cap; ++i) os << (i ? "," : "") << v[i];
    if (v.size() > cap) os << ",...";
    return os.str();
}

std::string head(const std::string& id, const Params& p) {
    const std::string a = param_assignments(p);
    return a.empty() ? id : id + " " + a;
}

}  // namespace

std::string param_assignments(const Params& p) {
    std::string s;
    for (const auto& [name, value] : p) {
        if (!s.empty()) s += ';';
        s += name + "=" + std::to_string(value);
    }
    return s;
}

Json to_json(const VerificationReport& r, bool timing) {
    Json j;
    j["id"] = r.c.id;
    j["params"] = params_json(r.c.params);
    if (!r.c.monomials.empty()) {
        Json m = Json::object();
        for (const auto& [name, text] : r.c.monomials) m[name] = text;
        j["monomials"] = m;
    }
    j["order"] = r.c.order.str();
    j["status"] = r.pass() ? "PASS" : "FAIL";
    j["checked_order"] = r.checked.str();
    if (const Check* f = r.checks.first_failure()) {
        Json d;
        d["check"] = f->label;
        d["exponent"] = f->cmp.first->exponent.str();
        d["lhs"] = f->cmp.first->lhs.get_str();
        d["rhs"] = f->cmp.first->rhs.get_str();
        j["first_discrepancy"] = d;
    } else {
        j["first_discrepancy"] = nullptr;
    }
    Json checks = Json::array();
    for (const auto& c : r.checks.items) checks.push_back({{"check", c.label}, {"status", c.cmp.pass ? "PASS" : "FAIL"}});
    j["checks"] = checks;
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Json to_json(const InequalityReport& r, bool timing) {
    Json j;
    j["id"] = r.c.id;
    j["params"] = params_json(r.c.params);
    j["n_max"] = r.c.n_max;
    j["from"] = r.from;
    j["status"] = r.pass() ? "PASS" : "FAIL";
    j["violations"] = r.violations;
    j["strictness_failures"] = r.strictness_failures;
    if (r.threshold)
        j["threshold"] = *r.threshold;
    else
        j["threshold"] = nullptr;
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << head(r.c.id, r.c.params) << " order " << r.c.order.str() << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
       << r.checks.items.size() << " checks, " << fmt_ms(r.elapsed_ms) << ")";
    if (const Check* f = r.checks.first_failure())
        os << "\n  first discrepancy in '" << f->label << "' at q^" << f->cmp.first->exponent.str() << ": lhs "
           << f->cmp.first->lhs.get_str() << ", rhs " << f->cmp.first->rhs.get_str();
    return os.str();
}

std::string to_text(const InequalityReport& r) {
    std::ostringstream os;
    os << head(r.c.id, r.c.params) << " n <= " << r.c.n_max << ": " << (r.pass() ? "PASS" : "FAIL");
    if (r.threshold) os << ", strict from n = " << *r.threshold;
    os << " (" << fmt_ms(r.elapsed_ms) << ")";
    if (!r.violations.empty()) os << "\n  negative at n = " << list_text(r.violations);
    if (!r.strictness_failures.empty()) os << "\n  zero at n = " << list_text(r.strictness_failures);
    return os.str();
}

Json catalog_json() {
    Json a = Json::array();
    for (const auto& e : registry()) {
        Json j;
        j["id"] = e.id;
        j["kind"] = kind_name(e.kind);
        j["paper_display"] = e.paper_display;
        j["params"] = e.params;
        if (!e.monomials.empty()) {
            Json m = Json::object();
            for (const auto& [name, def] : e.monomials) m[name] = def;
            j["monomials"] = m;
        }
        j["constraints"] = e.constraints;
        a.push_back(j);
    }
    return a;
}

std::string catalog_text() {
    std::ostringstream os;
    for (const auto& e : registry()) {
        os << e.id << "  [" << kind_name(e.kind) << "]  " << e.paper_display;
        if (!e.params.empty()) {
            os << "  params:";
            for (const auto& p : e.params) os << " " << p;
        }
        if (!e.constraints.empty()) os << "  (" << e.constraints << ")";
        os << "\n";
    }
    return os.str();
}

std::vector<TabulatedRow> tabulate_series(const Series& s, Exponent from) {
    std::vector<TabulatedRow> rows;
    const int g = s.grain();
    const long long lo = std::max<long long>(s.min_units(), from.units(g));
    for (long long u = lo; u <= s.order_units(); ++u) {
        const Exponent e = g == 1 ? Exponent(u) : half(u);
        rows.push_back({e.str(), s.at_units(u).get_str()});
    }
    return rows;
}

std::vector<TabulatedRow> tabulate_sequence(const std::vector<mpz_class>& v, long from) {
    std::vector<TabulatedRow> rows;
    for (long n = from; n < static_cast<long>(v.size()); ++n)
        rows.push_back({std::to_string(n), v[static_cast<size_t>(n)].get_str()});
    return rows;
}

void write_csv_header(std::ostream& os) { os << "id,param_assignments,n,coefficient\n"; }

void write_csv(std::ostream& os, const std::string& id, const Params& p, const std::vector<TabulatedRow>& rows) {
    const std::string a = param_assignments(p);
    for (const auto& r : rows) os << id << ',' << a << ',' << r.exponent << ',' << r.coefficient << '\n';
}

}  // namespace qtheta
