#include "qtheta/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtheta/errors.hpp"
#include "qtheta/identities.hpp"
#include "qtheta/report.hpp"

namespace qtheta {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kIntFlags{"k", "i", "l", "R", "S", "n", "pair"};
const std::vector<std::string> kMonoFlags{"a", "b", "c", "d", "e", "z", "alpha", "beta", "tau", "rho", "sigma"};

struct Flags {
    std::string id;
    std::string format;
    std::string out;
    std::map<std::string, std::string> ints;
    std::map<std::string, std::string> monos;
    std::string order = "100";
    std::string nmax = "200";
    bool timing = false;
    bool grid = false;
    bool permissive = false;
};

long parse_long(const std::string& flag, const std::string& text) {
    long v = 0;
    const char* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || p != end) throw Usage("--" + flag + " expects a decimal integer, got '" + text + "'");
    return v;
}

std::vector<long> parse_values(const std::string& flag, const std::string& text, bool grid) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_long(flag, text)};
    if (!grid) throw Usage("--" + flag + " range '" + text + "' needs --grid");
    const long lo = parse_long(flag, text.substr(0, dots)), hi = parse_long(flag, text.substr(dots + 2));
    if (lo > hi) throw Usage("--" + flag + " range '" + text + "' is empty");
    if (hi - lo > 10000) throw Usage("--" + flag + " range '" + text + "' is too long");
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

std::vector<Params> expand(const Flags& f) {
    std::vector<std::pair<std::string, std::vector<long>>> axes;
    for (const auto& [name, text] : f.ints)
        if (!text.empty()) axes.push_back({name, parse_values(name, text, f.grid)});
    std::vector<Params> out{Params{}};
    for (const auto& [name, values] : axes) {
        std::vector<Params> next;
        for (const auto& p : out)
            for (long v : values) {
                Params q = p;
                q[name] = v;
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

std::map<std::string, std::string> given_monomials(const Flags& f) {
    std::map<std::string, std::string> m;
    for (const auto& [name, text] : f.monos)
        if (!text.empty()) m[name] = text;
    return m;
}

void add_common(CLI::App* sub, Flags& f, bool with_id = true) {
    if (with_id) sub->add_option("--id", f.id, "registry id")->required();
    sub->add_option("--format", f.format, "json, csv or text");
    sub->add_option("--out", f.out, "output path (default standard output)");
}

void add_params(CLI::App* sub, Flags& f) {
    for (const auto& name : kIntFlags) sub->add_option("--" + name, f.ints[name], "integer (or a..b with --grid)");
    for (const auto& name : kMonoFlags) sub->add_option("--" + name, f.monos[name], "monomial such as q^3, -q, q^(1/2)");
    sub->add_option("--order", f.order, "series order (default 100)");
    sub->add_flag("--timing", f.timing, "include elapsed_ms in JSON");
    sub->add_flag("--grid", f.grid, "expand a..b ranges into a JSON array");
}

class Output {
  public:
    Output(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os_ = &fallback;
        } else {
            file_.open(path);
            if (!file_) throw Usage("cannot open '" + path + "' for writing");
            os_ = &file_;
        }
    }
    std::ostream& operator*() { return *os_; }

  private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

std::string format_of(const Flags& f, const std::string& fallback, std::initializer_list<const char*> allowed) {
    const std::string fmt = f.format.empty() ? fallback : f.format;
    for (const char* a : allowed)
        if (fmt == a) return fmt;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw Usage("--format must be one of " + list + " here, got '" + fmt + "'");
}

void emit_json(std::ostream& os, const std::vector<Json>& items, bool grid) {
    if (grid) {
        Json a = Json::array();
        for (const auto& j : items) a.push_back(j);
        os << a.dump(2) << "\n";
    } else {
        for (const auto& j : items) os << j.dump(2) << "\n";
    }
}

const RegistryEntry& entry_of(const Flags& f) {
    try {
        return registry_entry(f.id);
    } catch (const UnknownIdentity&) {
        throw Usage("unknown id '" + f.id + "' (see qtheta list)");
    }
}

int do_verify(const std::string& cmd, const Flags& f, std::ostream& out) {
    const RegistryEntry& e = entry_of(f);
    if (e.kind == EntryKind::Scan) throw Usage(f.id + " is a scan target; use qtheta scan");
    if (cmd == "transform" && e.kind != EntryKind::Transformation)
        throw Usage(f.id + " is not a transformation; use qtheta " + (e.kind == EntryKind::Bailey ? "bailey" : "verify"));
    if (cmd == "bailey" && e.kind != EntryKind::Bailey)
        throw Usage(f.id + " is not a Bailey entry; use qtheta " +
                    (e.kind == EntryKind::Transformation ? "transform" : "verify"));
    const std::string fmt = format_of(f, "text", {"json", "text"});
    const long order = parse_long("order", f.order);
    if (order < 0) throw Usage("--order must be nonnegative");
    std::vector<VerificationReport> reports;
    for (const auto& p : expand(f)) reports.push_back(verify_identity({f.id, p, given_monomials(f), order}));
    Output o(f.out, out);
    bool pass = true;
    std::vector<Json> items;
    for (const auto& r : reports) {
        pass = pass && r.pass();
        if (fmt == "json")
            items.push_back(to_json(r, f.timing));
        else
            *o << to_text(r) << "\n";
    }
    if (fmt == "json") emit_json(*o, items, f.grid);
    return pass ? 0 : 1;
}

int do_scan(const Flags& f, std::ostream& out) {
    const RegistryEntry& e = entry_of(f);
    if (e.kind != EntryKind::Scan) throw Usage(f.id + " is not a scan target; use qtheta verify");
    const std::string fmt = format_of(f, "text", {"json", "text"});
    const long n_max = parse_long("nmax", f.nmax);
    if (!f.monos.empty() && !given_monomials(f).empty()) throw Usage("scan targets take no monomials");
    std::vector<InequalityReport> reports;
    for (const auto& p : expand(f)) reports.push_back(scan_nonnegativity({f.id, p, n_max, f.permissive}));
    Output o(f.out, out);
    bool pass = true;
    std::vector<Json> items;
    for (const auto& r : reports) {
        pass = pass && r.pass();
        if (fmt == "json")
            items.push_back(to_json(r, f.timing));
        else
            *o << to_text(r) << "\n";
    }
    if (fmt == "json") emit_json(*o, items, f.grid);
    return pass ? 0 : 1;
}

int do_tabulate(const Flags& f, std::ostream& out) {
    const RegistryEntry& e = entry_of(f);
    if (e.kind != EntryKind::Identity && e.kind != EntryKind::Scan)
        throw Usage(f.id + " has no single series to tabulate");
    const std::string fmt = format_of(f, "csv", {"csv", "json", "text"});
    std::vector<std::pair<Params, std::vector<TabulatedRow>>> tables;
    for (const auto& p : expand(f)) {
        if (e.kind == EntryKind::Scan) {
            const long n_max = parse_long("nmax", f.nmax);
            tables.push_back({p, tabulate_sequence(scan_sequence({f.id, p, n_max, f.permissive}), 0)});
        } else {
            const long order = parse_long("order", f.order);
            tables.push_back({p, tabulate_series(identity_lhs({f.id, p, given_monomials(f), order}), 0)});
        }
    }
    Output o(f.out, out);
    if (fmt == "csv") {
        write_csv_header(*o);
        for (const auto& [p, rows] : tables) write_csv(*o, f.id, p, rows);
    } else if (fmt == "json") {
        std::vector<Json> items;
        for (const auto& [p, rows] : tables) {
            Json j;
            j["id"] = f.id;
            j["param_assignments"] = param_assignments(p);
            Json c = Json::array();
            for (const auto& r : rows) c.push_back({{"n", r.exponent}, {"coefficient", r.coefficient}});
            j["coefficients"] = c;
            items.push_back(j);
        }
        emit_json(*o, items, f.grid);
    } else {
        for (const auto& [p, rows] : tables) {
            *o << f.id << " " << param_assignments(p) << "\n";
            for (const auto& r : rows) *o << "  " << r.exponent << " " << r.coefficient << "\n";
        }
    }
    return 0;
}

int do_list(const Flags& f, std::ostream& out) {
    const std::string fmt = format_of(f, "text", {"json", "text", "csv"});
    Output o(f.out, out);
    if (fmt == "json") {
        *o << catalog_json().dump(2) << "\n";
    } else if (fmt == "csv") {
        *o << "id,kind,params\n";
        for (const auto& e : registry()) {
            std::string ps;
            for (const auto& p : e.params) ps += (ps.empty() ? "" : ";") + p;
            *o << e.id << ',' << kind_name(e.kind) << ',' << ps << '\n';
        }
    } else {
        *o << catalog_text();
    }
    return 0;
}

std::string one_line(std::string s) {
    for (auto& ch : s)
        if (ch == '\n') ch = ' ';
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncated theta series and Bailey lattice verification", "qtheta"};
    app.require_subcommand(1);
    Flags f;
    std::map<std::string, CLI::App*> subs;
    for (const char* name : {"verify", "transform", "bailey"}) {
        CLI::App* s = app.add_subcommand(name, std::string(name) + " a registered display");
        add_common(s, f);
        add_params(s, f);
        subs[name] = s;
    }
    CLI::App* scan = app.add_subcommand("scan", "scan a series for negative coefficients");
    add_common(scan, f);
    add_params(scan, f);
    scan->add_option("--nmax", f.nmax, "last n scanned (default 200)");
    scan->add_flag("--permissive", f.permissive, "allow any modulus for conj-bm");
    subs["scan"] = scan;
    CLI::App* tab = app.add_subcommand("tabulate", "coefficients of a left side or scan sequence");
    add_common(tab, f);
    add_params(tab, f);
    tab->add_option("--nmax", f.nmax, "last n for scan sequences (default 200)");
    tab->add_flag("--permissive", f.permissive, "allow any modulus for conj-bm");
    subs["tabulate"] = tab;
    CLI::App* list = app.add_subcommand("list", "print the registry");
    add_common(list, f, false);
    subs["list"] = list;

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qtheta: " << one_line(e.what()) << "\n";
        return 2;
    }

    std::string cmd;
    for (const auto& [name, s] : subs)
        if (s->parsed()) cmd = name;
    try {
        if (cmd == "list") return do_list(f, out);
        if (cmd == "scan") return do_scan(f, out);
        if (cmd == "tabulate") return do_tabulate(f, out);
        return do_verify(cmd, f, out);
    } catch (const Usage& e) {
        err << "qtheta: " << one_line(e.what()) << "\n";
    } catch (const Error& e) {
        err << "qtheta: " << f.id << ": " << one_line(e.what()) << "\n";
    }
    return 2;
}

}  // namespace qtheta
