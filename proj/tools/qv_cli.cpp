#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qv/catalog.hpp"
#include "qv/positivity.hpp"
#include "qv/qexpr.hpp"
#include "qv/report.hpp"
#include "qv/sweep.hpp"

namespace {

using qv::FamilyDesc;
using qv::Params;
using qv::VerificationRecord;

struct Bound {
    bool symbolic = false;
    long value = 0;
    std::string param;
    long offset = 0;
};

struct Range {
    Bound lo, hi;
};

Bound parse_bound(const std::string& t) {
    if (t.empty()) throw std::runtime_error("empty range bound");
    std::size_t i = 0;
    if (t[0] == '-' || std::isdigit(static_cast<unsigned char>(t[0]))) {
        long v = std::stol(t, &i);
        if (i != t.size()) throw std::runtime_error("bad bound '" + t + "'");
        Bound b;
        b.value = v;
        return b;
    }
    Bound b;
    b.symbolic = true;
    while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_')) ++i;
    b.param = t.substr(0, i);
    if (i < t.size()) {
        if (t[i] != '+' && t[i] != '-') throw std::runtime_error("bad bound '" + t + "'");
        std::size_t used = 0;
        b.offset = std::stol(t.substr(i), &used);
        if (i + used != t.size()) throw std::runtime_error("bad bound '" + t + "'");
    }
    return b;
}

Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        Bound b = parse_bound(s);
        return {b, b};
    }
    return {parse_bound(s.substr(0, pos)), parse_bound(s.substr(pos + 2))};
}

long resolve_bound(const Bound& b, const Params& cur) {
    if (!b.symbolic) return b.value;
    auto it = cur.find(b.param);
    if (it == cur.end())
        throw std::runtime_error("bound references '" + b.param +
                                 "', which is not set at that point");
    return it->second + b.offset;
}

// Cartesian expansion in registry parameter order; symbolic bounds may refer
// to any parameter that comes earlier. Tuples failing the family's own
// validation (cross constraints) are skipped, matching the default grids.
std::vector<Params> expand_grid(const FamilyDesc& fam,
                                const std::map<std::string, Range>& given, bool full) {
    if (given.empty()) return qv::default_grid(fam, full);
    std::vector<Params> out;
    Params cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == fam.params.size()) {
            std::string why;
            if (qv::validate_params(fam, cur, &why)) out.push_back(cur);
            return;
        }
        const qv::ParamSpec& ps = fam.params[idx];
        long lo, hi;
        auto it = given.find(ps.name);
        if (it != given.end()) {
            lo = resolve_bound(it->second.lo, cur);
            hi = resolve_bound(it->second.hi, cur);
        } else {
            lo = ps.grid_lo;
            hi = ps.unbounded ? (full ? ps.full_hi : ps.smoke_hi) : ps.hi.resolve(cur);
        }
        for (long x = lo; x <= hi; ++x) {
            cur[ps.name] = x;
            rec(idx + 1);
        }
        cur.erase(ps.name);
    };
    rec(0);
    return out;
}

int exit_code(const std::vector<VerificationRecord>& rs) {
    bool bad = false, err = false;
    for (const auto& r : rs) {
        if (r.status == qv::Status::Error)
            err = true;
        else if (!r.ok())
            bad = true;
    }
    return err ? 3 : bad ? 1 : 0;
}

void print_records(const std::vector<VerificationRecord>& rs, bool json, bool csv) {
    if (json) {
        std::cout << qv::records_json(rs);
        return;
    }
    if (csv) {
        std::cout << qv::csv_header() << "\n";
        for (const auto& r : rs) std::cout << qv::record_csv(r) << "\n";
        return;
    }
    long ok = 0;
    for (const auto& r : rs) {
        std::cout << qv::record_text(r) << "\n";
        if (r.ok()) ++ok;
    }
    std::cout << ok << "/" << rs.size() << " cells verified\n";
}

std::string param_range_str(const qv::ParamSpec& ps) {
    std::string s = ps.name + "=";
    if (ps.no_lo)
        s += "int";
    else
        s += std::to_string(ps.lo);
    if (!ps.unbounded) {
        s += "..";
        if (ps.hi.symbolic) {
            s += ps.hi.param;
            if (ps.hi.offset > 0) s += "+" + std::to_string(ps.hi.offset);
            if (ps.hi.offset < 0) s += std::to_string(ps.hi.offset);
        } else {
            s += std::to_string(ps.hi.value);
        }
    } else if (!ps.no_lo) {
        s += "..";
    }
    return s;
}

int run_families(bool json) {
    if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& f : qv::registry()) {
            nlohmann::ordered_json j;
            j["id"] = f.id;
            j["kind"] = qv::kind_name(f.kind);
            nlohmann::ordered_json ps = nlohmann::ordered_json::array();
            for (const auto& p : f.params) ps.push_back(param_range_str(p));
            j["params"] = std::move(ps);
            j["sketch"] = f.sketch;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& f : qv::registry()) {
        std::cout << f.id << " (" << qv::kind_name(f.kind) << ")";
        if (!f.params.empty()) {
            std::cout << " [";
            for (std::size_t i = 0; i < f.params.size(); ++i)
                std::cout << (i ? ", " : "") << param_range_str(f.params[i]);
            std::cout << "]";
        }
        std::cout << "\n    " << f.sketch << "\n";
    }
    return 0;
}

int run_verify(const std::string& family, const std::map<std::string, std::string>& raw,
               const std::string& level, std::optional<long> trunc, int jobs, bool json,
               bool csv) {
    const FamilyDesc* fam = qv::lookup(family);
    if (!fam) {
        std::cerr << "unknown family '" << family << "' (see `families`)\n";
        return 2;
    }
    std::map<std::string, Range> given;
    for (const auto& kv : raw) {
        bool known = false;
        for (const auto& ps : fam->params) known |= (ps.name == kv.first);
        if (!known) {
            std::cerr << "family " << fam->id << " has no parameter '" << kv.first << "'\n";
            return 2;
        }
        try {
            given[kv.first] = parse_range(kv.second);
        } catch (const std::exception& e) {
            std::cerr << "bad range for --" << kv.first << ": " << e.what() << "\n";
            return 2;
        }
    }
    bool full = (level == "full");
    std::vector<Params> grid;
    try {
        grid = expand_grid(*fam, given, full);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    long T = trunc ? *trunc : (given.empty() && fam->kind == qv::FamilyKind::series
                                   ? (full ? fam->trunc_full : fam->trunc_smoke)
                                   : 100);
    auto records = qv::parallel_map<VerificationRecord>(
        grid.size(), [&](std::size_t i) { return qv::verify(fam->id, grid[i], T); }, jobs);
    print_records(records, json, csv);
    return exit_code(records);
}

int run_verify_all(const std::string& level, std::optional<long> trunc, int jobs, bool json,
                   bool csv) {
    bool full = (level == "full");
    struct Task {
        const FamilyDesc* fam;
        Params p;
        long trunc;
    };
    std::vector<Task> tasks;
    for (const auto& fam : qv::registry()) {
        long T = trunc ? *trunc : (full ? fam.trunc_full : fam.trunc_smoke);
        for (auto& p : qv::default_grid(fam, full)) tasks.push_back({&fam, std::move(p), T});
    }
    auto records = qv::parallel_map<VerificationRecord>(
        tasks.size(),
        [&](std::size_t i) { return qv::verify(tasks[i].fam->id, tasks[i].p, tasks[i].trunc); },
        jobs);
    print_records(records, json, csv);
    return exit_code(records);
}

int run_scan(const std::string& Ks, const std::string& Ns, const std::string& Ms,
             const std::string& resume, int jobs, bool json) {
    long Klo, Khi, Nlo, Nhi, Mlo, Mhi;
    try {
        Params none;
        Range K = parse_range(Ks), N = parse_range(Ns), M = parse_range(Ms);
        Klo = resolve_bound(K.lo, none);
        Khi = resolve_bound(K.hi, none);
        Nlo = resolve_bound(N.lo, none);
        Nhi = resolve_bound(N.hi, none);
        Mlo = resolve_bound(M.lo, none);
        Mhi = resolve_bound(M.hi, none);
    } catch (const std::exception& e) {
        std::cerr << "bad scan range: " << e.what() << "\n";
        return 2;
    }
    auto cells = qv::enumerate_domain(Klo, Khi, Nlo, Nhi, Mlo, Mhi);
    std::set<std::string> done;
    if (!resume.empty()) {
        std::ifstream in(resume);
        if (in) done = qv::load_checkpoint(in);
    }
    std::vector<const qv::ConjectureCell*> todo;
    for (const auto& c : cells)
        if (!done.count(qv::checkpoint_key(c.g))) todo.push_back(&c);
    auto records = qv::parallel_map<VerificationRecord>(
        todo.size(), [&](std::size_t i) { return qv::check_cell(*todo[i]); }, jobs);
    if (!resume.empty()) {
        std::ofstream out(resume, std::ios::app);
        for (std::size_t i = 0; i < todo.size(); ++i)
            out << qv::checkpoint_line(todo[i]->g, records[i].status) << "\n";
    }
    if (json) {
        std::cout << qv::records_json(records);
    } else {
        for (const auto& r : records)
            if (!r.ok()) std::cout << qv::record_text(r) << "\n";
        std::cout << "scanned " << todo.size() << " cells (" << (cells.size() - todo.size())
                  << " already checkpointed), violations: "
                  << std::count_if(records.begin(), records.end(),
                                   [](const VerificationRecord& r) { return !r.ok(); })
                  << "\n";
    }
    return exit_code(records);
}

int run_series(const std::string& text, long trunc) {
    qv::ExprPtr ast;
    try {
        ast = qv::parse_expr(text);
    } catch (const qv::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    }
    qv::QSeries s = qv::eval_expr(*ast, trunc);
    for (long e = 0; e <= trunc; ++e) std::cout << e << " " << s.at(e).get_str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-series identities and positivity scans"};
    app.require_subcommand(1);

    auto* fams = app.add_subcommand("families", "list the verification families");
    bool fams_json = false;
    fams->add_flag("--json", fams_json, "machine-readable listing");

    static const std::vector<std::string> param_names = {
        "v", "i", "Delta", "L", "M", "n", "b", "a", "j", "m1", "m2",
        "alpha", "beta", "zsign", "zexp", "k"};

    auto* ver = app.add_subcommand("verify", "verify one family over parameter ranges");
    std::string ver_family, ver_level = "smoke";
    std::map<std::string, std::string> ver_ranges;
    std::optional<long> ver_trunc;
    int ver_jobs = qv::default_jobs();
    bool ver_json = false, ver_csv = false;
    ver->add_option("--family", ver_family, "family id (see `families`)")->required();
    for (const auto& n : param_names)
        ver->add_option("--" + n, ver_ranges[n],
                        "range a..b for parameter " + n + " (upper bound may be symbolic)");
    ver->add_option("--truncate", ver_trunc, "series truncation order");
    ver->add_option("--level", ver_level, "grid level when no ranges are given: smoke|full")
        ->check(CLI::IsMember({"smoke", "full"}));
    ver->add_option("--jobs", ver_jobs, "parallel workers");
    ver->add_flag("--json", ver_json, "JSON report");
    ver->add_flag("--csv", ver_csv, "CSV report");

    auto* vall = app.add_subcommand("verify-all", "verify every family over its default grid");
    std::string vall_level = "smoke";
    std::optional<long> vall_trunc;
    int vall_jobs = qv::default_jobs();
    bool vall_json = false, vall_csv = false;
    vall->add_option("--level", vall_level, "smoke|full")
        ->check(CLI::IsMember({"smoke", "full"}));
    vall->add_option("--truncate", vall_trunc, "override per-family series truncation");
    vall->add_option("--jobs", vall_jobs, "parallel workers");
    vall->add_flag("--json", vall_json, "JSON report");
    vall->add_flag("--csv", vall_csv, "CSV report");

    auto* scan = app.add_subcommand("scan", "positivity scan over the conjectured domain");
    std::string scan_K = "1..3", scan_N = "0..6", scan_M = "0..6", scan_resume;
    int scan_jobs = qv::default_jobs();
    bool scan_json = false;
    scan->add_option("--K", scan_K, "range of K");
    scan->add_option("--N", scan_N, "range of N");
    scan->add_option("--M", scan_M, "range of M");
    scan->add_option("--resume", scan_resume, "checkpoint file (read, then appended)");
    scan->add_option("--jobs", scan_jobs, "parallel workers");
    scan->add_flag("--json", scan_json, "JSON report");

    auto* ser = app.add_subcommand("series", "evaluate an expression as a truncated series");
    std::string ser_expr;
    long ser_trunc = 100;
    ser->add_option("expr", ser_expr, "expression, e.g. \"P(q;q;inf)\"")->required();
    ser->add_option("--truncate", ser_trunc, "truncation order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (fams->parsed()) return run_families(fams_json);
        if (ver->parsed()) {
            std::map<std::string, std::string> raw;
            for (const auto& kv : ver_ranges)
                if (ver->count("--" + kv.first) > 0) raw[kv.first] = kv.second;
            return run_verify(ver_family, raw, ver_level, ver_trunc, ver_jobs, ver_json,
                              ver_csv);
        }
        if (vall->parsed())
            return run_verify_all(vall_level, vall_trunc, vall_jobs, vall_json, vall_csv);
        if (scan->parsed())
            return run_scan(scan_K, scan_N, scan_M, scan_resume, scan_jobs, scan_json);
        if (ser->parsed()) return run_series(ser_expr, ser_trunc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
