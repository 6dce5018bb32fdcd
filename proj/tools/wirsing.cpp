// Command-line front end: every computation and harness behind one binary
// with reproducible, machine-readable output.
//
// Output protocol: every stdout line is one compact JSON object.  Commands
// that produce record streams emit one line per record (the NDJSON schema)
// followed by a final report object; value commands emit the report only.
// With --out PREFIX the records go to PREFIX.ndjson (+ PREFIX.csv for P^1
// scan records) and the report to PREFIX.json, stdout keeping the report.
// Reports embed the resolved configuration and the precision cap; nothing
// depends on time, locale or environment, so identical configurations give
// byte-identical reports.
//
// Exit codes: 0 success, 1 assertion failure, 2 usage/hypothesis error,
// 3 precision exhausted or undecided comparisons present.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wirsing/errors.hpp"
#include "wirsing/experiments.hpp"
#include "wirsing/io.hpp"

using namespace wirsing;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

//=============================================================================
// Option plumbing: every option binds to a string; a config file fills any
// option the command line left untouched; the resolved set is embedded in
// the report.
//=============================================================================

struct OptionReg {
    CLI::Option* opt;
    std::string key;
    std::string* target;
};

struct Command {
    CLI::App* app = nullptr;
    std::vector<OptionReg> options;
    std::function<int()> run;

    std::string& add(const std::string& flag, std::string& target,
                     const std::string& help, std::string initial = "") {
        target = std::move(initial);
        CLI::Option* o = app->add_option(flag, target, help);
        const std::string key = o->get_lnames().empty() ? o->get_snames().front()
                                                        : o->get_lnames().front();
        options.push_back({o, key, &target});
        return target;
    }

    void apply_config(const std::string& path) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open config file \"" + path + "\"");
        for (const auto& [key, value] : io::parse_config_stream(in)) {
            bool known = false;
            for (OptionReg& reg : options) {
                if (reg.key != key) continue;
                known = true;
                if (reg.opt->count() == 0) *reg.target = value;
            }
            if (!known)
                throw UsageError("config key \"" + key +
                                 "\" is not an option of this command");
        }
    }

    Json config_json() const {
        Json j = Json::object();
        for (const OptionReg& reg : options)
            if (!reg.target->empty()) j[reg.key] = *reg.target;
        return j;
    }
};

//----------------------------------------------------------- value conversion

unsigned long to_ulong(const std::string& s, const std::string& what) {
    if (s.empty()) throw UsageError("missing " + what);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw UsageError("bad " + what + " \"" + s + "\"");
    return std::stoul(s);
}

Rat to_rat(const std::string& s, const std::string& what) {
    if (s.empty()) throw UsageError("missing " + what);
    try {
        return parse_rat(s);
    } catch (const Error&) {
        throw UsageError("bad " + what + " \"" + s + "\"");
    }
}

//=============================================================================
// Shared option groups and helpers.
//=============================================================================

struct GlobalOpts {
    std::string precision_cap, jobs, seed, out, config;
};

void add_global(Command& cmd, GlobalOpts& g) {
    cmd.add("--precision-cap", g.precision_cap, "enclosure precision cap in bits", "256");
    cmd.add("--jobs", g.jobs, "worker threads for scans", "1");
    cmd.add("--seed", g.seed, "run seed recorded in the report", "0");
    cmd.add("--out", g.out, "output path prefix (PREFIX.ndjson/.csv/.json)");
    cmd.add("--config", g.config, "key = value config file (flags override)");
}

struct PointOpts {
    std::string minpoly, root_index, point;
};

void add_point(Command& cmd, PointOpts& p) {
    cmd.add("--minpoly", p.minpoly, "minimal polynomial in x, e.g. \"x^2-2\"");
    cmd.add("--root-index", p.root_index, "conjugate index into the canonical order", "0");
    cmd.add("--point", p.point, "rational point: \"inf\", \"p/q\" or \"(a:b)\"");
}

AlgPoint make_point(const PointOpts& p) {
    if (!p.minpoly.empty() && !p.point.empty())
        throw UsageError("give either --minpoly or --point, not both");
    if (!p.minpoly.empty())
        return AlgPoint(io::parse_intpoly(p.minpoly),
                        static_cast<unsigned>(to_ulong(p.root_index, "--root-index")));
    if (!p.point.empty()) return AlgPoint(io::parse_p1_point(p.point));
    throw UsageError("a point is required (--minpoly or --point)");
}

ScanOptions make_scan_options(const GlobalOpts& g) {
    ScanOptions opt;
    opt.precision_cap =
        static_cast<mpfr_prec_t>(to_ulong(g.precision_cap, "--precision-cap"));
    if (opt.precision_cap < 64) throw UsageError("--precision-cap must be >= 64");
    opt.jobs = static_cast<unsigned>(to_ulong(g.jobs, "--jobs"));
    if (opt.jobs < 1) throw UsageError("--jobs must be >= 1");
    return opt;
}

//------------------------------------------------------------------- output

// sinks for record streams: stdout by default, PREFIX.ndjson with --out
struct RecordWriter {
    std::ofstream ndjson, csv;
    bool to_files = false;
    bool write_csv = false;

    RecordWriter(const GlobalOpts& g, bool csv_wanted) {
        if (g.out.empty()) return;
        to_files = true;
        ndjson.open(g.out + ".ndjson");
        if (!ndjson) throw UsageError("cannot write \"" + g.out + ".ndjson\"");
        if (csv_wanted) {
            csv.open(g.out + ".csv");
            if (!csv) throw UsageError("cannot write \"" + g.out + ".csv\"");
            csv << io::record_csv_header() << '\n';
            write_csv = true;
        }
    }

    void line(const Json& j) {
        if (to_files)
            ndjson << j.dump() << '\n';
        else
            std::cout << j.dump() << '\n';
    }

    void record(const ScanRecord& r) {
        line(io::record_json(r));
        if (write_csv) csv << io::record_csv_row(r) << '\n';
    }
};

void emit_report(const GlobalOpts& g, const Json& report) {
    std::cout << report.dump() << '\n';
    if (!g.out.empty()) {
        std::ofstream out(g.out + ".json");
        if (!out) throw UsageError("cannot write \"" + g.out + ".json\"");
        out << report.dump(2) << '\n';
    }
}

Json base_report(const std::string& command, const Command& cmd, const GlobalOpts& g) {
    Json j;
    j["command"] = command;
    j["config"] = cmd.config_json();
    j["precision_cap"] = to_ulong(g.precision_cap, "--precision-cap");
    return j;
}

Json interval_pair(const Interval& iv) { return Json::array({iv.lo(), iv.hi()}); }

Json alg_real_json(const AlgReal& x, mpfr_prec_t cap) {
    Json j = Json::object();
    if (x.is_exact()) j["exact"] = io::logval_str(x.exact_part());
    j["enclosure"] = interval_pair(x.enclosure(cap));
    return j;
}

//=============================================================================
// Subcommand bodies.
//=============================================================================

int run_height(Command& cmd, GlobalOpts& g, PointOpts& p) {
    const AlgPoint P = make_point(p);
    const mpfr_prec_t cap = make_scan_options(g).precision_cap;
    Json report = base_report("height", cmd, g);
    report["point"] = io::minpoly_str(P);
    report["degree"] = P.degree();
    report["h"] = alg_real_json(alg_height(P), cap);
    emit_report(g, report);
    return kExitOk;
}

int run_prox(Command& cmd, GlobalOpts& g, PointOpts& p, std::string& divisor,
             std::string& places) {
    const AlgPoint P = make_point(p);
    const Divisor1 D = io::parse_divisor(divisor);
    const PlaceSet S = io::parse_places(places);
    const mpfr_prec_t cap = make_scan_options(g).precision_cap;
    Json report = base_report("prox", cmd, g);
    report["point"] = io::minpoly_str(P);
    report["degree"] = P.degree();
    report["m"] = alg_real_json(prox_alg(P, D, S), cap);
    report["h"] = alg_real_json(alg_height(P), cap);
    emit_report(g, report);
    return kExitOk;
}

int run_psi(Command& cmd, GlobalOpts& g, PointOpts& p) {
    const AlgPoint P = make_point(p);
    Json report = base_report("psi", cmd, g);
    report["point"] = io::minpoly_str(P);
    report["psi"] = psi_point(P).str();
    emit_report(g, report);
    return kExitOk;
}

int run_sigma(Command& cmd, GlobalOpts& g, std::string& points) {
    if (points.empty()) throw UsageError("--points is required (';'-separated)");
    const std::vector<ProjPoint> tuple = io::parse_p1_list(points);
    Json report = base_report("sigma", cmd, g);
    report["sigma"] = sigma_point(tuple).str();
    emit_report(g, report);
    return kExitOk;
}

int run_phi_enum(Command& cmd, GlobalOpts& g, std::string& divisor, std::string& degree,
                 std::string& threshold) {
    const Divisor1 D = io::parse_divisor(divisor);
    const unsigned d = static_cast<unsigned>(to_ulong(degree, "--degree"));
    Json report = base_report("phi-enum", cmd, g);
    if (!threshold.empty()) report["t"] = io::rat_str(to_rat(threshold, "--threshold"));
    const std::vector<Rat1Map> maps = enumerate_phi(D, d);
    Json arr = Json::array();
    for (const Rat1Map& phi : maps) arr.push_back(phi.str());
    report["count"] = maps.size();
    report["maps"] = arr;
    emit_report(g, report);
    return kExitOk;
}

int run_z_member(Command& cmd, GlobalOpts& g, PointOpts& p, std::string& divisor,
                 std::string& degree, std::string& threshold) {
    const AlgPoint P = make_point(p);
    const Divisor1 D = io::parse_divisor(divisor);
    const unsigned d = static_cast<unsigned>(to_ulong(degree, "--degree"));
    const Rat t = to_rat(threshold, "--threshold");
    const ZResult res = z_member(P, D, d, t);
    Json report = base_report("z-member", cmd, g);
    report["point"] = io::minpoly_str(P);
    report["status"] = res.status == Membership::In ? "In" : "Out";
    report["witness"] = res.status == Membership::In ? io::witness_json(res.witness)
                                                     : Json(nullptr);
    emit_report(g, report);
    return kExitOk;
}

int run_classify(Command& cmd, GlobalOpts& g, std::string& lines) {
    const LineConfig cfg = io::parse_lines(lines);
    const TypeTag tag = classify_type(cfg);
    Json report = base_report("classify", cmd, g);
    report["result"] = tag.str();
    report["c"] = io::rat_str(tag.c);
    if (tag.repeated)
        report["repeated"] = Json::array({tag.repeated->first, tag.repeated->second});
    Json triples = Json::array();
    for (const ProjPoint& q : tag.triples) triples.push_back(q.str());
    report["triple_points"] = triples;
    emit_report(g, report);
    return kExitOk;
}

int run_scan(Command& cmd, GlobalOpts& g, std::string& divisor, std::string& places,
             std::string& degree, std::string& bound, std::string& threshold,
             bool flagged_only) {
    const Divisor1 D = io::parse_divisor(divisor);
    const PlaceSet S = io::parse_places(places);
    const unsigned d = static_cast<unsigned>(to_ulong(degree, "--degree"));
    const Int B(to_ulong(bound, "--coeff-bound"));
    const Rat t = to_rat(threshold, "--threshold");
    const ScanOptions opt = make_scan_options(g);

    RecordWriter writer(g, /*csv_wanted=*/true);
    std::size_t in = 0, out = 0, undecided_flags = 0;
    // the identity m <= deg(D) h (+0 with an archimedean place in S) gives a
    // hard certified cap on every flag's ratio; a violation is an arithmetic
    // bug, never data
    const double ratio_cap = Rat(D.deg()).get_d() + 0.1;
    bool ratio_violation = false;
    const bool arch = contains_arch(S);
    ScanSummary sum = ratio_scan(D, S, d, B, t, opt, [&](const ScanRecord& r) {
        if (r.flagged) {
            if (r.z == ZStatus::In) ++in;
            else if (r.z == ZStatus::Out) ++out;
            else if (r.z == ZStatus::Undecided) ++undecided_flags;
            if (arch && r.ratio_lo() > ratio_cap) ratio_violation = true;
        }
        if (r.flagged || !flagged_only) writer.record(r);
    });

    Json report = base_report("scan", cmd, g);
    Json summary;
    summary["scanned"] = sum.scanned;
    summary["flagged"] = sum.flagged.size();
    summary["in"] = in;
    summary["out"] = out;
    summary["undecided"] = sum.undecided;
    summary["skipped_support"] = sum.skipped_support;
    summary["skipped_height_zero"] = sum.skipped_height_zero;
    summary["ratio_cap"] = ratio_cap;
    summary["ratio_cap_ok"] = !ratio_violation;
    report["summary"] = summary;
    emit_report(g, report);
    if (ratio_violation) return kExitAssertion;
    if (sum.undecided > 0) return kExitUndecided;
    return kExitOk;
}

int run_tbor(Command& cmd, GlobalOpts& g, std::string& map, std::string& divisor,
             std::string& places, std::string& count) {
    const Rat1Map phi = io::parse_map(map);
    const Divisor1 D = io::parse_divisor(divisor);
    const PlaceSet S = io::parse_places(places);
    const std::size_t n = to_ulong(count, "--count");
    const ScanOptions opt = make_scan_options(g);

    const FamilySummary fam = tbor_family(phi, D, S, n, opt);
    RecordWriter writer(g, /*csv_wanted=*/true);
    double max_defect = 0;
    std::size_t stable_after = 0;
    for (std::size_t i = 0; i < fam.records.size(); ++i) {
        writer.record(fam.records[i]);
        const double dhi = fam.records[i].defect ? fam.records[i].defect->hi() : 0;
        if (i == 0 || dhi > max_defect) {
            max_defect = std::max(max_defect, dhi);
            stable_after = i;
        }
    }

    Json report = base_report("tbor", cmd, g);
    Json profiles = Json::array();
    for (const UnitProfile& u : fam.profiles) profiles.push_back(io::profile_json(u));
    report["profiles"] = profiles;
    Json summary;
    summary["requested"] = n;
    summary["produced"] = fam.records.size();
    summary["degenerate_skipped"] = fam.degenerate_skipped;
    summary["reducible_discarded"] = fam.reducible_discarded;
    summary["height_zero_skipped"] = fam.height_zero_skipped;
    summary["max_defect_hi"] = max_defect;
    summary["defect_max_last_raised_at"] = stable_after;
    report["summary"] = summary;
    emit_report(g, report);
    return kExitOk;
}

int run_sharp(Command& cmd, GlobalOpts& g, std::string& kind, std::string& lines,
              std::string& places, std::string& steps) {
    const ConfigTag tag = io::parse_kind(kind);
    const LineConfig cfg = io::parse_lines(lines);
    const PlaceSet S = io::parse_places(places);
    const std::size_t n = to_ulong(steps, "--steps");
    const ScanOptions opt = make_scan_options(g);

    const SharpSummary fam = sharp_family(tag, cfg, S, n, opt);
    RecordWriter writer(g, /*csv_wanted=*/false);
    for (const PlaneRecord& r : fam.records) writer.line(io::plane_record_json(r));

    Json report = base_report("sharp", cmd, g);
    Json profiles = Json::array();
    for (const UnitProfile& u : fam.profiles) profiles.push_back(io::profile_json(u));
    report["profiles"] = profiles;
    Json summary;
    summary["steps"] = n;
    summary["produced"] = fam.records.size();
    summary["skipped_on_lines"] = fam.skipped_on_lines;
    if (!fam.records.empty()) {
        summary["last_ratio_lo"] = fam.records.back().ratio_lo();
        summary["last_ratio_hi"] = fam.records.back().ratio_hi();
    }
    report["summary"] = summary;
    emit_report(g, report);
    return kExitOk;
}

int run_td3b(Command& cmd, GlobalOpts& g, std::string& divisor, std::string& places,
             std::string& threshold, std::string& count) {
    const Divisor1 D = io::parse_divisor(divisor);
    const PlaceSet S = io::parse_places(places);
    const Rat t = to_rat(threshold, "--threshold");
    const std::size_t n = to_ulong(count, "--count");
    const ScanOptions opt = make_scan_options(g);

    const FamilySummary fam = td3b_family(D, S, t, n, opt);
    RecordWriter writer(g, /*csv_wanted=*/true);
    bool certified = true;
    for (const ScanRecord& r : fam.records) {
        writer.record(r);
        if (!r.flagged || r.z != ZStatus::Out || r.point.degree() != 3) certified = false;
    }

    Json report = base_report("td3b", cmd, g);
    Json summary;
    summary["requested"] = n;
    summary["produced"] = fam.records.size();
    summary["reducible_discarded"] = fam.reducible_discarded;
    summary["uncertified_discarded"] = fam.uncertified_discarded;
    summary["member_discarded"] = fam.member_discarded;
    summary["on_divisor_skipped"] = fam.on_divisor_skipped;
    summary["all_certified_out"] = certified;
    report["summary"] = summary;
    emit_report(g, report);
    return certified ? kExitOk : kExitAssertion;
}

int run_density(Command& cmd, GlobalOpts& g, std::string& points, std::string& kind,
                std::string& lines, std::string& places, std::string& steps,
                std::string& deg_bound) {
    const unsigned e = static_cast<unsigned>(to_ulong(deg_bound, "--deg-bound"));
    std::vector<ProjPoint> pts;
    if (!points.empty()) {
        pts = io::parse_point_list(points);
    } else {
        if (kind.empty() || lines.empty() || places.empty())
            throw UsageError("density-check wants --points or a sharp family "
                             "(--kind, --lines, --places, --steps)");
        const SharpSummary fam =
            sharp_family(io::parse_kind(kind), io::parse_lines(lines),
                         io::parse_places(places), to_ulong(steps, "--steps"),
                         make_scan_options(g));
        const std::size_t take = std::min<std::size_t>(15, fam.records.size());
        for (std::size_t i = 0; i < take; ++i) pts.push_back(fam.records[i].point);
    }
    const bool dense = zariski_density_check(pts, e);
    Json report = base_report("density-check", cmd, g);
    report["deg_bound"] = e;
    report["points_used"] = pts.size();
    report["dense"] = dense;
    emit_report(g, report);
    return dense ? kExitOk : kExitAssertion;
}

//=============================================================================
// Wiring.
//=============================================================================

void err_json(const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Diophantine-approximation workbench for P^1(Qbar)"};
    app.require_subcommand(1);

    std::vector<Command> cmds(12);
    std::vector<GlobalOpts> globals(12);
    std::vector<PointOpts> points(12);
    // option storage that must outlive parsing
    std::string s_divisor[12], s_places[12], s_degree[12], s_threshold[12];
    std::string s_bound, s_count[12], s_steps[12], s_map, s_lines[12], s_kind[12];
    std::string s_points[12], s_deg_bound;
    bool flagged_only = false;

    auto setup = [&](std::size_t i, const std::string& name, const std::string& help) {
        cmds[i].app = app.add_subcommand(name, help);
        add_global(cmds[i], globals[i]);
        return cmds[i].app;
    };

    // ---- value commands
    setup(0, "height", "absolute logarithmic Weil height of a point");
    add_point(cmds[0], points[0]);
    cmds[0].run = [&] { return run_height(cmds[0], globals[0], points[0]); };

    setup(1, "prox", "proximity m_{D,S} and height of a point");
    add_point(cmds[1], points[1]);
    cmds[1].add("--divisor", s_divisor[1], "divisor points, e.g. \"0,1,inf,2\"");
    cmds[1].add("--places", s_places[1], "places, e.g. \"inf,2,3\"");
    cmds[1].run = [&] {
        return run_prox(cmds[1], globals[1], points[1], s_divisor[1], s_places[1]);
    };

    setup(2, "psi", "coefficient point of the minimal form in P^d");
    add_point(cmds[2], points[2]);
    cmds[2].run = [&] { return run_psi(cmds[2], globals[2], points[2]); };

    setup(3, "sigma", "coefficient point of a product of P^1 points");
    cmds[3].add("--points", s_points[3], "';'-separated P^1 points");
    cmds[3].run = [&] { return run_sigma(cmds[3], globals[3], s_points[3]); };

    setup(4, "phi-enum", "the degree-d exceptional map family of a divisor");
    cmds[4].add("--divisor", s_divisor[4], "divisor points or \"six-points\"");
    cmds[4].add("-d,--degree", s_degree[4], "map degree d");
    cmds[4].add("-t,--threshold", s_threshold[4], "threshold t (echoed)");
    cmds[4].run = [&] {
        return run_phi_enum(cmds[4], globals[4], s_divisor[4], s_degree[4],
                            s_threshold[4]);
    };

    setup(5, "z-member", "decide membership in the exceptional set Z(D,d,t)");
    add_point(cmds[5], points[5]);
    cmds[5].add("--divisor", s_divisor[5], "divisor points");
    cmds[5].add("-d,--degree", s_degree[5], "degree bound d");
    cmds[5].add("-t,--threshold", s_threshold[5], "threshold t as \"p/q\"");
    cmds[5].run = [&] {
        return run_z_member(cmds[5], globals[5], points[5], s_divisor[5], s_degree[5],
                            s_threshold[5]);
    };

    setup(6, "classify", "classify a P^2 line configuration (Type I/II/III)");
    cmds[6].add("--lines", s_lines[6], "';'-separated linear forms in x,y,z");
    cmds[6].run = [&] { return run_classify(cmds[6], globals[6], s_lines[6]); };

    // ---- harnesses
    setup(7, "scan", "bounded-degree ratio scan with exceptional-set status");
    cmds[7].add("--divisor", s_divisor[7], "divisor points");
    cmds[7].add("--places", s_places[7], "places");
    cmds[7].add("-d,--degree", s_degree[7], "point degree bound (<= 3)");
    cmds[7].add("-B,--coeff-bound", s_bound, "coefficient bound");
    cmds[7].add("-t,--threshold", s_threshold[7], "flag threshold t as \"p/q\"");
    cmds[7].app->add_flag("--flagged-only", flagged_only,
                          "emit only flagged records to the stream");
    cmds[7].run = [&] {
        return run_scan(cmds[7], globals[7], s_divisor[7], s_places[7], s_degree[7],
                        s_bound, s_threshold[7], flagged_only);
    };

    setup(8, "tbor", "S-unit pullback family of a self-map");
    cmds[8].add("--map", s_map, "rational self-map, e.g. \"x^2\" or \"x^2-1;x\"");
    cmds[8].add("--divisor", s_divisor[8], "divisor points");
    cmds[8].add("--places", s_places[8], "places");
    cmds[8].add("--count", s_count[8], "records to produce", "50");
    cmds[8].run = [&] {
        return run_tbor(cmds[8], globals[8], s_map, s_divisor[8], s_places[8],
                        s_count[8]);
    };

    setup(9, "sharp", "sharpness family for a line configuration in P^2");
    cmds[9].add("--kind", s_kind[9], "configuration kind: I, II or III");
    cmds[9].add("--lines", s_lines[9], "';'-separated linear forms in x,y,z");
    cmds[9].add("--places", s_places[9], "places");
    cmds[9].add("--steps", s_steps[9], "family steps", "20");
    cmds[9].run = [&] {
        return run_sharp(cmds[9], globals[9], s_kind[9], s_lines[9], s_places[9],
                         s_steps[9]);
    };

    setup(10, "td3b", "degree-3 family exceeding t*h outside Z (q = 6)");
    cmds[10].add("--divisor", s_divisor[10], "six rational points");
    cmds[10].add("--places", s_places[10], "places (three, with inf)");
    cmds[10].add("-t,--threshold", s_threshold[10], "t in (4, 9/2) as \"p/q\"");
    cmds[10].add("--count", s_count[10], "records to produce", "20");
    cmds[10].run = [&] {
        return run_td3b(cmds[10], globals[10], s_divisor[10], s_places[10],
                        s_threshold[10], s_count[10]);
    };

    setup(11, "density-check", "no form of degree <= e vanishes on the points");
    cmds[11].add("--points", s_points[11], "';'-separated P^2 points");
    cmds[11].add("--kind", s_kind[11], "sharp family kind (with --lines)");
    cmds[11].add("--lines", s_lines[11], "sharp family lines");
    cmds[11].add("--places", s_places[11], "sharp family places");
    cmds[11].add("--steps", s_steps[11], "sharp family steps", "20");
    cmds[11].add("--deg-bound", s_deg_bound, "form degree bound e", "3");
    cmds[11].run = [&] {
        return run_density(cmds[11], globals[11], s_points[11], s_kind[11], s_lines[11],
                           s_places[11], s_steps[11], s_deg_bound);
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        err_json("UsageError", e.what());
        return kExitUsage;
    }

    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (!cmds[i].app->parsed()) continue;
        try {
            cmds[i].apply_config(globals[i].config);
            return cmds[i].run();
        } catch (const PrecisionExhausted& e) {
            err_json(e.kind(), e.what());
            return kExitUndecided;
        } catch (const Error& e) {
            err_json(e.kind(), e.what());
            return kExitUsage;
        } catch (const std::exception& e) {
            err_json("Error", e.what());
            return kExitUsage;
        }
    }
    err_json("UsageError", "no subcommand given");
    return kExitUsage;
}
