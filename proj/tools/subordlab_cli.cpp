// Command-line front end: reproducible verification runs over the
// admissibility scanner, the constants table, the root equations, the
// implication corroborator and the class-membership oracle.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subordlab/power_series_io.hpp"
#include "subordlab/subordlab.hpp"

using json = nlohmann::json;
using namespace subordlab;

namespace {

constexpr const char* kVersion = "subordlab 1.0.0";

// exit-code scheme: 0 ok / 1 negative result / 2 tolerance fail /
// 3 inconclusive / 64 usage / 65 data
constexpr int kOk = 0, kNegative = 1, kTolerance = 2, kInconclusive = 3,
              kUsage = 64, kData = 65;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SUBORDLAB_SEED"))
        return std::stoull(env);
    return kDefaultSeed;
}

json verdict_json(const Verdict& v) {
    json j{{"status", to_string(v.status)},
           {"samples_checked", v.samples_checked}};
    if (v.witness) {
        j["witness"] = {{"z", {v.witness->z.real(), v.witness->z.imag()}},
                        {"value",
                         {v.witness->value.real(), v.witness->value.imag()}},
                        {"margin", v.witness->margin}};
    }
    return j;
}

json admissibility_json(const AdmissibilityReport& rep) {
    return json{{"admissible", rep.admissible},
                {"min_margin", rep.min_margin},
                {"argmin",
                 {{"theta", rep.argmin.theta},
                  {"m", rep.argmin.m},
                  {"nu", {rep.argmin.nu.real(), rep.argmin.nu.imag()}}}},
                {"samples", rep.samples},
                {"grid",
                 {{"theta_points", rep.grid_spec.theta_points},
                  {"m_points", rep.grid_spec.m_points},
                  {"m_max", rep.grid_spec.m_max}}}};
}

json constants_json(const ConstantsReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"id", r.id},
                        {"expr", r.expr},
                        {"computed", r.computed},
                        {"printed", r.printed},
                        {"abs_diff", r.abs_diff},
                        {"note", r.note}});
    return json{{"rows", rows}, {"flags", rep.flags}};
}

std::vector<CorpusFunction> build_corpus(const std::vector<std::string>& specs,
                                         std::uint64_t seed) {
    if (specs.empty()) return standard_corpus(seed);
    auto field = [](const std::string& s, const std::string& key,
                    double fallback) {
        auto pos = s.find(key + "=");
        if (pos == std::string::npos) return fallback;
        return std::stod(s.substr(pos + key.size() + 1));
    };
    std::vector<CorpusFunction> out;
    for (const std::string& spec : specs) {
        if (spec == "standard") {
            auto c = standard_corpus(seed);
            out.insert(out.end(), c.begin(), c.end());
        } else if (spec.rfind("schwarz:", 0) == 0) {
            int count = static_cast<int>(field(spec, "count", 500));
            int k = static_cast<int>(field(spec, "k", 3));
            auto c = schwarz_corpus(count, seed, k);
            out.insert(out.end(), c.begin(), c.end());
        } else if (spec.rfind("series:", 0) == 0) {
            int count = static_cast<int>(field(spec, "count", 500));
            double env = field(spec, "envelope", 0.5);
            auto c = series_corpus(count, seed, env);
            out.insert(out.end(), c.begin(), c.end());
        } else if (spec.rfind("file:", 0) == 0) {
            PowerSeries p = load_series(spec.substr(5));
            out.push_back(
                {spec, [p](cplx z) { return p.jet(z); }});
        } else {
            throw ParseError("unrecognized corpus spec: " + spec);
        }
    }
    return out;
}

int run_constants(bool as_json, double tol) {
    ConstantsReport rep = constants_table();
    bool ok = true;
    for (const auto& r : rep.rows) ok = ok && r.abs_diff <= tol;
    if (as_json) {
        json j = constants_json(rep);
        j["tolerance"] = tol;
        j["within_tolerance"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%-8s %-32s %16s %12s %10s\n", "id", "expr", "computed",
                    "printed", "diff");
        for (const auto& r : rep.rows)
            std::printf("%-8s %-32s %16.10f %12.5f %10.2e%s\n", r.id.c_str(),
                        r.expr.c_str(), r.computed, r.printed, r.abs_diff,
                        r.note.empty() ? "" : "  [note]");
        for (const auto& r : rep.rows)
            if (!r.note.empty())
                std::cout << "note(" << r.id << "): " << r.note << "\n";
        for (const auto& f : rep.flags) std::cout << "flag: " << f << "\n";
        std::cout << (ok ? "all constants within " : "constants exceed ")
                  << tol << "\n";
    }
    return ok ? kOk : kTolerance;
}

int run_admissible(const std::string& psi_id, const std::string& region_spec,
                   const PsiParams& params, double m_max, int jobs,
                   bool as_json, const std::string& trace_path) {
    PsiExpr psi = make_psi(psi_id, params);
    Region region = parse_region(region_spec);
    GridSpec grid;
    grid.m_max = m_max;
    grid.jobs = jobs;
    AdmissibilityReport rep = min_exclusion(psi, region, grid);

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        out << "theta,margin\n";
        int nth = 2048;
        for (int i = 0; i < nth; ++i) {
            double th = 2.0 * std::numbers::pi * i / nth;
            AdmissibilityPoint pt{th, rep.argmin.m, rep.argmin.nu};
            out << th << "," << detail::proof_margin_at(psi, region, pt) << "\n";
        }
    }

    if (as_json) {
        json j = admissibility_json(rep);
        j["psi"] = psi_id;
        j["region"] = region.describe();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "psi " << psi_id << " over " << region.describe() << "\n"
                  << "min_margin " << rep.min_margin << " at theta="
                  << rep.argmin.theta << " m=" << rep.argmin.m << "\n"
                  << (rep.admissible ? "admissible" : "not admissible") << "\n";
    }
    return rep.admissible ? kOk : kNegative;
}

int run_roots(const std::string& eq_id, int n,
              std::optional<std::pair<double, double>> bracket, bool as_json) {
    std::optional<std::pair<long double, long double>> br;
    if (bracket) br = {static_cast<long double>(bracket->first),
                       static_cast<long double>(bracket->second)};
    RootResult res = solve_root(eq_id, n, br);
    const RootEquation& eq = find_equation(eq_id);
    long double lo = br ? br->first : eq.lo;
    long double hi = br ? br->second : eq.hi;
    int changes = sign_changes([&](long double x) { return eq.f(x, n); }, lo, hi);
    if (as_json) {
        std::cout << json{{"equation", eq_id},
                          {"n", n},
                          {"root", static_cast<double>(res.root)},
                          {"residual", static_cast<double>(res.residual)},
                          {"bracket_width",
                           static_cast<double>(res.bracket_width)},
                          {"iterations", res.iterations},
                          {"sign_changes", changes}}
                         .dump(2)
                  << "\n";
    } else {
        std::printf("%s (n=%d): root %.15Lg  residual %.3Lg  bracket %.3Lg  "
                    "iterations %d  sign_changes %d\n",
                    eq_id.c_str(), n, res.root, res.residual,
                    res.bracket_width, res.iterations, changes);
    }
    return kOk;
}

int run_check_implication(const std::string& psi_id, PsiParams params,
                          bool beta_given, const std::string& hyp_spec,
                          const std::string& con_spec,
                          const std::vector<std::string>& corpus_specs,
                          std::uint64_t seed, int jobs, bool as_json) {
    if (beta_given && !psi_takes_beta(psi_id)) {
        std::cerr << "warning: " << psi_id
                  << " takes no beta parameter; --beta ignored\n";
        params.beta = 0.0;
    }
    PsiExpr psi = make_psi(psi_id, params);
    Region hyp = parse_region(hyp_spec);
    Region con = parse_region(con_spec);
    std::vector<CorpusFunction> corpus = build_corpus(corpus_specs, seed);
    SubGrid grid;
    grid.jobs = jobs;
    ImplicationRecord rec = implication_test(psi, hyp, con, corpus, grid);
    if (as_json) {
        std::cout << json{{"psi", psi_id},
                          {"hypothesis", hyp.describe()},
                          {"conclusion", con.describe()},
                          {"seed", seed},
                          {"functions", rec.functions},
                          {"hypothesis_holders", rec.hypothesis_holders},
                          {"violations", rec.violations},
                          {"violation_indices", rec.violation_indices}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "functions " << rec.functions << ", hypothesis holders "
                  << rec.hypothesis_holders << ", violations "
                  << rec.violations << "\n";
    }
    return rec.violations == 0 ? kOk : kNegative;
}

int run_membership(const std::string& path, bool as_json) {
    PowerSeries f = load_series(path);
    if (f.series_class() != SeriesClass::NormalizedH)
        throw ParseError("membership requires a normalized series "
                         "(a_0 = 0, a_1 = 1)");
    Verdict v = starlike_e_membership(f);
    if (as_json)
        std::cout << verdict_json(v).dump(2) << "\n";
    else
        std::cout << to_string(v.status) << " after " << v.samples_checked
                  << " samples\n";
    switch (v.status) {
        case Status::holds: return kOk;
        case Status::fails: return kNegative;
        default: return kInconclusive;
    }
}

int run_report(const std::string& out_path, std::uint64_t seed, int jobs,
               const std::string& command_echo) {
    auto t0 = std::chrono::steady_clock::now();
    json j;
    j["version"] = kVersion;
    j["command"] = command_echo;
    GridSpec grid;
    grid.jobs = jobs;
    SubGrid sgrid;
    sgrid.jobs = jobs;
    j["config"] = {{"seed", seed},
                   {"theta_points", grid.theta_points},
                   {"m_points", grid.m_points},
                   {"m_max", grid.m_max},
                   {"radii", sgrid.radii},
                   {"subordination_theta_points", sgrid.theta_points},
                   {"tol", sgrid.tol}};
    j["constants"] = constants_json(constants_table());

    json roots = json::array();
    for (const auto& eq : root_equations()) {
        if (eq.takes_n) {
            for (int n : {1, 2, 3}) {
                RootResult r = solve_root(eq.id, n);
                roots.push_back({{"equation", eq.id},
                                 {"n", n},
                                 {"root", static_cast<double>(r.root)},
                                 {"residual", static_cast<double>(r.residual)}});
            }
        } else {
            RootResult r = solve_root(eq.id);
            roots.push_back({{"equation", eq.id},
                             {"root", static_cast<double>(r.root)},
                             {"residual", static_cast<double>(r.residual)}});
        }
    }
    j["roots"] = roots;

    json adm = json::array();
    for (const auto& thm : theorem_table()) {
        PsiParams p;
        p.n = 1;
        p.alpha = 0.5;
        p.beta = thm.bound(p);
        AdmissibilityReport rep =
            min_exclusion(make_psi(thm.psi_id, p), thm.hypothesis(p), grid);
        json entry = admissibility_json(rep);
        entry["theorem"] = thm.id;
        entry["beta"] = p.beta;
        adm.push_back(entry);
    }
    j["admissibility"] = adm;

    j["membership"] = {
        {"z_exp_half", verdict_json(starlike_e_membership(
                           PowerSeries::z_exp(0.5), sgrid))},
        {"koebe",
         verdict_json(starlike_e_membership(PowerSeries::koebe(), sgrid))}};

    j["wall_time_s"] = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output path: " + out_path);
    out << j.dump(2) << "\n";
    std::cout << "report written to " << out_path << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) +
                 " - numerical toolkit for exp-superordinate differential "
                 "subordination"};
    app.require_subcommand(1);
    bool as_json = false;
    std::optional<std::uint64_t> seed_flag;
    int jobs = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed_flag, "RNG seed (overrides SUBORDLAB_SEED)");
    app.add_option("--jobs", jobs, "worker cap (0 = hardware)");

    auto* c_const = app.add_subcommand("constants", "recompute printed constants");
    double tol = 5e-4;
    c_const->add_option("--tol", tol, "max allowed |computed - printed|");

    auto* c_adm = app.add_subcommand("admissible", "minimum exclusion margin");
    std::string psi_id, region_spec = "expdisk", trace_path;
    double beta = 0.0, alpha = 0.0, m_max = 32.0;
    int n = 0;
    c_adm->add_option("--psi", psi_id, "catalog id")->required();
    c_adm->add_option("--region", region_spec, "region spec");
    c_adm->add_option("--beta", beta, "beta parameter");
    c_adm->add_option("--alpha", alpha, "alpha parameter");
    c_adm->add_option("--n", n, "integer parameter");
    c_adm->add_option("--m-max", m_max, "upper end of the m sweep");
    c_adm->add_option("--trace", trace_path, "write g(theta) CSV here");

    auto* c_roots = app.add_subcommand("roots", "solve a printed equation");
    std::string eq_id;
    int eq_n = 1;
    std::vector<double> bracket_flag;
    c_roots->add_option("--eq", eq_id, "equation id")->required();
    c_roots->add_option("--n", eq_n, "parameter n (betan)");
    c_roots->add_option("--bracket", bracket_flag, "override bracket lo hi")
        ->expected(2);

    auto* c_impl =
        app.add_subcommand("check-implication", "corroborate an implication");
    std::string hyp_spec, con_spec = "expdisk";
    std::vector<std::string> corpus_specs;
    std::string i_psi;
    double i_beta = 0.0, i_alpha = 0.0;
    int i_n = 0;
    c_impl->add_option("--psi", i_psi, "catalog id")->required();
    auto* beta_opt = c_impl->add_option("--beta", i_beta, "beta parameter");
    c_impl->add_option("--alpha", i_alpha, "alpha parameter");
    c_impl->add_option("--n", i_n, "integer parameter");
    c_impl->add_option("--hypothesis", hyp_spec, "hypothesis region")->required();
    c_impl->add_option("--conclusion", con_spec, "conclusion region");
    c_impl->add_option("--corpus", corpus_specs,
                       "corpus spec(s): standard | schwarz:k=K,count=C | "
                       "series:envelope=E,count=C | file:PATH");

    auto* c_mem = app.add_subcommand("membership", "exp-starlike class test");
    std::string coeffs_path;
    c_mem->add_option("--coeffs", coeffs_path, "coefficient JSON file")
        ->required();

    auto* c_rep = app.add_subcommand("report", "full verification run report");
    std::string out_path;
    c_rep->add_option("--out", out_path, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::uint64_t seed = resolve_seed(seed_flag);
    try {
        if (*c_const) return run_constants(as_json, tol);
        if (*c_adm) {
            PsiParams p{beta, alpha, n};
            return run_admissible(psi_id, region_spec, p, m_max, jobs, as_json,
                                  trace_path);
        }
        if (*c_roots) {
            std::optional<std::pair<double, double>> br;
            if (bracket_flag.size() == 2)
                br = {bracket_flag[0], bracket_flag[1]};
            return run_roots(eq_id, eq_n, br, as_json);
        }
        if (*c_impl)
            return run_check_implication(i_psi, PsiParams{i_beta, i_alpha, i_n},
                                         beta_opt->count() > 0, hyp_spec,
                                         con_spec, corpus_specs, seed, jobs,
                                         as_json);
        if (*c_mem) return run_membership(coeffs_path, as_json);
        if (*c_rep)
            return run_report(out_path, seed, jobs,
                              [&] {
                                  std::string s;
                                  for (int i = 0; i < argc; ++i) {
                                      if (i) s += ' ';
                                      s += argv[i];
                                  }
                                  return s;
                              }());
    } catch (const UnknownTheorem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return *c_mem ? kData : kUsage;
    } catch (const NoSignChange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return *c_mem ? kData : kUsage;
    }
    return kUsage;
}
