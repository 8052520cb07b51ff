// bellkit: LHV envelopes, analytic bounds, GHZ predictions, and heralded
// Monte Carlo for two-setting N-site Bell tests with loss.
#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "bell/io.hpp"
#include "bell/simulate.hpp"

using namespace bell;
namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIncomplete = 4;

std::string default_outdir() {
    const char* env = std::getenv("BELLKIT_OUTDIR");
    return env ? env : ".";
}

BellFunctional make_functional(int n, std::string name, int sr, int si) {
    if (name == "auto") return conventional_functional(n);
    BellFunctional f{functional_from_name(name), sr, si};
    check_compatible(n, f);
    if (!conventional_pairing(n, f.kind))
        std::cerr << "note: " << functional_name(f.kind)
                  << " is conventionally paired with the other parity of n\n";
    return f;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        // accept a decimal with denominator 10^k
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long long den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rational(std::stoll(digits), den);
    }
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream os(p);
    if (!os) throw domain_error("cannot open output file " + p.string());
    return os;
}

MomentPointSet enumerate_auto(int n, const std::string& mode) {
    if (mode == "direct") return enumerate_moment_points(SiteCount(n), EnumerationMode::Direct);
    if (mode == "dp") return enumerate_moment_points(SiteCount(n), EnumerationMode::DP);
    return enumerate_moment_points(SiteCount(n),
                                   n <= 8 ? EnumerationMode::Direct : EnumerationMode::DP);
}

struct EnvelopeArgs {
    int n = 3;
    std::string functional = "auto";
    int sr = 1, si = 1;
    std::string mode = "auto";
    std::string query;
    int scatter_count = 500;
    uint64_t seed = 1;
    std::string outdir = default_outdir();
};

int run_envelope(const EnvelopeArgs& a) {
    if (a.n < 2) throw domain_error("envelope requires n >= 2");
    BellFunctional f = make_functional(a.n, a.functional, a.sr, a.si);
    MomentPointSet set = enumerate_auto(a.n, a.mode);
    EnvelopePolyline env = upper_envelope(set, f);

    if (!a.query.empty()) {
        Rational w = parse_rational(a.query);
        Rational v = envelope_query(env, w);
        std::cout << v.numerator() << "/" << v.denominator() << " = "
                  << format_double(to_double(v)) << "\n";
        return 0;
    }

    Metadata meta = {{"command", "envelope"},
                     {"n", std::to_string(a.n)},
                     {"functional", functional_name(f.kind)},
                     {"s_r", std::to_string(f.s_r)},
                     {"s_i", std::to_string(f.s_i)},
                     {"mode", a.mode},
                     {"scatter_count", std::to_string(a.scatter_count)},
                     {"seed", std::to_string(a.seed)},
                     {"rng", "mt19937_64"}};

    fs::path dir(a.outdir);
    fs::create_directories(dir);
    std::string stem = "n" + std::to_string(a.n) + "_" + functional_name(f.kind);
    auto env_os = open_out(dir / ("envelope_" + stem + ".csv"));
    write_envelope_csv(env_os, env, meta);
    auto pts_os = open_out(dir / ("points_" + stem + ".csv"));
    write_point_set_csv(pts_os, set, meta);
    auto sc = scatter_sample(SiteCount(a.n), f, a.scatter_count, a.seed);
    auto sc_os = open_out(dir / ("scatter_" + stem + ".csv"));
    write_scatter_csv(sc_os, sc, meta);

    nlohmann::json j = envelope_to_json(env);
    j["meta"] = {{"tool_version", kToolVersion}, {"n", a.n},
                 {"functional", functional_name(f.kind)}, {"seed", a.seed}};
    auto js_os = open_out(dir / ("envelope_" + stem + ".json"));
    js_os << j.dump(2) << "\n";

    std::cout << "envelope " << stem << ": " << env.vertices.size() << " vertices, "
              << set.points.size() << " moment points\n";
    return 0;
}

struct BoundsArgs {
    int n = 3;
    std::string functional = "auto";
    int sr = 1, si = 1;
    double w = 0.5;
};

int run_bounds(const BoundsArgs& a) {
    BellFunctional f = make_functional(a.n, a.functional, a.sr, a.si);
    SiteCount n(a.n);
    double h = holder_bound(n, f, a.w);
    double m = mabk_bound(n, f);
    std::cout << "n=" << a.n << " functional=" << functional_name(f.kind)
              << " w=" << format_double(a.w) << "\n"
              << "holder  " << format_double(h) << "\n"
              << "mabk    " << format_double(m) << "\n"
              << "tight   " << format_double(std::min(h, m)) << "\n"
              << "region  " << region_name(classify_region(n, a.w)) << "\n";
    return 0;
}

struct ThresholdArgs {
    std::string range = "3..8";
};

int run_threshold(const ThresholdArgs& a) {
    int lo, hi;
    auto dots = a.range.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(a.range);
    } else {
        lo = std::stoi(a.range.substr(0, dots));
        hi = std::stoi(a.range.substr(dots + 2));
    }
    if (lo < 2 || hi > 16 || lo > hi) throw domain_error("threshold range must be in 2..16");

    std::cout << "n  w_star  eta_sym  braunstein_mann  svetlichny_eta  w_star_envelope  "
                 "eta_envelope\n";
    for (int n = lo; n <= hi; ++n) {
        SiteCount sc(n);
        ThresholdResult t = analytic_threshold(sc);
        double bm = braunstein_mann_threshold(sc);
        double sv = svetlichny_requirement(sc).eta_symmetric;
        std::string we = "-", ee = "-";
        if (n <= 8) {
            BellFunctional f = conventional_functional(n);
            auto env = upper_envelope(enumerate_moment_points(sc, EnumerationMode::Direct), f);
            auto cr = threshold_crossing(sc, f, CrossingTarget::Envelope, &env);
            if (cr.violation_possible) {
                we = format_double(cr.w_star);
                ee = format_double(cr.eta_symmetric);
            }
        }
        std::cout << n << "  " << format_double(t.w_star) << "  "
                  << format_double(t.eta_symmetric) << "  " << format_double(bm) << "  "
                  << format_double(sv) << "  " << we << "  " << ee
                  << (t.quantum_crosses_holder ? "" : "  (no Holder crossing at n=2)") << "\n";
    }
    return 0;
}

struct SimulateArgs {
    int n = 3;
    std::string functional = "auto";
    int sr = 1, si = 1;
    double eta = -1.0;
    std::string etas;
    long trials = 10000;
    uint64_t seed = 1;
    std::string outdir = default_outdir();
    bool dump_trials = false;
};

int run_simulate(const SimulateArgs& a) {
    if (a.n < 2) throw domain_error("simulate requires n >= 2");
    SiteCount n(a.n);
    BellFunctional f = make_functional(a.n, a.functional, a.sr, a.si);

    std::vector<double> etas;
    if (!a.etas.empty()) {
        std::stringstream ss(a.etas);
        std::string tok;
        while (std::getline(ss, tok, ',')) etas.push_back(std::stod(tok));
        if (static_cast<int>(etas.size()) != a.n)
            throw domain_error("--etas must list exactly n values");
    } else {
        if (a.eta < 0.0) throw domain_error("provide --eta or --etas");
        etas.assign(static_cast<size_t>(a.n), a.eta);
    }
    EfficiencyProfile profile{etas};

    QuantumPrediction opt = optimal_quantum_value(n, f);
    auto records = simulate_all_words(n, profile, opt.settings, a.trials, a.seed);
    EstimateReport est = estimate_functionals(n, records, f);
    est.seed = a.seed;
    auto env = upper_envelope(enumerate_auto(a.n, "auto"), f);
    ViolationReport vr = violation_report(est, n, f, env);

    nlohmann::json j;
    j["meta"] = {{"tool_version", kToolVersion},
                 {"command", "simulate"},
                 {"n", a.n},
                 {"functional", functional_name(f.kind)},
                 {"s_r", f.s_r},
                 {"s_i", f.s_i},
                 {"etas", etas},
                 {"trials_per_word", a.trials},
                 {"seed", a.seed},
                 {"rng", "mt19937_64"}};
    j["estimate"] = {{"w_hat", est.w_hat}, {"f_hat", est.f_hat},
                     {"se_w", est.se_w},   {"se_f", est.se_f},
                     {"trials_per_word", est.trials_per_word}, {"seed", est.seed}};
    j["report"] = {{"region", region_name(vr.region)},
                   {"excess_over_envelope", vr.excess_over_envelope},
                   {"excess_over_analytic", vr.excess_over_analytic},
                   {"significance", vr.significance}};

    fs::path dir(a.outdir);
    fs::create_directories(dir);
    auto os = open_out(dir / ("simulate_n" + std::to_string(a.n) + "_" +
                              functional_name(f.kind) + ".json"));
    os << j.dump(2) << "\n";

    if (a.dump_trials) {
        auto tr = open_out(dir / ("trials_n" + std::to_string(a.n) + "_" +
                                  functional_name(f.kind) + ".csv"));
        tr << "# tool_version: " << kToolVersion << "\n# seed: " << a.seed << "\n";
        tr << "word";
        for (int k = 1; k <= a.n; ++k) tr << ",site_" << k;
        tr << ",herald\n";
        for (const auto& [word, recs] : records) {
            std::string wname;
            for (int k = 0; k < a.n; ++k) wname += (word >> k & 1) ? 'B' : 'A';
            for (const TrialRecord& r : recs) {
                tr << wname;
                for (int o : r.outcomes) tr << ',' << o;
                tr << ',' << (r.herald ? 1 : 0) << '\n';
            }
        }
    }

    std::cout << "f_hat=" << format_double(est.f_hat) << " +- " << format_double(est.se_f)
              << "  w_hat=" << format_double(est.w_hat) << " +- " << format_double(est.se_w)
              << "\nregion=" << region_name(vr.region)
              << " excess_env=" << format_double(vr.excess_over_envelope)
              << " significance=" << format_double(vr.significance) << "\n";
    return 0;
}

struct FigureArgs {
    int which = 1;
    int grid_den = 256;
    int scatter_count = 500;
    uint64_t seed = 1;
    std::string outdir = default_outdir();
};

int run_figure(const FigureArgs& a) {
    int n;
    BellFunctional f;
    switch (a.which) {
        case 1: n = 2; f = BellFunctional::chsh(); break;
        case 2: n = 3; f = BellFunctional::mermin(); break;
        case 3: n = 4; f = BellFunctional::ardehali(); break;
        case 4: n = 6; f = BellFunctional::ardehali(); break;
        default: throw domain_error("figure id must be 1..4");
    }
    SiteCount sc(n);
    auto env = upper_envelope(enumerate_moment_points(sc, EnumerationMode::Direct), f);
    double q = closed_form_optimum(sc, f);

    Metadata meta = {{"command", "figure"},
                     {"which", std::to_string(a.which)},
                     {"n", std::to_string(n)},
                     {"functional", functional_name(f.kind)},
                     {"grid_den", std::to_string(a.grid_den)},
                     {"scatter_count", std::to_string(a.scatter_count)},
                     {"seed", std::to_string(a.seed)},
                     {"rng", "mt19937_64"}};

    fs::path dir(a.outdir);
    fs::create_directories(dir);
    std::string stem = "figure" + std::to_string(a.which);

    auto os = open_out(dir / (stem + ".csv"));
    write_metadata(os, meta);
    os << "w,holder_bound,mabk_bound,envelope,quantum_ghz,region\n";
    for (int i = 0; i <= a.grid_den; ++i) {
        double w = static_cast<double>(i) / a.grid_den;
        os << format_double(w) << ',' << format_double(holder_bound(sc, f, w)) << ','
           << format_double(mabk_bound(sc, f)) << ','
           << format_double(envelope_query_d(env, w)) << ',' << format_double(q * w) << ','
           << region_name(classify_region(sc, w)) << '\n';
    }

    if (a.which >= 2) {
        auto eo = open_out(dir / (stem + "_eta.csv"));
        write_metadata(eo, meta);
        eo << "eta,w,holder_bound,mabk_bound,envelope,quantum_ghz,region\n";
        for (int i = 0; i <= a.grid_den; ++i) {
            double eta = static_cast<double>(i) / a.grid_den;
            double w = std::pow(eta, n);
            eo << format_double(eta) << ',' << format_double(w) << ','
               << format_double(holder_bound(sc, f, w)) << ','
               << format_double(mabk_bound(sc, f)) << ','
               << format_double(envelope_query_d(env, w)) << ',' << format_double(q * w)
               << ',' << region_name(classify_region(sc, w)) << '\n';
        }
    }

    auto scpts = scatter_sample(sc, f, a.scatter_count, a.seed);
    auto so = open_out(dir / (stem + "_scatter.csv"));
    write_scatter_csv(so, scpts, meta);

    std::cout << stem << " written for n=" << n << " " << functional_name(f.kind) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-setting N-site Bell bounds with detection loss"};
    app.set_config("--config", "", "flat key=value config file");
    app.require_subcommand(1);

    EnvelopeArgs ea;
    auto* env = app.add_subcommand("envelope", "LHV moment points and exact upper envelope");
    env->add_option("--n", ea.n, "number of sites")->required();
    env->add_option("--functional", ea.functional, "chsh|mermin|ardehali|svetlichny|auto");
    env->add_option("--sr", ea.sr, "sign s_R");
    env->add_option("--si", ea.si, "sign s_I");
    env->add_option("--mode", ea.mode, "direct|dp|auto");
    env->add_option("--query", ea.query, "print F_max(w) for w given as num/den or decimal");
    env->add_option("--scatter-count", ea.scatter_count, "scatter sample size");
    env->add_option("--seed", ea.seed, "rng seed");
    env->add_option("--out", ea.outdir, "output directory");

    BoundsArgs ba;
    auto* bnd = app.add_subcommand("bounds", "analytic Holder/MABK bounds at a given w");
    bnd->add_option("--n", ba.n)->required();
    bnd->add_option("--functional", ba.functional);
    bnd->add_option("--sr", ba.sr);
    bnd->add_option("--si", ba.si);
    bnd->add_option("--w", ba.w)->required();

    ThresholdArgs ta;
    auto* thr = app.add_subcommand("threshold", "violation thresholds over an n range");
    thr->add_option("--n", ta.range, "single n or range lo..hi");

    SimulateArgs sa;
    auto* sim = app.add_subcommand("simulate", "heralded Monte Carlo with detector erasure");
    sim->add_option("--n", sa.n)->required();
    sim->add_option("--functional", sa.functional);
    sim->add_option("--sr", sa.sr);
    sim->add_option("--si", sa.si);
    sim->add_option("--eta", sa.eta, "symmetric per-site efficiency");
    sim->add_option("--etas", sa.etas, "comma-separated per-site efficiencies");
    sim->add_option("--trials", sa.trials, "trials per setting word");
    sim->add_option("--seed", sa.seed);
    sim->add_option("--out", sa.outdir);
    sim->add_flag("--dump-trials", sa.dump_trials, "also write the raw trial CSV");

    FigureArgs fa;
    auto* fig = app.add_subcommand("figure", "figure-reproduction datasets");
    fig->add_option("--which", fa.which, "figure id 1..4")->required();
    fig->add_option("--step-den", fa.grid_den, "w grid denominator");
    fig->add_option("--scatter-count", fa.scatter_count);
    fig->add_option("--seed", fa.seed);
    fig->add_option("--out", fa.outdir);

    int threads = 1;
    app.add_option("--threads", threads, "worker cap (all current paths are single-threaded)");

    try {
        app.parse(argc, argv);
        if (env->parsed()) return run_envelope(ea);
        if (bnd->parsed()) return run_bounds(ba);
        if (thr->parsed()) return run_threshold(ta);
        if (sim->parsed()) return run_simulate(sa);
        if (fig->parsed()) return run_figure(fa);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const incomplete_design_error& e) {
        std::cerr << "incomplete design: " << e.what() << "\n";
        return kExitIncomplete;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
