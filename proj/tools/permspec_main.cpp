// permspec command-line driver.
//
// Every run writes a single-line JSON manifest to stderr (command, resolved
// parameters, master seed, library version, wall time) and its data to
// stdout: CSV for point samples, JSON for scalars and series.  Output bytes
// depend only on the manifest identity fields, never on thread count.
//
// Exit codes: 0 success, 2 usage or domain error, 3 certified precision or
// truncation failure.

#include "CLI11.hpp"

#include "permspec/angle.hpp"
#include "permspec/converge.hpp"
#include "permspec/correlation.hpp"
#include "permspec/ewens.hpp"
#include "permspec/gapmc.hpp"
#include "permspec/limitproc.hpp"
#include "permspec/manifest.hpp"
#include "permspec/parallel.hpp"
#include "permspec/series.hpp"
#include "permspec/spectrum.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace permspec;

Int parse_int10(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    size_t i = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("no digits in number: " + text);
    Int v = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in number: " + text);
        v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
}

// "s/t", decimal literal, or integer, as an exact rational.
Rat parse_rat(std::string text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.erase(0, 1);
    }
    Rat mag;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Int num = parse_int10(text.substr(0, slash));
        Int den = parse_int10(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        mag = Rat(num, den);
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        mag = Rat(parse_int10(digits), pow_int(Int(10), static_cast<unsigned>(text.size() - dot - 1)));
    } else {
        mag = Rat(parse_int10(text));
    }
    return neg ? -mag : mag;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Full-precision double as a JSON-safe literal.
std::string num_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Compact scientific form for error bounds.
std::string num_e(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

std::string cycles_json(const CycleType& ct) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [j, c] : ct.counts) {
        if (!first) os << ',';
        first = false;
        os << '"' << j << "\":" << c;
    }
    os << '}';
    return os.str();
}

std::map<long, long> parse_cycles(const std::string& text) {
    std::map<long, long> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("cycle entry needs j:c form: " + item);
        long j = std::stol(item.substr(0, colon));
        long c = std::stol(item.substr(colon + 1));
        if (j < 1 || c < 1) throw std::invalid_argument("cycle lengths and counts must be positive");
        counts[j] += c;
    }
    if (counts.empty()) throw std::invalid_argument("empty cycle list");
    return counts;
}

struct TruncFlags {
    double eps_residual = 1e-3;
    unsigned long r_cap = 64;
    unsigned long prime_cutoff = 10000;
    double bias_tol = 0.05;

    TruncationParams to_params() const {
        TruncationParams t;
        t.eps_residual = eps_residual;
        t.r_cap = r_cap;
        t.prime_cutoff = prime_cutoff;
        t.bias_tol = bias_tol;
        return t;
    }

    void record(std::map<std::string, std::string>& params) const {
        params["eps_residual"] = num_g(eps_residual);
        params["r_cap"] = std::to_string(r_cap);
        params["prime_cutoff"] = std::to_string(prime_cutoff);
        params["bias_tol"] = num_g(bias_tol);
    }
};

void add_trunc_flags(CLI::App* sub, TruncFlags& t) {
    sub->add_option("--eps-residual", t.eps_residual, "stop stick sampling below this residual mass");
    sub->add_option("--r-cap", t.r_cap, "hard cap on sticks per replicate");
    sub->add_option("--prime-cutoff", t.prime_cutoff, "ignore primes beyond this index");
    sub->add_option("--bias-tol", t.bias_tol, "maximum tolerated truncation bias bound");
}

Rat positive_theta(const std::string& text) {
    Rat theta = parse_rat(text);
    if (theta <= 0) throw std::invalid_argument("theta must be positive: " + text);
    return theta;
}

// Angle kind for the limit subcommand: irr, zero, or rat:T.
uint64_t parse_kind(const std::string& text) {
    if (text == "irr") return 0;
    if (text == "zero") return 1;
    if (text.rfind("rat:", 0) == 0) {
        Int t = parse_int10(text.substr(4));
        if (t < 1 || t > Int(1) << 62) throw std::invalid_argument("rational denominator out of range: " + text);
        return t.convert_to<uint64_t>();
    }
    throw std::invalid_argument("kind must be irr, zero, or rat:T: " + text);
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"eigenangle point processes of Ewens-random permutation actions"};
    app.set_version_flag("--version", kLibraryVersion);
    app.require_subcommand(1);

    // pmf
    long pmf_n = 1;
    std::string pmf_theta = "1", pmf_cycles;
    auto* pmf = app.add_subcommand("pmf", "exact Ewens cycle-type probabilities");
    pmf->add_option("--n", pmf_n, "permutation size")->required();
    pmf->add_option("--theta", pmf_theta, "Ewens parameter (rational or decimal)");
    pmf->add_option("--cycles", pmf_cycles, "single cycle type as j:c,j:c (default: all of S_n)");

    // sample
    long smp_n = 1;
    std::string smp_theta = "1";
    uint64_t smp_reps = 1, smp_seed = 0;
    auto* smp = app.add_subcommand("sample", "draw Ewens cycle types");
    smp->add_option("--n", smp_n, "permutation size")->required();
    smp->add_option("--theta", smp_theta, "Ewens parameter");
    smp->add_option("--reps", smp_reps, "number of replicates");
    smp->add_option("--seed", smp_seed, "master seed");

    // spectrum
    long spc_n = 1;
    int spc_k = 1;
    std::string spc_theta = "1", spc_alpha = "0", spc_T = "1";
    unsigned spc_bits = 256;
    uint64_t spc_reps = 1, spc_seed = 0;
    auto* spc = app.add_subcommand("spectrum", "windowed finite-n eigenangle points (CSV)");
    spc->add_option("--n", spc_n, "permutation size")->required();
    spc->add_option("--k", spc_k, "tuple order");
    spc->add_option("--theta", spc_theta, "Ewens parameter");
    spc->add_option("--alpha", spc_alpha, "angle: s/t, decimal, sqrtN, golden, e, or literal:digits");
    spc->add_option("--bits", spc_bits, "fraction bits for irrational angle enclosures");
    spc->add_option("--T", spc_T, "window half-width (rational)");
    spc->add_option("--reps", spc_reps, "number of replicates");
    spc->add_option("--seed", spc_seed, "master seed");

    // limit
    int lim_k = 1;
    std::string lim_theta = "1", lim_kind = "irr";
    double lim_lo = 0.0, lim_hi = 1.0;
    uint64_t lim_reps = 1, lim_seed = 0;
    std::size_t lim_threads = 0;
    TruncFlags lim_trunc;
    auto* lim = app.add_subcommand("limit", "simulate the limiting windowed process (CSV)");
    lim->add_option("--k", lim_k, "tuple order");
    lim->add_option("--theta", lim_theta, "Ewens parameter");
    lim->add_option("--kind", lim_kind, "angle kind: irr, zero, or rat:T");
    lim->add_option("--window-lo", lim_lo, "window lower end");
    lim->add_option("--window-hi", lim_hi, "window upper end");
    lim->add_option("--reps", lim_reps, "number of replicates");
    lim->add_option("--seed", lim_seed, "master seed");
    lim->add_option("--threads", lim_threads, "worker threads (0: environment cap)");
    add_trunc_flags(lim, lim_trunc);

    // gap-mc
    int gmc_k = 1;
    std::string gmc_theta = "1";
    double gmc_y1 = 0.0, gmc_y2 = 1.0;
    uint64_t gmc_reps = 100000, gmc_seed = 0;
    std::size_t gmc_threads = 0;
    TruncFlags gmc_trunc;
    auto* gmc = app.add_subcommand("gap-mc", "Monte Carlo gap probability of the limit process");
    gmc->add_option("--k", gmc_k, "tuple order");
    gmc->add_option("--theta", gmc_theta, "Ewens parameter");
    gmc->add_option("--y1", gmc_y1, "window lower end");
    gmc->add_option("--y2", gmc_y2, "window upper end")->required();
    gmc->add_option("--reps", gmc_reps, "number of replicates");
    gmc->add_option("--seed", gmc_seed, "master seed");
    gmc->add_option("--threads", gmc_threads, "worker threads (0: environment cap)");
    add_trunc_flags(gmc, gmc_trunc);

    // gap-series
    int gs_k = 1;
    unsigned gs_order = 1;
    double gs_tol = 1e-7;
    double gs_eval = -1.0;
    auto* gs = app.add_subcommand("gap-series", "gap probability series coefficients at theta = 1");
    gs->add_option("--k", gs_k, "tuple order");
    gs->add_option("--order", gs_order, "highest coefficient order")->required();
    gs->add_option("--tol", gs_tol, "certified error budget per coefficient");
    gs->add_option("--eval", gs_eval, "also evaluate the series at this window width");

    // phi
    std::string phi_theta = "1";
    double phi_x = 1.0;
    auto* phi = app.add_subcommand("phi", "pair correlation density of the limit process");
    phi->add_option("--theta", phi_theta, "Ewens parameter");
    phi->add_option("--x", phi_x, "lag")->required();

    // discrepancy
    std::string dsc_file = "-";
    auto* dsc = app.add_subcommand("discrepancy", "star discrepancy of values in [0,1)");
    dsc->add_option("--file", dsc_file, "input path, one value per line (-: stdin)");

    // converge
    std::vector<long> cvg_ns;
    std::string cvg_theta = "1", cvg_alpha, cvg_T = "1";
    int cvg_k = 1;
    unsigned cvg_bits = 256;
    uint64_t cvg_reps = 10000, cvg_seed = 0;
    std::size_t cvg_threads = 0;
    TruncFlags cvg_trunc;
    auto* cvg = app.add_subcommand("converge", "finite-n versus limit window count comparison");
    cvg->add_option("--n", cvg_ns, "permutation sizes, comma separated")->required()->delimiter(',');
    cvg->add_option("--k", cvg_k, "tuple order");
    cvg->add_option("--theta", cvg_theta, "Ewens parameter");
    cvg->add_option("--alpha", cvg_alpha, "angle (see spectrum)")->required();
    cvg->add_option("--bits", cvg_bits, "fraction bits for irrational angle enclosures");
    cvg->add_option("--T", cvg_T, "window half-width (rational)");
    cvg->add_option("--reps", cvg_reps, "replicates per stage");
    cvg->add_option("--seed", cvg_seed, "master seed");
    cvg->add_option("--threads", cvg_threads, "worker threads (0: environment cap)");
    add_trunc_flags(cvg, cvg_trunc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    RunManifest manifest;
    std::ostringstream out;

    try {
        if (app.got_subcommand(pmf)) {
            manifest.command = "pmf";
            Rat theta = positive_theta(pmf_theta);
            EwensParams params{pmf_n, theta};
            if (pmf_n < 1) throw std::invalid_argument("n must be positive");
            manifest.params = {{"n", std::to_string(pmf_n)},
                               {"theta", rat_str(theta)},
                               {"schema", "jsonl.v1"}};
            if (!pmf_cycles.empty()) {
                CycleType ct;
                ct.counts = parse_cycles(pmf_cycles);
                for (const auto& [j, c] : ct.counts) ct.n += j * c;
                manifest.params["cycles"] = pmf_cycles;
                Rat p = cycle_type_pmf(params, ct);
                out << "{\"n\":" << pmf_n << ",\"theta\":\"" << rat_str(theta) << "\",\"cycles\":"
                    << cycles_json(ct) << ",\"pmf\":\"" << rat_str(p) << "\",\"err\":\"0\"}\n";
            } else {
                if (pmf_n > 60) throw std::invalid_argument("full enumeration capped at n = 60");
                for (const auto& ct : all_cycle_types(pmf_n)) {
                    Rat p = cycle_type_pmf(params, ct);
                    out << "{\"cycles\":" << cycles_json(ct) << ",\"pmf\":\"" << rat_str(p)
                        << "\",\"err\":\"0\"}\n";
                }
            }
        } else if (app.got_subcommand(smp)) {
            manifest.command = "sample";
            Rat theta = positive_theta(smp_theta);
            if (smp_n < 1) throw std::invalid_argument("n must be positive");
            EwensParams params{smp_n, theta};
            manifest.seed = smp_seed;
            manifest.params = {{"n", std::to_string(smp_n)},
                               {"theta", rat_str(theta)},
                               {"reps", std::to_string(smp_reps)},
                               {"schema", "jsonl.v1"}};
            for (uint64_t rep = 0; rep < smp_reps; ++rep) {
                Rng rng = Rng::for_replicate(smp_seed, rep);
                CycleType ct = sample_cycle_type(params, rng);
                out << "{\"replicate\":" << rep << ",\"n\":" << ct.n << ",\"cycles\":"
                    << cycles_json(ct) << "}\n";
            }
        } else if (app.got_subcommand(spc)) {
            manifest.command = "spectrum";
            Rat theta = positive_theta(spc_theta);
            if (spc_n < 1) throw std::invalid_argument("n must be positive");
            Angle alpha = Angle::parse(spc_alpha, spc_bits);
            Rat T = parse_rat(spc_T);
            if (T <= 0) throw std::invalid_argument("window half-width must be positive");
            EwensParams params{spc_n, theta};
            manifest.seed = spc_seed;
            manifest.params = {{"n", std::to_string(spc_n)},
                               {"k", std::to_string(spc_k)},
                               {"theta", rat_str(theta)},
                               {"alpha", alpha.describe()},
                               {"bits", std::to_string(spc_bits)},
                               {"T", rat_str(T)},
                               {"reps", std::to_string(spc_reps)},
                               {"schema", "csv.v1"}};
            out << "replicate,position,position_err,multiplicity,flag\n";
            for (uint64_t rep = 0; rep < spc_reps; ++rep) {
                Rng rng = Rng::for_replicate(spc_seed, rep);
                CycleType ct = sample_cycle_type(params, rng);
                auto sample = window_points(orbit_spectrum(ct, spc_k), alpha, T);
                for (const auto& pt : sample.points) {
                    Rat mid = (pt.lo + pt.hi) / 2;
                    out << rep << ',' << decimal_string(mid, 30) << ',';
                    if (pt.lo == pt.hi)
                        out << '0';
                    else
                        out << num_e(to_double((pt.hi - pt.lo) / 2));
                    out << ',' << pt.multiplicity << ',' << (pt.flagged ? 1 : 0) << '\n';
                }
            }
        } else if (app.got_subcommand(lim)) {
            manifest.command = "limit";
            Rat theta = positive_theta(lim_theta);
            if (lim_lo >= lim_hi) throw std::invalid_argument("window must satisfy lo < hi");
            LimitParams lp;
            lp.k = lim_k;
            lp.theta = to_double(theta);
            lp.t = parse_kind(lim_kind);
            lp.window_lo = lim_lo;
            lp.window_hi = lim_hi;
            lp.trunc = lim_trunc.to_params();
            LimitSimulator sim(lp);
            manifest.seed = lim_seed;
            manifest.params = {{"k", std::to_string(lim_k)},
                               {"theta", rat_str(theta)},
                               {"kind", lim_kind},
                               {"window_lo", num_g(lim_lo)},
                               {"window_hi", num_g(lim_hi)},
                               {"reps", std::to_string(lim_reps)},
                               {"threads", std::to_string(lim_threads)},
                               {"atom_at_zero", lp.t >= 1 ? "1" : "0"},
                               {"omitted_intensity_bound", num_e(sim.omitted_intensity_bound())},
                               {"tail_risk", num_e(sim.table().tail_risk)},
                               {"schema", "csv.v1"}};
            lim_trunc.record(manifest.params);
            out << "replicate,position,multiplicity\n";
            const uint64_t kChunk = 256;
            const std::size_t n_chunks = static_cast<std::size_t>((lim_reps + kChunk - 1) / kChunk);
            std::vector<std::string> bufs(n_chunks);
            std::size_t workers = lim_threads == 0 ? thread_cap() : lim_threads;
            run_chunks(n_chunks, workers, [&](std::size_t chunk) {
                std::ostringstream os;
                uint64_t lo = chunk * kChunk;
                uint64_t hi = std::min<uint64_t>(lo + kChunk, lim_reps);
                for (uint64_t rep = lo; rep < hi; ++rep) {
                    Rng rng = Rng::for_replicate(lim_seed, rep);
                    LimitWindowSample s = sim.replicate(rng);
                    for (const auto& pt : s.points)
                        os << rep << ',' << num_g(pt.position) << ',' << pt.multiplicity << '\n';
                }
                bufs[chunk] = os.str();
            });
            for (const auto& b : bufs) out << b;
        } else if (app.got_subcommand(gmc)) {
            manifest.command = "gap-mc";
            Rat theta = positive_theta(gmc_theta);
            manifest.seed = gmc_seed;
            manifest.params = {{"k", std::to_string(gmc_k)},
                               {"theta", rat_str(theta)},
                               {"y1", num_g(gmc_y1)},
                               {"y2", num_g(gmc_y2)},
                               {"reps", std::to_string(gmc_reps)},
                               {"threads", std::to_string(gmc_threads)},
                               {"schema", "json.v1"}};
            gmc_trunc.record(manifest.params);
            GapEstimate est = gap_mc(gmc_k, to_double(theta), gmc_y1, gmc_y2,
                                     gmc_trunc.to_params(), gmc_reps, gmc_seed, gmc_threads);
            out << "{\"k\":" << gmc_k << ",\"theta\":\"" << rat_str(theta) << "\",\"y1\":"
                << num_g(gmc_y1) << ",\"y2\":" << num_g(gmc_y2) << ",\"estimate\":"
                << num_g(est.estimate) << ",\"std_error\":" << num_g(est.std_error)
                << ",\"bias_bound\":" << num_e(est.bias_bound) << ",\"reps\":" << est.reps << "}\n";
        } else if (app.got_subcommand(gs)) {
            manifest.command = "gap-series";
            manifest.params = {{"k", std::to_string(gs_k)},
                               {"order", std::to_string(gs_order)},
                               {"tol", num_g(gs_tol)},
                               {"schema", "json.v1"}};
            GapSeries series = gap_series(gs_k, gs_order, gs_tol);
            out << "{\"k\":" << series.k << ",\"order\":" << gs_order << ",\"coeffs\":[";
            for (size_t i = 0; i < series.coeffs.size(); ++i) {
                const GapCoeff& c = series.coeffs[i];
                if (i) out << ',';
                out << "{\"m\":" << c.m << ",\"value\":\"";
                if (c.exact)
                    out << rat_str(c.exact_value) << "\",\"err\":\"0\"";
                else
                    out << decimal_string(c.value, 30) << "\",\"err\":\""
                        << num_e(c.err.convert_to<double>()) << '"';
                out << ",\"exact\":" << (c.exact ? "true" : "false") << '}';
            }
            out << ']';
            if (gs_eval >= 0.0) {
                manifest.params["eval"] = num_g(gs_eval);
                SeriesValue v = gap_series_eval(series, gs_eval);
                out << ",\"eval\":{\"width\":" << num_g(gs_eval) << ",\"value\":\""
                    << decimal_string(v.value, 30) << "\",\"err\":\""
                    << num_e(v.err.convert_to<double>()) << "\"}";
            }
            out << "}\n";
        } else if (app.got_subcommand(phi)) {
            manifest.command = "phi";
            Rat theta = positive_theta(phi_theta);
            manifest.params = {{"theta", rat_str(theta)},
                               {"x", num_g(phi_x)},
                               {"schema", "json.v1"}};
            double value = pair_correlation_phi(to_double(theta), phi_x);
            out << "{\"theta\":\"" << rat_str(theta) << "\",\"x\":" << num_g(phi_x)
                << ",\"phi\":" << num_g(value) << ",\"err\":\"0\"}\n";
        } else if (app.got_subcommand(dsc)) {
            manifest.command = "discrepancy";
            manifest.params = {{"file", dsc_file}, {"schema", "json.v1"}};
            std::vector<double> values;
            auto read_all = [&values](std::istream& in) {
                double v;
                while (in >> v) values.push_back(v);
            };
            if (dsc_file == "-") {
                read_all(std::cin);
            } else {
                std::ifstream in(dsc_file);
                if (!in) throw std::invalid_argument("cannot open file: " + dsc_file);
                read_all(in);
            }
            if (values.empty()) throw std::invalid_argument("no input values");
            for (double v : values)
                if (!(v >= 0.0 && v < 1.0))
                    throw std::invalid_argument("values must lie in [0,1): " + num_g(v));
            double d = star_discrepancy_1d(values);
            out << "{\"n\":" << values.size() << ",\"star_discrepancy\":" << num_g(d) << "}\n";
        } else if (app.got_subcommand(cvg)) {
            manifest.command = "converge";
            Rat theta = positive_theta(cvg_theta);
            Angle alpha = Angle::parse(cvg_alpha, cvg_bits);
            Rat T = parse_rat(cvg_T);
            if (T <= 0) throw std::invalid_argument("window half-width must be positive");
            std::string ns_text;
            for (size_t i = 0; i < cvg_ns.size(); ++i) {
                if (i) ns_text += ',';
                ns_text += std::to_string(cvg_ns[i]);
            }
            manifest.seed = cvg_seed;
            manifest.params = {{"n", ns_text},
                               {"k", std::to_string(cvg_k)},
                               {"theta", rat_str(theta)},
                               {"alpha", alpha.describe()},
                               {"bits", std::to_string(cvg_bits)},
                               {"T", rat_str(T)},
                               {"reps", std::to_string(cvg_reps)},
                               {"threads", std::to_string(cvg_threads)},
                               {"schema", "json.v1"}};
            cvg_trunc.record(manifest.params);
            ConvergeReport report = converge_report(cvg_ns, theta, cvg_k, alpha, T, cvg_reps,
                                                    cvg_seed, cvg_trunc.to_params(), cvg_threads);
            out << "{\"k\":" << report.k << ",\"rows\":[";
            for (size_t i = 0; i < report.rows.size(); ++i) {
                const ConvergeRow& r = report.rows[i];
                if (i) out << ',';
                out << "{\"n\":" << r.n << ",\"tv\":" << num_g(r.tv) << ",\"chi2_p\":"
                    << num_g(r.chi2_p) << '}';
            }
            out << "]}\n";
        }
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const TruncationTooSmall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    std::cout << out.str();
    std::cout.flush();
    const auto t1 = std::chrono::steady_clock::now();
    manifest.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cerr << manifest.to_json() << '\n';
    return 0;
}
