#include "gwcpg_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwcpg/asymptotics.hpp"
#include "gwcpg/cpg.hpp"
#include "gwcpg/fit.hpp"
#include "gwcpg/gw_exact.hpp"
#include "gwcpg/offspring.hpp"
#include "gwcpg/simulate.hpp"
#include "gwcpg/version.hpp"

namespace gwcpg::cli {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

class Manifest {
public:
    explicit Manifest(std::string subcommand)
        : subcommand_(std::move(subcommand)), start_(std::chrono::steady_clock::now()) {}

    void add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
    void add(const std::string& key, double value) { entries_.emplace_back(key, format_double(value)); }
    void add(const std::string& key, long long value) { entries_.emplace_back(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, static_cast<long long>(value)); }
    void add(const std::string& key, std::size_t value) { add(key, static_cast<long long>(value)); }

    std::string csv_block() const {
        std::ostringstream os;
        os << "# gwcpg_version=" << version() << '\n';
        os << "# subcommand=" << subcommand_ << '\n';
        for (const auto& [k, v] : entries_) os << "# " << k << '=' << v << '\n';
        os << "# wall_time_s=" << format_double(elapsed()) << '\n';
        return os.str();
    }

    json to_json() const {
        json j;
        j["gwcpg_version"] = version();
        j["subcommand"] = subcommand_;
        for (const auto& [k, v] : entries_) j[k] = v;
        j["wall_time_s"] = elapsed();
        return j;
    }

private:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    std::string subcommand_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::pair<std::string, std::string>> entries_;
};

// Sends `text` to `path` when set, else to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path.empty()) {
        fallback << text;
        fallback.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
    if (!f) throw std::runtime_error("failed writing output file '" + path + "'");
}

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument(what + " expects an integer, got '" + text + "'");
    return v;
}

OffspringSpec parse_offspring(const std::string& text, double lambda) {
    if (text == "poisson") return OffspringSpec::poisson(lambda);
    if (text == "geometric") return OffspringSpec::geometric(lambda);
    if (text.rfind("nb:", 0) == 0) return OffspringSpec::negative_binomial(parse_int(text.substr(3), "--offspring nb:<m>"), lambda);
    throw std::invalid_argument("--offspring must be poisson, geometric or nb:<m>, got '" + text + "'");
}

std::optional<InitialSpec> parse_initial(const std::string& text, double lambda0) {
    if (text.empty()) {
        if (!std::isnan(lambda0)) throw std::invalid_argument("--lambda0 given without --initial");
        return std::nullopt;
    }
    if (text.rfind("det:", 0) == 0) return InitialSpec::deterministic(parse_int(text.substr(4), "--initial det:<k>"));
    if (std::isnan(lambda0)) throw std::invalid_argument("--initial " + text + " needs --lambda0");
    if (text == "poisson") return InitialSpec::poisson(lambda0);
    if (text.rfind("nb:", 0) == 0) return InitialSpec::negative_binomial(parse_int(text.substr(3), "--initial nb:<q>"), lambda0);
    throw std::invalid_argument("--initial must be poisson, nb:<q> or det:<k>, got '" + text + "'");
}

FitRange parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--range expects lo:hi, got '" + text + "'");
    const int lo = parse_int(text.substr(0, colon), "--range lo");
    const int hi = parse_int(text.substr(colon + 1), "--range hi");
    if (lo < 1 || hi < lo) throw std::invalid_argument("--range needs 1 <= lo <= hi, got '" + text + "'");
    return FitRange{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

// Options shared by every subcommand that builds a process.
struct ProcessOptions {
    std::string offspring;
    double lambda = kUnset;
    std::string initial;
    double lambda0 = kUnset;
    std::size_t lmax = kDefaultMaxIndex;
    unsigned threads = 0;
    std::string out;

    void attach(CLI::App* app, bool with_initial = true) {
        app->add_option("--offspring", offspring, "poisson | geometric | nb:<m>")->required();
        app->add_option("--lambda", lambda, "offspring mean")->required();
        if (with_initial) {
            app->add_option("--initial", initial, "poisson | nb:<q> | det:<k> (omit for Z_0 = 1)");
            app->add_option("--lambda0", lambda0, "mean of Z_0 for poisson / nb initial laws");
        }
        app->add_option("--lmax", lmax, "support cap")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--threads", threads, "worker threads (0 = auto; GWCPG_THREADS caps)");
        app->add_option("--out", out, "output path (default stdout)");
    }

    void describe(Manifest& m, const OffspringSpec& spec, const std::optional<InitialSpec>& init) const {
        m.add("offspring", spec.label());
        m.add("lambda", spec.lambda());
        m.add("initial", init ? init->label() : std::string("det:1"));
        if (init && init->family() != InitialFamily::Deterministic) m.add("lambda0", init->lambda0());
        m.add("lmax", lmax);
    }

    EvolveOptions evolve_options() const {
        EvolveOptions o;
        o.threads = threads;
        return o;
    }
};

PmfTable build_table(const OffspringSpec& spec, const std::optional<InitialSpec>& init, int n, std::size_t lmax,
                     const EvolveOptions& options, std::string& method) {
    if (!init && spec.is_geometric() && n >= 1) {
        method = "closed_form";
        return geometric_table(spec.lambda(), n, lmax);
    }
    method = "recursion";
    return evolve(spec, init, n, lmax, options);
}

// Largest n <= cap whose table (under the requested initial law) is valid.
std::optional<PmfTable> largest_valid(const OffspringSpec& spec, const std::optional<InitialSpec>& init,
                                      std::size_t lmax, int cap, const EvolveOptions& options) {
    if (!init) return largest_valid_condition1(spec, lmax, cap, options);
    GenerationStepper stepper(spec, lmax, options);
    std::optional<PmfTable> best;
    while (stepper.current().n < cap) {
        const PmfTable& base = stepper.advance();
        PmfTable t = init->family() == InitialFamily::Deterministic ? convolve_power(base, init->parameter(), options)
                                                                     : evolve_condition2_from(base, *init, options);
        if (!t.valid()) break;
        best = std::move(t);
    }
    return best;
}

std::string table_csv(const PmfTable& t) {
    std::string s = "ell,prob\n";
    s.reserve(s.size() + t.probs.size() * 28);
    for (std::size_t l = 0; l < t.probs.size(); ++l) {
        s += std::to_string(l);
        s += ',';
        s += format_double(t.probs[l]);
        s += '\n';
    }
    return s;
}

void table_trailer(Manifest& m, const PmfTable& t) {
    m.add("n", t.n);
    m.add("discarded_mass", t.discarded_mass);
}

std::string table_header(const Manifest& m, const PmfTable& t) {
    return m.csv_block() + "# covered_mass=" + format_double(t.covered_mass) + "\n# valid=" +
           (t.valid() ? "true" : "false") + "\n";
}

int cmd_table(const ProcessOptions& po, int n, std::ostream& out) {
    const OffspringSpec spec = parse_offspring(po.offspring, po.lambda);
    const std::optional<InitialSpec> init = parse_initial(po.initial, po.lambda0);
    Manifest m("table");
    po.describe(m, spec, init);
    std::string method;
    const PmfTable t = build_table(spec, init, n, po.lmax, po.evolve_options(), method);
    m.add("method", method);
    table_trailer(m, t);
    emit(po.out, out, table_header(m, t) + table_csv(t));
    return 0;
}

PmfTable self_table(const CpgParams& cpg, double log_gain, int n, std::size_t lmax) {
    PmfTable t;
    t.n = n;
    t.max_index = lmax;
    t.log_gain = log_gain;
    t.probs.assign(lmax + 1, 0.0);
    t.probs[0] = mass_at_zero(cpg);
    std::vector<double> xs(lmax);
    std::vector<double> ld(lmax);
    for (std::size_t l = 1; l <= lmax; ++l) xs[l - 1] = std::exp(std::log(static_cast<double>(l)) - log_gain);
    log_density(cpg, xs, ld);
    for (std::size_t l = 1; l <= lmax; ++l) t.probs[l] = std::exp(ld[l - 1] - log_gain);
    double s = 0.0;
    for (double p : t.probs) s += p;
    t.covered_mass = s;
    return t;
}

struct CompareOptions {
    std::string n_text;
    int n_cap = 1000;
    std::string kappa2star = "auto";
    bool self_test = false;
};

int cmd_compare(const ProcessOptions& po, const CompareOptions& co, std::ostream& out) {
    const OffspringSpec spec = parse_offspring(po.offspring, po.lambda);
    const std::optional<InitialSpec> init = parse_initial(po.initial, po.lambda0);
    Manifest m("compare");
    po.describe(m, spec, init);

    const double k2 = co.kappa2star == "auto" ? kappa2_star(spec) : std::stod(co.kappa2star);
    m.add("kappa2star", k2);
    const double lambda0 = !init ? 1.0
                                 : (init->family() == InitialFamily::Deterministic ? init->parameter() : init->lambda0());
    const CpgParams cpg = params_condition2(lambda0, spec.lambda(), k2);

    PmfTable t;
    if (co.self_test) {
        const int n = co.n_text == "max" ? 1 : parse_int(co.n_text, "--n");
        t = self_table(cpg, n * std::log(spec.lambda()), n, po.lmax);
        m.add("method", std::string("self_test"));
    } else if (co.n_text == "max") {
        std::optional<PmfTable> best = largest_valid(spec, init, po.lmax, co.n_cap, po.evolve_options());
        if (!best) throw std::runtime_error("no generation n in [1, " + std::to_string(co.n_cap) + "] has a valid table");
        t = std::move(*best);
        m.add("method", std::string("largest_valid"));
    } else {
        std::string method;
        t = build_table(spec, init, parse_int(co.n_text, "--n"), po.lmax, po.evolve_options(), method);
        m.add("method", method);
    }
    table_trailer(m, t);
    m.add("mu", cpg.mu);
    m.add("alpha", cpg.alpha);
    m.add("tau", cpg.tau);

    const ComparisonSummary cmp = scaled_comparison(t, cpg);
    std::string s = table_header(m, t);
    s += "# zero=" + format_double(cmp.gw_zero) + "," + format_double(cmp.cpg_zero) + "\n";
    s += "# bulk_max_relative_error=" + format_double(cmp.bulk_max_relative_error) + "\n";
    s += "# bulk_points=" + std::to_string(cmp.bulk_points) + "\n";
    s += "# l1_distance=" + format_double(cmp.l1_distance) + "\n";
    s += "x,scaled_gw,cpg\n";
    for (const ComparisonPoint& p : cmp.points) {
        s += format_double(p.x) + "," + format_double(p.scaled_gw) + "," + format_double(p.cpg_density) + "\n";
    }
    emit(po.out, out, s);
    return 0;
}

json cpg_json(const CpgParams& p) {
    return json{{"mu", p.mu}, {"alpha", p.alpha}, {"tau", p.tau}};
}

int cmd_fit(const ProcessOptions& po, int n, const std::string& range_text, std::ostream& out, std::ostream& err) {
    Manifest m("fit");
    json j;
    try {
        const OffspringSpec spec = parse_offspring(po.offspring, po.lambda);
        const std::optional<InitialSpec> init = parse_initial(po.initial, po.lambda0);
        po.describe(m, spec, init);
        std::optional<FitRange> range;
        if (!range_text.empty()) range = parse_range(range_text);
        std::string method;
        const PmfTable t = build_table(spec, init, n, po.lmax, po.evolve_options(), method);
        m.add("method", method);
        table_trailer(m, t);
        const FitResult f = fit_two_step(t, spec.lambda(), range);
        j["mu_hat"] = f.params.mu;
        j["alpha_hat"] = f.params.alpha;
        j["tau_hat"] = f.params.tau;
        j["residual"] = f.residual;
        j["start_residual"] = f.start_residual;
        j["theory"] = cpg_json(f.theory_params);
        j["range"] = {f.fit_range.lo, f.fit_range.hi};
        j["points"] = f.points;
        j["underdetermined"] = f.underdetermined;
        j["iterations"] = f.iterations;
        j["n"] = f.n;
        j["covered_mass"] = t.covered_mass;
        j["manifest"] = m.to_json();
        emit(po.out, out, j.dump(2) + "\n");
        return 0;
    } catch (const std::exception& e) {
        j["error"] = e.what();
        j["manifest"] = m.to_json();
        emit(po.out, out, j.dump(2) + "\n");
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

struct SimulateOptions {
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    std::string summary;
};

int cmd_simulate(const ProcessOptions& po, int n, const SimulateOptions& so, std::ostream& out, std::ostream& err) {
    const OffspringSpec spec = parse_offspring(po.offspring, po.lambda);
    const std::optional<InitialSpec> init = parse_initial(po.initial, po.lambda0);
    Manifest m("simulate");
    po.describe(m, spec, init);
    m.add("samples", so.samples);
    m.add("seed", std::to_string(so.seed));

    SimConfig cfg;
    cfg.offspring = spec;
    cfg.initial = init.value_or(InitialSpec::deterministic(1));
    cfg.n = n;
    cfg.samples = so.samples;
    cfg.seed = so.seed;
    cfg.max_index = po.lmax;
    cfg.threads = po.threads;
    const SimResult r = simulate_gw(cfg);
    table_trailer(m, r.table);

    const double lambda0 = cfg.initial.family() == InitialFamily::Deterministic ? cfg.initial.parameter()
                                                                                : cfg.initial.lambda0();
    json j;
    j["samples"] = r.summary.samples;
    j["mean"] = r.summary.mean;
    j["var"] = r.summary.variance;
    j["zero_fraction"] = r.summary.zero_fraction;
    j["capped_count"] = r.summary.capped_count;
    j["beyond_table"] = r.summary.beyond_table;
    j["expected_mean"] = lambda0 * std::exp(n * std::log(spec.lambda()));
    if (r.summary.cap_warning) j["warning"] = "more than 1% of trajectories exceeded the population cap";
    j["manifest"] = m.to_json();

    emit(po.out, out, table_header(m, r.table) + table_csv(r.table));
    emit(so.summary, err, j.dump(2) + "\n");
    return 0;
}

struct AsymOptions {
    std::string mode;
    std::string offspring = "poisson";
    double lambda = 1.2;
    int m = 5;
    int K = 6;
    std::vector<double> ts;
    std::vector<double> lambdas{1.01, 1.02, 1.05, 1.1};
    double z0 = 0.1;
    double alpha = 1.0;
    double s = 1.0;
    std::string kappa2star = "auto";
    std::vector<double> deltas{20, 50, 100};
    double lmax_factor = 200.0;
    unsigned threads = 0;
    std::string out;
};

int nearest_int(double v, const std::string& what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 * std::max(1.0, std::abs(v)) || r < 0) {
        throw std::invalid_argument(what + " = " + format_double(v) + " is not a non-negative integer");
    }
    return static_cast<int>(r);
}

json asym_residual(const AsymOptions& a) {
    const std::vector<double> ts = a.ts.empty() ? std::vector<double>{0.1, 0.5} : a.ts;
    json rows = json::array();
    for (double t : ts) {
        double prev = kUnset;
        for (double lam : a.lambdas) {
            const OffspringSpec spec = parse_offspring(a.offspring, lam);
            const double r = functional_eq_residual(spec, t);
            const double eps = lam - 1.0;
            json row{{"t", t},
                     {"lambda", lam},
                     {"residual", r},
                     {"residual_over_eps2", r / (eps * eps)},
                     {"residual_over_eps3", r / (eps * eps * eps)}};
            if (!std::isnan(prev)) row["ratio_to_previous"] = r / prev;
            prev = r;
            rows.push_back(row);
        }
    }
    return json{{"mode", "residual"}, {"offspring", a.offspring}, {"rows", rows}};
}

json asym_coeffs(const AsymOptions& a) {
    const OffspringSpec spec = parse_offspring(a.offspring, a.lambda);
    const CumulantVector kb = wbar_cumulants(spec, a.m, a.K);
    const SeriesCoeffs rec = reciprocal_series(kb);
    const SeriesCoeffs h = h_coefficients(spec, a.m, a.K);
    return json{{"mode", "coeffs"},     {"offspring", spec.label()}, {"lambda", a.lambda},     {"m", a.m},
                {"K", a.K},             {"wbar_cumulants", kb.values}, {"c_tilde", rec.coeffs}, {"c", h.coeffs},
                {"c0", h.coeffs.at(0)}, {"c1", h.coeffs.size() > 1 ? h.coeffs[1] : 0.0}};
}

json asym_diffusion(const AsymOptions& a) {
    const std::vector<double> ts = a.ts.empty() ? std::vector<double>{0.05, 0.1} : a.ts;
    json rows = json::array();
    for (double delta : a.deltas) {
        if (!(delta > 0.0)) throw std::invalid_argument("Delta = " + format_double(delta) + " must be > 0");
        const double lam = 1.0 + a.alpha / delta;
        const OffspringSpec spec = parse_offspring(a.offspring, lam);
        const double k2 = a.kappa2star == "auto" ? kappa2_star(spec) : std::stod(a.kappa2star);
        const int n = nearest_int(a.s * delta, "s * Delta");
        const int k = nearest_int(a.z0 * delta, "z0 * Delta");
        if (k < 1) throw std::invalid_argument("z0 * Delta must be >= 1");
        const auto lmax = static_cast<std::size_t>(std::ceil(a.lmax_factor * delta));
        EvolveOptions eo;
        eo.threads = a.threads;
        const PmfTable t = convolve_power(evolve_condition1(spec, n, lmax, eo), k, eo);
        for (double t_value : ts) {
            const EmpiricalCgf e = empirical_cgf(t, delta, t_value);
            const double xi = diffusion_cgf(a.z0, a.alpha, a.s, k2, t_value);
            rows.push_back(json{{"delta", delta},
                                {"t", t_value},
                                {"lambda", lam},
                                {"n", n},
                                {"z0_delta", k},
                                {"lmax", lmax},
                                {"covered_mass", t.covered_mass},
                                {"empirical_cgf", e.value},
                                {"xi", xi},
                                {"abs_error", std::abs(e.value - xi)},
                                {"truncation_sensitive", e.truncation_sensitive}});
        }
    }
    return json{{"mode", "diffusion"}, {"z0", a.z0}, {"alpha", a.alpha}, {"s", a.s}, {"rows", rows}};
}

int cmd_asym(const AsymOptions& a, std::ostream& out) {
    Manifest m("asym");
    m.add("mode", a.mode);
    json j;
    if (a.mode == "residual") {
        j = asym_residual(a);
    } else if (a.mode == "coeffs") {
        j = asym_coeffs(a);
    } else {
        j = asym_diffusion(a);
    }
    j["manifest"] = m.to_json();
    emit(a.out, out, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Galton-Watson distributions and their compound Poisson-gamma approximation", "gwcpg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version()));

    ProcessOptions table_po;
    int table_n = 0;
    auto* table = app.add_subcommand("table", "exact pmf table of Z_n");
    table_po.attach(table);
    table->add_option("--n", table_n, "generation")->required()->check(CLI::NonNegativeNumber);

    ProcessOptions cmp_po;
    CompareOptions cmp;
    auto* compare = app.add_subcommand("compare", "scaled table against the CPG density");
    cmp_po.attach(compare);
    compare->add_option("--n", cmp.n_text, "generation, or 'max' for the largest valid one")->required();
    compare->add_option("--n-cap", cmp.n_cap, "search limit for --n max")->capture_default_str();
    compare->add_option("--kappa2star", cmp.kappa2star, "number or 'auto'")->capture_default_str();
    compare->add_flag("--self-test", cmp.self_test, "compare the CPG against its own discretisation");

    ProcessOptions fit_po;
    int fit_n = 0;
    std::string fit_range;
    auto* fit = app.add_subcommand("fit", "two-step CPG fit to an exact table");
    fit_po.attach(fit);
    fit->add_option("--n", fit_n, "generation")->required()->check(CLI::PositiveNumber);
    fit->add_option("--range", fit_range, "fit range lo:hi (default: all points above 1e-12)");

    ProcessOptions sim_po;
    int sim_n = 0;
    SimulateOptions so;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo pmf of Z_n");
    sim_po.attach(sim);
    sim->add_option("--n", sim_n, "generation")->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--samples", so.samples, "trajectories")->capture_default_str()->check(CLI::PositiveNumber);
    sim->add_option("--seed", so.seed, "seed")->capture_default_str();
    sim->add_option("--summary", so.summary, "summary JSON path (default stderr)");

    AsymOptions ao;
    auto* asym = app.add_subcommand("asym", "series and asymptotic diagnostics");
    asym->add_option("mode", ao.mode, "residual | coeffs | diffusion")
        ->required()
        ->check(CLI::IsMember({"residual", "coeffs", "diffusion"}));
    asym->add_option("--offspring", ao.offspring, "poisson | geometric | nb:<m>")->capture_default_str();
    asym->add_option("--lambda", ao.lambda, "offspring mean (coeffs)")->capture_default_str();
    asym->add_option("--m", ao.m, "generation (coeffs)")->capture_default_str();
    asym->add_option("--K", ao.K, "cumulant depth (coeffs)")->capture_default_str();
    asym->add_option("--t", ao.ts, "CGF arguments, comma separated")->delimiter(',');
    asym->add_option("--lambdas", ao.lambdas, "lambda grid (residual)")->delimiter(',');
    asym->add_option("--z0", ao.z0, "initial density (diffusion)")->capture_default_str();
    asym->add_option("--alpha", ao.alpha, "growth rate (diffusion)")->capture_default_str();
    asym->add_option("--s", ao.s, "time (diffusion)")->capture_default_str();
    asym->add_option("--kappa2star", ao.kappa2star, "number or 'auto' (diffusion)")->capture_default_str();
    asym->add_option("--deltas", ao.deltas, "Delta grid (diffusion)")->delimiter(',');
    asym->add_option("--lmax-factor", ao.lmax_factor, "support cap per unit Delta (diffusion)")->capture_default_str();
    asym->add_option("--threads", ao.threads, "worker threads");
    asym->add_option("--out", ao.out, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (table->parsed()) return cmd_table(table_po, table_n, out);
        if (compare->parsed()) return cmd_compare(cmp_po, cmp, out);
        if (fit->parsed()) return cmd_fit(fit_po, fit_n, fit_range, out, err);
        if (sim->parsed()) return cmd_simulate(sim_po, sim_n, so, out, err);
        if (asym->parsed()) return cmd_asym(ao, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace gwcpg::cli
