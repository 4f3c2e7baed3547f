// esd: command-line front end for the X-state thermal-damping toolkit.
//
// Subcommands: evolve | trace | death | bounds | verify | sweep.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "esd/death.hpp"
#include "esd/energy.hpp"
#include "esd/lindblad.hpp"
#include "esd/verify.hpp"
#include "esd/xstate.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Flat key-value state file: one `key = value` per line for a, b, c, d, z;
// blank lines and '#' comments ignored.
esd::XState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open state file '" + path + "'");
    std::optional<double> vals[5];
    const std::string keys = "abcdz";
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": expected 'key = value'");
        }
        std::istringstream key_in(line.substr(0, eq));
        std::istringstream val_in(line.substr(eq + 1));
        std::string key;
        double value = 0.0;
        std::string rest;
        if (!(key_in >> key) || key_in >> rest || key.size() != 1 ||
            keys.find(key[0]) == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": unknown key; expected one of a, b, c, d, z");
        }
        if (!(val_in >> value) || val_in >> rest) {
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": bad numeric value for '" + key + "'");
        }
        vals[keys.find(key[0])] = value;
    }
    for (size_t i = 0; i < 5; ++i) {
        if (!vals[i]) {
            throw UsageError(path + ": missing key '" + keys[i] + "'");
        }
    }
    return esd::XState(*vals[0], *vals[1], *vals[2], *vals[3], *vals[4]);
}

struct StateSource {
    std::string preset;
    std::string file;

    esd::XState resolve() const {
        if (!preset.empty() && !file.empty()) {
            throw UsageError("--preset and --state are mutually exclusive");
        }
        if (!preset.empty()) return esd::preset_state(preset);
        if (!file.empty()) return load_state_file(file);
        throw UsageError("one of --preset or --state is required");
    }
};

// Atomic output: write the whole document to <path>.tmp, then rename.
// Empty path means stdout.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot open output file '" + tmp + "'");
        out << content;
        if (!out.flush()) throw UsageError("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

esd::BoundVariant parse_variant(const std::string& name) {
    if (name == "corrected") return esd::BoundVariant::corrected;
    if (name == "paper-literal") return esd::BoundVariant::paper_literal;
    throw UsageError("unknown bound variant '" + name + "'");
}

std::string bound_or_undefined(const esd::XState& x, double nbar,
                               const esd::QubitEnergy& eq,
                               esd::BoundVariant variant) {
    try {
        return fmt17(esd::general_bound(x, nbar, eq, variant));
    } catch (const esd::BoundUndefinedError&) {
        return "undefined";
    }
}

// Time at which the dissipated energy magnitude first reaches `bound`,
// i.e. omega^2(t) = bound / (E_A * |c+d-N1-N3|).
std::string bound_implied_time(const esd::XState& x, const esd::BathParams& bath,
                               const esd::QubitEnergy& eq, double bound) {
    const esd::NoiseFactors nf = esd::noise_factors(bath.nbar);
    const double gap = std::abs(x.c() + x.d() - nf.n1 - nf.n3);
    if (gap <= 1e-12) return "undefined (energy-blind state)";
    const double omega_sq_needed = bound / (eq.e_a * gap);
    if (omega_sq_needed >= 1.0) return "never";
    return fmt17(-std::log(1.0 - omega_sq_needed) / bath.relaxation_rate());
}

bool is_bell_like(const esd::XState& x) {
    return std::abs(x.a()) <= 1e-12 && std::abs(x.d()) <= 1e-12 &&
           std::abs(x.b() - 0.5) <= 1e-12 && std::abs(x.c() - 0.5) <= 1e-12 &&
           std::abs(std::abs(x.z()) - 0.5) <= 1e-12;
}

struct CommonOpts {
    StateSource source;
    double nbar = 0.0;
    double gamma_rate = 1.0;
    double ea = 1.0;
    std::string variant = "corrected";
};

void add_physics_options(CLI::App* cmd, CommonOpts& o, bool with_state = true) {
    if (with_state) {
        cmd->add_option("--preset", o.source.preset,
                        "preset state: bell-plus, bell-minus, ye4-third, werner(p)");
        cmd->add_option("--state", o.source.file, "state file with keys a,b,c,d,z");
    }
    cmd->add_option("--nbar", o.nbar, "mean thermal occupation (>= 0)");
    cmd->add_option("--gamma-rate", o.gamma_rate, "damping rate Gamma (> 0)");
    cmd->add_option("--ea", o.ea, "qubit-A level splitting (> 0)");
}

int run_evolve(const CommonOpts& o, double t) {
    const esd::XState x0 = o.source.resolve();
    const esd::BathParams bath(o.gamma_rate, o.nbar);
    const esd::QubitEnergy eq(o.ea);
    const esd::XState xt = esd::evolve_xstate(x0, bath, t);
    const esd::EnergyReport r = esd::energy_report(x0, bath, t, eq);

    std::printf("t: %s\n", fmt17(t).c_str());
    std::printf("state: a=%s b=%s c=%s d=%s z=%s\n", fmt17(xt.a()).c_str(),
                fmt17(xt.b()).c_str(), fmt17(xt.c()).c_str(),
                fmt17(xt.d()).c_str(), fmt17(xt.z()).c_str());
    std::printf("concurrence: %s\n", fmt17(esd::concurrence_x(xt)).c_str());
    std::printf("energy: %s\n", fmt17(r.e_final).c_str());
    std::printf("delta_e: %s\n", fmt17(r.delta_e).c_str());
    return 0;
}

int run_trace(const CommonOpts& o, double t_max, int steps,
              const std::string& out) {
    if (steps < 2) throw UsageError("--steps must be >= 2");
    if (!(t_max > 0.0)) throw UsageError("--t-max must be > 0");
    const esd::XState x0 = o.source.resolve();
    const esd::BathParams bath(o.gamma_rate, o.nbar);
    const esd::QubitEnergy eq(o.ea);
    const double e0 = esd::mean_energy_a(x0, eq);

    std::string csv = "t,a,b,c,d,z,concurrence,energy,delta_e\n";
    for (int i = 0; i < steps; ++i) {
        const double t = t_max * static_cast<double>(i) / (steps - 1);
        const esd::XState xt = esd::evolve_xstate(x0, bath, t);
        const double e = esd::mean_energy_a(xt, eq);
        csv += fmt17(t) + ',' + fmt17(xt.a()) + ',' + fmt17(xt.b()) + ',' +
               fmt17(xt.c()) + ',' + fmt17(xt.d()) + ',' + fmt17(xt.z()) + ',' +
               fmt17(esd::concurrence_x(xt)) + ',' + fmt17(e) + ',' +
               fmt17(e0 - e) + '\n';
    }
    emit(out, csv);
    return 0;
}

int run_death(const CommonOpts& o, std::optional<double> tol) {
    const esd::XState x0 = o.source.resolve();
    const esd::BathParams bath(o.gamma_rate, o.nbar);
    const esd::QubitEnergy eq(o.ea);
    const double t_tol = tol.value_or(esd::default_death_tol(bath));
    const esd::DeathResult r = esd::death_time(x0, bath, eq, t_tol);

    switch (r.status) {
        case esd::DeathStatus::finite:
            std::printf("death_time: %s\n", fmt17(r.death_time).c_str());
            std::printf("bracket: [%s, %s]\n", fmt17(r.bracket_low).c_str(),
                        fmt17(r.bracket_high).c_str());
            std::printf("omega_sq_at_death: %s\n",
                        fmt17(r.omega_sq_at_death).c_str());
            std::printf("delta_e_at_death: %s\n",
                        fmt17(r.delta_e_at_death).c_str());
            break;
        case esd::DeathStatus::never:
            std::printf("death_time: never (within 60 relaxation times)\n");
            break;
        case esd::DeathStatus::already_separable:
            std::printf("death_time: already-separable\n");
            std::printf("omega_sq_at_death: %s\n", fmt17(0.0).c_str());
            std::printf("delta_e_at_death: %s\n", fmt17(0.0).c_str());
            break;
    }
    std::printf("general_bound_corrected: %s\n",
                bound_or_undefined(x0, o.nbar, eq, esd::BoundVariant::corrected)
                    .c_str());
    std::printf("general_bound_paper_literal: %s\n",
                bound_or_undefined(x0, o.nbar, eq, esd::BoundVariant::paper_literal)
                    .c_str());
    return 0;
}

int run_bounds(const CommonOpts& o) {
    const esd::XState x0 = o.source.resolve();
    const esd::BathParams bath(o.gamma_rate, o.nbar);
    const esd::QubitEnergy eq(o.ea);

    if (is_bell_like(x0)) {
        std::printf("bell_bound: %s\n", fmt17(esd::bell_bound(o.nbar, eq)).c_str());
    }
    for (const auto& [label, variant] :
         {std::pair{"corrected", esd::BoundVariant::corrected},
          std::pair{"paper_literal", esd::BoundVariant::paper_literal}}) {
        try {
            const double bound = esd::general_bound(x0, o.nbar, eq, variant);
            std::printf("general_bound_%s: %s\n", label, fmt17(bound).c_str());
            std::printf("bound_implied_time_%s: %s\n", label,
                        bound_implied_time(x0, bath, eq, bound).c_str());
        } catch (const esd::BoundUndefinedError&) {
            std::printf("general_bound_%s: undefined\n", label);
        }
    }
    return 0;
}

int run_verify(std::uint64_t seed, int samples, double gamma_rate, double tol) {
    if (samples < 1) throw UsageError("--samples must be >= 1");
    esd::EquivalenceConfig config;
    config.seed = seed;
    config.n_states = samples;
    config.gamma_rate = gamma_rate;
    const esd::EquivalenceReport report = esd::run_oracle_equivalence(config);
    std::printf("comparisons: %ld\n", report.comparisons);
    std::printf("max_elementwise_deviation: %s\n",
                fmt17(report.max_elementwise_dev).c_str());
    std::printf("max_off_pattern: %s\n", fmt17(report.max_off_pattern).c_str());
    const bool ok = report.passed(tol, 1e-10);
    std::printf("verdict: %s (threshold %s)\n", ok ? "pass" : "fail",
                fmt17(tol).c_str());
    return ok ? 0 : 1;
}

int run_sweep(const CommonOpts& o, double nbar_min, double nbar_max, int steps,
              std::optional<double> tol, const std::string& out) {
    if (steps < 2) throw UsageError("--steps must be >= 2");
    if (!(nbar_min >= 0.0) || !(nbar_max > nbar_min)) {
        throw UsageError("need 0 <= --nbar-min < --nbar-max");
    }
    const esd::XState x0 = o.source.resolve();
    const esd::QubitEnergy eq(o.ea);
    const esd::BoundVariant variant = parse_variant(o.variant);

    std::string csv = "nbar,death_time,delta_e_at_death,bell_bound,general_bound\n";
    for (int i = 0; i < steps; ++i) {
        const double nbar =
            nbar_min + (nbar_max - nbar_min) * static_cast<double>(i) / (steps - 1);
        const esd::BathParams bath(o.gamma_rate, nbar);
        const esd::DeathResult r = esd::death_time(
            x0, bath, eq, tol.value_or(esd::default_death_tol(bath)));
        std::string death;
        std::string delta = "nan";
        switch (r.status) {
            case esd::DeathStatus::finite:
                death = fmt17(r.death_time);
                delta = fmt17(r.delta_e_at_death);
                break;
            case esd::DeathStatus::never:
                death = "never";
                break;
            case esd::DeathStatus::already_separable:
                death = "already-separable";
                delta = fmt17(0.0);
                break;
        }
        csv += fmt17(nbar) + ',' + death + ',' + delta + ',' +
               fmt17(esd::bell_bound(nbar, eq)) + ',' +
               bound_or_undefined(x0, nbar, eq, variant) + '\n';
    }
    emit(out, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit X-state thermal amplitude damping toolkit"};
    app.require_subcommand(1);

    CommonOpts evolve_opts;
    double evolve_t = 0.0;
    auto* evolve = app.add_subcommand(
        "evolve", "evolve a state and report concurrence and energy");
    add_physics_options(evolve, evolve_opts);
    evolve->add_option("--t", evolve_t, "evolution time (>= 0)")->required();

    CommonOpts trace_opts;
    double trace_t_max = 1.0;
    int trace_steps = 101;
    std::string trace_out;
    auto* trace = app.add_subcommand("trace", "CSV time series over a grid");
    add_physics_options(trace, trace_opts);
    trace->add_option("--t-max", trace_t_max, "end of the time grid")->required();
    trace->add_option("--steps", trace_steps, "number of grid points (>= 2)");
    trace->add_option("--out", trace_out, "output CSV path (default stdout)");

    CommonOpts death_opts;
    std::optional<double> death_tol;
    auto* death = app.add_subcommand("death", "locate the disentanglement time");
    add_physics_options(death, death_opts);
    death->add_option("--tol", death_tol,
                      "absolute time tolerance (default 1e-9 relaxation times)");

    CommonOpts bounds_opts;
    auto* bounds = app.add_subcommand(
        "bounds", "energy bounds for complete disentanglement");
    add_physics_options(bounds, bounds_opts);

    std::uint64_t verify_seed = 42;
    int verify_samples = 200;
    double verify_gamma = 1.0;
    double verify_tol = 1e-8;
    auto* verify = app.add_subcommand(
        "verify", "compare the closed-form propagator against the RK4 oracle");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--samples", verify_samples, "number of random states");
    verify->add_option("--gamma-rate", verify_gamma, "damping rate Gamma (> 0)");
    verify->add_option("--tol", verify_tol, "max allowed elementwise deviation");

    CommonOpts sweep_opts;
    double nbar_min = 0.1;
    double nbar_max = 3.0;
    int sweep_steps = 25;
    std::optional<double> sweep_tol;
    std::string sweep_out;
    auto* sweep = app.add_subcommand(
        "sweep", "death time and bounds over a thermal-occupation grid");
    add_physics_options(sweep, sweep_opts);
    sweep->add_option("--nbar-min", nbar_min, "grid start (>= 0)");
    sweep->add_option("--nbar-max", nbar_max, "grid end");
    sweep->add_option("--steps", sweep_steps, "number of grid points (>= 2)");
    sweep->add_option("--tol", sweep_tol, "death-time tolerance");
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
    sweep->add_option("--bound-variant", sweep_opts.variant,
                      "corrected | paper-literal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (evolve->parsed()) return run_evolve(evolve_opts, evolve_t);
        if (trace->parsed())
            return run_trace(trace_opts, trace_t_max, trace_steps, trace_out);
        if (death->parsed()) return run_death(death_opts, death_tol);
        if (bounds->parsed()) return run_bounds(bounds_opts);
        if (verify->parsed())
            return run_verify(verify_seed, verify_samples, verify_gamma, verify_tol);
        if (sweep->parsed())
            return run_sweep(sweep_opts, nbar_min, nbar_max, sweep_steps, sweep_tol,
                             sweep_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (...) {
        std::fprintf(stderr, "error: unknown failure\n");
        return 2;
    }
    return 2;
}
