// Command-line front end: spectrum, current, causality, oracle and verify.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "godel/commands.hpp"
#include "godel/errors.hpp"
#include "godel/verify.hpp"

namespace {

struct Flags
{
    std::string config;
    std::string preset;
    std::optional<double> alpha, omega, radius, flux, l2, mmax;
    std::optional<int> nmax, jobs;
    std::optional<long long> defects;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> sweep;
    std::optional<std::string> out, format, branch, lattice;
};

godel::RunConfig
resolve(Flags const& fl)
{
    godel::RunConfig cfg;
    if (!fl.preset.empty()) {
        godel::apply_preset(cfg, fl.preset);
    }
    if (!fl.config.empty()) {
        godel::merge_config_file(cfg, fl.config);
    }
    nlohmann::json over = nlohmann::json::object();
    auto put = [&](char const* group, char const* key, auto const& v) {
        if (v) {
            over[group][key] = *v;
        }
    };
    put("model", "alpha", fl.alpha);
    put("model", "omega", fl.omega);
    put("model", "radius", fl.radius);
    put("model", "flux", fl.flux);
    put("model", "l2", fl.l2);
    put("model", "defects", fl.defects);
    put("levels", "n_max", fl.nmax);
    put("levels", "m_max", fl.mmax);
    put("levels", "branch", fl.branch);
    put("levels", "lattice", fl.lattice);
    put("output", "path", fl.out);
    put("output", "format", fl.format);
    if (!fl.sweep.empty()) {
        over["sweep"] = fl.sweep;
    }
    if (fl.seed) {
        over["seed"] = *fl.seed;
    }
    if (fl.jobs) {
        over["jobs"] = *fl.jobs;
    }
    godel::merge_json(cfg, over);
    return cfg;
}

int
run_verify(godel::RunConfig const& cfg)
{
    godel::VerifyReport const rep = godel::cmd_verify(cfg);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) {
            throw godel::ConfigError("cannot write '" + cfg.out + "'");
        }
        out = &file;
    }
    if (cfg.format == godel::OutputFormat::structured) {
        godel::write_json(rep.to_json(), *out);
    } else {
        godel::Table t;
        t.schema  = "verify";
        t.columns = {"id", "name", "passed", "detail"};
        for (auto const& c : rep.checks) {
            t.add({std::int64_t{c.id}, c.name, c.passed, c.detail});
        }
        godel::write_csv(t, *out);
    }
    for (auto const& c : rep.checks) {
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << c.detail << "\n";
    }
    return rep.all_passed() ? 0 : 2;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Dirac spectrum, persistent current and causality of a rotating defected fullerene"};
    app.require_subcommand(1);

    Flags fl;
    app.add_option("--config", fl.config, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--preset", fl.preset, "Parameter preset (c60)");
    app.add_option("--alpha", fl.alpha, "Disclination parameter");
    app.add_option("--omega", fl.omega, "Rotation rate");
    app.add_option("--radius", fl.radius, "Sphere radius");
    app.add_option("--flux", fl.flux, "Aharonov-Bohm flux Phi_B");
    app.add_option("--defects", fl.defects, "Number of conical defects (g = N/8)");
    app.add_option("--l2", fl.l2, "l^2 of the Goedel-type family");
    app.add_option("--nmax", fl.nmax, "Largest n");
    app.add_option("--mmax", fl.mmax, "Largest |m|");
    app.add_option("--branch", fl.branch, "Occupied branch for currents (plus, minus)");
    app.add_option("--lattice", fl.lattice, "m lattice (half_integer, integer)");
    app.add_option("--sweep", fl.sweep, "param:start:stop:count[:log], repeatable");
    app.add_option("--out", fl.out, "Output path (default: standard output)");
    app.add_option("--format", fl.format, "csv or structured");
    app.add_option("--seed", fl.seed, "Seed for randomized checks");
    app.add_option("--jobs", fl.jobs, "Worker threads (default: GODEL_C60_JOBS, then all cores)");

    auto* spectrum  = app.add_subcommand("spectrum", "Energy levels over (n, m) and sweep points");
    auto* current   = app.add_subcommand("current", "Persistent current over a flux sweep");
    auto* causality = app.add_subcommand("causality", "Causality class over (Omega, l2)");
    auto* oracle    = app.add_subcommand("oracle", "Closed-form roots against shooting eigenvalues");
    auto* verify    = app.add_subcommand("verify", "Run every invariant suite");
    for (auto* s : {spectrum, current, causality, oracle, verify}) {
        s->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        godel::RunConfig const cfg = resolve(fl);
        if (verify->parsed()) {
            return run_verify(cfg);
        }
        godel::Table t;
        if (spectrum->parsed()) {
            t = godel::cmd_spectrum(cfg);
        } else if (current->parsed()) {
            t = godel::cmd_current(cfg);
        } else if (causality->parsed()) {
            t = godel::cmd_causality(cfg);
        } else {
            t = godel::cmd_oracle(cfg);
        }
        godel::emit(cfg, t, std::cout);
    } catch (godel::ConfigError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (godel::DomainError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
