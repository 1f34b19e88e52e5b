#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "godel/commands.hpp"
#include "godel/errors.hpp"

using namespace godel;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out;
};

Run
run_cli(std::string const& args)
{
    std::string const cmd = std::string(GODEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe            = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, n);
    }
    int const status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path
scratch(std::string const& name)
{
    fs::path const dir = fs::temp_directory_path() / "godel_c60_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string
csv_of(Table const& t)
{
    std::ostringstream s;
    write_csv(t, s);
    return s.str();
}

} // namespace

TEST_CASE("sweep axes parse and format")
{
    SweepAxis const a = parse_sweep("omega:0:0.1:5");
    CHECK(a.param == "omega");
    CHECK(a.count == 5);
    CHECK_FALSE(a.log);
    auto const v = a.values();
    REQUIRE(v.size() == 5);
    CHECK(v.front() == 0.0);
    CHECK(v[2] == doctest::Approx(0.05));
    CHECK(v.back() == 0.1);

    SweepAxis const b = parse_sweep("omega:1e-4:1e-2:3:log");
    CHECK(b.log);
    CHECK(b.values()[1] == doctest::Approx(1e-3));
    CHECK(parse_sweep(format_sweep(b)) == b);

    CHECK_THROWS_AS(parse_sweep("omega:0:1"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("spin:0:1:3"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("omega:0:1:0"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("omega:0:1:3:cubic"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("omega:-1:1:3:log"), ConfigError);
}

TEST_CASE("configuration round-trips through JSON")
{
    RunConfig cfg;
    apply_preset(cfg, "c60");
    cfg.geometry.omega = 0.05;
    cfg.flux.flux      = 0.7;
    cfg.sweep          = {parse_sweep("alpha:0.8:1.2:3")};
    cfg.levels.n_max   = 2;
    cfg.levels.branch  = Branch::plus;
    cfg.format         = OutputFormat::structured;
    cfg.seed           = 99;
    RunConfig const back = from_json(to_json(cfg));
    CHECK(to_json(back) == to_json(cfg));
    CHECK(back.monopole.defects == 12);
    CHECK(back.sweep == cfg.sweep);
}

TEST_CASE("configuration errors name the field")
{
    RunConfig cfg;
    try {
        merge_json(cfg, nlohmann::json::parse(R"({"model": {"alpah": 1.0}})"));
        FAIL("expected ConfigError");
    } catch (ConfigError const& e) {
        CHECK(std::string(e.what()).find("alpah") != std::string::npos);
    }
    try {
        merge_json(cfg, nlohmann::json::parse(R"({"model": {"alpha": "one"}})"));
        FAIL("expected ConfigError");
    } catch (ConfigError const& e) {
        CHECK(std::string(e.what()).find("model.alpha") != std::string::npos);
    }
    CHECK_THROWS_AS(apply_preset(cfg, "c70"), ConfigError);

    fs::path const bad = scratch("bad.json");
    std::ofstream(bad) << "{\n  \"seed\": 3,\n  oops\n}\n";
    try {
        merge_config_file(cfg, bad.string());
        FAIL("expected ConfigError");
    } catch (ConfigError const& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("sweep points are the Cartesian product, first axis outermost")
{
    RunConfig cfg;
    cfg.sweep     = {parse_sweep("alpha:0.8:1.0:2"), parse_sweep("omega:0:0.1:3")};
    auto const pt = sweep_points(cfg);
    REQUIRE(pt.size() == 6);
    CHECK(pt[0].geometry.alpha == 0.8);
    CHECK(pt[2].geometry.alpha == 0.8);
    CHECK(pt[2].geometry.omega == 0.1);
    CHECK(pt[3].geometry.alpha == 1.0);
    CHECK(pt[3].geometry.omega == 0.0);

    cfg.sweep = {parse_sweep("alpha:-1:1:3")};
    CHECK_THROWS_AS(sweep_points(cfg), ConfigError);
}

TEST_CASE("spectrum table layout")
{
    RunConfig cfg;
    apply_preset(cfg, "c60");
    cfg.levels.n_max = 0;
    cfg.levels.m_max = 2.5;
    cfg.jobs         = 1;
    Table const t    = cmd_spectrum(cfg);
    CHECK(t.rows.size() == 6);
    std::string const csv = csv_of(t);
    CHECK(csv.rfind("# godel-c60 spectrum v1\nn,m,alpha,Omega,g,Phi_B,R,eps_plus,eps_minus,valid,", 0) == 0);
    // n = 0, m = 5/2: lambda = sqrt(9 - 9/4)
    CHECK(csv.find("0,2.5000000000000000e+00,") != std::string::npos);
    CHECK(csv.find("2.5980762113533160e+00") != std::string::npos);
    CHECK(csv.find(",nan,nan,false,") != std::string::npos);
    CHECK(csv.find(",complex\n") != std::string::npos);
}

TEST_CASE("current accepts only a flux sweep")
{
    RunConfig cfg;
    cfg.sweep = {parse_sweep("omega:0:0.1:3")};
    CHECK_THROWS_AS(cmd_current(cfg), ConfigError);
    cfg.sweep = {parse_sweep("flux:0.1:0.5:3")};
    cfg.jobs  = 2;
    Table const t = cmd_current(cfg);
    CHECK(t.rows.size() == 3);
    CHECK(t.columns.front() == "Phi_B");
}

TEST_CASE("causality accepts omega and l2 sweeps")
{
    RunConfig cfg;
    cfg.geometry.omega = 1.0;
    cfg.sweep          = {parse_sweep("l2:-0.5:1.5:5")};
    Table const t = cmd_causality(cfg);
    REQUIRE(t.rows.size() == 5);
    CHECK(std::get<std::string>(t.rows[0][2]) == "AlternatingRegions");
    CHECK(std::get<std::string>(t.rows[4][2]) == "NoCTC");
    cfg.sweep = {parse_sweep("alpha:0.8:1:2")};
    CHECK_THROWS_AS(cmd_causality(cfg), ConfigError);
}

TEST_CASE("structured output carries schema, version and config")
{
    RunConfig cfg;
    cfg.levels.n_max = 0;
    cfg.levels.m_max = 0.5;
    Table const t    = cmd_spectrum(cfg);
    auto const j     = to_structured(t, to_json(cfg));
    CHECK(j["schema"] == "godel-c60/spectrum");
    CHECK(j["version"] == "1");
    CHECK(j["columns"].size() == t.columns.size());
    CHECK(j["rows"].size() == 2);
    CHECK(j["config"]["seed"] == cfg.seed);
}

TEST_CASE("numbers are written with 17 significant digits")
{
    CHECK(format_number(0.1) == "1.0000000000000001e-01");
    CHECK(format_number(-2.0) == "-2.0000000000000000e+00");
    CHECK(format_number(std::nan("")) == "nan");
    Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS(t.add({1.0}));
}

TEST_CASE("tool exit codes")
{
    CHECK(run_cli("spectrum --preset c60 --nmax 0 --mmax 0.5").code == 0);
    CHECK(run_cli("spectrum --alpha -1").code == 1);
    CHECK(run_cli("spectrum --sweep omega:0:1").code == 1);
    CHECK(run_cli("nonsense").code == 1);
    CHECK(run_cli("current --sweep omega:0:0.1:2").code == 1);
}

TEST_CASE("flags override the config file, which overrides the preset")
{
    fs::path const file = scratch("cfg.json");
    std::ofstream(file) << R"({"model": {"alpha": 0.9, "omega": 0.02}, "levels": {"n_max": 0, "m_max": 0.5}})";
    Run const r = run_cli("spectrum --preset c60 --config " + file.string() + " --omega 0.03");
    REQUIRE(r.code == 0);
    // alpha from the file, omega from the flag, g from the preset
    CHECK(r.out.find(",9.0000000000000002e-01,2.9999999999999999e-02,1.5000000000000000e+00,") !=
          std::string::npos);
}

TEST_CASE("output is identical across runs and thread counts")
{
    std::string const args = "oracle --preset c60 --omega 0.05 --nmax 1 --mmax 1.5 --format structured";
    Run const a            = run_cli(args + " --jobs 1");
    Run const b            = run_cli(args + " --jobs 4");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": \"godel-c60/oracle\"") != std::string::npos);

    fs::path const out = scratch("causality.csv");
    REQUIRE(run_cli("causality --sweep omega:0.5:2:4 --out " + out.string()).code == 0);
    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    CHECK(first == "# godel-c60 causality v1");
}
