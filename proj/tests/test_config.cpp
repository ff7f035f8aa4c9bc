#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "reldiff/config.hpp"
#include "reldiff/runner.hpp"

using namespace reldiff;

namespace {

const char* kHeatCfg = R"(
# smooth reference test
[problem]
id = heat

[grid]
m = 40

[scheme]
reconstruction = weno5
tableau = ars222
cfl = 0.25

[output]
T = 0.02
times = 0, 0.01, 0.02
dir = cfg_test_out
)";

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config parsing happy path") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    CHECK(cfg.problem_id == "heat");
    CHECK(cfg.m0 == 40);
    CHECK(cfg.reconstruction == "weno5");
    CHECK(cfg.tableau == "ars222");
    CHECK(cfg.T == 0.02);
    REQUIRE(cfg.times.size() == 3);
    CHECK(cfg.times[1] == 0.01);
    CHECK(cfg.dir == "cfg_test_out");
    validate_config(cfg);
}

TEST_CASE("config errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_config_text(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("[problem]\nbogus_key = 1\n", 2);
    expect_line("[grid]\nm = not_a_number\n", 2);
    expect_line("stray = 1\n", 1);
    expect_line("[problem\n", 1);
    expect_line("[scheme]\ncfl\n", 2);
    expect_line("[nope]\nx = 1\n", 2);
}

TEST_CASE("override application") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    apply_override(cfg, "scheme.tableau=ars443");
    apply_override(cfg, "grid.m=80");
    CHECK(cfg.tableau == "ars443");
    CHECK(cfg.m0 == 80);
    CHECK_THROWS_AS(apply_override(cfg, "m=80"), ConfigError);
    CHECK_THROWS_AS(apply_override(cfg, "grid.m"), ConfigError);
    CHECK_THROWS_AS(apply_override(cfg, "grid.zz=80"), ConfigError);
}

TEST_CASE("validate_config rejects inconsistent settings") {
    RunConfig cfg = parse_config_text(kHeatCfg);

    SUBCASE("T must be positive") {
        cfg.T = 0.0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("output times inside [0, T]") {
        cfg.times = {0.0, 0.05};
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("output times increasing") {
        cfg.times = {0.01, 0.01};
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("bad scheme names") {
        cfg.reconstruction = "eno9";
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("unknown problem id") {
        cfg.problem_id = "kdv";
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("positive grid") {
        cfg.m0 = 0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
}

TEST_CASE("build_problem maps ids, params and overrides") {
    RunConfig cfg;
    cfg.problem_id = "fisher";
    cfg.problem_params = {{"k", 2.0}, {"c", 4.0}};
    ProblemSpec p = build_problem(cfg);
    CHECK(p.name == "fisher");
    CHECK(p.g(0.5) == doctest::Approx(0.5));  // k u(1-u)
    CHECK(p.params.at("c") == 4.0);

    cfg.bc = "dirichlet:0.25";
    p = build_problem(cfg);
    CHECK(p.bc.face[0][0].kind == FaceBC::Kind::Dirichlet);
    CHECK(p.bc.face[0][0].value == 0.25);

    cfg.bc = "sticky";
    CHECK_THROWS_AS(build_problem(cfg), ConfigError);

    cfg.bc.clear();
    cfg.init = "ring_bump";
    CHECK_THROWS_AS(build_problem(cfg), ConfigError);  // 1D problem

    RunConfig cfg2;
    cfg2.problem_id = "pme_absorption";
    cfg2.init = "ring_bump";
    ProblemSpec q = build_problem(cfg2);
    CHECK(q.init(1.0, 0.0) > q.init(-1.0, 0.0));
}

TEST_CASE("build_run_params wires the scheme choices") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    cfg.phi = 3.5;
    RunParams p = build_run_params(cfg);
    CHECK(p.recon.order == 5);
    CHECK(p.tab.id == "ars222");
    CHECK(p.grad.order == 4);  // 2p rule for the order-2 tableau
    CHECK(p.phi_override == 3.5);
}

TEST_CASE("problem catalog lists all builtin ids") {
    auto cat = problem_catalog();
    REQUIRE(cat.size() == 4);
    RunConfig cfg;
    for (const auto& [id, desc] : cat) {
        cfg.problem_id = id;
        CHECK_NOTHROW(build_problem(cfg));
        CHECK_FALSE(desc.empty());
    }
}

TEST_CASE("run produces the scheduled snapshots and conserves mass") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    cfg.dir = (std::filesystem::temp_directory_path() / "reldiff_cfg_run").string();
    RunResult res = run(cfg);
    CHECK(res.status == "ok");
    REQUIRE(res.snapshots.size() == 3);
    CHECK(res.snapshots[0].first == 0.0);
    CHECK(res.snapshots[2].first == 0.02);
    // g = 0 and periodic BCs: relative drift below 1e-10
    CHECK(std::fabs(res.mass_final - res.mass_initial) <=
          1e-10 * std::fmax(1.0, std::fabs(res.mass_initial)));
    CHECK(std::filesystem::exists(std::filesystem::path(cfg.dir) / "u_000.dat"));
    CHECK(std::filesystem::exists(std::filesystem::path(cfg.dir) / "u_002.dat"));
    CHECK(std::filesystem::exists(std::filesystem::path(cfg.dir) / "series.dat"));
    CHECK(std::filesystem::exists(std::filesystem::path(cfg.dir) / "summary.txt"));
}

TEST_CASE("six output times yield six grid files") {
    RunConfig cfg;
    cfg.problem_id = "fisher";
    cfg.problem_params = {{"c", 10.0}};
    cfg.m0 = 250;
    cfg.reconstruction = "eno3";
    cfg.tableau = "ars222";
    cfg.T = 0.5;
    cfg.times = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    cfg.dir = (std::filesystem::temp_directory_path() / "reldiff_fisher_sched").string();
    RunResult res = run(cfg);
    CHECK(res.snapshots.size() == 6);
    for (int k = 0; k < 6; ++k) {
        char name[16];
        std::snprintf(name, sizeof name, "u_%03d.dat", k);
        CHECK(std::filesystem::exists(std::filesystem::path(cfg.dir) / name));
    }
}

TEST_CASE("identical configs byte-reproduce their outputs") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    auto base = std::filesystem::temp_directory_path();
    cfg.dir = (base / "reldiff_det_a").string();
    run(cfg);
    std::string a_series = slurp(std::filesystem::path(cfg.dir) / "series.dat");
    std::string a_snap = slurp(std::filesystem::path(cfg.dir) / "u_002.dat");
    std::string a_sum = slurp(std::filesystem::path(cfg.dir) / "summary.txt");
    cfg.dir = (base / "reldiff_det_b").string();
    run(cfg);
    CHECK(slurp(std::filesystem::path(cfg.dir) / "series.dat") == a_series);
    CHECK(slurp(std::filesystem::path(cfg.dir) / "u_002.dat") == a_snap);
    CHECK(slurp(std::filesystem::path(cfg.dir) / "summary.txt") == a_sum);
    CHECK_FALSE(a_series.empty());
    CHECK_FALSE(a_snap.empty());
}

TEST_CASE("snapshot files are plot-ready text") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    cfg.dir = (std::filesystem::temp_directory_path() / "reldiff_snap_fmt").string();
    run(cfg);
    std::ifstream in(std::filesystem::path(cfg.dir) / "u_000.dat");
    std::string header;
    std::getline(in, header);
    CHECK(header == "x u");
    double x = 0.0, u = 0.0;
    const bool read_ok = static_cast<bool>(in >> x >> u);
    REQUIRE(read_ok);
    CHECK(x == doctest::Approx(0.025));  // first center of [0,2], m=40
    CHECK(u == doctest::Approx(std::sin(M_PI * 0.025)).epsilon(1e-12));
}

TEST_CASE("convergence study validation") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    cfg.times.clear();
    CHECK_THROWS_AS(convergence_study(cfg, {40, 80}, false), ConfigError);
    CHECK_THROWS_AS(convergence_study(cfg, {40, 80, 80}, false), ConfigError);

    RunConfig nofree = cfg;
    nofree.problem_id = "fisher";
    CHECK_THROWS_AS(convergence_study(nofree, {40, 80, 160}, false), ConfigError);
}

TEST_CASE("convergence study measures second order and beyond") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    cfg.times.clear();
    cfg.T = 0.02;
    ConvergenceResult res = convergence_study(cfg, {25, 50, 100}, false);
    REQUIRE(res.rows.size() == 3);
    CHECK_FALSE(res.exact);
    CHECK(res.rate_l1.back() > 3.0);
    CHECK(res.rows[0].l1 > res.rows[2].l1);
}

TEST_CASE("constant datum reports exact rates") {
    RunConfig cfg = parse_config_text(kHeatCfg);
    cfg.times.clear();
    cfg.problem_params["amplitude"] = 0.0;  // u0 = 0 is preserved exactly
    cfg.dir = (std::filesystem::temp_directory_path() / "reldiff_exact").string();
    ConvergenceResult res = convergence_study(cfg, {10, 20, 40}, true);
    CHECK(res.exact);
    for (const auto& row : res.rows) {
        CHECK(row.l1 == 0.0);
        CHECK(row.linf == 0.0);
    }
    std::string table = slurp(std::filesystem::path(cfg.dir) / "rates.dat");
    CHECK(table.find("exact") != std::string::npos);
}

TEST_CASE("early termination on extinction") {
    RunConfig cfg;
    cfg.problem_id = "pme_absorption";
    cfg.problem_params = {{"m_exp", 2.0}, {"p_exp", 0.5}, {"c_abs", 5.0}};
    cfg.m0 = 24;  // coarse grid keeps this test quick
    cfg.reconstruction = "eno2";
    cfg.tableau = "imex111";
    cfg.phi = 1.5;
    cfg.max_dt = 5e-4;
    cfg.T = 1.0;
    cfg.stop_at_extinction = true;
    cfg.series_stride = 5;
    RunResult res = run(cfg, false);
    REQUIRE(res.t_ext.has_value());
    CHECK(*res.t_ext < 1.0);
    CHECK(res.status.find("extinct at t=") == 0);
}
