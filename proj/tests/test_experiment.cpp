#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nlgs/experiment.hpp"

using namespace nlgs;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("nlgs_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("simulate writes profile and history") {
    const fs::path dir = temp_dir("simulate");
    RunConfig cfg = preset("pulse-exp-free", true);
    cfg.grid.M = 128;
    cfg.stepper.nmax = 40;
    cfg.output.dir = dir.string();
    cfg.output.checkpoint_every = 25;
    run_experiment(cfg);

    const std::string profile = slurp(dir / "profile.csv");
    CHECK(profile.rfind("x,u,v\n", 0) == 0);
    CHECK(count_lines(profile) == 129 + 1);  // header + N rows

    const std::string history = slurp(dir / "history.csv");
    CHECK(history.rfind("step,t,max_update\n", 0) == 0);
    CHECK(fs::exists(dir / "checkpoint.csv"));
}

TEST_CASE("csv output is byte-identical across runs") {
    const fs::path d1 = temp_dir("det_a"), d2 = temp_dir("det_b");
    RunConfig cfg = preset("pulse-alg-free", true);
    cfg.grid.M = 64;
    cfg.stepper.nmax = 25;
    for (const fs::path& d : {d1, d2}) {
        cfg.output.dir = d.string();
        run_experiment(cfg);
    }
    CHECK(slurp(d1 / "profile.csv") == slurp(d2 / "profile.csv"));
    CHECK(slurp(d1 / "history.csv") == slurp(d2 / "history.csv"));
}

TEST_CASE("mms emits a report with second-order entries") {
    const fs::path dir = temp_dir("mms");
    RunConfig cfg = preset("table1-mms", true);
    cfg.mms.labels = {20, 40};
    cfg.output.dir = dir.string();
    cfg.output.emit_plot_script = true;
    run_experiment(cfg);
    const std::string report = slurp(dir / "report.csv");
    CHECK(report.rfind("label,h,dt,error_u,error_v,order_u,order_v\n", 0) == 0);
    CHECK(count_lines(report) == 3);
    CHECK(fs::exists(dir / "plot.gnu"));
}

TEST_CASE("determinant experiment reads a stored profile") {
    const fs::path dir = temp_dir("detsrc");
    RunConfig sim = preset("pulse-exp-free", true);
    sim.grid.M = 64;
    sim.stepper.nmax = 10;
    sim.output.dir = dir.string();
    run_experiment(sim);

    RunConfig det;
    det.experiment = ExperimentKind::determinant;
    det.params = GrayScottParams{1.0, 0.01, 0.01, 0.1077};
    det.determinant.profile_csv = (dir / "profile.csv").string();
    det.determinant.epsilon = 1.0 / 3.4;
    det.output.dir = (dir / "det").string();
    run_experiment(det);

    const std::string out = slurp(dir / "det" / "det.csv");
    CHECK(out.rfind("x,det\n", 0) == 0);
    CHECK(count_lines(out) == 65 + 1);
}

TEST_CASE("divergence keeps the last checkpoint and raises") {
    const fs::path dir = temp_dir("diverge");
    RunConfig cfg = preset("pulse-exp-free", true);
    cfg.grid.M = 128;
    cfg.stepper.dt = 5.0;  // far beyond the stability bound
    cfg.stepper.nmax = 5000;
    cfg.output.dir = dir.string();
    cfg.output.checkpoint_every = 1;
    CHECK_THROWS_AS(run_experiment(cfg), DivergenceError);
    CHECK(fs::exists(dir / "checkpoint.csv"));
}

TEST_CASE("compare runs legs and collects metrics") {
    const fs::path dir = temp_dir("compare");
    RunConfig cfg = preset("domain-size-compare", true);
    for (auto& leg : cfg.compare_legs) {
        leg.config->grid.M = leg.config->grid.L > 20.0 ? 172 : 128;
        leg.config->stepper.nmax = 20;
    }
    cfg.output.dir = dir.string();
    run_experiment(cfg);
    const std::string metrics = slurp(dir / "metrics.csv");
    CHECK(count_lines(metrics) == 3);
    CHECK(fs::exists(dir / "legs" / "L75over4" / "profile.csv"));
    CHECK(fs::exists(dir / "legs" / "L25" / "profile.csv"));
}

TEST_CASE("seed check passes") {
    std::ostringstream out;
    CHECK(seed_check(out) == 0);
    CHECK(out.str().find("[FAIL]") == std::string::npos);
}

}  // TEST_SUITE
