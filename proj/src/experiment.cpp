#include "nlgs/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "nlgs/analysis.hpp"
#include "nlgs/extension.hpp"
#include "nlgs/integrate.hpp"

namespace nlgs {

namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------------------
// logging

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("NLGS_LOG");
        if (!env) return 1;
        const std::string v(env);
        if (v == "quiet") return 0;
        if (v == "debug") return 2;
        return 1;
    }();
    return level;
}

template <class... Args>
void log_info(Args&&... args) {
    if (log_level() >= 1) ((std::cerr << "[nlgs] ") << ... << args) << "\n";
}

// ---------------------------------------------------------------------------
// csv helpers

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

void write_profile_csv(const fs::path& path, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    auto out = open_out(path);
    out << "x,u,v\n";
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out << fmt(x[i]) << ',' << fmt(u[i]) << ',' << fmt(v[i]) << '\n';
}

void write_report_csv(const fs::path& path, const ConvergenceReport& report) {
    auto out = open_out(path);
    out << "label,h,dt,error_u,error_v,order_u,order_v\n";
    for (const auto& r : report.rows) {
        out << r.label << ',' << fmt(r.h) << ',' << fmt(r.dt) << ',' << fmt(r.error_u)
            << ',' << fmt(r.error_v) << ',';
        if (r.order_u) out << fmt(*r.order_u);
        out << ',';
        if (r.order_v) out << fmt(*r.order_v);
        out << '\n';
    }
}

void emit_profile_plot_script(const fs::path& dir) {
    auto out = open_out(dir / "plot.gnu");
    out << "# gnuplot script for the profile written next to it\n"
           "set datafile separator comma\n"
           "set terminal pngcairo size 1200,500\n"
           "set output 'profile.png'\n"
           "set multiplot layout 1,2\n"
           "set xlabel 'x'\n"
           "set key top right\n"
           "plot 'profile.csv' using 1:2 skip 1 with lines title 'u', \\\n"
           "     'profile.csv' using 1:3 skip 1 with lines title 'v'\n"
           "set title 'v (zoom)'\n"
           "plot 'profile.csv' using 1:3 skip 1 with lines title 'v'\n"
           "unset multiplot\n";
}

void emit_report_plot_script(const fs::path& dir) {
    auto out = open_out(dir / "plot.gnu");
    out << "# gnuplot script for the convergence report written next to it\n"
           "set datafile separator comma\n"
           "set terminal pngcairo size 800,600\n"
           "set output 'report.png'\n"
           "set logscale xy\n"
           "set xlabel 'h'\n"
           "set ylabel 'error'\n"
           "plot 'report.csv' using 2:4 skip 1 with linespoints title 'u', \\\n"
           "     'report.csv' using 2:5 skip 1 with linespoints title 'v'\n";
}

// ---------------------------------------------------------------------------
// simulation plumbing

SystemState make_initial(const RunConfig& cfg, const Eigen::VectorXd& nodes) {
    if (cfg.initial.type == InitialConfig::Type::pulse)
        return pulse_initial_conditions(nodes, cfg.initial.alpha, cfg.initial.beta);
    SystemState s;
    s.u = Eigen::VectorXd::Constant(nodes.size(), cfg.initial.u);
    s.v = Eigen::VectorXd::Constant(nodes.size(), cfg.initial.v);
    s.t = 0.0;
    return s;
}

struct HistoryWriter {
    std::ofstream out;
    long every = 1;

    HistoryWriter(const fs::path& path, long every) : out(open_out(path)), every(every) {
        out << "step,t,max_update\n";
    }
    void record(long step, double t, double err) {
        if (every > 0 && step % every == 0)
            out << step << ',' << fmt(t) << ',' << fmt(err) << '\n';
    }
};

}  // namespace

RunResult simulate_into(const RunConfig& cfg, const std::string& dir) {
    fs::create_directories(dir);
    const fs::path out_dir(dir);

    StepperConfig stepcfg = cfg.stepper;
    stepcfg.checkpoint_every = cfg.output.checkpoint_every;

    HistoryWriter history(out_dir / "history.csv", cfg.output.history_every);

    RunResult result;
    const GrayScottParams params = effective_params(cfg);
    if (cfg.solver == SolverKind::spectral) {
        const Kernel kernel = cfg.kernel.make();
        SpectralOperator op(kernel, cfg.grid.M, cfg.grid.L);
        const Eigen::VectorXd nodes = op.nodes();
        SystemState initial = make_initial(cfg, nodes);

        auto observer = [&](long step, double t, double err, const SystemState& s) {
            history.record(step, t, err);
            if (stepcfg.checkpoint_every > 0 && step % stepcfg.checkpoint_every == 0) {
                write_profile_csv(out_dir / "checkpoint.csv", nodes, s.u, s.v);
                log_info("step ", step, "  t=", t, "  max_update=", err);
            }
        };
        result = run_periodic(initial, stepcfg, params, op, cfg.spectral_scheme,
                              observer);
        write_profile_csv(out_dir / "profile.csv", nodes, result.final_state.u,
                          result.final_state.v);
    } else {
        const Kernel kernel = cfg.kernel.make();
        const Grid grid = Grid::from_half_width(cfg.grid.L, cfg.grid.M);
        const Eigen::VectorXd nodes = grid.nodes();

        const DiscreteOperator op_u = assemble(kernel, grid, cfg.bc_u.make(grid.L));
        const DiscreteOperator op_v = assemble(kernel, grid, cfg.bc_v.make(grid.L));
        SystemState initial = make_initial(cfg, nodes);

        const bool neumann = cfg.bc_u.type == BcConfig::Type::neumann;
        stepcfg.mode = neumann ? StepperMode::neumann : StepperMode::dirichlet_free;

        if (neumann) {
            NeumannExtension ext_u(op_u), ext_v(op_v);
            const int ib = ext_u.inner_begin();
            const int ic = ext_u.inner_count();
            const int n = grid.node_count();

            RhsFn rhsfn = [&](const SystemState& s) {
                Derivatives d;
                d.du.setZero(n);
                d.dv.setZero(n);
                Derivatives inner = rhs_rows(s, params, op_u, op_v, ib, ic);
                d.du.segment(ib, ic) = inner.du;
                d.dv.segment(ib, ic) = inner.dv;
                return d;
            };
            ExtendFn extfn = [&](SystemState& s) {
                ext_u.extend_in_place(s.u);
                ext_v.extend_in_place(s.v);
            };
            const std::pair<int, int> inner_range{ib, ic};

            auto observer = [&](long step, double t, double err, const SystemState& st) {
                history.record(step, t, err);
                if (stepcfg.checkpoint_every > 0 && step % stepcfg.checkpoint_every == 0) {
                    write_profile_csv(out_dir / "checkpoint.csv", nodes, st.u, st.v);
                    log_info("step ", step, "  t=", t, "  max_update=", err);
                }
            };
            result = run(std::move(initial), stepcfg, rhsfn, &extfn, &inner_range,
                         observer);
        } else {
            RhsFn rhsfn = [&](const SystemState& s) {
                return rhs(s, params, op_u, op_v);
            };
            auto observer = [&](long step, double t, double err, const SystemState& st) {
                history.record(step, t, err);
                if (stepcfg.checkpoint_every > 0 && step % stepcfg.checkpoint_every == 0) {
                    write_profile_csv(out_dir / "checkpoint.csv", nodes, st.u, st.v);
                    log_info("step ", step, "  t=", t, "  max_update=", err);
                }
            };
            result = run(std::move(initial), stepcfg, rhsfn, nullptr, nullptr, observer);
        }
        write_profile_csv(out_dir / "profile.csv", nodes, result.final_state.u,
                          result.final_state.v);
    }

    if (cfg.output.emit_plot_script) emit_profile_plot_script(out_dir);
    log_info("finished after ", result.steps, " steps (",
             result.reason == StopReason::steady ? "steady" : "nmax", ")");
    return result;
}

namespace {

void run_mms(const RunConfig& cfg) {
    const auto is_homogeneous_dirichlet = [](const BcConfig& bc) {
        return bc.type == BcConfig::Type::dirichlet && bc.value == 0.0;
    };
    if (!is_homogeneous_dirichlet(cfg.bc_u) || !is_homogeneous_dirichlet(cfg.bc_v))
        throw ConfigError(
            "mms: the manufactured case requires homogeneous Dirichlet constraints");

    const fs::path out_dir(cfg.output.dir);
    fs::create_directories(out_dir);
    const Kernel kernel = cfg.kernel.make();
    const ManufacturedCase mcase = ManufacturedCase::cosine_case();

    ConvergenceReport report;
    report.norm_p = 2;
    report.reference = "exact";

    for (int label : cfg.mms.labels) {
        const double h = cfg.grid.L / label;
        const Grid grid = Grid::from_mesh(h, 2 * label);
        const double dt = cfg.mms.dt_over_h * h;
        const long nmax = std::lround(cfg.mms.T / dt);

        const DiscreteOperator op_u = assemble(kernel, grid, cfg.bc_u.make(grid.L));
        const DiscreteOperator op_v = assemble(kernel, grid, cfg.bc_v.make(grid.L));
        const ManufacturedSources sources(mcase, grid, kernel, effective_params(cfg));

        StepperConfig stepcfg;
        stepcfg.dt = dt;
        stepcfg.nmax = nmax;
        stepcfg.tol = -1.0;
        stepcfg.checkpoint_every = 0;

        const GrayScottParams params = effective_params(cfg);
        RhsFn rhsfn = [&](const SystemState& s) {
            return rhs(s, params, op_u, op_v, &sources);
        };
        const RunResult res = run(sources.exact_state(0.0), stepcfg, rhsfn);

        const SystemState exact = sources.exact_state(res.final_state.t);
        ConvergenceRow row;
        row.label = label;
        row.h = h;
        row.dt = dt;
        row.error_u = lp_error(res.final_state.u, exact.u, 2, h);
        row.error_v = lp_error(res.final_state.v, exact.v, 2, h);
        report.rows.push_back(row);
        log_info("mms label ", label, ": error_u=", row.error_u,
                 " error_v=", row.error_v);
    }
    report.compute_orders();
    write_report_csv(out_dir / "report.csv", report);
    if (cfg.output.emit_plot_script) emit_report_plot_script(out_dir);
}

void run_pulse_convergence(const RunConfig& cfg) {
    const fs::path out_dir(cfg.output.dir);
    fs::create_directories(out_dir);

    std::vector<int> levels = cfg.convergence.m_list;
    levels.push_back(cfg.convergence.reference_m);

    std::vector<SystemState> finals;
    std::vector<Grid> grids;
    for (size_t i = 0; i < levels.size(); ++i) {
        RunConfig leg = cfg;
        leg.experiment = ExperimentKind::simulate;
        leg.grid.M = levels[i];
        leg.stepper.dt = cfg.convergence.dt_list[i];
        if (cfg.stepper.tol < 0.0)
            leg.stepper.nmax = std::lround(cfg.convergence.horizon / leg.stepper.dt);
        leg.output.dir = (out_dir / ("level_" + std::to_string(levels[i]))).string();
        log_info("convergence level M=", levels[i], " dt=", leg.stepper.dt,
                 " nmax=", leg.stepper.nmax);
        const RunResult res = simulate_into(leg, leg.output.dir);
        finals.push_back(res.final_state);
        grids.push_back(Grid::from_half_width(leg.grid.L, leg.grid.M));
    }

    const bool neumann = cfg.bc_u.type == BcConfig::Type::neumann;
    const Grid& ref_grid = grids.back();
    const SystemState& ref = finals.back();

    ConvergenceReport report;
    report.norm_p = cfg.convergence.norm_p;
    report.reference = "finest-mesh";
    for (size_t i = 0; i + 1 < finals.size(); ++i) {
        const Grid& g = grids[i];
        Eigen::VectorXd ru = restrict_to_coarse(ref.u, ref_grid, g);
        Eigen::VectorXd rv = restrict_to_coarse(ref.v, ref_grid, g);
        Eigen::VectorXd du = finals[i].u, dv = finals[i].v;
        if (neumann) {
            // error over the physical (inner) domain only
            const int ib = g.M / 4, ic = g.M / 2 + 1;
            ru = ru.segment(ib, ic).eval();
            rv = rv.segment(ib, ic).eval();
            du = du.segment(ib, ic).eval();
            dv = dv.segment(ib, ic).eval();
        }
        ConvergenceRow row;
        row.label = g.M;
        row.h = g.h;
        row.dt = cfg.convergence.dt_list[i];
        row.error_u = lp_error(du, ru, report.norm_p, g.h);
        row.error_v = lp_error(dv, rv, report.norm_p, g.h);
        report.rows.push_back(row);
        log_info("level M=", g.M, ": error_u=", row.error_u, " error_v=", row.error_v);
    }
    report.compute_orders();
    write_report_csv(out_dir / "report.csv", report);
    if (cfg.output.emit_plot_script) emit_report_plot_script(out_dir);
}

void run_compare(const RunConfig& cfg) {
    const fs::path out_dir(cfg.output.dir);
    fs::create_directories(out_dir);

    auto metrics_out = open_out(out_dir / "metrics.csv");
    metrics_out << "leg,max_value,max_location,plateau_width,boundary_value,"
                   "oscillation_count,steps,reason\n";
    for (const auto& leg : cfg.compare_legs) {
        RunConfig leg_cfg = *leg.config;
        leg_cfg.output.dir = (out_dir / "legs" / leg.name).string();
        const RunResult res = simulate_into(leg_cfg, leg_cfg.output.dir);
        Eigen::VectorXd nodes;
        if (leg_cfg.solver == SolverKind::spectral) {
            nodes = SpectralOperator(leg_cfg.kernel.make(), leg_cfg.grid.M,
                                     leg_cfg.grid.L).nodes();
        } else {
            nodes = Grid::from_half_width(leg_cfg.grid.L, leg_cfg.grid.M).nodes();
        }
        const ProfileMetrics m = profile_metrics(res.final_state.v, nodes, 0.95);
        metrics_out << leg.name << ',' << fmt(m.max_value) << ',' << fmt(m.max_location)
                    << ',' << fmt(m.plateau_width) << ',' << fmt(m.boundary_value) << ','
                    << m.oscillation_count << ',' << res.steps << ','
                    << (res.reason == StopReason::steady ? "steady" : "nmax") << '\n';
    }
}

void run_determinant(const RunConfig& cfg) {
    const fs::path out_dir(cfg.output.dir);
    fs::create_directories(out_dir);

    std::ifstream in(cfg.determinant.profile_csv);
    if (!in)
        throw ConfigError("determinant: cannot open profile '" +
                          cfg.determinant.profile_csv + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("x,u,v", 0) != 0)
        throw ConfigError("determinant: profile file must start with an x,u,v header");

    std::vector<double> xs, us, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x, u, v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &u, &v) != 3)
            throw ConfigError("determinant: malformed profile row '" + line + "'");
        xs.push_back(x);
        us.push_back(u);
        vs.push_back(v);
    }

    SystemState s;
    s.u = Eigen::Map<Eigen::VectorXd>(us.data(), static_cast<Eigen::Index>(us.size()));
    s.v = Eigen::Map<Eigen::VectorXd>(vs.data(), static_cast<Eigen::Index>(vs.size()));
    const Eigen::VectorXd det = quasilinear_det(s, cfg.determinant.epsilon, cfg.params);

    auto out = open_out(out_dir / "det.csv");
    out << "x,det\n";
    for (size_t i = 0; i < xs.size(); ++i)
        out << fmt(xs[i]) << ',' << fmt(det[static_cast<Eigen::Index>(i)]) << '\n';
    int imin = 0;
    const double dmin = det.minCoeff(&imin);
    log_info("determinant: min ", dmin, " at x = ", xs[static_cast<size_t>(imin)]);
}

}  // namespace

void run_experiment(const RunConfig& cfg) {
    cfg.validate();
    switch (cfg.experiment) {
        case ExperimentKind::simulate:
            simulate_into(cfg, cfg.output.dir);
            return;
        case ExperimentKind::mms:
            run_mms(cfg);
            return;
        case ExperimentKind::pulse_convergence:
            run_pulse_convergence(cfg);
            return;
        case ExperimentKind::compare:
            run_compare(cfg);
            return;
        case ExperimentKind::determinant:
            run_determinant(cfg);
            return;
    }
    throw ConfigError("unknown experiment kind");
}

// ---------------------------------------------------------------------------
// --seed-check

namespace {

struct CheckRunner {
    std::ostream& out;
    int failures = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        out << (ok ? "[ ok ] " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) out << " (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
};

}  // namespace

int seed_check(std::ostream& out) {
    CheckRunner checks{out};

    checks.run("kernel density is even and positive", [] {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> dist(-50.0, 50.0);
        const Kernel kernels[] = {Kernel::exponential(3.4), Kernel::algebraic(0.42)};
        for (const Kernel& k : kernels)
            for (int i = 0; i < 1000; ++i) {
                const double z = dist(rng);
                if (k.density(z) != k.density(-z) || !(k.density(z) > 0.0)) return false;
            }
        return true;
    });

    checks.run("kernel normalization (quadrature + tail mass)", [] {
        for (const Kernel& k : {Kernel::exponential(4.0), Kernel::algebraic(1.0)}) {
            for (double R : {1.0, 10.0, 100.0}) {
                const double inner =
                    integrate([&](double z) { return k.density(z); }, -R, R);
                if (std::abs(inner + k.tail_mass(R) - 1.0) > 1e-10) return false;
            }
        }
        return true;
    });

    checks.run("antiderivative second difference reproduces density", [] {
        for (const Kernel& k : {Kernel::exponential(1.0), Kernel::algebraic(0.5)}) {
            const double z = 0.9, d = 1e-4;
            const double second =
                (k.antiderivatives(z + d).F - 2.0 * k.antiderivatives(z).F +
                 k.antiderivatives(z - d).F) / (d * d);
            if (std::abs(second - k.density(z)) > 1e-5) return false;
        }
        return true;
    });

    checks.run("weights: w_0 = 0 and w_j = w_{-j}", [] {
        const Grid grid = Grid::from_half_width(1.0, 32);
        const WeightSet ws = compute_weights(Kernel::exponential(2.0), grid);
        if (ws.at(0) != 0.0) return false;
        for (int j = 1; j <= grid.M; ++j)
            if (ws.at(j) != ws.at(-j)) return false;
        return true;
    });

    checks.run("Dirichlet operator annihilates matching constants", [] {
        const Grid grid = Grid::from_half_width(1.0, 64);
        const auto op = assemble(Kernel::exponential(4.0), grid,
                                 BoundaryConstraint{Dirichlet::constant(2.5)});
        const Eigen::VectorXd u = Eigen::VectorXd::Constant(grid.node_count(), 2.5);
        return op.apply(u).cwiseAbs().maxCoeff() <= 1e-12;
    });

    checks.run("free operator preserves the far-field constant", [] {
        const Grid grid = Grid::from_half_width(1.0, 64);
        const auto op = assemble(Kernel::algebraic(0.42), grid,
                                 BoundaryConstraint{Free{2.0, 1.0}});
        const Eigen::VectorXd u = Eigen::VectorXd::Ones(grid.node_count());
        return op.apply(u).cwiseAbs().maxCoeff() <= 1e-12;
    });

    checks.run("Neumann extension of a matching constant", [] {
        const Grid grid = Grid::from_half_width(1.0, 64);
        const auto op = assemble(Kernel::exponential(4.0), grid,
                                 BoundaryConstraint{Neumann{0.5, 2.0, 0.7}});
        const NeumannExtension ext(op);
        const Eigen::VectorXd inner =
            Eigen::VectorXd::Constant(ext.inner_count(), 0.7);
        const Eigen::VectorXd full = ext.extend(inner);
        return (full.array() - 0.7).abs().maxCoeff() <= 1e-12;
    });

    checks.run("(1, 0) is a fixed point of the reaction-diffusion system", [] {
        const Grid grid = Grid::from_half_width(1.0, 32);
        const Kernel k = Kernel::exponential(4.0);
        const auto op_u =
            assemble(k, grid, BoundaryConstraint{Dirichlet::constant(1.0)});
        const auto op_v =
            assemble(k, grid, BoundaryConstraint{Dirichlet::constant(0.0)});
        SystemState s;
        s.u = Eigen::VectorXd::Ones(grid.node_count());
        s.v = Eigen::VectorXd::Zero(grid.node_count());
        const GrayScottParams p{1.0, 0.01, 0.01, std::cbrt(0.01) / 2.0};
        const Derivatives d = rhs(s, p, op_u, op_v);
        return d.du.cwiseAbs().maxCoeff() <= 1e-12 &&
               d.dv.cwiseAbs().maxCoeff() <= 1e-12;
    });

    checks.run("Fourier symbol: symbol(0) = 0 and spot values", [] {
        const Kernel ke = Kernel::exponential(2.0);
        const Kernel ka = Kernel::algebraic(1.0);
        if (symbol(ke, 0.0) != 0.0 || symbol(ka, 0.0) != 0.0) return false;
        if (std::abs(symbol(ke, 2.0) - (-0.5)) > 1e-15) return false;
        return std::abs(symbol(ka, 1.0) - (2.0 * std::exp(-1.0) - 1.0)) < 1e-15;
    });

    checks.run("AB2 converges at second order on u' = -u", [] {
        auto solve = [](double dt, long n) {
            double prev = 1.0, cur = 1.0 - dt * 1.0;  // Euler trial step
            for (long i = 1; i < n; ++i) {
                const double next = cur + dt * (1.5 * -cur - 0.5 * -prev);
                prev = cur;
                cur = next;
            }
            return cur;
        };
        const double exact = std::exp(-1.0);
        const double e1 = std::abs(solve(0.01, 100) - exact);
        const double e2 = std::abs(solve(0.005, 200) - exact);
        return e1 < 1e-4 && e1 / e2 > 3.0 && e1 / e2 < 5.0;
    });

    return checks.failures;
}

}  // namespace nlgs
