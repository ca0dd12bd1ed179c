#include "nlgs/config.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace nlgs {

using nlohmann::json;

BoundaryConstraint BcConfig::make(double L) const {
    switch (type) {
        case Type::dirichlet:
            return BoundaryConstraint{Dirichlet::constant(value)};
        case Type::free_decay:
            return BoundaryConstraint{Free{q, u_ref}};
        case Type::neumann:
            return BoundaryConstraint{Neumann{L / 2.0, q, u_ref}};
        case Type::periodic:
            break;
    }
    throw ConfigError("periodic constraints have no quadrature-operator form");
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigError("config: at " + path + ": " + msg);
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known) fail(path, "unknown key '" + item.key() + "'");
    }
}

template <class T>
T req(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) fail(path, "missing required key '" + std::string(key) + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(path + "." + key, e.what());
    }
}

template <class T>
T opt(const json& j, const std::string& path, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(path + "." + key, e.what());
    }
}

KernelConfig parse_kernel(const json& j, const std::string& path) {
    check_keys(j, path, {"family", "sigma", "a"});
    KernelConfig k;
    const auto family = req<std::string>(j, path, "family");
    if (family == "exponential") {
        k.family = Kernel::Family::exponential;
        k.shape = req<double>(j, path, "sigma");
        if (j.contains("a")) fail(path, "'a' is not a parameter of the exponential family");
    } else if (family == "algebraic") {
        k.family = Kernel::Family::algebraic;
        k.shape = req<double>(j, path, "a");
        if (j.contains("sigma")) fail(path, "'sigma' is not a parameter of the algebraic family");
    } else {
        fail(path + ".family", "expected 'exponential' or 'algebraic'");
    }
    return k;
}

BcConfig parse_bc(const json& j, const std::string& path) {
    BcConfig bc;
    const auto type = req<std::string>(j, path, "type");
    if (type == "dirichlet") {
        check_keys(j, path, {"type", "value"});
        bc.type = BcConfig::Type::dirichlet;
        bc.value = opt<double>(j, path, "value", 0.0);
    } else if (type == "free") {
        check_keys(j, path, {"type", "q", "u_ref"});
        bc.type = BcConfig::Type::free_decay;
        bc.q = opt<double>(j, path, "q", 2.0);
        bc.u_ref = opt<double>(j, path, "u_ref", 0.0);
    } else if (type == "neumann") {
        check_keys(j, path, {"type", "q", "u_ref"});
        bc.type = BcConfig::Type::neumann;
        bc.q = opt<double>(j, path, "q", 2.0);
        bc.u_ref = opt<double>(j, path, "u_ref", 0.0);
    } else if (type == "periodic") {
        check_keys(j, path, {"type"});
        bc.type = BcConfig::Type::periodic;
    } else {
        fail(path + ".type", "expected dirichlet|free|neumann|periodic");
    }
    return bc;
}

RunConfig parse_object(const json& j, const std::string& path);

json bc_to_json(const BcConfig& bc) {
    switch (bc.type) {
        case BcConfig::Type::dirichlet:
            return {{"type", "dirichlet"}, {"value", bc.value}};
        case BcConfig::Type::free_decay:
            return {{"type", "free"}, {"q", bc.q}, {"u_ref", bc.u_ref}};
        case BcConfig::Type::neumann:
            return {{"type", "neumann"}, {"q", bc.q}, {"u_ref", bc.u_ref}};
        case BcConfig::Type::periodic:
            return {{"type", "periodic"}};
    }
    throw ConfigError("unreachable");
}

json to_json_object(const RunConfig& c) {
    json j;
    switch (c.experiment) {
        case ExperimentKind::simulate: j["experiment"] = "simulate"; break;
        case ExperimentKind::mms: j["experiment"] = "mms"; break;
        case ExperimentKind::pulse_convergence: j["experiment"] = "pulse-convergence"; break;
        case ExperimentKind::compare: j["experiment"] = "compare"; break;
        case ExperimentKind::determinant: j["experiment"] = "determinant"; break;
    }

    json k;
    if (c.kernel.family == Kernel::Family::exponential) {
        k = {{"family", "exponential"}, {"sigma", c.kernel.shape}};
    } else {
        k = {{"family", "algebraic"}, {"a", c.kernel.shape}};
    }
    j["kernel"] = k;
    j["grid"] = {{"L", c.grid.L}, {"M", c.grid.M}};
    j["params"] = {{"d_u", c.params.d_u}, {"d_v", c.params.d_v},
                   {"A", c.params.A}, {"B", c.params.B},
                   {"calibrate_diffusivity", c.calibrate_diffusivity}};
    j["bc"] = {{"u", bc_to_json(c.bc_u)}, {"v", bc_to_json(c.bc_v)}};
    if (c.initial.type == InitialConfig::Type::pulse) {
        j["initial"] = {{"type", "pulse"}, {"alpha", c.initial.alpha},
                        {"beta", c.initial.beta}};
    } else {
        j["initial"] = {{"type", "homogeneous"}, {"u", c.initial.u}, {"v", c.initial.v}};
    }
    j["stepper"] = {{"dt", c.stepper.dt}, {"nmax", c.stepper.nmax}, {"tol", c.stepper.tol}};
    j["solver"] = c.solver == SolverKind::quadrature ? "quadrature" : "spectral";
    if (c.solver == SolverKind::spectral)
        j["spectral_scheme"] =
            c.spectral_scheme == SpectralScheme::imex_bdf2 ? "imex-bdf2" : "ab2-fourier";
    j["output"] = {{"dir", c.output.dir},
                   {"checkpoint_every", c.output.checkpoint_every},
                   {"history_every", c.output.history_every},
                   {"emit_plot_script", c.output.emit_plot_script}};

    if (c.experiment == ExperimentKind::mms)
        j["mms"] = {{"labels", c.mms.labels}, {"T", c.mms.T},
                    {"dt_over_h", c.mms.dt_over_h}};
    if (c.experiment == ExperimentKind::pulse_convergence)
        j["convergence"] = {{"m_list", c.convergence.m_list},
                            {"reference_m", c.convergence.reference_m},
                            {"dt_list", c.convergence.dt_list},
                            {"horizon", c.convergence.horizon},
                            {"norm", c.convergence.norm_p == 1 ? "l1" : "l2"}};
    if (c.experiment == ExperimentKind::determinant)
        j["determinant"] = {{"profile", c.determinant.profile_csv},
                            {"epsilon", c.determinant.epsilon}};
    if (c.experiment == ExperimentKind::compare) {
        json legs = json::array();
        for (const auto& leg : c.compare_legs)
            legs.push_back({{"name", leg.name}, {"config", to_json_object(*leg.config)}});
        j["compare"] = {{"legs", legs}};
    }
    return j;
}

RunConfig parse_object(const json& j, const std::string& path) {
    check_keys(j, path,
               {"experiment", "kernel", "grid", "params", "bc", "initial", "stepper",
                "solver", "spectral_scheme", "output", "mms", "convergence", "compare",
                "determinant"});
    RunConfig c;

    const auto kind = opt<std::string>(j, path, "experiment", "simulate");
    if (kind == "simulate") c.experiment = ExperimentKind::simulate;
    else if (kind == "mms") c.experiment = ExperimentKind::mms;
    else if (kind == "pulse-convergence") c.experiment = ExperimentKind::pulse_convergence;
    else if (kind == "compare") c.experiment = ExperimentKind::compare;
    else if (kind == "determinant") c.experiment = ExperimentKind::determinant;
    else fail(path + ".experiment",
              "expected simulate|mms|pulse-convergence|compare|determinant");

    if (j.contains("kernel")) c.kernel = parse_kernel(j.at("kernel"), path + ".kernel");

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        check_keys(g, path + ".grid", {"L", "M"});
        c.grid.L = req<double>(g, path + ".grid", "L");
        c.grid.M = req<int>(g, path + ".grid", "M");
    }

    if (j.contains("params")) {
        const auto& p = j.at("params");
        check_keys(p, path + ".params",
                   {"d_u", "d_v", "A", "B", "calibrate_diffusivity"});
        c.params.d_u = req<double>(p, path + ".params", "d_u");
        c.params.d_v = req<double>(p, path + ".params", "d_v");
        c.params.A = req<double>(p, path + ".params", "A");
        c.params.B = req<double>(p, path + ".params", "B");
        c.calibrate_diffusivity =
            opt<bool>(p, path + ".params", "calibrate_diffusivity", false);
    }

    if (j.contains("bc")) {
        const auto& b = j.at("bc");
        check_keys(b, path + ".bc", {"u", "v"});
        if (b.contains("u")) c.bc_u = parse_bc(b.at("u"), path + ".bc.u");
        if (b.contains("v")) c.bc_v = parse_bc(b.at("v"), path + ".bc.v");
    }

    if (j.contains("initial")) {
        const auto& ic = j.at("initial");
        const auto t = req<std::string>(ic, path + ".initial", "type");
        if (t == "pulse") {
            check_keys(ic, path + ".initial", {"type", "alpha", "beta"});
            c.initial.type = InitialConfig::Type::pulse;
            c.initial.alpha = opt<double>(ic, path + ".initial", "alpha", 0.1);
            c.initial.beta = opt<double>(ic, path + ".initial", "beta", 3.0);
        } else if (t == "homogeneous") {
            check_keys(ic, path + ".initial", {"type", "u", "v"});
            c.initial.type = InitialConfig::Type::homogeneous;
            c.initial.u = opt<double>(ic, path + ".initial", "u", 1.0);
            c.initial.v = opt<double>(ic, path + ".initial", "v", 0.0);
        } else {
            fail(path + ".initial.type", "expected pulse|homogeneous");
        }
    }

    if (j.contains("stepper")) {
        const auto& s = j.at("stepper");
        check_keys(s, path + ".stepper", {"dt", "nmax", "tol"});
        c.stepper.dt = req<double>(s, path + ".stepper", "dt");
        c.stepper.nmax = req<long>(s, path + ".stepper", "nmax");
        c.stepper.tol = opt<double>(s, path + ".stepper", "tol", -1.0);
    }

    const auto solver = opt<std::string>(j, path, "solver", "quadrature");
    if (solver == "quadrature") c.solver = SolverKind::quadrature;
    else if (solver == "spectral") c.solver = SolverKind::spectral;
    else fail(path + ".solver", "expected quadrature|spectral");

    const auto scheme = opt<std::string>(j, path, "spectral_scheme", "imex-bdf2");
    if (scheme == "imex-bdf2") c.spectral_scheme = SpectralScheme::imex_bdf2;
    else if (scheme == "ab2-fourier") c.spectral_scheme = SpectralScheme::ab2_fourier;
    else fail(path + ".spectral_scheme", "expected imex-bdf2|ab2-fourier");

    if (j.contains("output")) {
        const auto& o = j.at("output");
        check_keys(o, path + ".output",
                   {"dir", "checkpoint_every", "history_every", "emit_plot_script"});
        c.output.dir = opt<std::string>(o, path + ".output", "dir", "out");
        c.output.checkpoint_every =
            opt<long>(o, path + ".output", "checkpoint_every", 1000);
        c.output.history_every = opt<long>(o, path + ".output", "history_every", 1);
        c.output.emit_plot_script =
            opt<bool>(o, path + ".output", "emit_plot_script", false);
    }

    if (j.contains("mms")) {
        const auto& m = j.at("mms");
        check_keys(m, path + ".mms", {"labels", "T", "dt_over_h"});
        c.mms.labels = req<std::vector<int>>(m, path + ".mms", "labels");
        c.mms.T = opt<double>(m, path + ".mms", "T", 1.0);
        c.mms.dt_over_h = opt<double>(m, path + ".mms", "dt_over_h", 2.0);
    }

    if (j.contains("convergence")) {
        const auto& v = j.at("convergence");
        check_keys(v, path + ".convergence",
                   {"m_list", "reference_m", "dt_list", "horizon", "norm"});
        c.convergence.m_list = req<std::vector<int>>(v, path + ".convergence", "m_list");
        c.convergence.reference_m = req<int>(v, path + ".convergence", "reference_m");
        c.convergence.dt_list =
            req<std::vector<double>>(v, path + ".convergence", "dt_list");
        c.convergence.horizon = opt<double>(v, path + ".convergence", "horizon", 0.0);
        const auto norm = opt<std::string>(v, path + ".convergence", "norm", "l1");
        if (norm == "l1") c.convergence.norm_p = 1;
        else if (norm == "l2") c.convergence.norm_p = 2;
        else fail(path + ".convergence.norm", "expected l1|l2");
    }

    if (j.contains("determinant")) {
        const auto& d = j.at("determinant");
        check_keys(d, path + ".determinant", {"profile", "epsilon"});
        c.determinant.profile_csv = req<std::string>(d, path + ".determinant", "profile");
        c.determinant.epsilon = req<double>(d, path + ".determinant", "epsilon");
    }

    if (j.contains("compare")) {
        const auto& cmp = j.at("compare");
        check_keys(cmp, path + ".compare", {"legs"});
        if (!cmp.contains("legs") || !cmp.at("legs").is_array())
            fail(path + ".compare", "expected a 'legs' array");
        int idx = 0;
        for (const auto& leg : cmp.at("legs")) {
            const std::string lp = path + ".compare.legs[" + std::to_string(idx) + "]";
            check_keys(leg, lp, {"name", "config"});
            CompareLeg cl;
            cl.name = req<std::string>(leg, lp, "name");
            if (!leg.contains("config")) fail(lp, "missing required key 'config'");
            cl.config = std::make_shared<RunConfig>(
                parse_object(leg.at("config"), lp + ".config"));
            c.compare_legs.push_back(std::move(cl));
            ++idx;
        }
    }

    return c;
}

}  // namespace

void RunConfig::validate() const {
    params.validate();
    if (grid.M < 2 || grid.M % 2 != 0)
        throw ConfigError("config: grid.M must be even and >= 2");
    if (!(grid.L > 0.0)) throw ConfigError("config: grid.L must be positive");
    if (!(kernel.shape > 0.0)) throw ConfigError("config: kernel shape must be positive");
    if (initial.type == InitialConfig::Type::pulse &&
        !(initial.alpha > 0.0 && initial.beta > 0.0))
        throw ConfigError("config: pulse initial condition needs alpha, beta > 0");

    const bool periodic_u = bc_u.type == BcConfig::Type::periodic;
    const bool periodic_v = bc_v.type == BcConfig::Type::periodic;
    if (periodic_u != periodic_v)
        throw ConfigError("config: periodic constraints must apply to both u and v");
    if (solver == SolverKind::spectral) {
        if (!periodic_u)
            throw ConfigError("config: the spectral solver requires periodic constraints");
        if (grid.M < 2 || (grid.M & (grid.M - 1)) != 0)
            throw ConfigError("config: the spectral solver requires M to be a power of two");
        if (experiment != ExperimentKind::simulate)
            throw ConfigError("config: the spectral solver only supports 'simulate'");
    } else if (periodic_u) {
        throw ConfigError("config: periodic constraints require solver = spectral");
    }

    const bool neumann_u = bc_u.type == BcConfig::Type::neumann;
    const bool neumann_v = bc_v.type == BcConfig::Type::neumann;
    if (neumann_u != neumann_v)
        throw ConfigError("config: Neumann constraints must apply to both u and v");
    if (neumann_u && grid.M % 4 != 0)
        throw ConfigError("config: Neumann constraints require M divisible by 4");

    switch (experiment) {
        case ExperimentKind::simulate:
            stepper.validate();
            break;
        case ExperimentKind::mms:
            if (mms.labels.empty()) throw ConfigError("config: mms.labels is empty");
            for (int l : mms.labels)
                if (l < 2) throw ConfigError("config: mms labels must be >= 2");
            if (!(mms.T > 0.0) || !(mms.dt_over_h > 0.0))
                throw ConfigError("config: mms.T and mms.dt_over_h must be positive");
            break;
        case ExperimentKind::pulse_convergence: {
            const auto& v = convergence;
            if (v.m_list.empty()) throw ConfigError("config: convergence.m_list is empty");
            if (v.dt_list.size() != v.m_list.size() + 1)
                throw ConfigError(
                    "config: convergence.dt_list needs one entry per level plus the reference");
            for (int m : v.m_list)
                if (v.reference_m % m != 0)
                    throw ConfigError("config: reference grid is not nested with M = " +
                                      std::to_string(m));
            if (neumann_u) {
                for (int m : v.m_list)
                    if (m % 4 != 0)
                        throw ConfigError(
                            "config: Neumann convergence levels need M divisible by 4");
                if (v.reference_m % 4 != 0)
                    throw ConfigError(
                        "config: Neumann reference grid needs M divisible by 4");
            }
            if (stepper.tol < 0.0 && !(v.horizon > 0.0))
                throw ConfigError("config: convergence runs with tol < 0 need a horizon");
            break;
        }
        case ExperimentKind::determinant:
            if (determinant.profile_csv.empty())
                throw ConfigError("config: determinant.profile is required");
            if (!(determinant.epsilon > 0.0))
                throw ConfigError("config: determinant.epsilon must be positive");
            break;
        case ExperimentKind::compare: {
            if (compare_legs.empty()) throw ConfigError("config: compare.legs is empty");
            for (const auto& leg : compare_legs) {
                if (leg.name.empty()) throw ConfigError("config: compare leg without name");
                if (leg.config->experiment != ExperimentKind::simulate)
                    throw ConfigError("config: compare legs must be 'simulate' configs");
                leg.config->validate();
            }
            break;
        }
    }
}

std::string RunConfig::to_json() const { return to_json_object(*this).dump(2) + "\n"; }

GrayScottParams effective_params(const RunConfig& config) {
    GrayScottParams p = config.params;
    if (config.calibrate_diffusivity) {
        const double scale = 2.0 / config.kernel.make().second_moment();
        p.d_u *= scale;
        p.d_v *= scale;
    }
    return p;
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // recover a line/column position from the byte offset
        size_t line = 1, col = 1;
        for (size_t i = 0; i < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError("config: parse error at line " + std::to_string(line) +
                          ", column " + std::to_string(col) + ": " + e.what());
    }
    RunConfig c = parse_object(j, "$");
    c.validate();
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

RunConfig pulse_base(const KernelConfig& kernel, BcConfig::Type bc, bool desk) {
    RunConfig c;
    c.experiment = ExperimentKind::simulate;
    c.kernel = kernel;
    c.params = GrayScottParams{1.0, 0.01, 0.01, std::cbrt(0.01) / 2.0};
    c.initial = InitialConfig{InitialConfig::Type::pulse, 0.1, 3.0, 1.0, 0.0};

    const double L_phys = 75.0 / 4.0;
    switch (bc) {
        case BcConfig::Type::dirichlet:
            c.grid = {L_phys, desk ? 1024 : 8192};
            c.bc_u = BcConfig{BcConfig::Type::dirichlet, 1.0, 2.0, 0.0};
            c.bc_v = BcConfig{BcConfig::Type::dirichlet, 0.0, 2.0, 0.0};
            break;
        case BcConfig::Type::free_decay:
            c.grid = {L_phys, desk ? 1024 : 8192};
            c.bc_u = BcConfig{BcConfig::Type::free_decay, 0.0, 2.0, 1.0};
            c.bc_v = BcConfig{BcConfig::Type::free_decay, 0.0, 2.0, 0.0};
            break;
        case BcConfig::Type::neumann:
            // physical domain [-L_phys, L_phys], computational width doubled
            c.grid = {2.0 * L_phys, desk ? 1024 : 8192};
            c.bc_u = BcConfig{BcConfig::Type::neumann, 0.0, 2.0, 1.0};
            c.bc_v = BcConfig{BcConfig::Type::neumann, 0.0, 2.0, 0.0};
            break;
        case BcConfig::Type::periodic:
            c.grid = {L_phys, desk ? 1024 : 8192};
            c.bc_u = BcConfig{BcConfig::Type::periodic, 0.0, 2.0, 0.0};
            c.bc_v = BcConfig{BcConfig::Type::periodic, 0.0, 2.0, 0.0};
            c.solver = SolverKind::spectral;
            break;
    }

    c.calibrate_diffusivity = true;
    if (desk) {
        c.stepper.dt = 0.02;
        c.stepper.tol = -1.0;
        c.stepper.nmax = 30000;  // horizon T = 600
    } else {
        c.stepper.dt = 0.00015625;
        c.stepper.tol = 1e-8;
        c.stepper.nmax = 10000000;
    }
    c.output.checkpoint_every = desk ? 10000 : 100000;
    c.output.history_every = desk ? 10 : 100;
    return c;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names = {"table1-mms", "appendix-convergence",
                                      "domain-size-compare"};
    for (const char* kernel : {"exp", "exp4", "alg", "alg39"})
        for (const char* bc : {"dirichlet", "neumann", "free", "periodic"})
            names.push_back(std::string("pulse-") + kernel + "-" + bc);
    return names;
}

RunConfig preset(const std::string& name, bool desk) {
    if (name == "table1-mms") {
        RunConfig c;
        c.experiment = ExperimentKind::mms;
        c.kernel = KernelConfig{Kernel::Family::exponential, 1.0};
        c.grid = {1.0, 80};  // per-level grids are derived from the labels
        c.params = GrayScottParams{0.05, 0.01, 6.0, 8.0};
        c.bc_u = BcConfig{BcConfig::Type::dirichlet, 0.0, 2.0, 0.0};
        c.bc_v = BcConfig{BcConfig::Type::dirichlet, 0.0, 2.0, 0.0};
        c.initial = InitialConfig{InitialConfig::Type::homogeneous, 0.1, 3.0, 0.0, 0.0};
        c.stepper = StepperConfig{0.05, 20, -1.0};
        c.mms.labels = desk ? std::vector<int>{40, 80, 160, 320}
                            : std::vector<int>{40, 80, 160, 320, 640, 1280};
        c.mms.T = 1.0;
        c.mms.dt_over_h = 2.0;
        return c;
    }
    if (name == "appendix-convergence") {
        RunConfig c;
        c.experiment = ExperimentKind::pulse_convergence;
        c.kernel = KernelConfig{Kernel::Family::exponential, 4.0};
        c.grid = {75.0 / 2.0, desk ? 4096 : 16384};  // computational domain, Neumann
        c.params = GrayScottParams{1.0, 0.01, 0.01, std::cbrt(0.01) / 2.0};
        c.bc_u = BcConfig{BcConfig::Type::neumann, 0.0, 2.0, 1.0};
        c.bc_v = BcConfig{BcConfig::Type::neumann, 0.0, 2.0, 0.0};
        c.initial = InitialConfig{InitialConfig::Type::pulse, 0.1, 3.0, 1.0, 0.0};
        c.calibrate_diffusivity = true;
        if (desk) {
            c.convergence.m_list = {256, 512, 1024, 2048};
            c.convergence.reference_m = 4096;
            c.convergence.dt_list = {0.01, 0.01, 0.01, 0.01, 0.01};
            c.convergence.horizon = 300.0;
            c.stepper = StepperConfig{0.01, 30000, -1.0};
        } else {
            c.convergence.m_list = {512, 1024, 2048, 4096, 8192};
            c.convergence.reference_m = 16384;
            c.convergence.dt_list = {0.0025, 0.00125, 0.000625, 0.0003125,
                                     0.00015625, 0.000078125};
            c.convergence.horizon = 0.0;
            c.stepper = StepperConfig{0.00015625, 10000000, 1e-8};
        }
        c.convergence.norm_p = 1;
        return c;
    }
    if (name == "domain-size-compare") {
        RunConfig c;
        c.experiment = ExperimentKind::compare;
        const KernelConfig kexp{Kernel::Family::exponential, 3.4};
        auto small = pulse_base(kexp, BcConfig::Type::free_decay, desk);
        auto big = pulse_base(kexp, BcConfig::Type::free_decay, desk);
        big.grid.L = 25.0;
        big.grid.M = desk ? 1368 : 10924;
        // keep h comparable across legs; M scales with L
        c.kernel = kexp;
        c.params = small.params;
        c.grid = small.grid;
        c.bc_u = small.bc_u;
        c.bc_v = small.bc_v;
        c.stepper = small.stepper;
        c.compare_legs.push_back({"L75over4", std::make_shared<RunConfig>(small)});
        c.compare_legs.push_back({"L25", std::make_shared<RunConfig>(big)});
        return c;
    }

    // pulse-{exp|exp4|alg|alg39}-{dirichlet|neumann|free|periodic}
    if (name.rfind("pulse-", 0) == 0) {
        const std::string rest = name.substr(6);
        const auto dash = rest.find('-');
        if (dash != std::string::npos) {
            const std::string kname = rest.substr(0, dash);
            const std::string bcname = rest.substr(dash + 1);
            KernelConfig k;
            if (kname == "exp") k = {Kernel::Family::exponential, 3.4};
            else if (kname == "exp4") k = {Kernel::Family::exponential, 4.0};
            else if (kname == "alg") k = {Kernel::Family::algebraic, 0.42};
            else if (kname == "alg39") k = {Kernel::Family::algebraic, 0.39};
            else throw ConfigError("unknown preset '" + name + "'");
            BcConfig::Type bc;
            if (bcname == "dirichlet") bc = BcConfig::Type::dirichlet;
            else if (bcname == "neumann") bc = BcConfig::Type::neumann;
            else if (bcname == "free") bc = BcConfig::Type::free_decay;
            else if (bcname == "periodic") bc = BcConfig::Type::periodic;
            else throw ConfigError("unknown preset '" + name + "'");
            return pulse_base(k, bc, desk);
        }
    }
    throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace nlgs
