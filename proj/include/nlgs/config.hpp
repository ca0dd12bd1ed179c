#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlgs/boundary.hpp"
#include "nlgs/kernel.hpp"
#include "nlgs/model.hpp"
#include "nlgs/spectral.hpp"
#include "nlgs/timestepper.hpp"

namespace nlgs {

enum class ExperimentKind { simulate, mms, pulse_convergence, compare, determinant };
enum class SolverKind { quadrature, spectral };

struct KernelConfig {
    Kernel::Family family = Kernel::Family::exponential;
    double shape = 1.0;
    Kernel make() const {
        return family == Kernel::Family::exponential ? Kernel::exponential(shape)
                                                     : Kernel::algebraic(shape);
    }
};

struct GridConfig {
    double L = 1.0;
    int M = 64;
};

/// Boundary constraint as configured; "periodic" selects the spectral path.
struct BcConfig {
    enum class Type { dirichlet, free_decay, neumann, periodic };
    Type type = Type::dirichlet;
    double value = 0.0;   // dirichlet constant
    double q = 2.0;       // decay exponent
    double u_ref = 0.0;   // far-field offset

    BoundaryConstraint make(double L) const;
};

struct InitialConfig {
    enum class Type { pulse, homogeneous };
    Type type = Type::pulse;
    double alpha = 0.1, beta = 3.0;  // pulse
    double u = 1.0, v = 0.0;         // homogeneous
};

struct OutputConfig {
    std::string dir = "out";
    long checkpoint_every = 1000;
    long history_every = 1;
    bool emit_plot_script = false;
};

struct MmsConfig {
    std::vector<int> labels = {40, 80, 160, 320};  // h = L/label, dt = dt_over_h * h
    double T = 1.0;
    double dt_over_h = 2.0;
};

struct PulseConvergenceConfig {
    std::vector<int> m_list;      // grid M per level
    int reference_m = 0;          // finest-mesh reference
    std::vector<double> dt_list;  // one per level plus one for the reference
    double horizon = 0.0;         // fixed final time (used when tol < 0)
    int norm_p = 1;
};

struct DeterminantConfig {
    std::string profile_csv;
    double epsilon = 0.0;
};

struct RunConfig;

struct CompareLeg {
    std::string name;
    std::shared_ptr<RunConfig> config;
};

struct RunConfig {
    ExperimentKind experiment = ExperimentKind::simulate;
    KernelConfig kernel;
    GridConfig grid;
    GrayScottParams params;
    /// Scale d_u, d_v by 2/(second moment of the kernel) so the operator's
    /// long-wave limit carries the configured coefficients. The pulse
    /// experiments run with this on; see the README discussion.
    bool calibrate_diffusivity = false;
    BcConfig bc_u, bc_v;
    InitialConfig initial;
    StepperConfig stepper;
    SolverKind solver = SolverKind::quadrature;
    SpectralScheme spectral_scheme = SpectralScheme::imex_bdf2;
    OutputConfig output;

    MmsConfig mms;
    PulseConvergenceConfig convergence;
    DeterminantConfig determinant;
    std::vector<CompareLeg> compare_legs;

    void validate() const;
    std::string to_json() const;
};

/// Parse and validate a configuration document. Parse errors carry line and
/// column, semantic errors carry the key path. Unknown keys are rejected.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

/// Diffusivities actually used by the solvers: the configured values,
/// optionally calibrated against the kernel's second moment.
GrayScottParams effective_params(const RunConfig& config);

/// Named experiment presets; desk = true selects reduced-scale variants.
std::vector<std::string> preset_names();
RunConfig preset(const std::string& name, bool desk = false);

}  // namespace nlgs
