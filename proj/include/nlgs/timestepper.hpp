#pragma once

#include <functional>
#include <vector>

#include "nlgs/model.hpp"

namespace nlgs {

enum class StepperMode { dirichlet_free, neumann };
enum class StopReason { steady, nmax_reached };

struct StepperConfig {
    double dt = 1e-3;
    long nmax = 1;
    double tol = -1.0;  // steady-state threshold on max |W_{n+1} - W_n|; negative disables
    StepperMode mode = StepperMode::dirichlet_free;
    long checkpoint_every = 1000;  // 0 disables snapshot retention

    void validate() const {
        if (!(dt > 0.0)) throw ConfigError("stepper: dt must be positive");
        if (nmax < 1) throw ConfigError("stepper: nmax must be at least 1");
    }
};

struct Checkpoint {
    long step;
    SystemState state;
};

struct RunResult {
    SystemState final_state;
    long steps = 0;
    StopReason reason = StopReason::nmax_reached;
    std::vector<double> max_update_history;  // one entry per step
    std::vector<Checkpoint> checkpoints;
};

using RhsFn = std::function<Derivatives(const SystemState&)>;
/// Rewrites the outer segment of a full-grid state (Neumann extension).
using ExtendFn = std::function<void(SystemState&)>;
/// Progress observer: (step, t, max_update, state after the step).
using StepObserver = std::function<void(long, double, double, const SystemState&)>;

/// One forward-Euler step; establishes the second history level for AB2.
SystemState trial_step(const SystemState& state, double dt, const RhsFn& rhs);

/// W_{n+1} = W_n + (3/2) dt G_n - (1/2) dt G_{n-1}, from precomputed slopes.
SystemState ab2_step(const SystemState& state_n, const Derivatives& g_n,
                     const Derivatives& g_nm1, double dt);

/// Convenience overload evaluating both slopes through rhs.
SystemState ab2_step(const SystemState& state_n, const SystemState& state_nm1,
                     double dt, const RhsFn& rhs);

/// March the system with one forward-Euler trial step followed by AB2 until
/// the max-norm update drops below tol or nmax steps are taken. In neumann
/// mode the extension runs after the trial step and after every AB2 step,
/// only the inner nodes are evolved, and slopes are evaluated on extended
/// states. Throws DivergenceError when non-finite values appear.
RunResult run(SystemState initial, const StepperConfig& config, const RhsFn& rhs,
              const ExtendFn* extend = nullptr,
              const std::pair<int, int>* inner_range = nullptr,  // (begin, count)
              const StepObserver& observer = {});

}  // namespace nlgs
