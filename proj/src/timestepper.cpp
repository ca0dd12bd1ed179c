#include "nlgs/timestepper.hpp"

#include <cmath>

namespace nlgs {

namespace {

void ensure_finite(const SystemState& s, long step) {
    if (!s.u.allFinite() || !s.v.allFinite())
        throw DivergenceError("time integration produced non-finite values at step " +
                                  std::to_string(step) + " (t = " + std::to_string(s.t) + ")",
                              step, s.t);
}

double segment_max_update(const SystemState& a, const SystemState& b, int begin, int count) {
    const double du =
        (a.u.segment(begin, count) - b.u.segment(begin, count)).cwiseAbs().maxCoeff();
    const double dv =
        (a.v.segment(begin, count) - b.v.segment(begin, count)).cwiseAbs().maxCoeff();
    return std::max(du, dv);
}

}  // namespace

SystemState trial_step(const SystemState& state, double dt, const RhsFn& rhs) {
    const Derivatives g = rhs(state);
    SystemState next;
    next.u = state.u + dt * g.du;
    next.v = state.v + dt * g.dv;
    next.t = state.t + dt;
    ensure_finite(next, 1);
    return next;
}

SystemState ab2_step(const SystemState& state_n, const Derivatives& g_n,
                     const Derivatives& g_nm1, double dt) {
    SystemState next;
    next.u = state_n.u + dt * (1.5 * g_n.du - 0.5 * g_nm1.du);
    next.v = state_n.v + dt * (1.5 * g_n.dv - 0.5 * g_nm1.dv);
    next.t = state_n.t + dt;
    ensure_finite(next, -1);
    return next;
}

SystemState ab2_step(const SystemState& state_n, const SystemState& state_nm1,
                     double dt, const RhsFn& rhs) {
    return ab2_step(state_n, rhs(state_n), rhs(state_nm1), dt);
}

RunResult run(SystemState initial, const StepperConfig& config, const RhsFn& rhs,
              const ExtendFn* extend, const std::pair<int, int>* inner_range,
              const StepObserver& observer) {
    config.validate();
    const bool neumann = config.mode == StepperMode::neumann;
    if (neumann && (!extend || !inner_range))
        throw ConfigError("neumann mode requires an extension and an inner range");
    if (!neumann && (extend || inner_range))
        throw ConfigError(
            "extension/inner range supplied but the stepper mode is not neumann");

    const double dt = config.dt;
    const double t0 = initial.t;
    const int begin = inner_range ? inner_range->first : 0;
    const int count = inner_range ? inner_range->second : static_cast<int>(initial.u.size());

    RunResult result;
    result.max_update_history.reserve(static_cast<size_t>(config.nmax));

    auto record = [&](long step, double err, const SystemState& s) {
        result.max_update_history.push_back(err);
        if (config.checkpoint_every > 0 && step % config.checkpoint_every == 0)
            result.checkpoints.push_back({step, s});
        if (observer) observer(step, s.t, err, s);
    };

    // Trial step (forward Euler) establishes the AB2 history.
    Derivatives g_prev = rhs(initial);
    SystemState cur = initial;
    cur.u.segment(begin, count) += dt * g_prev.du.segment(begin, count);
    cur.v.segment(begin, count) += dt * g_prev.dv.segment(begin, count);
    cur.t = t0 + dt;
    if (neumann) (*extend)(cur);
    ensure_finite(cur, 1);

    double err = segment_max_update(cur, initial, begin, count);
    result.steps = 1;
    record(1, err, cur);
    if (config.tol >= 0.0 && err < config.tol) {
        result.reason = StopReason::steady;
        result.final_state = std::move(cur);
        return result;
    }

    for (long n = 2; n <= config.nmax; ++n) {
        Derivatives g_cur = rhs(cur);
        SystemState next = cur;
        next.u.segment(begin, count) +=
            dt * (1.5 * g_cur.du.segment(begin, count) - 0.5 * g_prev.du.segment(begin, count));
        next.v.segment(begin, count) +=
            dt * (1.5 * g_cur.dv.segment(begin, count) - 0.5 * g_prev.dv.segment(begin, count));
        next.t = t0 + n * dt;
        if (neumann) (*extend)(next);
        ensure_finite(next, n);

        err = segment_max_update(next, cur, begin, count);
        result.steps = n;
        record(n, err, next);

        cur = std::move(next);
        g_prev = std::move(g_cur);

        if (config.tol >= 0.0 && err < config.tol) {
            result.reason = StopReason::steady;
            result.final_state = std::move(cur);
            return result;
        }
    }

    result.reason = StopReason::nmax_reached;
    result.final_state = std::move(cur);
    return result;
}

}  // namespace nlgs
