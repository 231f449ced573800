#pragma once

#include "sflow/flow_system.hpp"
#include "sflow/types.hpp"

#include <functional>
#include <vector>

namespace sflow {

/// Time-stamped trajectory samples with flow speeds. Immutable after
/// construction and safe to share across threads.
struct OrbitSegment {
    FlowPtr system;
    std::vector<double> times;  // strictly increasing
    std::vector<Vec> states;
    std::vector<double> speeds; // |X(states[i])|
    double dense_tol = 0.0;     // integration tolerance used

    size_t size() const { return times.size(); }
    double duration() const { return times.empty() ? 0.0 : times.back() - times.front(); }
    double min_speed() const;
    double dt(size_t i) const { return times[i + 1] - times[i]; }
};

struct IntegrateOptions {
    double tol = 1e-10;          // local error tolerance (atol = rtol = tol)
    double stride = 0.01;        // uniform sampling stride; <= 0 emits only step points
    bool emit_adaptive = true;   // also emit the adaptive step endpoints
    double escape_radius = 1e4;  // Blowup beyond this norm
    double max_step = 0.0;       // 0 = no cap
    double t0 = 0.0;
};

/// Adaptive Dormand-Prince 5(4) with PI step control and 4th-order dense
/// output. Samples are emitted on the uniform stride grid (plus the adaptive
/// step endpoints when requested); the final state at t0 + duration is always
/// included. Throws StepFailure if the controller underflows (h < 1e-14) and
/// Blowup past the escape radius.
OrbitSegment integrate(FlowPtr system, const Vec& x0, double duration,
                       const IntegrateOptions& opts = {});

/// Generic ODE driver used by integrate() and the variational solves.
/// `rhs(t, y)` must return dy/dt. Calls `emit(t, y)` at every accepted step
/// endpoint; dense evaluation between steps is handled by the caller via the
/// returned samples of integrate().
struct OdeResult {
    Vec y;
    int steps_accepted = 0;
    int steps_rejected = 0;
};

OdeResult solve_ode(const std::function<Vec(double, const Vec&)>& rhs, const Vec& y0,
                    double t0, double t1, double tol, double escape_radius = 0.0,
                    double max_step = 0.0,
                    const std::function<void(double, const Vec&)>& emit = nullptr,
                    const std::function<void(double, double, const std::function<Vec(double)>&)>*
                        dense_hook = nullptr);

/// d x d propagation matrices of the variational equation dV/dt = DX(x(t)) V
/// along the base segment, one matrix per sampling interval (V = I at the
/// interval start).
struct TangentPropagation {
    const OrbitSegment* base = nullptr;
    std::vector<Mat> matrices; // size() == base->size() - 1

    /// Product matrices[j-1] * ... * matrices[i] (i <= j), the tangent flow
    /// from sample i to sample j.
    Mat product(size_t i, size_t j) const;
};

TangentPropagation tangent_integrate(const FlowSystem& system, const OrbitSegment& segment);

/// Tangent flow over [times[i], times[j]] computed in one solver run from an
/// arbitrary start matrix (defaults to the identity).
Mat propagate_tangent(const FlowSystem& system, const Vec& x0, double duration, double tol,
                      const Mat* v0 = nullptr, Vec* x_end = nullptr);

} // namespace sflow
