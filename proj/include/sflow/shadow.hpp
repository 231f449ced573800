#pragma once

#include "sflow/strings.hpp"

#include <limits>

namespace sflow {

/// A recurrence pair inside a quasi-hyperbolic stretch: the orbit piece from
/// `start_sample` to `end_sample` returns to within `gap` of its start.
struct CloseReturn {
    size_t start_sample = 0; // orbit sample indices
    size_t end_sample = 0;
    Vec y;   // start state
    Vec ly;  // end state
    double gap = 0.0;
    double duration = 0.0;
    bool both_in_block = false;
    bool alpha_ok = false;
};

/// Inputs of the close-return search: the sampled orbit, the selected
/// segments over `profile`, and per-profile-sample block membership and
/// singularity distances.
struct CloseReturnSearch {
    const OrbitSegment* orbit = nullptr;
    const LogProfile* profile = nullptr;
    const std::vector<QuasiHyperbolicSegment>* segments = nullptr;
    std::vector<bool> block_member;  // per profile sample
    std::vector<double> sing_dists;  // per profile sample
};

/// Direct check of the three quasi-hyperbolicity inequalities over the
/// profile range [s, e) (native partition, slack 1e-9).
bool quasi_hyperbolic_range(const LogProfile& profile, double eta_rate, size_t s, size_t e);

/// Candidate pairs (i, j) on the profile grid, found with a uniform spatial
/// hash of cell size D, such that the sub-range [i, j) stays quasi-hyperbolic,
/// both endpoints are block members at singularity distance >= alpha, the
/// endpoint gap is < D and the stretch lasts at least `min_duration`.
/// Sorted by gap, capped at `max_candidates`.
std::vector<CloseReturn> find_close_returns(const CloseReturnSearch& search,
                                            const PesinBlockParams& params, double D,
                                            double eta_rate, double min_duration = 1.0,
                                            double max_duration =
                                                std::numeric_limits<double>::infinity(),
                                            size_t max_candidates = 32);

/// A closed orbit produced by the shooting solver.
struct PeriodicOrbit {
    Vec anchor;
    double period = 0.0;
    OrbitSegment loop;     // dense samples over [0, period]
    double residual = 0.0; // |phi_period(anchor) - anchor|
    Mat monodromy;         // (d-1) x (d-1) normal return matrix
    std::vector<double> floquet_lognorms; // log |eig| / period
    int newton_iterations = 0;

    /// Hyperbolic when no Floquet log-norm falls in (-window, window).
    bool hyperbolic(double window = 0.02) const;
};

struct CloseUpOptions {
    int m_sections = 24;
    double tol = 1e-11;          // Newton residual target (scaled by 1 + |p|)
    double integrator_tol = 1e-12;
    double loop_stride = 0.01;   // sampling stride of the returned loop
    int max_iterations = 50;
    double min_step = 1e-6;      // Armijo floor
    double collapse_ratio = 0.1; // Collapsed when period < ratio * duration
};

/// Close a near-returning orbit piece into a true periodic orbit by multiple
/// shooting: unknowns are section offsets (hyperplanes orthogonal to the flow
/// at anchor samples) and transit times; Newton with tangent-propagation
/// Jacobians and Armijo backtracking (factor 0.5). Throws NoConvergence after
/// the iteration cap and Collapsed when the result is much shorter than the
/// candidate stretch.
PeriodicOrbit close_up(const FlowSystem& system, const OrbitSegment& orbit,
                       const CloseReturn& candidate, const CloseUpOptions& opts = {});

/// Time reparameterization check of a trajectory against a closed orbit.
struct ShadowingReport {
    std::vector<double> t;       // sample times of the checked trajectory (from 0)
    std::vector<double> theta;   // matched loop times, theta[0] == 0
    double theta_prime_min = 0.0;
    double theta_prime_max = 0.0;
    double scaled_dist_max = 0.0;
    double epsilon_used = 0.0;
    bool monotone = false;
    bool pass = false;
};

/// theta is built by matching each trajectory sample to the nearest loop
/// point (locally refined along the flow), unwrapped monotonically with
/// theta(0) = 0. Passing requires monotonicity, all difference quotients in
/// (1-eps, 1+eps) and max_t d(x(t), loop(theta(t))) / |X(x(t))| < eps.
ShadowingReport verify_shadowing(const OrbitSegment& y_segment, const PeriodicOrbit& orbit,
                                 double epsilon);

} // namespace sflow
