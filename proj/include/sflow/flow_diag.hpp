#pragma once

#include "sflow/flow_system.hpp"

#include <cstdint>

namespace sflow {

/// Measured constants of the speed-comparison bounds on a scaled ball
/// B(x, beta*|X(x)|): the smallest K with
///   |X(x)|/|X(y)| in [1 - K*d(x,y)/|X(x)|, 1 + K*d(x,y)/|X(x)|]
/// over the samples, and the analogous constant for the angle between the
/// flow lines <X(x)>, <X(y)> (chordal line distance = sine of the acute angle).
struct ScaledBallReport {
    double K_ratio = 0.0;
    double K_angle = 0.0;
    double min_ratio = 1.0;
    double max_ratio = 1.0;
    int samples = 0;
};

/// Samples the ball with a fixed-seed generator. Zero radius or zero samples
/// return the all-zero report. Throws SingularBall if a sampled point has
/// vanishing speed.
ScaledBallReport scaled_ball_check(const FlowSystem& system, const Vec& x, double beta,
                                   int samples, uint64_t seed = 0x5f0c1e2d3b4a5968ULL);

} // namespace sflow
