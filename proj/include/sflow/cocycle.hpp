#pragma once

#include "sflow/integrator.hpp"

#include <optional>

namespace sflow {

/// Default floor on |X(x)| below which normal-bundle operations refuse to work.
constexpr double kAlphaMin = 1e-3;

/// Orthonormal frame of the normal space N_x = X(x)^perp at a regular point.
struct NormalFrame {
    Vec base_point;
    Vec flow_dir;  // X(x)/|X(x)|
    Mat basis;     // d x (d-1), orthonormal columns spanning N_x
    bool rebuilt = false; // set when transport had to restart from scratch

    int dim() const { return static_cast<int>(base_point.size()); }
};

/// Deterministic frame: Gram-Schmidt applied to the standard basis with the
/// coordinate most aligned to the flow direction dropped (ties -> lowest index).
NormalFrame normal_frame(const FlowSystem& system, const Vec& x, double alpha_min = kAlphaMin);

/// Continuity transport: project the previous basis onto the new normal space
/// and re-orthonormalize in order; a column flips sign if it ends up opposed
/// to its predecessor. Throws DegenerateProjection if a projected column drops
/// below 1e-8 (callers may rebuild from scratch, flagging the frame).
NormalFrame transport_frame(const FlowSystem& system, const NormalFrame& prev,
                            const Vec& next_point, double alpha_min = kAlphaMin);

/// The (d-1) x (d-1) matrix of the linear Poincare flow over sampling interval
/// i: push each basis vector of `from` by the interval tangent matrix, project
/// out the flow direction at the endpoint, express in `to` coordinates.
Mat linear_poincare_step(const FlowSystem& system, const TangentPropagation& prop, size_t i,
                         const NormalFrame& from, const NormalFrame& to,
                         double alpha_min = kAlphaMin);

/// Scale an unscaled step by |X(start)| / |X(end)|.
Mat scaled_step(const Mat& unscaled, double speed_start, double speed_end,
                double alpha_min = kAlphaMin);

/// Sequence of normal-frame cocycle steps along an orbit segment.
struct CocycleChain {
    std::vector<NormalFrame> frames; // one per sample
    std::vector<Mat> steps;          // (d-1) x (d-1), one per interval
    std::vector<double> dts;
    std::vector<double> speeds;      // per sample, copied from the segment
    std::vector<double> times;
    std::vector<double> log_norms;     // log ||A_i||
    std::vector<double> log_mininorms; // log m(A_i)
    bool scaled = true;

    size_t size() const { return steps.size(); }
    int nd() const {
        if (!steps.empty()) return static_cast<int>(steps.front().rows());
        return frames.empty() ? 0 : frames.front().dim() - 1;
    }
    double window() const { return times.empty() ? 0.0 : times.back() - times.front(); }
    /// steps[j-1] * ... * steps[i]
    Mat product(size_t i, size_t j) const;
};

/// Build the full chain: frames by transport, steps by linear_poincare_step
/// (times the speed ratio when scaled). Per-step operator norms and mininorms
/// are recorded. Throws ChainError naming the failing interval on a
/// singularity-floor violation.
CocycleChain build_chain(const FlowSystem& system, const OrbitSegment& segment,
                         const TangentPropagation& prop, bool scaled,
                         double alpha_min = kAlphaMin);

/// Unit tangent vector with an orthogonal companion, the state advanced by the
/// compactified flow steps.
struct SphereVectorPair {
    Vec u; // |u| = 1
    Vec v; // <u, v> = 0
};

/// One step of the extended flow: the first component is pushed and
/// renormalized (unit tangent flow), the second pushed and orthogonally
/// corrected against the pushed first. Well-defined at singularities.
SphereVectorPair extended_flow_step(const TangentPropagation& prop, size_t i,
                                    const SphereVectorPair& pair);

} // namespace sflow
