#pragma once

#include "sflow/cocycle.hpp"

namespace sflow {

enum class WhichFlow { Tangent, Poincare, ScaledPoincare };

/// Finite-window Lyapunov exponent estimates (per unit time, sorted
/// nondecreasing) with a running-average drift diagnostic over the last 10%
/// of the window.
struct SpectrumEstimate {
    std::vector<double> exponents;
    WhichFlow which_flow = WhichFlow::ScaledPoincare;
    double window = 0.0;
    std::vector<double> convergence; // per-exponent drift
    /// Downsampled running estimates for convergence plots: column 0 = time,
    /// remaining columns = exponent estimates at that prefix.
    std::vector<std::vector<double>> running;
};

/// Classical QR accumulation along the chain: push an orthonormal frame by
/// each step, re-factorize, accumulate log diagonals (compensated sums).
/// Requires >= 100 steps; throws IllConditioned on an R diagonal < 1e-300.
SpectrumEstimate qr_exponents(const CocycleChain& chain, size_t min_steps = 100);

/// Same scheme on the d x d tangent matrices of the propagation.
SpectrumEstimate tangent_exponents(const FlowSystem& system, const OrbitSegment& segment,
                                   const TangentPropagation& prop, size_t min_steps = 100);

/// Finite-window difference between scaled and unscaled exponents and the
/// exact scalar it must equal, |log(speed_0/speed_m)| / window.
struct ScaledUnscaledReport {
    double max_difference = 0.0;
    double exact_scalar = 0.0;
    std::vector<double> scaled;
    std::vector<double> unscaled;
};
ScaledUnscaledReport scaled_equals_unscaled_check(const CocycleChain& scaled,
                                                  const CocycleChain& unscaled);

/// Per-sample stable/unstable splitting of the normal coordinates with the
/// measured spectral gap and domination fit.
struct SplittingEstimate {
    int index = 0;                    // dim E^s
    std::vector<Mat> Es_bases;        // (d-1) x index, orthonormal columns
    std::vector<Mat> Eu_bases;        // (d-1) x (d-1-index)
    double gap = 0.0;                 // min |lambda_i|
    double theta_min = 0.0;           // smallest principal-angle separation seen
    double domination_C = 0.0;        // fitted constants (window fit)
    double domination_lambda = 0.0;
    size_t settle_begin = 0;          // samples before this may carry edge transients
    size_t settle_end = 0;            // one past the last settled sample
};

/// Subspace-iteration estimate: the unstable family by pushing a frame
/// forward through the steps, the stable family by pulling one backward
/// through the inverses, both seeded from the full-product SVD so the
/// window edges start as close to the asymptotic spaces as the data allows.
/// Throws AllStable / AllUnstable when the requested index leaves one side
/// empty and NoGap when the spectrum is not resolved away from zero.
SplittingEstimate oseledec_splitting(const CocycleChain& chain, int index,
                                     double gap_floor = 0.05);

/// Independent finite-window route: at each sample, the unstable space is the
/// top left-singular subspace of the product over the trailing window and the
/// stable space the bottom right-singular subspace of the product over the
/// leading window. Used to cross-check oseledec_splitting.
SplittingEstimate svd_window_splitting(const CocycleChain& chain, int index,
                                       double window_time);

/// Domination fit over all sampled windows [t_i, t_j] with t_j - t_i <=
/// window_cap: least squares of log(||A|E|| * ||A^-1|F||) against -(lambda) *
/// dt + log C. Samples with speed below `speed_floor` are excluded.
struct DominationCertificate {
    double C = 0.0;
    double lambda = 0.0;
    double residual_rms = 0.0;
    bool pass = false;
    size_t windows = 0;
};
DominationCertificate domination_certificate(const SplittingEstimate& split,
                                             const CocycleChain& chain, double window_cap,
                                             double lambda_min = 0.05,
                                             double residual_max = 0.5,
                                             double speed_floor = 10.0 * kAlphaMin);

} // namespace sflow
