#pragma once

#include "sflow/spectrum.hpp"

namespace sflow {

/// Per-step log norms of the cocycle restricted to an estimated splitting:
/// a[i] = log ||A_i restricted to E at sample i||, b[i] = log m(A_i restricted
/// to F at sample i). Steps may aggregate several chain intervals (block
/// resampling); `dts` are the aggregated durations.
struct LogProfile {
    std::vector<double> times; // size k+1
    std::vector<double> dts;   // size k
    std::vector<double> a;
    std::vector<double> b;
    std::vector<size_t> sample_index; // chain sample backing each profile time

    size_t size() const { return dts.size(); }
    double window() const { return times.empty() ? 0.0 : times.back() - times.front(); }
};

/// Build the profile from a chain and splitting, aggregating `block_steps`
/// consecutive chain intervals per profile step (1 = native grid). Restricted
/// products are accumulated with log scaling, so long blocks cannot underflow.
LogProfile build_profile(const CocycleChain& chain, const SplittingEstimate& split,
                         size_t block_steps = 1, size_t first_sample = 0,
                         size_t last_sample = SIZE_MAX);

/// Start indices whose greedy partition keeps the running product below
/// C * exp(-eta * t) at every cell boundary up to the profile end. Greedy
/// rule: extend the cell while the bound still holds and the cell spans at
/// most T, closing at the last admissible step.
std::vector<size_t> contracting_scan(const LogProfile& profile, double C, double eta_rate,
                                     double T);

/// Expansion analogue, realized on the reversed, negated b-series; returned
/// indices are positions in that reversed profile (0 = the profile end).
std::vector<size_t> expanding_scan(const LogProfile& profile, double C, double eta_rate,
                                   double T);

/// Finite quasi-hyperbolic stretch of a profile: all three per-partition
/// inequalities hold with the native sample grid as the partition.
/// margins = (full-range contraction surplus,
///            full-range expansion surplus,
///            worst per-step surplus of b - eta*dt over a + eta*dt).
struct QuasiHyperbolicSegment {
    size_t start_index = 0; // profile sample index
    size_t end_index = 0;   // one past the last step
    double start_t = 0.0;
    double end_t = 0.0;
    double eta = 0.0; // rate per unit time
    double T = 0.0;   // max partition gap
    double margins[3] = {0.0, 0.0, 0.0};
};

/// Maximal segments satisfying, for every n in the range with slack 1e-9:
///   sum_{i<n} a_i <= -eta (t_n - t_s),
///   sum_{i>=n} b_i >= eta (t_e - t_n),
///   a_n - b_n <= -eta dt_n.
/// Maximal ranges are pairwise disjoint; the scan emits exactly them.
/// Throws GapTooLarge if some dt exceeds T.
std::vector<QuasiHyperbolicSegment> pliss_select(const LogProfile& profile, double eta_rate,
                                                 double T);

/// O(1) admissibility queries over profile ranges (sparse tables over the
/// shifted prefix/suffix sums). Same inequalities as pliss_select.
class QuasiHyperbolicChecker {
public:
    QuasiHyperbolicChecker(const LogProfile& profile, double eta_rate);
    bool admissible(size_t s, size_t e) const;

private:
    size_t k_;
    double slack_;
    std::vector<double> S_, U_;
    std::vector<size_t> good_prefix_;
    std::vector<std::vector<double>> smax_, umin_; // sparse tables
    double range_max_S(size_t lo, size_t hi) const;
    double range_min_U(size_t lo, size_t hi) const;
};

/// Pesin-block constants. `eta` is the log contraction amount per block step
/// (a rate multiplied by T); `C_products` enters the product bounds, `alpha`
/// is the singularity-distance floor (1/C of the defining constant).
struct PesinBlockParams {
    double T = 0.0;
    double eta = 0.0;
    double C_products = 1.0;
    double alpha = 0.0;
};

/// Membership at the profile start: for every J = 1..k,
///   sum_{i<J} a_i <= log C - J eta,  sum_{i<J} b_i >= -log C + J eta,
/// and sing_dist >= alpha. The profile must be resampled at stride exactly T.
bool pesin_membership(const LogProfile& forward_profile, const PesinBlockParams& params,
                      double sing_dist);

/// Membership decided at every profile sample (suffix conditions), O(k).
std::vector<bool> pesin_membership_along(const LogProfile& profile,
                                         const PesinBlockParams& params,
                                         const std::vector<double>& sing_dists);

/// Membership decided at every native sample of a per-step profile, with the
/// T-blocks (q0 native steps each) anchored at the sample itself. Block norms
/// are composed from the per-step restricted values; this is exact for
/// one-dimensional bundles and conservative (stricter) otherwise.
std::vector<bool> pesin_membership_native(const LogProfile& native, size_t q0,
                                          const PesinBlockParams& params,
                                          const std::vector<double>& sing_dists);

/// The derived constants of the block construction for a hyperbolic spectrum:
/// chi = min{|lambda^-|, lambda^+}, eta0 = (chi - eps/4) T0, j0 the smallest
/// integer with C < exp(j0 T0 eps / 4), then T = j0 T0 and
/// eta = (chi - eps/2) T with the C factor absorbed.
struct BlockConstants {
    double chi = 0.0;
    double epsilon = 0.0;
    double T0 = 0.0;
    double eta0 = 0.0;
    double C = 1.0;
    int j0 = 1;
    PesinBlockParams base;     // (T0, eta0, C, 1/C)
    PesinBlockParams upgraded; // (j0 T0, (chi - eps/2) j0 T0, 1, 1/C)
};

/// Throws NotHyperbolic if the spectral gap is below `gap_floor`; epsilon
/// defaults to chi/8 when <= 0 and must stay below chi/2.
BlockConstants block_constants(const SpectrumEstimate& spectrum, double epsilon, double T0,
                               double C, double gap_floor = 0.05);

/// Smallest C (1% resolution) whose measured membership fraction along the
/// profile reaches `target_fraction`. The fraction is nondecreasing in C.
double choose_block_C(const LogProfile& profile_T0, double eta0,
                      const std::vector<double>& sing_dists, double target_fraction);

} // namespace sflow
