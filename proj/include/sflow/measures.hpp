#pragma once

#include "sflow/shadow.hpp"

#include <functional>
#include <limits>

namespace sflow {

/// Weighted sample-point representation of an invariant measure.
struct DiscreteMeasure {
    enum class Kind { Empirical, Periodic };
    std::vector<Vec> points;
    std::vector<double> weights; // nonnegative, summing to 1
    Kind kind = Kind::Empirical;
    double source_span = 0.0;
};

/// Trapezoidal time weights over the segment samples.
DiscreteMeasure empirical_measure(const OrbitSegment& segment);

/// Uniform-in-time weights over one period of the loop (cyclic trapezoid, the
/// duplicated endpoint dropped).
DiscreteMeasure periodic_measure(const PeriodicOrbit& orbit);

/// Deterministic test-function family on a box: f_1 = 1, then separable
/// cosine products prod_j cos(pi k_j (x_j - a_j)/(b_j - a_j)) enumerated by
/// total degree, ties in graded lexicographic order ((1,0,0) before (0,1,0)).
/// Every sup norm equals 1.
class TestBasis {
public:
    TestBasis(Vec lo, Vec hi, size_t n_max);

    size_t count() const { return ks_.size(); }
    const Vec& lo() const { return lo_; }
    const Vec& hi() const { return hi_; }
    const std::vector<int>& multi_index(size_t i) const { return ks_[i]; } // 0-based
    double sup_norm(size_t) const { return 1.0; }
    bool contains(const Vec& x, double margin = 1e-9) const;

    /// Evaluate f_{i+1}; throws OutOfBox when x leaves the box.
    double eval(size_t i, const Vec& x) const;

private:
    Vec lo_, hi_;
    std::vector<std::vector<int>> ks_;
};

/// Weighted sum in index order with compensated summation. Basis evaluation
/// throws OutOfBox on points outside the box.
double integrate_measure(const TestBasis& basis, size_t i, const DiscreteMeasure& mu);
double integrate_measure(const std::function<double(const Vec&)>& f,
                         const DiscreteMeasure& mu);

/// Truncated weak* distance: sum_{i<=n} |mu(f_i) - nu(f_i)| / 2^i with the
/// tail bound 2^{-(n-1)}; the full metric lies in [value, value + tail].
struct DmResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::vector<double> per_term; // the n summed terms
};
DmResult dm_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     const TestBasis& basis, size_t n);

/// Deviations of running time-averages along the segment from the reference
/// integrals, for f_1..f_n. T1 is the first prefix time at which all n
/// deviations sit below the threshold; last_violation the latest time any of
/// them exceeded it (-inf when none ever did).
struct BirkhoffReport {
    std::vector<double> final_deviation;
    double T1 = -1.0; // -1: never reached
    double last_violation = -std::numeric_limits<double>::infinity();
    double threshold = 0.0;
};
BirkhoffReport birkhoff_check(const OrbitSegment& segment, const DiscreteMeasure& mu_ref,
                              const TestBasis& basis, size_t n, double threshold);

/// Threshold of the per-function Birkhoff bound for accuracy eps and n test
/// functions: (eps / 4n) * min_i 2^i ||f_i|| (= eps/(2n) for this basis).
double birkhoff_threshold(double eps, size_t n);

} // namespace sflow
