#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace sflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Compensated (Kahan) accumulator for long deterministic sums.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }
    KahanSum& operator+=(double x) {
        add(x);
        return *this;
    }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Smallest singular value of a matrix (the mininorm of the linear map).
double mininorm(const Mat& a);

/// Largest principal angle (radians) between the column spans of two
/// orthonormal bases with the same number of columns.
double principal_angle(const Mat& a, const Mat& b);

/// Orthonormalize the columns of `m` in order (modified Gram-Schmidt).
/// Returns false if some column drops below `tol` before normalization.
bool orthonormalize(Mat& m, double tol = 1e-13);

} // namespace sflow
