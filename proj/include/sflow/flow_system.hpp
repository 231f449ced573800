#pragma once

#include "sflow/types.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sflow {

/// A smooth vector field on R^d (d >= 3) with its Jacobian and the closed-form
/// list of equilibria. Evaluation is pure; instances are safe to share.
class FlowSystem {
public:
    using EvalFn = std::function<Vec(const Vec&)>;
    using JacFn = std::function<Mat(const Vec&)>;

    FlowSystem(int dim, std::string name, EvalFn eval, JacFn jac,
               std::vector<Vec> singularities);

    /// Jacobian defaults to central finite differences of `eval` with
    /// step h = max(1e-6, 1e-6*|x|).
    FlowSystem(int dim, std::string name, EvalFn eval, std::vector<Vec> singularities);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    Vec eval(const Vec& x) const { return eval_(x); }
    Mat jac(const Vec& x) const { return jac_(x); }
    /// |X(x)|; out of line so every call site computes the identical value.
    double speed(const Vec& x) const;

    const std::vector<Vec>& singularities() const { return singularities_; }
    /// Distance to the nearest listed equilibrium; +inf when the list is empty.
    double singularity_distance(const Vec& x) const;

    /// The reversed field -X (singularities unchanged).
    std::shared_ptr<FlowSystem> negated() const;

private:
    int dim_;
    std::string name_;
    EvalFn eval_;
    JacFn jac_;
    std::vector<Vec> singularities_;
};

using FlowPtr = std::shared_ptr<const FlowSystem>;

/// Lorenz system: x' = sigma(y-x), y' = x(rho-z)-y, z' = xy - beta z.
FlowPtr lorenz_system(double sigma = 10.0, double rho = 28.0, double beta = 8.0 / 3.0);

/// Hopf oracle in R^3: an attracting unit circle of period 2*pi in the plane
/// z = 0, with normal contraction rates -2 (radial) and -1 (vertical).
/// x' = x(1-x^2-y^2) - y, y' = y(1-x^2-y^2) + x, z' = -z.
FlowPtr hopf_system();

/// Builtin exemplars: Lorenz (default parameters) and the Hopf oracle.
std::vector<FlowPtr> built_in_systems();

/// User-defined system from a JSON config with keys:
///   dim (int), equations (array of expression strings over x1..xd),
///   parameters (object, optional), singularities (array of points, optional),
///   name (string, optional).
/// The Jacobian falls back to central finite differences.
FlowPtr load_system(const std::string& json_text);
FlowPtr load_system_file(const std::string& path);

/// Central finite-difference Jacobian with step h = max(1e-6, 1e-6*|x|).
Mat finite_difference_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x);

} // namespace sflow
