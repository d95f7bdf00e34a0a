#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "infoacq/model.hpp"

namespace infoacq {

// Deterministic information-acquisition schedule on a time grid, together
// with the induced state Z_t and u_t = Z_t + (T-t)/sigma^2.
struct StrategyPath {
    std::vector<double> times;     // increasing grid on [0, T]
    std::vector<double> theta_sq;  // (theta*_t)^2 >= 0
    std::vector<double> Z;         // Z(0) = 0, nondecreasing
    std::vector<double> u;         // Z + (T - t)/sigma^2
    std::string solver_tag;

    std::size_t size() const { return times.size(); }
    // Piecewise-linear sample, clamped to the grid range.
    double theta_sq_at(double t) const;
    double front_theta_sq() const { return theta_sq.empty() ? 0.0 : theta_sq.front(); }
    double back_theta_sq() const { return theta_sq.empty() ? 0.0 : theta_sq.back(); }
};

// theta^2 == 0 schedule on an n-step grid (Z grows at rate 1/sigma^2).
StrategyPath zero_schedule(const ModelParams& params, int n_steps, const std::string& tag = "zero");

// Same grid, theta scaled by `factor` (theta_sq by factor^2); Z and u rebuilt
// with the exact cell recursion.
StrategyPath scale_theta(const ModelParams& params, const StrategyPath& path, double factor);

// Truncated-linear optimal schedule: theta^2 = beta^2 on [0, t_star], 0 after.
StrategyPath truncated_linear_schedule(const ModelParams& params, double beta, double t_star,
                                       int n_steps, const std::string& tag = "closedform");

// Sup-norm distance between two schedules, sampled on the union grid
// restricted to [t_lo, t_hi].
double sup_distance(const StrategyPath& a, const StrategyPath& b, double t_lo, double t_hi);

// CSV export: header "t,theta_sq,Z,u,solver", 17 significant digits.
void write_csv(const StrategyPath& path, std::ostream& os);

// Helper shared by all CSV writers: shortest round-trip-exact decimal.
std::string format_sig17(double v);

}  // namespace infoacq
