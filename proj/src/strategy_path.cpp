#include "infoacq/strategy_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "infoacq/errors.hpp"

namespace infoacq {

double StrategyPath::theta_sq_at(double t) const {
    if (times.empty()) return 0.0;
    if (t <= times.front()) return theta_sq.front();
    if (t >= times.back()) return theta_sq.back();
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - times.begin());
    const double t0 = times[j - 1], t1 = times[j];
    const double w = (t - t0) / (t1 - t0);
    return (1.0 - w) * theta_sq[j - 1] + w * theta_sq[j];
}

namespace {

StrategyPath from_schedule(const ModelParams& params, const std::vector<double>& times,
                           const std::vector<double>& theta_sq, const std::string& tag) {
    StrategyPath p;
    p.times = times;
    p.theta_sq = theta_sq;
    p.solver_tag = tag;
    p.Z.resize(times.size());
    p.u.resize(times.size());
    const double inv_s2 = 1.0 / params.sigma_sq();
    double Z = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        p.Z[i] = Z;
        p.u[i] = Z + (params.horizon - times[i]) * inv_s2;
        if (i + 1 < times.size()) Z += (inv_s2 + theta_sq[i]) * (times[i + 1] - times[i]);
    }
    return p;
}

}  // namespace

StrategyPath zero_schedule(const ModelParams& params, int n_steps, const std::string& tag) {
    params.validate();
    std::vector<double> times(n_steps + 1), th(n_steps + 1, 0.0);
    for (int i = 0; i <= n_steps; ++i) times[i] = params.horizon * i / n_steps;
    return from_schedule(params, times, th, tag);
}

StrategyPath scale_theta(const ModelParams& params, const StrategyPath& path, double factor) {
    std::vector<double> th(path.theta_sq.size());
    for (std::size_t i = 0; i < th.size(); ++i) th[i] = factor * factor * path.theta_sq[i];
    return from_schedule(params, path.times, th, path.solver_tag + "-x" + std::to_string(factor));
}

StrategyPath truncated_linear_schedule(const ModelParams& params, double beta, double t_star,
                                       int n_steps, const std::string& tag) {
    params.validate();
    std::vector<double> times(n_steps + 1), th(n_steps + 1);
    for (int i = 0; i <= n_steps; ++i) {
        times[i] = params.horizon * i / n_steps;
        th[i] = (times[i] <= t_star) ? beta * beta : 0.0;
    }
    return from_schedule(params, times, th, tag);
}

double sup_distance(const StrategyPath& a, const StrategyPath& b, double t_lo, double t_hi) {
    std::vector<double> grid;
    grid.reserve(a.times.size() + b.times.size());
    for (double t : a.times)
        if (t >= t_lo && t <= t_hi) grid.push_back(t);
    for (double t : b.times)
        if (t >= t_lo && t <= t_hi) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    double sup = 0.0;
    for (double t : grid) sup = std::max(sup, std::abs(a.theta_sq_at(t) - b.theta_sq_at(t)));
    return sup;
}

std::string format_sig17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const StrategyPath& path, std::ostream& os) {
    os << "t,theta_sq,Z,u,solver\n";
    for (std::size_t i = 0; i < path.times.size(); ++i) {
        os << format_sig17(path.times[i]) << ',' << format_sig17(path.theta_sq[i]) << ','
           << format_sig17(path.Z[i]) << ',' << format_sig17(path.u[i]) << ',' << path.solver_tag
           << '\n';
    }
}

}  // namespace infoacq
