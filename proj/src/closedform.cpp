#include "infoacq/closedform.hpp"

#include <cmath>

#include "infoacq/errors.hpp"
#include "infoacq/rootfind.hpp"

namespace infoacq {

namespace {

void require_truncated_linear(const CostModel& cost) {
    if (cost.kind() != CostModel::Kind::TruncatedLinear)
        throw ConfigError("closedform: requires the truncated-linear cost");
}

double boundary_slope(const ModelParams& p, double c, double t) {
    // delta'(t) = 1/sigma^2 - 1/(2 sqrt(2 c sigma^2 gamma (T-t)))
    const double k = 2.0 * c * p.sigma_sq() * p.gamma;
    return 1.0 / p.sigma_sq() - 0.5 / std::sqrt(k * (p.horizon - t));
}

}  // namespace

double free_boundary(const ModelParams& params, const CostModel& cost, double t) {
    params.validate();
    require_truncated_linear(cost);
    const double T = params.horizon;
    const double s2 = params.sigma_sq();
    return -(T - t) / s2 - 1.0 / params.sigma0_sq() +
           std::sqrt((T - t) / (2.0 * cost.c() * s2 * params.gamma));
}

FreeBoundarySolution switching_time(const ModelParams& params, const CostModel& cost) {
    params.validate();
    require_truncated_linear(cost);
    FreeBoundarySolution out;
    out.params = params;
    out.c = cost.c();
    out.beta = cost.beta();
    const double slope = 1.0 / params.sigma_sq() + cost.beta() * cost.beta();
    // g(t) = t (1/sigma^2 + beta^2) - delta(t): strictly increasing since
    // delta' < 1/sigma^2 < slope; g(T) > 0 always.
    auto g = [&](double t) { return t * slope - free_boundary(params, cost, t); };
    if (g(0.0) >= 0.0) {
        out.t_star = 0.0;
        out.has_acquisition = false;
        return out;
    }
    out.t_star = bisect(g, 0.0, params.horizon, 1e-14);
    out.has_acquisition = true;
    return out;
}

ValueSurface::ValueSurface(const ModelParams& params, const CostModel& cost)
    : params_(params), kernel_(params), c_(cost.c()), beta_(cost.beta()) {
    require_truncated_linear(cost);
    fb_ = switching_time(params, cost);
}

// log/H branch, valid on z >= max(delta(t), 0).
ValueSurface::PBranch ValueSurface::p_right(double t, double z) const {
    const double T = params_.horizon;
    const double s2 = kernel_.sigma_sq();
    const double s02 = kernel_.sigma0_sq();
    const double mu0 = kernel_.mu0();
    const double H = kernel_.H(t, z);
    const double H_z = -s02 * H * H;
    const double H_t = (s02 / s2) * H * H;
    const double A = mu0 * mu0 * z + (mu0 * mu0 - s02) / s2 * (T - t);
    const double A_t = -(mu0 * mu0 - s02) / s2;
    PBranch out;
    out.P = 0.5 * std::log(H) - 0.5 * H * A;
    out.P_z = 0.5 * H_z / H - 0.5 * H_z * A - 0.5 * H * mu0 * mu0;
    out.P_t = 0.5 * H_t / H - 0.5 * H_t * A - 0.5 * H * A_t;
    return out;
}

ValueSurface::PBranch ValueSurface::p_branch(double t, double z) const {
    if (z < 0.0) throw std::domain_error("coefficient P: z must be >= 0");
    const double T = params_.horizon;
    const double s2 = kernel_.sigma_sq();
    const double s02 = kernel_.sigma0_sq();
    const double mu0 = kernel_.mu0();
    const double gamma = params_.gamma;
    const double delta_t = (t < T) ? free_boundary(params_, CostModel::truncated_linear(c_, beta_), t)
                                   : -1.0 / s02;
    if (z >= delta_t || delta_t <= 0.0) return p_right(t, z);

    // Continuation branch: walk the characteristic of slope S to the boundary.
    const double S = 1.0 / s2 + beta_ * beta_;
    auto cross = [&](double t1) {
        return S * (t1 - t) + z - free_boundary(params_, CostModel::truncated_linear(c_, beta_), t1);
    };
    // cross(t) = z - delta(t) < 0 here; cross(T) = S (T-t) + z + 1/sigma0^2 > 0.
    const double t1 = bisect(cross, t, T, 1e-14);
    const double d1 = free_boundary(params_, CostModel::truncated_linear(c_, beta_), t1);
    const double dp1 = boundary_slope(params_, c_, t1);

    const double H = kernel_.H(t, z);
    const double H_z = -s02 * H * H;
    const double H_t = (s02 / s2) * H * H;
    const double H1 = kernel_.H(t1, d1);
    const double H1_prime = (s02 / s2) * H1 * H1 - s02 * H1 * H1 * dp1;  // d/dt1 H(t1, delta(t1))

    const double K = (beta_ * beta_ + 1.0 / s2) / (2.0 * beta_ * beta_);
    const double m_ratio = mu0 * mu0 / (2.0 * s02);
    const PBranch r1 = p_right(t1, d1);
    const double p1 = r1.P;
    const double p1_prime = r1.P_t + r1.P_z * dp1;

    PBranch out;
    out.P = p1 + beta_ * beta_ * c_ * gamma * (t1 - t) - m_ratio * (H1 - H) -
            K * (std::log(H1) - std::log(H));
    const double W_prime =
        p1_prime + beta_ * beta_ * c_ * gamma - m_ratio * H1_prime - K * H1_prime / H1;
    const double dt1_dz = -1.0 / (S - dp1);
    const double dt1_dt = S / (S - dp1);
    out.P_z = W_prime * dt1_dz + m_ratio * H_z + K * H_z / H;
    out.P_t = W_prime * dt1_dt - beta_ * beta_ * c_ * gamma + m_ratio * H_t + K * H_t / H;
    return out;
}

double coefficient_P(const ModelParams& params, const CostModel& cost, double t, double z) {
    return ValueSurface(params, cost).h(t, 0.0, z);  // h(t,0,z) = P(t,z)
}

double ValueSurface::h(double t, double y, double z) const {
    const double H = kernel_.H(t, z);
    const double psi = kernel_.mu0() * y + 0.5 * kernel_.sigma0_sq() * y * y;
    return p_branch(t, z).P + H * psi;
}

double ValueSurface::value(double t, double x, double y, double z) const {
    return -std::exp(-params_.gamma * x + h(t, y, z)) / params_.gamma;
}

SurfacePartials ValueSurface::partials(double t, double x, double y, double z) const {
    const double s2 = kernel_.sigma_sq();
    const double s02 = kernel_.sigma0_sq();
    const double mu0 = kernel_.mu0();
    const double gamma = params_.gamma;
    const double H = kernel_.H(t, z);
    const double H_z = -s02 * H * H;
    const double H_t = (s02 / s2) * H * H;
    const double psi = mu0 * y + 0.5 * s02 * y * y;
    const PBranch pb = p_branch(t, z);

    const double h_val = pb.P + H * psi;
    const double h_y = H * (mu0 + s02 * y);
    const double h_yy = H * s02;
    const double h_z = pb.P_z + H_z * psi;
    const double h_t = pb.P_t + H_t * psi;

    SurfacePartials out;
    out.V = -std::exp(-gamma * x + h_val) / gamma;
    out.V_x = -gamma * out.V;
    out.V_xx = gamma * gamma * out.V;
    out.V_y = out.V * h_y;
    out.V_yy = out.V * (h_yy + h_y * h_y);
    out.V_xy = -gamma * out.V * h_y;
    out.V_z = out.V * h_z;
    out.V_t = out.V * h_t;
    return out;
}

double ValueSurface::regime_indicator(double t, double z) const {
    const double H = kernel_.H(t, z);
    const double s02 = kernel_.sigma0_sq();
    const double mu0 = kernel_.mu0();
    return p_branch(t, z).P_z + 0.5 * s02 * H + 0.5 * mu0 * mu0 * H * H + c_ * params_.gamma;
}

double ValueSurface::hjb_residual(double t, double x, double y, double z) const {
    const SurfacePartials d = partials(t, x, y, z);
    const double s2 = kernel_.sigma_sq();
    const double cross = d.V_xy * d.V_xy / (2.0 * s2 * d.V_xx);
    const double T = params_.horizon;
    const double delta_t =
        (t < T) ? free_boundary(params_, CostModel::truncated_linear(c_, beta_), t) : -1.0;
    if (z >= delta_t || delta_t <= 0.0) {
        return d.V_t + (d.V_z + 0.5 * d.V_yy) / s2 - cross;
    }
    const double b2 = beta_ * beta_;
    return d.V_t + (1.0 / s2 + b2) * (d.V_z + 0.5 * d.V_yy) - cross - c_ * b2 * d.V_x;
}

FeedbackControls feedback_controls(const ModelParams& params, const CostModel& cost, double t,
                                   double y, double z) {
    require_truncated_linear(cost);
    const FreeBoundarySolution fb = switching_time(params, cost);
    const GaussKernel kernel(params);
    FeedbackControls out;
    out.theta = (fb.has_acquisition && t <= fb.t_star) ? cost.beta() : 0.0;
    out.pi = (params.mu0 + params.sigma0_sq() * y) * kernel.H(t, z) /
             (params.sigma_sq() * params.gamma);
    return out;
}

}  // namespace infoacq
