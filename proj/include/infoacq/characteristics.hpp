#pragma once

#include <vector>

#include "infoacq/model.hpp"
#include "infoacq/strategy_path.hpp"

namespace infoacq {

// One characteristic curve of the time-reversed Hamilton-Jacobi equation,
// integrated with fixed-step classical 4th-order steps from (s=0, u0).
// Nodes may be stored at a stride of the integration grid; values between
// nodes are cubic Hermite using the stored ODE derivatives.
class CharCurve {
  public:
    double u0 = 0.0;
    double ds = 0.0;           // spacing of stored nodes
    std::size_t n_valid = 0;   // stored nodes before the curve left its domain
    std::vector<double> gamma_u;  // nonincreasing, gamma_u[0] = 0
    std::vector<double> u;        // nonincreasing, u[0] = u0
    std::vector<double> value;    // accumulated integral of the value equation
    std::vector<double> d_gamma_u, d_u, d_value;  // ODE right-hand sides at nodes

    double s_max() const { return ds * static_cast<double>(n_valid - 1); }
    bool alive_at(double s) const { return s <= s_max() + 1e-15; }
    double gamma_u_at(double s) const;
    double u_at(double s) const;
    double value_at(double s) const;

  private:
    double hermite(const std::vector<double>& f, const std::vector<double>& d, double s) const;
};

// Integrates Hamilton's ODE (reduced scalar form plus the u and value
// quadratures) from height u0 over s in [0, s_end]; s_end defaults to T.
CharCurve hamilton_ode(const ModelParams& params, const CostModel& cost, double u0, int n_steps,
                       double s_end = -1.0);

// Conserved quantity along a curve:
// f(s) = ktilde*(gamma_u(s)) + (sigma0^2/(2 sigma^2)) (1/(sigma0^2 u(s)+1) - 1/(sigma0^2 u0+1));
// returns max |f| over stored nodes (integrator diagnostic, ~1e-8 or better).
double conserved_defect(const ModelParams& params, const CostModel& cost, const CharCurve& curve);

// The unique u0 whose curve passes through (s_rev, u), by bisection on u0
// with the intermediate-value bracket [0, u + M1 + M2]; stops when
// |u^{u0}(s_rev) - u| < 1e-10 (at most 200 iterations).
double shoot_u0(const ModelParams& params, const CostModel& cost, double s_rev, double u,
                int n_steps = 4096);

// Gamma(t,u) and Gamma_u(t,u) assembled from an eagerly built family of
// characteristic curves (uniform in u0), with the time reversal s = T - t.
// Immutable after construction; const queries are safe from any thread.
class GammaField {
  public:
    struct Options {
        int n_integration = 4096;  // fixed integration steps per curve over [0,T]
        int store_stride = 16;     // node storage stride
        double u0_spacing = 1.0 / 32.0;
        double u_cap = -1.0;  // default: 2T/sigma^2 + T*(k')^{-1}(sigma0^4 T/(2 sigma^2 gamma)) + 10
    };

    GammaField(const ModelParams& params, const CostModel& cost, Options opts = {});

    double gamma(double t, double u) const;
    double gamma_u(double t, double u) const;
    // Initial height of the characteristic through (t,u), by local inverse
    // interpolation across the curve family.
    double find_u0(double t, double u) const;

    double u_cap() const { return u_cap_; }
    double horizon() const { return T_; }
    const std::vector<CharCurve>& curves() const { return curves_; }

  private:
    struct Interp {
        double g, val, u0;
    };
    Interp query(double s, double u) const;

    double T_;
    double mu0_const_;  // -mu0^2 / (2 sigma0^2)
    double u_cap_;
    std::vector<CharCurve> curves_;
};

struct PathOptions {
    int n_steps = 4096;
    GammaField::Options field;
};

// Optimal schedule: 4th-order integration of the state equation
// dZ = (1/sigma^2 + (k')^{-1}(-Gamma_u(t, Z + (T-t)/sigma^2)/gamma)) dt,
// emitting theta^2 through the marginal-cost inverse.
StrategyPath optimal_theta_path(const ModelParams& params, const CostModel& cost,
                                PathOptions opts = {});

// b -> 0 limit for a Power base cost with p > 2: solves with k + b x^2 for
// each b in the decreasing sequence, accepts once two successive paths agree
// to 1e-4 sup-norm on [0, T - 0.05], and returns the later path.
StrategyPath regularized_limit(const ModelParams& params, const CostModel& base_cost,
                               const std::vector<double>& b_sequence, PathOptions opts = {});

// Per-pair sup-norm gaps (diagnostics for the limit construction).
std::vector<double> regularized_gaps(const ModelParams& params, const CostModel& base_cost,
                                     const std::vector<double>& b_sequence, PathOptions opts = {});

}  // namespace infoacq
