#pragma once

#include "infoacq/model.hpp"

namespace infoacq {

// Switching time t* for the truncated-linear cost: the unique time the state
// (t, Z_t) meets the free boundary, or 0 when delta(0) <= 0.
struct FreeBoundarySolution {
    ModelParams params;
    double c = 0.0;
    double beta = 0.0;
    double t_star = 0.0;
    bool has_acquisition = false;
};

// delta(t) = -(T-t)/sigma^2 - 1/sigma0^2 + sqrt((T-t) / (2 c sigma^2 gamma))
double free_boundary(const ModelParams& params, const CostModel& cost, double t);

FreeBoundarySolution switching_time(const ModelParams& params, const CostModel& cost);

// Branch-correct coefficient P(t,z) of the value exponent. For z >= max(delta(t),0)
// the log/H branch; below it the continuation branch through the
// characteristic-boundary intersection time t1 (bisection to 1e-12).
double coefficient_P(const ModelParams& params, const CostModel& cost, double t, double z);

struct SurfacePartials {
    double V;
    double V_t, V_x, V_xx, V_y, V_yy, V_xy, V_z;
};

// Closed-form value function V(t,x,y,z) = -(1/gamma) e^{-gamma x} e^{h(t,y,z)}
// with h = P + H (mu0 y + sigma0^2 y^2 / 2), plus hand-differentiated partials.
class ValueSurface {
  public:
    ValueSurface(const ModelParams& params, const CostModel& cost);

    double value(double t, double x, double y, double z) const;
    SurfacePartials partials(double t, double x, double y, double z) const;
    double h(double t, double y, double z) const;

    // h_z + h_yy/2 + h_y^2/2 + c*gamma, which is independent of y; zero on the
    // free boundary, <= 0 below it, >= 0 above.
    double regime_indicator(double t, double z) const;

    // Residual of the branch PDE satisfied at (t,x,y,z), assembled from the
    // analytic partials; both regimes vanish identically in exact arithmetic.
    double hjb_residual(double t, double x, double y, double z) const;

    const FreeBoundarySolution& boundary() const { return fb_; }

  private:
    struct PBranch {
        double P, P_t, P_z;
    };
    PBranch p_branch(double t, double z) const;
    PBranch p_right(double t, double z) const;

    ModelParams params_;
    GaussKernel kernel_;
    double c_, beta_;
    FreeBoundarySolution fb_;
};

struct FeedbackControls {
    double theta;  // beta on [0, t*], 0 after
    double pi;     // (1/(sigma^2 gamma)) (mu0 + sigma0^2 y) H(t,z)
};

FeedbackControls feedback_controls(const ModelParams& params, const CostModel& cost, double t,
                                   double y, double z);

}  // namespace infoacq
