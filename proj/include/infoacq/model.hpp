#pragma once

#include <string>

namespace infoacq {

// Market and preference constants. Units: mu0, sigma0 are 1/time, sigma is
// 1/sqrt(time), gamma is 1/wealth, horizon is time.
struct ModelParams {
    double mu0 = 0.172;
    double sigma0 = 0.121;
    double sigma = 0.192;
    double gamma = 2.0;
    double horizon = 1.0;
    double x0 = 0.0;

    double sigma_sq() const { return sigma * sigma; }
    double sigma0_sq() const { return sigma0 * sigma0; }

    // Throws ConfigError unless sigma0, sigma, gamma, horizon are all > 0.
    void validate() const;
};

// k(x) with an explicit infinity tag: the truncated-linear cost is +inf past
// beta^2 and the tag keeps that out of downstream float arithmetic.
struct CostValue {
    double value = 0.0;
    bool finite = true;
};

// Information cost function family. All evaluation points are x = theta^2 >= 0.
class CostModel {
  public:
    enum class Kind { TruncatedLinear, Power, Regularized };

    // k(x) = c x on [0, beta^2], +inf beyond.
    static CostModel truncated_linear(double c, double beta);
    // k(x) = c x^p, p >= 2.
    static CostModel power(double c, double p);
    // base (Power) plus b x^2; k''(0) = 2b.
    static CostModel regularized(const CostModel& base, double b);

    Kind kind() const { return kind_; }
    bool smooth() const { return kind_ != Kind::TruncatedLinear; }
    double c() const { return c_; }
    double beta() const { return beta_; }
    double exponent() const { return p_; }
    double reg_weight() const { return b_; }

    CostValue eval(double x) const;
    // k(x) for smooth variants (never infinite).
    double eval_smooth(double x) const;
    double deriv(double x) const;
    double second_deriv(double x) const;
    // Legendre-Fenchel transform k*(y) = sup_{x>=0} { x y - k(x) }, y >= 0.
    double conjugate(double y) const;
    // (k')^{-1}(y), y >= 0. Closed form for Power; monotone bisection to
    // 1e-12 absolute for Regularized.
    double marginal_inverse(double y) const;

    std::string describe() const;

  private:
    CostModel() = default;
    Kind kind_ = Kind::Power;
    double c_ = 0.0;
    double beta_ = 0.0;  // TruncatedLinear cap
    double p_ = 2.0;     // Power exponent
    double b_ = 0.0;     // Regularized weight
};

// Cached Gaussian-prior scalars and the closed forms shared by all solvers.
class GaussKernel {
  public:
    explicit GaussKernel(const ModelParams& params);

    // H(t,z) = 1 / (sigma0^2 z + (sigma0^2/sigma^2)(T-t) + 1)
    double H(double t, double z) const;
    // F(y,z) = (z sigma0^2 + 1)^{-1/2} exp{ (y^2 sigma0^2 + 2 y mu0 - z mu0^2)
    //                                       / (2 (z sigma0^2 + 1)) }
    double F(double y, double z) const;

    struct Moments {
        double mean;
        double variance;
    };
    // Posterior mean (mu0 + sigma0^2 y)/(sigma0^2 z + 1) and variance
    // sigma0^2/(sigma0^2 z + 1).
    Moments posterior(double y, double z) const;

    double mu0() const { return mu0_; }
    double horizon() const { return T_; }
    double sigma_sq() const { return sigma_sq_; }
    double sigma0_sq() const { return sigma0_sq_; }
    double sigma0_4() const { return sigma0_4_; }

  private:
    double mu0_, T_, sigma_sq_, sigma0_sq_, sigma0_4_;
};

struct CorrelatedConjugate {
    double value;       // sup over theta
    double theta_star;  // nonpositive maximizer
};

// Conjugate for the correlated-noise signal: value = sup_theta
// { (theta - rho/sigma)^2 x / (1 - rho^2) - k(theta^2) } with the maximizer
// found from the first-order condition by bracketed bisection (1e-12).
// Requires rho in (0,1) and smooth k with k'(+inf) = +inf.
CorrelatedConjugate correlated_conjugate(const CostModel& cost, double rho, double sigma, double x);

}  // namespace infoacq
