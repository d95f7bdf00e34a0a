#include "infoacq/model.hpp"

#include <cmath>
#include <sstream>

#include "infoacq/errors.hpp"
#include "infoacq/rootfind.hpp"

namespace infoacq {

namespace {

// x^p with fast paths for the exponents the solvers actually use.
double pow_fast(double x, double p) {
    if (p == 2.0) return x * x;
    if (p == 3.0) return x * x * x;
    if (p == 1.0) return x;
    if (p == 0.0) return 1.0;
    return std::pow(x, p);
}

}  // namespace

void ModelParams::validate() const {
    if (!(sigma0 > 0.0)) throw ConfigError("ModelParams: sigma0 must be > 0");
    if (!(sigma > 0.0)) throw ConfigError("ModelParams: sigma must be > 0");
    if (!(gamma > 0.0)) throw ConfigError("ModelParams: gamma must be > 0");
    if (!(horizon > 0.0)) throw ConfigError("ModelParams: horizon must be > 0");
}

CostModel CostModel::truncated_linear(double c, double beta) {
    if (!(c > 0.0) || !(beta > 0.0)) throw ConfigError("truncated_linear: need c > 0 and beta > 0");
    CostModel k;
    k.kind_ = Kind::TruncatedLinear;
    k.c_ = c;
    k.beta_ = beta;
    return k;
}

CostModel CostModel::power(double c, double p) {
    if (!(c > 0.0)) throw ConfigError("power: need c > 0");
    if (!(p >= 2.0)) throw ConfigError("power: need exponent p >= 2");
    CostModel k;
    k.kind_ = Kind::Power;
    k.c_ = c;
    k.p_ = p;
    return k;
}

CostModel CostModel::regularized(const CostModel& base, double b) {
    if (base.kind_ != Kind::Power) throw ConfigError("regularized: base must be a Power cost");
    if (!(b >= 0.0)) throw ConfigError("regularized: need b >= 0");
    CostModel k = base;
    k.kind_ = Kind::Regularized;
    k.b_ = b;
    return k;
}

CostValue CostModel::eval(double x) const {
    if (x < 0.0) throw std::domain_error("cost eval: x must be >= 0");
    switch (kind_) {
        case Kind::TruncatedLinear:
            if (x > beta_ * beta_) return CostValue{0.0, false};
            return CostValue{c_ * x, true};
        case Kind::Power:
            return CostValue{c_ * pow_fast(x, p_), true};
        case Kind::Regularized:
            return CostValue{c_ * pow_fast(x, p_) + b_ * x * x, true};
    }
    return {};
}

double CostModel::eval_smooth(double x) const {
    const CostValue v = eval(x);
    if (!v.finite) throw ConfigError("eval_smooth: cost is infinite here");
    return v.value;
}

double CostModel::deriv(double x) const {
    if (x < 0.0) throw std::domain_error("cost deriv: x must be >= 0");
    switch (kind_) {
        case Kind::TruncatedLinear:
            throw ConfigError("deriv: not defined for the truncated-linear cost");
        case Kind::Power:
            return c_ * p_ * pow_fast(x, p_ - 1.0);
        case Kind::Regularized:
            return c_ * p_ * pow_fast(x, p_ - 1.0) + 2.0 * b_ * x;
    }
    return 0.0;
}

double CostModel::second_deriv(double x) const {
    if (x < 0.0) throw std::domain_error("cost second_deriv: x must be >= 0");
    switch (kind_) {
        case Kind::TruncatedLinear:
            throw ConfigError("second_deriv: not defined for the truncated-linear cost");
        case Kind::Power:
            return c_ * p_ * (p_ - 1.0) * pow_fast(x, p_ - 2.0);
        case Kind::Regularized:
            return c_ * p_ * (p_ - 1.0) * pow_fast(x, p_ - 2.0) + 2.0 * b_;
    }
    return 0.0;
}

double CostModel::conjugate(double y) const {
    if (y < 0.0) throw std::domain_error("conjugate: y must be >= 0");
    if (kind_ == Kind::TruncatedLinear)
        throw ConfigError("conjugate: truncated-linear handled by the free-boundary solver");
    if (y == 0.0) return 0.0;  // sup at x = 0 since k >= 0 = k(0)
    if (kind_ == Kind::Power) {
        // maximizer x = (y / (c p))^{1/(p-1)}
        const double x = std::pow(y / (c_ * p_), 1.0 / (p_ - 1.0));
        return x * y - c_ * pow_fast(x, p_);
    }
    const double x = marginal_inverse(y);
    return x * y - eval_smooth(x);
}

double CostModel::marginal_inverse(double y) const {
    if (y < 0.0) throw std::domain_error("marginal_inverse: y must be >= 0");
    switch (kind_) {
        case Kind::TruncatedLinear:
            throw ConfigError("marginal_inverse: not defined for the truncated-linear cost");
        case Kind::Power:
            if (y == 0.0) return 0.0;
            if (p_ == 2.0) return y / (2.0 * c_);
            return std::pow(y / (c_ * p_), 1.0 / (p_ - 1.0));
        case Kind::Regularized: {
            if (y == 0.0) return 0.0;
            return solve_increasing_from_zero([&](double x) { return deriv(x) - y; });
        }
    }
    return 0.0;
}

std::string CostModel::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::TruncatedLinear:
            os << "truncated-linear(c=" << c_ << ", beta=" << beta_ << ")";
            break;
        case Kind::Power:
            os << "power(c=" << c_ << ", p=" << p_ << ")";
            break;
        case Kind::Regularized:
            os << "regularized(c=" << c_ << ", p=" << p_ << ", b=" << b_ << ")";
            break;
    }
    return os.str();
}

GaussKernel::GaussKernel(const ModelParams& params) {
    params.validate();
    mu0_ = params.mu0;
    T_ = params.horizon;
    sigma_sq_ = params.sigma_sq();
    sigma0_sq_ = params.sigma0_sq();
    sigma0_4_ = sigma0_sq_ * sigma0_sq_;
}

double GaussKernel::H(double t, double z) const {
    const double den = sigma0_sq_ * z + (sigma0_sq_ / sigma_sq_) * (T_ - t) + 1.0;
    if (!(den > 0.0)) throw std::domain_error("kernel H: nonpositive denominator");
    return 1.0 / den;
}

double GaussKernel::F(double y, double z) const {
    const double den = z * sigma0_sq_ + 1.0;
    if (!(den > 0.0)) throw std::domain_error("kernel F: need z > -1/sigma0^2");
    const double expo = (y * y * sigma0_sq_ + 2.0 * y * mu0_ - z * mu0_ * mu0_) / (2.0 * den);
    return std::exp(expo) / std::sqrt(den);
}

GaussKernel::Moments GaussKernel::posterior(double y, double z) const {
    const double den = sigma0_sq_ * z + 1.0;
    return {(mu0_ + sigma0_sq_ * y) / den, sigma0_sq_ / den};
}

CorrelatedConjugate correlated_conjugate(const CostModel& cost, double rho, double sigma, double x) {
    if (x < 0.0) throw std::domain_error("correlated_conjugate: x must be >= 0");
    if (!(rho > 0.0 && rho < 1.0))
        throw ConfigError("correlated_conjugate: rho must lie in (0,1); negative rho by theta -> -theta");
    if (!(sigma > 0.0)) throw ConfigError("correlated_conjugate: sigma must be > 0");
    if (!cost.smooth()) throw ConfigError("correlated_conjugate: cost must be smooth");
    if (x == 0.0) return {0.0, 0.0};

    const double one_m = 1.0 - rho * rho;
    const double shift = rho / sigma;
    auto objective = [&](double th) {
        const double d = th - shift;
        return d * d * x / one_m - cost.eval_smooth(th * th);
    };
    // first-order condition; negative toward -inf, negative at 0, root < 0
    auto foc = [&](double th) { return (th - shift) * x / one_m - th * cost.deriv(th * th); };

    double lo = -1.0;
    int guard = 0;
    while (foc(lo) < 0.0) {
        lo *= 2.0;
        if (++guard > 200) throw NoConvergenceError("correlated_conjugate: bracket growth failed");
    }
    const double theta = bisect(foc, lo, 0.0, 1e-12);
    return {objective(theta), theta};
}

}  // namespace infoacq
