#ifndef EVI_ASYMPTOTICS_HPP
#define EVI_ASYMPTOTICS_HPP

#include "evi/distributions.hpp"

namespace evi {

enum class LawRegime {
    PositiveXi,        // xi > 0: Gumbel
    ZeroXi,            // xi = 0: Gumbel with doubled scale
    ModerateNegative,  // -1/2 < xi < 0: reversed-Weibull type
    HalfNegative,      // xi = -1/2: limit exists but has no explicit CDF
    StrongNegative,    // xi < -1/2: Gaussian
};

// Limit distribution of V_k(xi) * (xi_hat - xi) for the root estimator,
// parameterized by the true index xi and the ratio c = k/k' > 1.
struct LimitLaw {
    LawRegime regime;
    double xi;
    double c;
    double sigma;  // c^{-xi} sqrt(c-1)
    double delta;  // min(-xi, 1/2)

    static LimitLaw for_xi(double xi, double c);
};

// delta = min(-xi, 1/2)
double delta(double xi);

// Normalizing rate V_k(xi) = phi_delta(k) * (ln k if xi >= 0, else 1).
double v_k(double xi, int k);

// Asymptotic mean of the limit law: gamma for xi > 0,
// -[1 - Gamma(1-xi)] phi_xi(1/c)/ln(c) for -1/2 < xi < 0, 0 otherwise.
double mu(double xi, double c);

// Closed-form limit CDF; throws UnsupportedLawError for the xi = -1/2 regime.
double limit_cdf(const LimitLaw& law, double t);

// Diagnostic ratio [phi_xi(y)/phi_xi(x)] (U(tx)-U(t))/(U(ty)-U(t)) with
// U(v) = quantile(1 - 1/v); tends to 1 as t grows with x -> 0, x/y -> d > 0.
double lemma2_ratio(const DistributionSpec& spec, double t, double x, double y);

}  // namespace evi

#endif  // EVI_ASYMPTOTICS_HPP
