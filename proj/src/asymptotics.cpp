#include "evi/asymptotics.hpp"

#include <cmath>
#include <string>

#include "evi/core_math.hpp"
#include "evi/errors.hpp"

namespace evi {

double delta(double xi) { return std::min(-xi, 0.5); }

LimitLaw LimitLaw::for_xi(double xi, double c) {
    if (!(c > 1.0)) {
        throw ConfigError("LimitLaw: c must be > 1, got " + std::to_string(c));
    }
    LawRegime regime;
    if (xi > 0.0) {
        regime = LawRegime::PositiveXi;
    } else if (xi == 0.0) {
        regime = LawRegime::ZeroXi;
    } else if (xi > -0.5) {
        regime = LawRegime::ModerateNegative;
    } else if (xi == -0.5) {
        regime = LawRegime::HalfNegative;
    } else {
        regime = LawRegime::StrongNegative;
    }
    return LimitLaw{regime, xi, c, std::pow(c, -xi) * std::sqrt(c - 1.0),
                    evi::delta(xi)};
}

double v_k(double xi, int k) {
    if (k < 2) {
        throw DomainError("v_k: k must be >= 2, got " + std::to_string(k));
    }
    const double base = phi(delta(xi), static_cast<double>(k));
    return xi >= 0.0 ? base * std::log(static_cast<double>(k)) : base;
}

double mu(double xi, double c) {
    if (!(c > 1.0)) {
        throw ConfigError("mu: c must be > 1, got " + std::to_string(c));
    }
    if (xi > 0.0) {
        return euler_gamma();
    }
    if (xi > -0.5 && xi < 0.0) {
        return -(1.0 - gamma_function(1.0 - xi)) * phi(xi, 1.0 / c) / std::log(c);
    }
    return 0.0;
}

double limit_cdf(const LimitLaw& law, double t) {
    switch (law.regime) {
        case LawRegime::PositiveXi:
            return std::exp(-std::exp(-t));
        case LawRegime::ZeroXi:
            return std::exp(-std::exp(-t / 2.0));
        case LawRegime::ModerateNegative: {
            // phi_xi(1/c) < 0 here, so the bracket decreases in t and
            // hits zero at a finite upper support endpoint.
            const double bracket = 1.0 + t * std::log(law.c) / phi(law.xi, 1.0 / law.c);
            if (bracket <= 0.0) {
                return 1.0;
            }
            return std::exp(-std::pow(bracket, -1.0 / law.xi));
        }
        case LawRegime::HalfNegative:
            throw UnsupportedLawError(
                "the xi = -1/2 limit law has no explicit closed form");
        case LawRegime::StrongNegative:
            return normal_cdf(-t * std::pow(law.c, -law.xi) * std::log(law.c) /
                              (2.0 * law.xi * law.sigma));
    }
    throw DomainError("limit_cdf: unknown regime");
}

double lemma2_ratio(const DistributionSpec& spec, double t, double x, double y) {
    if (!(t > 1.0) || !(x > 0.0) || !(y > 0.0) || y == 1.0) {
        throw DomainError("lemma2_ratio: need t > 1, x > 0, y > 0, y != 1");
    }
    if (!(t * x > 1.0) || !(t * y > 1.0)) {
        throw DomainError("lemma2_ratio: need tx > 1 and ty > 1");
    }
    const double xi = true_xi(spec);
    auto tail_quantile = [&](double v) { return quantile(spec, 1.0 - 1.0 / v); };
    const double ut = tail_quantile(t);
    const double num = tail_quantile(t * x) - ut;
    const double den = tail_quantile(t * y) - ut;
    return phi(xi, y) / phi(xi, x) * num / den;
}

}  // namespace evi
