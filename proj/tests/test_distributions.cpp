#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "evi/distributions.hpp"
#include "evi/errors.hpp"

using namespace evi;

namespace {

const DistributionSpec kAllFamilies[] = {
    DistributionSpec::weibull_m(-1.0),
    DistributionSpec::weibull_m(0.0),
    DistributionSpec::weibull_m(0.5),
    DistributionSpec::burr(1.0, 1.0, 1.0),
    DistributionSpec::frechet(3.0),
    DistributionSpec::weibull(1.0, 0.5),
    DistributionSpec::standard_normal(),
    DistributionSpec::reversed_burr(1.0, 1.0, 1.0, 10.0),
};

// Inverts the CDF by bisection, independent of the closed-form quantile.
double quantile_by_bisection(const DistributionSpec& spec, double p, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(spec, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("cdf spot values") {
    CHECK(cdf(DistributionSpec::frechet(3.0), 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(cdf(DistributionSpec::burr(1, 1, 1), 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cdf(DistributionSpec::weibull_m(-1.0), 0.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    // Gumbel limit at xi = 0.
    CHECK(cdf(DistributionSpec::weibull_m(0.0), 0.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    // Outside support.
    CHECK(cdf(DistributionSpec::frechet(1.0), -1.0) == 0.0);
    CHECK(cdf(DistributionSpec::weibull_m(-1.0), 2.0) == 1.0);
    CHECK(cdf(DistributionSpec::reversed_burr(1, 1, 1, 10.0), 10.0) == 1.0);
}

TEST_CASE("quantile spot values") {
    CHECK(quantile(DistributionSpec::frechet(2.0), std::exp(-1.0)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(quantile(DistributionSpec::weibull_m(-1.0), std::exp(-1.0)) ==
          doctest::Approx(0.0).epsilon(1e-13));
    CHECK_THROWS_AS(quantile(DistributionSpec::frechet(1.0), 0.0), DomainError);
    CHECK_THROWS_AS(quantile(DistributionSpec::frechet(1.0), 1.0), DomainError);
}

TEST_CASE("reversed Burr quantile matches bisection oracle") {
    const auto spec = DistributionSpec::reversed_burr(1.0, 1.0, 1.0, 10.0);
    for (double p : {0.1, 0.5, 0.9, 0.999}) {
        const double oracle = quantile_by_bisection(spec, p, -1e8, 10.0 - 1e-12);
        CHECK(quantile(spec, p) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("cdf-quantile round trip across families") {
    for (const auto& spec : kAllFamilies) {
        for (double p : {1e-6, 0.01, 0.5, 0.99, 1.0 - 1e-6}) {
            CHECK(std::fabs(cdf(spec, quantile(spec, p)) - p) <= 1e-9);
        }
    }
}

TEST_CASE("quantile is strictly increasing") {
    for (const auto& spec : kAllFamilies) {
        double prev = quantile(spec, 0.5e-3);
        for (int i = 1; i < 1000; ++i) {
            const double p = (i + 0.5) / 1000.0;
            const double q = quantile(spec, p);
            CHECK(q > prev);
            prev = q;
        }
    }
}

TEST_CASE("true xi per family") {
    CHECK(true_xi(DistributionSpec::burr(1, 1, 1)) == 1.0);
    CHECK(true_xi(DistributionSpec::reversed_burr(1.0, 0.5, 2.0, 10.0)) ==
          doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(true_xi(DistributionSpec::standard_normal()) == 0.0);
    CHECK(true_xi(DistributionSpec::weibull(2.0, 3.0)) == 0.0);
    CHECK(true_xi(DistributionSpec::weibull_m(-0.25)) == -0.25);
    CHECK(true_xi(DistributionSpec::frechet(3.0)) == 3.0);
}

TEST_CASE("sampling is deterministic per (seed, stream)") {
    const auto spec = DistributionSpec::burr(1, 1, 1);
    const auto a = sample(spec, 100, SeededStream(123, 7));
    const auto b = sample(spec, 100, SeededStream(123, 7));
    const auto c = sample(spec, 100, SeededStream(123, 8));
    CHECK(a.values() == b.values());
    CHECK(a.values() != c.values());
}

TEST_CASE("sampler empirical CDF matches analytic CDF") {
    // KS at the 1% level: 1.63/sqrt(n).
    const std::size_t n = 10000;
    const double threshold = 1.63 / std::sqrt(static_cast<double>(n));
    const auto spec = DistributionSpec::frechet(1.0);
    const auto s = sample(spec, n, SeededStream(2024, 0));
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(spec, s.values()[i]);
        ks = std::max(ks, std::fabs((i + 1.0) / n - f));
        ks = std::max(ks, std::fabs(static_cast<double>(i) / n - f));
    }
    CHECK(ks < threshold);
    CHECK(ks < 0.02);
}

TEST_CASE("draws respect the support") {
    const auto rb = sample(DistributionSpec::reversed_burr(1, 1, 1, 10.0), 5000,
                           SeededStream(5, 0));
    CHECK(rb.upper_order_stat(1) < 10.0);

    const auto wm = sample(DistributionSpec::weibull_m(-1.0), 5000, SeededStream(5, 1));
    CHECK(wm.upper_order_stat(1) <= 1.0);

    const auto fr = sample(DistributionSpec::frechet(2.0), 5000, SeededStream(5, 2));
    CHECK(fr.values().front() > 0.0);

    const auto br = sample(DistributionSpec::burr(1, 1, 1), 5000, SeededStream(5, 3));
    CHECK(br.values().front() > 0.0);
}

TEST_CASE("spec parsing") {
    const auto f = DistributionSpec::parse("frechet(xi=3)");
    CHECK(f.family == Family::Frechet);
    CHECK(f.xi == 3.0);

    const auto b = DistributionSpec::parse("burr(w=1, tau=0.5, lambda=2)");
    CHECK(b.tau == 0.5);
    CHECK(b.lambda == 2.0);

    CHECK(DistributionSpec::parse("normal").family == Family::StandardNormal);
    CHECK(DistributionSpec::parse("reversed_burr(tau=1,lambda=1,x_f=10)").x_f == 10.0);

    CHECK_THROWS_AS(DistributionSpec::parse("cauchy(a=1)"), ConfigError);
    CHECK_THROWS_AS(DistributionSpec::parse("frechet(xi=-1)"), ConfigError);
    CHECK_THROWS_AS(DistributionSpec::parse("burr(tau=1)"), ConfigError);
}
