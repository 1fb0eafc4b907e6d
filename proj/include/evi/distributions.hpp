#ifndef EVI_DISTRIBUTIONS_HPP
#define EVI_DISTRIBUTIONS_HPP

#include <cstdint>
#include <string>

#include "evi/sample.hpp"

namespace evi {

enum class Family {
    WeibullM,        // max-stable exp[-(1+xi x)^{-1/xi}], any real xi; Gumbel at xi = 0
    Burr,            // 1 - [w/(w+x^tau)]^lambda, x > 0
    Frechet,         // exp(-x^{-1/xi}), x > 0, xi > 0
    Weibull,         // 1 - exp(-lambda x^tau), x > 0
    StandardNormal,  //
    ReversedBurr,    // 1 - [w/(w+(x_F-x)^{-tau})]^lambda, x < x_F
};

struct DistributionSpec {
    Family family;
    double xi = 0.0;      // WeibullM, Frechet
    double w = 1.0;       // Burr, ReversedBurr
    double tau = 1.0;     // Burr, Weibull, ReversedBurr
    double lambda = 1.0;  // Burr, Weibull, ReversedBurr
    double x_f = 0.0;     // ReversedBurr right endpoint

    static DistributionSpec weibull_m(double xi);
    static DistributionSpec burr(double w, double tau, double lambda);
    static DistributionSpec frechet(double xi);
    static DistributionSpec weibull(double lambda, double tau);
    static DistributionSpec standard_normal();
    static DistributionSpec reversed_burr(double w, double tau, double lambda, double x_f);

    // Parses "family(name=value, ...)", e.g. "frechet(xi=3)",
    // "burr(w=1,tau=1,lambda=1)", "normal". Throws ConfigError.
    static DistributionSpec parse(const std::string& text);

    std::string to_string() const;
};

// Deterministic counter-based uniform stream: (master_seed, stream_index)
// fully determines the output sequence, so parallel replicates reproduce
// sequential runs bit for bit.
class SeededStream {
public:
    SeededStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    // Uniform draw strictly inside (0, 1).
    double next_open01();

private:
    std::uint64_t state_;
};

double cdf(const DistributionSpec& spec, double x);

// Closed-form quantiles for all families except the normal, which uses a
// rational approximation plus a Newton refinement.
double quantile(const DistributionSpec& spec, double p);

double true_xi(const DistributionSpec& spec);

// Inverse-transform sampling; bit-reproducible given (spec, n, stream).
OrderedSample sample(const DistributionSpec& spec, std::size_t n, SeededStream stream);

}  // namespace evi

#endif  // EVI_DISTRIBUTIONS_HPP
