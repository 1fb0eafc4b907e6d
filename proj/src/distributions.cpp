#include "evi/distributions.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "evi/core_math.hpp"
#include "evi/errors.hpp"

namespace evi {

DistributionSpec DistributionSpec::weibull_m(double xi) {
    DistributionSpec s;
    s.family = Family::WeibullM;
    s.xi = xi;
    return s;
}

DistributionSpec DistributionSpec::burr(double w, double tau, double lambda) {
    if (w <= 0 || tau <= 0 || lambda <= 0) {
        throw ConfigError("burr: w, tau, lambda must be > 0");
    }
    DistributionSpec s;
    s.family = Family::Burr;
    s.w = w;
    s.tau = tau;
    s.lambda = lambda;
    return s;
}

DistributionSpec DistributionSpec::frechet(double xi) {
    if (xi <= 0) {
        throw ConfigError("frechet: xi must be > 0");
    }
    DistributionSpec s;
    s.family = Family::Frechet;
    s.xi = xi;
    return s;
}

DistributionSpec DistributionSpec::weibull(double lambda, double tau) {
    if (lambda <= 0 || tau <= 0) {
        throw ConfigError("weibull: lambda, tau must be > 0");
    }
    DistributionSpec s;
    s.family = Family::Weibull;
    s.lambda = lambda;
    s.tau = tau;
    return s;
}

DistributionSpec DistributionSpec::standard_normal() {
    DistributionSpec s;
    s.family = Family::StandardNormal;
    return s;
}

DistributionSpec DistributionSpec::reversed_burr(double w, double tau, double lambda,
                                                 double x_f) {
    if (w <= 0 || tau <= 0 || lambda <= 0) {
        throw ConfigError("reversed_burr: w, tau, lambda must be > 0");
    }
    DistributionSpec s;
    s.family = Family::ReversedBurr;
    s.w = w;
    s.tau = tau;
    s.lambda = lambda;
    s.x_f = x_f;
    return s;
}

namespace {

std::string family_name(Family f) {
    switch (f) {
        case Family::WeibullM: return "weibull_m";
        case Family::Burr: return "burr";
        case Family::Frechet: return "frechet";
        case Family::Weibull: return "weibull";
        case Family::StandardNormal: return "normal";
        case Family::ReversedBurr: return "reversed_burr";
    }
    return "?";
}

std::string format_param(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

DistributionSpec DistributionSpec::parse(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    std::string name = t;
    std::map<std::string, double> params;
    const auto open = t.find('(');
    if (open != std::string::npos) {
        if (t.back() != ')') {
            throw ConfigError("bad distribution spec: " + text);
        }
        name = t.substr(0, open);
        const std::string body = t.substr(open + 1, t.size() - open - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("bad parameter '" + item + "' in: " + text);
            }
            try {
                params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw ConfigError("bad parameter value in '" + item + "'");
            }
        }
    }
    auto need = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) {
            throw ConfigError("distribution '" + name + "' needs parameter '" + key + "'");
        }
        return it->second;
    };
    auto opt = [&](const std::string& key, double def) {
        auto it = params.find(key);
        return it == params.end() ? def : it->second;
    };
    if (name == "weibull_m" || name == "weibullm") {
        return weibull_m(need("xi"));
    }
    if (name == "burr") {
        return burr(opt("w", 1.0), need("tau"), need("lambda"));
    }
    if (name == "frechet") {
        return frechet(need("xi"));
    }
    if (name == "weibull") {
        return weibull(need("lambda"), need("tau"));
    }
    if (name == "normal" || name == "standard_normal") {
        return standard_normal();
    }
    if (name == "reversed_burr" || name == "reversedburr") {
        return reversed_burr(opt("w", 1.0), need("tau"), need("lambda"), need("x_f"));
    }
    throw ConfigError("unknown distribution family: " + name);
}

std::string DistributionSpec::to_string() const {
    switch (family) {
        case Family::WeibullM:
            return "weibull_m(xi=" + format_param(xi) + ")";
        case Family::Burr:
            return "burr(w=" + format_param(w) + ",tau=" + format_param(tau) +
                   ",lambda=" + format_param(lambda) + ")";
        case Family::Frechet:
            return "frechet(xi=" + format_param(xi) + ")";
        case Family::Weibull:
            return "weibull(lambda=" + format_param(lambda) + ",tau=" + format_param(tau) +
                   ")";
        case Family::StandardNormal:
            return "normal";
        case Family::ReversedBurr:
            return "reversed_burr(w=" + format_param(w) + ",tau=" + format_param(tau) +
                   ",lambda=" + format_param(lambda) + ",x_f=" + format_param(x_f) + ")";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    // Decorrelate streams by running the mixer over both identifiers.
    std::uint64_t s = master_seed;
    (void)splitmix64(s);
    s ^= stream_index * kGolden;
    (void)splitmix64(s);
    state_ = s;
}

std::uint64_t SeededStream::next_u64() { return splitmix64(state_); }

double SeededStream::next_open01() {
    // 53 random bits shifted to the open interval (0, 1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double cdf(const DistributionSpec& spec, double x) {
    switch (spec.family) {
        case Family::WeibullM: {
            const double xi = spec.xi;
            if (xi == 0.0) {
                return std::exp(-std::exp(-x));
            }
            const double z = 1.0 + xi * x;
            if (z <= 0.0) {
                return xi > 0.0 ? 0.0 : 1.0;
            }
            return std::exp(-std::pow(z, -1.0 / xi));
        }
        case Family::Burr: {
            if (x <= 0.0) return 0.0;
            return 1.0 - std::pow(spec.w / (spec.w + std::pow(x, spec.tau)), spec.lambda);
        }
        case Family::Frechet: {
            if (x <= 0.0) return 0.0;
            return std::exp(-std::pow(x, -1.0 / spec.xi));
        }
        case Family::Weibull: {
            if (x <= 0.0) return 0.0;
            return -std::expm1(-spec.lambda * std::pow(x, spec.tau));
        }
        case Family::StandardNormal:
            return normal_cdf(x);
        case Family::ReversedBurr: {
            if (x >= spec.x_f) return 1.0;
            const double d = std::pow(spec.x_f - x, -spec.tau);
            return 1.0 - std::pow(spec.w / (spec.w + d), spec.lambda);
        }
    }
    throw DomainError("cdf: unknown family");
}

double quantile(const DistributionSpec& spec, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("quantile: p must be in (0, 1), got " + std::to_string(p));
    }
    switch (spec.family) {
        case Family::WeibullM: {
            const double xi = spec.xi;
            const double ml = -std::log(p);  // (1+xi x)^{-1/xi} = -ln p
            if (xi == 0.0) {
                return -std::log(ml);
            }
            return std::expm1(-xi * std::log(ml)) / xi;
        }
        case Family::Burr: {
            const double r = std::expm1(-std::log1p(-p) / spec.lambda);
            return std::pow(spec.w * r, 1.0 / spec.tau);
        }
        case Family::Frechet:
            return std::pow(-std::log(p), -spec.xi);
        case Family::Weibull:
            return std::pow(-std::log1p(-p) / spec.lambda, 1.0 / spec.tau);
        case Family::StandardNormal:
            return normal_quantile(p);
        case Family::ReversedBurr: {
            const double r = std::expm1(-std::log1p(-p) / spec.lambda);
            return spec.x_f - std::pow(spec.w * r, -1.0 / spec.tau);
        }
    }
    throw DomainError("quantile: unknown family");
}

double true_xi(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::WeibullM: return spec.xi;
        case Family::Burr: return 1.0 / (spec.lambda * spec.tau);
        case Family::Frechet: return spec.xi;
        case Family::Weibull: return 0.0;
        case Family::StandardNormal: return 0.0;
        case Family::ReversedBurr: return -1.0 / (spec.lambda * spec.tau);
    }
    throw DomainError("true_xi: unknown family");
}

OrderedSample sample(const DistributionSpec& spec, std::size_t n, SeededStream stream) {
    if (n < 2) {
        throw ConfigError("sample: n must be >= 2");
    }
    std::vector<double> data(n);
    for (std::size_t i = 0; i < n; ++i) {
        data[i] = quantile(spec, stream.next_open01());
    }
    return OrderedSample::from_raw(std::move(data));
}

}  // namespace evi
