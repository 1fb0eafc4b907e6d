// Command-line front end: estimate the extreme value index from a data
// file, run simulation studies, and check the asymptotic limit laws.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evi/asymptotics.hpp"
#include "evi/distributions.hpp"
#include "evi/errors.hpp"
#include "evi/estimators.hpp"
#include "evi/montecarlo.hpp"
#include "evi/sample.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string error_label(const evi::Error& e) {
    if (dynamic_cast<const evi::TieError*>(&e)) return "tie";
    if (dynamic_cast<const evi::RootAtInfinityError*>(&e)) return "root-at-infinity";
    if (dynamic_cast<const evi::BracketError*>(&e)) return "bracket-cap";
    if (dynamic_cast<const evi::DegenerateMomentError*>(&e)) return "degenerate-moment";
    if (dynamic_cast<const evi::DomainError*>(&e)) return "domain";
    if (dynamic_cast<const evi::ConfigError*>(&e)) return "config";
    return "error";
}

std::vector<int> parse_k_grid(const std::string& text) {
    int start = 0, stop = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> start)) throw evi::ConfigError("bad k-grid: " + text);
    if (ss >> c1 >> stop) {
        if (c1 != ':') throw evi::ConfigError("bad k-grid: " + text);
        if (ss >> c2 >> step) {
            if (c2 != ':' || step < 1) throw evi::ConfigError("bad k-grid: " + text);
        }
    } else {
        stop = start;
    }
    std::vector<int> grid;
    for (int k = start; k <= stop; k += step) grid.push_back(k);
    if (grid.empty()) throw evi::ConfigError("empty k-grid: " + text);
    return grid;
}

std::vector<evi::EstimatorKind> parse_estimators(const std::string& text) {
    if (text == "all") {
        return {evi::EstimatorKind::GG,       evi::EstimatorKind::GGStar,
                evi::EstimatorKind::Hill,     evi::EstimatorKind::Pickands,
                evi::EstimatorKind::Moment,   evi::EstimatorKind::Zipf};
    }
    std::vector<evi::EstimatorKind> kinds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) kinds.push_back(evi::estimator_from_name(item));
    }
    if (kinds.empty()) throw evi::ConfigError("no estimators in: " + text);
    return kinds;
}

// Flat `key = value` config file with '#' comments.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw evi::ConfigError("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto strip = [](const std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw evi::ConfigError("config line " + std::to_string(line_no) +
                                   ": expected key = value");
        }
        kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    return kv;
}

int cmd_estimate(const std::string& input, const std::string& format,
                 const std::string& estimator, const std::string& k_arg, double c) {
    evi::SampleFormat fmt_kind = evi::SampleFormat::Plain;
    std::string column;
    if (format.rfind("csv:", 0) == 0) {
        fmt_kind = evi::SampleFormat::CsvColumn;
        column = format.substr(4);
    } else if (format != "plain") {
        throw evi::ConfigError("unknown format: " + format);
    }

    const std::vector<evi::EstimatorKind> kinds = parse_estimators(estimator);
    const std::vector<int> ks = parse_k_grid(k_arg);
    for (int k : ks) {
        if (k < 1) throw evi::ConfigError("k must be >= 1, got " + std::to_string(k));
    }

    const evi::OrderedSample s = evi::load_sample(input, fmt_kind, column);

    std::cout << "estimator,k,k_prime,xi_hat,error\n";
    for (evi::EstimatorKind kind : kinds) {
        for (int k : ks) {
            std::string k_prime, xi_hat, err;
            try {
                evi::EstimateResult r{};
                switch (kind) {
                    case evi::EstimatorKind::GG:
                        r = evi::gg_estimate(s, evi::GGConfig::from_ratio(k, c));
                        break;
                    case evi::EstimatorKind::GGStar:
                        r = evi::gg_bias_corrected(s, evi::GGConfig::from_ratio(k, c));
                        break;
                    case evi::EstimatorKind::Hill:
                        r = evi::hill(s, k);
                        break;
                    case evi::EstimatorKind::Pickands:
                        r = evi::pickands(s, k);
                        break;
                    case evi::EstimatorKind::Moment:
                        r = evi::moment(s, k);
                        break;
                    case evi::EstimatorKind::Zipf:
                        r = evi::zipf(s, k);
                        break;
                }
                if (r.k_prime) k_prime = std::to_string(*r.k_prime);
                xi_hat = fmt(r.xi_hat);
            } catch (const evi::Error& e) {
                err = error_label(e);
            }
            std::cout << evi::estimator_name(kind) << ',' << k << ',' << k_prime << ','
                      << xi_hat << ',' << err << '\n';
        }
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& dist_arg, int n,
                 int replicates, double c, std::uint64_t seed,
                 const std::string& estimators_arg, const std::string& k_grid_arg,
                 const std::string& out_path) {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) kv = read_config_file(config_path);

    auto from_cfg = [&](const std::string& key, const std::string& inline_value) {
        if (!inline_value.empty()) return inline_value;
        auto it = kv.find(key);
        return it == kv.end() ? std::string() : it->second;
    };

    evi::ExperimentConfig cfg;
    const std::string dist = from_cfg("distribution", dist_arg);
    if (dist.empty()) throw evi::ConfigError("no distribution given");
    cfg.distribution = evi::DistributionSpec::parse(dist);

    if (n > 0) cfg.n = n;
    else if (kv.count("n")) cfg.n = std::stoi(kv.at("n"));
    if (replicates > 0) cfg.replicates = replicates;
    else if (kv.count("N")) cfg.replicates = std::stoi(kv.at("N"));
    if (c > 0) cfg.c = c;
    else if (kv.count("c")) cfg.c = std::stod(kv.at("c"));
    if (seed != 0) cfg.master_seed = seed;
    else if (kv.count("seed")) cfg.master_seed = std::stoull(kv.at("seed"));

    const std::string est = from_cfg("estimators", estimators_arg);
    cfg.estimators = parse_estimators(est.empty() ? "all" : est);

    const std::string grid = from_cfg("k_grid", k_grid_arg);
    cfg.k_grid = grid.empty()
                     ? evi::ExperimentConfig::default_k_grid(cfg.n, cfg.c, cfg.estimators)
                     : parse_k_grid(grid);

    std::cerr << "simulate: distribution=" << cfg.distribution.to_string()
              << " n=" << cfg.n << " N=" << cfg.replicates << " c=" << cfg.c
              << " seed=" << cfg.master_seed << " k_grid=[" << cfg.k_grid.front() << ".."
              << cfg.k_grid.back() << "] (" << cfg.k_grid.size() << " points)\n";

    const evi::ExperimentResult result = evi::run_experiment(cfg);
    const std::string csv = result.to_csv();
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw evi::IngestionError("cannot write: " + out_path);
        out << csv;
    }
    return 0;
}

int cmd_check_asymptotic(const std::string& dist_arg, int n, int replicates, int k,
                         double c, std::uint64_t seed, const std::string& out_path) {
    const evi::DistributionSpec spec = evi::DistributionSpec::parse(dist_arg);
    std::cerr << "check-asymptotic: distribution=" << spec.to_string() << " n=" << n
              << " N=" << replicates << " k=" << k << " c=" << c << " seed=" << seed
              << '\n';
    const evi::AsymptoticCheckResult result =
        evi::run_asymptotic_check(spec, n, replicates, k, c, seed);
    const std::string csv = result.to_csv();
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw evi::IngestionError("cannot write: " + out_path);
        out << csv;
    }
    return 0;
}

int cmd_list_distributions() {
    // Model class and beta come from the paper's rate table; shown as
    // documentation only.
    std::cout << "family          parameters              true xi      model  beta\n"
              << "weibull_m       xi                      xi           A      1\n"
              << "burr            w, tau, lambda          1/(lambda*tau)  A   1/lambda\n"
              << "frechet         xi (> 0)                xi           A      1\n"
              << "weibull         lambda, tau             0            B      1-1/tau\n"
              << "normal          (none)                  0            B      1/2\n"
              << "reversed_burr   w, tau, lambda, x_f     -1/(lambda*tau)  A  1/lambda\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extreme value index estimation and Monte Carlo validation"};
    app.require_subcommand(1);

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate xi from a data file");
    std::string input, format = "plain", estimator = "all", k_arg;
    double est_c = 4.0;
    est->add_option("--input", input, "Sample file")->required();
    est->add_option("--format", format, "plain or csv:<column>");
    est->add_option("--estimator", estimator,
                    "gg, gg_star, hill, pickands, moment, zipf, all, or a comma list");
    auto* k_opt = est->add_option("--k", k_arg, "Number of upper order statistics");
    auto* kg_opt = est->add_option("--k-grid", k_arg, "Grid start:stop:step");
    k_opt->excludes(kg_opt);
    est->add_option("--c", est_c, "Ratio k/k' for the gg family (default 4)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo simulation study");
    std::string config_path, sim_dist, sim_est, sim_grid, sim_out;
    int sim_n = 0, sim_reps = 0;
    double sim_c = 0.0;
    std::uint64_t sim_seed = 0;
    sim->add_option("--config", config_path, "key = value config file");
    sim->add_option("--distribution", sim_dist, "e.g. frechet(xi=3)");
    sim->add_option("--n", sim_n, "Sample size");
    sim->add_option("--N", sim_reps, "Replicate count");
    sim->add_option("--c", sim_c, "Ratio k/k'");
    sim->add_option("--seed", sim_seed, "Master seed");
    sim->add_option("--estimators", sim_est, "Comma list or 'all'");
    sim->add_option("--k-grid", sim_grid, "Grid start:stop:step");
    sim->add_option("--out", sim_out, "Output CSV path ('-' for stdout)");

    // check-asymptotic
    auto* chk = app.add_subcommand("check-asymptotic",
                                   "Compare standardized estimates to the limit law");
    std::string chk_dist, chk_out;
    int chk_n = 5000, chk_reps = 1000, chk_k = 500;
    double chk_c = 4.0;
    std::uint64_t chk_seed = 0;
    chk->add_option("--distribution", chk_dist, "e.g. weibull_m(xi=-1)")->required();
    chk->add_option("--n", chk_n, "Sample size");
    chk->add_option("--N", chk_reps, "Replicate count");
    chk->add_option("--k", chk_k, "Number of upper order statistics");
    chk->add_option("--c", chk_c, "Ratio k/k'");
    chk->add_option("--seed", chk_seed, "Master seed");
    chk->add_option("--out", chk_out, "Output CSV path ('-' for stdout)");

    auto* lst = app.add_subcommand("list-distributions", "Show the distribution zoo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (est->parsed()) {
            if (k_arg.empty()) throw evi::ConfigError("one of --k / --k-grid is required");
            return cmd_estimate(input, format, estimator, k_arg, est_c);
        }
        if (sim->parsed()) {
            return cmd_simulate(config_path, sim_dist, sim_n, sim_reps, sim_c, sim_seed,
                                sim_est, sim_grid, sim_out);
        }
        if (chk->parsed()) {
            return cmd_check_asymptotic(chk_dist, chk_n, chk_reps, chk_k, chk_c, chk_seed,
                                        chk_out);
        }
        if (lst->parsed()) {
            return cmd_list_distributions();
        }
    } catch (const evi::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const evi::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
