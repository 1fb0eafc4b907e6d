// Times the OpenMP replicate loop against the serial reference and checks
// that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "evi/montecarlo.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_results(const evi::ExperimentResult& a, const evi::ExperimentResult& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        const auto& x = a.cells[i];
        const auto& y = b.cells[i];
        const bool mean_same =
            (std::isnan(x.mean) && std::isnan(y.mean)) || x.mean == y.mean;
        const bool mse_same = (std::isnan(x.mse) && std::isnan(y.mse)) || x.mse == y.mse;
        if (!mean_same || !mse_same || x.error_count != y.error_count) return false;
    }
    return true;
}

}  // namespace

int main() {
    evi::ExperimentConfig cfg;
    cfg.distribution = evi::DistributionSpec::frechet(3.0);
    cfg.n = 2000;
    cfg.replicates = 200;
    cfg.c = 4.0;
    cfg.estimators = {evi::EstimatorKind::GG, evi::EstimatorKind::GGStar,
                      evi::EstimatorKind::Moment, evi::EstimatorKind::Zipf};
    cfg.master_seed = 20240901;
    cfg.k_grid = evi::ExperimentConfig::default_k_grid(cfg.n, cfg.c, cfg.estimators);

#ifdef _OPENMP
    std::printf("omp max threads: %d\n", omp_get_max_threads());
#else
    std::printf("compiled without OpenMP\n");
#endif
    std::printf("config: %s n=%d N=%d |k_grid|=%zu\n",
                cfg.distribution.to_string().c_str(), cfg.n, cfg.replicates,
                cfg.k_grid.size());

    auto t0 = std::chrono::steady_clock::now();
    const evi::ExperimentResult serial = evi::run_experiment_serial(cfg);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const evi::ExperimentResult parallel = evi::run_experiment(cfg);
    const double t_parallel = seconds_since(t0);

    std::printf("serial:   %.3f s\n", t_serial);
    std::printf("parallel: %.3f s  (speedup %.2fx)\n", t_parallel,
                t_serial / t_parallel);
    if (!same_results(serial, parallel)) {
        std::printf("MISMATCH: parallel result differs from serial reference\n");
        return 1;
    }
    std::printf("parallel result identical to serial reference\n");
    return 0;
}
