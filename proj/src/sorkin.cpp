#include "tripleslit/sorkin.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace tripleslit {

namespace {

PhaseDecomposition relative_phase(const PathWavefunction& k, const PathWavefunction& n) {
    PhaseDecomposition p{};
    p.quad = k.alpha_quad - n.alpha_quad;
    p.lin = k.gamma - n.gamma;
    p.constant = (k.mu - k.theta) - (n.mu - n.theta);
    return p;
}

double magnitude_at(const PathWavefunction& p, double x) {
    return p.amp * std::exp((-p.c1 * x + p.c2) * x + p.c3);
}

}  // namespace

PathSet build_paths(const ExperimentConfig& cfg, bool mirror_loop) {
    PathSet paths{};
    paths.epsilon = estimate_epsilon(cfg);
    paths.plus = build_classical_path(cfg, cfg.d);
    paths.center = build_classical_path(cfg, 0.0);
    paths.minus = build_classical_path(cfg, -cfg.d);
    paths.loop = build_nonclassical_path(cfg, paths.epsilon, false);
    if (mirror_loop) {
        paths.mirror = build_nonclassical_path(cfg, paths.epsilon, true);
    }
    paths.i0 = intensity(paths, 0.0);
    return paths;
}

double phase_at(const PhaseDecomposition& p, double x) {
    return (p.quad * x + p.lin) * x + p.constant;
}

std::array<PhaseDecomposition, 3> relative_phases(const PathSet& paths) {
    return {relative_phase(paths.plus, paths.loop.coeffs),
            relative_phase(paths.center, paths.loop.coeffs),
            relative_phase(paths.minus, paths.loop.coeffs)};
}

double intensity(const PathSet& paths, double x) {
    // summing the mirrored pair first keeps the intensity exactly even in x
    const Complex sum = (evaluate_path(paths.plus, x) + evaluate_path(paths.minus, x)) +
                        evaluate_path(paths.center, x);
    return std::norm(sum);
}

double delta_mu(const PathSet& paths) {
    return paths.center.mu - paths.loop.coeffs.mu;
}

SorkinResult sorkin_at(const PathSet& paths, double x, const SorkinOptions& options) {
    const std::array<const PathWavefunction*, 3> classical{&paths.plus, &paths.center,
                                                           &paths.minus};
    std::array<const PathWavefunction*, 2> loops{&paths.loop.coeffs, nullptr};
    const int n_loops = paths.mirror ? 2 : 1;
    if (paths.mirror) {
        loops[1] = &paths.mirror->coeffs;
    }

    Complex loop_sum(0.0, 0.0);
    for (int j = 0; j < n_loops; ++j) {
        loop_sum += evaluate_path(*loops[j], x);
    }

    double cross = 0.0;
    for (int j = 0; j < n_loops; ++j) {
        const PathWavefunction& nc = *loops[j];
        const double loop_mag = magnitude_at(nc, x);
        const double dmu = paths.center.mu - nc.mu;
        for (const PathWavefunction* k : classical) {
            PhaseDecomposition phi = relative_phase(*k, nc);
            if (options.gouy == GouyMode::off) {
                if (options.ablation == AblationKind::gouy_only) {
                    phi.constant -= dmu;
                } else {
                    phi.constant = 0.0;
                }
            }
            cross += 2.0 * magnitude_at(*k, x) * loop_mag * std::cos(phase_at(phi, x));
        }
    }

    SorkinResult r{};
    r.x = x;
    r.i_c = intensity(paths, x);
    r.kappa = (std::norm(loop_sum) + cross) / paths.i0;
    r.i_nc = r.i_c + r.kappa * paths.i0;
    const auto phis = relative_phases(paths);
    r.phi1 = phase_at(phis[0], x);
    r.phi2 = phase_at(phis[1], x);
    r.phi3 = phase_at(phis[2], x);
    return r;
}

std::vector<SorkinResult> kappa_scan(const PathSet& paths, const std::vector<double>& xs,
                                     const SorkinOptions& options, int threads) {
    std::vector<SorkinResult> out(xs.size());
    parallel_for(static_cast<int>(xs.size()), threads,
                 [&](int i) { out[i] = sorkin_at(paths, xs[i], options); });
    return out;
}

double gouy_percentage_error(const PathSet& paths, double x) {
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const SorkinOptions off{GouyMode::off, AblationKind::gouy_only};
    const double k_on = sorkin_at(paths, x, on).kappa;
    const double k_off = sorkin_at(paths, x, off).kappa;
    if (k_on == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::abs(std::abs(k_on) - std::abs(k_off)) / std::abs(k_on) * 100.0;
}

std::vector<CenterScanRow> kappa_center_scan(const ExperimentConfig& cfg,
                                             const std::vector<double>& taus,
                                             bool mirror_loop, int threads) {
    std::vector<CenterScanRow> out(taus.size());
    parallel_for(static_cast<int>(taus.size()), threads, [&](int i) {
        ExperimentConfig local = cfg;
        local.tau = taus[i];
        const PathSet paths = build_paths(local, mirror_loop);
        const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
        CenterScanRow row{};
        row.tau = taus[i];
        row.mu_c = window_gouy(paths.center.mu);
        row.mu_nc = window_gouy(paths.loop.coeffs.mu);
        row.abs_kappa0 = std::abs(sorkin_at(paths, 0.0, on).kappa);
        row.percent_error = gouy_percentage_error(paths, 0.0);
        out[i] = row;
    });
    return out;
}

std::vector<SurfaceRow> kappa_surface(const ExperimentConfig& cfg,
                                      const std::vector<double>& xs,
                                      const std::vector<double>& taus,
                                      const SorkinOptions& options, bool mirror_loop,
                                      int threads) {
    std::vector<SurfaceRow> out(taus.size());
    parallel_for(static_cast<int>(taus.size()), threads, [&](int i) {
        ExperimentConfig local = cfg;
        local.tau = taus[i];
        const PathSet paths = build_paths(local, mirror_loop);
        SurfaceRow row{};
        row.tau = taus[i];
        row.kappa.resize(xs.size());
        for (std::size_t k = 0; k < xs.size(); ++k) {
            row.kappa[k] = sorkin_at(paths, xs[k], options).kappa;
        }
        out[i] = row;
    });
    return out;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (n <= 0) {
        return;
    }
    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (int i = next.fetch_add(1); i < n && !stop.load(); i = next.fetch_add(1)) {
                    fn(i);
                }
            } catch (...) {
                stop.store(true);
                const std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) {
                    err = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
}

}  // namespace tripleslit
