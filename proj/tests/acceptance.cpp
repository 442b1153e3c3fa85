#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "tripleslit/io.hpp"
#include "tripleslit/nonclassical.hpp"
#include "tripleslit/oracle.hpp"
#include "tripleslit/sorkin.hpp"

using namespace tripleslit;

namespace {

int g_failures = 0;

void report(const char* name, bool pass, const char* fmt, ...) {
    std::printf("%s %s: ", pass ? "PASS" : "FAIL", name);
    va_list args;
    va_start(args, fmt);
    std::vprintf(fmt, args);
    va_end(args);
    std::printf("\n");
    if (!pass) {
        ++g_failures;
    }
}

ExperimentConfig random_config(std::mt19937& rng) {
    std::uniform_real_distribution<double> len(30e-9, 150e-9);
    std::uniform_real_distribution<double> spacing(300e-9, 1200e-9);
    std::uniform_real_distribution<double> flight(5e-9, 40e-9);
    std::uniform_real_distribution<double> screen(1e-9, 25e-9);
    ExperimentConfig cfg;
    cfg.sigma0 = len(rng);
    cfg.beta = len(rng);
    cfg.d = spacing(rng);
    cfg.t = flight(rng);
    cfg.tau = screen(rng);
    return cfg;
}

double max_rel_err(const std::vector<Complex>& got, const std::vector<Complex>& want) {
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        worst = std::max(worst, std::abs(got[i] - want[i]) / std::abs(want[i]));
    }
    return worst;
}

std::vector<Complex> chain_values(const Chain& chain, const std::vector<double>& xs) {
    std::vector<Complex> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out[i] = evaluate(chain.state, xs[i]);
    }
    return out;
}

void criterion_1() {
    const ExperimentConfig cfg;
    const double eps = estimate_epsilon(cfg);
    const double target = 0.492e-9;
    const double rel = std::abs(eps - target) / target;
    report("criterion 1", rel < 0.005,
           "hop-time estimate %.6e s is %.3f%% from 0.492 ns (tolerance 0.5%%)", eps,
           rel * 100.0);
}

void criterion_2() {
    ExperimentConfig cfg;
    cfg.tau = 2e-9;
    const double eps = estimate_epsilon(cfg);
    const double mu_c = window_gouy(classical_chain(cfg, 0.0).mu);
    Chain loop = nonclassical_chain(cfg, eps, 1);
    const double mu_nc = window_gouy(loop.mu + std::numbers::pi / 4.0);
    const bool pass = std::abs(std::abs(mu_nc) - 0.719) < 0.02 && std::abs(mu_c) < 0.05;
    report("criterion 2", pass,
           "|mu_nc| = %.4f rad (target 0.719 +/- 0.02), |mu_c| = %.4f rad (< 0.05)",
           std::abs(mu_nc), std::abs(mu_c));
}

void criterion_3() {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const std::vector<double> xs = linspace(-1e-3, 1e-3, 2001);
    const std::vector<SorkinResult> scan = kappa_scan(paths, xs, on, 4);
    double best = 0.0;
    for (const SorkinResult& r : scan) {
        best = std::max(best, std::abs(r.kappa));
    }
    report("criterion 3", best >= 1e-9 && best <= 1e-7,
           "max |kappa| over the 2001-point screen scan is %.6e (target [1e-9, 1e-7])",
           best);
}

void criterion_4() {
    ExperimentConfig cfg;
    cfg.tau = 2e-9;
    const PathSet paths = build_paths(cfg, false);
    const double percent = gouy_percentage_error(paths, 0.0);
    report("criterion 4", std::abs(percent - 51.5) < 5.0,
           "gouy ablation shifts |kappa(0)| by %.4f%% (target 51.5 +/- 5 percentage "
           "points)",
           percent);
}

void criterion_5() {
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const SorkinOptions off{GouyMode::off, AblationKind::gouy_only};
    const std::vector<double> xs = linspace(-1e-3, 1e-3, 2001);

    // (a) central maximum with symmetric side lobes
    {
        const PathSet paths = build_paths(ExperimentConfig{}, false);
        std::vector<double> ic(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ic[i] = intensity(paths, xs[i]);
        }
        std::size_t argmax = 0;
        int lobes = 0;
        bool symmetric = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (ic[i] > ic[argmax]) {
                argmax = i;
            }
            if (i > 0 && i + 1 < xs.size() && ic[i] > ic[i - 1] && ic[i] > ic[i + 1]) {
                ++lobes;
            }
            if (ic[i] != intensity(paths, -xs[i])) {
                symmetric = false;
            }
        }
        const bool pass = argmax == 1000 && lobes >= 3 && symmetric;
        report("criterion 5a", pass,
               "central peak at x = %.3e m with %d local maxima, symmetric = %s",
               xs[argmax], lobes, symmetric ? "yes" : "no");
    }
    // (b) on-axis displacement between the two treatments
    {
        ExperimentConfig cfg;
        cfg.tau = 2e-9;
        const PathSet paths = build_paths(cfg, false);
        const double k_on = sorkin_at(paths, 0.0, on).kappa;
        const double k_off = sorkin_at(paths, 0.0, off).kappa;
        const double rel = std::abs(k_on - k_off) / std::abs(k_on);
        report("criterion 5b", rel > 0.01,
               "kappa(0) with vs without the axial phase differ by %.2f%%", rel * 100.0);
    }
    // (c) interior surface maximum near the axis
    {
        const std::vector<double> taus = linspace(0.5e-9, 20e-9, 200);
        const std::vector<SurfaceRow> surface =
            kappa_surface(ExperimentConfig{}, xs, taus, on, false, 4);
        double best = 0.0;
        std::size_t best_t = 0, best_x = 0;
        for (std::size_t ti = 0; ti < surface.size(); ++ti) {
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                if (std::abs(surface[ti].kappa[xi]) > best) {
                    best = std::abs(surface[ti].kappa[xi]);
                    best_t = ti;
                    best_x = xi;
                }
            }
        }
        const bool pass = best_t > 0 && best_t + 1 < taus.size() && std::abs(xs[best_x]) < 5e-5;
        report("criterion 5c", pass,
               "surface max |kappa| = %.6e at x = %.3e m, tau index %zu of %zu", best,
               xs[best_x], best_t, taus.size());
    }
    // (d) and (e) from the on-axis screen-time sweep
    {
        const std::vector<double> taus = linspace(0.5e-9, 20e-9, 200);
        const std::vector<CenterScanRow> rows =
            kappa_center_scan(ExperimentConfig{}, taus, false, 4);
        bool mu_c_down = true, mu_nc_up = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].tau < 1e-9 || rows[i].tau > 15e-9) {
                continue;
            }
            mu_c_down = mu_c_down && std::abs(rows[i].mu_c) < std::abs(rows[i - 1].mu_c);
            mu_nc_up = mu_nc_up && std::abs(rows[i].mu_nc) > std::abs(rows[i - 1].mu_nc);
        }
        report("criterion 5d", mu_c_down && mu_nc_up,
               "|mu_c| decreasing = %s, |mu_nc| increasing = %s over tau in [1, 15] ns",
               mu_c_down ? "yes" : "no", mu_nc_up ? "yes" : "no");

        int peaks = 0;
        std::size_t peak_index = 0;
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            if (rows[i].abs_kappa0 > rows[i - 1].abs_kappa0 &&
                rows[i].abs_kappa0 > rows[i + 1].abs_kappa0) {
                ++peaks;
                peak_index = i;
            }
        }
        report("criterion 5e", peaks == 1,
               "|kappa(0)|(tau) has %d interior peak(s), at tau = %.3e s", peaks,
               peaks == 1 ? rows[peak_index].tau : 0.0);
    }
}

void criterion_6() {
    const QuadratureSpec spec;
    std::mt19937 rng(90210u);
    double worst = 0.0;
    int checked = 0;
    for (int trial = 0; trial <= 20; ++trial) {
        const ExperimentConfig cfg = trial == 0 ? ExperimentConfig{} : random_config(rng);
        const double eps = estimate_epsilon(cfg);
        const double sigma_tau = packet_width(classical_chain(cfg, 0.0).state);
        const std::vector<double> xs = linspace(-sigma_tau, sigma_tau, 11);
        worst = std::max(worst, max_rel_err(quad_classical(cfg, 0.0, xs, spec),
                                            chain_values(classical_chain(cfg, 0.0), xs)));
        worst = std::max(worst, max_rel_err(quad_classical(cfg, cfg.d, xs, spec),
                                            chain_values(classical_chain(cfg, cfg.d), xs)));
        worst = std::max(worst,
                         max_rel_err(quad_nonclassical(cfg, eps, xs, spec),
                                     chain_values(nonclassical_chain(cfg, eps, 1), xs)));
        ++checked;
    }
    report("criterion 6", worst < 1e-5,
           "closed-form amplitudes vs direct quadrature: max rel err %.3e over %d "
           "configs x 11 points (tolerance 1e-5)",
           worst, checked);
}

void criterion_7() {
    const ExperimentConfig cfg;
    bool parity = true;
    {
        const PathSet paths = build_paths(cfg, true);
        for (double x : linspace(-8e-4, 8e-4, 17)) {
            parity = parity &&
                     evaluate_path(paths.plus, x) == evaluate_path(paths.minus, -x) &&
                     evaluate_path(paths.mirror->coeffs, x) ==
                         evaluate_path(paths.loop.coeffs, -x);
        }
    }
    double norm_drift = 0.0;
    {
        const double reference = norm_squared(classical_chain(cfg, 0.0).state);
        for (double tau : {1e-9, 5e-9, 20e-9}) {
            ExperimentConfig other = cfg;
            other.tau = tau;
            const double value = norm_squared(classical_chain(other, 0.0).state);
            norm_drift = std::max(norm_drift, std::abs(value - reference) / reference);
        }
    }
    double semigroup = 0.0;
    {
        Chain displaced = apply_slit(propagate(initial_packet(cfg), 5e-9), cfg.d, cfg.beta);
        const Chain once = propagate(displaced, 9e-9);
        const Chain twice = propagate(propagate(displaced, 4e-9), 5e-9);
        semigroup = std::max({std::abs(once.state.a - twice.state.a) / std::abs(once.state.a),
                              std::abs(once.state.b - twice.state.b) / std::abs(once.state.b),
                              std::abs(once.state.c - twice.state.c) / std::abs(once.state.c)});
    }
    double expansion = 0.0;
    std::mt19937 rng(1811u);
    {
        const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
        std::uniform_real_distribution<double> xdist(-1e-3, 1e-3);
        for (int trial = 0; trial < 3; ++trial) {
            const ExperimentConfig sample = trial == 0 ? cfg : random_config(rng);
            const PathSet paths = build_paths(sample, false);
            for (int i = 0; i < 20; ++i) {
                const double x = xdist(rng);
                const SorkinResult r = sorkin_at(paths, x, on);
                const double direct =
                    std::norm(evaluate_path(paths.plus, x) + evaluate_path(paths.center, x) +
                              evaluate_path(paths.minus, x) +
                              evaluate_path(paths.loop.coeffs, x));
                expansion = std::max(expansion, std::abs(r.i_nc - direct) / direct);
            }
        }
    }
    double zchain_gap = 0.0;
    {
        for (int trial = 0; trial <= 20; ++trial) {
            const ExperimentConfig sample = trial == 0 ? cfg : random_config(rng);
            const double eps = estimate_epsilon(sample);
            const double chain_mu =
                nonclassical_chain(sample, eps, 1).mu + std::numbers::pi / 4.0;
            zchain_gap = std::max(
                zchain_gap, gouy_distance(gouy_nc(build_zchain(sample, eps)), chain_mu));
        }
    }
    const bool pass = parity && norm_drift < 1e-10 && semigroup < 1e-12 &&
                      expansion < 1e-10 && zchain_gap < 1e-8;
    report("criterion 7", pass,
           "parity exact = %s, norm drift %.2e (< 1e-10), semigroup gap %.2e (< 1e-12), "
           "expansion identity %.2e (< 1e-10), recursion phase gap %.2e rad (< 1e-8)",
           parity ? "yes" : "no", norm_drift, semigroup, expansion, zchain_gap);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance line(s) failed\n", g_failures);
    return 1;
}
