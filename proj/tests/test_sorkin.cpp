#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "tripleslit/io.hpp"
#include "tripleslit/sorkin.hpp"

using namespace tripleslit;

namespace {

ExperimentConfig with_tau(double tau) {
    ExperimentConfig cfg;
    cfg.tau = tau;
    return cfg;
}

Complex direct_total(const PathSet& paths, double x) {
    Complex total = evaluate_path(paths.plus, x) + evaluate_path(paths.center, x) +
                    evaluate_path(paths.minus, x) + evaluate_path(paths.loop.coeffs, x);
    if (paths.mirror) {
        total += evaluate_path(paths.mirror->coeffs, x);
    }
    return total;
}

}  // namespace

TEST_CASE("normalization is the on-axis three-path intensity") {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    CHECK(paths.i0 == intensity(paths, 0.0));
    CHECK(paths.i0 > 0.0);
}

TEST_CASE("three-path intensity is exactly even") {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    for (double x : {1e-6, 3.7e-5, 2.4e-4, 9e-4}) {
        CHECK(intensity(paths, x) == intensity(paths, -x));
    }
}

TEST_CASE("frozen on-axis interference residue at tau = 2 ns") {
    const PathSet paths = build_paths(with_tau(2e-9), false);
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const SorkinOptions off{GouyMode::off, AblationKind::gouy_only};
    const double k_on = sorkin_at(paths, 0.0, on).kappa;
    const double k_off = sorkin_at(paths, 0.0, off).kappa;
    CHECK(k_on == doctest::Approx(-1.7309316235184486e-08).epsilon(1e-12));
    CHECK(k_off == doctest::Approx(-1.1125506448787594e-08).epsilon(1e-12));
    CHECK(gouy_percentage_error(paths, 0.0) ==
          doctest::Approx(35.72532676840879).epsilon(1e-10));
    CHECK(delta_mu(paths) == doctest::Approx(0.7181542006784851).epsilon(1e-12));
}

TEST_CASE("dropping every constant phase is a different ablation") {
    const PathSet paths = build_paths(with_tau(2e-9), false);
    const SorkinOptions gouy_off{GouyMode::off, AblationKind::gouy_only};
    const SorkinOptions constants_off{GouyMode::off, AblationKind::all_constant_phases};
    const double k_gouy = sorkin_at(paths, 0.0, gouy_off).kappa;
    const double k_const = sorkin_at(paths, 0.0, constants_off).kappa;
    CHECK(k_gouy != k_const);
    // with every constant phase removed the on-axis cross terms are maximal
    const double mags = 2.0 * (std::abs(evaluate_path(paths.plus, 0.0)) +
                               std::abs(evaluate_path(paths.center, 0.0)) +
                               std::abs(evaluate_path(paths.minus, 0.0))) *
                        std::abs(evaluate_path(paths.loop.coeffs, 0.0));
    const double loop2 = std::norm(evaluate_path(paths.loop.coeffs, 0.0));
    CHECK(k_const == doctest::Approx((loop2 + mags) / paths.i0).epsilon(1e-12));
}

TEST_CASE("defining identity and direct expansion agree") {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    for (double x : {-8e-4, -5e-5, 0.0, 1.1e-5, 6e-4}) {
        const SorkinResult r = sorkin_at(paths, x, on);
        CHECK(r.i_nc == r.i_c + r.kappa * paths.i0);
        const double direct = std::norm(direct_total(paths, x));
        CHECK(r.i_nc == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("structured relative phases match the amplitude arguments") {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    const auto phis = relative_phases(paths);
    const std::array<const PathWavefunction*, 3> classical{&paths.plus, &paths.center,
                                                           &paths.minus};
    std::mt19937 rng(4242u);
    std::uniform_real_distribution<double> xs(-1e-3, 1e-3);
    for (int i = 0; i < 50; ++i) {
        const double x = xs(rng);
        for (int k = 0; k < 3; ++k) {
            const double phi = phase_at(phis[k], x);
            // subtract the arguments separately: the product of the two amplitudes
            // underflows to zero in the far tails
            const double via_arg = std::arg(evaluate_path(*classical[k], x)) -
                                   std::arg(evaluate_path(paths.loop.coeffs, x));
            const double wrapped = std::remainder(phi - via_arg, 2.0 * std::numbers::pi);
            CHECK(std::abs(wrapped) <= 1e-9 * (1.0 + std::abs(phi)));
        }
    }
}

TEST_CASE("frozen maximum residue on the default screen grid") {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const std::vector<double> xs = linspace(-1e-3, 1e-3, 2001);
    const std::vector<SorkinResult> scan = kappa_scan(paths, xs, on, 2);
    double best = 0.0;
    double best_x = 0.0;
    for (const SorkinResult& r : scan) {
        if (std::abs(r.kappa) > best) {
            best = std::abs(r.kappa);
            best_x = r.x;
        }
    }
    CHECK(best == doctest::Approx(1.6529859900525726e-08).epsilon(1e-10));
    CHECK(best_x == 0.0);
    const double ratio = std::abs(evaluate_path(paths.loop.coeffs, 0.0)) /
                         std::abs(evaluate_path(paths.center, 0.0));
    CHECK(ratio == doctest::Approx(2.4726873311927353e-08).epsilon(1e-10));
}

TEST_CASE("scans are independent of the thread count") {
    const PathSet paths = build_paths(ExperimentConfig{}, false);
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const std::vector<double> xs = linspace(-5e-4, 5e-4, 101);
    const std::vector<SorkinResult> serial = kappa_scan(paths, xs, on, 1);
    const std::vector<SorkinResult> parallel = kappa_scan(paths, xs, on, 4);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(serial[i].kappa == parallel[i].kappa);
        CHECK(serial[i].i_c == parallel[i].i_c);
    }
}

TEST_CASE("frozen on-axis residue across the screen-time sweep") {
    const std::vector<double> taus = linspace(0.5e-9, 20e-9, 200);
    const std::vector<CenterScanRow> rows =
        kappa_center_scan(ExperimentConfig{}, taus, false, 4);
    REQUIRE(rows.size() == 200);
    int peak = 0;
    for (int i = 1; i < 200; ++i) {
        if (rows[i].abs_kappa0 > rows[peak].abs_kappa0) {
            peak = i;
        }
    }
    CHECK(peak == 1);
    CHECK(rows[peak].abs_kappa0 == doctest::Approx(5.042487124817959e-08).epsilon(1e-10));
    CHECK(rows.front().abs_kappa0 == doctest::Approx(2.2210663392342833e-08).epsilon(1e-10));
    CHECK(rows.back().abs_kappa0 == doctest::Approx(1.652523154962353e-08).epsilon(1e-10));

    // windowed phases: straight-path magnitude shrinks, looped-path magnitude grows
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].tau < 1e-9 || rows[i].tau > 15e-9) {
            continue;
        }
        CHECK(std::abs(rows[i].mu_c) < std::abs(rows[i - 1].mu_c));
        CHECK(std::abs(rows[i].mu_nc) > std::abs(rows[i - 1].mu_nc));
    }
}

TEST_CASE("mirror loop doubles the on-axis residue") {
    const ExperimentConfig cfg = with_tau(2e-9);
    const PathSet single = build_paths(cfg, false);
    const PathSet both = build_paths(cfg, true);
    REQUIRE(both.mirror.has_value());
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const double k1 = sorkin_at(single, 0.0, on).kappa;
    const double k2 = sorkin_at(both, 0.0, on).kappa;
    CHECK(k2 == doctest::Approx(2.0 * k1).epsilon(1e-6));
}

TEST_CASE("percentage error is undefined when the residue vanishes") {
    PathSet paths = build_paths(ExperimentConfig{}, false);
    paths.loop.coeffs.amp = 0.0;
    CHECK(std::isnan(gouy_percentage_error(paths, 0.0)));
}

TEST_CASE("small surface scan peaks near the axis at an interior screen time") {
    const std::vector<double> xs = linspace(-1e-3, 1e-3, 101);
    // the screen-time resolution must match the emitted grid: the ridge in tau is
    // narrow enough that a coarse sweep puts the maximum on the first row
    const std::vector<double> taus = linspace(0.5e-9, 20e-9, 200);
    const SorkinOptions on{GouyMode::on, AblationKind::gouy_only};
    const std::vector<SurfaceRow> surface =
        kappa_surface(ExperimentConfig{}, xs, taus, on, false, 4);
    REQUIRE(surface.size() == taus.size());
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
    CHECK(best_t > 0);
    CHECK(best_t < taus.size() - 1);
    CHECK(std::abs(xs[best_x]) < 5e-5);
}
