#include "tripleslit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tripleslit/errors.hpp"

namespace tripleslit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConvergenceTol = 1e-6;
constexpr int kMaxNodes = 1025;

QuadraturePlane gauss_legendre_plane(double center, double half_width, int nodes) {
    QuadraturePlane plane;
    plane.x.resize(nodes);
    plane.w.resize(nodes);
    const int mid = (nodes + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        double xi = std::cos(kPi * (i + 0.75) / (nodes + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < nodes; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
            }
            dp = nodes * (xi * p0 - p1) / (xi * xi - 1.0);
            const double dx = p0 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
        plane.x[i] = center - half_width * xi;
        plane.w[i] = half_width * wi;
        plane.x[nodes - 1 - i] = center + half_width * xi;
        plane.w[nodes - 1 - i] = half_width * wi;
    }
    return plane;
}

// out[i] = pref(T) * sum_j exp(i k (x_out[i] - x_j)^2) w_j f_j
std::vector<Complex> hop(const ExperimentConfig& cfg, double duration,
                         const QuadraturePlane& from, const std::vector<Complex>& f,
                         const std::vector<double>& x_out) {
    if (!(duration > 0.0)) {
        throw ConfigError("propagation duration for a quadrature hop must be positive");
    }
    const double k = cfg.m / (2.0 * cfg.hbar * duration);
    const Complex pref =
        std::polar(std::sqrt(cfg.m / (2.0 * kPi * cfg.hbar * duration)), -kPi / 4.0);
    std::vector<Complex> out(x_out.size());
    for (std::size_t i = 0; i < x_out.size(); ++i) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < from.x.size(); ++j) {
            const double dx = x_out[i] - from.x[j];
            acc += std::polar(from.w[j], k * dx * dx) * f[j];
        }
        out[i] = pref * acc;
    }
    return out;
}

struct Stage {
    double duration;
    double slit_center;
};

// Runs the staged transform at a fixed node count: starting from the initial
// packet, alternate free hops and aperture windows, then hop to the detector.
std::vector<Complex> run_stages(const ExperimentConfig& cfg, const std::vector<Stage>& stages,
                                const std::vector<double>& x_det, int nodes,
                                const QuadratureSpec& spec) {
    Chain chain = initial_packet(cfg);
    QuadraturePlane plane = make_plane(0.0, spec.half_width * cfg.sigma0, nodes, spec.rule);
    std::vector<Complex> f(plane.x.size());
    for (std::size_t j = 0; j < plane.x.size(); ++j) {
        f[j] = evaluate(chain.state, plane.x[j]);
    }
    for (const Stage& stage : stages) {
        chain = propagate(chain, stage.duration);
        chain = apply_slit(chain, stage.slit_center, cfg.beta);
        const QuadraturePlane next =
            make_plane(packet_center(chain.state),
                       spec.half_width * packet_width(chain.state), nodes, spec.rule);
        std::vector<Complex> g = hop(cfg, stage.duration, plane, f, next.x);
        for (std::size_t j = 0; j < next.x.size(); ++j) {
            const double u = next.x[j] - stage.slit_center;
            g[j] *= std::exp(-u * u / (2.0 * cfg.beta * cfg.beta));
        }
        plane = next;
        f = std::move(g);
    }
    return hop(cfg, cfg.tau, plane, f, x_det);
}

std::vector<Complex> run_converged(const ExperimentConfig& cfg, const std::vector<Stage>& stages,
                                   const std::vector<double>& x_det,
                                   const QuadratureSpec& spec) {
    validate(cfg);
    validate(spec);
    if (x_det.empty()) {
        throw ConfigError("quadrature requires at least one detector point");
    }
    const std::vector<Complex> coarse = run_stages(cfg, stages, x_det, spec.nodes, spec);
    const std::vector<Complex> fine = run_stages(cfg, stages, x_det, 2 * spec.nodes - 1, spec);
    double max_diff = 0.0;
    double max_mag = 0.0;
    for (std::size_t i = 0; i < x_det.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(fine[i] - coarse[i]));
        max_mag = std::max(max_mag, std::abs(fine[i]));
    }
    if (!(max_mag > 0.0) || !std::isfinite(max_diff) || max_diff > kConvergenceTol * max_mag) {
        throw NumericError("quadrature did not converge when the node count was refined");
    }
    return fine;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
    if (!(spec.half_width >= 6.0) || !std::isfinite(spec.half_width)) {
        throw ConfigError("quadrature half_width must be at least 6 packet widths");
    }
    if (spec.nodes < 3 || spec.nodes % 2 == 0) {
        throw ConfigError("quadrature nodes must be an odd count of at least 3");
    }
    if (spec.nodes > kMaxNodes) {
        throw ConfigError("quadrature nodes exceed the cost guard of 1025");
    }
}

QuadraturePlane make_plane(double center, double half_width, int nodes, QuadratureRule rule) {
    if (rule == QuadratureRule::gauss_legendre) {
        return gauss_legendre_plane(center, half_width, nodes);
    }
    QuadraturePlane plane;
    plane.x.resize(nodes);
    plane.w.resize(nodes);
    const double step = 2.0 * half_width / (nodes - 1);
    for (int i = 0; i < nodes; ++i) {
        plane.x[i] = center - half_width + i * step;
        plane.w[i] = step;
    }
    plane.w.front() *= 0.5;
    plane.w.back() *= 0.5;
    return plane;
}

std::vector<Complex> quad_classical(const ExperimentConfig& cfg, double slit_center,
                                    const std::vector<double>& x_det,
                                    const QuadratureSpec& spec) {
    const std::vector<Stage> stages{{cfg.t, slit_center}};
    return run_converged(cfg, stages, x_det, spec);
}

std::vector<Complex> quad_nonclassical(const ExperimentConfig& cfg, double epsilon,
                                       const std::vector<double>& x_det,
                                       const QuadratureSpec& spec, bool mirror) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ConfigError("epsilon must be strictly positive and finite");
    }
    const double sg = mirror ? -1.0 : 1.0;
    const std::vector<Stage> stages{{cfg.t, sg * cfg.d},
                                    {2.0 * epsilon, 0.0},
                                    {2.0 * epsilon, -sg * cfg.d}};
    return run_converged(cfg, stages, x_det, spec);
}

}  // namespace tripleslit
