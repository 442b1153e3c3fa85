#include "tripleslit/classical.hpp"

#include <cmath>
#include <numbers>

namespace tripleslit {

namespace {
constexpr double kPi = std::numbers::pi;
}

Chain classical_chain(const ExperimentConfig& cfg, double slit_center) {
    Chain chain = initial_packet(cfg);
    chain = propagate(chain, cfg.t);
    chain = apply_slit(chain, slit_center, cfg.beta);
    chain = propagate(chain, cfg.tau);
    return chain;
}

PathWavefunction extract_path(const Chain& chain, double log_amp_reference,
                              double slit_center) {
    PathWavefunction p{};
    p.amp = std::exp(log_amp_reference);
    p.c1 = chain.state.a.real();
    p.c2 = chain.state.b.real();
    p.c3 = chain.state.c.real() - log_amp_reference;
    p.alpha_quad = -chain.state.a.imag();
    p.gamma = chain.state.b.imag();
    p.mu = chain.mu;
    p.theta = chain.mu - chain.state.c.imag();
    p.slit_center = slit_center;
    return p;
}

PathWavefunction build_classical_path(const ExperimentConfig& cfg, double slit_center) {
    const Chain chain = classical_chain(cfg, slit_center);
    const double log_amp = (slit_center == 0.0)
                               ? chain.state.c.real()
                               : classical_chain(cfg, 0.0).state.c.real();
    return extract_path(chain, log_amp, slit_center);
}

Complex evaluate_path(const PathWavefunction& p, double x) {
    const Complex exponent(std::log(p.amp) + (-p.c1 * x + p.c2) * x + p.c3,
                           (p.alpha_quad * x + p.gamma) * x - p.theta + p.mu);
    return std::exp(exponent);
}

ClosedFormClassical closed_form_coefficients(const ExperimentConfig& cfg) {
    validate(cfg);
    const double m = cfg.m, h = cfg.hbar, t = cfg.t, tau = cfg.tau;
    const double s0 = cfg.sigma0, B = cfg.beta, d = cfg.d;

    const double free_det = h * h * t * t + m * m * s0 * s0 * s0 * s0;
    const double aa = 1.0 / (2.0 * B * B) + m * m * s0 * s0 / (2.0 * free_det);
    const double bb = m * m * m * s0 * s0 * s0 * s0 / (2.0 * h * t * free_det)
                      - m / (2.0 * h * t) - m / (2.0 * h * tau);
    const double den = 4.0 * (aa * aa + bb * bb);

    const double c1 = (m * m / (h * h * tau * tau)) * aa / den;
    const double c2_mag = (2.0 * m * d / (h * tau * B * B)) * bb / den;
    const double c3 = -d * d / (2.0 * B * B)
                      + (h * h * tau * tau * d * d / (m * m * B * B * B * B)) * c1;
    const double gamma_mag = 2.0 * d * h * tau * c1 / (m * B * B);
    const double theta = h * tau * d * c2_mag / (2.0 * m * B * B);
    const double amp =
        m / (2.0 * h * std::sqrt(std::sqrt(kPi) * t * tau * s0)) *
        std::pow(std::pow(m * m / (4.0 * h * h * t * tau) - 1.0 / (4.0 * B * B * s0 * s0), 2) +
                     (m * m / (16.0 * h * h)) *
                         std::pow(1.0 / (B * B * t) + 1.0 / (s0 * s0 * t) + 1.0 / (s0 * s0 * tau), 2),
                 -0.25);
    const double alpha = m / (2.0 * h * tau) + (m * B * B / (2.0 * h * tau * d)) * c2_mag;

    const double tau0 = m * s0 * s0 / h;
    const double num = t + tau * (1.0 + s0 * s0 / (B * B));
    const double dnm = tau0 * (1.0 - t * tau * s0 * s0 / (tau0 * tau0 * B * B));

    ClosedFormClassical out{};
    out.amp = amp;
    out.c1 = c1;
    out.c2 = -c2_mag;       // signed convention: the +d path carries -c2_mag x
    out.c3 = c3;
    out.alpha_quad = alpha;
    out.gamma = -gamma_mag;
    out.theta = theta;
    out.mu_principal = -0.5 * std::atan(num / dnm);
    out.script_a = aa;
    out.script_b = bb;
    out.mu_arctan_denominator = dnm;
    out.alpha_corrected = true;
    out.c3_corrected = true;
    return out;
}

}  // namespace tripleslit
