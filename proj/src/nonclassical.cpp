#include "tripleslit/nonclassical.hpp"

#include <cmath>
#include <numbers>

#include "tripleslit/errors.hpp"

namespace tripleslit {

namespace {

constexpr double kPi = std::numbers::pi;

double norm2(const Complex& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

void check_divisor(double n2, const char* label) {
    if (!(n2 > 1e-300) || !std::isfinite(n2)) {
        throw NumericError(std::string("degenerate auxiliary parameter ") + label +
                           " in looped-path recursion");
    }
}

Chain looped_chain(const ExperimentConfig& cfg, double epsilon, double displacement) {
    Chain chain = initial_packet(cfg);
    chain = propagate(chain, cfg.t);
    chain = apply_slit(chain, displacement, cfg.beta);
    chain = propagate(chain, 2.0 * epsilon);
    chain = apply_slit(chain, 0.0, cfg.beta);
    chain = propagate(chain, 2.0 * epsilon);
    chain = apply_slit(chain, -displacement, cfg.beta);
    chain = propagate(chain, cfg.tau);
    return chain;
}

}  // namespace

ZChain build_zchain(const ExperimentConfig& cfg, double epsilon) {
    validate(cfg);
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ConfigError("epsilon must be strictly positive and finite");
    }
    const double m = cfg.m, h = cfg.hbar, t = cfg.t, tau = cfg.tau;
    const double s0 = cfg.sigma0, B = cfg.beta, e = epsilon;

    ZChain z{};
    z.z0 = Complex(1.0 / (2.0 * s0 * s0), -m / (2.0 * h * t));
    const double n0 = norm2(z.z0);
    check_divisor(n0, "z0");
    z.z1 = Complex(
        1.0 / (2.0 * B * B) + m * m * z.z0.real() / (4.0 * h * h * t * t * n0),
        -(m / (4.0 * h * e) + m / (2.0 * h * t) + m * m * z.z0.imag() / (4.0 * h * h * t * t * n0)));
    const double n1 = norm2(z.z1);
    check_divisor(n1, "z1");
    z.z2 = Complex(
        1.0 / (2.0 * B * B) + m * m * z.z1.real() / (16.0 * h * h * e * e * n1),
        -(m / (2.0 * h * e) + m * m * z.z1.imag() / (16.0 * h * h * e * e * n1)));
    const double n2 = norm2(z.z2);
    check_divisor(n2, "z2");
    z.z3 = Complex(
        1.0 / (2.0 * B * B) + m * m * z.z2.real() / (16.0 * h * h * e * e * n2),
        -(m / (2.0 * h * tau) + m / (4.0 * h * e) +
          m * m * z.z2.imag() / (16.0 * h * h * e * e * n2)));
    check_divisor(norm2(z.z3), "z3");

    z.z4 = z.z1 * z.z1 * z.z2;
    z.z5 = z.z1 * z.z1 * z.z2 * z.z2 * z.z3;
    z.z6 = z.z1 * z.z2 * z.z3;
    const Complex p = z.z0 * z.z1 * z.z2 * z.z3;
    z.z_r = p.imag();
    z.z_i = p.real();
    if (z.z_r * z.z_r + z.z_i * z.z_i <= 0.0) {
        throw NumericError("vanishing auxiliary product in looped-path recursion");
    }
    return z;
}

double gouy_nc(const ZChain& z) {
    return 0.5 * std::atan(z.z_i / z.z_r);
}

Chain nonclassical_chain(const ExperimentConfig& cfg, double epsilon, int sg) {
    return looped_chain(cfg, epsilon, sg * cfg.d);
}

Complex loop_amplitude_scale(const ExperimentConfig& cfg, double epsilon) {
    const double mag = std::sqrt(4.0 * kPi * cfg.hbar * epsilon / cfg.m);
    return std::polar(mag, kPi / 4.0);
}

NcPathWavefunction build_nonclassical_path(const ExperimentConfig& cfg, double epsilon,
                                           bool mirror) {
    validate(cfg);
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw ConfigError("epsilon must be strictly positive and finite");
    }
    const int sg = mirror ? -1 : 1;
    Chain chain = nonclassical_chain(cfg, epsilon, sg);
    const Complex scale = loop_amplitude_scale(cfg, epsilon);
    chain.state.c += std::log(scale);
    chain.mu += kPi / 4.0;

    Chain ref = looped_chain(cfg, epsilon, 0.0);
    ref.state.c += std::log(scale);

    NcPathWavefunction nc{};
    nc.coeffs = extract_path(chain, ref.state.c.real(), sg * cfg.d);
    nc.epsilon = epsilon;
    nc.elapsed_time = cfg.t + 4.0 * epsilon;
    nc.mirror = mirror;
    return nc;
}

ClosedFormNc closed_form_nc_coefficients(const ExperimentConfig& cfg, double epsilon) {
    const ZChain z = build_zchain(cfg, epsilon);
    const double m = cfg.m, h = cfg.hbar, t = cfg.t, tau = cfg.tau;
    const double s0 = cfg.sigma0, B = cfg.beta, d = cfg.d, e = epsilon;
    const double b4 = B * B * B * B;
    const double n1 = norm2(z.z1), n3 = norm2(z.z3), n4 = norm2(z.z4);
    const double n5 = norm2(z.z5), n6 = norm2(z.z6);

    ClosedFormNc out{};
    out.c1 = m * m * z.z3.real() / (4.0 * h * h * tau * tau * n3);
    out.c2 = m * m * m * d * z.z6.imag() / (32.0 * h * h * h * B * B * tau * e * e * n6) +
             m * d * z.z3.imag() / (2.0 * h * tau * B * B * n3);
    out.gamma = m * m * m * d * z.z6.real() / (32.0 * h * h * h * B * B * tau * e * e * n6) +
                m * d * z.z3.real() / (2.0 * h * tau * B * B * n3);
    out.alpha_quad = m / (2.0 * h * tau) + m * m * z.z3.imag() / (4.0 * h * h * tau * tau * n3);
    out.c3 = d * d * z.z1.real() / (4.0 * b4 * n1) -
             m * m * d * d * z.z4.real() / (64.0 * b4 * h * h * e * e * n4) +
             m * m * m * m * d * d * z.z5.real() / (1024.0 * h * h * h * h * b4 * e * e * e * e * n5) +
             m * m * d * d * z.z6.real() / (32.0 * b4 * e * e * h * h * n6) +
             d * d * z.z3.real() / (4.0 * b4 * n3) - d * d / (B * B);
    out.theta = d * d * z.z1.imag() / (4.0 * b4 * n1) -
                m * m * d * d * z.z4.imag() / (64.0 * b4 * h * h * e * e * n4) +
                m * m * m * m * d * d * z.z5.imag() / (1024.0 * h * h * h * h * b4 * e * e * e * e * n5) +
                m * m * d * d * z.z6.imag() / (32.0 * b4 * e * e * h * h * n6) +
                d * d * z.z3.imag() / (4.0 * b4 * n3);
    out.amp = std::sqrt(m * m * m * std::sqrt(kPi) /
                        (16.0 * h * h * h * tau * t * e * s0 *
                         std::sqrt(z.z_r * z.z_r + z.z_i * z.z_i)));
    out.mu_principal = gouy_nc(z);
    out.alpha_corrected = true;
    return out;
}

}  // namespace tripleslit
