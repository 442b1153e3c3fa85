#include "tripleslit/gchain.hpp"

#include <cmath>
#include <numbers>

namespace tripleslit {

namespace {

constexpr double kPi = std::numbers::pi;

Chain with_step(Chain chain, ChainStep step) {
    chain.log.push_back(step);
    return chain;
}

}  // namespace

Chain initial_packet(const ExperimentConfig& cfg) {
    validate(cfg);
    Chain chain;
    chain.m = cfg.m;
    chain.hbar = cfg.hbar;
    chain.state.a = Complex(1.0 / (2.0 * cfg.sigma0 * cfg.sigma0), 0.0);
    chain.state.b = Complex(0.0, 0.0);
    chain.state.c = Complex(-0.5 * std::log(cfg.sigma0 * std::sqrt(kPi)), 0.0);
    chain.log.push_back(ChainStep{StepKind::initial, cfg.sigma0, 0.0, Complex(1.0, 0.0)});
    return chain;
}

Chain propagate(const Chain& chain, double T) {
    if (T < 0.0 || !std::isfinite(T)) {
        throw ConfigError("propagation duration must be nonnegative and finite");
    }
    if (T == 0.0) {
        return with_step(chain, ChainStep{StepKind::propagate, 0.0, 0.0, Complex(1.0, 0.0)});
    }
    const double k = chain.m / (2.0 * chain.hbar * T);
    const Complex p = chain.state.a - Complex(0.0, k);
    if (std::abs(p) < 1e-300) {
        throw NumericError("degenerate curvature in propagation step");
    }
    const Complex w = k / (Complex(0.0, 1.0) * p);  // width factor, equals a_after / a_before
    if (!(std::abs(std::arg(w)) < kPi)) {
        throw NumericError("chain step rotates the accumulated argument by pi or more");
    }
    const Complex pref = std::sqrt(w);

    Chain out = chain;
    out.state.a = Complex(0.0, -k) + k * k / p;
    out.state.b = Complex(0.0, -k) * chain.state.b / p;
    out.state.c = chain.state.c + chain.state.b * chain.state.b / (4.0 * p) + std::log(pref);
    out.mu = chain.mu + std::arg(pref);
    out.amp = chain.amp * pref;
    out.log.push_back(ChainStep{StepKind::propagate, T, 0.0, pref});
    return out;
}

Chain apply_slit(const Chain& chain, double center, double width) {
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw ConfigError("slit width must be strictly positive");
    }
    Chain out = chain;
    const double w2 = width * width;
    out.state.a = chain.state.a + Complex(1.0 / (2.0 * w2), 0.0);
    out.state.b = chain.state.b + Complex(center / w2, 0.0);
    out.state.c = chain.state.c + Complex(-center * center / (2.0 * w2), 0.0);
    out.log.push_back(ChainStep{StepKind::slit, center, width, Complex(1.0, 0.0)});
    return out;
}

Chain replay(const Chain& chain) {
    Chain out;
    out.m = chain.m;
    out.hbar = chain.hbar;
    for (const ChainStep& step : chain.log) {
        switch (step.kind) {
            case StepKind::initial: {
                ExperimentConfig cfg;
                cfg.m = chain.m;
                cfg.hbar = chain.hbar;
                cfg.sigma0 = step.arg0;
                out = initial_packet(cfg);
                break;
            }
            case StepKind::propagate:
                out = propagate(out, step.arg0);
                break;
            case StepKind::slit:
                out = apply_slit(out, step.arg0, step.arg1);
                break;
        }
    }
    return out;
}

Complex evaluate(const GaussianState& s, double x) {
    return std::exp(-s.a * x * x + s.b * x + s.c);
}

double norm_squared(const GaussianState& s) {
    const double re_a = s.a.real();
    const double re_b = s.b.real();
    const double re_c = s.c.real();
    return std::exp(2.0 * re_c) * std::sqrt(kPi / (2.0 * re_a)) *
           std::exp(re_b * re_b / (2.0 * re_a));
}

double packet_width(const GaussianState& s) {
    return 1.0 / std::sqrt(2.0 * s.a.real());
}

double packet_center(const GaussianState& s) {
    return s.b.real() / (2.0 * s.a.real());
}

double accumulated_gouy(const Chain& chain) {
    return chain.mu;
}

double window_gouy(double mu) {
    double w = std::remainder(mu, kPi / 2.0);
    if (w <= -kPi / 4.0) {
        w += kPi / 2.0;
    }
    return w;
}

double gouy_distance(double mu1, double mu2) {
    return std::abs(std::remainder(mu1 - mu2, kPi / 2.0));
}

}  // namespace tripleslit
