#include "tripleslit/params.hpp"

#include <cmath>
#include <string>

namespace tripleslit {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError(std::string(name) + " must be strictly positive and finite");
    }
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
    require_positive(cfg.m, "m");
    require_positive(cfg.hbar, "hbar");
    require_positive(cfg.sigma0, "sigma0");
    require_positive(cfg.beta, "beta");
    require_positive(cfg.d, "d");
    require_positive(cfg.t, "t");
    require_positive(cfg.tau, "tau");
    if (cfg.epsilon_policy == EpsilonPolicy::explicit_value) {
        require_positive(cfg.epsilon_value, "epsilon");
    }
}

double estimate_epsilon(const ExperimentConfig& cfg) {
    validate(cfg);
    if (cfg.epsilon_policy == EpsilonPolicy::explicit_value) {
        return cfg.epsilon_value;
    }
    // d / delta_v with delta_v = hbar / (sqrt(2) sigma0 m).
    return cfg.d * cfg.m * std::sqrt(2.0) * cfg.sigma0 / cfg.hbar;
}

DerivedScales derived_scales(const ExperimentConfig& cfg) {
    validate(cfg);
    DerivedScales scales{};
    scales.tau0 = cfg.m * cfg.sigma0 * cfg.sigma0 / cfg.hbar;
    scales.delta_p = cfg.hbar / (std::sqrt(2.0) * cfg.sigma0);
    scales.delta_v = scales.delta_p / cfg.m;
    return scales;
}

}  // namespace tripleslit
