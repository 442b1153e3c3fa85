#pragma once

#include "tripleslit/errors.hpp"

namespace tripleslit {

enum class EpsilonPolicy { automatic, explicit_value };

// All physical inputs, strict SI units. Defaults are the electron
// configuration used throughout the test suite.
struct ExperimentConfig {
    double m = 9.11e-31;            // particle mass (kg)
    double hbar = 1.054571817e-34;  // reduced Planck constant (J s)
    double sigma0 = 62e-9;          // initial packet width (m)
    double beta = 62e-9;            // slit width (m)
    double d = 650e-9;              // slit separation, center to center (m)
    double t = 18e-9;               // source-to-slit flight time (s)
    double tau = 15e-9;             // slit-to-detector flight time (s)
    EpsilonPolicy epsilon_policy = EpsilonPolicy::automatic;
    double epsilon_value = 0.0;     // inter-slit transit time when explicit (s)
};

struct DerivedScales {
    double tau0;     // packet spreading time m sigma0^2 / hbar (s)
    double delta_p;  // momentum uncertainty hbar / (sqrt(2) sigma0) (kg m/s)
    double delta_v;  // velocity uncertainty delta_p / m (m/s)
};

// Throws ConfigError when any parameter is outside its domain.
void validate(const ExperimentConfig& cfg);

// Inter-slit transit time: d / delta_v for the automatic policy,
// the stored value for the explicit policy.
double estimate_epsilon(const ExperimentConfig& cfg);

DerivedScales derived_scales(const ExperimentConfig& cfg);

}  // namespace tripleslit
