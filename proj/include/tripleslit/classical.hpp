#pragma once

#include "tripleslit/gchain.hpp"

namespace tripleslit {

// Decomposed closed form of one path:
//   psi(x) = amp * exp(-c1 x^2 + c2 x + c3) * exp(i (alpha_quad x^2 + gamma x - theta + mu))
// c2 and gamma are signed; mirror-image paths flip their signs. amp is the
// normalization of the centered reference chain, so the centered path has
// c2 = c3 = gamma = theta = 0 exactly.
struct PathWavefunction {
    double amp;
    double c1;          // real curvature (1/m^2), positive
    double c2;          // real linear coefficient (1/m)
    double c3;          // real offset
    double alpha_quad;  // quadratic phase (1/m^2)
    double gamma;       // linear phase (1/m)
    double theta;       // constant phase (rad)
    double mu;          // accumulated Gouy phase (rad), branch tracked
    double slit_center; // (m)
};

// Chain for one straight-through path: propagate(t), slit, propagate(tau).
Chain classical_chain(const ExperimentConfig& cfg, double slit_center);

// Coefficients extracted from the chain; log_amp_reference is the real log
// amplitude of the reference chain that defines amp (and thereby c3).
PathWavefunction extract_path(const Chain& chain, double log_amp_reference,
                              double slit_center);

PathWavefunction build_classical_path(const ExperimentConfig& cfg, double slit_center);

Complex evaluate_path(const PathWavefunction& p, double x);

// Independent closed-form expressions for the slit_center = +d path,
// obtained by carrying out the two Gaussian integrals explicitly. Used as a
// cross-check of the chain engine. Values follow the same signed convention
// as PathWavefunction.
struct ClosedFormClassical {
    double amp;
    double c1;
    double c2;
    double c3;
    double alpha_quad;
    double gamma;
    double theta;
    double mu_principal;  // windowed convention, principal arctangent branch
    double script_a;      // real part of the combined curvature denominator
    double script_b;      // imaginary part of the combined curvature denominator
    double mu_arctan_denominator;  // a sign change across a scan marks a branch crossing
    // alpha_quad and the second c3 term use corrected readings fixed by
    // dimensional analysis (a dropped 1/d and a beta^2 vs beta^4 exponent).
    // They are cross-checks of the chain engine, not primary values.
    bool alpha_corrected;
    bool c3_corrected;
};

ClosedFormClassical closed_form_coefficients(const ExperimentConfig& cfg);

}  // namespace tripleslit
