#pragma once

#include "tripleslit/classical.hpp"
#include "tripleslit/gchain.hpp"
#include "tripleslit/params.hpp"

namespace tripleslit {

// Auxiliary complex parameters of the looped chain, one per plane. zk tracks
// the inverse complex width just after the k-th stage; the products p, z4, z5,
// z6 are the combinations the closed-form coefficients are written in.
struct ZChain {
    Complex z0;
    Complex z1;
    Complex z2;
    Complex z3;
    Complex z4;  // z1^2 z2
    Complex z5;  // z1^2 z2^2 z3
    Complex z6;  // z1 z2 z3
    double z_r;  // Im(z0 z1 z2 z3)
    double z_i;  // Re(z0 z1 z2 z3)
};

ZChain build_zchain(const ExperimentConfig& cfg, double epsilon);

// Principal-branch looped-path Gouy phase, (1/2) atan(z_i / z_r).
double gouy_nc(const ZChain& z);

// Looped chain: spread to the slit plane, pass the sg*d slit, hop to the
// center slit and back out to the -sg*d slit (each hop lasting 2*epsilon),
// then spread to the screen. sg = +1 for the forward loop, -1 for its mirror.
Chain nonclassical_chain(const ExperimentConfig& cfg, double epsilon, int sg);

// Amplitude scale applied to the reported looped-path state, exp(i pi/4) *
// sqrt(4 pi hbar epsilon / m).
Complex loop_amplitude_scale(const ExperimentConfig& cfg, double epsilon);

struct NcPathWavefunction {
    PathWavefunction coeffs;
    double epsilon = 0.0;
    double elapsed_time = 0.0;  // t + 4 epsilon
    bool mirror = false;
};

NcPathWavefunction build_nonclassical_path(const ExperimentConfig& cfg, double epsilon,
                                           bool mirror);

// Closed-form looped-path coefficients written in the ZChain combinations.
// Same signed conventions as PathWavefunction. alpha_quad uses the corrected
// reading (quadratic chirp from the final spread plus the z3 curvature term).
struct ClosedFormNc {
    double amp = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double alpha_quad = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
    double mu_principal = 0.0;
    bool alpha_corrected = false;
};

ClosedFormNc closed_form_nc_coefficients(const ExperimentConfig& cfg, double epsilon);

}  // namespace tripleslit
