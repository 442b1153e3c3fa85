#pragma once

#include <complex>
#include <vector>

#include "tripleslit/params.hpp"

namespace tripleslit {

using Complex = std::complex<double>;

// psi(x) = exp(-a x^2 + b x + c). Closed under free propagation and
// Gaussian aperture multiplication. Re(a) > 0 for normalizable states.
struct GaussianState {
    Complex a;  // curvature (1/m^2)
    Complex b;  // linear coefficient (1/m)
    Complex c;  // log amplitude
};

enum class StepKind { initial, propagate, slit };

struct ChainStep {
    StepKind kind;
    double arg0 = 0.0;  // initial: sigma0 (m); propagate: duration (s); slit: center (m)
    double arg1 = 0.0;  // slit: width (m)
    Complex prefactor{1.0, 0.0};  // amplitude factor contributed by this step
};

// A GaussianState together with its construction log and branch-tracked
// phase bookkeeping. Value type; every operation returns a new Chain.
struct Chain {
    double m = 0.0;
    double hbar = 0.0;
    GaussianState state;
    double mu = 0.0;        // accumulated Gouy phase, one principal arg per step
    Complex amp{1.0, 0.0};  // accumulated prefactor product
    std::vector<ChainStep> log;
};

// Minimum-uncertainty packet centered at the origin:
// a = 1/(2 sigma0^2), b = 0, c = -log(sigma0 sqrt(pi))/2.
Chain initial_packet(const ExperimentConfig& cfg);

// Free evolution for duration T >= 0 (T = 0 is the identity).
// Throws NumericError when the intermediate denominator degenerates or a
// single step would rotate the accumulated argument by pi or more.
Chain propagate(const Chain& chain, double T);

// Pointwise multiplication by exp(-(x - center)^2 / (2 width^2)).
Chain apply_slit(const Chain& chain, double center, double width);

// Rebuilds the chain from its log; bit-identical to the original.
Chain replay(const Chain& chain);

Complex evaluate(const GaussianState& s, double x);

// Integral of |psi|^2 over the line, in closed form.
double norm_squared(const GaussianState& s);

double packet_width(const GaussianState& s);   // 1 / sqrt(2 Re a)
double packet_center(const GaussianState& s);  // Re b / (2 Re a)

// The branch-tracked accumulated Gouy phase of the chain (no windowing).
double accumulated_gouy(const Chain& chain);

// Nearest multiple of pi/2 removed; result in (-pi/4, pi/4].
double window_gouy(double mu);

// Angular distance between two angles modulo pi/2.
double gouy_distance(double mu1, double mu2);

}  // namespace tripleslit
