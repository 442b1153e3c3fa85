#pragma once

#include <vector>

#include "tripleslit/gchain.hpp"
#include "tripleslit/params.hpp"

namespace tripleslit {

enum class QuadratureRule { trapezoid, gauss_legendre };

struct QuadratureSpec {
    double half_width = 8.0;  // in units of the local packet width, >= 6
    int nodes = 513;          // odd, <= 1025
    QuadratureRule rule = QuadratureRule::trapezoid;
};

void validate(const QuadratureSpec& spec);

struct QuadraturePlane {
    std::vector<double> x;
    std::vector<double> w;
};

QuadraturePlane make_plane(double center, double half_width, int nodes, QuadratureRule rule);

// Direct plane-by-plane integral transforms of the same chains the closed
// forms describe. Windows are taken from the chain's own post-aperture packet
// center and width. Each result is computed at spec.nodes and 2*nodes-1 nodes;
// disagreement beyond 1e-6 (relative to the largest detector amplitude)
// raises NumericError, otherwise the finer result is returned.
std::vector<Complex> quad_classical(const ExperimentConfig& cfg, double slit_center,
                                    const std::vector<double>& x_det,
                                    const QuadratureSpec& spec);

// Looped-path amplitude without the reported loop scale, comparable to the
// bare looped chain.
std::vector<Complex> quad_nonclassical(const ExperimentConfig& cfg, double epsilon,
                                       const std::vector<double>& x_det,
                                       const QuadratureSpec& spec, bool mirror = false);

}  // namespace tripleslit
