#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "tripleslit/classical.hpp"
#include "tripleslit/nonclassical.hpp"
#include "tripleslit/params.hpp"

namespace tripleslit {

enum class GouyMode { on, off };
enum class AblationKind { gouy_only, all_constant_phases };

struct SorkinOptions {
    GouyMode gouy = GouyMode::on;
    AblationKind ablation = AblationKind::gouy_only;
};

// The three classical single-slit paths plus the looped path (and optionally
// its mirror), all extracted against the same centered references. i0 is the
// on-axis three-path intensity used to normalize kappa.
struct PathSet {
    PathWavefunction plus;
    PathWavefunction center;
    PathWavefunction minus;
    NcPathWavefunction loop;
    std::optional<NcPathWavefunction> mirror;
    double i0 = 0.0;
    double epsilon = 0.0;
};

PathSet build_paths(const ExperimentConfig& cfg, bool mirror_loop);

// phi(x) = quad x^2 + lin x + constant
struct PhaseDecomposition {
    double quad = 0.0;
    double lin = 0.0;
    double constant = 0.0;
};

double phase_at(const PhaseDecomposition& p, double x);

// Relative phase of path k against the looped path,
// phi_k = (alpha_k - alpha_n) x^2 + (gamma_k - gamma_n) x
//       + ((mu_k - theta_k) - (mu_n - theta_n)).
std::array<PhaseDecomposition, 3> relative_phases(const PathSet& paths);

struct SorkinResult {
    double x = 0.0;
    double i_c = 0.0;
    double i_nc = 0.0;
    double kappa = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;
};

// Three-path intensity |psi_+ + psi_0 + psi_-|^2 at x.
double intensity(const PathSet& paths, double x);

// Raw accumulated Gouy difference mu_c - mu_loop between the classical chain
// and the looped chain.
double delta_mu(const PathSet& paths);

// kappa(x) evaluated cancellation-free from the loop-classical cross terms;
// i_nc is defined as i_c + kappa * i0 so the defining identity holds exactly.
// GouyMode::off recomputes the cross terms with the chosen ablation applied.
SorkinResult sorkin_at(const PathSet& paths, double x, const SorkinOptions& options);

std::vector<SorkinResult> kappa_scan(const PathSet& paths, const std::vector<double>& xs,
                                     const SorkinOptions& options, int threads);

// |kappa(x)| percentage change under the Gouy ablation, NaN when kappa = 0.
double gouy_percentage_error(const PathSet& paths, double x);

struct CenterScanRow {
    double tau = 0.0;
    double mu_c = 0.0;       // windowed
    double mu_nc = 0.0;      // windowed
    double abs_kappa0 = 0.0;
    double percent_error = 0.0;
};

std::vector<CenterScanRow> kappa_center_scan(const ExperimentConfig& cfg,
                                             const std::vector<double>& taus,
                                             bool mirror_loop, int threads);

struct SurfaceRow {
    double tau = 0.0;
    std::vector<double> kappa;
};

std::vector<SurfaceRow> kappa_surface(const ExperimentConfig& cfg,
                                      const std::vector<double>& xs,
                                      const std::vector<double>& taus,
                                      const SorkinOptions& options, bool mirror_loop,
                                      int threads);

// Runs fn(i) for i in [0, n) across at most `threads` workers; exceptions are
// rethrown on the calling thread.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace tripleslit
