#pragma once

#include <string>

#include "tripleslit/oracle.hpp"
#include "tripleslit/params.hpp"
#include "tripleslit/sorkin.hpp"

namespace tripleslit {

enum class GouySelect { on, off, both };

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 1;
};

inline constexpr GridSpec kDefaultXGrid{-1e-3, 1e-3, 2001};
inline constexpr GridSpec kDefaultTauGrid{0.5e-9, 20e-9, 200};

struct CommandContext {
    ExperimentConfig cfg;
    int threads = 1;
    GouySelect gouy = GouySelect::on;
    AblationKind ablation = AblationKind::gouy_only;
    bool mirror_loop = false;
    std::string out_path;      // empty selects the per-command default file name
    std::string command_line;  // echoed into the manifest
};

int cmd_intensity(const CommandContext& ctx, int slits, const GridSpec& x_grid);
int cmd_kappa(const CommandContext& ctx, const GridSpec& x_grid);
int cmd_surface(const CommandContext& ctx, const GridSpec& x_grid, const GridSpec& tau_grid);
int cmd_gouy(const CommandContext& ctx, const GridSpec& tau_grid);
int cmd_verify(const CommandContext& ctx, const QuadratureSpec& spec);

}  // namespace tripleslit
