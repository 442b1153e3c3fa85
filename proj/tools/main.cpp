#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "tripleslit/commands.hpp"
#include "tripleslit/errors.hpp"
#include "tripleslit/io.hpp"

namespace {

using namespace tripleslit;

struct RawOptions {
    std::string config_path;
    std::string out;
    int threads = 1;
    std::string gouy = "on";
    std::string ablation = "gouy";
    std::string mirror = "off";
    std::string m, sigma0, beta, d, t, tau, epsilon;
};

CommandContext build_context(const RawOptions& raw, const std::string& command_line) {
    ExperimentConfig cfg;
    if (!raw.config_path.empty()) {
        cfg = load_config(raw.config_path, cfg);
    }
    if (!raw.m.empty()) {
        apply_config_entry(cfg, "m", raw.m);
    }
    if (!raw.sigma0.empty()) {
        apply_config_entry(cfg, "sigma0", raw.sigma0);
    }
    if (!raw.beta.empty()) {
        apply_config_entry(cfg, "beta", raw.beta);
    }
    if (!raw.d.empty()) {
        apply_config_entry(cfg, "d", raw.d);
    }
    if (!raw.t.empty()) {
        apply_config_entry(cfg, "t", raw.t);
    }
    if (!raw.tau.empty()) {
        apply_config_entry(cfg, "tau", raw.tau);
    }
    if (!raw.epsilon.empty()) {
        apply_config_entry(cfg, "epsilon", raw.epsilon);
    }
    validate(cfg);

    CommandContext ctx;
    ctx.cfg = cfg;
    if (raw.threads < 1) {
        throw ConfigError("--threads must be at least 1");
    }
    ctx.threads = raw.threads;
    if (raw.gouy == "on") {
        ctx.gouy = GouySelect::on;
    } else if (raw.gouy == "off") {
        ctx.gouy = GouySelect::off;
    } else {
        ctx.gouy = GouySelect::both;
    }
    ctx.ablation = (raw.ablation == "gouy") ? AblationKind::gouy_only
                                            : AblationKind::all_constant_phases;
    ctx.mirror_loop = raw.mirror == "on";
    ctx.out_path = raw.out;
    ctx.command_line = command_line;
    return ctx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triple-slit matter-wave interference with a slit-to-slit looping path"};
    app.require_subcommand(1);

    RawOptions raw;
    app.add_option("--config", raw.config_path, "key=value parameter file");
    app.add_option("--out", raw.out, "output CSV path (plot script uses the same stem)");
    app.add_option("--threads", raw.threads, "worker threads for scans")->capture_default_str();
    app.add_option("--gouy", raw.gouy, "keep, drop, or emit both axial-phase treatments")
        ->check(CLI::IsMember({"on", "off", "both"}))
        ->capture_default_str();
    app.add_option("--ablation", raw.ablation,
                   "what the off-mode drops: the accumulated phase difference or every "
                   "constant phase term")
        ->check(CLI::IsMember({"gouy", "constants"}))
        ->capture_default_str();
    app.add_option("--mirror-loop", raw.mirror, "also include the reversed loop")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    app.add_option("--m", raw.m, "particle mass in kg");
    app.add_option("--sigma0", raw.sigma0, "initial packet width (nm/um/mm/m)");
    app.add_option("--beta", raw.beta, "slit aperture width (nm/um/mm/m)");
    app.add_option("--d", raw.d, "slit spacing (nm/um/mm/m)");
    app.add_option("--t", raw.t, "source-to-slits flight time (ns/us/s)");
    app.add_option("--tau", raw.tau, "slits-to-screen flight time (ns/us/s)");
    app.add_option("--epsilon", raw.epsilon, "explicit slit-to-slit hop time (ns/us/s)");

    int slits = 3;
    std::string xmin = "-1mm", xmax = "1mm";
    int points = 2001;
    std::string tau_min = "0.5ns", tau_max = "20ns";
    int tau_points = 200;

    CLI::App* intensity = app.add_subcommand("intensity", "screen intensity patterns");
    intensity->add_option("--slits", slits, "1 or 3 apertures")->capture_default_str();
    intensity->add_option("--xmin", xmin, "screen window start")->capture_default_str();
    intensity->add_option("--xmax", xmax, "screen window end")->capture_default_str();
    intensity->add_option("--points", points, "screen samples")->capture_default_str();

    CLI::App* kappa = app.add_subcommand("kappa", "three-path interference residue vs x");
    kappa->add_option("--xmin", xmin, "screen window start")->capture_default_str();
    kappa->add_option("--xmax", xmax, "screen window end")->capture_default_str();
    kappa->add_option("--points", points, "screen samples")->capture_default_str();

    CLI::App* surface = app.add_subcommand("surface", "interference residue over x and tau");
    surface->add_option("--xmin", xmin, "screen window start")->capture_default_str();
    surface->add_option("--xmax", xmax, "screen window end")->capture_default_str();
    surface->add_option("--points", points, "screen samples")->capture_default_str();
    surface->add_option("--tau-min", tau_min, "first screen flight time")->capture_default_str();
    surface->add_option("--tau-max", tau_max, "last screen flight time")->capture_default_str();
    surface->add_option("--tau-points", tau_points, "flight-time samples")->capture_default_str();

    CLI::App* gouy = app.add_subcommand("gouy", "axial phases and on-axis residue vs tau");
    gouy->add_option("--tau-min", tau_min, "first screen flight time")->capture_default_str();
    gouy->add_option("--tau-max", tau_max, "last screen flight time")->capture_default_str();
    gouy->add_option("--tau-points", tau_points, "flight-time samples")->capture_default_str();

    int nodes = 513;
    double half_width = 8.0;
    std::string rule = "trapezoid";
    CLI::App* verify = app.add_subcommand("verify", "self-checks against direct quadrature");
    verify->add_option("--nodes", nodes, "quadrature nodes per plane")->capture_default_str();
    verify->add_option("--half-width", half_width, "window half-width in packet widths")
        ->capture_default_str();
    verify->add_option("--rule", rule, "quadrature rule")
        ->check(CLI::IsMember({"trapezoid", "gauss"}))
        ->capture_default_str();

    for (CLI::App* sub : {intensity, kappa, surface, gouy, verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::config_error);
    }

    std::string command_line = "tripleslit";
    for (int i = 1; i < argc; ++i) {
        command_line += std::string(" ") + argv[i];
    }

    try {
        const CommandContext ctx = build_context(raw, command_line);
        if (*intensity) {
            const GridSpec xg{parse_length(xmin), parse_length(xmax), points};
            return cmd_intensity(ctx, slits, xg);
        }
        if (*kappa) {
            const GridSpec xg{parse_length(xmin), parse_length(xmax), points};
            return cmd_kappa(ctx, xg);
        }
        if (*surface) {
            const GridSpec xg{parse_length(xmin), parse_length(xmax), points};
            const GridSpec tg{parse_time(tau_min), parse_time(tau_max), tau_points};
            return cmd_surface(ctx, xg, tg);
        }
        if (*gouy) {
            const GridSpec tg{parse_time(tau_min), parse_time(tau_max), tau_points};
            return cmd_gouy(ctx, tg);
        }
        QuadratureSpec spec;
        spec.nodes = nodes;
        spec.half_width = half_width;
        spec.rule = (rule == "gauss") ? QuadratureRule::gauss_legendre
                                      : QuadratureRule::trapezoid;
        return cmd_verify(ctx, spec);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return static_cast<int>(ExitCode::config_error);
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return static_cast<int>(ExitCode::numeric_error);
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return static_cast<int>(ExitCode::io_error);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
