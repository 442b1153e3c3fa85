#pragma once

#include <string>
#include <vector>

#include "tripleslit/params.hpp"

namespace tripleslit {

inline constexpr const char* kVersion = "1.0.0";

// Numeric parsing with optional unit suffixes, applied once at the CLI
// boundary; everything past it is strict SI.
double parse_number(const std::string& text);
double parse_length(const std::string& text);  // nm, um, mm, m
double parse_time(const std::string& text);    // ns, us, s

struct ConfigEntry {
    std::string key;
    std::string value;
};

// key = value lines, '#' comments, blank lines ignored.
std::vector<ConfigEntry> read_key_value_file(const std::string& path);

// Recognized keys: m, hbar, sigma0, beta, d, t, tau, epsilon. Lengths accept
// length suffixes, times accept time suffixes. Setting epsilon switches the
// config to the explicit-epsilon policy.
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

ExperimentConfig load_config(const std::string& path, ExperimentConfig base);

struct RunManifest {
    std::string command;
    ExperimentConfig cfg;
    double epsilon = 0.0;
    std::vector<std::string> outputs;
    std::vector<std::string> notes;
};

std::vector<std::string> manifest_lines(const RunManifest& manifest);

std::string format_sci(double v);  // scientific notation, 12 significant digits

void write_csv(const std::string& path, const RunManifest& manifest,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

void write_text_file(const std::string& path, const std::string& content);

// Companion plot script path for a CSV path: extension replaced with .gp.
std::string plot_script_path(const std::string& csv_path);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace tripleslit
