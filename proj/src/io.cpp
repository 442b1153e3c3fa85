#include "tripleslit/io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tripleslit/errors.hpp"

namespace tripleslit {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

struct UnitSuffix {
    const char* suffix;
    double factor;
};

double parse_with_units(const std::string& text, const UnitSuffix* units, int n_units,
                        const char* what) {
    const std::string s = trim(text);
    if (s.empty()) {
        throw ConfigError(std::string("empty ") + what + " value");
    }
    double factor = 1.0;
    std::string numeric = s;
    for (int i = 0; i < n_units; ++i) {
        const std::string suffix = units[i].suffix;
        if (s.size() > suffix.size() &&
            s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
            numeric = trim(s.substr(0, s.size() - suffix.size()));
            factor = units[i].factor;
            break;
        }
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(numeric.c_str(), &end);
    if (end == numeric.c_str() || *end != '\0' || errno == ERANGE) {
        throw ConfigError(std::string("cannot parse ") + what + " value '" + text + "'");
    }
    return value * factor;
}

}  // namespace

double parse_number(const std::string& text) {
    static const UnitSuffix none[] = {{"", 1.0}};
    return parse_with_units(text, none, 0, "numeric");
}

double parse_length(const std::string& text) {
    // longest suffixes first so "nm" is not read as "m"
    static const UnitSuffix units[] = {{"nm", 1e-9}, {"um", 1e-6}, {"mm", 1e-3}, {"m", 1.0}};
    return parse_with_units(text, units, 4, "length");
}

double parse_time(const std::string& text) {
    static const UnitSuffix units[] = {{"ns", 1e-9}, {"us", 1e-6}, {"s", 1.0}};
    return parse_with_units(text, units, 3, "time");
}

std::vector<ConfigEntry> read_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::vector<ConfigEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config file '" + path + "' line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        ConfigEntry entry{trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1))};
        if (entry.key.empty() || entry.value.empty()) {
            throw ConfigError("config file '" + path + "' line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "m") {
        cfg.m = parse_number(value);
    } else if (key == "hbar") {
        cfg.hbar = parse_number(value);
    } else if (key == "sigma0") {
        cfg.sigma0 = parse_length(value);
    } else if (key == "beta") {
        cfg.beta = parse_length(value);
    } else if (key == "d") {
        cfg.d = parse_length(value);
    } else if (key == "t") {
        cfg.t = parse_time(value);
    } else if (key == "tau") {
        cfg.tau = parse_time(value);
    } else if (key == "epsilon") {
        cfg.epsilon_policy = EpsilonPolicy::explicit_value;
        cfg.epsilon_value = parse_time(value);
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
    for (const ConfigEntry& entry : read_key_value_file(path)) {
        apply_config_entry(base, entry.key, entry.value);
    }
    return base;
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::vector<std::string> manifest_lines(const RunManifest& manifest) {
    std::vector<std::string> lines;
    lines.push_back("command: " + manifest.command);
    lines.push_back(std::string("version: ") + kVersion);
    const ExperimentConfig& c = manifest.cfg;
    lines.push_back("m_kg: " + format_sci(c.m));
    lines.push_back("hbar_Js: " + format_sci(c.hbar));
    lines.push_back("sigma0_m: " + format_sci(c.sigma0));
    lines.push_back("beta_m: " + format_sci(c.beta));
    lines.push_back("d_m: " + format_sci(c.d));
    lines.push_back("t_s: " + format_sci(c.t));
    lines.push_back("tau_s: " + format_sci(c.tau));
    lines.push_back(std::string("epsilon_policy: ") +
                    (c.epsilon_policy == EpsilonPolicy::automatic ? "automatic" : "explicit"));
    lines.push_back("epsilon_s: " + format_sci(manifest.epsilon));
    lines.push_back("tau0_s: " + format_sci(derived_scales(c).tau0));
    lines.push_back(
        "convention: loop hops last 2*epsilon each; reported loop amplitude carries the "
        "single combined-hop prefactor exp(i pi/4) sqrt(4 pi hbar epsilon / m)");
    lines.push_back(
        "convention: spreading prefactor branch exp(-i pi/4) sqrt(m / (2 pi hbar T)); "
        "reported Gouy phases windowed to (-pi/4, pi/4]");
    for (const std::string& note : manifest.notes) {
        lines.push_back(note);
    }
    std::string outputs = "outputs:";
    for (const std::string& out : manifest.outputs) {
        outputs += " " + out;
    }
    lines.push_back(outputs);
    return lines;
}

void write_csv(const std::string& path, const RunManifest& manifest,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    std::ostringstream body;
    for (const std::string& line : manifest_lines(manifest)) {
        body << "# " << line << "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        body << (i ? "," : "") << columns[i];
    }
    body << "\n";
    for (const std::vector<double>& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            body << (i ? "," : "") << format_sci(row[i]);
        }
        body << "\n";
    }
    write_text_file(path, body.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file '" + path + "'");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing output file '" + path + "'");
    }
}

std::string plot_script_path(const std::string& csv_path) {
    const std::size_t dot = csv_path.find_last_of('.');
    const std::size_t sep = csv_path.find_last_of("/\\");
    if (dot == std::string::npos || (sep != std::string::npos && dot < sep)) {
        return csv_path + ".gp";
    }
    return csv_path.substr(0, dot) + ".gp";
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) {
        throw ConfigError("grid needs at least one point");
    }
    std::vector<double> xs(n);
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        xs[i] = lo + i * step;
    }
    xs[n - 1] = hi;
    return xs;
}

}  // namespace tripleslit
