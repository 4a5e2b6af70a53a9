#include "btof/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "btof/errors.hpp"

namespace btof {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("bad numeric value for " + key + ": '" + value + "'");
    return v;
}

long parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("bad integer value for " + key + ": '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true")
        return true;
    if (value == "false")
        return false;
    throw ConfigError("bad boolean value for " + key + ": '" + value + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void normalize_triplet(double* values, int count, const char* what) {
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        if (values[i] < 0.0)
            throw ConfigError(std::string(what) + " entries must be nonnegative");
        sum += values[i];
    }
    if (sum <= 0.0)
        throw ConfigError(std::string(what) + " entries must not all be zero");
    if (std::abs(sum - 1.0) > 1e-9)
        for (int i = 0; i < count; ++i)
            values[i] /= sum;
}

} // namespace

void validate_config(RunConfig& cfg) {
    if (cfg.superpixels < 4)
        throw ConfigError("superpixels must be at least 4");
    if (cfg.compactness <= 0.0)
        throw ConfigError("compactness must be positive");
    if (cfg.smooth_strength < 0.0)
        throw ConfigError("smooth_strength must be nonnegative");
    if (cfg.sigma2 <= 0.0)
        throw ConfigError("sigma2 must be positive");
    if (cfg.alpha1 < 0.0 || cfg.alpha2 < 0.0)
        throw ConfigError("alpha1/alpha2 must be nonnegative");
    if (cfg.mu <= 0.0)
        throw ConfigError("mu must be positive");
    double abc[3] = {cfg.threshold_a, cfg.threshold_b, cfg.threshold_c};
    normalize_triplet(abc, 3, "threshold a/b/c");
    cfg.threshold_a = abc[0];
    cfg.threshold_b = abc[1];
    cfg.threshold_c = abc[2];
    normalize_triplet(cfg.lambda.data(), 5, "lambda");
    if (cfg.gamma1 < 0.0 || cfg.gamma2 < 0.0 || cfg.gamma1 + cfg.gamma2 <= 0.0)
        throw ConfigError("gamma1 + gamma2 must be positive");
    if (cfg.k_clusters < 1)
        throw ConfigError("k_clusters must be at least 1");
    if (cfg.max_iters < 0)
        throw ConfigError("max_iters must be nonnegative");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);

    RunConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "superpixels")
            cfg.superpixels = static_cast<int>(parse_int(key, value));
        else if (key == "compactness")
            cfg.compactness = parse_double(key, value);
        else if (key == "smoother") {
            if (value == "none")
                cfg.smoother = Smoother::None;
            else if (value == "l0-approx")
                cfg.smoother = Smoother::L0Approx;
            else
                throw ConfigError("smoother must be 'none' or 'l0-approx', got '" +
                                  value + "'");
        } else if (key == "smooth_strength")
            cfg.smooth_strength = parse_double(key, value);
        else if (key == "sigma2")
            cfg.sigma2 = parse_double(key, value);
        else if (key == "alpha1")
            cfg.alpha1 = parse_double(key, value);
        else if (key == "alpha2")
            cfg.alpha2 = parse_double(key, value);
        else if (key == "mu")
            cfg.mu = parse_double(key, value);
        else if (key == "threshold_a")
            cfg.threshold_a = parse_double(key, value);
        else if (key == "threshold_b")
            cfg.threshold_b = parse_double(key, value);
        else if (key == "threshold_c")
            cfg.threshold_c = parse_double(key, value);
        else if (key == "lambda1")
            cfg.lambda[0] = parse_double(key, value);
        else if (key == "lambda2")
            cfg.lambda[1] = parse_double(key, value);
        else if (key == "lambda3")
            cfg.lambda[2] = parse_double(key, value);
        else if (key == "lambda4")
            cfg.lambda[3] = parse_double(key, value);
        else if (key == "lambda5")
            cfg.lambda[4] = parse_double(key, value);
        else if (key == "gamma1")
            cfg.gamma1 = parse_double(key, value);
        else if (key == "gamma2")
            cfg.gamma2 = parse_double(key, value);
        else if (key == "k_clusters")
            cfg.k_clusters = static_cast<int>(parse_int(key, value));
        else if (key == "max_iters")
            cfg.max_iters = static_cast<int>(parse_int(key, value));
        else if (key == "kmeans_seed")
            cfg.kmeans_seed = static_cast<unsigned>(parse_int(key, value));
        else if (key == "out_dir")
            cfg.out_dir = value;
        else if (key == "export_stages")
            cfg.export_stages = parse_bool(key, value);
        else
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
    }
    validate_config(cfg);
    return cfg;
}

void save_config(const RunConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write config file: " + path);
    out << "superpixels = " << cfg.superpixels << '\n';
    out << "compactness = " << format_double(cfg.compactness) << '\n';
    out << "smoother = " << (cfg.smoother == Smoother::None ? "none" : "l0-approx") << '\n';
    out << "smooth_strength = " << format_double(cfg.smooth_strength) << '\n';
    out << "sigma2 = " << format_double(cfg.sigma2) << '\n';
    out << "alpha1 = " << format_double(cfg.alpha1) << '\n';
    out << "alpha2 = " << format_double(cfg.alpha2) << '\n';
    out << "mu = " << format_double(cfg.mu) << '\n';
    out << "threshold_a = " << format_double(cfg.threshold_a) << '\n';
    out << "threshold_b = " << format_double(cfg.threshold_b) << '\n';
    out << "threshold_c = " << format_double(cfg.threshold_c) << '\n';
    for (int k = 0; k < 5; ++k)
        out << "lambda" << (k + 1) << " = " << format_double(cfg.lambda[k]) << '\n';
    out << "gamma1 = " << format_double(cfg.gamma1) << '\n';
    out << "gamma2 = " << format_double(cfg.gamma2) << '\n';
    out << "k_clusters = " << cfg.k_clusters << '\n';
    out << "max_iters = " << cfg.max_iters << '\n';
    out << "kmeans_seed = " << cfg.kmeans_seed << '\n';
    out << "out_dir = " << cfg.out_dir << '\n';
    out << "export_stages = " << (cfg.export_stages ? "true" : "false") << '\n';
    if (!out)
        throw ConfigError("failed writing config file: " + path);
}

} // namespace btof
