#ifndef BTOF_CONFIG_HPP
#define BTOF_CONFIG_HPP

#include <array>
#include <string>

#include "btof/pixelgrid.hpp"

namespace btof {

// Every tunable of the pipeline. The config file is flat "key = value"
// text; unknown keys are rejected at load.
struct RunConfig {
    int superpixels = 200;
    double compactness = 10.0;
    Smoother smoother = Smoother::L0Approx;
    double smooth_strength = 0.02;
    double sigma2 = 0.1;
    double alpha1 = 0.6;
    double alpha2 = 0.4;
    double mu = 0.01;
    double threshold_a = 0.025;
    double threshold_b = 0.95;
    double threshold_c = 0.025;
    std::array<double, 5> lambda{0.2, 0.2, 0.2, 0.2, 0.2};
    double gamma1 = 0.5;
    double gamma2 = 0.5;
    int k_clusters = 8;
    int max_iters = 3;
    unsigned kmeans_seed = 0;
    std::string out_dir = "out";
    bool export_stages = false;
};

// Re-checks every module constraint; normalizes (a,b,c) and lambda to
// sum 1 when they do not. Throws ConfigError on violations that cannot
// be repaired by normalization.
void validate_config(RunConfig& cfg);

RunConfig load_config(const std::string& path);
void save_config(const RunConfig& cfg, const std::string& path);

} // namespace btof

#endif
