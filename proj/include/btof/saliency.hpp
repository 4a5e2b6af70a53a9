#ifndef BTOF_SALIENCY_HPP
#define BTOF_SALIENCY_HPP

#include <Eigen/Dense>

#include "btof/image.hpp"
#include "btof/pixelgrid.hpp"

namespace btof {

enum class Stage { Sb1, Sb2, Sb3, Sb4, Sb5, BBM, FBM, Decrease, Final };

// File-name suffix for a stage: "S_b1".."S_b5", "S_BBM", "S_FBM",
// "S_dec", "S_final".
const char* stage_name(Stage stage);

// Per-region saliency scores in [0,1], tagged by pipeline stage.
struct SaliencyMap {
    Eigen::VectorXd region_scores;
    Stage stage = Stage::BBM;
    int width = 0;  // dimensions of the source image
    int height = 0;

    // Pixel view: every pixel takes its region's score.
    GrayMap render(const SuperpixelMap& sp) const;
};

} // namespace btof

#endif
