#include "btof/saliency.hpp"

#include "btof/errors.hpp"

namespace btof {

const char* stage_name(Stage stage) {
    switch (stage) {
    case Stage::Sb1: return "S_b1";
    case Stage::Sb2: return "S_b2";
    case Stage::Sb3: return "S_b3";
    case Stage::Sb4: return "S_b4";
    case Stage::Sb5: return "S_b5";
    case Stage::BBM: return "S_BBM";
    case Stage::FBM: return "S_FBM";
    case Stage::Decrease: return "S_dec";
    case Stage::Final: return "S_final";
    }
    return "S_unknown";
}

GrayMap SaliencyMap::render(const SuperpixelMap& sp) const {
    if (sp.width != width || sp.height != height)
        throw DimensionMismatch("render: superpixel map dimensions differ from map");
    if (sp.region_count != region_scores.size())
        throw DimensionMismatch("render: region count differs from score count");
    GrayMap out;
    out.width = width;
    out.height = height;
    out.values.resize(static_cast<std::size_t>(width) * height);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = region_scores(sp.labels[i]);
    return out;
}

} // namespace btof
