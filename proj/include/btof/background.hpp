#ifndef BTOF_BACKGROUND_HPP
#define BTOF_BACKGROUND_HPP

#include <array>
#include <vector>

#include "btof/graph.hpp"
#include "btof/ranking.hpp"
#include "btof/saliency.hpp"

namespace btof {

// One of the five fixed boundary combinations:
//   BT1 = {top, bottom, left, right}   BT2 = {top, bottom, left}
//   BT3 = {top, bottom, right}         BT4 = {top, left, right}
//   BT5 = {bottom, left, right}
struct BackgroundTemplate {
    int id = 1; // 1..5
    std::array<bool, 4> sides{}; // indexed by Side

    bool uses(Side s) const { return sides[static_cast<int>(s)]; }
};

const std::array<BackgroundTemplate, 5>& background_templates();

// Nonnegative mixing weights for the five template maps; normalized to
// sum to 1.
struct TemplateWeights {
    std::array<double, 5> lambda{0.2, 0.2, 0.2, 0.2, 0.2};
    void normalize();
};

// Per-template map: one ranking per template side with that side's
// boundary nodes as queries, normalized, complemented, multiplied over
// sides, then rescaled to [0,1].
SaliencyMap template_map(const AffinityGraph& g, const BackgroundTemplate& t,
                         const RankingParams& rp = {});

// Convex combination of the five template maps (weights renormalized to
// the simplex), clamped to [0,1].
SaliencyMap aggregate(const std::array<SaliencyMap, 5>& maps,
                      const TemplateWeights& w);

struct ValidationPair {
    std::array<SaliencyMap, 5> maps;
    BinaryMask gt;
    SuperpixelMap segmentation;
};

// Nonnegative least squares of the ground truth against the five
// template maps, stacked over all validation pairs, renormalized to the
// simplex. Ties prefer the larger support; five identical maps yield
// uniform weights.
TemplateWeights fit_weights(const std::vector<ValidationPair>& validation);

} // namespace btof

#endif
