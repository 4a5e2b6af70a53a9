#include "btof/foreground.hpp"

#include <cassert>

#include "btof/errors.hpp"

namespace btof {

double adaptive_threshold(const SaliencyMap& m, const ThresholdParams& p) {
    if (m.region_scores.size() == 0)
        throw InvalidArgument("adaptive_threshold: empty map");
    const double lo = m.region_scores.minCoeff();
    const double hi = m.region_scores.maxCoeff();
    const double mean = m.region_scores.mean();
    return p.a * lo + p.b * hi + p.c * mean;
}

SaliencyMap foreground_map(const AffinityGraph& g, const SaliencyMap& bbm,
                           const ThresholdParams& tp, const RankingParams& rp) {
    if (bbm.stage != Stage::BBM)
        throw InvalidArgument("foreground_map: input map is not the BBM stage");
    if (bbm.region_scores.size() != g.n)
        throw DimensionMismatch("foreground_map: map region count differs from graph");

    const double threshold = adaptive_threshold(bbm, tp);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(g.n);
    for (int i = 0; i < g.n; ++i)
        if (bbm.region_scores(i) >= threshold)
            y(i) = 1.0;
    // the max-scoring region always reaches T while a+b+c = 1
    assert(y.sum() > 0.0);

    SaliencyMap out;
    out.region_scores = normalize_scores(rank(g, y, rp));
    out.stage = Stage::FBM;
    out.width = bbm.width;
    out.height = bbm.height;
    return out;
}

} // namespace btof
