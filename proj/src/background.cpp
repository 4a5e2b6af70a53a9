#include "btof/background.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "btof/errors.hpp"

namespace btof {

const std::array<BackgroundTemplate, 5>& background_templates() {
    // sides indexed {top, bottom, left, right}
    static const std::array<BackgroundTemplate, 5> templates = {{
        {1, {true, true, true, true}},
        {2, {true, true, true, false}},
        {3, {true, true, false, true}},
        {4, {true, false, true, true}},
        {5, {false, true, true, true}},
    }};
    return templates;
}

void TemplateWeights::normalize() {
    double sum = 0.0;
    for (double v : lambda) {
        if (v < 0.0)
            throw InvalidArgument("template weights must be nonnegative");
        sum += v;
    }
    if (sum <= 0.0)
        throw InvalidArgument("template weights must not all be zero");
    for (double& v : lambda)
        v /= sum;
}

SaliencyMap template_map(const AffinityGraph& g, const BackgroundTemplate& t,
                         const RankingParams& rp) {
    Eigen::VectorXd product = Eigen::VectorXd::Ones(g.n);
    bool any_side = false;
    for (int s = 0; s < 4; ++s) {
        if (!t.sides[s])
            continue;
        any_side = true;
        const Side side = static_cast<Side>(s);
        const std::vector<int> queries = boundary_set(g, side);
        if (queries.empty())
            throw EmptyBoundary("template_map: no region touches side " +
                                std::to_string(s));
        Eigen::VectorXd y = Eigen::VectorXd::Zero(g.n);
        for (int q : queries)
            y(q) = 1.0;
        const Eigen::VectorXd relevance = normalize_scores(rank(g, y, rp));
        product = product.cwiseProduct(Eigen::VectorXd::Ones(g.n) - relevance);
    }
    if (!any_side)
        throw InvalidArgument("template_map: template has no sides");

    SaliencyMap map;
    map.region_scores = normalize_scores(product);
    map.stage = static_cast<Stage>(static_cast<int>(Stage::Sb1) + (t.id - 1));
    map.width = g.width;
    map.height = g.height;
    return map;
}

SaliencyMap aggregate(const std::array<SaliencyMap, 5>& maps,
                      const TemplateWeights& w) {
    const Eigen::Index n = maps[0].region_scores.size();
    for (const SaliencyMap& m : maps)
        if (m.region_scores.size() != n)
            throw DimensionMismatch("aggregate: template maps have differing region counts");

    TemplateWeights weights = w;
    weights.normalize();
    Eigen::VectorXd combined = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < 5; ++k)
        combined += weights.lambda[k] * maps[k].region_scores;

    SaliencyMap out;
    // convex combination of [0,1] maps; clamp only guards float dust
    out.region_scores = combined.cwiseMax(0.0).cwiseMin(1.0);
    out.stage = Stage::BBM;
    out.width = maps[0].width;
    out.height = maps[0].height;
    return out;
}

TemplateWeights fit_weights(const std::vector<ValidationPair>& validation) {
    if (validation.empty())
        throw EmptyValidationSet("fit_weights: no validation pairs");

    // normal equations accumulated region-wise, weighted by region size;
    // equivalent to the pixel-level least squares
    Eigen::Matrix<double, 5, 5> ata = Eigen::Matrix<double, 5, 5>::Zero();
    Eigen::Matrix<double, 5, 1> atb = Eigen::Matrix<double, 5, 1>::Zero();
    for (const ValidationPair& pair : validation) {
        const SuperpixelMap& sp = pair.segmentation;
        if (pair.gt.width != sp.width || pair.gt.height != sp.height)
            throw DimensionMismatch("fit_weights: mask dimensions differ from segmentation");
        for (int k = 0; k < 5; ++k)
            if (pair.maps[k].region_scores.size() != sp.region_count)
                throw DimensionMismatch("fit_weights: map region count differs from segmentation");

        std::vector<double> gt_sum(sp.region_count, 0.0);
        const std::size_t pixels = pair.gt.pixel_count();
        for (std::size_t i = 0; i < pixels; ++i)
            gt_sum[sp.labels[i]] += pair.gt.values[i];

        for (int r = 0; r < sp.region_count; ++r) {
            const double nr = sp.region_pixel_counts[r];
            for (int k = 0; k < 5; ++k) {
                const double sk = pair.maps[k].region_scores(r);
                atb(k) += sk * gt_sum[r];
                for (int l = 0; l < 5; ++l)
                    ata(k, l) += nr * sk * pair.maps[l].region_scores(r);
            }
        }
    }

    // nonnegative least squares over 5 weights: enumerate supports, solve
    // each by minimum-norm least squares, keep the best feasible one.
    // Ties go to the larger support, so degenerate inputs (identical
    // maps) resolve to the uniform mixture.
    double best_objective = std::numeric_limits<double>::max();
    int best_support = -1;
    int best_popcount = -1;
    Eigen::Matrix<double, 5, 1> best_lambda = Eigen::Matrix<double, 5, 1>::Zero();

    for (int mask = 1; mask < 32; ++mask) {
        std::vector<int> idx;
        for (int k = 0; k < 5; ++k)
            if (mask & (1 << k))
                idx.push_back(k);
        const int m = static_cast<int>(idx.size());

        Eigen::MatrixXd sub_ata(m, m);
        Eigen::VectorXd sub_atb(m);
        for (int a = 0; a < m; ++a) {
            sub_atb(a) = atb(idx[a]);
            for (int b = 0; b < m; ++b)
                sub_ata(a, b) = ata(idx[a], idx[b]);
        }
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sub_ata);
        const Eigen::VectorXd sub_lambda = cod.solve(sub_atb);

        bool feasible = true;
        for (int a = 0; a < m; ++a)
            if (sub_lambda(a) < -1e-12) {
                feasible = false;
                break;
            }
        if (!feasible)
            continue;

        Eigen::Matrix<double, 5, 1> full = Eigen::Matrix<double, 5, 1>::Zero();
        for (int a = 0; a < m; ++a)
            full(idx[a]) = std::max(sub_lambda(a), 0.0);
        const double objective = full.dot(ata * full) - 2.0 * atb.dot(full);

        const double tie = 1e-12 * (1.0 + std::abs(best_objective));
        if (objective < best_objective - tie ||
            (objective < best_objective + tie &&
             (m > best_popcount || (m == best_popcount && mask < best_support)))) {
            best_objective = objective;
            best_support = mask;
            best_popcount = m;
            best_lambda = full;
        }
    }

    TemplateWeights out;
    const double sum = best_lambda.sum();
    if (sum <= 0.0) {
        out.lambda = {0.2, 0.2, 0.2, 0.2, 0.2}; // all-zero ground truth
        return out;
    }
    for (int k = 0; k < 5; ++k)
        out.lambda[k] = best_lambda(k) / sum;
    return out;
}

} // namespace btof
