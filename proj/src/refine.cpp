#include "btof/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "btof/errors.hpp"
#include "btof/ranking.hpp"

namespace btof {

namespace {

// portable uniform in [0,1) from the raw 32-bit stream
double next_uniform(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);
}

std::vector<Eigen::VectorXd> embed_descriptors(
    const std::vector<RegionDescriptor>& descriptors, const DistanceParams& dp) {
    std::vector<Eigen::VectorXd> points;
    points.reserve(descriptors.size());
    for (const RegionDescriptor& d : descriptors) {
        Eigen::VectorXd z(3 + static_cast<Eigen::Index>(d.hog.size()));
        for (int c = 0; c < 3; ++c)
            z(c) = dp.alpha1 * d.lab_mean[c];
        for (std::size_t m = 0; m < d.hog.size(); ++m)
            z(3 + m) = dp.alpha2 * d.hog[m];
        points.push_back(std::move(z));
    }
    return points;
}

} // namespace

double DecreaseParams::gauss(double x, double y) const {
    const double dx = x - center_x;
    const double dy = y - center_y;
    return std::exp(-(dx * dx / (2.0 * sigma_x * sigma_x) +
                      dy * dy / (2.0 * sigma_y * sigma_y)));
}

Eigen::VectorXd decrease_scores(const SaliencyMap& fbm, const SuperpixelMap& sp,
                                const DecreaseParams& p) {
    if (fbm.width != sp.width || fbm.height != sp.height ||
        fbm.region_scores.size() != sp.region_count)
        throw DimensionMismatch("decrease: map and superpixel map differ");
    if (p.sigma_x <= 0.0 || p.sigma_y <= 0.0)
        throw InvalidArgument("decrease: sigma must be positive");

    Eigen::VectorXd acc = Eigen::VectorXd::Zero(sp.region_count);
    for (int y = 0; y < sp.height; ++y)
        for (int x = 0; x < sp.width; ++x) {
            const int r = sp.label_at(x, y);
            acc(r) += fbm.region_scores(r) * p.gauss(x, y);
        }
    for (int r = 0; r < sp.region_count; ++r)
        acc(r) /= sp.region_pixel_counts[r];
    return acc;
}

SaliencyMap decrease(const SaliencyMap& fbm, const SuperpixelMap& sp,
                     const DecreaseParams& p) {
    if (fbm.stage != Stage::FBM)
        throw InvalidArgument("decrease: input map is not the FBM stage");
    SaliencyMap out;
    out.region_scores = normalize_scores(decrease_scores(fbm, sp, p));
    out.stage = Stage::Decrease;
    out.width = fbm.width;
    out.height = fbm.height;
    return out;
}

std::vector<int> cluster_regions(const std::vector<RegionDescriptor>& descriptors,
                                 const HighlightParams& p, const DistanceParams& dp) {
    const int n = static_cast<int>(descriptors.size());
    const int k = p.k_clusters;
    if (k < 1)
        throw InvalidArgument("cluster_regions: k_clusters must be at least 1");
    if (k > n)
        throw ClusterCountTooLarge("cluster_regions: " + std::to_string(k) +
                                   " clusters for " + std::to_string(n) + " regions");

    const std::vector<Eigen::VectorXd> points = embed_descriptors(descriptors, dp);
    std::mt19937 rng(p.kmeans_seed);

    // k-means++ seeding
    std::vector<Eigen::VectorXd> centers;
    centers.reserve(k);
    centers.push_back(points[std::min(static_cast<int>(next_uniform(rng) * n), n - 1)]);
    std::vector<double> d2(n);
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::max();
            for (const Eigen::VectorXd& c : centers)
                best = std::min(best, (points[i] - c).squaredNorm());
            d2[i] = best;
            total += best;
        }
        int chosen;
        if (total > 0.0) {
            const double target = next_uniform(rng) * total;
            double cum = 0.0;
            chosen = n - 1;
            for (int i = 0; i < n; ++i) {
                cum += d2[i];
                if (cum >= target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = std::min(static_cast<int>(next_uniform(rng) * n), n - 1);
        }
        centers.push_back(points[chosen]);
    }

    std::vector<int> assign(n, 0);
    std::vector<int> counts(k, 0);
    for (int iter = 0; iter < 100; ++iter) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best_c = 0;
            double best_d = (points[i] - centers[0]).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double d = (points[i] - centers[c]).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best_c = c;
                }
            }
            if (assign[i] != best_c) {
                assign[i] = best_c;
                changed = true;
            }
        }
        if (!changed && iter > 0)
            break;

        std::fill(counts.begin(), counts.end(), 0);
        std::vector<Eigen::VectorXd> sums(k, Eigen::VectorXd::Zero(points[0].size()));
        for (int i = 0; i < n; ++i) {
            sums[assign[i]] += points[i];
            ++counts[assign[i]];
        }
        std::vector<bool> taken(n, false);
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                centers[c] = sums[c] / counts[c];
                continue;
            }
            // reseed an empty cluster from the farthest point
            int far = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (taken[i])
                    continue;
                const double d = (points[i] - centers[assign[i]]).squaredNorm();
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            taken[far] = true;
            centers[c] = points[far];
        }
    }
    return assign;
}

SaliencyMap highlight(const SaliencyMap& dec,
                      const std::vector<RegionDescriptor>& descriptors,
                      const HighlightParams& p, const DistanceParams& dp,
                      double sigma2) {
    if (dec.stage != Stage::Decrease)
        throw InvalidArgument("highlight: input map is not the decrease stage");
    if (dec.region_scores.size() != static_cast<Eigen::Index>(descriptors.size()))
        throw DimensionMismatch("highlight: map region count differs from descriptors");
    if (p.gamma1 + p.gamma2 <= 0.0)
        throw InvalidArgument("highlight: gamma1 + gamma2 must be positive");
    if (sigma2 <= 0.0)
        throw InvalidArgument("highlight: sigma2 must be positive");

    const std::vector<int> clusters = cluster_regions(descriptors, p, dp);
    const int n = static_cast<int>(descriptors.size());
    std::vector<std::vector<int>> members(p.k_clusters);
    for (int i = 0; i < n; ++i)
        members[clusters[i]].push_back(i);

    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (const std::vector<int>& cluster : members) {
        for (int i : cluster) {
            double num = 0.0, den = 0.0;
            for (int j : cluster) {
                const double w =
                    std::exp(-feature_distance(descriptors[i], descriptors[j], dp) / sigma2);
                num += w * dec.region_scores(j);
                den += w;
            }
            // den >= w(i,i) = 1, the self weight is included
            out(i) = p.gamma1 * dec.region_scores(i) + p.gamma2 * num / den;
        }
    }

    SaliencyMap result;
    result.region_scores = normalize_scores(out);
    result.stage = Stage::Final;
    result.width = dec.width;
    result.height = dec.height;
    return result;
}

SaliencyMap refine_pipeline(const SaliencyMap& fbm, const SuperpixelMap& sp,
                            const std::vector<RegionDescriptor>& descriptors,
                            const RefineParams& p) {
    if (fbm.stage != Stage::FBM)
        throw InvalidArgument("refine_pipeline: input map is not the FBM stage");
    if (p.max_iters < 0)
        throw InvalidArgument("refine_pipeline: max_iters must be nonnegative");

    SaliencyMap current = fbm;
    const DecreaseParams dparams = DecreaseParams::for_image(fbm.width, fbm.height);
    for (int iter = 0; iter < p.max_iters; ++iter) {
        const Eigen::VectorXd prev = current.region_scores;
        current.stage = Stage::FBM; // re-enter the pair on later iterations
        const SaliencyMap dec = decrease(current, sp, dparams);
        current = highlight(dec, descriptors, p.highlight, p.distance, p.sigma2);
        if ((current.region_scores - prev).cwiseAbs().maxCoeff() < p.tolerance)
            break;
    }
    current.stage = Stage::Final;
    return current;
}

} // namespace btof
