#ifndef BTOF_REFINE_HPP
#define BTOF_REFINE_HPP

#include <vector>

#include "btof/features.hpp"
#include "btof/saliency.hpp"

namespace btof {

// Center-anchored Gaussian attenuation. sigma is tied to the image size
// and the center to the image center, so peripheral regions are damped.
struct DecreaseParams {
    double sigma_x = 1.0;
    double sigma_y = 1.0;
    double center_x = 0.0;
    double center_y = 0.0;

    static DecreaseParams for_image(int width, int height) {
        return {0.5 * width, 0.5 * height, 0.5 * width, 0.5 * height};
    }
    double gauss(double x, double y) const;
};

struct HighlightParams {
    double gamma1 = 0.5;
    double gamma2 = 0.5;
    int k_clusters = 8;
    unsigned kmeans_seed = 0;
};

// Pre-normalization region scores of the decrease stage: pixelwise
// product with the Gaussian, averaged per region.
Eigen::VectorXd decrease_scores(const SaliencyMap& fbm, const SuperpixelMap& sp,
                                const DecreaseParams& p);

SaliencyMap decrease(const SaliencyMap& fbm, const SuperpixelMap& sp,
                     const DecreaseParams& p);

// K-means (k-means++ seeding, Lloyd iterations) over descriptors embedded
// as (alpha1 * lab_mean, alpha2 * hog). Deterministic for a fixed seed.
std::vector<int> cluster_regions(const std::vector<RegionDescriptor>& descriptors,
                                 const HighlightParams& p,
                                 const DistanceParams& dp);

// Cluster-wise score sharing: within each cluster, blends a region's own
// score with the affinity-weighted cluster average, then rescales.
SaliencyMap highlight(const SaliencyMap& dec,
                      const std::vector<RegionDescriptor>& descriptors,
                      const HighlightParams& p, const DistanceParams& dp,
                      double sigma2);

struct RefineParams {
    HighlightParams highlight;
    DistanceParams distance;
    double sigma2 = 0.1;
    int max_iters = 3;
    double tolerance = 1e-3; // early stop on max elementwise change
};

// Applies decrease then highlight, up to max_iters times.
SaliencyMap refine_pipeline(const SaliencyMap& fbm, const SuperpixelMap& sp,
                            const std::vector<RegionDescriptor>& descriptors,
                            const RefineParams& p);

} // namespace btof

#endif
