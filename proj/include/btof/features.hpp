#ifndef BTOF_FEATURES_HPP
#define BTOF_FEATURES_HPP

#include <array>
#include <vector>

#include "btof/image.hpp"
#include "btof/pixelgrid.hpp"

namespace btof {

inline constexpr int kHogBins = 9; // unsigned orientations over [0, pi)

// Combined per-superpixel descriptor: mean CIELAB color plus an
// L1-normalized orientation histogram of luminance gradients. A region
// with no gradient keeps an all-zero histogram.
struct RegionDescriptor {
    int region_index = 0;
    std::array<double, 3> lab_mean{};
    std::vector<double> hog;
};

struct DistanceParams {
    double alpha1 = 0.6; // weight of the color term
    double alpha2 = 0.4; // weight of the texture term
};

std::vector<RegionDescriptor> extract_descriptors(const LabImage& lab,
                                                  const RasterImage& img,
                                                  const SuperpixelMap& sp);

// sum_m 2*(h1(m)-h2(m))^2 / (h1(m)+h2(m)); zero-denominator bins contribute 0.
double chi_square(const std::vector<double>& h1, const std::vector<double>& h2);

// alpha1 * ||lab_a - lab_b||_2 + alpha2 * chi_square(hog_a, hog_b)
double feature_distance(const RegionDescriptor& a, const RegionDescriptor& b,
                        const DistanceParams& p = {});

} // namespace btof

#endif
