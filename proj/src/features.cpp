#include "btof/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "btof/errors.hpp"

namespace btof {

std::vector<RegionDescriptor> extract_descriptors(const LabImage& lab,
                                                  const RasterImage& img,
                                                  const SuperpixelMap& sp) {
    if (lab.width != img.width || lab.height != img.height ||
        lab.width != sp.width || lab.height != sp.height)
        throw DimensionMismatch("extract_descriptors: lab/img/superpixel dimensions differ");

    const int w = lab.width, h = lab.height;
    std::vector<RegionDescriptor> out(sp.region_count);
    for (int r = 0; r < sp.region_count; ++r) {
        out[r].region_index = r;
        out[r].hog.assign(kHogBins, 0.0);
    }

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int r = sp.label_at(x, y);
            const double* c = lab.px(x, y);
            out[r].lab_mean[0] += c[0];
            out[r].lab_mean[1] += c[1];
            out[r].lab_mean[2] += c[2];

            // luminance gradient, central differences with clamped coords
            const double gx = lab.px(std::min(x + 1, w - 1), y)[0] -
                              lab.px(std::max(x - 1, 0), y)[0];
            const double gy = lab.px(x, std::min(y + 1, h - 1))[0] -
                              lab.px(x, std::max(y - 1, 0))[0];
            const double mag = std::sqrt(gx * gx + gy * gy);
            if (mag > 0.0) {
                double theta = std::atan2(gy, gx);
                if (theta < 0.0)
                    theta += std::numbers::pi;
                if (theta >= std::numbers::pi)
                    theta -= std::numbers::pi;
                const int bin = std::min(
                    static_cast<int>(theta / std::numbers::pi * kHogBins), kHogBins - 1);
                out[r].hog[bin] += mag;
            }
        }
    }

    for (int r = 0; r < sp.region_count; ++r) {
        const double n = sp.region_pixel_counts[r];
        for (double& v : out[r].lab_mean)
            v /= n;
        const double mass =
            std::accumulate(out[r].hog.begin(), out[r].hog.end(), 0.0);
        if (mass > 0.0)
            for (double& v : out[r].hog)
                v /= mass;
    }
    return out;
}

double chi_square(const std::vector<double>& h1, const std::vector<double>& h2) {
    if (h1.size() != h2.size())
        throw BinCountMismatch("chi_square: histograms have " +
                               std::to_string(h1.size()) + " and " +
                               std::to_string(h2.size()) + " bins");
    double sum = 0.0;
    for (std::size_t m = 0; m < h1.size(); ++m) {
        const double denom = h1[m] + h2[m];
        if (denom == 0.0)
            continue;
        const double diff = h1[m] - h2[m];
        sum += 2.0 * diff * diff / denom;
    }
    return sum;
}

double feature_distance(const RegionDescriptor& a, const RegionDescriptor& b,
                        const DistanceParams& p) {
    const double dl = a.lab_mean[0] - b.lab_mean[0];
    const double da = a.lab_mean[1] - b.lab_mean[1];
    const double db = a.lab_mean[2] - b.lab_mean[2];
    return p.alpha1 * std::sqrt(dl * dl + da * da + db * db) +
           p.alpha2 * chi_square(a.hog, b.hog);
}

} // namespace btof
