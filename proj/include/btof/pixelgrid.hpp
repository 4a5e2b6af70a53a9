#ifndef BTOF_PIXELGRID_HPP
#define BTOF_PIXELGRID_HPP

#include <string>
#include <vector>

#include "btof/image.hpp"

namespace btof {

// Dense over-segmentation of an image. Every pixel carries exactly one
// label in [0, region_count); every region is 4-connected and non-empty.
struct SuperpixelMap {
    int width = 0;
    int height = 0;
    int region_count = 0;
    std::vector<int> labels;             // per pixel, row-major
    std::vector<int> region_pixel_counts;
    std::vector<double> centroid_x;      // per region, pixel coordinates
    std::vector<double> centroid_y;

    int label_at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * width + x];
    }
    // Pixel offsets (y * width + x) grouped per region, raster order.
    std::vector<std::vector<int>> region_pixels() const;
};

struct LabColor {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// --- image I/O (PNG and JPEG only, 8-bit sRGB) ---

RasterImage load_image(const std::string& path);

// Grayscale decode, values >= 128 map to 1.
BinaryMask load_mask(const std::string& path);

// Grayscale decode to [0,1].
GrayMap load_gray(const std::string& path);

// Writes values clamped to [0,1] as an 8-bit grayscale PNG.
void save_gray_png(const std::string& path, const GrayMap& map);
void save_rgb_png(const std::string& path, const RasterImage& img);

// --- preprocessing ---

enum class Smoother { None, L0Approx };

// Edge-preserving smoother: repeatedly averages each pixel with the
// 4-neighbors whose squared color step (channels normalized to [0,1],
// summed) falls below `strength`, leaving larger discontinuities intact.
// strength = 0 returns the input unchanged.
RasterImage smooth(const RasterImage& img, double strength);

LabColor srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);
LabImage to_lab(const RasterImage& img);

// SLIC over-segmentation into roughly `target_regions` superpixels.
// Deterministic for fixed inputs; resulting region count stays within
// [0.5, 1.5] x target_regions.
SuperpixelMap slic(const LabImage& lab, int target_regions, double compactness = 10.0);

} // namespace btof

#endif
