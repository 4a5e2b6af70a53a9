#ifndef BTOF_IMAGE_HPP
#define BTOF_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace btof {

// 8-bit sRGB image, interleaved RGB, row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // width * height * 3

    std::uint8_t* px(int x, int y) {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    const std::uint8_t* px(int x, int y) const {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

// CIELAB image (D65), interleaved (L, a, b), row-major.
// L in [0, 100], a and b roughly in [-128, 127].
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<double> data; // width * height * 3

    double* px(int x, int y) {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    const double* px(int x, int y) const {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

// Per-pixel {0,1} mask.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values; // width * height

    std::uint8_t at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

// Real-valued single-channel map, values expected in [0, 1].
struct GrayMap {
    int width = 0;
    int height = 0;
    std::vector<double> values; // width * height

    double at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

} // namespace btof

#endif
