#include "btof/pixelgrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "btof/errors.hpp"

namespace btof {

namespace {

constexpr int kMinSide = 16;

bool has_png_magic(const unsigned char* b, std::size_t n) {
    static const unsigned char sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    return n >= 8 && std::equal(sig, sig + 8, b);
}

bool has_jpeg_magic(const unsigned char* b, std::size_t n) {
    return n >= 3 && b[0] == 0xff && b[1] == 0xd8 && b[2] == 0xff;
}

std::vector<unsigned char> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UnreadableFile("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

std::vector<std::vector<int>> SuperpixelMap::region_pixels() const {
    std::vector<std::vector<int>> out(region_count);
    for (int r = 0; r < region_count; ++r)
        out[r].reserve(region_pixel_counts[r]);
    const int n = width * height;
    for (int i = 0; i < n; ++i)
        out[labels[i]].push_back(i);
    return out;
}

RasterImage load_image(const std::string& path) {
    const auto bytes = read_file_bytes(path);
    if (!has_png_magic(bytes.data(), bytes.size()) &&
        !has_jpeg_magic(bytes.data(), bytes.size()))
        throw UnsupportedFormat("not a PNG or JPEG file: " + path);

    cv::Mat decoded = cv::imdecode(cv::Mat(1, static_cast<int>(bytes.size()), CV_8UC1,
                                           const_cast<unsigned char*>(bytes.data())),
                                   cv::IMREAD_COLOR);
    if (decoded.empty())
        throw UnreadableFile("failed to decode image: " + path);
    if (decoded.cols < kMinSide || decoded.rows < kMinSide)
        throw ImageTooSmall(path + ": " + std::to_string(decoded.cols) + "x" +
                            std::to_string(decoded.rows) + " is below " +
                            std::to_string(kMinSide) + "px per side");

    RasterImage img;
    img.width = decoded.cols;
    img.height = decoded.rows;
    img.data.resize(img.pixel_count() * 3);
    for (int y = 0; y < img.height; ++y) {
        const cv::Vec3b* row = decoded.ptr<cv::Vec3b>(y); // BGR
        for (int x = 0; x < img.width; ++x) {
            std::uint8_t* p = img.px(x, y);
            p[0] = row[x][2];
            p[1] = row[x][1];
            p[2] = row[x][0];
        }
    }
    return img;
}

BinaryMask load_mask(const std::string& path) {
    const auto bytes = read_file_bytes(path);
    if (!has_png_magic(bytes.data(), bytes.size()) &&
        !has_jpeg_magic(bytes.data(), bytes.size()))
        throw UnsupportedFormat("not a PNG or JPEG file: " + path);

    cv::Mat decoded = cv::imdecode(cv::Mat(1, static_cast<int>(bytes.size()), CV_8UC1,
                                           const_cast<unsigned char*>(bytes.data())),
                                   cv::IMREAD_GRAYSCALE);
    if (decoded.empty())
        throw UnreadableFile("failed to decode mask: " + path);

    BinaryMask mask;
    mask.width = decoded.cols;
    mask.height = decoded.rows;
    mask.values.resize(mask.pixel_count());
    for (int y = 0; y < mask.height; ++y) {
        const std::uint8_t* row = decoded.ptr<std::uint8_t>(y);
        for (int x = 0; x < mask.width; ++x)
            mask.values[static_cast<std::size_t>(y) * mask.width + x] = row[x] >= 128 ? 1 : 0;
    }
    return mask;
}

GrayMap load_gray(const std::string& path) {
    const auto bytes = read_file_bytes(path);
    if (!has_png_magic(bytes.data(), bytes.size()) &&
        !has_jpeg_magic(bytes.data(), bytes.size()))
        throw UnsupportedFormat("not a PNG or JPEG file: " + path);

    cv::Mat decoded = cv::imdecode(cv::Mat(1, static_cast<int>(bytes.size()), CV_8UC1,
                                           const_cast<unsigned char*>(bytes.data())),
                                   cv::IMREAD_GRAYSCALE);
    if (decoded.empty())
        throw UnreadableFile("failed to decode image: " + path);

    GrayMap map;
    map.width = decoded.cols;
    map.height = decoded.rows;
    map.values.resize(map.pixel_count());
    for (int y = 0; y < map.height; ++y) {
        const std::uint8_t* row = decoded.ptr<std::uint8_t>(y);
        for (int x = 0; x < map.width; ++x)
            map.values[static_cast<std::size_t>(y) * map.width + x] = row[x] / 255.0;
    }
    return map;
}

void save_gray_png(const std::string& path, const GrayMap& map) {
    cv::Mat out(map.height, map.width, CV_8UC1);
    for (int y = 0; y < map.height; ++y) {
        std::uint8_t* row = out.ptr<std::uint8_t>(y);
        for (int x = 0; x < map.width; ++x) {
            const double v = std::clamp(map.at(x, y), 0.0, 1.0);
            row[x] = static_cast<std::uint8_t>(std::lround(v * 255.0));
        }
    }
    if (!cv::imwrite(path, out))
        throw UnreadableFile("failed to write PNG: " + path);
}

void save_rgb_png(const std::string& path, const RasterImage& img) {
    cv::Mat out(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        cv::Vec3b* row = out.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width; ++x) {
            const std::uint8_t* p = img.px(x, y);
            row[x] = cv::Vec3b(p[2], p[1], p[0]);
        }
    }
    if (!cv::imwrite(path, out))
        throw UnreadableFile("failed to write PNG: " + path);
}

RasterImage smooth(const RasterImage& img, double strength) {
    if (strength < 0.0)
        throw InvalidArgument("smooth strength must be nonnegative");
    if (strength == 0.0)
        return img;

    const int w = img.width;
    const int h = img.height;
    const std::size_t n = img.pixel_count();

    std::vector<double> cur(n * 3);
    for (std::size_t i = 0; i < n * 3; ++i)
        cur[i] = img.data[i] / 255.0;
    std::vector<double> next(n * 3);

    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    const int iterations = 4;

    for (int it = 0; it < iterations; ++it) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const std::size_t p = (static_cast<std::size_t>(y) * w + x) * 3;
                double sum[3] = {cur[p], cur[p + 1], cur[p + 2]};
                int count = 1;
                for (int k = 0; k < 4; ++k) {
                    const int nx = x + dx[k];
                    const int ny = y + dy[k];
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h)
                        continue;
                    const std::size_t q = (static_cast<std::size_t>(ny) * w + nx) * 3;
                    const double d0 = cur[p] - cur[q];
                    const double d1 = cur[p + 1] - cur[q + 1];
                    const double d2 = cur[p + 2] - cur[q + 2];
                    // squared color step across this edge, summed over channels
                    if (d0 * d0 + d1 * d1 + d2 * d2 < strength) {
                        sum[0] += cur[q];
                        sum[1] += cur[q + 1];
                        sum[2] += cur[q + 2];
                        ++count;
                    }
                }
                next[p] = sum[0] / count;
                next[p + 1] = sum[1] / count;
                next[p + 2] = sum[2] / count;
            }
        }
        cur.swap(next);
    }

    RasterImage out;
    out.width = w;
    out.height = h;
    out.data.resize(n * 3);
    for (std::size_t i = 0; i < n * 3; ++i)
        out.data[i] = static_cast<std::uint8_t>(
            std::clamp(std::lround(cur[i] * 255.0), 0L, 255L));
    return out;
}

LabColor srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    auto linearize = [](std::uint8_t c8) {
        const double c = c8 / 255.0;
        return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    };
    const double rl = linearize(r);
    const double gl = linearize(g);
    const double bl = linearize(b);

    const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
    const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
    const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;

    // D65 reference white
    constexpr double xn = 0.95047, yn = 1.0, zn = 1.08883;
    auto f = [](double t) {
        constexpr double d = 6.0 / 29.0;
        return t > d * d * d ? std::cbrt(t) : t / (3.0 * d * d) + 4.0 / 29.0;
    };
    const double fx = f(x / xn);
    const double fy = f(y / yn);
    const double fz = f(z / zn);

    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

LabImage to_lab(const RasterImage& img) {
    LabImage lab;
    lab.width = img.width;
    lab.height = img.height;
    lab.data.resize(img.pixel_count() * 3);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const LabColor c = srgb_to_lab(img.data[3 * i], img.data[3 * i + 1],
                                       img.data[3 * i + 2]);
        lab.data[3 * i] = c.L;
        lab.data[3 * i + 1] = c.a;
        lab.data[3 * i + 2] = c.b;
    }
    return lab;
}

} // namespace btof
