#include "btof/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "btof/errors.hpp"
#include "btof/pixelgrid.hpp"

namespace btof {

namespace {

constexpr int kSize = 256;

struct Rgb {
    int r, g, b;
};

// muted, low-saturation backgrounds vs strongly colored objects
constexpr Rgb kBackgrounds[] = {
    {120, 125, 115}, {135, 128, 110}, {110, 120, 130}, {126, 126, 126}, {108, 130, 108},
};
constexpr Rgb kObjects[] = {
    {200, 60, 50}, {50, 80, 200}, {210, 140, 40}, {150, 50, 170}, {40, 160, 70},
};

double next_uniform(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);
}

double uniform_in(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * next_uniform(rng);
}

int noise(std::mt19937& rng, int amplitude) {
    return static_cast<int>(std::lround(uniform_in(rng, -amplitude, amplitude)));
}

std::uint8_t clamp8(int v) {
    return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

struct Shape {
    bool rectangular = false;
    double cx, cy, rx, ry; // center and semi-extents
    Rgb color;

    bool contains(int x, int y) const {
        const double u = (x - cx) / rx;
        const double v = (y - cy) / ry;
        if (rectangular)
            return std::abs(u) <= 1.0 && std::abs(v) <= 1.0;
        return u * u + v * v <= 1.0;
    }
};

} // namespace

SynthKind parse_synth_kind(const std::string& name) {
    if (name == "center-object")
        return SynthKind::CenterObject;
    if (name == "boundary-object")
        return SynthKind::BoundaryObject;
    if (name == "two-objects")
        return SynthKind::TwoObjects;
    throw InvalidArgument("unknown synth kind: '" + name +
                          "' (expected center-object, boundary-object or two-objects)");
}

const char* synth_kind_name(SynthKind kind) {
    switch (kind) {
    case SynthKind::CenterObject: return "center-object";
    case SynthKind::BoundaryObject: return "boundary-object";
    case SynthKind::TwoObjects: return "two-objects";
    }
    return "unknown";
}

SynthSample make_synth_sample(SynthKind kind, unsigned seed) {
    std::mt19937 rng(seed);

    const Rgb bg = kBackgrounds[rng() % std::size(kBackgrounds)];
    const Rgb fg = kObjects[rng() % std::size(kObjects)];

    std::vector<Shape> objects;
    std::vector<Shape> background_clutter; // object-colored, not in the mask
    switch (kind) {
    case SynthKind::CenterObject: {
        const double rx = uniform_in(rng, 45.0, 65.0);
        const double ry = uniform_in(rng, 45.0, 65.0);
        const double cx = 128.0 + uniform_in(rng, -12.0, 12.0);
        const double cy = 128.0 + uniform_in(rng, -12.0, 12.0);
        objects.push_back({false, cx, cy, rx, ry, fg});
        break;
    }
    case SynthKind::BoundaryObject: {
        // a wide, flat lens hugging one border: shallow enough that every
        // object superpixel touches the border, with tapered ends so the
        // object/background edge keeps a single orientation; tinted only
        // mildly so the boundary prior genuinely absorbs it
        const double half_len = uniform_in(rng, 95.0, 115.0);
        const double half_depth = uniform_in(rng, 13.0, 16.0);
        const int side = static_cast<int>(rng() % 4);
        const double along = uniform_in(rng, half_len + 6.0, kSize - 1 - half_len - 6.0);
        const double sink = uniform_in(rng, 0.2, 0.4) * half_depth;
        const int tint = 8;
        const Rgb tinted{bg.r + tint, bg.g + tint / 2, bg.b - tint / 2};
        Shape obj{false, 0, 0, 0, 0, tinted};
        if (side == 0 || side == 1) { // top / bottom
            obj.cx = along;
            obj.rx = half_len;
            obj.cy = side == 0 ? sink : kSize - 1 - sink;
            obj.ry = half_depth;
        } else { // left / right
            obj.cy = along;
            obj.ry = half_len;
            obj.cx = side == 2 ? sink : kSize - 1 - sink;
            obj.rx = half_depth;
        }
        objects.push_back(obj);
        break;
    }
    case SynthKind::TwoObjects: {
        const Rgb fg2 = kObjects[rng() % std::size(kObjects)];
        const double r1 = uniform_in(rng, 28.0, 40.0);
        const double r2 = uniform_in(rng, 28.0, 40.0);
        objects.push_back({false, 64.0 + uniform_in(rng, -10.0, 10.0),
                           64.0 + uniform_in(rng, -10.0, 10.0), r1, r1, fg});
        objects.push_back({false, 192.0 + uniform_in(rng, -10.0, 10.0),
                           192.0 + uniform_in(rng, -10.0, 10.0), r2, r2, fg2});
        break;
    }
    }

    SynthSample sample;
    sample.image.width = kSize;
    sample.image.height = kSize;
    sample.image.data.resize(static_cast<std::size_t>(kSize) * kSize * 3);
    sample.mask.width = kSize;
    sample.mask.height = kSize;
    sample.mask.values.assign(static_cast<std::size_t>(kSize) * kSize, 0);

    char stem[64];
    std::snprintf(stem, sizeof(stem), "%s_%04u", synth_kind_name(kind), seed);
    sample.stem = stem;

    for (int y = 0; y < kSize; ++y) {
        for (int x = 0; x < kSize; ++x) {
            std::uint8_t* px = sample.image.px(x, y);
            const Shape* hit = nullptr;
            bool salient = false;
            for (const Shape& e : objects)
                if (e.contains(x, y)) {
                    hit = &e;
                    salient = true;
                    break;
                }
            if (!hit)
                for (const Shape& e : background_clutter)
                    if (e.contains(x, y)) {
                        hit = &e;
                        break;
                    }
            if (hit) {
                // sparse speckle: mild noise that pre-smoothing removes
                const int speck = next_uniform(rng) < 0.05 ? (rng() % 2 ? 1 : -1) : 0;
                px[0] = clamp8(hit->color.r + speck);
                px[1] = clamp8(hit->color.g + speck);
                px[2] = clamp8(hit->color.b + speck);
                if (salient)
                    sample.mask.values[static_cast<std::size_t>(y) * kSize + x] = 1;
            } else {
                // diagonal stripe texture plus mild noise
                const int stripe = (((x + y) / 4) % 2) ? 4 : -4;
                px[0] = clamp8(bg.r + stripe + noise(rng, 1));
                px[1] = clamp8(bg.g + stripe + noise(rng, 1));
                px[2] = clamp8(bg.b + stripe + noise(rng, 1));
            }
        }
    }
    return sample;
}

std::vector<std::string> synth(SynthKind kind, unsigned seed, int count,
                               const std::string& out_dir) {
    if (count < 1)
        throw InvalidArgument("synth: count must be at least 1");
    namespace fs = std::filesystem;
    const fs::path images = fs::path(out_dir) / "images";
    const fs::path masks = fs::path(out_dir) / "masks";
    fs::create_directories(images);
    fs::create_directories(masks);

    std::vector<std::string> paths;
    paths.reserve(count);
    for (int i = 0; i < count; ++i) {
        const SynthSample sample = make_synth_sample(kind, seed + i);
        const std::string image_path = (images / (sample.stem + ".png")).string();
        save_rgb_png(image_path, sample.image);

        GrayMap gt;
        gt.width = sample.mask.width;
        gt.height = sample.mask.height;
        gt.values.assign(sample.mask.values.begin(), sample.mask.values.end());
        save_gray_png((masks / (sample.stem + ".png")).string(), gt);
        paths.push_back(image_path);
    }
    return paths;
}

} // namespace btof
