#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "btof/errors.hpp"
#include "btof/pixelgrid.hpp"

namespace btof {

namespace {

struct Seed {
    double L, a, b, x, y;
};

double grad2(const LabImage& lab, int x, int y) {
    const int w = lab.width, h = lab.height;
    const double* xp = lab.px(std::min(x + 1, w - 1), y);
    const double* xm = lab.px(std::max(x - 1, 0), y);
    const double* yp = lab.px(x, std::min(y + 1, h - 1));
    const double* ym = lab.px(x, std::max(y - 1, 0));
    double g = 0.0;
    for (int c = 0; c < 3; ++c) {
        const double gx = xp[c] - xm[c];
        const double gy = yp[c] - ym[c];
        g += gx * gx + gy * gy;
    }
    return g;
}

std::vector<Seed> init_seeds(const LabImage& lab, int target) {
    const int w = lab.width, h = lab.height;
    const double step = std::sqrt(static_cast<double>(w) * h / target);
    const int nx = std::max(1, static_cast<int>(std::lround(w / step)));
    const int ny = std::max(1, static_cast<int>(std::lround(h / step)));

    std::vector<Seed> seeds;
    seeds.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            int sx = std::clamp(static_cast<int>((i + 0.5) * w / nx), 0, w - 1);
            int sy = std::clamp(static_cast<int>((j + 0.5) * h / ny), 0, h - 1);
            // move to the lowest-gradient pixel in the 3x3 window;
            // the center wins ties so uniform images keep the grid
            double best = grad2(lab, sx, sy);
            int bx = sx, by = sy;
            for (int oy = -1; oy <= 1; ++oy) {
                for (int ox = -1; ox <= 1; ++ox) {
                    const int px = sx + ox, py = sy + oy;
                    if (px < 0 || px >= w || py < 0 || py >= h)
                        continue;
                    const double g = grad2(lab, px, py);
                    if (g < best) {
                        best = g;
                        bx = px;
                        by = py;
                    }
                }
            }
            const double* c = lab.px(bx, by);
            seeds.push_back({c[0], c[1], c[2], static_cast<double>(bx),
                             static_cast<double>(by)});
        }
    }
    return seeds;
}

// Relabels 4-connected components consecutively; components smaller than
// min_size are absorbed by a previously labeled neighbor. Returns the
// final region count.
int enforce_connectivity(const std::vector<int>& labels, int w, int h,
                         int min_size, std::vector<int>& out) {
    out.assign(labels.size(), -1);
    std::vector<int> component;
    component.reserve(labels.size());
    const int dx[4] = {-1, 0, 1, 0};
    const int dy[4] = {0, -1, 0, 1};
    int next_label = 0;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int start = y * w + x;
            if (out[start] != -1)
                continue;

            // a neighbor that is already finalized, if any (only the
            // top-left component of the image can lack one)
            int adjacent = -1;
            for (int k = 0; k < 4 && adjacent == -1; ++k) {
                const int nx2 = x + dx[k], ny2 = y + dy[k];
                if (nx2 >= 0 && nx2 < w && ny2 >= 0 && ny2 < h &&
                    out[ny2 * w + nx2] >= 0)
                    adjacent = out[ny2 * w + nx2];
            }

            component.clear();
            component.push_back(start);
            out[start] = next_label;
            for (std::size_t head = 0; head < component.size(); ++head) {
                const int p = component[head];
                const int px = p % w, py = p / w;
                for (int k = 0; k < 4; ++k) {
                    const int nx2 = px + dx[k], ny2 = py + dy[k];
                    if (nx2 < 0 || nx2 >= w || ny2 < 0 || ny2 >= h)
                        continue;
                    const int q = ny2 * w + nx2;
                    if (out[q] == -1 && labels[q] == labels[start]) {
                        out[q] = next_label;
                        component.push_back(q);
                    }
                }
            }

            if (static_cast<int>(component.size()) < min_size && adjacent >= 0) {
                for (int p : component)
                    out[p] = adjacent;
            } else {
                ++next_label;
            }
        }
    }
    return next_label;
}

} // namespace

SuperpixelMap slic(const LabImage& lab, int target_regions, double compactness) {
    const int w = lab.width, h = lab.height;
    if (target_regions < 4)
        throw InvalidArgument("slic: target_regions must be at least 4");
    if (compactness <= 0.0)
        throw InvalidArgument("slic: compactness must be positive");
    if (static_cast<long long>(target_regions) * 16 > static_cast<long long>(w) * h)
        throw TargetTooLarge("slic: target_regions " + std::to_string(target_regions) +
                             " exceeds " + std::to_string(w) + "x" + std::to_string(h) +
                             " / 16 pixels");

    const double step = std::sqrt(static_cast<double>(w) * h / target_regions);
    const double spatial_weight = compactness / step;
    std::vector<Seed> seeds = init_seeds(lab, target_regions);
    const int k = static_cast<int>(seeds.size());

    std::vector<int> labels(lab.pixel_count(), -1);
    std::vector<double> dist(lab.pixel_count());
    const int window = static_cast<int>(std::ceil(1.5 * step)) + 1;

    for (int iter = 0; iter < 10; ++iter) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::max());
        std::fill(labels.begin(), labels.end(), -1);

        for (int s = 0; s < k; ++s) {
            const Seed& sd = seeds[s];
            const int x0 = std::max(0, static_cast<int>(sd.x) - window);
            const int x1 = std::min(w - 1, static_cast<int>(sd.x) + window);
            const int y0 = std::max(0, static_cast<int>(sd.y) - window);
            const int y1 = std::min(h - 1, static_cast<int>(sd.y) + window);
            for (int y = y0; y <= y1; ++y) {
                const double* row = lab.px(x0, y);
                for (int x = x0; x <= x1; ++x, row += 3) {
                    const double dL = row[0] - sd.L;
                    const double da = row[1] - sd.a;
                    const double db = row[2] - sd.b;
                    const double dxp = x - sd.x;
                    const double dyp = y - sd.y;
                    const double d = std::sqrt(dL * dL + da * da + db * db) +
                                     spatial_weight * std::sqrt(dxp * dxp + dyp * dyp);
                    const int p = y * w + x;
                    if (d < dist[p]) {
                        dist[p] = d;
                        labels[p] = s;
                    }
                }
            }
        }

        // pixels outside every search window (possible only after large
        // seed drift): nearest seed spatially
        for (int p = 0; p < static_cast<int>(lab.pixel_count()); ++p) {
            if (labels[p] != -1)
                continue;
            const int x = p % w, y = p / w;
            double best = std::numeric_limits<double>::max();
            for (int s = 0; s < k; ++s) {
                const double dxp = x - seeds[s].x;
                const double dyp = y - seeds[s].y;
                const double d = dxp * dxp + dyp * dyp;
                if (d < best) {
                    best = d;
                    labels[p] = s;
                }
            }
        }

        std::vector<double> acc(static_cast<std::size_t>(k) * 5, 0.0);
        std::vector<int> count(k, 0);
        for (int y = 0; y < h; ++y) {
            const double* row = lab.px(0, y);
            for (int x = 0; x < w; ++x, row += 3) {
                const int s = labels[y * w + x];
                double* a = &acc[static_cast<std::size_t>(s) * 5];
                a[0] += row[0];
                a[1] += row[1];
                a[2] += row[2];
                a[3] += x;
                a[4] += y;
                ++count[s];
            }
        }
        for (int s = 0; s < k; ++s) {
            if (count[s] == 0)
                continue; // keep the previous seed
            const double* a = &acc[static_cast<std::size_t>(s) * 5];
            seeds[s] = {a[0] / count[s], a[1] / count[s], a[2] / count[s],
                        a[3] / count[s], a[4] / count[s]};
        }
    }

    // merge orphan fragments; grow the size threshold if the region count
    // still exceeds 1.5x the target
    std::vector<int> final_labels;
    int region_count = 0;
    int min_size = std::max(1, (w * h / target_regions) / 4);
    for (;;) {
        region_count = enforce_connectivity(labels, w, h, min_size, final_labels);
        if (region_count <= target_regions + target_regions / 2 ||
            min_size > w * h)
            break;
        min_size *= 2;
    }

    SuperpixelMap sp;
    sp.width = w;
    sp.height = h;
    sp.region_count = region_count;
    sp.labels = std::move(final_labels);
    sp.region_pixel_counts.assign(region_count, 0);
    sp.centroid_x.assign(region_count, 0.0);
    sp.centroid_y.assign(region_count, 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int r = sp.labels[y * w + x];
            ++sp.region_pixel_counts[r];
            sp.centroid_x[r] += x;
            sp.centroid_y[r] += y;
        }
    }
    for (int r = 0; r < region_count; ++r) {
        sp.centroid_x[r] /= sp.region_pixel_counts[r];
        sp.centroid_y[r] /= sp.region_pixel_counts[r];
    }
    return sp;
}

} // namespace btof
