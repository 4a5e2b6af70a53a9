#include "btof/graph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "btof/errors.hpp"

namespace btof {

namespace {

// exp underflows for very dissimilar pairs; edges stay strictly positive
// so every degree does too.
constexpr double kWeightFloor = 1e-300;

} // namespace

AffinityGraph build_graph(const SuperpixelMap& sp,
                          const std::vector<RegionDescriptor>& descriptors,
                          double sigma2, const DistanceParams& p) {
    if (static_cast<int>(descriptors.size()) != sp.region_count)
        throw IndexMismatch("build_graph: " + std::to_string(descriptors.size()) +
                            " descriptors for " + std::to_string(sp.region_count) +
                            " regions");
    if (sigma2 <= 0.0)
        throw InvalidArgument("build_graph: sigma2 must be positive");

    const int n = sp.region_count;
    const int w = sp.width, h = sp.height;

    AffinityGraph g;
    g.n = n;
    g.width = w;
    g.height = h;
    g.boundary_sides.assign(n, {false, false, false, false});

    // rule 1: spatial adjacency from label transitions
    std::vector<std::set<int>> spatial(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int a = sp.label_at(x, y);
            if (x + 1 < w) {
                const int b = sp.label_at(x + 1, y);
                if (a != b) {
                    spatial[a].insert(b);
                    spatial[b].insert(a);
                }
            }
            if (y + 1 < h) {
                const int b = sp.label_at(x, y + 1);
                if (a != b) {
                    spatial[a].insert(b);
                    spatial[b].insert(a);
                }
            }
        }
    }
    for (int x = 0; x < w; ++x) {
        g.boundary_sides[sp.label_at(x, 0)][static_cast<int>(Side::Top)] = true;
        g.boundary_sides[sp.label_at(x, h - 1)][static_cast<int>(Side::Bottom)] = true;
    }
    for (int y = 0; y < h; ++y) {
        g.boundary_sides[sp.label_at(0, y)][static_cast<int>(Side::Left)] = true;
        g.boundary_sides[sp.label_at(w - 1, y)][static_cast<int>(Side::Right)] = true;
    }

    // rules 1+2: 1-hop and 2-hop adjacency
    std::vector<std::set<int>> edges(n);
    for (int i = 0; i < n; ++i) {
        for (int j : spatial[i]) {
            edges[i].insert(j);
            for (int k : spatial[j])
                if (k != i)
                    edges[i].insert(k);
        }
    }
    // rule 3: all pairs of boundary nodes
    std::vector<int> boundary;
    for (int i = 0; i < n; ++i)
        if (g.is_boundary(i))
            boundary.push_back(i);
    for (std::size_t a = 0; a < boundary.size(); ++a)
        for (std::size_t b = a + 1; b < boundary.size(); ++b) {
            edges[boundary[a]].insert(boundary[b]);
            edges[boundary[b]].insert(boundary[a]);
        }

    g.weights = Eigen::MatrixXd::Zero(n, n);
    g.adjacency.resize(n);
    for (int i = 0; i < n; ++i) {
        g.adjacency[i].assign(edges[i].begin(), edges[i].end());
        for (int j : edges[i]) {
            if (j <= i)
                continue; // each pair weighted once
            const double d = feature_distance(descriptors[i], descriptors[j], p);
            const double wij = std::max(std::exp(-d / sigma2), kWeightFloor);
            g.weights(i, j) = wij;
            g.weights(j, i) = wij;
        }
    }
    g.degrees = g.weights.rowwise().sum();
    return g;
}

std::vector<int> boundary_set(const AffinityGraph& g, Side side) {
    std::vector<int> out;
    for (int i = 0; i < g.n; ++i)
        if (g.touches(i, side))
            out.push_back(i);
    return out;
}

void write_weight_triplets(const AffinityGraph& g, std::ostream& os) {
    for (int i = 0; i < g.n; ++i)
        for (int j : g.adjacency[i])
            if (j > i)
                os << i << ' ' << j << ' ' << g.weights(i, j) << '\n';
}

} // namespace btof
