#ifndef BTOF_GRAPH_HPP
#define BTOF_GRAPH_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "btof/features.hpp"
#include "btof/pixelgrid.hpp"

namespace btof {

enum class Side { Top = 0, Bottom = 1, Left = 2, Right = 3 };

// Close-loop superpixel graph. Edges come from three rules: spatial
// adjacency, 2-hop adjacency (neighbors of neighbors), and all pairs of
// image-border nodes. Edge weights are exp(-dist/sigma2); non-edges 0;
// the diagonal is 0.
struct AffinityGraph {
    int n = 0;
    int width = 0;  // source image dimensions
    int height = 0;
    Eigen::MatrixXd weights;                      // symmetric n x n
    Eigen::VectorXd degrees;                      // row sums
    std::vector<std::array<bool, 4>> boundary_sides; // indexed by Side
    std::vector<std::vector<int>> adjacency;      // neighbor sets, sorted

    bool touches(int node, Side side) const {
        return boundary_sides[node][static_cast<int>(side)];
    }
    bool is_boundary(int node) const {
        const auto& s = boundary_sides[node];
        return s[0] || s[1] || s[2] || s[3];
    }
};

AffinityGraph build_graph(const SuperpixelMap& sp,
                          const std::vector<RegionDescriptor>& descriptors,
                          double sigma2 = 0.1, const DistanceParams& p = {});

// Nodes whose region touches the given image border.
std::vector<int> boundary_set(const AffinityGraph& g, Side side);

// Debug dump: one "i j w" line per edge (i < j).
void write_weight_triplets(const AffinityGraph& g, std::ostream& os);

} // namespace btof

#endif
