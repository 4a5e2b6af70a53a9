#ifndef BTOF_RANKING_HPP
#define BTOF_RANKING_HPP

#include <Eigen/Dense>

#include "btof/graph.hpp"

namespace btof {

struct RankingParams {
    double mu = 0.01;
    double alpha() const { return 1.0 / (1.0 + mu); }
};

// Manifold ranking: solves (D - alpha*W) f = y by direct sparse
// factorization. y >= 0 implies f >= 0 (M-matrix). Residual is checked
// against 1e-8 * ||y||_inf.
Eigen::VectorXd rank(const AffinityGraph& g, const Eigen::VectorXd& queries,
                     const RankingParams& p = {});

// Affine rescale to [0,1]; a constant vector maps to all-zero.
Eigen::VectorXd normalize_scores(const Eigen::VectorXd& f);

} // namespace btof

#endif
