#include "btof/ranking.hpp"

#include <cmath>

#include <Eigen/SparseCholesky>

#include "btof/errors.hpp"

namespace btof {

Eigen::VectorXd rank(const AffinityGraph& g, const Eigen::VectorXd& queries,
                     const RankingParams& p) {
    if (queries.size() != g.n)
        throw DimensionMismatch("rank: query vector has " +
                                std::to_string(queries.size()) + " entries for " +
                                std::to_string(g.n) + " nodes");
    if (p.mu <= 0.0)
        throw InvalidArgument("rank: mu must be positive");
    const double alpha = p.alpha();

    // D - alpha*W: symmetric, strictly diagonally dominant for alpha < 1,
    // hence positive definite
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(g.n) * 8);
    for (int i = 0; i < g.n; ++i) {
        triplets.emplace_back(i, i, g.degrees(i));
        for (int j : g.adjacency[i])
            triplets.emplace_back(i, j, -alpha * g.weights(i, j));
    }
    Eigen::SparseMatrix<double> m(g.n, g.n);
    m.setFromTriplets(triplets.begin(), triplets.end());

    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> solver;
    solver.compute(m);
    if (solver.info() != Eigen::Success)
        throw SingularSystem("rank: factorization of (D - alpha*W) failed");
    Eigen::VectorXd f = solver.solve(queries);
    if (solver.info() != Eigen::Success)
        throw SingularSystem("rank: solve failed");

    const double residual = (m * f - queries).cwiseAbs().maxCoeff();
    const double scale = queries.cwiseAbs().maxCoeff();
    if (residual > 1e-8 * scale)
        throw SingularSystem("rank: residual " + std::to_string(residual) +
                             " exceeds tolerance");
    return f;
}

Eigen::VectorXd normalize_scores(const Eigen::VectorXd& f) {
    if (f.size() == 0)
        return f;
    const double lo = f.minCoeff();
    const double hi = f.maxCoeff();
    if (hi - lo <= 0.0)
        return Eigen::VectorXd::Zero(f.size());
    return (f.array() - lo) / (hi - lo);
}

} // namespace btof
