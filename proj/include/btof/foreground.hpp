#ifndef BTOF_FOREGROUND_HPP
#define BTOF_FOREGROUND_HPP

#include "btof/background.hpp"

namespace btof {

// Mixing factors of the adaptive threshold T = a*min + b*max + c*mean.
// a + b + c = 1 keeps T inside [min, max].
struct ThresholdParams {
    double a = 0.025;
    double b = 0.95;
    double c = 0.025;
};

double adaptive_threshold(const SaliencyMap& m, const ThresholdParams& p = {});

// Re-ranks with foreground queries (regions scoring >= T in the BBM);
// the normalized ranking is the foreground-based map.
SaliencyMap foreground_map(const AffinityGraph& g, const SaliencyMap& bbm,
                           const ThresholdParams& tp = {},
                           const RankingParams& rp = {});

} // namespace btof

#endif
