#ifndef BTOF_METRICS_HPP
#define BTOF_METRICS_HPP

#include <array>
#include <utility>
#include <vector>

#include "btof/image.hpp"

namespace btof {

inline constexpr int kCurvePoints = 256;
inline constexpr double kFMeasureBeta2 = 0.3;

struct PrPoint {
    double precision = 0.0;
    double recall = 0.0;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct MetricReport {
    std::vector<PrPoint> pr_curve;   // thresholds 0..255
    std::vector<RocPoint> roc_curve; // thresholds 0..255
    double precision = 0.0;          // at the twice-mean threshold
    double recall = 0.0;
    double f_measure = 0.0;
    double auc = 0.0;
    double mae = 0.0;
    double or_score = 0.0;
};

// Twice-mean binarization: threshold = min(2*mean, max). An all-zero map
// yields the empty mask.
BinaryMask binarize_adaptive(const GrayMap& map);

// P = TP/(TP+FP), R = TP/(TP+FN). No predicted positives gives P = 1;
// empty ground truth gives R = 1.
std::pair<double, double> precision_recall(const BinaryMask& s, const BinaryMask& g);

// (1+beta2)*P*R / (beta2*P + R); 0 when the denominator is 0.
double f_measure(double precision, double recall, double beta2 = kFMeasureBeta2);

double mae(const GrayMap& s, const BinaryMask& g);

// Intersection over union; 1 when both masks are empty, 0 when exactly
// one is.
double overlap_ratio(const BinaryMask& s_mask, const BinaryMask& g);

struct Curves {
    std::vector<PrPoint> pr;   // 256 points
    std::vector<RocPoint> roc; // 256 points
    double auc = 0.0;
};

// Sweeps the 8-bit quantized map over thresholds 0..255; AUC is the
// trapezoidal area under (fpr, tpr).
Curves curves_and_auc(const GrayMap& s, const BinaryMask& g);

// All metrics of one (map, ground truth) pair.
MetricReport evaluate(const GrayMap& s, const BinaryMask& g);

} // namespace btof

#endif
