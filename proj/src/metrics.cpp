#include "btof/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "btof/errors.hpp"

namespace btof {

namespace {

void check_dims(int w1, int h1, int w2, int h2, const char* what) {
    if (w1 != w2 || h1 != h2)
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(w1) + "x" +
                                std::to_string(h1) + " vs " + std::to_string(w2) +
                                "x" + std::to_string(h2));
}

} // namespace

BinaryMask binarize_adaptive(const GrayMap& map) {
    BinaryMask mask;
    mask.width = map.width;
    mask.height = map.height;
    mask.values.assign(map.pixel_count(), 0);
    if (map.values.empty())
        return mask;

    double sum = 0.0, hi = 0.0;
    for (double v : map.values) {
        sum += v;
        hi = std::max(hi, v);
    }
    if (hi <= 0.0)
        return mask; // an all-black map stays empty
    const double threshold = std::min(2.0 * sum / map.values.size(), hi);
    for (std::size_t i = 0; i < map.values.size(); ++i)
        mask.values[i] = map.values[i] >= threshold ? 1 : 0;
    return mask;
}

std::pair<double, double> precision_recall(const BinaryMask& s, const BinaryMask& g) {
    check_dims(s.width, s.height, g.width, g.height, "precision_recall");
    long tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const bool pred = s.values[i] != 0;
        const bool truth = g.values[i] != 0;
        tp += pred && truth;
        fp += pred && !truth;
        fn += !pred && truth;
    }
    const double precision = (tp + fp) == 0 ? 1.0 : static_cast<double>(tp) / (tp + fp);
    const double recall = (tp + fn) == 0 ? 1.0 : static_cast<double>(tp) / (tp + fn);
    return {precision, recall};
}

double f_measure(double precision, double recall, double beta2) {
    const double denom = beta2 * precision + recall;
    if (denom <= 0.0)
        return 0.0;
    return (1.0 + beta2) * precision * recall / denom;
}

double mae(const GrayMap& s, const BinaryMask& g) {
    check_dims(s.width, s.height, g.width, g.height, "mae");
    double sum = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        sum += std::abs(s.values[i] - static_cast<double>(g.values[i]));
    return s.values.empty() ? 0.0 : sum / s.values.size();
}

double overlap_ratio(const BinaryMask& s_mask, const BinaryMask& g) {
    check_dims(s_mask.width, s_mask.height, g.width, g.height, "overlap_ratio");
    long inter = 0, uni = 0;
    for (std::size_t i = 0; i < s_mask.values.size(); ++i) {
        const bool a = s_mask.values[i] != 0;
        const bool b = g.values[i] != 0;
        inter += a && b;
        uni += a || b;
    }
    if (uni == 0)
        return 1.0; // both empty
    return static_cast<double>(inter) / uni;
}

Curves curves_and_auc(const GrayMap& s, const BinaryMask& g) {
    check_dims(s.width, s.height, g.width, g.height, "curves_and_auc");

    // histogram of the 8-bit quantized map, split by ground-truth class
    long pos_at[256] = {0};
    long neg_at[256] = {0};
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double v = std::clamp(s.values[i], 0.0, 1.0);
        const int q = static_cast<int>(std::lround(v * 255.0));
        (g.values[i] != 0 ? pos_at : neg_at)[q] += 1;
    }
    long total_pos = 0, total_neg = 0;
    for (int q = 0; q < 256; ++q) {
        total_pos += pos_at[q];
        total_neg += neg_at[q];
    }

    Curves out;
    out.pr.resize(kCurvePoints);
    out.roc.resize(kCurvePoints);

    // cumulative counts of pixels with quantized value >= t
    long tp = 0, fp = 0;
    std::vector<long> tp_at(256), fp_at(256);
    for (int t = 255; t >= 0; --t) {
        tp += pos_at[t];
        fp += neg_at[t];
        tp_at[t] = tp;
        fp_at[t] = fp;
    }
    for (int t = 0; t < 256; ++t) {
        const long pred = tp_at[t] + fp_at[t];
        out.pr[t].precision = pred == 0 ? 1.0 : static_cast<double>(tp_at[t]) / pred;
        out.pr[t].recall = total_pos == 0 ? 1.0 : static_cast<double>(tp_at[t]) / total_pos;
        out.roc[t].tpr = total_pos == 0 ? 1.0 : static_cast<double>(tp_at[t]) / total_pos;
        out.roc[t].fpr = total_neg == 0 ? 0.0 : static_cast<double>(fp_at[t]) / total_neg;
    }

    // trapezoid under (fpr, tpr), walked from high thresholds (low fpr)
    // down to t = 0 which pins (1, 1); (0, 0) is the implicit start
    double auc = 0.0;
    double prev_fpr = 0.0, prev_tpr = 0.0;
    for (int t = 255; t >= 0; --t) {
        const double fpr = out.roc[t].fpr;
        const double tpr = out.roc[t].tpr;
        auc += (fpr - prev_fpr) * (tpr + prev_tpr) * 0.5;
        prev_fpr = fpr;
        prev_tpr = tpr;
    }
    out.auc = auc;
    return out;
}

MetricReport evaluate(const GrayMap& s, const BinaryMask& g) {
    MetricReport report;
    const BinaryMask s_mask = binarize_adaptive(s);
    const auto [precision, recall] = precision_recall(s_mask, g);
    report.precision = precision;
    report.recall = recall;
    report.f_measure = f_measure(precision, recall);
    report.mae = mae(s, g);
    report.or_score = overlap_ratio(s_mask, g);
    Curves curves = curves_and_auc(s, g);
    report.pr_curve = std::move(curves.pr);
    report.roc_curve = std::move(curves.roc);
    report.auc = curves.auc;
    return report;
}

} // namespace btof
