#pragma once

#include <cstdint>
#include <span>

namespace odhd {

// Outlier detection metrics; the outlier class (label 1) is the positive class.
// `scores` are model similarities (higher = more inlier-like); AUC ranks on the
// negated score so outliers are expected on top.
struct Metrics {
    double accuracy = 0.0;
    double f1 = 0.0;
    double auc = 0.0;        // NaN when only one class is present
    bool auc_defined = false;
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
};

Metrics compute_metrics(std::span<const int> labels, std::span<const int> predictions,
                        std::span<const double> scores);

}  // namespace odhd
