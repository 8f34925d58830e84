#include "odhd/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "odhd/errors.hpp"

namespace odhd {

namespace {

// Mann-Whitney rank statistic with midpoint tie handling; positives carry the
// higher expected scores.
double rank_auc(std::span<const double> pos_score_ordered, std::span<const int> labels) {
    const std::size_t n = labels.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pos_score_ordered[a] < pos_score_ordered[b];
    });

    double rank_sum_pos = 0.0;
    std::size_t n_pos = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pos_score_ordered[order[j]] == pos_score_ordered[order[i]]) ++j;
        const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
        for (std::size_t t = i; t < j; ++t) {
            if (labels[order[t]] == 1) {
                rank_sum_pos += mid_rank;
                ++n_pos;
            }
        }
        i = j;
    }
    const std::size_t n_neg = n - n_pos;
    const double u = rank_sum_pos - 0.5 * static_cast<double>(n_pos) *
                                        static_cast<double>(n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

}  // namespace

Metrics compute_metrics(std::span<const int> labels, std::span<const int> predictions,
                        std::span<const double> scores) {
    if (labels.size() != predictions.size() || labels.size() != scores.size())
        throw InvalidArgument("compute_metrics: length mismatch");
    if (labels.empty()) throw InvalidArgument("compute_metrics: empty input");

    Metrics m;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const bool actual_out = labels[i] == 1;
        const bool pred_out = predictions[i] == 1;
        if (actual_out && pred_out) ++m.tp;
        else if (!actual_out && pred_out) ++m.fp;
        else if (actual_out && !pred_out) ++m.fn;
        else ++m.tn;
    }
    const double n = static_cast<double>(labels.size());
    m.accuracy = static_cast<double>(m.tp + m.tn) / n;
    const double f1_denom = static_cast<double>(2 * m.tp + m.fp + m.fn);
    m.f1 = f1_denom > 0.0 ? static_cast<double>(2 * m.tp) / f1_denom : 0.0;

    const bool has_pos = (m.tp + m.fn) > 0;
    const bool has_neg = (m.fp + m.tn) > 0;
    if (has_pos && has_neg) {
        std::vector<double> negated(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) negated[i] = -scores[i];
        m.auc = rank_auc(negated, labels);
        m.auc_defined = true;
    } else {
        m.auc = std::numeric_limits<double>::quiet_NaN();
        m.auc_defined = false;
    }
    return m;
}

}  // namespace odhd
