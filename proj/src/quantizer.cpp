#include "odhd/quantizer.hpp"

#include <algorithm>
#include <cmath>

#include "odhd/errors.hpp"

namespace odhd {

Quantizer::Quantizer(std::size_t levels, std::vector<std::pair<double, double>> bounds)
    : levels_(levels), bounds_(std::move(bounds)) {
    if (levels_ < 2) throw InvalidArgument("Quantizer: need at least 2 levels");
    for (const auto& [lo, hi] : bounds_) {
        if (!(lo <= hi)) throw InvalidArgument("Quantizer: f_min must not exceed f_max");
    }
}

Quantizer Quantizer::fit(const Matrix& train, std::size_t levels) {
    if (train.rows() == 0 || train.cols() == 0)
        throw InvalidArgument("Quantizer::fit: empty training matrix");
    if (levels < 2) throw InvalidArgument("Quantizer::fit: need at least 2 levels");
    std::vector<std::pair<double, double>> bounds(train.cols());
    for (std::size_t c = 0; c < train.cols(); ++c) {
        double lo = train.at(0, c), hi = train.at(0, c);
        for (std::size_t r = 1; r < train.rows(); ++r) {
            lo = std::min(lo, train.at(r, c));
            hi = std::max(hi, train.at(r, c));
        }
        bounds[c] = {lo, hi};
    }
    return Quantizer(levels, std::move(bounds));
}

std::uint32_t Quantizer::level(std::size_t feature, double value) const {
    const auto [lo, hi] = bounds_[feature];
    if (lo == hi) return 1;  // degenerate feature: a single interval
    if (value <= lo) return 1;
    if (value >= hi) return static_cast<std::uint32_t>(levels_);
    const double width = (hi - lo) / static_cast<double>(levels_);
    const auto idx = 1 + static_cast<std::uint64_t>(std::floor((value - lo) / width));
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(idx, levels_));
}

std::vector<std::uint32_t> Quantizer::quantize(std::span<const double> x) const {
    if (x.size() != bounds_.size())
        throw InvalidArgument("Quantizer::quantize: feature-vector length mismatch (" +
                              std::to_string(x.size()) + " vs " + std::to_string(bounds_.size()) +
                              ")");
    std::vector<std::uint32_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = level(i, x[i]);
    return out;
}

}  // namespace odhd
