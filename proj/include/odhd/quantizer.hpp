#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "odhd/matrix.hpp"

namespace odhd {

// Per-feature uniform level quantizer: each feature range [f_min, f_max] observed
// on the training set is cut into k equal intervals, indexed 1..k. Out-of-range
// values clamp to the boundary intervals; a constant feature maps everything to 1.
class Quantizer {
public:
    Quantizer() = default;
    Quantizer(std::size_t levels, std::vector<std::pair<double, double>> bounds);

    static Quantizer fit(const Matrix& train, std::size_t levels);

    std::size_t levels() const { return levels_; }
    std::size_t features() const { return bounds_.size(); }
    const std::vector<std::pair<double, double>>& bounds() const { return bounds_; }

    // Level index in [1, k] for one feature value.
    std::uint32_t level(std::size_t feature, double value) const;

    std::vector<std::uint32_t> quantize(std::span<const double> x) const;

    bool operator==(const Quantizer&) const = default;

private:
    std::size_t levels_ = 0;
    std::vector<std::pair<double, double>> bounds_;
};

}  // namespace odhd
