#pragma once

#include <cstddef>
#include <vector>

#include "odhd/hdc.hpp"
#include "odhd/rng.hpp"

namespace odhd {

// The k level seed HVs. s_1 is random bipolar; each subsequent seed flips
// E = floor(D / 2k) fresh positions of its predecessor, positions never reused
// along the chain, so similarity decays monotonically from s_1 to s_k.
struct SeedSet {
    std::size_t dims = 0;   // D
    std::size_t flips = 0;  // E
    std::vector<hdc::Hypervector> seeds;

    std::size_t levels() const { return seeds.size(); }
    // Seed for a 1-based quantizer level.
    const hdc::Hypervector& for_level(std::uint32_t level) const { return seeds[level - 1]; }

    bool operator==(const SeedSet&) const = default;
};

SeedSet generate_seeds(std::size_t dims, std::size_t levels, Rng& rng);

}  // namespace odhd
