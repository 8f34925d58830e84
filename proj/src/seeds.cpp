#include "odhd/seeds.hpp"

#include <numeric>
#include <string>

#include "odhd/errors.hpp"

namespace odhd {

SeedSet generate_seeds(std::size_t dims, std::size_t levels, Rng& rng) {
    if (levels < 1) throw InvalidArgument("generate_seeds: need at least one level");
    if (dims < 2 * levels)
        throw InvalidArgument("generate_seeds: D must be >= 2k so that E = D/2k >= 1 (D=" +
                              std::to_string(dims) + ", k=" + std::to_string(levels) + ")");

    SeedSet set;
    set.dims = dims;
    set.flips = dims / (2 * levels);
    set.seeds.reserve(levels);
    set.seeds.push_back(hdc::random_bipolar(dims, rng));

    // Pool of positions not flipped anywhere in the chain yet; (k-1)*E <= D/2 < D
    // so the pool never runs dry.
    std::vector<std::size_t> pool(dims);
    std::iota(pool.begin(), pool.end(), 0);
    std::size_t used = 0;

    for (std::size_t i = 1; i < levels; ++i) {
        std::vector<std::int64_t> elems = set.seeds.back().elems();
        for (std::size_t f = 0; f < set.flips; ++f) {
            const std::size_t pick = used + rng.below(pool.size() - used);
            std::swap(pool[used], pool[pick]);
            elems[pool[used]] = -elems[pool[used]];
            ++used;
        }
        set.seeds.emplace_back(std::move(elems), hdc::Kind::bipolar);
    }
    return set;
}

}  // namespace odhd
