#pragma once

#include <cstdint>
#include <vector>

#include "odhd/errors.hpp"
#include "odhd/rng.hpp"

namespace odhd::hdc {

// Hypervectors are dense integer vectors. Bipolar HVs hold only +/-1; bundling
// produces integer accumulators (plain element sums, never binarized).
enum class Kind { bipolar, accumulator };

class Hypervector {
public:
    Hypervector() = default;
    Hypervector(std::vector<std::int64_t> elems, Kind kind);

    std::size_t dims() const { return elems_.size(); }
    Kind kind() const { return kind_; }
    const std::vector<std::int64_t>& elems() const { return elems_; }
    std::int64_t operator[](std::size_t i) const { return elems_[i]; }

    bool operator==(const Hypervector&) const = default;

private:
    std::vector<std::int64_t> elems_;
    Kind kind_ = Kind::bipolar;
};

// Random bipolar HV, each element i.i.d. uniform over {-1, +1}.
Hypervector random_bipolar(std::size_t dims, Rng& rng);

// Element-wise sum; result is an accumulator.
Hypervector bundle(const Hypervector& a, const Hypervector& b);

// Element-wise product; bipolar x bipolar stays bipolar.
Hypervector bind(const Hypervector& a, const Hypervector& b);

// Cyclic right rotation by r (reduced mod dims): element i moves to (i + r) % D,
// so rotating <h1..hd> by one gives <hd, h1, ..., h(d-1)>.
Hypervector permute(const Hypervector& h, std::uint64_t r);

// Cosine similarity in [-1, 1]; throws DomainError if either operand has zero norm.
double cosine_similarity(const Hypervector& a, const Hypervector& b);

// Exact integer dot product.
std::int64_t dot_similarity(const Hypervector& a, const Hypervector& b);

std::size_t hamming_distance(const Hypervector& a, const Hypervector& b);

}  // namespace odhd::hdc
