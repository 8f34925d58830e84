#include "odhd/hdc.hpp"

#include <cmath>

namespace odhd::hdc {

namespace {

void check_same_dims(const Hypervector& a, const Hypervector& b, const char* op) {
    if (a.dims() != b.dims())
        throw InvalidArgument(std::string(op) + ": dimension mismatch (" +
                              std::to_string(a.dims()) + " vs " + std::to_string(b.dims()) + ")");
}

}  // namespace

Hypervector::Hypervector(std::vector<std::int64_t> elems, Kind kind)
    : elems_(std::move(elems)), kind_(kind) {
    if (kind_ == Kind::bipolar) {
        for (std::int64_t v : elems_) {
            if (v != 1 && v != -1)
                throw InvalidArgument("Hypervector: bipolar elements must be +/-1");
        }
    }
}

Hypervector random_bipolar(std::size_t dims, Rng& rng) {
    if (dims == 0) throw InvalidArgument("random_bipolar: dims must be positive");
    std::vector<std::int64_t> elems(dims);
    for (auto& v : elems) v = (rng.next() & 1u) ? 1 : -1;
    return Hypervector(std::move(elems), Kind::bipolar);
}

Hypervector bundle(const Hypervector& a, const Hypervector& b) {
    check_same_dims(a, b, "bundle");
    std::vector<std::int64_t> out(a.dims());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Hypervector(std::move(out), Kind::accumulator);
}

Hypervector bind(const Hypervector& a, const Hypervector& b) {
    check_same_dims(a, b, "bind");
    std::vector<std::int64_t> out(a.dims());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
    const Kind kind = (a.kind() == Kind::bipolar && b.kind() == Kind::bipolar)
                          ? Kind::bipolar
                          : Kind::accumulator;
    return Hypervector(std::move(out), kind);
}

Hypervector permute(const Hypervector& h, std::uint64_t r) {
    const std::size_t d = h.dims();
    if (d == 0) return h;
    const std::size_t shift = static_cast<std::size_t>(r % d);
    if (shift == 0) return h;
    std::vector<std::int64_t> out(d);
    for (std::size_t i = 0; i < d; ++i) out[(i + shift) % d] = h[i];
    return Hypervector(std::move(out), h.kind());
}

double cosine_similarity(const Hypervector& a, const Hypervector& b) {
    check_same_dims(a, b, "cosine_similarity");
    std::int64_t dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.dims(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0)
        throw DomainError("cosine_similarity: zero-norm operand");
    return static_cast<double>(dot) /
           (std::sqrt(static_cast<double>(na)) * std::sqrt(static_cast<double>(nb)));
}

std::int64_t dot_similarity(const Hypervector& a, const Hypervector& b) {
    check_same_dims(a, b, "dot_similarity");
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < a.dims(); ++i) dot += a[i] * b[i];
    return dot;
}

std::size_t hamming_distance(const Hypervector& a, const Hypervector& b) {
    check_same_dims(a, b, "hamming_distance");
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.dims(); ++i) count += (a[i] != b[i]) ? 1 : 0;
    return count;
}

}  // namespace odhd::hdc
