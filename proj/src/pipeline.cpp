#include "odhd/pipeline.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "odhd/errors.hpp"

namespace odhd {

std::string to_string(Variant v) {
    return v == Variant::software ? "software" : "cim";
}

Variant variant_from_string(const std::string& name) {
    if (name == "software") return Variant::software;
    if (name == "cim" || name == "cim_friendly" || name == "cim-friendly")
        return Variant::cim_friendly;
    throw ConfigError("unknown variant '" + name + "' (expected software|cim)");
}

hdc::Hypervector encode_levels(const SeedSet& seeds, std::span<const std::uint32_t> levels) {
    if (levels.empty()) throw InvalidArgument("encode: empty feature vector");
    const std::size_t d = seeds.dims;
    std::vector<std::int64_t> acc(d, 0);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& seed = seeds.for_level(levels[i]).elems();
        const std::size_t shift = i % d;  // rho^{i-1} for the i-th (1-based) feature
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t pos = j + shift;
            if (pos >= d) pos -= d;
            acc[pos] += seed[j];
        }
    }
    return hdc::Hypervector(std::move(acc), hdc::Kind::accumulator);
}

hdc::Hypervector encode(const SeedSet& seeds, const Quantizer& q, std::span<const double> x) {
    return encode_levels(seeds, q.quantize(x));
}

hdc::Hypervector train_one_class(const std::vector<hdc::Hypervector>& encoded) {
    if (encoded.empty()) throw InvalidArgument("train_one_class: empty training sequence");
    std::vector<std::int64_t> acc(encoded.front().dims(), 0);
    for (const auto& hv : encoded) {
        if (hv.dims() != acc.size())
            throw InvalidArgument("train_one_class: dimension mismatch in training HVs");
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += hv[i];
    }
    return hdc::Hypervector(std::move(acc), hdc::Kind::accumulator);
}

double mean_absolute_deviation(std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("mean_absolute_deviation: empty array");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double dev = 0.0;
    for (double v : values) dev += std::abs(v - mean);
    return dev / static_cast<double>(values.size());
}

double population_std(std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("population_std: empty array");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(values.size()));
}

double similarity(Variant variant, const hdc::Hypervector& a, const hdc::Hypervector& b) {
    if (variant == Variant::software) return hdc::cosine_similarity(a, b);
    return static_cast<double>(hdc::dot_similarity(a, b));
}

ThresholdResult compute_threshold(const hdc::Hypervector& h_oc,
                                  const std::vector<hdc::Hypervector>& encoded, Variant variant) {
    if (encoded.empty()) throw InvalidArgument("compute_threshold: empty training sequence");
    ThresholdResult result;
    result.similarities.reserve(encoded.size());
    for (const auto& hv : encoded) result.similarities.push_back(similarity(variant, h_oc, hv));
    const std::span<const double> s(result.similarities);
    double sum = 0.0;
    for (double v : s) sum += v;
    const double mean = sum / static_cast<double>(s.size());
    const double spread =
        variant == Variant::software ? population_std(s) : mean_absolute_deviation(s);
    result.threshold = mean + 2.0 * spread;
    return result;
}

Matrix pad_to_power_of_two(const Matrix& train, Rng& rng) {
    if (train.rows() == 0) throw InvalidArgument("pad_to_power_of_two: empty matrix");
    const std::size_t n = train.rows();
    const std::size_t target = std::bit_ceil(n);
    if (target == n) return train;

    // Pick the extra rows without replacement; the gap to the next power of two
    // is always < n, so there are enough distinct rows.
    const std::size_t extra = target - n;
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    Matrix padded = train;
    for (std::size_t i = 0; i < extra; ++i) {
        const std::size_t pick = i + rng.below(n - i);
        std::swap(indices[i], indices[pick]);
        padded.append_row(train.row(indices[i]));
    }
    return padded;
}

void fine_tune(OneClassModel& model, const std::vector<hdc::Hypervector>& encoded,
               std::size_t epochs) {
    for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
        const double threshold = model.threshold;  // fixed for the epoch
        for (const auto& hv : encoded) {
            if (similarity(model.variant, model.h_oc, hv) < threshold)
                model.h_oc = hdc::bundle(model.h_oc, hv);
        }
        model.threshold = compute_threshold(model.h_oc, encoded, model.variant).threshold;
    }
}

Detection detect(const OneClassModel& model, std::span<const double> x) {
    const hdc::Hypervector query = encode(model.seeds, model.quantizer, x);
    const double score = similarity(model.variant, model.h_oc, query);
    return {score >= model.threshold ? Label::inlier : Label::outlier, score};
}

OneClassModel fit_model(const Matrix& train, const FitConfig& cfg, Rng& rng) {
    if (train.rows() == 0) throw InvalidArgument("fit_model: empty training set");
    OneClassModel model;
    model.variant = cfg.variant;
    model.epochs = cfg.epochs;
    model.quantizer = Quantizer::fit(train, cfg.levels);
    model.seeds = generate_seeds(cfg.dims, cfg.levels, rng);

    Matrix padded;
    const Matrix* rows = &train;
    if (cfg.variant == Variant::cim_friendly) {
        padded = pad_to_power_of_two(train, rng);
        rows = &padded;
    }

    std::vector<hdc::Hypervector> encoded;
    encoded.reserve(rows->rows());
    for (std::size_t r = 0; r < rows->rows(); ++r)
        encoded.push_back(encode(model.seeds, model.quantizer, rows->row(r)));

    model.h_oc = train_one_class(encoded);
    model.threshold = compute_threshold(model.h_oc, encoded, model.variant).threshold;
    fine_tune(model, encoded, cfg.epochs);
    return model;
}

}  // namespace odhd
