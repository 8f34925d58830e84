#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "odhd/hdc.hpp"
#include "odhd/matrix.hpp"
#include "odhd/quantizer.hpp"
#include "odhd/rng.hpp"
#include "odhd/seeds.hpp"

namespace odhd {

// Software: cosine similarity, threshold R = mu(S) + 2*sigma(S) (population sigma).
// CimFriendly: integer dot similarity, R = mu(S) + 2*MAD(S), training set padded
// to a power of two before encoding.
enum class Variant { software, cim_friendly };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

enum class Label { inlier, outlier };

struct Detection {
    Label label;
    double score;
};

struct OneClassModel {
    Variant variant = Variant::software;
    std::size_t epochs = 0;  // fine-tuning epochs the model was fitted with
    Quantizer quantizer;
    SeedSet seeds;
    hdc::Hypervector h_oc;
    double threshold = 0.0;

    bool operator==(const OneClassModel&) const = default;
};

// H = sum_i rho^{i-1}(seed(level(x_i))): the first feature's seed un-permuted,
// feature i rotated by i-1.
hdc::Hypervector encode(const SeedSet& seeds, const Quantizer& q, std::span<const double> x);

// Encode from precomputed level indices (1-based).
hdc::Hypervector encode_levels(const SeedSet& seeds, std::span<const std::uint32_t> levels);

// One-class HV: exact integer sum of all encoded training HVs.
hdc::Hypervector train_one_class(const std::vector<hdc::Hypervector>& encoded);

// (1/n) * sum |s_i - mean|.
double mean_absolute_deviation(std::span<const double> values);

double population_std(std::span<const double> values);

double similarity(Variant variant, const hdc::Hypervector& a, const hdc::Hypervector& b);

struct ThresholdResult {
    double threshold;
    std::vector<double> similarities;  // S, one entry per training HV
};

ThresholdResult compute_threshold(const hdc::Hypervector& h_oc,
                                  const std::vector<hdc::Hypervector>& encoded, Variant variant);

// Grow the training matrix to the next power of two by duplicating distinct
// rows chosen without replacement; a power-of-two input is returned unchanged.
Matrix pad_to_power_of_two(const Matrix& train, Rng& rng);

// Per epoch: every training HV whose similarity to the running H_OC falls below
// the epoch's threshold is bundled in; the threshold is recomputed after each epoch.
void fine_tune(OneClassModel& model, const std::vector<hdc::Hypervector>& encoded,
               std::size_t epochs);

Detection detect(const OneClassModel& model, std::span<const double> x);

struct FitConfig {
    Variant variant = Variant::software;
    std::size_t dims = 10000;
    std::size_t levels = 10;
    std::size_t epochs = 10;
};

// Full training pipeline on an inlier-only matrix. Consumes the rng in a fixed
// order: seed generation first, then (CiM variant only) padding-row selection.
OneClassModel fit_model(const Matrix& train, const FitConfig& cfg, Rng& rng);

}  // namespace odhd
