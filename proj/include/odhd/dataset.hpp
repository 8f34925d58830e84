#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "odhd/matrix.hpp"
#include "odhd/rng.hpp"

namespace odhd {

// Labels: 0 = inlier, 1 = outlier.
struct Dataset {
    Matrix features;
    std::vector<int> labels;
    std::string name;

    std::size_t size() const { return labels.size(); }
    std::size_t inliers() const;
    std::size_t outliers() const;
};

// CSV schema: header row; numeric feature columns; final column named `label`
// with values in {0, 1}. Parse failures report the 1-based line number.
Dataset load_dataset(const std::filesystem::path& path);

void save_dataset(const Dataset& ds, const std::filesystem::path& path);

struct PuSplit {
    Matrix train;   // inlier rows only
    Dataset test;   // held-out inliers + every outlier, original order
};

// Positive-unlabeled split: floor(fraction * inlier-count) inliers train, the
// rest plus all outliers test.
PuSplit split_pu(const Dataset& ds, double train_fraction, Rng& rng);

// Desk-scale benchmark: n_inliers standard-normal points in `features`
// dimensions plus n_outliers shifted by `shift` sigma in every dimension.
Dataset synthetic_gaussian(std::size_t n_inliers, std::size_t n_outliers, std::size_t features,
                           double shift, Rng& rng);

}  // namespace odhd
