#include "odhd/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "odhd/errors.hpp"

namespace odhd {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_number(const std::string& cell, const std::string& path, std::size_t line_no,
                    std::size_t col) {
    const std::string t = trim(cell);
    double value = 0.0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ParseError(path + ": line " + std::to_string(line_no) + ": non-numeric cell '" +
                         cell + "' in column " + std::to_string(col + 1));
    return value;
}

}  // namespace

std::size_t Dataset::inliers() const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 0));
}

std::size_t Dataset::outliers() const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    const std::string name = path.string();
    if (!in) throw ConfigError("cannot open dataset file: " + name);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError(name + ": empty file");
    ++line_no;
    const auto header = split_csv_line(line);
    if (header.size() < 2)
        throw ParseError(name + ": line 1: header needs at least one feature column and a label");
    if (header.back() != "label")
        throw ParseError(name + ": line 1: final column must be named 'label', got '" +
                         header.back() + "'");
    const std::size_t cols = header.size() - 1;

    Dataset ds;
    ds.name = path.stem().string();
    ds.features = Matrix(0, cols);
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw ParseError(name + ": line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(cells.size()));
        std::vector<double> row(cols);
        for (std::size_t c = 0; c < cols; ++c) row[c] = parse_number(cells[c], name, line_no, c);
        const double label = parse_number(cells[cols], name, line_no, cols);
        if (label != 0.0 && label != 1.0)
            throw ParseError(name + ": line " + std::to_string(line_no) +
                             ": label must be 0 or 1");
        ds.features.append_row(row);
        ds.labels.push_back(label == 1.0 ? 1 : 0);
    }
    if (ds.labels.empty()) throw ParseError(name + ": no data rows");
    return ds;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write dataset file: " + path.string());
    for (std::size_t c = 0; c < ds.features.cols(); ++c) out << "f_" << (c + 1) << ",";
    out << "label\n";
    out.precision(17);
    for (std::size_t r = 0; r < ds.features.rows(); ++r) {
        for (std::size_t c = 0; c < ds.features.cols(); ++c) out << ds.features.at(r, c) << ",";
        out << ds.labels[r] << "\n";
    }
}

PuSplit split_pu(const Dataset& ds, double train_fraction, Rng& rng) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw InvalidArgument("split_pu: train fraction must be in (0, 1)");
    std::vector<std::size_t> inlier_idx;
    for (std::size_t i = 0; i < ds.labels.size(); ++i)
        if (ds.labels[i] == 0) inlier_idx.push_back(i);
    if (inlier_idx.empty()) throw InvalidArgument("split_pu: dataset has no inliers");

    const auto n_train =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(inlier_idx.size())));
    if (n_train == 0)
        throw InvalidArgument("split_pu: train fraction yields an empty training set");

    // Fisher-Yates over the inlier indices; the first n_train go to training.
    for (std::size_t i = 0; i + 1 < inlier_idx.size(); ++i) {
        const std::size_t pick = i + rng.below(inlier_idx.size() - i);
        std::swap(inlier_idx[i], inlier_idx[pick]);
    }
    std::vector<bool> in_train(ds.labels.size(), false);
    for (std::size_t i = 0; i < n_train; ++i) in_train[inlier_idx[i]] = true;

    PuSplit split;
    split.train = Matrix(0, ds.features.cols());
    split.test.name = ds.name;
    split.test.features = Matrix(0, ds.features.cols());
    for (std::size_t i = 0; i < ds.labels.size(); ++i) {
        if (in_train[i]) {
            split.train.append_row(ds.features.row(i));
        } else {
            split.test.features.append_row(ds.features.row(i));
            split.test.labels.push_back(ds.labels[i]);
        }
    }
    return split;
}

Dataset synthetic_gaussian(std::size_t n_inliers, std::size_t n_outliers, std::size_t features,
                           double shift, Rng& rng) {
    Dataset ds;
    ds.name = "synthetic";
    ds.features = Matrix(0, features);
    std::vector<double> row(features);
    for (std::size_t i = 0; i < n_inliers; ++i) {
        for (auto& v : row) v = rng.gaussian();
        ds.features.append_row(row);
        ds.labels.push_back(0);
    }
    for (std::size_t i = 0; i < n_outliers; ++i) {
        for (auto& v : row) v = shift + rng.gaussian();
        ds.features.append_row(row);
        ds.labels.push_back(1);
    }
    return ds;
}

}  // namespace odhd
