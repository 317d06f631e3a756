#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bore/matrix.hpp"

namespace bore {

// Ingestion failures, one type per reportable condition.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FileNotFoundError : DataError {
    using DataError::DataError;
};
struct CsvParseError : DataError {
    using DataError::DataError;
};
struct LabelColumnError : DataError {
    using DataError::DataError;
};
struct NonFiniteValueError : DataError {
    using DataError::DataError;
};

/// Feature matrix plus binary outlier labels (1 = outlier, 0 = inlier).
struct LabeledDataset {
    Matrix features;                         // n x k
    std::vector<int> labels;                 // length n
    std::vector<std::string> feature_names;  // length k
    std::vector<std::string> row_ids;        // length n

    std::size_t n() const { return features.rows(); }
    std::size_t dim() const { return features.cols(); }
    std::size_t outlier_count() const;
};

/// Per-column min/max fitted on training rows.
struct ScaleParams {
    std::vector<double> min;
    std::vector<double> max;
};

/// Row indices of one class-balanced subsample of the training set.
struct Bag {
    std::vector<std::size_t> indices;
    int bag_id = 0;
};

struct BagSpec {
    int num_bags = 50;
    double outlier_fraction = 0.70;
    std::uint64_t seed = 0;
};

/// Loads a labeled CSV (UTF-8, comma separated, one header row). The label
/// column must contain only 0/1 and is removed from the feature matrix.
LabeledDataset load_csv(const std::string& path, const std::string& label_column = "label");

/// Loads the named feature columns from a CSV, ignoring any extra columns.
/// Used at prediction time against a stored model schema; missing columns
/// are reported by name.
std::pair<Matrix, std::vector<std::string>> load_features(
    const std::string& path, const std::vector<std::string>& required_columns);

ScaleParams fit_minmax(const LabeledDataset& train);

/// Maps each entry to (x - min) / (max - min), clamped to [0, 1]. Constant
/// columns map to 0.
Matrix apply_minmax(const Matrix& data, const ScaleParams& params);

/// Stratified split: per class, round(frac * class_size) rows (half up) go
/// to the training part. Deterministic for a fixed seed.
std::pair<LabeledDataset, LabeledDataset> train_test_split(const LabeledDataset& data,
                                                           double train_fraction,
                                                           std::uint64_t seed);

/// Draws spec.num_bags balanced bags: each contains
/// p = ceil(outlier_fraction * n_out) outliers and p inliers, both sampled
/// without replacement within the bag.
std::vector<Bag> sample_balanced_bags(std::span<const int> labels, const BagSpec& spec);

}  // namespace bore
