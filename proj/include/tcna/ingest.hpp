#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tcna/csv.hpp"

namespace tcna {

// Dense row-major matrix; rows = time steps, cols = signals.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Per-signal min/max of one message id, fitted on the training split only.
struct ScalingParams {
    std::string id;
    std::vector<double> min;
    std::vector<double> max;
};

// One rolling-window model input: R rows of scaled signals plus the signal
// vector one step past the window (the prediction target).
struct SignalWindow {
    Matrix values; // R x m
    std::size_t start_index = 0;
    std::vector<double> target; // m
};

struct DatasetSplit {
    std::vector<MessageRecord> train;
    std::vector<MessageRecord> validation;
};

// Stable partition of records by message id (map iteration is id-ordered).
// Inconsistent signal counts within one id raise ValidationError.
std::map<std::string, std::vector<MessageRecord>> group_by_id(
    const std::vector<MessageRecord>& records);

// Column-wise extrema of the training records for one id.
ScalingParams fit_scaler(const std::string& id, const std::vector<MessageRecord>& train);

// s' = (s - min) / (max - min); constant columns map to 0. Values outside the
// training range are not clamped: the excursion is signal, not noise.
std::vector<MessageRecord> apply_scaler(const std::vector<MessageRecord>& records,
                                        const ScalingParams& params);

// Subsequence length R = (k - 1) * 2^l for kernel size k and l DCC layers.
int subsequence_length(int kernel_size, int dcc_layers);

// Signal matrix (T x m) from per-id records.
Matrix to_matrix(const std::vector<MessageRecord>& records);

// All rolling windows of length R with stride 1 and shifted-by-one targets;
// T rows yield T - R windows. Needs T >= R + 1.
std::vector<SignalWindow> make_windows(const Matrix& series, int receptive_field,
                                       const std::string& id = "");

// Chronological split: first ceil(0.85 * T) records train, rest validation.
// Each side must be able to produce at least one window of length R.
DatasetSplit split_train_val(const std::vector<MessageRecord>& records, int receptive_field,
                             double train_fraction = 0.85);

// ScalingParams persistence: {"id": ..., "min": [...], "max": [...]}.
void save_scaler(const std::string& path, const ScalingParams& params);
ScalingParams load_scaler(const std::string& path);

} // namespace tcna
