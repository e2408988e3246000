#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcna/detect.hpp"
#include "tcna/model.hpp"

namespace tcna {

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + tn + fp + fn; }
};

ConfusionCounts confusion(const std::vector<int>& labels, const std::vector<int>& predictions);

// (tp + tn) / total.
double accuracy(const ConfusionCounts& c);

// fn / (fn + tp); requires at least one positive sample.
double fnr(const ConfusionCounts& c);

// Matthews correlation, product form: (tp*tn - fp*fn) / sqrt of the four
// marginal products; 0 when any marginal is empty.
double mcc(const ConfusionCounts& c);

struct RocPoint {
    double threshold = 0.0;
    double fpr = 0.0;
    double tpr = 0.0;
};

struct RocResult {
    std::vector<RocPoint> curve; // fpr non-decreasing, endpoints (0,0) and (1,1)
    double auc = 0.0;
};

// Threshold sweep over the distinct score values (predict positive at
// score >= threshold) plus a sentinel above the maximum; AUC by trapezoid
// over fpr. Both classes must be present.
RocResult roc_auc(const std::vector<int>& labels, const std::vector<double>& scores);

struct OverheadReport {
    std::size_t parameter_count = 0;
    std::size_t model_bytes = 0;
    std::size_t tree_bytes = 0;
    double mean_us = 0.0;
    double median_us = 0.0;
    double p99_us = 0.0;
    double min_us = 0.0;
    std::size_t iterations = 0;
};

// Wall-clock latency of single-window prediction + divergence + tree
// traversal over `iterations` evaluations (warmup excluded), plus model size
// figures. Windows are cycled from `series`.
OverheadReport overhead_report(const TcnaModel& model, const DecisionTree& tree,
                               const Matrix& series, std::size_t iterations = 10000);

void save_roc_csv(const std::string& path, const RocResult& roc);

} // namespace tcna
