#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tcna/ingest.hpp"
#include "tcna/model.hpp"

namespace tcna {

// Signed per-signal divergence of the model prediction from the next
// observed message. Attributed to the message being judged (the one at the
// step after the window).
struct DivergenceVector {
    std::size_t message_index = 0;
    std::vector<double> scores;
    int true_label = 0;
};

// DS for every window of the series: ds_i = predicted_i - observed_i(t+1).
// `labels` holds the per-record labels of the series rows.
std::vector<DivergenceVector> divergence_scores(const TcnaModel& model, const Matrix& series,
                                                const std::vector<int>& labels,
                                                int batch_size = 256);

// Chronological two-way split; the calibration side (first `ratio` of the
// vectors) must contain both classes.
std::pair<std::vector<DivergenceVector>, std::vector<DivergenceVector>>
split_calibration_evaluation(const std::vector<DivergenceVector>& vectors, double ratio = 0.5);

// CART binary classifier. Branch nodes route feature <= threshold left;
// leaves carry class counts.
struct TreeNode {
    int feature = -1; // -1 = leaf
    double threshold = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
    std::size_t n0 = 0;
    std::size_t n1 = 0;

    bool is_leaf() const { return feature < 0; }
};

struct DecisionTree {
    std::unique_ptr<TreeNode> root;
    int feature_count = 0;

    std::size_t node_count() const;
    std::size_t depth() const;
};

struct TreeFitOptions {
    std::size_t min_samples_split = 2;
    int max_depth = -1; // -1 = unlimited
};

// Gini impurity 1 - p0^2 - p1^2 of a two-class count pair.
double gini_impurity(std::size_t n0, std::size_t n1);

// Exhaustive CART: candidate thresholds are midpoints between consecutive
// distinct sorted feature values; the split minimizing weighted Gini wins,
// ties broken toward the lowest feature index, then the lowest threshold.
DecisionTree tree_fit(const std::vector<DivergenceVector>& calibration,
                      const TreeFitOptions& options = {});

struct TreePrediction {
    int label = 0;            // leaf majority, tie flagged as attack
    double probability = 0.0; // n1 / (n0 + n1) at the leaf
};

TreePrediction tree_predict(const DecisionTree& tree, const std::vector<double>& scores);

// Nested JSON: {"feature":..,"threshold":..,"left":{..},"right":{..}} with
// {"counts":[n0,n1]} leaves.
void save_tree(const std::string& path, const DecisionTree& tree);
DecisionTree load_tree(const std::string& path);

// CSV export: message_index,label,ds_1..ds_n.
void save_divergence_csv(const std::string& path, const std::vector<DivergenceVector>& vectors);

} // namespace tcna
