#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcna/model.hpp"

namespace tcna {

struct TrainConfig {
    int epochs = 200;
    int batch_size = 256;
    double learning_rate = 1e-4;
    int patience = 10;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TrainReport {
    std::vector<double> train_loss; // per-epoch average
    std::vector<double> val_loss;   // per-epoch average
    int stopped_epoch = 0;          // epochs actually run (1-based count)
    int best_epoch = 0;             // epoch with minimum validation loss
};

// MSE over the m signals of one predicted message.
double mse_last_step(const std::vector<double>& prediction, const std::vector<double>& target);

struct BatchResult {
    double loss = 0.0;
    std::vector<double> gradients; // flat, aligned with flatten_params
};

// Exact gradient of the batch-mean last-step MSE with respect to every
// stored parameter, backpropagated through weight normalization, attention,
// ReLU (subgradient 0 at 0), residual sums, and the output layer.
BatchResult gradients(const TcnaModel& model, const std::vector<SignalWindow>& windows,
                      const std::vector<std::size_t>& order, std::size_t first,
                      std::size_t count);

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Bias-corrected Adam update, in place.
void adam_step(std::vector<double>& params, const std::vector<double>& grads,
               AdamState& state, double learning_rate);

// Mean last-step MSE of the model over a window set.
double evaluate_loss(const TcnaModel& model, const std::vector<SignalWindow>& windows,
                     int batch_size);

// Shuffled mini-batch training with early stopping on validation loss; the
// returned model carries the best-validation-epoch parameters.
TrainReport train(TcnaModel& model, const std::vector<SignalWindow>& train_windows,
                  const std::vector<SignalWindow>& val_windows, const TrainConfig& config);

// One JSON object per epoch: {"epoch": e, "train_loss": ..., "val_loss": ...}.
void save_report_jsonl(const std::string& path, const TrainReport& report);

} // namespace tcna
