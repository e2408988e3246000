#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcna/metrics.hpp"
#include "tcna/model.hpp"
#include "tcna/train.hpp"

namespace tcna {

// Flat JSON pipeline configuration. Relative paths are resolved against the
// directory of the config file they came from.
struct PipelineConfig {
    std::filesystem::path out_dir = "out";
    std::filesystem::path train_csv;    // default <out_dir>/data/train.csv
    std::filesystem::path test_csv;     // default <out_dir>/data/test.csv
    std::filesystem::path attacked_csv; // default <out_dir>/data/attacked.csv
    std::filesystem::path generator_spec; // for `generate`
    std::filesystem::path attack_spec;    // for `inject`

    int kernel_size = 2;
    int dcc_layers = 6;
    int channel_multiplier = 3;
    std::optional<int> receptive_field; // must match (k-1)*2^l when set
    bool use_attention = true;

    int epochs = 200;
    int batch_size = 256;
    double learning_rate = 1e-4;
    int patience = 10;
    std::uint64_t seed = 42;

    double calibration_ratio = 0.5;
    int post_gap_labels = 1;
    std::vector<int> sweep_receptive_fields = {16, 32, 64, 128};
    std::size_t latency_iterations = 10000;

    std::filesystem::path data_dir() const { return out_dir / "data"; }
    std::filesystem::path models_dir() const { return out_dir / "models"; }
    std::filesystem::path reports_dir() const { return out_dir / "reports"; }

    TcnaConfig tcna_config(int input_features) const;
    TrainConfig train_config() const;
    void validate() const;
};

PipelineConfig load_pipeline_config(const std::filesystem::path& path);

// Per-scope classification metrics; metrics that are undefined on the scope
// (e.g. FNR with no positives) stay unset and gain a note.
struct MetricSet {
    ConfusionCounts counts;
    std::optional<double> accuracy;
    std::optional<double> roc_auc;
    std::optional<double> fnr;
    std::optional<double> mcc;
    std::size_t roc_points = 0;
    std::vector<std::string> notes;
};

struct EvaluationReport {
    MetricSet aggregate;
    std::map<std::string, MetricSet> per_kind;
    std::map<std::string, OverheadReport> overhead; // per message id
};

struct SweepRow {
    int receptive_field = 0;
    int dcc_layers = 0;
    double train_loss = 0.0; // best-epoch average, mean over ids
    double val_loss = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t selected = 0; // argmin validation loss, lowest R on ties
};

// Subcommand bodies; the CLI wrapper only parses arguments around these.
void cmd_generate(const PipelineConfig& config);
std::map<std::string, TrainReport> cmd_train(const PipelineConfig& config);
void cmd_inject(const PipelineConfig& config);
EvaluationReport cmd_evaluate(const PipelineConfig& config);
SweepResult cmd_sweep(const PipelineConfig& config);

} // namespace tcna
