#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tcna/ingest.hpp"
#include "tcna/tensor.hpp"

namespace tcna {

// Weight-normalized dilated causal convolution parameters. The stored weight
// is the direction array v plus a per-output-channel gain g; the effective
// kernel is w = g * v / ||v||, with ||v|| taken over each output channel's
// in_channels x kernel slice.
struct ConvLayerParams {
    int out_channels = 0;
    int in_channels = 0;
    int kernel = 0;
    int dilation = 1;
    std::vector<double> direction; // out * in * kernel
    std::vector<double> gain;      // out
    std::vector<double> bias;      // out

    std::size_t weight_size() const {
        return static_cast<std::size_t>(out_channels) * in_channels * kernel;
    }
};

// Plain (not weight-normalized) 1x1 convolution; the block-1 shortcut that
// matches channel counts.
struct Conv1x1Params {
    int out_channels = 0;
    int in_channels = 0;
    std::vector<double> weight; // out * in
    std::vector<double> bias;   // out
};

struct TcnaConfig {
    int input_features = 0;     // m
    int kernel_size = 2;        // k
    int dcc_layers = 6;         // l, total DCC layer count
    int channel_multiplier = 3; // hidden width = multiplier * m
    bool use_attention = true;  // ablation knob; attention sits before every block but the first

    int hidden_channels() const { return channel_multiplier * input_features; }
    int receptive_field() const; // (k - 1) * 2^l
    // DCC layers are grouped in pairs into residual blocks; an odd layer
    // count leaves a single-conv final block.
    int num_blocks() const { return (dcc_layers + 1) / 2; }
    int dilation_of(int layer) const { return 1 << layer; }

    void validate() const;
};

struct TcnaModel {
    TcnaConfig config;
    std::vector<ConvLayerParams> conv; // dcc_layers entries, network order
    Conv1x1Params downsample;          // m -> hidden, block 1 only
    std::vector<double> output_weight; // m x hidden, row-major
    std::vector<double> output_bias;   // m
};

// w = g * v / ||v|| per output channel; a zero-norm channel is a NumericError.
std::vector<double> effective_weights(const ConvLayerParams& p);

// Left-causal dilated convolution: out-of-range taps contribute zero, output
// time extent equals input time extent, no future taps.
Tensor dilated_causal_conv1d(const Tensor& x, const ConvLayerParams& p);

// Parameter-free channel self-attention (per batch item): W = row-softmax of
// X X^T / sqrt(T) over the channels x channels similarity matrix, output WX.
Tensor attention(const Tensor& x);

// One residual block: conv -> ReLU per layer, plus the shortcut (1x1 conv
// when given, identity otherwise). No activation after the sum.
Tensor trb_forward(const Tensor& x, const std::vector<ConvLayerParams>& convs,
                   const Conv1x1Params* shortcut);

// Intermediate activations of one forward pass, kept for backprop.
struct ForwardTrace {
    std::vector<Tensor> conv_inputs;             // per DCC layer
    std::vector<Tensor> conv_pre_relu;           // per DCC layer, conv output before ReLU
    std::vector<std::vector<double>> eff_weights; // per DCC layer
    std::vector<Tensor> attention_inputs;        // per block (unused slot for block 0)
    std::vector<std::vector<double>> attention_w; // per block: batch * C * C softmax rows
    Tensor block1_input;                          // downsample input
    Tensor final_output;                          // last block output
    std::vector<double> last_step;                // batch x hidden
    std::vector<double> predictions;              // batch x m
};

// Full network forward over a batch of windows, returning one m-vector per
// batch item (the predicted next message). Window time extent must equal R.
std::vector<double> tcna_forward(const TcnaModel& model, const Tensor& input,
                                 ForwardTrace* trace = nullptr);

// (batch, m, R) tensor from windows [first, first+count).
Tensor batch_from_windows(const std::vector<SignalWindow>& windows,
                          const std::vector<std::size_t>& order,
                          std::size_t first, std::size_t count);

std::size_t parameter_count(const TcnaModel& model);

// Flat parameter vector in a fixed order (per conv layer: direction, gain,
// bias; then downsample weight, bias; then output weight, bias). Gradients
// and Adam state use the same layout.
std::vector<double> flatten_params(const TcnaModel& model);
void set_params(TcnaModel& model, const std::vector<double>& flat);

// Fresh model: directions uniform in +-1/sqrt(fan_in), gains set to ||v|| so
// the effective weight starts equal to the direction, biases zero.
TcnaModel init_model(const TcnaConfig& config, std::uint64_t seed);

// JSON manifest {"config": {...}, "layers": [{"name","shape","values"}]};
// round-trip reproduces bit-identical predictions.
void save_model(const std::string& path, const TcnaModel& model);
TcnaModel load_model(const std::string& path);

} // namespace tcna
