#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcna/csv.hpp"

namespace tcna {

enum class SignalKind { sine, sawtooth, random_walk, constant };

SignalKind signal_kind_from_string(const std::string& name);

struct SignalGenSpec {
    SignalKind kind = SignalKind::sine;
    double period = 64.0;   // steps per cycle (sine, sawtooth)
    double amplitude = 1.0; // peak value; constant kinds emit exactly this
    double phase = 0.0;     // radians (sine), cycle fraction via phase/2pi (sawtooth)
    double noise_std = 0.0; // additive Gaussian noise; random-walk step stddev
};

struct GeneratorSpec {
    std::string id;
    std::vector<SignalGenSpec> signals;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    double time_step = 0.01;
    double time_offset = 0.0;
    std::size_t index_offset = 0; // first step index, for split train/test emission
};

// Deterministic per-id series, all labels 0. Signal s at step i:
//   sine:        amplitude * sin(2*pi*i/period + phase) + noise
//   sawtooth:    amplitude * (2*frac(i/period + phase/2pi) - 1) + noise
//   random-walk: previous + N(0, noise_std), starting at 0
//   constant:    amplitude + noise
std::vector<MessageRecord> generate(const GeneratorSpec& spec);

} // namespace tcna
