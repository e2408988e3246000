#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcna/csv.hpp"

namespace tcna {

enum class AttackKind { plateau, suppress, continuous, playback };

const char* to_string(AttackKind kind);
AttackKind attack_kind_from_string(const std::string& name);

struct AttackSpec {
    AttackKind kind = AttackKind::plateau;
    std::string id;
    std::vector<int> signal_indices;   // empty = all signals of the id
    std::size_t start = 0;             // index into the per-id series
    std::size_t duration = 1;          // message count
    std::optional<double> value;       // plateau constant; default: value at start-1
    double target = 0.0;               // continuous ramp endpoint
    std::size_t source_start = 0;      // playback source span start
};

struct InjectOptions {
    int post_gap_labels = 1;        // records labeled after a suppress gap
    std::size_t min_remaining = 0;  // suppress must leave at least this many records
};

struct InjectResult {
    std::vector<MessageRecord> series;
    std::size_t labeled = 0; // records whose label this injection set to 1
};

// Targeted signals hold spec.value (default: their value at start-1) over
// [start, start+duration); those records are labeled 1.
InjectResult inject_plateau(const std::vector<MessageRecord>& series, const AttackSpec& spec);

// Messages in [start, start+duration) are removed; the first
// post_gap_labels surviving messages after the gap are labeled 1.
InjectResult inject_suppress(const std::vector<MessageRecord>& series, const AttackSpec& spec,
                             const InjectOptions& options);

// Linear ramp from each record's true value to spec.target, reaching the
// target exactly at the final attacked step.
InjectResult inject_continuous(const std::vector<MessageRecord>& series, const AttackSpec& spec);

// Targeted signals over [start, start+duration) replaced with the values
// from [source_start, source_start+duration), which must lie fully before
// the attack span.
InjectResult inject_playback(const std::vector<MessageRecord>& series, const AttackSpec& spec);

// A record of one message that some attack labeled, for per-kind evaluation.
struct AttackTag {
    std::string id;
    std::size_t index = 0; // post-injection per-id series index
    AttackKind kind = AttackKind::plateau;
};

struct LogInjectResult {
    std::vector<MessageRecord> records;
    std::vector<AttackTag> tags;
    std::vector<std::size_t> labeled_per_spec;
};

// Applies specs in order to a whole log, keeping the original interleaving
// of untouched records. Indices in each spec refer to the target id's series
// as it stands after the preceding specs.
LogInjectResult apply_attacks(const std::vector<MessageRecord>& records,
                              const std::vector<AttackSpec>& specs,
                              const InjectOptions& options);

// JSON list of specs, e.g. [{"kind":"plateau","id":"id1","signals":[0],
// "start":1000,"duration":50,"value":0.8}, ...]. Continuous uses "target",
// playback uses "source_start".
std::vector<AttackSpec> load_attack_specs(const std::string& path);

void save_attack_tags(const std::string& path, const std::vector<AttackTag>& tags);
std::vector<AttackTag> load_attack_tags(const std::string& path);

} // namespace tcna
