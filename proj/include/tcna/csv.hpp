#pragma once

#include <string>
#include <vector>

namespace tcna {

// One timestamped network message. `signals` holds raw or scaled values
// depending on pipeline stage; its length is constant per message id.
struct MessageRecord {
    double timestamp = 0.0;
    std::string message_id;
    std::vector<double> signals;
    int label = 0; // 0 = no-attack, 1 = attack
};

// Number of signal columns in the log format.
inline constexpr int kMaxSignals = 4;
inline constexpr const char* kCsvHeader = "label,time,id,signal1,signal2,signal3,signal4";

// Parses a message log. Rows must match kCsvHeader exactly; unused trailing
// signal columns are empty and yield a shorter signals list. Malformed rows
// raise ParseError naming the line, labels outside {0,1} raise
// ValidationError.
std::vector<MessageRecord> load_log(const std::string& path);

// Writes records in the same format (LF line endings, shortest round-trip
// number formatting, so load_log(write_log(x)) == x). Records with more than
// kMaxSignals signals are rejected.
void write_log(const std::string& path, const std::vector<MessageRecord>& records);

} // namespace tcna
