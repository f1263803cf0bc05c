#pragma once

#include <string>
#include <vector>

#include "cvent/analysis.hpp"

namespace cvent {

/// Serialized margin precision: 12 significant digits. Values are rounded
/// once, before encoding, so CSV and JSON carry bit-identical doubles.
double round12(double value);

/// Lowercase class tags used in the CSV/JSON "class" column.
const char* class_name(TripartiteKind kind);

/// Inverse of class_name; throws MalformedState on an unknown tag.
TripartiteKind class_from_name(const std::string& name);

inline constexpr const char* kCsvHeader =
    "n_bar,t_sq,s,margin_a1a2,margin_a1c0,margin_a2c0,bip_a1,bip_a2,bip_c0,class";

std::string to_csv(const std::vector<SweepRecord>& records);
std::string to_json(const std::vector<SweepRecord>& records);

/// One record as a standalone JSON object (the array element of to_json).
std::string record_to_json(const SweepRecord& record);

/// Parsers accept exactly what the emitters produce (plus arbitrary numeric
/// formatting); malformed input throws MalformedState.
std::vector<SweepRecord> records_from_csv(const std::string& text);
std::vector<SweepRecord> records_from_json(const std::string& text);

} // namespace cvent
