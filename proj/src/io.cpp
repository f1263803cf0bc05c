#include "cvent/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "cvent/errors.hpp"

namespace cvent {

namespace {

constexpr std::array<TripartiteKind, 5> kAllKinds = {
    TripartiteKind::ProductOrBiseparable, TripartiteKind::OnePairOnly, TripartiteKind::TwoWay,
    TripartiteKind::GHZType, TripartiteKind::FullyInseparableWithPairs};

std::string render(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

double parse_number(const std::string& field) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || static_cast<std::size_t>(end - begin) != field.size()) {
        throw MalformedState("cannot parse \"" + field + "\" as a number");
    }
    return value;
}

nlohmann::json record_json(const SweepRecord& r) {
    return nlohmann::json{{"n_bar", round12(r.n_bar)},
                          {"t_sq", round12(r.t_sq)},
                          {"s", round12(r.s)},
                          {"margin_a1a2", round12(r.margin_a1a2)},
                          {"margin_a1c0", round12(r.margin_a1c0)},
                          {"margin_a2c0", round12(r.margin_a2c0)},
                          {"bip_a1", round12(r.bip_a1)},
                          {"bip_a2", round12(r.bip_a2)},
                          {"bip_c0", round12(r.bip_c0)},
                          {"class", class_name(r.kind)}};
}

SweepRecord record_from_json(const nlohmann::json& item) {
    SweepRecord r;
    try {
        r.n_bar = item.at("n_bar").get<double>();
        r.t_sq = item.at("t_sq").get<double>();
        r.s = item.at("s").get<double>();
        r.margin_a1a2 = item.at("margin_a1a2").get<double>();
        r.margin_a1c0 = item.at("margin_a1c0").get<double>();
        r.margin_a2c0 = item.at("margin_a2c0").get<double>();
        r.bip_a1 = item.at("bip_a1").get<double>();
        r.bip_a2 = item.at("bip_a2").get<double>();
        r.bip_c0 = item.at("bip_c0").get<double>();
        r.kind = class_from_name(item.at("class").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw MalformedState(std::string("record is missing or mistypes a field: ") + e.what());
    }
    return r;
}

} // namespace

double round12(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return std::strtod(buf, nullptr);
}

const char* class_name(TripartiteKind kind) {
    return to_string(kind);
}

TripartiteKind class_from_name(const std::string& name) {
    for (const TripartiteKind kind : kAllKinds) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw MalformedState("unknown class tag \"" + name + "\"");
}

std::string to_csv(const std::vector<SweepRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const SweepRecord& r : records) {
        for (const double value : {r.n_bar, r.t_sq, r.s, r.margin_a1a2, r.margin_a1c0,
                                   r.margin_a2c0, r.bip_a1, r.bip_a2, r.bip_c0}) {
            out += render(round12(value));
            out += ',';
        }
        out += class_name(r.kind);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRecord& r : records) {
        arr.push_back(record_json(r));
    }
    return arr.dump();
}

std::string record_to_json(const SweepRecord& record) {
    return record_json(record).dump();
}

std::vector<SweepRecord> records_from_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        if (end > start) {
            lines.push_back(text.substr(start, end - start));
        }
        start = end + 1;
    }
    if (lines.empty() || lines.front() != kCsvHeader) {
        throw MalformedState("missing or unexpected CSV header");
    }

    std::vector<SweepRecord> records;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = lines[k].find(',', pos);
            if (comma == std::string::npos) {
                fields.push_back(lines[k].substr(pos));
                break;
            }
            fields.push_back(lines[k].substr(pos, comma - pos));
            pos = comma + 1;
        }
        if (fields.size() != 10) {
            throw MalformedState("CSV row " + std::to_string(k) + " has " +
                                 std::to_string(fields.size()) + " fields, expected 10");
        }
        SweepRecord r;
        r.n_bar = parse_number(fields[0]);
        r.t_sq = parse_number(fields[1]);
        r.s = parse_number(fields[2]);
        r.margin_a1a2 = parse_number(fields[3]);
        r.margin_a1c0 = parse_number(fields[4]);
        r.margin_a2c0 = parse_number(fields[5]);
        r.bip_a1 = parse_number(fields[6]);
        r.bip_a2 = parse_number(fields[7]);
        r.bip_c0 = parse_number(fields[8]);
        r.kind = class_from_name(fields[9]);
        records.push_back(r);
    }
    return records;
}

std::vector<SweepRecord> records_from_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedState(std::string("invalid JSON: ") + e.what());
    }
    if (!parsed.is_array()) {
        throw MalformedState("expected a JSON array of records");
    }
    std::vector<SweepRecord> records;
    records.reserve(parsed.size());
    for (const auto& item : parsed) {
        records.push_back(record_from_json(item));
    }
    return records;
}

} // namespace cvent
