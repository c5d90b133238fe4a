#pragma once

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "apexhom/bignat.hpp"
#include "apexhom/rational.hpp"
#include "apexhom/version.hpp"

namespace apexhom {

// Exact values are serialized as decimal strings, never as JSON numbers;
// floating-point companions are labeled "approx".
inline nlohmann::json bignat_json(const BigNat& value) { return value.to_string(); }

inline nlohmann::json rational_json(const ExactRational& value) {
    const ExactRational reduced = value.reduced();
    return nlohmann::json{{"num", reduced.num().to_string()},
                          {"den", reduced.den().to_string()},
                          {"approx", value.approx()}};
}

// Report container: toolkit version, config echo, one record per instance.
// Records are sorted by their "instance" field so the output is
// independent of production order. nlohmann::json keeps object keys
// sorted, which makes serialization deterministic.
class ReportEnvelope {
public:
    explicit ReportEnvelope(nlohmann::json config) : config_(std::move(config)) {}

    void add_record(nlohmann::json record) { records_.push_back(std::move(record)); }

    std::size_t record_count() const { return records_.size(); }
    const std::vector<nlohmann::json>& records() const { return records_; }

    nlohmann::json to_json(bool with_timestamp) const {
        nlohmann::json out;
        out["version"] = toolkit_version;
        out["config"] = config_;
        if (with_timestamp)
            out["timestamp"] = utc_timestamp();
        auto sorted = records_;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const nlohmann::json& a, const nlohmann::json& b) {
                             return a.value("instance", std::string{}) <
                                    b.value("instance", std::string{});
                         });
        out["records"] = sorted;
        return out;
    }

    // flat projection: one row per record; columns are the sorted union of
    // scalar keys; nested values are omitted
    std::string to_csv() const {
        auto sorted = records_;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const nlohmann::json& a, const nlohmann::json& b) {
                             return a.value("instance", std::string{}) <
                                    b.value("instance", std::string{});
                         });
        std::set<std::string> columns;
        for (const auto& record : sorted)
            for (auto it = record.begin(); it != record.end(); ++it)
                if (it->is_primitive())
                    columns.insert(it.key());

        std::string out;
        bool first = true;
        for (const auto& column : columns) {
            if (!first)
                out += ",";
            out += csv_escape(column);
            first = false;
        }
        out += "\n";
        for (const auto& record : sorted) {
            first = true;
            for (const auto& column : columns) {
                if (!first)
                    out += ",";
                first = false;
                const auto it = record.find(column);
                if (it == record.end() || !it->is_primitive())
                    continue;
                if (it->is_string())
                    out += csv_escape(it->get<std::string>());
                else
                    out += csv_escape(it->dump());
            }
            out += "\n";
        }
        return out;
    }

private:
    static std::string csv_escape(const std::string& field) {
        if (field.find_first_of(",\"\n") == std::string::npos)
            return field;
        std::string out = "\"";
        for (char c : field) {
            if (c == '"')
                out += '"';
            out += c;
        }
        out += "\"";
        return out;
    }

    static std::string utc_timestamp() {
        const std::time_t now = std::time(nullptr);
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        char buffer[80];
        std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                      tm_utc.tm_year + 1900, tm_utc.tm_mon + 1, tm_utc.tm_mday, tm_utc.tm_hour,
                      tm_utc.tm_min, tm_utc.tm_sec);
        return buffer;
    }

    nlohmann::json config_;
    std::vector<nlohmann::json> records_;
};

} // namespace apexhom
