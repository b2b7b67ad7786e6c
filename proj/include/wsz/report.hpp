#pragma once

#include <string>

#include <json.hpp>

#include "wsz/search.hpp"

namespace wsz {

// Reports use insertion-ordered JSON so identical inputs render byte-identical
// documents. Volatile data (wall times, shard counts) lives in a separate
// timings section that is emitted only on request.
using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

Json to_json(const IndexValue& value);
Json to_json(const SearchRecord& record);
Json to_json(const ConjectureVerdict& verdict);
Json to_json(const PropositionReport& report);
Json to_json(const TableRow& row);

struct RunReport {
    std::string command;
    Json config = Json::object();
    Json results = Json::array();
    int exit_status = 0;
    bool include_timings = false;
    Json timings = Json::object();

    Json render() const;
    std::string render_text() const;  // pretty JSON plus trailing newline
};

std::string render_csv_table(const std::vector<TableRow>& rows);

}  // namespace wsz
