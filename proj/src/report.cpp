#include "wsz/report.hpp"

#include <sstream>

namespace wsz {

Json to_json(const IndexValue& value) {
    if (value.integral()) return value.as_integer();
    return value.as_real();
}

Json to_json(const SearchRecord& record) {
    Json out;
    out["n"] = record.n;
    out["objective"] = index_kind_name(record.objective);
    out["direction"] = direction_name(record.direction);
    out["value"] = to_json(record.value);
    Json attaining = Json::array();
    for (const auto& code : record.tree_codes) {
        Json entry;
        entry["code"] = to_string(code);
        entry["graph6"] = write_graph6(decode(code));
        attaining.push_back(std::move(entry));
    }
    for (const auto& rep : record.graph_reps) {
        Json entry;
        entry["graph6"] = rep;
        attaining.push_back(std::move(entry));
    }
    out["attaining"] = std::move(attaining);
    out["examined"] = record.examined;
    return out;
}

Json to_json(const ConjectureVerdict& verdict) {
    Json out;
    out["conjecture"] = conjecture_name(verdict.id);
    out["n"] = verdict.n;
    out["holds"] = verdict.holds;
    out["strict"] = verdict.strict_holds;
    out["scope"] = verdict.scope;
    out["witnesses"] = verdict.witnesses;
    out["ties"] = verdict.ties;
    out["record"] = to_json(verdict.record);
    return out;
}

Json to_json(const PropositionReport& report) {
    Json out;
    out["two_leaves"] = report.two_leaves;
    out["two_2rays_leaf"] = report.two_2rays_leaf;
    out["four_ray"] = report.four_ray;
    out["two_3rays"] = report.two_3rays;
    out["clean"] = report.clean();
    return out;
}

Json to_json(const TableRow& row) {
    Json out;
    out["n"] = row.n;
    out["wsz_min"] = to_json(row.record.value);
    Json minimizers = Json::array();
    for (std::size_t i = 0; i < row.record.tree_codes.size(); ++i) {
        Json entry;
        entry["code"] = to_string(row.record.tree_codes[i]);
        entry["graph6"] = row.graph6[i];
        entry["degree_sequence"] = row.degree_sequences[i];
        Json edges = Json::array();
        for (auto [u, v] : row.edge_lists[i]) edges.push_back(Json::array({u, v}));
        entry["edges"] = std::move(edges);
        minimizers.push_back(std::move(entry));
    }
    out["minimizers"] = std::move(minimizers);
    out["propositions_clean"] = row.propositions_clean;
    out["abc_coincident"] = row.abc_coincident;
    out["examined"] = row.record.examined;
    return out;
}

Json RunReport::render() const {
    Json out;
    out["schema_version"] = report_schema_version;
    out["command"] = command;
    out["config"] = config;
    out["results"] = results;
    out["exit_status"] = exit_status;
    if (include_timings) out["timings"] = timings;
    return out;
}

std::string RunReport::render_text() const { return render().dump(2) + "\n"; }

std::string render_csv_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "n,wsz_min,minimizer_count,examined,abc_coincident,propositions_clean,graph6\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.record.value.as_integer() << ',' << row.record.tree_codes.size()
            << ',' << row.record.examined << ',' << (row.abc_coincident ? 1 : 0) << ','
            << (row.propositions_clean ? 1 : 0) << ',';
        for (std::size_t i = 0; i < row.graph6.size(); ++i) {
            if (i) out << ';';
            out << row.graph6[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace wsz
