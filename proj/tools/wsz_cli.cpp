// wsz: weighted Szeged index toolkit.
//
// Subcommands: index (per-graph index tables), search (extremal trees),
// verify (structural facts and conjecture scans), table (minimal-tree table).
// Exit codes: 0 all checks pass, 2 a verified counterexample was found,
// 1 operational error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "wsz/report.hpp"

namespace fs = std::filesystem;
using namespace wsz;

namespace {

struct RangeSpec {
    int first = 0;
    int last = 0;
};

RangeSpec parse_range(const std::string& text) {
    RangeSpec range;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            range.first = range.last = std::stoi(text);
        } else {
            range.first = std::stoi(text.substr(0, dots));
            range.last = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        fail(Errc::bad_input, "bad range: " + text);
    }
    if (range.first > range.last) fail(Errc::bad_input, "empty range: " + text);
    return range;
}

IndexKind parse_objective(const std::string& name) {
    if (name == "wiener") return IndexKind::wiener;
    if (name == "szeged") return IndexKind::szeged;
    if (name == "wsz") return IndexKind::weighted_szeged;
    if (name == "abc") return IndexKind::abc;
    fail(Errc::bad_input, "unknown objective: " + name);
}

Direction parse_direction(const std::string& name) {
    if (name == "min") return Direction::minimize;
    if (name == "max") return Direction::maximize;
    fail(Errc::bad_input, "unknown direction: " + name);
}

std::int64_t wsz_by_bfs_splits(const Graph& g) {
    std::int64_t total = 0;
    for (auto e : g.edges()) {
        auto s = edge_split_bfs(g, e);
        std::int64_t weight = std::int64_t{g.degree(s.u)} + g.degree(s.v);
        total = checked_add(total, checked_mul(weight, checked_mul(s.closer_u, s.closer_v)));
    }
    return total;
}

void write_lines(const fs::path& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    if (!out) fail(Errc::bad_input, "cannot write " + path.string());
    for (const auto& line : lines) out << line << '\n';
}

void emit_text(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) fail(Errc::bad_input, "cannot write " + out_file);
        out << text;
    }
}

void emit(const RunReport& report, const std::string& out_file) {
    emit_text(report.render_text(), out_file);
}

// ---- index ----------------------------------------------------------------

Graph read_edge_list(std::istream& in, const std::string& name) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) fail(Errc::bad_input, name + ": missing 'n m' header");
    std::vector<VertexPair> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) fail(Errc::bad_input, name + ": truncated edge list");
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
}

struct IndexOptions {
    std::vector<std::string> inputs;
    bool edge_list = false;
    bool per_edge = false;
    bool skip_disconnected = false;
    std::string format = "json";
    std::string out_file;
    bool timings = false;
};

Json index_row(const Graph& g, bool per_edge) {
    Json row;
    row["graph6"] = write_graph6(g);
    row["n"] = g.order();
    row["m"] = g.edge_count();
    row["wiener"] = to_json(wiener(g));
    row["szeged"] = to_json(szeged(g));
    row["wsz"] = to_json(weighted_szeged(g));
    row["abc"] = to_json(abc(g));
    if (per_edge) {
        Json splits = Json::array();
        for (auto e : g.edges()) {
            auto s = edge_split_bfs(g, e);
            Json entry;
            entry["u"] = s.u;
            entry["v"] = s.v;
            entry["n_u"] = s.closer_u;
            entry["n_v"] = s.closer_v;
            entry["equidistant"] = s.equidistant;
            entry["weight"] = g.degree(s.u) + g.degree(s.v);
            splits.push_back(std::move(entry));
        }
        row["edges"] = std::move(splits);
    }
    return row;
}

std::string index_csv(const Json& rows) {
    std::ostringstream out;
    out << "graph6,n,m,wiener,szeged,wsz,abc\n";
    for (const auto& row : rows) {
        if (row.contains("skipped")) continue;
        out << row["graph6"].get<std::string>() << ',' << row["n"] << ',' << row["m"] << ','
            << row["wiener"] << ',' << row["szeged"] << ',' << row["wsz"] << ',' << row["abc"]
            << '\n';
    }
    return out.str();
}

int run_index(const IndexOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    Json rows = Json::array();
    auto handle_graph = [&](const Graph& g, const std::string& origin) {
        if (!is_connected(g)) {
            if (!opt.skip_disconnected)
                fail(Errc::disconnected, origin + ": disconnected graph (use --skip-disconnected)");
            Json row;
            row["graph6"] = write_graph6(g);
            row["skipped"] = "disconnected";
            rows.push_back(std::move(row));
            return;
        }
        rows.push_back(index_row(g, opt.per_edge));
    };

    for (const auto& input : opt.inputs) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (input != "-") {
            file.open(input);
            if (!file) fail(Errc::bad_input, "cannot open " + input);
            in = &file;
        }
        if (opt.edge_list) {
            handle_graph(read_edge_list(*in, input), input);
        } else {
            Graph6Reader reader(*in, StreamErrorPolicy::abort);
            while (auto g = reader.next())
                handle_graph(*g, input + ":" + std::to_string(reader.line_number()));
        }
    }

    RunReport report;
    report.command = "index";
    report.config["edge_list"] = opt.edge_list;
    report.config["per_edge"] = opt.per_edge;
    report.config["skip_disconnected"] = opt.skip_disconnected;
    report.results = std::move(rows);
    report.include_timings = opt.timings;
    report.timings["wall_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "csv") {
        emit_text(index_csv(report.results), opt.out_file);
    } else {
        emit(report, opt.out_file);
    }
    return 0;
}

// ---- search ----------------------------------------------------------------

struct SearchOptions {
    int n = 0;
    std::string objective = "wsz";
    std::string direction = "min";
    int shards = 1;
    bool deep = false;
    bool timings = false;
    bool dump_codes = false;
    std::string out_dir;
    std::string out_file;
};

int run_search(const SearchOptions& opt) {
    if (opt.n < 2) fail(Errc::bad_input, "search needs --n >= 2");
    if (opt.n > 16 && !opt.deep)
        fail(Errc::budget_exceeded,
             "order " + std::to_string(opt.n) + " exceeds the default budget; pass --deep");
    auto objective = parse_objective(opt.objective);
    auto direction = parse_direction(opt.direction);
    auto record = extremal_trees(opt.n, objective, direction, opt.shards);

    RunReport report;
    report.command = "search";
    report.config["n"] = opt.n;
    report.config["objective"] = opt.objective;
    report.config["direction"] = opt.direction;
    report.config["deep"] = opt.deep;
    report.results.push_back(to_json(record));
    report.include_timings = opt.timings;
    report.timings["wall_ms"] = record.wall_ms;
    report.timings["shards"] = opt.shards;

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        std::string stem = "search_n" + std::to_string(opt.n) + "_" + opt.objective + "_" +
                           opt.direction;
        std::vector<std::string> g6;
        for (const auto& code : record.tree_codes) g6.push_back(write_graph6(decode(code)));
        write_lines(fs::path(opt.out_dir) / (stem + ".g6"), g6);
        if (opt.dump_codes) {
            std::vector<std::string> codes;
            for (const auto& code : record.tree_codes) codes.push_back(to_string(code));
            write_lines(fs::path(opt.out_dir) / (stem + ".codes"), codes);
        }
    }
    emit(report, opt.out_file);
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string target;
    std::string range;
    int samples = 100;
    int shards = 1;
    std::string graph6_file;
    std::string out_dir;
    std::string out_file;
    bool timings = false;
};

struct VerifyState {
    Json rows = Json::array();
    std::vector<std::string> witnesses;
    bool all_pass = true;

    void add(Json row, bool pass, std::vector<std::string> bad = {}) {
        row["pass"] = pass;
        rows.push_back(std::move(row));
        if (!pass) {
            all_pass = false;
            witnesses.insert(witnesses.end(), bad.begin(), bad.end());
        }
    }
};

void verify_theorem1(const RangeSpec& range, int shards, VerifyState& state) {
    for (int n = range.first; n <= range.last; ++n) {
        auto record = extremal_trees(n, IndexKind::weighted_szeged, Direction::maximize, shards);
        TreeCode star;
        star.levels.assign(n, 1);
        star.levels[0] = 0;
        bool unique_star = record.tree_codes.size() == 1 && record.tree_codes[0] == star;
        bool value_ok = record.value.as_integer() == star_wsz_closed_form(n).as_integer();
        Json row;
        row["target"] = "theorem1";
        row["n"] = n;
        row["value"] = record.value.as_integer();
        row["expected"] = star_wsz_closed_form(n).as_integer();
        std::vector<std::string> bad;
        if (!(unique_star && value_ok))
            for (const auto& code : record.tree_codes) bad.push_back(write_graph6(decode(code)));
        state.add(std::move(row), unique_star && value_ok, std::move(bad));
    }
}

void verify_prop2(const RangeSpec& range, VerifyState& state) {
    for (int n = std::max(2, range.first); n <= range.last; ++n) {
        auto closed = balanced_bipartite_wsz_closed_form(n).as_integer();
        auto direct = weighted_szeged(make_balanced_bipartite(n)).as_integer();
        bool ok = closed == direct;
        Json row;
        row["target"] = "prop2";
        row["n"] = n;
        row["closed_form"] = closed;
        row["direct"] = direct;
        std::vector<std::string> bad;
        if (n <= 7) {
            // exhaustive over connected bipartite graphs: the bound holds and
            // only the balanced complete bipartite graph attains it
            auto target = canonical_form(make_balanced_bipartite(n));
            std::int64_t best = -1;
            int hits = 0;
            bool all_target = true;
            std::vector<std::string> attaining;
            for (const auto& g : enumerate_connected_graphs(n)) {
                if (!classify(g).bipartition) continue;
                auto value = weighted_szeged(g).as_integer();
                best = std::max(best, value);
                if (value == closed) {
                    ++hits;
                    if (!(canonical_form(g) == target)) all_target = false;
                    attaining.push_back(write_graph6(g));
                }
            }
            bool unique_max = hits == 1 && all_target && best == closed;
            row["exhaustive_max"] = best;
            row["exhaustive_unique"] = unique_max;
            if (!unique_max) bad = attaining;
            ok = ok && unique_max;
        }
        state.add(std::move(row), ok, std::move(bad));
    }
}

void verify_delta_exact(const std::string& target, const RangeSpec& range, int samples,
                        VerifyState& state) {
    int span = range.last - range.first + 1;
    for (int i = 0; i < samples; ++i) {
        int n = range.first + (i % span);
        std::uint64_t seed = 0x9E3779B97F4A7C15ULL * (i + 1);
        TransformOutcome outcome;
        std::int64_t expected = 0;
        if (target == "trans3") {
            RayDescriptor ray;
            Graph t = tree_with_4ray(n, seed, &ray);
            outcome = transform_truncate_4ray(t, ray);
            expected = 2 * std::int64_t{n} - 12;
        } else {
            int anchor = 0;
            Graph t = tree_with_two_3rays(n, seed, &anchor);
            outcome = transform_two_3rays(t, anchor);
            expected = 2;
        }
        auto recomputed = wsz_by_bfs_splits(outcome.input) - wsz_by_bfs_splits(outcome.output);
        bool ok = outcome.delta == expected && outcome.delta == recomputed;
        Json row;
        row["target"] = target;
        row["n"] = n;
        row["sample"] = i;
        row["delta"] = outcome.delta;
        row["expected"] = expected;
        std::vector<std::string> bad;
        if (!ok) bad.push_back(write_graph6(outcome.input));
        state.add(std::move(row), ok, std::move(bad));
    }
}

void verify_delta_positive(const std::string& target, const RangeSpec& range, int samples,
                           VerifyState& state) {
    for (int i = 0; i < samples; ++i) {
        std::uint64_t seed = 0xD1B54A32D192ED03ULL * (i + 1);
        TransformOutcome outcome;
        int n = 0, degree = 0;
        if (target == "trans1") {
            degree = 10 + (i % 4);
            int lo = std::max(range.first, degree + 3);
            if (lo > range.last) fail(Errc::bad_input, "trans1 needs orders of at least degree+3");
            n = lo + (i % (range.last - lo + 1));
            int anchor = 0;
            Graph t = tree_with_two_2rays_leaf(degree, n, seed, &anchor);
            outcome = transform_two_2rays_leaf(t, anchor);
        } else {
            degree = 6 + (i % 5);
            int lo = std::max(range.first, degree + 1);
            if (lo > range.last) fail(Errc::bad_input, "trans2 needs orders of at least degree+1");
            n = lo + (i % (range.last - lo + 1));
            int anchor = 0;
            Graph t = tree_with_two_leaves(degree, n, seed, &anchor);
            outcome = transform_two_leaves(t, anchor);
        }
        auto recomputed = wsz_by_bfs_splits(outcome.input) - wsz_by_bfs_splits(outcome.output);
        bool ok = outcome.delta > 0 && outcome.delta == recomputed;
        Json row;
        row["target"] = target;
        row["n"] = n;
        row["degree"] = degree;
        row["sample"] = i;
        row["delta"] = outcome.delta;
        std::vector<std::string> bad;
        if (!ok) bad.push_back(write_graph6(outcome.input));
        state.add(std::move(row), ok, std::move(bad));
    }
}

void verify_conjecture(const std::string& target, const RangeSpec& range,
                       const std::string& graph6_file, VerifyState& state) {
    bool want_max = (target == "maxG");
    auto push_verdict = [&state](const ConjectureVerdict& verdict) {
        state.add(to_json(verdict), verdict.holds, verdict.witnesses);
    };
    if (graph6_file.empty()) {
        int first = std::max(2, range.first);
        int last = std::min(7, range.last);
        if (first > last) fail(Errc::bad_input, "built-in conjecture scans cover orders 2..7 only");
        for (int n = first; n <= last; ++n)
            push_verdict(want_max ? verify_conjecture_max(n) : verify_conjecture_min(n));
        return;
    }
    std::ifstream file(graph6_file);
    if (!file) fail(Errc::bad_input, "cannot open " + graph6_file);
    Graph6Reader reader(file, StreamErrorPolicy::abort);
    std::map<int, std::vector<Graph>> by_order;
    std::size_t dropped_disconnected = 0;
    while (auto g = reader.next()) {
        if (!is_connected(*g)) {
            ++dropped_disconnected;
            continue;
        }
        int n = g->order();
        if (n < range.first || n > range.last) continue;
        by_order[n].push_back(std::move(*g));
    }
    if (by_order.empty()) fail(Errc::bad_input, "no connected graphs in range in " + graph6_file);
    for (auto& [n, graphs] : by_order) {
        std::size_t at = 0;
        GraphProducer producer = [&graphs, at]() mutable -> std::optional<Graph> {
            if (at == graphs.size()) return std::nullopt;
            return graphs[at++];
        };
        std::string scope = "external-stream (exhaustiveness not verified; " +
                            std::to_string(graphs.size()) + " graphs";
        if (dropped_disconnected)
            scope += ", " + std::to_string(dropped_disconnected) + " disconnected dropped";
        scope += ")";
        push_verdict(want_max ? verify_conjecture_max(std::move(producer), n, scope)
                              : verify_conjecture_min(std::move(producer), n, scope));
    }
}

int run_verify(const VerifyOptions& opt) {
    static const std::map<std::string, std::string> default_ranges = {
        {"theorem1", "4..10"}, {"prop2", "2..60"},  {"trans1", "13..40"}, {"trans2", "7..40"},
        {"trans3", "7..40"},   {"trans4", "8..40"}, {"minG", "3..7"},     {"maxG", "3..7"},
    };
    auto it = default_ranges.find(opt.target);
    if (it == default_ranges.end()) fail(Errc::bad_input, "unknown target: " + opt.target);
    RangeSpec range = parse_range(opt.range.empty() ? it->second : opt.range);

    VerifyState state;
    if (opt.target == "theorem1") {
        verify_theorem1(range, opt.shards, state);
    } else if (opt.target == "prop2") {
        verify_prop2(range, state);
    } else if (opt.target == "trans3" || opt.target == "trans4") {
        if (opt.target == "trans4" && range.first < 8)
            fail(Errc::bad_input, "trans4 needs a range within 8..");
        if (opt.target == "trans3" && range.first < 7)
            fail(Errc::bad_input, "trans3 needs a range within 7..");
        verify_delta_exact(opt.target, range, opt.samples, state);
    } else if (opt.target == "trans1" || opt.target == "trans2") {
        verify_delta_positive(opt.target, range, opt.samples, state);
    } else {
        verify_conjecture(opt.target, range, opt.graph6_file, state);
    }

    RunReport report;
    report.command = "verify";
    report.config["target"] = opt.target;
    report.config["range"] = opt.range.empty() ? it->second : opt.range;
    report.config["samples"] = opt.samples;
    if (!opt.graph6_file.empty()) report.config["graph6"] = opt.graph6_file;
    report.results = std::move(state.rows);
    report.exit_status = state.all_pass ? 0 : 2;
    report.include_timings = opt.timings;

    if (!state.all_pass && !opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        write_lines(fs::path(opt.out_dir) / ("witness_" + opt.target + ".g6"), state.witnesses);
    }
    emit(report, opt.out_file);
    return report.exit_status;
}

// ---- table -----------------------------------------------------------------

struct TableOptions {
    std::string range = "7..16";
    int shards = 1;
    bool deep = false;
    double time_cap = 0.0;
    std::string format = "json";
    std::string out_dir;
    std::string out_file;
    bool timings = false;
};

int run_table(const TableOptions& opt) {
    RangeSpec range = parse_range(opt.range);
    TableBudget budget;
    budget.shards = opt.shards;
    budget.deep = opt.deep;
    budget.time_cap_seconds = opt.time_cap;
    auto result = regenerate_table(range.first, range.last, budget);

    RunReport report;
    report.command = "table";
    report.config["range"] = opt.range;
    report.config["deep"] = opt.deep;
    report.config["format"] = opt.format;
    for (const auto& row : result.rows) report.results.push_back(to_json(row));
    report.include_timings = opt.timings;
    if (!result.complete) {
        report.config["complete"] = false;
        report.config["stopped_before"] = result.stopped_before;
    }

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        for (const auto& row : result.rows)
            write_lines(fs::path(opt.out_dir) / ("minimal_n" + std::to_string(row.n) + ".g6"),
                        row.graph6);
    }
    if (opt.format == "csv") {
        emit_text(render_csv_table(result.rows), opt.out_file);
    } else if (opt.format == "graph6") {
        std::string lines;
        for (const auto& row : result.rows)
            for (const auto& line : row.graph6) lines += line + "\n";
        emit_text(lines, opt.out_file);
    } else {
        emit(report, opt.out_file);
    }
    if (!result.complete) {
        std::cerr << "table incomplete: stopped before n=" << result.stopped_before
                  << " (budget exhausted)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Szeged index toolkit"};
    app.require_subcommand(1);

    IndexOptions index_opt;
    auto* cmd_index = app.add_subcommand("index", "compute W, Sz, wSz and ABC for given graphs");
    cmd_index->add_option("inputs", index_opt.inputs, "graph6 files ('-' for stdin)")->required();
    cmd_index->add_flag("--edge-list", index_opt.edge_list, "inputs are 'n m' edge-list files");
    cmd_index->add_flag("--edges", index_opt.per_edge, "per-edge split breakdown");
    cmd_index->add_flag("--skip-disconnected", index_opt.skip_disconnected,
                        "skip disconnected graphs instead of failing");
    cmd_index->add_option("--format", index_opt.format, "json|csv")->default_val("json");
    cmd_index->add_option("--out", index_opt.out_file, "write the report to a file");
    cmd_index->add_flag("--timings", index_opt.timings, "include wall times in the report");

    SearchOptions search_opt;
    auto* cmd_search = app.add_subcommand("search", "exhaustive extremal search over free trees");
    cmd_search->add_option("--n", search_opt.n, "tree order")->required();
    cmd_search->add_option("--objective", search_opt.objective, "wiener|szeged|wsz|abc")
        ->default_val("wsz");
    cmd_search->add_option("--direction", search_opt.direction, "min|max")->default_val("min");
    cmd_search->add_option("--shards", search_opt.shards, "parallel shards")
        ->envname("WSZ_SHARDS")
        ->default_val(1);
    cmd_search->add_flag("--deep", search_opt.deep, "allow orders above 16")->envname("WSZ_DEEP");
    cmd_search->add_option("--out", search_opt.out_dir, "directory for graph6 dumps");
    cmd_search->add_option("--report", search_opt.out_file, "write the report to a file");
    cmd_search->add_flag("--dump-codes", search_opt.dump_codes,
                         "also dump level sequences, one per line");
    cmd_search->add_flag("--timings", search_opt.timings, "include wall times in the report");

    VerifyOptions verify_opt;
    auto* cmd_verify = app.add_subcommand("verify", "machine-check structural facts");
    cmd_verify
        ->add_option("--target", verify_opt.target,
                     "theorem1|prop2|trans1|trans2|trans3|trans4|minG|maxG")
        ->required();
    cmd_verify->add_option("--n-range", verify_opt.range, "order range A..B");
    cmd_verify->add_option("--samples", verify_opt.samples, "randomized sample count")
        ->default_val(100);
    cmd_verify->add_option("--shards", verify_opt.shards, "parallel shards")
        ->envname("WSZ_SHARDS")
        ->default_val(1);
    cmd_verify->add_option("--graph6", verify_opt.graph6_file,
                           "external graph6 stream for conjecture targets");
    cmd_verify->add_option("--out", verify_opt.out_dir, "directory for counterexample dumps");
    cmd_verify->add_option("--report", verify_opt.out_file, "write the report to a file");
    cmd_verify->add_flag("--timings", verify_opt.timings, "include wall times in the report");

    TableOptions table_opt;
    auto* cmd_table = app.add_subcommand("table", "regenerate the minimal-tree table");
    cmd_table->add_option("--n-range", table_opt.range, "order range within 7..25")
        ->default_val("7..16");
    cmd_table->add_option("--shards", table_opt.shards, "parallel shards")
        ->envname("WSZ_SHARDS")
        ->default_val(1);
    cmd_table->add_flag("--deep", table_opt.deep, "allow orders above 16")->envname("WSZ_DEEP");
    cmd_table->add_option("--time-cap", table_opt.time_cap, "seconds before giving up (0 = none)");
    cmd_table->add_option("--format", table_opt.format, "json|csv|graph6")->default_val("json");
    cmd_table->add_option("--out", table_opt.out_dir, "directory for per-order graph6 dumps");
    cmd_table->add_option("--report", table_opt.out_file, "write the report to a file");
    cmd_table->add_flag("--timings", table_opt.timings, "include wall times in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_index->parsed()) return run_index(index_opt);
        if (cmd_search->parsed()) return run_search(search_opt);
        if (cmd_verify->parsed()) return run_verify(verify_opt);
        if (cmd_table->parsed()) return run_table(table_opt);
    } catch (const Error& err) {
        std::cerr << "error (" << errc_name(err.code()) << "): " << err.what() << '\n';
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
