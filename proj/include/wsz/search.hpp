#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wsz/gen6.hpp"
#include "wsz/invariants.hpp"
#include "wsz/transforms.hpp"
#include "wsz/treegen.hpp"

namespace wsz {

enum class Direction { minimize, maximize };

const char* direction_name(Direction dir);

// Exact extremum plus the full attaining set. Tree searches fill tree_codes;
// graph searches fill graph_reps (graph6) and, for orders up to 10, the
// canonical labels. Sets are sorted by canonical code so the record content
// is independent of shard count.
struct SearchRecord {
    int n = 0;
    IndexKind objective = IndexKind::weighted_szeged;
    Direction direction = Direction::minimize;
    IndexValue value;
    std::vector<TreeCode> tree_codes;
    std::vector<CanonicalLabel> graph_labels;
    std::vector<std::string> graph_reps;
    std::uint64_t examined = 0;
    double wall_ms = 0.0;
};

// Exhaustive scan over all free trees on n vertices. Workers consume
// contiguous shards of the enumeration; the merged result is deterministic.
SearchRecord extremal_trees(int n, IndexKind objective, Direction direction, int shards = 1);

using GraphProducer = std::function<std::optional<Graph>()>;

SearchRecord extremal_graphs(GraphProducer producer, IndexKind objective, Direction direction);
SearchRecord extremal_graphs_builtin(int n, IndexKind objective, Direction direction);

enum class ConjectureId { max_graph, min_graph };

const char* conjecture_name(ConjectureId id);

// `holds` tracks the claims as conjectured: the minimum is attained by a
// tree, the maximum is attained by the balanced complete bipartite graph.
// Ties with other graphs do not refute them; such co-attainers are listed in
// `ties` and drop `strict_holds` instead (at order 3 the triangle ties the
// path at both extremes). `witnesses` is populated exactly when holds fails.
struct ConjectureVerdict {
    ConjectureId id = ConjectureId::min_graph;
    int n = 0;
    bool holds = false;
    bool strict_holds = false;           // additionally, no non-conforming ties
    std::string scope;                   // "builtin-exhaustive" or "external-stream"
    SearchRecord record;
    std::vector<std::string> witnesses;  // graph6 of refuting graphs, empty when holds
    std::vector<std::string> ties;       // graph6 of non-conforming co-attainers
};

// Is the weighted-Szeged minimum attained by a tree?
ConjectureVerdict verify_conjecture_min(int n);
ConjectureVerdict verify_conjecture_min(GraphProducer producer, int n, std::string scope);
// Is the weighted-Szeged maximum attained by the balanced complete bipartite
// graph?
ConjectureVerdict verify_conjecture_max(int n);
ConjectureVerdict verify_conjecture_max(GraphProducer producer, int n, std::string scope);

struct CoincidenceReport {
    int n = 0;
    SearchRecord wsz_min;
    SearchRecord abc_min;
    std::vector<TreeCode> intersection;
};

CoincidenceReport coincidence_report(int n, int shards = 1);

struct TableRow {
    int n = 0;
    SearchRecord record;  // weighted Szeged minimum
    std::vector<std::string> graph6;
    std::vector<std::vector<int>> degree_sequences;
    std::vector<std::vector<VertexPair>> edge_lists;
    bool propositions_clean = false;
    bool abc_coincident = false;
};

struct TableBudget {
    int shards = 1;
    bool deep = false;                // required for orders above 16
    double time_cap_seconds = 0.0;    // 0 disables the cap
};

struct TableResult {
    std::vector<TableRow> rows;
    bool complete = true;
    int stopped_before = 0;  // first order not produced when incomplete
};

// Minimal trees for each order in [first, last] (within 7..25), with degree
// sequences, structural-check status and ABC coincidence flags.
TableResult regenerate_table(int first, int last, const TableBudget& budget);

}  // namespace wsz
