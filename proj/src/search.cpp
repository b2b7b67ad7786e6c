#include "wsz/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace wsz {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Per-tree index evaluation straight from the level sequence: parents from the
// preorder depth chain, subtree sizes by a reverse sweep, O(n) per tree.
struct TreeEval {
    std::vector<int> parent, size, deg, last_at;

    void prepare(const std::vector<int>& levels) {
        const int n = static_cast<int>(levels.size());
        parent.assign(n, -1);
        size.assign(n, 1);
        deg.assign(n, 0);
        last_at.assign(n + 1, 0);
        last_at[0] = 0;
        for (int i = 1; i < n; ++i) {
            parent[i] = last_at[levels[i] - 1];
            last_at[levels[i]] = i;
            ++deg[i];
            ++deg[parent[i]];
        }
        for (int i = n - 1; i >= 1; --i) size[parent[i]] += size[i];
    }

    std::int64_t wiener_szeged(const std::vector<int>& levels) {
        prepare(levels);
        const int n = static_cast<int>(levels.size());
        std::int64_t total = 0;
        for (int i = 1; i < n; ++i)
            total = checked_add(total, checked_mul(size[i], n - size[i]));
        return total;
    }

    std::int64_t wsz(const std::vector<int>& levels) {
        prepare(levels);
        const int n = static_cast<int>(levels.size());
        std::int64_t total = 0;
        for (int i = 1; i < n; ++i) {
            std::int64_t weight = std::int64_t{deg[i]} + deg[parent[i]];
            total = checked_add(total, checked_mul(weight, checked_mul(size[i], n - size[i])));
        }
        return total;
    }

    double abc(const std::vector<int>& levels) {
        prepare(levels);
        const int n = static_cast<int>(levels.size());
        double total = 0.0;
        for (int i = 1; i < n; ++i) {
            double du = deg[i], dv = deg[parent[i]];
            total += std::sqrt((du + dv - 2.0) / (du * dv));
        }
        return total;
    }
};

struct IntPool {
    bool started = false;
    std::int64_t best = 0;
    std::vector<TreeCode> codes;

    void offer(std::int64_t v, const TreeCode& code, Direction dir) {
        bool better = !started || (dir == Direction::minimize ? v < best : v > best);
        if (better) {
            started = true;
            best = v;
            codes.clear();
        }
        if (v == best) codes.push_back(code);
    }

    void absorb(const IntPool& other, Direction dir) {
        if (!other.started) return;
        bool better = !started || (dir == Direction::minimize ? other.best < best : other.best > best);
        if (better) {
            started = true;
            best = other.best;
            codes.clear();
        }
        if (other.best == best)
            codes.insert(codes.end(), other.codes.begin(), other.codes.end());
    }
};

struct RealPool {
    bool started = false;
    double best = 0.0;
    std::vector<std::pair<double, TreeCode>> pool;  // candidates within tolerance of best

    void offer(double v, const TreeCode& code, Direction dir) {
        bool better = !started || (dir == Direction::minimize ? v < best : v > best);
        if (better) {
            started = true;
            best = v;
            prune(dir);
        }
        if (within(v)) pool.emplace_back(v, code);
    }

    bool within(double v) const { return std::abs(v - best) < abc_tie_tolerance; }

    void prune(Direction) {
        std::erase_if(pool, [this](const auto& entry) { return !within(entry.first); });
    }

    void absorb(const RealPool& other, Direction dir) {
        if (!other.started) return;
        bool better = !started || (dir == Direction::minimize ? other.best < best : other.best > best);
        if (better) {
            started = true;
            best = other.best;
            prune(dir);
        }
        for (const auto& entry : other.pool)
            if (within(entry.first)) pool.push_back(entry);
    }
};

struct ShardResult {
    IntPool ints;
    RealPool reals;
    std::uint64_t examined = 0;
};

ShardResult scan_tree_range(TreeEnumerator enumerator, IndexKind objective, Direction dir) {
    ShardResult result;
    TreeEval eval;
    TreeCode code;
    while (enumerator.next(code)) {
        ++result.examined;
        switch (objective) {
            case IndexKind::wiener:
            case IndexKind::szeged:
                result.ints.offer(eval.wiener_szeged(code.levels), code, dir);
                break;
            case IndexKind::weighted_szeged:
                result.ints.offer(eval.wsz(code.levels), code, dir);
                break;
            case IndexKind::abc:
                result.reals.offer(eval.abc(code.levels), code, dir);
                break;
        }
    }
    return result;
}

}  // namespace

const char* direction_name(Direction dir) {
    return dir == Direction::minimize ? "min" : "max";
}

const char* conjecture_name(ConjectureId id) {
    return id == ConjectureId::min_graph ? "minG" : "maxG";
}

SearchRecord extremal_trees(int n, IndexKind objective, Direction direction, int shards) {
    if (n < 1) fail(Errc::bad_input, "tree search needs n >= 1");
    if (shards < 1) fail(Errc::bad_input, "shard count must be at least 1");
    auto start = Clock::now();

    std::vector<TreeEnumerator> streams = partition_stream(n, shards);
    std::vector<ShardResult> results(streams.size());
    if (streams.size() == 1) {
        results[0] = scan_tree_range(std::move(streams[0]), objective, direction);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(streams.size());
        for (std::size_t s = 0; s < streams.size(); ++s)
            workers.emplace_back([&results, &streams, s, objective, direction] {
                results[s] = scan_tree_range(std::move(streams[s]), objective, direction);
            });
    }

    SearchRecord record;
    record.n = n;
    record.objective = objective;
    record.direction = direction;

    if (index_kind_integral(objective)) {
        IntPool merged;
        for (auto& r : results) {
            merged.absorb(r.ints, direction);
            record.examined += r.examined;
        }
        record.value = IndexValue::of_integer(objective, merged.best);
        record.tree_codes = std::move(merged.codes);
    } else {
        RealPool merged;
        for (auto& r : results) {
            merged.absorb(r.reals, direction);
            record.examined += r.examined;
        }
        merged.prune(direction);
        // settle ties on the canonical sorted-edge evaluation
        double settled = 0.0;
        bool have = false;
        std::vector<std::pair<double, TreeCode>> rescored;
        for (auto& [v, code] : merged.pool) {
            double exact = abc(decode(code)).as_real();
            rescored.emplace_back(exact, code);
            bool better = !have || (direction == Direction::minimize ? exact < settled : exact > settled);
            if (better) {
                settled = exact;
                have = true;
            }
        }
        for (auto& [v, code] : rescored)
            if (std::abs(v - settled) < abc_tie_tolerance) record.tree_codes.push_back(code);
        record.value = IndexValue::of_real(objective, settled);
    }
    std::sort(record.tree_codes.begin(), record.tree_codes.end());
    record.tree_codes.erase(std::unique(record.tree_codes.begin(), record.tree_codes.end()),
                            record.tree_codes.end());
    record.wall_ms = elapsed_ms(start);
    return record;
}

namespace {

IndexValue evaluate_objective(const Graph& g, IndexKind objective) {
    switch (objective) {
        case IndexKind::wiener: return wiener(g);
        case IndexKind::szeged: return szeged(g);
        case IndexKind::weighted_szeged: return weighted_szeged(g);
        case IndexKind::abc: return abc(g);
    }
    fail(Errc::bad_input, "unknown objective");
}

}  // namespace

SearchRecord extremal_graphs(GraphProducer producer, IndexKind objective, Direction direction) {
    auto start = Clock::now();
    SearchRecord record;
    record.objective = objective;
    record.direction = direction;

    bool started = false;
    std::int64_t best_int = 0;
    double best_real = 0.0;
    std::vector<Graph> attaining;

    while (auto g = producer()) {
        ++record.examined;
        record.n = g->order();
        auto value = evaluate_objective(*g, objective);
        if (index_kind_integral(objective)) {
            std::int64_t v = value.as_integer();
            bool better =
                !started || (direction == Direction::minimize ? v < best_int : v > best_int);
            if (better) {
                started = true;
                best_int = v;
                attaining.clear();
            }
            if (v == best_int) attaining.push_back(std::move(*g));
        } else {
            double v = value.as_real();
            bool better =
                !started || (direction == Direction::minimize ? v < best_real : v > best_real);
            if (better) {
                started = true;
                best_real = v;
                std::erase_if(attaining, [&](const Graph& h) {
                    return std::abs(evaluate_objective(h, objective).as_real() - best_real) >=
                           abc_tie_tolerance;
                });
            }
            if (std::abs(v - best_real) < abc_tie_tolerance) attaining.push_back(std::move(*g));
        }
    }
    if (!started) fail(Errc::bad_input, "graph search over an empty source");

    record.value = index_kind_integral(objective)
                       ? IndexValue::of_integer(objective, best_int)
                       : IndexValue::of_real(objective, best_real);

    if (record.n <= 10) {
        for (const auto& g : attaining) record.graph_labels.push_back(canonical_form(g));
        std::sort(record.graph_labels.begin(), record.graph_labels.end());
        record.graph_labels.erase(
            std::unique(record.graph_labels.begin(), record.graph_labels.end()),
            record.graph_labels.end());
        for (const auto& label : record.graph_labels)
            record.graph_reps.push_back(write_graph6(canonical_graph(label)));
    } else {
        for (const auto& g : attaining) record.graph_reps.push_back(write_graph6(g));
        std::sort(record.graph_reps.begin(), record.graph_reps.end());
        record.graph_reps.erase(std::unique(record.graph_reps.begin(), record.graph_reps.end()),
                                record.graph_reps.end());
    }
    record.wall_ms = elapsed_ms(start);
    return record;
}

SearchRecord extremal_graphs_builtin(int n, IndexKind objective, Direction direction) {
    auto graphs = enumerate_connected_graphs(n);
    std::size_t at = 0;
    auto producer = [graphs = std::move(graphs), at]() mutable -> std::optional<Graph> {
        if (at == graphs.size()) return std::nullopt;
        return graphs[at++];
    };
    auto record = extremal_graphs(std::move(producer), objective, direction);
    record.n = n;
    return record;
}

namespace {

ConjectureVerdict min_verdict_from(SearchRecord record, int n, std::string scope) {
    ConjectureVerdict verdict;
    verdict.id = ConjectureId::min_graph;
    verdict.n = n;
    verdict.scope = std::move(scope);
    bool tree_attains = false;
    std::vector<std::string> non_trees;
    for (const auto& rep : record.graph_reps) {
        if (is_tree(parse_graph6(rep)))
            tree_attains = true;
        else
            non_trees.push_back(rep);
    }
    verdict.holds = tree_attains;
    verdict.strict_holds = tree_attains && non_trees.empty();
    if (verdict.holds)
        verdict.ties = std::move(non_trees);
    else
        verdict.witnesses = std::move(non_trees);
    verdict.record = std::move(record);
    return verdict;
}

ConjectureVerdict max_verdict_from(SearchRecord record, int n, std::string scope) {
    ConjectureVerdict verdict;
    verdict.id = ConjectureId::max_graph;
    verdict.n = n;
    verdict.scope = std::move(scope);
    std::string target = write_graph6(canonical_graph(canonical_form(make_balanced_bipartite(n))));
    bool target_attains = false;
    std::vector<std::string> others;
    for (const auto& rep : record.graph_reps) {
        std::string canon =
            (n <= 10) ? rep : write_graph6(canonical_graph(canonical_form(parse_graph6(rep))));
        if (canon == target)
            target_attains = true;
        else
            others.push_back(rep);
    }
    verdict.holds = target_attains;
    verdict.strict_holds = target_attains && others.empty();
    if (verdict.holds)
        verdict.ties = std::move(others);
    else
        verdict.witnesses = std::move(others);
    verdict.record = std::move(record);
    return verdict;
}

}  // namespace

ConjectureVerdict verify_conjecture_min(int n) {
    return min_verdict_from(extremal_graphs_builtin(n, IndexKind::weighted_szeged, Direction::minimize),
                            n, "builtin-exhaustive");
}

ConjectureVerdict verify_conjecture_min(GraphProducer producer, int n, std::string scope) {
    return min_verdict_from(
        extremal_graphs(std::move(producer), IndexKind::weighted_szeged, Direction::minimize), n,
        std::move(scope));
}

ConjectureVerdict verify_conjecture_max(int n) {
    return max_verdict_from(extremal_graphs_builtin(n, IndexKind::weighted_szeged, Direction::maximize),
                            n, "builtin-exhaustive");
}

ConjectureVerdict verify_conjecture_max(GraphProducer producer, int n, std::string scope) {
    return max_verdict_from(
        extremal_graphs(std::move(producer), IndexKind::weighted_szeged, Direction::maximize), n,
        std::move(scope));
}

CoincidenceReport coincidence_report(int n, int shards) {
    if (n < 4) fail(Errc::bad_input, "coincidence report needs n >= 4");
    CoincidenceReport report;
    report.n = n;
    report.wsz_min = extremal_trees(n, IndexKind::weighted_szeged, Direction::minimize, shards);
    report.abc_min = extremal_trees(n, IndexKind::abc, Direction::minimize, shards);
    std::set_intersection(report.wsz_min.tree_codes.begin(), report.wsz_min.tree_codes.end(),
                          report.abc_min.tree_codes.begin(), report.abc_min.tree_codes.end(),
                          std::back_inserter(report.intersection));
    return report;
}

TableResult regenerate_table(int first, int last, const TableBudget& budget) {
    if (first < 7 || last > 25 || first > last)
        fail(Errc::bad_input, "table range must lie within 7..25");
    if (last > 16 && !budget.deep)
        fail(Errc::budget_exceeded, "orders above 16 need the deep budget flag");
    auto start = Clock::now();

    TableResult result;
    for (int n = first; n <= last; ++n) {
        if (budget.time_cap_seconds > 0 && elapsed_ms(start) > budget.time_cap_seconds * 1000.0) {
            result.complete = false;
            result.stopped_before = n;
            return result;
        }
        auto coin = coincidence_report(n, budget.shards);
        TableRow row;
        row.n = n;
        row.record = coin.wsz_min;
        row.abc_coincident = !coin.intersection.empty();
        row.propositions_clean = true;
        for (const auto& code : row.record.tree_codes) {
            Graph tree = decode(code);
            if (!check_all_propositions(tree).clean()) row.propositions_clean = false;
            row.graph6.push_back(write_graph6(tree));
            std::vector<int> degrees;
            for (int v = 0; v < tree.order(); ++v) degrees.push_back(tree.degree(v));
            std::sort(degrees.rbegin(), degrees.rend());
            row.degree_sequences.push_back(std::move(degrees));
            row.edge_lists.emplace_back(tree.edges().begin(), tree.edges().end());
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace wsz
