#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wsz/errors.hpp"

namespace wsz {

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are normalized (u < v) and sorted, neighbor lists are sorted, and the
// degree table is cached, so instances are safe to share between threads.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const VertexPair> edges() const { return edges_; }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return deg_[v]; }
    bool has_edge(int u, int v) const;

    friend Graph build_graph(int order, std::span<const VertexPair> edges);

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> deg_;
};

// Rejects loops, duplicate edges and out-of-range endpoints.
Graph build_graph(int order, std::span<const VertexPair> edges);
Graph build_graph(int order, std::initializer_list<VertexPair> edges);

struct DistanceRow {
    static constexpr int unreachable = -1;

    int source = 0;
    std::vector<int> dist;  // edge-count distances; `unreachable` where no path exists
};

// Counts for one edge uv: vertices strictly closer to u, strictly closer to v,
// and equidistant from both. Equidistant vertices belong to neither side.
struct EdgeSplit {
    int u = 0;
    int v = 0;
    int closer_u = 0;
    int closer_v = 0;
    int equidistant = 0;
};

struct Classification {
    bool connected = false;
    bool tree = false;
    std::optional<std::vector<int>> bipartition;  // color 0/1 per vertex when 2-colorable
};

DistanceRow bfs_distances(const Graph& g, int source);

// Split counts from two BFS runs. Requires a connected graph and an existing edge.
EdgeSplit edge_split_bfs(const Graph& g, VertexPair e);

// One-pass subtree-size splits for every edge of a tree, in edges() order.
// For a tree edge the two sides partition V, so equidistant is always 0.
std::vector<EdgeSplit> tree_edge_splits(const Graph& t);

Classification classify(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Stock constructions used all over search and tests.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_balanced_bipartite(int n);  // K_{floor(n/2), ceil(n/2)}

}  // namespace wsz
