#include "wsz/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace wsz {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), VertexPair{u, v});
}

Graph build_graph(int order, std::span<const VertexPair> edges) {
    if (order < 0) fail(Errc::bad_input, "graph order must be non-negative");
    Graph g;
    g.n_ = order;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            fail(Errc::vertex_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order " +
                     std::to_string(order));
        if (u == v) fail(Errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        fail(Errc::duplicate_edge, "duplicate edge (" + std::to_string(dup->first) + "," +
                                       std::to_string(dup->second) + ")");
    g.adj_.assign(order, {});
    g.deg_.assign(order, 0);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    for (int v = 0; v < order; ++v) g.deg_[v] = static_cast<int>(g.adj_[v].size());
    return g;
}

Graph build_graph(int order, std::initializer_list<VertexPair> edges) {
    return build_graph(order, std::span<const VertexPair>(edges.begin(), edges.size()));
}

DistanceRow bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n) fail(Errc::vertex_out_of_range, "bfs source out of range");
    DistanceRow row;
    row.source = source;
    row.dist.assign(n, DistanceRow::unreachable);
    row.dist[source] = 0;
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (row.dist[w] == DistanceRow::unreachable) {
                row.dist[w] = row.dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return row;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    auto row = bfs_distances(g, 0);
    return std::find(row.dist.begin(), row.dist.end(), DistanceRow::unreachable) == row.dist.end();
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.order() - 1 && is_connected(g);
}

EdgeSplit edge_split_bfs(const Graph& g, VertexPair e) {
    auto [u, v] = e;
    if (!g.has_edge(u, v)) fail(Errc::edge_not_present, "edge not present in graph");
    if (!is_connected(g)) fail(Errc::disconnected, "edge splits require a connected graph");
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    EdgeSplit split;
    split.u = u;
    split.v = v;
    for (int x = 0; x < g.order(); ++x) {
        if (du.dist[x] < dv.dist[x])
            ++split.closer_u;
        else if (dv.dist[x] < du.dist[x])
            ++split.closer_v;
        else
            ++split.equidistant;
    }
    return split;
}

std::vector<EdgeSplit> tree_edge_splits(const Graph& t) {
    const int n = t.order();
    if (!is_tree(t)) fail(Errc::not_a_tree, "tree_edge_splits requires a tree");
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    if (n > 0) {
        order.push_back(0);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int u = order[head];
            for (int w : t.neighbors(u))
                if (w != parent[u]) {
                    parent[w] = u;
                    order.push_back(w);
                }
        }
    }
    std::vector<int> subtree(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];

    std::vector<EdgeSplit> splits;
    splits.reserve(t.edge_count());
    for (auto [u, v] : t.edges()) {
        EdgeSplit s;
        s.u = u;
        s.v = v;
        int child = (parent[v] == u) ? v : u;
        int below = subtree[child];
        s.closer_u = (child == u) ? below : n - below;
        s.closer_v = n - s.closer_u;
        s.equidistant = 0;
        splits.push_back(s);
    }
    return splits;
}

Classification classify(const Graph& g) {
    const int n = g.order();
    Classification c;
    std::vector<int> color(n, -1);
    bool two_colorable = true;
    int reached = 0;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        ++components;
        color[start] = 0;
        std::vector<int> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            ++reached;
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    two_colorable = false;
                }
            }
        }
    }
    c.connected = (n <= 1) || (components <= 1 && reached == n);
    c.tree = c.connected && g.edge_count() == n - 1;
    if (two_colorable) c.bipartition = std::move(color);
    return c;
}

Graph make_path(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) fail(Errc::bad_input, "cycle needs at least 3 vertices");
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return build_graph(n, edges);
}

Graph make_star(int n) {
    if (n < 1) fail(Errc::bad_input, "star needs at least 1 vertex");
    std::vector<VertexPair> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return build_graph(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) fail(Errc::bad_input, "invalid bipartition sizes");
    std::vector<VertexPair> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return build_graph(a + b, edges);
}

Graph make_balanced_bipartite(int n) { return make_complete_bipartite(n / 2, n - n / 2); }

}  // namespace wsz
