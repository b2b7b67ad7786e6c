#include "wsz/transforms.hpp"

#include <algorithm>

#include "wsz/invariants.hpp"
#include "wsz/treegen.hpp"

namespace wsz {

namespace {

void require_tree(const Graph& t, const char* who) {
    if (!is_tree(t)) fail(Errc::not_a_tree, std::string(who) + " requires a tree");
}

std::int64_t wsz_value(const Graph& g) { return weighted_szeged(g).as_integer(); }

// Edges of `t` minus those touching `drop`, as a reusable starting point for
// rebuilt trees.
std::vector<VertexPair> edges_avoiding(const Graph& t, const std::vector<int>& drop) {
    std::vector<char> dead(t.order(), 0);
    for (int v : drop) dead[v] = 1;
    std::vector<VertexPair> out;
    out.reserve(t.edge_count());
    for (auto [u, v] : t.edges())
        if (!dead[u] && !dead[v]) out.emplace_back(u, v);
    return out;
}

}  // namespace

const char* transform_tag_name(TransformTag tag) {
    switch (tag) {
        case TransformTag::contract_to_leaf: return "contract_to_leaf";
        case TransformTag::two_leaves: return "two_leaves";
        case TransformTag::two_2rays_leaf: return "two_2rays_leaf";
        case TransformTag::truncate_4ray: return "truncate_4ray";
        case TransformTag::two_3rays: return "two_3rays";
    }
    return "unknown";
}

std::vector<VertexPair> find_internal_leaf_edges(const Graph& t) {
    require_tree(t, "find_internal_leaf_edges");
    std::vector<VertexPair> out;
    for (int u = 0; u < t.order(); ++u) {
        if (t.degree(u) < 2) continue;
        int non_leaf = -1;
        int non_leaf_count = 0;
        for (int w : t.neighbors(u))
            if (t.degree(w) > 1) {
                non_leaf = w;
                ++non_leaf_count;
            }
        if (non_leaf_count == 1) out.emplace_back(u, non_leaf);
    }
    return out;
}

TransformOutcome contract_to_leaf(const Graph& t, VertexPair e) {
    auto eligible = find_internal_leaf_edges(t);
    if (std::find(eligible.begin(), eligible.end(), e) == eligible.end())
        fail(Errc::not_internal_leaf_edge, "edge is not an internal-leaf edge");
    auto [u, v] = e;
    // merge u,v into u; the freed label v becomes the new leaf
    std::vector<VertexPair> edges = edges_avoiding(t, {u, v});
    for (int w : t.neighbors(u))
        if (w != v) edges.emplace_back(std::min(u, w), std::max(u, w));
    for (int w : t.neighbors(v))
        if (w != u) edges.emplace_back(std::min(u, w), std::max(u, w));
    edges.emplace_back(std::min(u, v), std::max(u, v));  // fresh leaf reuses label v

    TransformOutcome outcome;
    outcome.tag = TransformTag::contract_to_leaf;
    outcome.input = t;
    outcome.output = build_graph(t.order(), edges);
    outcome.delta = checked_add(wsz_value(outcome.output), -wsz_value(outcome.input));
    return outcome;
}

std::vector<RayDescriptor> detect_rays(const Graph& t, int r) {
    require_tree(t, "detect_rays");
    if (r < 0 || r >= t.order()) fail(Errc::vertex_out_of_range, "ray anchor out of range");
    std::vector<RayDescriptor> rays;
    if (t.degree(r) < 2) return rays;  // a lone branch would exhaust the tree
    for (int first : t.neighbors(r)) {
        RayDescriptor ray;
        ray.anchor = r;
        int prev = r, cur = first;
        while (t.degree(cur) == 2) {
            ray.path.push_back(cur);
            int nxt = (t.neighbors(cur)[0] == prev) ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        if (t.degree(cur) == 1) {
            ray.path.push_back(cur);
            rays.push_back(std::move(ray));
        }
    }
    return rays;
}

std::vector<int> violations_two_leaves(const Graph& t) {
    require_tree(t, "violations_two_leaves");
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) < 6) continue;
        int leaves = 0;
        for (int w : t.neighbors(v)) leaves += (t.degree(w) == 1);
        if (leaves >= 2) out.push_back(v);
    }
    return out;
}

TransformOutcome transform_two_leaves(const Graph& t, int r) {
    require_tree(t, "transform_two_leaves");
    std::vector<int> leaves;
    for (int w : t.neighbors(r))
        if (t.degree(w) == 1) leaves.push_back(w);
    if (leaves.size() < 2)
        fail(Errc::precondition_violated, "vertex is not adjacent to two leaves");
    int l1 = leaves[0], l2 = leaves[1];
    int r1 = std::min(l1, l2), r2 = std::max(l1, l2);  // freed labels, smallest first
    auto edges = edges_avoiding(t, {l1, l2});
    edges.emplace_back(std::min(r, r1), std::max(r, r1));
    edges.emplace_back(r1, r2);

    TransformOutcome outcome;
    outcome.tag = TransformTag::two_leaves;
    outcome.input = t;
    outcome.output = build_graph(t.order(), edges);
    outcome.delta = checked_add(wsz_value(outcome.input), -wsz_value(outcome.output));
    return outcome;
}

std::vector<int> violations_two_2rays_leaf(const Graph& t) {
    require_tree(t, "violations_two_2rays_leaf");
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) < 10) continue;
        int two_rays = 0, leaf_rays = 0;
        for (const auto& ray : detect_rays(t, v)) {
            two_rays += (ray.order() == 2);
            leaf_rays += (ray.order() == 1);
        }
        if (two_rays >= 2 && leaf_rays >= 1) out.push_back(v);
    }
    return out;
}

TransformOutcome transform_two_2rays_leaf(const Graph& t, int r) {
    require_tree(t, "transform_two_2rays_leaf");
    std::vector<const RayDescriptor*> twos;
    const RayDescriptor* leaf = nullptr;
    auto rays = detect_rays(t, r);
    for (const auto& ray : rays) {
        if (ray.order() == 2 && twos.size() < 2) twos.push_back(&ray);
        if (ray.order() == 1 && !leaf) leaf = &ray;
    }
    if (twos.size() < 2 || !leaf)
        fail(Errc::precondition_violated, "vertex lacks two 2-rays and a leaf");

    std::vector<int> freed = {twos[0]->path[0], twos[0]->path[1], twos[1]->path[0],
                              twos[1]->path[1], leaf->path[0]};
    auto edges = edges_avoiding(t, freed);
    std::sort(freed.begin(), freed.end());
    int y1 = freed[0], y2 = freed[1], y3 = freed[2], y4 = freed[3], y5 = freed[4];
    auto add = [&edges](int a, int b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };
    add(r, y1);
    add(y1, y2);
    add(y2, y3);
    add(y1, y4);
    add(y4, y5);

    TransformOutcome outcome;
    outcome.tag = TransformTag::two_2rays_leaf;
    outcome.input = t;
    outcome.output = build_graph(t.order(), edges);
    outcome.delta = checked_add(wsz_value(outcome.input), -wsz_value(outcome.output));
    return outcome;
}

std::vector<int> violations_4ray(const Graph& t) {
    require_tree(t, "violations_4ray");
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v) {
        for (const auto& ray : detect_rays(t, v))
            if (ray.order() == 4) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

TransformOutcome transform_truncate_4ray(const Graph& t, const RayDescriptor& ray) {
    require_tree(t, "transform_truncate_4ray");
    if (ray.order() != 4) fail(Errc::precondition_violated, "ray order must be exactly 4");
    if (t.order() < 7) fail(Errc::precondition_violated, "truncating a 4-ray needs n >= 7");
    auto rays = detect_rays(t, ray.anchor);
    bool found = std::any_of(rays.begin(), rays.end(),
                             [&ray](const RayDescriptor& cand) { return cand.path == ray.path; });
    if (!found) fail(Errc::precondition_violated, "descriptor does not match a ray of the tree");

    int r1 = ray.path[0], r3 = ray.path[2], r4 = ray.path[3];
    std::vector<VertexPair> edges;
    for (auto [u, v] : t.edges())
        if (!(u == std::min(r3, r4) && v == std::max(r3, r4))) edges.emplace_back(u, v);
    edges.emplace_back(std::min(r1, r4), std::max(r1, r4));  // tip label becomes the new leaf

    TransformOutcome outcome;
    outcome.tag = TransformTag::truncate_4ray;
    outcome.input = t;
    outcome.output = build_graph(t.order(), edges);
    outcome.delta = checked_add(wsz_value(outcome.input), -wsz_value(outcome.output));
    return outcome;
}

std::vector<int> violations_two_3rays(const Graph& t) {
    require_tree(t, "violations_two_3rays");
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 3) continue;
        int threes = 0;
        for (const auto& ray : detect_rays(t, v)) threes += (ray.order() == 3);
        if (threes >= 2) out.push_back(v);
    }
    return out;
}

TransformOutcome transform_two_3rays(const Graph& t, int r) {
    require_tree(t, "transform_two_3rays");
    if (t.order() < 8) fail(Errc::precondition_violated, "rewriting two 3-rays needs n >= 8");
    if (t.degree(r) != 3) fail(Errc::precondition_violated, "anchor must have degree 3");
    std::vector<const RayDescriptor*> threes;
    auto rays = detect_rays(t, r);
    for (const auto& ray : rays)
        if (ray.order() == 3 && threes.size() < 2) threes.push_back(&ray);
    if (threes.size() < 2) fail(Errc::precondition_violated, "anchor lacks two 3-rays");

    // keep the first two vertices of each ray as 2-rays; the freed tips form
    // the third 2-ray
    int a3 = threes[0]->path[2], b3 = threes[1]->path[2];
    int a2 = threes[0]->path[1], b2 = threes[1]->path[1];
    std::vector<VertexPair> edges;
    for (auto [u, v] : t.edges()) {
        bool cut = (u == std::min(a2, a3) && v == std::max(a2, a3)) ||
                   (u == std::min(b2, b3) && v == std::max(b2, b3));
        if (!cut) edges.emplace_back(u, v);
    }
    int w1 = std::min(a3, b3), w2 = std::max(a3, b3);
    edges.emplace_back(std::min(r, w1), std::max(r, w1));
    edges.emplace_back(w1, w2);

    TransformOutcome outcome;
    outcome.tag = TransformTag::two_3rays;
    outcome.input = t;
    outcome.output = build_graph(t.order(), edges);
    outcome.delta = checked_add(wsz_value(outcome.input), -wsz_value(outcome.output));
    return outcome;
}

namespace {

// Base tree relabeled to occupy labels [offset, offset + base.order()), with
// its edges appended to `edges`.
void graft_base(const Graph& base, int offset, std::vector<VertexPair>& edges) {
    for (auto [u, v] : base.edges()) edges.emplace_back(offset + u, offset + v);
}

}  // namespace

Graph tree_with_4ray(int n, std::uint64_t seed, RayDescriptor* ray_out) {
    if (n < 7) fail(Errc::bad_input, "4-ray fixture needs n >= 7");
    Graph base = random_tree(n - 4, seed);
    int anchor = static_cast<int>(seed % static_cast<std::uint64_t>(base.order()));
    std::vector<VertexPair> edges(base.edges().begin(), base.edges().end());
    int first = base.order();
    edges.emplace_back(anchor, first);
    for (int i = 0; i < 3; ++i) edges.emplace_back(first + i, first + i + 1);
    if (ray_out) {
        ray_out->anchor = anchor;
        ray_out->path = {first, first + 1, first + 2, first + 3};
    }
    return build_graph(n, edges);
}

Graph tree_with_two_3rays(int n, std::uint64_t seed, int* anchor_out) {
    if (n < 8) fail(Errc::bad_input, "two-3-rays fixture needs n >= 8");
    Graph base = random_tree(n - 7, seed);
    int attach = static_cast<int>(seed % static_cast<std::uint64_t>(base.order()));
    std::vector<VertexPair> edges(base.edges().begin(), base.edges().end());
    int r = base.order();
    edges.emplace_back(attach, r);
    edges.emplace_back(r, r + 1);
    edges.emplace_back(r + 1, r + 2);
    edges.emplace_back(r + 2, r + 3);
    edges.emplace_back(r, r + 4);
    edges.emplace_back(r + 4, r + 5);
    edges.emplace_back(r + 5, r + 6);
    if (anchor_out) *anchor_out = r;
    return build_graph(n, edges);
}

Graph tree_with_two_2rays_leaf(int degree, int n, std::uint64_t seed, int* anchor_out) {
    if (degree < 4) fail(Errc::bad_input, "fixture needs degree >= 4");
    if (n < degree + 3) fail(Errc::bad_input, "fixture needs n >= degree + 3");
    // r = 0; 2-rays on 1-2 and 3-4; leaf 5; single leaves; one random branch
    std::vector<VertexPair> edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}};
    int singles = degree - 4;
    for (int i = 0; i < singles; ++i) edges.emplace_back(0, 6 + i);
    int offset = 6 + singles;
    Graph branch = random_tree(n - offset, seed);
    graft_base(branch, offset, edges);
    edges.emplace_back(0, offset);
    if (anchor_out) *anchor_out = 0;
    return build_graph(n, edges);
}

Graph tree_with_two_leaves(int degree, int n, std::uint64_t seed, int* anchor_out) {
    if (degree < 3) fail(Errc::bad_input, "fixture needs degree >= 3");
    if (n < degree + 1) fail(Errc::bad_input, "fixture needs n >= degree + 1");
    // r = 0; leaves 1 and 2; more single leaves; one random branch
    std::vector<VertexPair> edges = {{0, 1}, {0, 2}};
    int singles = degree - 3;
    for (int i = 0; i < singles; ++i) edges.emplace_back(0, 3 + i);
    int offset = 3 + singles;
    Graph branch = random_tree(n - offset, seed);
    graft_base(branch, offset, edges);
    edges.emplace_back(0, offset);
    if (anchor_out) *anchor_out = 0;
    return build_graph(n, edges);
}

PropositionReport check_all_propositions(const Graph& t) {
    require_tree(t, "check_all_propositions");
    PropositionReport report;
    report.two_leaves = violations_two_leaves(t);
    report.two_2rays_leaf = violations_two_2rays_leaf(t);
    report.four_ray = violations_4ray(t);
    report.two_3rays = violations_two_3rays(t);
    return report;
}

}  // namespace wsz
