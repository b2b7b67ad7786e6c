#pragma once

#include <cstdint>
#include <vector>

#include "wsz/graph.hpp"

namespace wsz {

// A k-ray at `anchor`: a pendant path of exactly k vertices hanging from it.
// Interior path vertices have degree 2, the last is a leaf, and the anchor
// keeps degree >= 2 so the ray never exhausts the tree.
struct RayDescriptor {
    int anchor = 0;
    std::vector<int> path;  // anchor-adjacent vertex first, leaf last

    int order() const { return static_cast<int>(path.size()); }
};

enum class TransformTag { contract_to_leaf, two_leaves, two_2rays_leaf, truncate_4ray, two_3rays };

const char* transform_tag_name(TransformTag tag);

// Result of applying one rewrite. `delta` is the weighted Szeged change in
// the transformation's own direction: output minus input for the maximizing
// contraction, input minus output for the minimizing rewrites.
struct TransformOutcome {
    TransformTag tag{};
    Graph input;
    Graph output;
    std::int64_t delta = 0;
};

// Ordered pairs (u,v) where u is an internal leaf (all its neighbors but v
// are leaves) and v is its unique non-leaf neighbor. Empty exactly on stars.
std::vector<VertexPair> find_internal_leaf_edges(const Graph& t);

// Merge u and v into one vertex and hang a fresh leaf off it; order is kept.
TransformOutcome contract_to_leaf(const Graph& t, VertexPair e);

std::vector<RayDescriptor> detect_rays(const Graph& t, int r);

// Vertices of degree >= 6 adjacent to at least two leaves.
std::vector<int> violations_two_leaves(const Graph& t);
// Replace two leaves at r by one pendant 2-path. Decrease is guaranteed only
// for deg(r) >= 6; the rewrite itself runs for any r with two leaf neighbors.
TransformOutcome transform_two_leaves(const Graph& t, int r);

// Vertices of degree >= 10 carrying two 2-rays and a leaf.
std::vector<int> violations_two_2rays_leaf(const Graph& t);
// Replace the two 2-rays and the leaf by one branch vertex carrying two
// pendant 2-paths.
TransformOutcome transform_two_2rays_leaf(const Graph& t, int r);

// Vertices anchoring a ray of order exactly 4.
std::vector<int> violations_4ray(const Graph& t);
// Drop the ray tip and attach a fresh leaf at the ray's first vertex.
// The decrease equals 2n - 12 exactly; requires n >= 7.
TransformOutcome transform_truncate_4ray(const Graph& t, const RayDescriptor& ray);

// Degree-3 vertices adjacent to two 3-rays.
std::vector<int> violations_two_3rays(const Graph& t);
// Turn the two 3-rays at a degree-3 vertex into three 2-rays; the decrease
// equals exactly 2 for every n >= 8.
TransformOutcome transform_two_3rays(const Graph& t, int r);

// Seeded fixture builders: a random base tree with the named pattern grafted
// on, for exploring the rewrites at many orders.
Graph tree_with_4ray(int n, std::uint64_t seed, RayDescriptor* ray_out = nullptr);
Graph tree_with_two_3rays(int n, std::uint64_t seed, int* anchor_out = nullptr);  // n >= 8
Graph tree_with_two_2rays_leaf(int degree, int n, std::uint64_t seed, int* anchor_out = nullptr);
Graph tree_with_two_leaves(int degree, int n, std::uint64_t seed, int* anchor_out = nullptr);

struct PropositionReport {
    std::vector<int> two_leaves;
    std::vector<int> two_2rays_leaf;
    std::vector<int> four_ray;
    std::vector<int> two_3rays;

    bool clean() const {
        return two_leaves.empty() && two_2rays_leaf.empty() && four_ray.empty() && two_3rays.empty();
    }
};

PropositionReport check_all_propositions(const Graph& t);

}  // namespace wsz
