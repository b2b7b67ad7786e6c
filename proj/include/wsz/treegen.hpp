#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wsz/graph.hpp"

namespace wsz {

// Canonical level sequence of a free tree: preorder depths, root depth 0.
// The root is a centroid and sibling subtrees are ordered non-increasingly,
// so the sequence is the lexicographically maximal centroid-rooted form and
// two TreeCodes are equal exactly when their trees are isomorphic.
struct TreeCode {
    std::vector<int> levels;

    friend auto operator<=>(const TreeCode&, const TreeCode&) = default;
};

std::string to_string(const TreeCode& code);  // comma-separated depths
TreeCode tree_code_from_string(const std::string& text);

// Vertex i attaches to the nearest previous vertex of depth levels[i]-1.
Graph decode(const TreeCode& code);

// Centroid-rooted canonical form of an arbitrary tree; matches the codes the
// enumerator emits.
TreeCode canonical_tree_code(const Graph& t);

// All rooted trees on `size` vertices as canonical level sequences (first
// entry 1), in decreasing lexicographic order.
std::vector<std::vector<int>> rooted_tree_codes(int size);

namespace detail {
struct TreeTables;
}

// Streams every isomorphism class of free trees on n vertices exactly once,
// in a fixed deterministic order. Supports rank ranges so the stream can be
// split into contiguous shards.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int n);
    TreeEnumerator(int n, std::uint64_t first, std::uint64_t last);
    TreeEnumerator(std::shared_ptr<const detail::TreeTables> tables, std::uint64_t first,
                   std::uint64_t last);

    bool next(TreeCode& out);
    std::uint64_t remaining() const { return remaining_; }

private:
    void seek(std::uint64_t rank);
    void descend(int index);
    void advance_unicentroid();
    void emit(TreeCode& out) const;

    std::shared_ptr<const detail::TreeTables> tables_;
    std::uint64_t remaining_ = 0;
    bool unicentroid_phase_ = true;
    std::vector<std::pair<int, int>> stack_;  // (flat index, remaining before taking it)
    int rem_ = 0;
    std::size_t bi_i_ = 0;
    std::size_t bi_j_ = 0;
};

std::uint64_t count_free_trees(int n);

// Labeled tree on n vertices from a Prüfer sequence (length n-2, entries in
// 0..n-1).
Graph tree_from_pruefer(int n, std::span<const int> sequence);

// Uniform random labeled tree drawn via its Prüfer sequence; deterministic in
// the seed.
Graph random_tree(int n, std::uint64_t seed);

// Contiguous rank ranges [first, last) covering the whole stream.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(int n, int shards);
std::vector<TreeEnumerator> partition_stream(int n, int shards);

}  // namespace wsz
