#pragma once

// Independent reference computations the tests check the library against.
// Everything here is deliberately implemented by a different route than the
// code under test: counting formulas instead of enumeration, all-permutation
// canonical labels instead of tree codes, per-edge BFS instead of subtree
// sums.

#include <cstdint>
#include <set>
#include <vector>

#include "wsz/gen6.hpp"
#include "wsz/graph.hpp"
#include "wsz/treegen.hpp"

namespace oracle {

// Rooted/free tree counts by the classic counting recurrences.
std::vector<std::int64_t> rooted_tree_counts(int max_n);
std::vector<std::int64_t> free_tree_counts(int max_n);

// Canonical codes of every labeled tree on n vertices, generated through all
// n^(n-2) Prüfer sequences. Practical for n <= 9.
std::set<wsz::TreeCode> pruefer_tree_classes(int n);

// Connected-graph class count by scanning all edge subsets and deduplicating
// with the permutation-based canonical form. Practical for n <= 6.
std::size_t connected_class_count(int n);

// Weighted Szeged index via per-edge BFS splits only (no subtree fast path).
std::int64_t wsz_bfs(const wsz::Graph& g);

// Relabel a graph by a permutation (new label of v is perm[v]).
wsz::Graph relabel(const wsz::Graph& g, const std::vector<int>& perm);

}  // namespace oracle
