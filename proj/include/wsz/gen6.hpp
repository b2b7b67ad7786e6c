#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsz/graph.hpp"

namespace wsz {

// graph6: 6-bit groups offset by 63, upper-triangle bits in column order
// (0,1),(0,2),(1,2),(0,3),... Orders above 62 use the '~'-prefixed header.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Permutation-invariant label for graphs up to order 10: the lexicographically
// minimal upper-triangle bitstring over all vertex orderings, packed with bit
// k of the column-major order at position 63-k.
struct CanonicalLabel {
    int order = 0;
    std::uint64_t bits = 0;

    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

CanonicalLabel canonical_form(const Graph& g);
Graph canonical_graph(const CanonicalLabel& label);  // representative with that adjacency

// One representative per isomorphism class of connected graphs on n <= 7
// vertices, in a fixed deterministic order (increasing orbit-minimal
// adjacency mask).
std::vector<Graph> enumerate_connected_graphs(int n);

enum class StreamErrorPolicy { abort, skip };

// Lazily decodes a graph6 stream, one record per line. Blank lines and
// trailing carriage returns are tolerated. Under the skip policy bad records
// are counted and passed over instead of raising.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in, StreamErrorPolicy policy = StreamErrorPolicy::abort);

    std::optional<Graph> next();
    std::size_t line_number() const { return line_number_; }
    std::size_t skipped() const { return skipped_; }

private:
    std::istream& in_;
    StreamErrorPolicy policy_;
    std::size_t line_number_ = 0;
    std::size_t skipped_ = 0;
};

}  // namespace wsz
