#include "wsz/gen6.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>

namespace wsz {

namespace {

constexpr int kOffset = 63;
constexpr int kCanonicalMaxOrder = 10;
constexpr int kEnumerateMaxOrder = 7;

int pair_bit_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

std::size_t body_chars(int n) {
    return (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) fail(Errc::bad_header, "empty graph6 record");
    for (char c : line)
        if (c < 63 || c > 126)
            fail(Errc::invalid_character, "graph6 byte out of range: " + std::to_string(int(c)));

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            fail(Errc::order_too_large, "graph6 orders above 258047 not supported");
        if (line.size() < 4) fail(Errc::bad_header, "truncated graph6 order prefix");
        n = (static_cast<long long>(line[1] - kOffset) << 12) |
            (static_cast<long long>(line[2] - kOffset) << 6) | (line[3] - kOffset);
        pos = 4;
        if (n < 63) fail(Errc::bad_header, "long-form order prefix used for small order");
    } else {
        n = line[0] - kOffset;
        pos = 1;
    }

    std::size_t need = body_chars(static_cast<int>(n));
    if (line.size() - pos < need) fail(Errc::truncated_bits, "graph6 body shorter than order requires");
    if (line.size() - pos > need) fail(Errc::trailing_data, "graph6 record has trailing characters");

    std::vector<VertexPair> edges;
    long long total_bits = n * (n - 1) / 2;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int c = line[pos + k / 6] - kOffset;
            if ((c >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    long long padding = static_cast<long long>(need) * 6 - total_bits;
    if (padding > 0) {
        int last = line[pos + need - 1] - kOffset;
        if (last & ((1 << padding) - 1)) fail(Errc::trailing_data, "nonzero graph6 padding bits");
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kOffset + (n & 63)));
    } else {
        fail(Errc::order_too_large, "graph6 orders above 258047 not supported");
    }
    std::vector<std::uint8_t> groups(body_chars(n), 0);
    for (auto [u, v] : g.edges()) {
        int k = pair_bit_index(u, v);
        groups[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
    }
    for (auto b : groups) out.push_back(static_cast<char>(kOffset + b));
    return out;
}

namespace {

std::uint64_t upper_triangle_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= 1ULL << (63 - pair_bit_index(u, v));
    return mask;
}

// Branch-and-bound over vertex orderings: placing vertex `v` at position k
// appends column k (its adjacency to the already placed vertices), and the
// columns fill the bitstring left to right, so prefixes prune exactly.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::uint64_t best = ~0ULL;
    std::vector<int> placed;
    std::vector<char> used;

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.order()), used(graph.order(), 0) {}

    void run() {
        placed.reserve(n);
        extend(0ULL);
    }

    void extend(std::uint64_t prefix) {
        int k = static_cast<int>(placed.size());
        if (k == n) {
            best = std::min(best, prefix);
            return;
        }
        int base = k * (k - 1) / 2;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t column = 0;
            for (int i = 0; i < k; ++i)
                if (g.has_edge(v, placed[i])) column |= 1ULL << (63 - (base + i));
            std::uint64_t next = prefix | column;
            // compare the filled prefix (base + k bits) against best
            int filled = base + k;
            std::uint64_t cut = filled ? ~((~0ULL) >> filled) : 0ULL;
            if ((next & cut) > (best & cut)) continue;
            used[v] = 1;
            placed.push_back(v);
            extend(next);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

CanonicalLabel canonical_form(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        fail(Errc::order_too_large, "canonical_form supports orders up to 10");
    CanonicalLabel label;
    label.order = g.order();
    if (g.order() <= 1 || g.edge_count() == 0) {
        label.bits = 0;
        return label;
    }
    CanonicalSearch search(g);
    search.best = upper_triangle_mask(g);  // identity ordering as the initial bound
    search.run();
    label.bits = search.best;
    return label;
}

Graph canonical_graph(const CanonicalLabel& label) {
    std::vector<VertexPair> edges;
    for (int j = 1; j < label.order; ++j)
        for (int i = 0; i < j; ++i)
            if ((label.bits >> (63 - pair_bit_index(i, j))) & 1) edges.emplace_back(i, j);
    return build_graph(label.order, edges);
}

namespace {

bool mask_connected(std::uint64_t mask, int n) {
    // adjacency from the packed upper triangle
    std::array<std::uint32_t, 8> adj{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> (63 - pair_bit_index(i, j))) & 1) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n >= 32 ? ~0u : ((1u << n) - 1));
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) fail(Errc::bad_input, "order must be positive");
    if (n > kEnumerateMaxOrder)
        fail(Errc::order_too_large, "built-in enumeration supports orders up to 7");
    if (n == 1) return {build_graph(1, {})};

    const int bits = n * (n - 1) / 2;
    // edge-slot permutation tables for every vertex permutation
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> slot_maps;
    do {
        std::vector<int> map(bits);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                map[pair_bit_index(i, j)] = pair_bit_index(a, b);
            }
        slot_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(1ULL << bits, false);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        if (seen[mask]) continue;
        // mask is the least representative of a fresh isomorphism class
        for (const auto& map : slot_maps) {
            std::uint64_t image = 0;
            for (int k = 0; k < bits; ++k)
                if ((mask >> k) & 1) image |= 1ULL << map[k];
            seen[image] = true;
        }
        std::uint64_t packed = 0;
        for (int k = 0; k < bits; ++k)
            if ((mask >> k) & 1) packed |= 1ULL << (63 - k);
        if (!mask_connected(packed, n)) continue;
        std::vector<VertexPair> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((mask >> pair_bit_index(i, j)) & 1) edges.emplace_back(i, j);
        out.push_back(build_graph(n, edges));
    }
    return out;
}

Graph6Reader::Graph6Reader(std::istream& in, StreamErrorPolicy policy) : in_(in), policy_(policy) {}

std::optional<Graph> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_number_;
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        if (line.empty()) continue;
        try {
            return parse_graph6(line);
        } catch (const Error& err) {
            if (policy_ == StreamErrorPolicy::abort)
                throw Error(err.code(),
                            "line " + std::to_string(line_number_) + ": " + err.what());
            ++skipped_;
        }
    }
    return std::nullopt;
}

}  // namespace wsz
