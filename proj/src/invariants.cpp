#include "wsz/invariants.hpp"

#include <cmath>

namespace wsz {

const char* index_kind_name(IndexKind kind) {
    switch (kind) {
        case IndexKind::wiener: return "wiener";
        case IndexKind::szeged: return "szeged";
        case IndexKind::weighted_szeged: return "wsz";
        case IndexKind::abc: return "abc";
    }
    return "unknown";
}

bool index_kind_integral(IndexKind kind) { return kind != IndexKind::abc; }

IndexValue IndexValue::of_integer(IndexKind kind, std::int64_t value) {
    IndexValue v;
    v.kind_ = kind;
    v.integral_ = true;
    v.int_value_ = value;
    return v;
}

IndexValue IndexValue::of_real(IndexKind kind, double value) {
    IndexValue v;
    v.kind_ = kind;
    v.integral_ = false;
    v.real_value_ = value;
    return v;
}

std::int64_t IndexValue::as_integer() const {
    if (!integral_) fail(Errc::bad_input, "index value is not integral");
    return int_value_;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) fail(Errc::overflow, "64-bit overflow in index sum");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) fail(Errc::overflow, "64-bit overflow in index product");
    return out;
}

std::int64_t split_weighted_sum(const Graph& g, const std::function<std::int64_t(int, int)>& weight) {
    if (!is_connected(g)) fail(Errc::disconnected, "index requires a connected graph");
    std::int64_t total = 0;
    if (g.order() > 1 && g.edge_count() == g.order() - 1) {
        for (const auto& s : tree_edge_splits(g)) {
            auto term = checked_mul(weight(s.u, s.v), checked_mul(s.closer_u, s.closer_v));
            total = checked_add(total, term);
        }
    } else {
        for (auto e : g.edges()) {
            auto s = edge_split_bfs(g, e);
            auto term = checked_mul(weight(s.u, s.v), checked_mul(s.closer_u, s.closer_v));
            total = checked_add(total, term);
        }
    }
    return total;
}

IndexValue wiener(const Graph& g) {
    if (!is_connected(g)) fail(Errc::disconnected, "wiener requires a connected graph");
    std::int64_t doubled = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto row = bfs_distances(g, v);
        for (int d : row.dist) doubled = checked_add(doubled, d);
    }
    return IndexValue::of_integer(IndexKind::wiener, doubled / 2);
}

IndexValue szeged(const Graph& g) {
    auto total = split_weighted_sum(g, [](int, int) -> std::int64_t { return 1; });
    return IndexValue::of_integer(IndexKind::szeged, total);
}

IndexValue weighted_szeged(const Graph& g) {
    auto total = split_weighted_sum(
        g, [&g](int u, int v) -> std::int64_t { return std::int64_t{g.degree(u)} + g.degree(v); });
    return IndexValue::of_integer(IndexKind::weighted_szeged, total);
}

IndexValue abc(const Graph& g) {
    if (!is_connected(g)) fail(Errc::disconnected, "abc requires a connected graph");
    double total = 0.0;
    for (auto [u, v] : g.edges()) {
        double du = g.degree(u);
        double dv = g.degree(v);
        total += std::sqrt((du + dv - 2.0) / (du * dv));
    }
    return IndexValue::of_real(IndexKind::abc, total);
}

IndexValue star_wsz_closed_form(std::int64_t n) {
    if (n < 2) fail(Errc::bad_input, "star closed form needs n >= 2");
    auto value = checked_mul(n, checked_mul(n - 1, n - 1));
    return IndexValue::of_integer(IndexKind::weighted_szeged, value);
}

IndexValue balanced_bipartite_wsz_closed_form(std::int64_t n) {
    if (n < 2) fail(Errc::bad_input, "balanced bipartite closed form needs n >= 2");
    auto quarter = checked_mul(n, n) / 4;
    auto value = checked_mul(n, checked_mul(quarter, quarter));
    return IndexValue::of_integer(IndexKind::weighted_szeged, value);
}

}  // namespace wsz
