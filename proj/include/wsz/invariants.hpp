#pragma once

#include <cstdint>
#include <functional>

#include "wsz/graph.hpp"

namespace wsz {

enum class IndexKind { wiener, szeged, weighted_szeged, abc };

const char* index_kind_name(IndexKind kind);
bool index_kind_integral(IndexKind kind);

// Result of one index computation. Wiener, Szeged and weighted Szeged are
// exact 64-bit integers (overflow raises, never wraps); ABC is a double.
class IndexValue {
public:
    static IndexValue of_integer(IndexKind kind, std::int64_t value);
    static IndexValue of_real(IndexKind kind, double value);

    IndexKind kind() const { return kind_; }
    bool integral() const { return integral_; }
    std::int64_t as_integer() const;
    double as_real() const { return integral_ ? static_cast<double>(int_value_) : real_value_; }

    friend bool operator==(const IndexValue&, const IndexValue&) = default;

private:
    IndexKind kind_ = IndexKind::wiener;
    bool integral_ = true;
    std::int64_t int_value_ = 0;
    double real_value_ = 0.0;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Sum over edges of w(u,v) * n_u * n_v. The degree-sum weight gives the
// weighted Szeged index, a constant 1 gives the plain Szeged index; both run
// through this one path (subtree sizes on trees, BFS splits otherwise).
std::int64_t split_weighted_sum(const Graph& g, const std::function<std::int64_t(int, int)>& weight);

IndexValue wiener(const Graph& g);           // sum of distances over unordered pairs
IndexValue szeged(const Graph& g);
IndexValue weighted_szeged(const Graph& g);
IndexValue abc(const Graph& g);              // sum of sqrt((du+dv-2)/(du*dv)), sorted edge order

IndexValue star_wsz_closed_form(std::int64_t n);                // n*(n-1)^2
IndexValue balanced_bipartite_wsz_closed_form(std::int64_t n);  // n*floor(n^2/4)^2

// Two co-minimal ABC values are treated as tied below this absolute tolerance.
inline constexpr double abc_tie_tolerance = 1e-9;

}  // namespace wsz
