#include "wsz/treegen.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace wsz {

namespace {

constexpr int kMaxOrder = 28;  // enumeration tables beyond this get large; targets are <= 25

// Child blocks of a whole-subtree code (first entry 1): one block per child
// of the code's root, each again with first entry 1.
std::vector<std::vector<int>> child_blocks(const std::vector<int>& code) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t k = 1; k < code.size(); ++k) {
        if (code[k] == 2) blocks.emplace_back();
        blocks.back().push_back(code[k] - 1);
    }
    return blocks;
}

// Root the joined tree at A's root, with B hanging as one more child block.
std::vector<int> merge_at_root(const std::vector<int>& a, const std::vector<int>& b) {
    auto blocks = child_blocks(a);
    blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    std::vector<int> out{0};
    for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
    return out;
}

// Canonical code of the tree made of two halves joined by a centroid edge.
std::vector<int> combine_halves(const std::vector<int>& a, const std::vector<int>& b) {
    return std::max(merge_at_root(a, b), merge_at_root(b, a));
}

}  // namespace

namespace detail {

struct TreeTables {
    int n = 0;
    int cap = 0;                              // max subtree size below the centroid
    std::vector<std::vector<int>> flat;       // subtree codes, sizes 1..cap, decreasing lex
    std::vector<int> size_of;                 // flat[i].size()
    std::vector<std::vector<int>> jump;       // jump[s][i] = first j >= i with size_of[j] <= s
    std::vector<std::uint64_t> completions;   // row r, column i (width flat.size()+1)
    std::vector<std::vector<int>> halves;     // rooted codes of size n/2 when n is even
    std::uint64_t uni_total = 0;
    std::uint64_t bi_total = 0;

    std::uint64_t total() const { return uni_total + bi_total; }
    std::uint64_t comp(int r, int i) const {
        return completions[static_cast<std::size_t>(r) * (flat.size() + 1) + i];
    }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::TreeTables> make_tables(int n) {
    if (n < 1) fail(Errc::bad_input, "tree order must be at least 1");
    if (n > kMaxOrder) fail(Errc::order_too_large, "tree enumeration supported up to order 28");
    auto t = std::make_shared<detail::TreeTables>();
    t->n = n;
    t->cap = (n - 1) / 2;
    for (int m = 1; m <= t->cap; ++m) {
        auto codes = rooted_tree_codes(m);
        t->flat.insert(t->flat.end(), codes.begin(), codes.end());
    }
    std::sort(t->flat.begin(), t->flat.end(), std::greater<>());
    const int f = static_cast<int>(t->flat.size());
    t->size_of.resize(f);
    for (int i = 0; i < f; ++i) t->size_of[i] = static_cast<int>(t->flat[i].size());

    t->jump.assign(t->cap + 1, std::vector<int>(f + 1, f));
    for (int s = 1; s <= t->cap; ++s)
        for (int i = f - 1; i >= 0; --i) t->jump[s][i] = (t->size_of[i] <= s) ? i : t->jump[s][i + 1];

    if (n <= 2) {
        t->bi_total = 1;  // the single tree, emitted as a hard-wired code
        return t;
    }

    t->completions.assign(static_cast<std::size_t>(n) * (f + 1), 0);
    for (int i = 0; i <= f; ++i) t->completions[i] = 1;  // row r = 0
    for (int r = 1; r <= n - 1; ++r) {
        auto* row = &t->completions[static_cast<std::size_t>(r) * (f + 1)];
        row[f] = 0;
        for (int i = f - 1; i >= 0; --i) {
            std::uint64_t take = 0;
            if (t->size_of[i] <= r)
                take = t->completions[static_cast<std::size_t>(r - t->size_of[i]) * (f + 1) + i];
            row[i] = take + row[i + 1];
        }
    }
    t->uni_total = t->comp(n - 1, 0);

    if (n % 2 == 0) {
        t->halves = rooted_tree_codes(n / 2);
        auto len = static_cast<std::uint64_t>(t->halves.size());
        t->bi_total = len * (len + 1) / 2;
    }
    return t;
}

}  // namespace

std::string to_string(const TreeCode& code) {
    std::string out;
    for (std::size_t i = 0; i < code.levels.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(code.levels[i]);
    }
    return out;
}

TreeCode tree_code_from_string(const std::string& text) {
    TreeCode code;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        try {
            code.levels.push_back(std::stoi(part));
        } catch (const std::exception&) {
            fail(Errc::malformed_level_sequence, "bad level entry: " + part);
        }
    }
    if (code.levels.empty()) fail(Errc::malformed_level_sequence, "empty level sequence");
    return code;
}

Graph decode(const TreeCode& code) {
    const auto& levels = code.levels;
    const int n = static_cast<int>(levels.size());
    if (n == 0 || levels[0] != 0)
        fail(Errc::malformed_level_sequence, "level sequence must start with depth 0");
    std::vector<VertexPair> edges;
    edges.reserve(n - 1);
    std::vector<int> last_at(n, -1);
    last_at[0] = 0;
    for (int i = 1; i < n; ++i) {
        int d = levels[i];
        if (d < 1 || d > levels[i - 1] + 1)
            fail(Errc::malformed_level_sequence,
                 "depth " + std::to_string(d) + " invalid at position " + std::to_string(i));
        edges.emplace_back(last_at[d - 1], i);
        last_at[d] = i;
    }
    return build_graph(n, edges);
}

TreeCode canonical_tree_code(const Graph& t) {
    const int n = t.order();
    if (!is_tree(t)) fail(Errc::not_a_tree, "canonical_tree_code requires a tree");
    if (n == 1) return TreeCode{{0}};

    // Subtree sizes from an arbitrary root, then centroid(s) by max component.
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int w : t.neighbors(order[head]))
            if (w != parent[order[head]]) {
                parent[w] = order[head];
                order.push_back(w);
            }
    std::vector<int> size(n, 1), max_comp(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            max_comp[parent[v]] = std::max(max_comp[parent[v]], size[v]);
        }
    }
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int worst = std::max(max_comp[v], n - size[v]);
        if (worst <= n / 2) centroids.push_back(v);
    }

    std::function<std::vector<int>(int, int)> rooted = [&](int v, int ban) {
        std::vector<std::vector<int>> kids;
        for (int w : t.neighbors(v))
            if (w != ban) kids.push_back(rooted(w, v));
        std::sort(kids.begin(), kids.end(), std::greater<>());
        std::vector<int> code{1};
        for (const auto& kid : kids)
            for (int d : kid) code.push_back(d + 1);
        return code;
    };

    TreeCode out;
    if (centroids.size() == 1) {
        int c = centroids[0];
        std::vector<std::vector<int>> kids;
        for (int w : t.neighbors(c)) kids.push_back(rooted(w, c));
        std::sort(kids.begin(), kids.end(), std::greater<>());
        out.levels.push_back(0);
        for (const auto& kid : kids)
            out.levels.insert(out.levels.end(), kid.begin(), kid.end());
    } else {
        int c1 = centroids[0], c2 = centroids[1];
        out.levels = combine_halves(rooted(c1, c2), rooted(c2, c1));
    }
    return out;
}

std::vector<std::vector<int>> rooted_tree_codes(int size) {
    std::vector<std::vector<int>> out;
    if (size <= 0) return out;
    std::vector<int> levels(size);
    for (int i = 0; i < size; ++i) levels[i] = i + 1;  // start from the path
    for (;;) {
        out.push_back(levels);
        int p = -1;
        for (int i = size - 1; i >= 1; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[i] == levels[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < size; ++i) levels[i] = levels[i - (p - q)];
    }
    return out;
}

TreeEnumerator::TreeEnumerator(int n) {
    auto tables = make_tables(n);
    auto total = tables->total();
    *this = TreeEnumerator(std::move(tables), 0, total);
}

TreeEnumerator::TreeEnumerator(int n, std::uint64_t first, std::uint64_t last)
    : TreeEnumerator(make_tables(n), first, last) {}

TreeEnumerator::TreeEnumerator(std::shared_ptr<const detail::TreeTables> tables, std::uint64_t first,
                               std::uint64_t last)
    : tables_(std::move(tables)) {
    auto total = tables_->total();
    if (first > last || last > total) fail(Errc::bad_input, "enumerator rank range out of bounds");
    remaining_ = last - first;
    if (remaining_ > 0) seek(first);
}

void TreeEnumerator::seek(std::uint64_t rank) {
    const auto& t = *tables_;
    if (t.n <= 2) {
        unicentroid_phase_ = false;
        bi_i_ = bi_j_ = 0;
        return;
    }
    if (rank < t.uni_total) {
        unicentroid_phase_ = true;
        stack_.clear();
        rem_ = t.n - 1;
        int i = 0;
        while (rem_ > 0) {
            if (t.size_of[i] <= rem_) {
                std::uint64_t take = t.comp(rem_ - t.size_of[i], i);
                if (rank < take) {
                    stack_.emplace_back(i, rem_);
                    rem_ -= t.size_of[i];
                    continue;
                }
                rank -= take;
            }
            ++i;
        }
    } else {
        unicentroid_phase_ = false;
        std::uint64_t b = rank - t.uni_total;
        std::size_t len = t.halves.size();
        bi_i_ = 0;
        while (b >= len - bi_i_) {
            b -= len - bi_i_;
            ++bi_i_;
        }
        bi_j_ = bi_i_ + b;
    }
}

void TreeEnumerator::descend(int index) {
    const auto& t = *tables_;
    int j = index;
    while (rem_ > 0) {
        stack_.emplace_back(j, rem_);
        rem_ -= t.size_of[j];
        if (rem_ == 0) break;
        j = t.jump[std::min(rem_, t.cap)][j];
    }
}

void TreeEnumerator::advance_unicentroid() {
    const auto& t = *tables_;
    const int f = static_cast<int>(t.flat.size());
    while (!stack_.empty()) {
        auto [i, before] = stack_.back();
        stack_.pop_back();
        rem_ = before;
        int j = t.jump[std::min(rem_, t.cap)][i + 1];
        if (j < f) {
            descend(j);
            return;
        }
    }
    unicentroid_phase_ = false;
    bi_i_ = bi_j_ = 0;
}

void TreeEnumerator::emit(TreeCode& out) const {
    const auto& t = *tables_;
    out.levels.clear();
    if (t.n == 1) {
        out.levels = {0};
        return;
    }
    if (t.n == 2) {
        out.levels = {0, 1};
        return;
    }
    if (unicentroid_phase_) {
        out.levels.push_back(0);
        for (auto [i, before] : stack_) {
            (void)before;
            const auto& code = t.flat[i];
            out.levels.insert(out.levels.end(), code.begin(), code.end());
        }
    } else {
        out.levels = combine_halves(t.halves[bi_i_], t.halves[bi_j_]);
    }
}

bool TreeEnumerator::next(TreeCode& out) {
    if (remaining_ == 0) return false;
    emit(out);
    --remaining_;
    if (remaining_ == 0) return true;
    const auto& t = *tables_;
    if (unicentroid_phase_) {
        advance_unicentroid();
    } else {
        ++bi_j_;
        if (bi_j_ == t.halves.size()) {
            ++bi_i_;
            bi_j_ = bi_i_;
        }
    }
    return true;
}

std::uint64_t count_free_trees(int n) {
    if (n == 1 || n == 2) return 1;
    return make_tables(n)->total();
}

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
    if (n < 2) fail(Errc::bad_input, "Prüfer decoding needs n >= 2");
    if (static_cast<int>(sequence.size()) != n - 2)
        fail(Errc::bad_input, "Prüfer sequence must have length n-2");
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) fail(Errc::bad_input, "Prüfer entry out of range");
        ++degree[x];
    }
    std::vector<VertexPair> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : sequence) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[leaf];
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    // vertex n-1 is never consumed, so it closes the tree with the last leaf
    edges.emplace_back(leaf, n - 1);
    return build_graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) fail(Errc::bad_input, "tree order must be at least 1");
    if (n == 1) return build_graph(1, {});
    if (n == 2) return build_graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);
    return tree_from_pruefer(n, pruefer);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(int n, int shards) {
    if (shards < 1) fail(Errc::bad_input, "shard count must be at least 1");
    std::uint64_t total = count_free_trees(n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    ranges.reserve(shards);
    for (int s = 0; s < shards; ++s) {
        std::uint64_t first = total * s / shards;
        std::uint64_t last = total * (s + 1) / shards;
        ranges.emplace_back(first, last);
    }
    return ranges;
}

std::vector<TreeEnumerator> partition_stream(int n, int shards) {
    auto tables = make_tables(n);
    auto ranges = partition_ranks(n, shards);
    std::vector<TreeEnumerator> out;
    out.reserve(ranges.size());
    for (auto [first, last] : ranges) out.emplace_back(tables, first, last);
    return out;
}

}  // namespace wsz
