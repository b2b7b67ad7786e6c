// Acceptance suite: one pass/fail line per criterion. Run with the CLI path
// as the first argument (ctest wires this up); criterion 9 and the witness
// dump check shell out to it. Deep-scope items (orders 17..25) run only when
// WSZ_ACCEPT_DEEP=1.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wsz/report.hpp"

namespace fs = std::filesystem;
using namespace wsz;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::string cli_path;
fs::path work_dir;

void report(int number, const std::string& name, bool pass, const std::string& note,
            Clock::time_point start) {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream line;
    line << "[" << number << "] " << name << " ... " << (pass ? "PASS" : "FAIL");
    if (!note.empty()) line << " (" << note << ")";
    line << "  [" << secs << "s]";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

bool deep_enabled() {
    const char* env = std::getenv("WSZ_ACCEPT_DEEP");
    return env && std::string(env) == "1";
}

int run_cli(const std::string& args, const fs::path& stdout_file) {
    std::string cmd = "\"" + cli_path + "\" " + args + " > \"" + stdout_file.string() + "\" 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TreeCode star_code(int n) {
    TreeCode code;
    code.levels.assign(n, 1);
    code.levels[0] = 0;
    return code;
}

// 1. Exhaustive tree search returns the star as the unique maximizer with
//    value n(n-1)^2 for n = 4..12.
void criterion_star_maximality() {
    auto start = Clock::now();
    bool pass = true;
    for (int n = 4; n <= 12; ++n) {
        auto record = extremal_trees(n, IndexKind::weighted_szeged, Direction::maximize, 2);
        pass = pass && record.tree_codes.size() == 1 && record.tree_codes[0] == star_code(n) &&
               record.value.as_integer() == star_wsz_closed_form(n).as_integer() &&
               record.examined == count_free_trees(n);
    }
    report(1, "star maximality over trees, n=4..12", pass, "exact integer match", start);
}

// 2. wSz(K_{fl,ce}) = n*floor(n^2/4)^2 for n = 2..60, and for n = 3..7 the
//    balanced complete bipartite graph is the unique maximum over all
//    connected bipartite graphs.
void criterion_balanced_bipartite() {
    auto start = Clock::now();
    bool closed_ok = true;
    for (int n = 2; n <= 60; ++n)
        closed_ok = closed_ok && weighted_szeged(make_balanced_bipartite(n)).as_integer() ==
                                     balanced_bipartite_wsz_closed_form(n).as_integer();
    bool unique_ok = true;
    for (int n = 3; n <= 7; ++n) {
        auto bound = balanced_bipartite_wsz_closed_form(n).as_integer();
        auto target = canonical_form(make_balanced_bipartite(n));
        int hits = 0;
        for (const auto& g : enumerate_connected_graphs(n)) {
            if (!classify(g).bipartition) continue;
            auto value = weighted_szeged(g).as_integer();
            if (value > bound || (value == bound && !(canonical_form(g) == target))) {
                unique_ok = false;
            }
            if (value == bound) ++hits;
        }
        unique_ok = unique_ok && hits == 1;
    }
    // same checks through the CLI surface
    int rc = run_cli("verify --target prop2 --n-range 2..60", work_dir / "prop2.json");
    report(2, "balanced bipartite closed form n=2..60 + unique bipartite max n=3..7",
           closed_ok && unique_ok && rc == 0, "", start);
}

// 3. transform_truncate_4ray delta == 2n-12 and transform_two_3rays delta == 2
//    on 200 randomized instances each, against BFS-split recomputation.
void criterion_exact_deltas() {
    auto start = Clock::now();
    bool pass = true;
    for (int i = 0; i < 200; ++i) {
        int n = 7 + (i % 34);
        RayDescriptor ray;
        Graph t = tree_with_4ray(n, 0x4A11 + i, &ray);
        auto outcome = transform_truncate_4ray(t, ray);
        auto recomputed = oracle::wsz_bfs(outcome.input) - oracle::wsz_bfs(outcome.output);
        pass = pass && outcome.delta == 2 * n - 12 && outcome.delta == recomputed;
    }
    for (int i = 0; i < 200; ++i) {
        int n = 8 + (i % 33);
        int anchor = 0;
        Graph t = tree_with_two_3rays(n, 0x3A11 + i, &anchor);
        auto outcome = transform_two_3rays(t, anchor);
        auto recomputed = oracle::wsz_bfs(outcome.input) - oracle::wsz_bfs(outcome.output);
        pass = pass && outcome.delta == 2 && outcome.delta == recomputed;
    }
    report(3, "exact rewrite deltas (2n-12 and 2), 200 randomized instances each", pass,
           "zero tolerance", start);
}

// 4. Every internal-leaf-edge contraction on every non-star tree with n <= 10
//    strictly raises the index.
void criterion_contraction_monotone() {
    auto start = Clock::now();
    bool pass = true;
    std::uint64_t applications = 0;
    for (int n = 3; n <= 10; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) {
            Graph t = decode(code);
            for (auto e : find_internal_leaf_edges(t)) {
                auto outcome = contract_to_leaf(t, e);
                pass = pass && outcome.delta > 0;
                ++applications;
            }
        }
    }
    report(4, "contraction strictly increases wSz on all trees n<=10", pass,
           std::to_string(applications) + " applications", start);
}

// 5. Every wSz-minimal tree for n = 7..16 (17..25 under deep) passes all four
//    structural checks.
void criterion_minimal_tree_cleanliness() {
    auto start = Clock::now();
    bool pass = true;
    int last = deep_enabled() ? 25 : 16;
    for (int n = 7; n <= last; ++n) {
        auto record = extremal_trees(n, IndexKind::weighted_szeged, Direction::minimize, 2);
        pass = pass && record.examined == count_free_trees(n);
        for (const auto& code : record.tree_codes)
            pass = pass && check_all_propositions(decode(code)).clean();
    }
    report(5, "minimal trees structurally clean, n=7.." + std::to_string(last), pass,
           deep_enabled() ? "deep scope" : "default scope", start);
}

// 6. The wSz-minimal and ABC-minimal attaining sets intersect for n = 7..13
//    (and 18, 21 under deep).
void criterion_abc_coincidence() {
    auto start = Clock::now();
    bool pass = true;
    std::vector<int> orders;
    for (int n = 7; n <= 13; ++n) orders.push_back(n);
    if (deep_enabled()) {
        orders.push_back(18);
        orders.push_back(21);
    }
    for (int n : orders) pass = pass && !coincidence_report(n, 2).intersection.empty();
    report(6, "wSz-minimal and ABC-minimal tree sets intersect", pass,
           deep_enabled() ? "n=7..13,18,21" : "n=7..13", start);
}

// 7. Conjecture verdicts over the built-in exhaustive scans for n = 3..7 hold;
//    a degenerate external stream produces a witness dump and exit code 2.
void criterion_conjectures() {
    auto start = Clock::now();
    bool pass = true;
    for (int n = 3; n <= 7; ++n) {
        auto low = verify_conjecture_min(n);
        auto high = verify_conjecture_max(n);
        pass = pass && low.holds && high.holds;
        pass = pass && high.record.value.as_integer() ==
                           balanced_bipartite_wsz_closed_form(n).as_integer();
        // strict form (all minimizers trees, unique maximizer) from order 4 on;
        // at order 3 the triangle ties the path at both extremes and is
        // reported as a tie, not a refutation
        if (n >= 4) pass = pass && low.strict_holds && high.strict_holds;
        if (n == 3) pass = pass && !low.strict_holds && !high.strict_holds &&
                           low.ties.size() == 1 && high.ties.size() == 1;
    }

    // external-stream path: verdicts over a synthetic order-8 collection
    {
        std::ofstream stream(work_dir / "order8.g6");
        for (const auto& g :
             {make_path(8), make_star(8), make_cycle(8), make_balanced_bipartite(8),
              make_complete_bipartite(1, 7), make_complete_bipartite(3, 5)})
            stream << write_graph6(g) << '\n';
    }
    auto rc = run_cli("verify --target maxG --n-range 8..8 --graph6 \"" +
                          (work_dir / "order8.g6").string() + "\"",
                      work_dir / "maxg8.json");
    pass = pass && rc == 0;
    rc = run_cli("verify --target minG --n-range 8..8 --graph6 \"" +
                     (work_dir / "order8.g6").string() + "\"",
                 work_dir / "ming8.json");
    pass = pass && rc == 0;

    // a counterexample is a successful run with exit 2 plus a witness dump
    {
        std::ofstream stream(work_dir / "only_c5.g6");
        stream << write_graph6(make_cycle(5)) << '\n';
    }
    rc = run_cli("verify --target minG --n-range 5..5 --graph6 \"" +
                     (work_dir / "only_c5.g6").string() + "\" --out \"" +
                     (work_dir / "witness").string() + "\"",
                 work_dir / "ming_c5.json");
    pass = pass && rc == 2;
    pass = pass && fs::exists(work_dir / "witness" / "witness_minG.g6");

    report(7, "conjecture verdicts hold for n=3..7; stream path exits 2 with witness", pass, "",
           start);
}

// 8. Oracle equivalences: subtree splits vs BFS splits and Sz == W on all
//    trees n <= 10; enumeration counts vs the Prüfer-dedup oracle (n <= 9)
//    and the counting formula (n <= 25); graph6 round-trip on everything
//    generated.
void criterion_oracle_equivalences() {
    auto start = Clock::now();
    bool pass = true;

    for (int n = 2; n <= 10; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) {
            Graph t = decode(code);
            auto fast = tree_edge_splits(t);
            for (const auto& s : fast) {
                auto slow = edge_split_bfs(t, {s.u, s.v});
                pass = pass && s.closer_u == slow.closer_u && s.closer_v == slow.closer_v &&
                       slow.equidistant == 0;
            }
            pass = pass && szeged(t).as_integer() == wiener(t).as_integer();
        }
    }

    for (int n = 2; n <= 9; ++n) {
        auto classes = oracle::pruefer_tree_classes(n);
        TreeEnumerator trees(n);
        TreeCode code;
        std::set<TreeCode> emitted;
        while (trees.next(code)) emitted.insert(code);
        pass = pass && classes == emitted;
    }

    auto free = oracle::free_tree_counts(25);
    for (int n = 1; n <= 25; ++n)
        pass = pass && count_free_trees(n) == static_cast<std::uint64_t>(free[n]);

    for (int n = 1; n <= 12; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) {
            Graph t = decode(code);
            Graph back = parse_graph6(write_graph6(t));
            pass = pass && back.order() == t.order() &&
                   std::equal(back.edges().begin(), back.edges().end(), t.edges().begin(),
                              t.edges().end());
        }
    }
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            Graph back = parse_graph6(write_graph6(g));
            pass = pass && back.order() == g.order() &&
                   std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(),
                              g.edges().end());
        }

    report(8, "oracle equivalences (splits, Sz=W, tree counts, graph6 round-trip)", pass,
           "Prüfer-dedup n<=9, counting formula n<=25", start);
}

// 9. cmd_search reports are byte-identical across shard counts 1, 4, 16.
void criterion_report_determinism() {
    auto start = Clock::now();
    bool pass = true;
    std::string baseline;
    for (int shards : {1, 4, 16}) {
        fs::path out = work_dir / ("search_shards" + std::to_string(shards) + ".json");
        int rc = run_cli("search --n 10 --objective wsz --direction min --shards " +
                             std::to_string(shards),
                         out);
        pass = pass && rc == 0;
        auto text = slurp(out);
        if (baseline.empty())
            baseline = text;
        else
            pass = pass && text == baseline;
    }
    pass = pass && !baseline.empty();
    report(9, "cmd_search reports byte-identical across shards {1,4,16} at n=10", pass, "", start);
}

}  // namespace

int main(int argc, char** argv) {
    cli_path = (argc > 1) ? argv[1] : "./tools/wsz";
    work_dir = fs::temp_directory_path() / "wsz_acceptance";
    fs::create_directories(work_dir);

    criterion_star_maximality();
    criterion_balanced_bipartite();
    criterion_exact_deltas();
    criterion_contraction_monotone();
    criterion_minimal_tree_cleanliness();
    criterion_abc_coincidence();
    criterion_conjectures();
    criterion_oracle_equivalences();
    criterion_report_determinism();

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED" << std::endl;
    return 1;
}
