#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wsz/gen6.hpp"
#include "wsz/invariants.hpp"
#include "wsz/treegen.hpp"

using namespace wsz;

namespace {

Graph make_chair() {  // star S4 with one edge subdivided: 0 is the center
    return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("wiener") {
    CHECK(wiener(make_path(2)).as_integer() == 1);
    CHECK(wiener(make_path(4)).as_integer() == 10);
    CHECK(wiener(make_cycle(4)).as_integer() == 8);
    CHECK_THROWS_AS(wiener(build_graph(3, {{0, 1}})), Error);
}

TEST_CASE("szeged") {
    CHECK(szeged(make_path(4)).as_integer() == 10);
    CHECK(szeged(make_cycle(4)).as_integer() == 16);
}

TEST_CASE("szeged equals wiener on trees") {
    for (int n = 2; n <= 9; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) {
            Graph t = decode(code);
            CHECK(szeged(t).as_integer() == wiener(t).as_integer());
        }
    }
}

TEST_CASE("weighted szeged") {
    CHECK(weighted_szeged(make_path(2)).as_integer() == 2);
    CHECK(weighted_szeged(make_path(4)).as_integer() == 34);
    CHECK(weighted_szeged(make_star(4)).as_integer() == 36);
    CHECK(weighted_szeged(make_cycle(4)).as_integer() == 64);
    CHECK(weighted_szeged(make_chair()).as_integer() == 74);
    CHECK(weighted_szeged(make_star(5)).as_integer() == 80);
    CHECK(weighted_szeged(make_path(5)).as_integer() == 72);
    // K4: every split is 1/1 with two equidistant vertices
    CHECK(weighted_szeged(parse_graph6("C~")).as_integer() == 36);
}

TEST_CASE("weighted szeged matches the bfs-only route on trees and small graphs") {
    for (int n = 2; n <= 9; ++n) {
        TreeEnumerator trees(n);
        TreeCode code;
        while (trees.next(code)) {
            Graph t = decode(code);
            CHECK(weighted_szeged(t).as_integer() == oracle::wsz_bfs(t));
        }
    }
    for (const auto& g : enumerate_connected_graphs(5))
        CHECK(weighted_szeged(g).as_integer() == oracle::wsz_bfs(g));
}

TEST_CASE("abc") {
    CHECK(abc(make_path(2)).as_real() == doctest::Approx(0.0));
    CHECK(abc(make_path(4)).as_real() == doctest::Approx(3.0 * std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(abc(make_star(4)).as_real() == doctest::Approx(3.0 * std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(abc(build_graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("star closed form") {
    CHECK(star_wsz_closed_form(2).as_integer() == 2);
    CHECK(star_wsz_closed_form(4).as_integer() == 36);
    CHECK(star_wsz_closed_form(10).as_integer() == 810);
    for (int n = 2; n <= 100; ++n)
        CHECK(star_wsz_closed_form(n).as_integer() == weighted_szeged(make_star(n)).as_integer());
}

TEST_CASE("balanced bipartite closed form") {
    CHECK(balanced_bipartite_wsz_closed_form(2).as_integer() == 2);
    CHECK(balanced_bipartite_wsz_closed_form(4).as_integer() == 64);
    CHECK(balanced_bipartite_wsz_closed_form(5).as_integer() == 180);
    for (int n = 2; n <= 60; ++n)
        CHECK(balanced_bipartite_wsz_closed_form(n).as_integer() ==
              weighted_szeged(make_balanced_bipartite(n)).as_integer());
}

TEST_CASE("balanced bipartite is the unique bipartite maximum up to order 6") {
    for (int n = 3; n <= 6; ++n) {
        auto bound = balanced_bipartite_wsz_closed_form(n).as_integer();
        auto target = canonical_form(make_balanced_bipartite(n));
        int hits = 0;
        for (const auto& g : enumerate_connected_graphs(n)) {
            if (!classify(g).bipartition) continue;
            auto value = weighted_szeged(g).as_integer();
            CHECK(value <= bound);
            if (value == bound) {
                CHECK(canonical_form(g) == target);
                ++hits;
            }
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(1, 2) == 3);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(std::int64_t{1} << 62, std::int64_t{1} << 62), Error);
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), Error);
    try {
        star_wsz_closed_form(3'000'000);
        FAIL("expected overflow");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::overflow);
    }
}

TEST_CASE("disconnected input is an error for every index") {
    auto split = build_graph(4, {{0, 1}, {2, 3}});
    for (auto fn : {wiener, szeged, weighted_szeged}) {
        try {
            fn(split);
            FAIL("expected disconnected");
        } catch (const Error& err) {
            CHECK(err.code() == Errc::disconnected);
        }
    }
}

TEST_CASE("index value accessors") {
    auto v = IndexValue::of_integer(IndexKind::wiener, 7);
    CHECK(v.integral());
    CHECK(v.as_integer() == 7);
    CHECK(v.as_real() == doctest::Approx(7.0));
    auto r = IndexValue::of_real(IndexKind::abc, 1.5);
    CHECK_FALSE(r.integral());
    CHECK_THROWS_AS(r.as_integer(), Error);
}
