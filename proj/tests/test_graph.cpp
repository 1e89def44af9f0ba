#include "doctest.h"
#include "kgpart/incidence.hpp"
#include "kgpart/levels.hpp"
#include "kgpart/projection.hpp"
#include "testutil.hpp"

using namespace kgpart;

TEST_SUITE_BEGIN("incidence");

TEST_CASE("single triple") {
    testutil::Fixture fx;
    fx.add("http://s", "http://p", "http://o");
    auto index = build_incidence(fx.triples, fx.interner);
    REQUIRE(index.size() == 1);
    CHECK(index.neighbors[0].size() == 2);
    CHECK(index.triple_count[0] == 1);
}

TEST_CASE("chained triples union their entities") {
    testutil::Fixture fx;
    fx.add("http://a", "http://p", "http://b");
    fx.add("http://b", "http://p", "http://c");
    auto index = build_incidence(fx.triples, fx.interner);
    REQUIRE(index.size() == 1);
    CHECK(index.neighbors[0].size() == 3);
    CHECK(index.triple_count[0] == 2);
}

TEST_CASE("12-triple fixture equals brute-force set construction") {
    testutil::Fixture fx;
    testutil::Rng rng(5);
    while (fx.triples.size() < 12) {
        fx.add("http://e" + std::to_string(rng.uniform(0, 5)),
               "http://p" + std::to_string(rng.uniform(0, 2)),
               "http://e" + std::to_string(rng.uniform(0, 5)));
    }
    auto index = build_incidence(fx.triples, fx.interner);
    auto oracle = testutil::oracle_incidence(fx.triples);
    REQUIRE(index.size() == oracle.size());
    for (PredIndex p = 0; p < index.size(); ++p) {
        const auto& expected = oracle.at(index.predicates[p]);
        CHECK(std::set<TermId>(index.neighbors[p].begin(), index.neighbors[p].end()) ==
              expected);
    }
}

TEST_CASE("incidence and reverse map are bidirectional; counts sum to total") {
    testutil::Fixture fx;
    testutil::Rng rng(23);
    testutil::random_corpus(fx, rng, 8, 24, 100);
    auto index = build_incidence(fx.triples, fx.interner);

    std::uint64_t count_sum = 0;
    for (PredIndex p = 0; p < index.size(); ++p) {
        count_sum += index.triple_count[p];
        CHECK(!index.neighbors[p].empty());
        for (TermId e : index.neighbors[p]) {
            const auto& preds = index.entity_predicates.at(e);
            CHECK(std::binary_search(preds.begin(), preds.end(), p));
        }
    }
    for (const auto& [entity, preds] : index.entity_predicates) {
        for (PredIndex p : preds) {
            const auto& set = index.neighbors[p];
            CHECK(std::binary_search(set.begin(), set.end(), entity));
        }
    }
    CHECK(count_sum == index.total_triples);
    CHECK(index.total_triples == fx.triples.size());
}

TEST_CASE("rows are ordered by ascending predicate IRI") {
    testutil::Fixture fx;
    fx.add("http://s", "http://z", "http://o");
    fx.add("http://s", "http://a", "http://o");
    fx.add("http://s", "http://m", "http://o");
    auto index = build_incidence(fx.triples, fx.interner);
    REQUIRE(index.size() == 3);
    CHECK(index.iri(0) == "http://a");
    CHECK(index.iri(1) == "http://m");
    CHECK(index.iri(2) == "http://z");
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("projection");

TEST_CASE("disjoint entity sets produce no edge") {
    testutil::Fixture fx;
    fx.add("http://a1", "http://p1", "http://a2");
    fx.add("http://b1", "http://p2", "http://b2");
    auto proj = project_predicates(build_incidence(fx.triples, fx.interner));
    CHECK(proj.edges.empty());
}

TEST_CASE("one shared entity gives shared_count 1") {
    testutil::Fixture fx;
    fx.add("http://a", "http://p1", "http://b");
    fx.add("http://b", "http://p2", "http://c");
    auto proj = project_predicates(build_incidence(fx.triples, fx.interner));
    REQUIRE(proj.edges.size() == 1);
    CHECK(proj.edges[0].shared_count == 1);
    CHECK(proj.has_edge(0, 1));
    CHECK(!proj.has_edge(0, 0));
}

TEST_CASE("6-predicate fixture equals the all-pairs intersection oracle") {
    testutil::Fixture fx;
    testutil::Rng rng(31);
    testutil::random_corpus(fx, rng, 6, 10, 60);
    auto index = build_incidence(fx.triples, fx.interner);
    auto proj = project_predicates(index);
    auto oracle = testutil::oracle_projection(fx.triples);

    REQUIRE(proj.edges.size() == oracle.size());
    for (const auto& e : proj.edges) {
        const TermId ta = index.predicates[e.a];
        const TermId tb = index.predicates[e.b];
        auto it = oracle.find({std::min(ta, tb), std::max(ta, tb)});
        REQUIRE(it != oracle.end());
        CHECK(e.shared_count == it->second);
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("levels");

TEST_CASE("adjacent predicates are level 1") {
    auto proj = testutil::make_projection(2, {{0, 1}});
    auto levels = neighbor_levels(proj, 4);
    CHECK(levels.at(0, 1) == 1);
    CHECK(levels.at(0, 0) == 0);
}

TEST_CASE("path of length two gives level 2") {
    auto proj = testutil::make_projection(3, {{0, 1}, {1, 2}});
    auto levels = neighbor_levels(proj, 4);
    CHECK(levels.at(0, 2) == 2);
    CHECK(levels.at(2, 0) == 2);
}

TEST_CASE("random 10-node projections match Floyd-Warshall") {
    for (int trial = 0; trial < 20; ++trial) {
        testutil::Rng rng(100 + trial);
        const std::uint32_t n = 10;
        std::vector<std::pair<PredIndex, PredIndex>> edges;
        for (PredIndex i = 0; i < n; ++i)
            for (PredIndex j = i + 1; j < n; ++j)
                if (rng.real() < 0.2) edges.push_back({i, j});
        auto proj = testutil::make_projection(n, edges);
        auto levels = neighbor_levels(proj, n);
        auto oracle = testutil::floyd_warshall(n, proj.adjacency);
        for (PredIndex i = 0; i < n; ++i)
            for (PredIndex j = 0; j < n; ++j) {
                const std::uint64_t expected = oracle[i][j];
                if (expected == testutil::kUnreachableOracle || expected > n)
                    CHECK(levels.at(i, j) == kUnreachable);
                else
                    CHECK(levels.at(i, j) == expected);
            }
    }
}

TEST_CASE("levels are symmetric and capped at lmax") {
    testutil::Rng rng(77);
    const std::uint32_t n = 14;
    std::vector<std::pair<PredIndex, PredIndex>> edges;
    for (PredIndex i = 1; i < n; ++i) edges.push_back({static_cast<PredIndex>(i - 1), i});
    auto proj = testutil::make_projection(n, edges);
    auto levels = neighbor_levels(proj, 3);
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = 0; j < n; ++j) {
            CHECK(levels.at(i, j) == levels.at(j, i));
            if (levels.at(i, j) != kUnreachable) CHECK(levels.at(i, j) <= 3);
        }
    CHECK(levels.at(0, 3) == 3);
    CHECK(levels.at(0, 4) == kUnreachable);
}

TEST_CASE("raising lmax only converts unreachable entries") {
    testutil::Rng rng(41);
    const std::uint32_t n = 12;
    std::vector<std::pair<PredIndex, PredIndex>> edges;
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = i + 1; j < n; ++j)
            if (rng.real() < 0.15) edges.push_back({i, j});
    auto proj = testutil::make_projection(n, edges);
    auto low = neighbor_levels(proj, 2);
    auto high = neighbor_levels(proj, 5);
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = 0; j < n; ++j) {
            if (low.at(i, j) != kUnreachable) CHECK(low.at(i, j) == high.at(i, j));
        }
}

TEST_CASE("reachability agrees with union-find at full depth") {
    testutil::Rng rng(59);
    const std::uint32_t n = 16;
    std::vector<std::pair<PredIndex, PredIndex>> edges;
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = i + 1; j < n; ++j)
            if (rng.real() < 0.1) edges.push_back({i, j});
    auto proj = testutil::make_projection(n, edges);
    auto levels = neighbor_levels(proj, n);  // n >= any finite path length

    testutil::UnionFind uf(n);
    for (auto [a, b] : edges) uf.unite(a, b);
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = 0; j < n; ++j)
            CHECK(reachable(i, j, levels) == (uf.find(i) == uf.find(j)));
}

TEST_CASE("two isolated components are mutually unreachable") {
    auto proj = testutil::make_projection(4, {{0, 1}, {2, 3}});
    auto levels = neighbor_levels(proj, 4);
    CHECK(reachable(0, 1, levels));
    CHECK(!reachable(0, 2, levels));
    CHECK(!reachable(1, 3, levels));
    CHECK(reachable(2, 2, levels));
}

TEST_CASE("triangle property holds for finite levels") {
    testutil::Rng rng(91);
    const std::uint32_t n = 10;
    std::vector<std::pair<PredIndex, PredIndex>> edges;
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = i + 1; j < n; ++j)
            if (rng.real() < 0.25) edges.push_back({i, j});
    auto proj = testutil::make_projection(n, edges);
    auto levels = neighbor_levels(proj, n);
    for (PredIndex i = 0; i < n; ++i)
        for (PredIndex j = 0; j < n; ++j)
            for (PredIndex k = 0; k < n; ++k) {
                if (levels.at(i, j) == kUnreachable || levels.at(i, k) == kUnreachable ||
                    levels.at(k, j) == kUnreachable)
                    continue;
                CHECK(levels.at(i, j) <= levels.at(i, k) + levels.at(k, j));
            }
}

TEST_SUITE_END();
