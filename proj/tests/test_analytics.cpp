#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kgpart/coverage.hpp"
#include "kgpart/exports.hpp"
#include "kgpart/partition_plan.hpp"
#include "testutil.hpp"

using namespace kgpart;

namespace {

// Minimal hand-built tree: one root with the given leaves as children.
ClusterTree make_flat_tree(const std::vector<std::vector<PredIndex>>& leaf_members,
                           const std::vector<std::uint64_t>& loads) {
    ClusterTree tree;
    tree.capacity = 1;
    std::uint32_t id = 0;
    tree.root.id = id++;
    tree.root.chosen_k = static_cast<std::uint32_t>(leaf_members.size());
    for (const auto& members : leaf_members) {
        ClusterNode leaf;
        leaf.id = id++;
        leaf.depth = 1;
        leaf.members = members;
        leaf.leaf_reason = LeafReason::CapacitySatisfied;
        for (PredIndex p : members) {
            tree.root.members.push_back(p);
            leaf.triple_load += loads[p];
        }
        tree.root.triple_load += leaf.triple_load;
        tree.root.children.push_back(std::move(leaf));
    }
    // root membership matrix: hard 0/1 rows so exports have data to show
    tree.root.memberships = Matrix(tree.root.members.size(), tree.root.children.size(), 0.0);
    tree.root.hard_labels.resize(tree.root.members.size());
    for (std::size_t i = 0; i < tree.root.members.size(); ++i) {
        for (std::size_t c = 0; c < tree.root.children.size(); ++c) {
            const auto& m = tree.root.children[c].members;
            if (std::find(m.begin(), m.end(), tree.root.members[i]) != m.end()) {
                tree.root.memberships.at(i, c) = 1.0;
                tree.root.hard_labels[i] = static_cast<std::uint32_t>(c);
            }
        }
    }
    return tree;
}

}  // namespace

TEST_SUITE_BEGIN("coverage");

TEST_CASE("single-dataset corpus covers every cluster fully") {
    std::vector<std::uint64_t> loads = {5, 7, 11, 13};
    auto tree = make_flat_tree({{0, 1}, {2, 3}}, loads);
    std::vector<std::string> datasets(4, "only");
    auto report = coverage_report(tree, datasets, loads);

    REQUIRE(report.leaves.size() == 2);
    for (const auto& leaf : report.leaves) {
        REQUIRE(leaf.by_dataset.count("only") == 1);
        CHECK(leaf.by_dataset.at("only").fraction == 1.0);
    }
    CHECK(report.spread.at("only") == 2);
}

TEST_CASE("mixed fixture matches a brute-force tally and fractions sum to 1") {
    testutil::Rng rng(15);
    const std::size_t n = 12;
    std::vector<std::uint64_t> loads(n);
    std::vector<std::string> datasets(n);
    for (std::size_t p = 0; p < n; ++p) {
        loads[p] = static_cast<std::uint64_t>(rng.uniform(1, 40));
        datasets[p] = "ds" + std::to_string(rng.uniform(0, 2));
    }
    auto tree = make_flat_tree({{0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10, 11}}, loads);
    auto report = coverage_report(tree, datasets, loads);

    REQUIRE(report.leaves.size() == 3);
    const std::vector<std::vector<PredIndex>> leaves = {
        {0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10, 11}};
    for (std::size_t l = 0; l < 3; ++l) {
        std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> tally;
        std::uint64_t leaf_load = 0;
        for (PredIndex p : leaves[l]) {
            tally[datasets[p]].first += 1;
            tally[datasets[p]].second += loads[p];
            leaf_load += loads[p];
        }
        REQUIRE(report.leaves[l].by_dataset.size() == tally.size());
        double fraction_sum = 0.0;
        for (const auto& [name, share] : report.leaves[l].by_dataset) {
            CHECK(share.predicate_count == tally.at(name).first);
            CHECK(share.triple_count == tally.at(name).second);
            fraction_sum += share.fraction;
        }
        CHECK(report.leaves[l].triple_load == leaf_load);
        CHECK(fraction_sum == doctest::Approx(1.0).epsilon(1e-9));
    }

    // per-dataset predicate counts across clusters sum to that dataset's total
    std::map<std::string, std::uint64_t> per_dataset_total;
    for (const auto& leaf : report.leaves)
        for (const auto& [name, share] : leaf.by_dataset)
            per_dataset_total[name] += share.predicate_count;
    std::map<std::string, std::uint64_t> expected_total;
    for (const auto& d : datasets) ++expected_total[d];
    CHECK(per_dataset_total == expected_total);
}

TEST_CASE("untagged predicate is an input error") {
    std::vector<std::uint64_t> loads = {1, 1, 1, 1};
    auto tree = make_flat_tree({{0, 1}, {2, 3}}, loads);
    std::vector<std::string> datasets = {"a", "", "a", "a"};
    CHECK_THROWS_AS(coverage_report(tree, datasets, loads), Error);
}

TEST_CASE("predicate dataset attribution: first occurrence and shared tags") {
    testutil::Fixture fx;
    fx.add("http://a", "http://only-a", "http://b", 0);
    fx.add("http://a", "http://both", "http://b", 0);
    fx.add("http://c", "http://both", "http://d", 1);
    fx.add("http://c", "http://only-b", "http://d", 1);
    auto index = build_incidence(fx.triples, fx.interner);
    auto labels = predicate_dataset_labels(fx.triples, index, {"alpha", "beta"});

    REQUIRE(labels.size() == 3);
    CHECK(labels[index.predicate_index.at(fx.iri("http://only-a"))] == "alpha");
    CHECK(labels[index.predicate_index.at(fx.iri("http://only-b"))] == "beta");
    CHECK(labels[index.predicate_index.at(fx.iri("http://both"))] == "shared:{alpha+beta}");
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("partition_plan");

TEST_CASE("loads {60,30,10} fit one machine of capacity 100") {
    auto tree = make_flat_tree({{0}, {1}, {2}}, {60, 30, 10});
    auto plan = partition_plan(tree, 100);
    REQUIRE(plan.machines.size() == 1);
    CHECK(plan.machines[0].total_load == 100);
    CHECK(!plan.machines[0].over_capacity);
}

TEST_CASE("loads {60,50} need two machines of capacity 100") {
    auto tree = make_flat_tree({{0}, {1}}, {60, 50});
    auto plan = partition_plan(tree, 100);
    CHECK(plan.machines.size() == 2);
}

TEST_CASE("an over-capacity leaf gets its own flagged machine") {
    auto tree = make_flat_tree({{0}, {1}}, {250, 10});
    auto plan = partition_plan(tree, 100);
    REQUIRE(plan.machines.size() == 2);
    CHECK(plan.machines[0].over_capacity);
    CHECK(plan.machines[0].total_load == 250);
    CHECK(!plan.machines[1].over_capacity);
}

TEST_CASE("12 random leaves: within optimal+1 bins, no violations, each leaf once") {
    for (int trial = 0; trial < 30; ++trial) {
        testutil::Rng rng(7000 + trial);
        const std::size_t n = 12;
        std::vector<std::uint64_t> loads(n);
        std::vector<std::vector<PredIndex>> members(n);
        for (std::size_t i = 0; i < n; ++i) {
            loads[i] = static_cast<std::uint64_t>(rng.uniform(1, 70));
            members[i] = {static_cast<PredIndex>(i)};
        }
        const std::uint64_t capacity = 100;
        auto tree = make_flat_tree(members, loads);
        auto plan = partition_plan(tree, capacity);

        std::set<std::uint32_t> assigned;
        for (const auto& machine : plan.machines) {
            std::uint64_t sum = 0;
            for (const auto& leaf : machine.leaves) {
                CHECK(assigned.insert(leaf.leaf_id).second);
                sum += leaf.load;
            }
            CHECK(sum == machine.total_load);
            if (!machine.over_capacity) CHECK(machine.total_load <= capacity);
        }
        CHECK(assigned.size() == n);
        CHECK(plan.machines.size() <= testutil::optimal_bin_count(loads, capacity) + 1);
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("exports");

TEST_CASE("empty tree produces valid empty reports") {
    ClusterTree tree;
    tree.capacity = 10;
    tree.root.leaf_reason = LeafReason::CapacitySatisfied;
    auto report = coverage_report(tree, {}, {});
    CHECK(report.leaves.size() == 1);  // the empty root leaf
    const std::string json = coverage_to_json(report);
    CHECK(json.find("\"clusters\"") != std::string::npos);
    auto plan = partition_plan(tree, 10);
    CHECK(plan_to_csv(plan).rfind("machine,leaf", 0) == 0);
    CHECK(tree_to_json(tree, {}).find("\"leaf_count\": 1") != std::string::npos);
}

TEST_CASE("exports are byte-deterministic") {
    std::vector<std::uint64_t> loads = {5, 6, 7, 8};
    auto tree = make_flat_tree({{0, 2}, {1, 3}}, loads);
    std::vector<std::string> datasets = {"a", "b", "a", "b"};
    auto report = coverage_report(tree, datasets, loads);
    auto plan = partition_plan(tree, 20);
    CHECK(coverage_to_json(report) == coverage_to_json(report));
    CHECK(plan_to_csv(plan) == plan_to_csv(plan));
    CHECK(tree_to_json(tree, {"p0", "p1", "p2", "p3"}) ==
          tree_to_json(tree, {"p0", "p1", "p2", "p3"}));
    CHECK(coverage_to_dot(tree, {"p0", "p1", "p2", "p3"}, datasets) ==
          coverage_to_dot(tree, {"p0", "p1", "p2", "p3"}, datasets));
}

TEST_CASE("plan CSV column sums match the in-memory plan") {
    testutil::Rng rng(3);
    std::vector<std::uint64_t> loads;
    std::vector<std::vector<PredIndex>> members;
    for (PredIndex i = 0; i < 9; ++i) {
        loads.push_back(static_cast<std::uint64_t>(rng.uniform(5, 90)));
        members.push_back({i});
    }
    auto tree = make_flat_tree(members, loads);
    auto plan = partition_plan(tree, 120);
    const std::string csv = plan_to_csv(plan);

    std::uint64_t csv_load_sum = 0;
    std::size_t csv_rows = 0;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        ++csv_rows;
        // machine,leaf,leaf_load,machine_load,over_capacity
        std::size_t p1 = line.find(',');
        std::size_t p2 = line.find(',', p1 + 1);
        std::size_t p3 = line.find(',', p2 + 1);
        csv_load_sum += std::stoull(line.substr(p2 + 1, p3 - p2 - 1));
    }
    std::uint64_t expected = 0;
    for (auto l : loads) expected += l;
    CHECK(csv_load_sum == expected);
    CHECK(csv_rows == loads.size());
}

TEST_CASE("coverage JSON reparses to the same document") {
    std::vector<std::uint64_t> loads = {4, 9, 2};
    auto tree = make_flat_tree({{0, 1}, {2}}, loads);
    std::vector<std::string> datasets = {"x", "y", "x"};
    auto report = coverage_report(tree, datasets, loads);
    const std::string once = coverage_to_json(report);
    auto parsed = nlohmann::json::parse(once);
    CHECK(parsed.dump(2) + "\n" == once);
}

TEST_SUITE_END();
