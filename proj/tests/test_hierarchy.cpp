#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "paracon/contradiction.hpp"
#include "paracon/error.hpp"
#include "paracon/hierarchy.hpp"

using namespace paracon;
using namespace paracon::testing;

namespace {

// Block structure from oracle labels, in the same canonical order.
std::vector<Block> blocks_from_labels(const KnowledgeBase& kb, const std::vector<std::size_t>& label) {
    std::vector<Block> blocks;
    std::vector<std::size_t> slot(kb.size(), SIZE_MAX);
    for (std::size_t i = 0; i < kb.size(); ++i) {
        if (slot[label[i]] == SIZE_MAX) {
            slot[label[i]] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[label[i]]].push_back(kb[i].id());
    }
    return blocks;
}

}  // namespace

TEST_CASE("medical super-categories at 2/5") {
    const auto kb = medical_kb();
    const auto p = build_supercategories(kb, Rational(2, 5));
    CHECK(p.blocks == std::vector<Block>{{"K1", "K3"}, {"K2"}, {"K4"}, {"K5"}});
    CHECK(p.theta == Rational(2, 5));
    const auto check = verify_disjunction(p, kb);
    CHECK(check.holds());
    CHECK(check.pairs_checked == 9);
}

TEST_CASE("extreme thresholds") {
    const auto kb = medical_kb();
    CHECK(build_supercategories(kb, Rational(1)).blocks ==
          std::vector<Block>{{"K1"}, {"K2"}, {"K3"}, {"K4"}, {"K5"}});
    CHECK(build_supercategories(kb, Rational(-1)).blocks == std::vector<Block>{{"K1", "K2", "K3", "K4", "K5"}});
    CHECK_THROWS_AS(build_supercategories(kb, Rational(11, 10)), PreconditionError);
    CHECK_THROWS_AS(build_supercategories(kb, Rational(-2)), PreconditionError);
}

TEST_CASE("edges need strictly more than theta") {
    const auto kb = medical_kb();
    // S*(K1,K3) = 1/2 exactly.
    CHECK(build_supercategories(kb, Rational(1, 2)).blocks.size() == 5);
    CHECK(build_supercategories(kb, Rational(49, 100)).blocks.size() == 4);
}

TEST_CASE("disjunction violations are reported, not thrown") {
    const auto kb = medical_kb();
    SuperCategoryPartition split{Rational(2, 5), ClusterMode::ConnectedComponents,
                                 {{"K1"}, {"K3"}, {"K2"}, {"K4"}, {"K5"}}};
    const auto report = verify_disjunction(split, kb);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0] == DisjunctionViolation{"K1", "K3", Rational(1, 2)});

    SuperCategoryPartition one{Rational(2, 5), ClusterMode::ConnectedComponents, {{"K1", "K2", "K3", "K4", "K5"}}};
    CHECK(verify_disjunction(one, kb).holds());
    CHECK(verify_disjunction(one, kb).pairs_checked == 0);

    SuperCategoryPartition stranger{Rational(0), ClusterMode::ConnectedComponents, {{"K1"}, {"Z"}}};
    CHECK_THROWS_AS(verify_disjunction(stranger, kb), UnknownIdError);
}

TEST_CASE("medical hierarchy across ascending thresholds") {
    const auto kb = medical_kb();
    const auto trace = build_hierarchy(kb, {Rational(-1, 6), Rational(0), Rational(2, 5)});
    REQUIRE(trace.partitions.size() == 3);
    // Above -1/6 every zero-valued pair links, chaining all five records.
    CHECK(trace.partitions[0].blocks == std::vector<Block>{{"K1", "K2", "K3", "K4", "K5"}});
    CHECK(trace.partitions[1].blocks == std::vector<Block>{{"K1", "K3"}, {"K2"}, {"K4"}, {"K5"}});
    CHECK(trace.partitions[2].blocks == std::vector<Block>{{"K1", "K3"}, {"K2"}, {"K4"}, {"K5"}});
    CHECK(refines(trace.partitions[1], trace.partitions[0]));
    CHECK(refines(trace.partitions[2], trace.partitions[1]));
    CHECK_FALSE(refines(trace.partitions[0], trace.partitions[1]));

    const auto single = build_hierarchy(kb, {Rational(2, 5)});
    REQUIRE(single.partitions.size() == 1);
    CHECK(single.partitions[0] == build_supercategories(kb, Rational(2, 5)));
    CHECK(build_hierarchy(kb, {}).partitions.empty());

    CHECK_THROWS_AS(build_hierarchy(kb, {Rational(0), Rational(0)}), PreconditionError);
    CHECK_THROWS_AS(build_hierarchy(kb, {Rational(1, 2), Rational(0)}), PreconditionError);
    CHECK_THROWS_AS(build_hierarchy(kb, {Rational(0), Rational(3)}), PreconditionError);
}

TEST_CASE("strict clique mode") {
    // A-B and B-C linked, A-C not: components chain them, cliques do not.
    const KnowledgeBase kb({
        Entity("A", {pos("x"), pos("y")}),
        Entity("B", {pos("x"), pos("y"), pos("z"), pos("w")}),
        Entity("C", {pos("z"), pos("w")}),
    });
    const Rational theta(1, 3);
    CHECK(build_supercategories(kb, theta, ClusterMode::ConnectedComponents).blocks ==
          std::vector<Block>{{"A", "B", "C"}});
    const auto cliques = build_supercategories(kb, theta, ClusterMode::StrictClique);
    CHECK(cliques.blocks == std::vector<Block>{{"A", "B"}, {"C"}});
    CHECK(cliques.mode == ClusterMode::StrictClique);

    const auto medical = medical_kb();
    CHECK(build_supercategories(medical, Rational(2, 5), ClusterMode::StrictClique).blocks ==
          std::vector<Block>{{"K1", "K3"}, {"K2"}, {"K4"}, {"K5"}});
}

TEST_CASE("partition properties on random knowledge bases") {
    std::mt19937_64 rng(1234);
    const std::vector<Rational> grid{Rational(-1), Rational(-1, 2), Rational(-1, 5), Rational(0),
                                     Rational(1, 4), Rational(2, 5), Rational(1, 2), Rational(1)};
    for (int trial = 0; trial < 300; ++trial) {
        const auto kb = random_kb(rng);
        const auto scores = score_matrix(kb);
        const auto trace = build_hierarchy(kb, grid);
        for (std::size_t t = 0; t < grid.size(); ++t) {
            const auto& p = trace.partitions[t];
            // Cover and disjointness.
            std::multiset<std::string> ids;
            for (const auto& b : p.blocks) {
                CHECK_FALSE(b.empty());
                ids.insert(b.begin(), b.end());
            }
            CHECK(ids.size() == kb.size());
            for (const auto& e : kb) CHECK(ids.count(e.id()) == 1);

            CHECK(verify_disjunction(p, kb, scores).holds());
            CHECK(p.blocks == blocks_from_labels(kb, closure_labels(kb.size(), [&](auto i, auto j) {
                                                     return naive_s_star(kb[i], kb[j]);
                                                 }, grid[t])));
            if (t > 0) CHECK(refines(p, trace.partitions[t - 1]));

            const auto cliques = build_supercategories(kb, scores, grid[t], ClusterMode::StrictClique);
            CHECK(refines(cliques, p));
            for (const auto& b : cliques.blocks)
                for (std::size_t x = 0; x < b.size(); ++x)
                    for (std::size_t y = x + 1; y < b.size(); ++y)
                        CHECK(scores(kb.index_of(b[x]), kb.index_of(b[y])) > grid[t]);
        }
        // Determinism.
        CHECK(build_hierarchy(kb, grid).partitions == trace.partitions);
    }
}

TEST_CASE("repairing every member of a block leaves the block consistent") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto kb = random_kb(rng);
        const auto p = build_supercategories(kb, Rational(0));
        for (const auto& block : p.blocks) {
            for (const auto& id : block) {
                const auto& k = kb.at(id);
                if (!is_repairable(k)) continue;
                const auto repaired = apply_repair(k, minimal_repairs(k, RepairPolicy::DropNegative).plans.front());
                CHECK(is_internally_consistent(repaired));
                // Only contradiction-involved literals go.
                for (const auto& l : k.literals())
                    if (!repaired.contains(l)) CHECK(k.contains(complement(l)));
            }
        }
    }
}
