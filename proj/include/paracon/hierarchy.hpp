#pragma once

#include <string>
#include <vector>

#include "paracon/kb_model.hpp"
#include "paracon/kernels.hpp"
#include "paracon/rational.hpp"

namespace paracon {

// Two entities are linked in the theta-graph iff S* > theta (strictly).
enum class ClusterMode {
    // Blocks are connected components of the theta-graph.
    ConnectedComponents,
    // Greedy clique cover in KB order: each entity joins the first block
    // whose every member it is linked to.
    StrictClique,
};

using Block = std::vector<std::string>;

// Disjoint blocks covering the KB. Members follow KB order and blocks are
// ordered by the KB position of their first member.
struct SuperCategoryPartition {
    Rational theta;
    ClusterMode mode = ClusterMode::ConnectedComponents;
    std::vector<Block> blocks;

    friend bool operator==(const SuperCategoryPartition&, const SuperCategoryPartition&) = default;
};

// Throws PreconditionError unless theta is in [-1, 1].
SuperCategoryPartition build_supercategories(const KnowledgeBase& kb, const Rational& theta,
                                             ClusterMode mode = ClusterMode::ConnectedComponents);
SuperCategoryPartition build_supercategories(const KnowledgeBase& kb, const ScoreMatrix& scores,
                                             const Rational& theta, ClusterMode mode);

struct DisjunctionViolation {
    std::string first;
    std::string second;
    Rational s_star;

    friend bool operator==(const DisjunctionViolation&, const DisjunctionViolation&) = default;
};

struct DisjunctionReport {
    std::size_t pairs_checked = 0;
    std::vector<DisjunctionViolation> violations;

    bool holds() const noexcept { return violations.empty(); }
};

// Lists every cross-block pair with S* > theta. Throws UnknownIdError when
// the partition names an id missing from kb.
DisjunctionReport verify_disjunction(const SuperCategoryPartition& partition, const KnowledgeBase& kb);
DisjunctionReport verify_disjunction(const SuperCategoryPartition& partition, const KnowledgeBase& kb,
                                     const ScoreMatrix& scores);

struct HierarchyTrace {
    std::vector<Rational> thresholds;
    std::vector<SuperCategoryPartition> partitions;
};

// ConnectedComponents partition per threshold. Throws PreconditionError on
// thresholds that are not strictly ascending or fall outside [-1, 1].
HierarchyTrace build_hierarchy(const KnowledgeBase& kb, const std::vector<Rational>& thresholds);

// Every block of `finer` lies inside some block of `coarser`.
bool refines(const SuperCategoryPartition& finer, const SuperCategoryPartition& coarser);

}  // namespace paracon
