#include "paracon/hierarchy.hpp"

#include <map>
#include <numeric>

#include "paracon/error.hpp"

namespace paracon {

namespace {

void check_theta(const Rational& theta) {
    if (theta < Rational(-1) || theta > Rational(1))
        throw PreconditionError("threshold " + format_fraction(theta) + " is outside [-1, 1]");
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    // The smaller index stays root so roots are first members in KB order.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> components(const ScoreMatrix& scores, const Rational& theta) {
    const std::size_t n = scores.size();
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (scores(i, j) > theta) sets.unite(i, j);

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = sets.find(i);
        if (root == i) {
            block_of[i] = blocks.size();
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(i);
    }
    return blocks;
}

std::vector<std::vector<std::size_t>> clique_cover(const ScoreMatrix& scores, const Rational& theta) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        bool placed = false;
        for (auto& block : blocks) {
            bool linked = true;
            for (std::size_t m : block) {
                if (!(scores(i, m) > theta)) {
                    linked = false;
                    break;
                }
            }
            if (linked) {
                block.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) blocks.push_back({i});
    }
    return blocks;
}

}  // namespace

SuperCategoryPartition build_supercategories(const KnowledgeBase& kb, const ScoreMatrix& scores,
                                             const Rational& theta, ClusterMode mode) {
    check_theta(theta);
    if (scores.size() != kb.size()) throw PreconditionError("score matrix does not match the knowledge base");

    const auto index_blocks =
        mode == ClusterMode::ConnectedComponents ? components(scores, theta) : clique_cover(scores, theta);

    SuperCategoryPartition p{theta, mode, {}};
    p.blocks.reserve(index_blocks.size());
    for (const auto& members : index_blocks) {
        Block block;
        block.reserve(members.size());
        for (std::size_t m : members) block.push_back(kb[m].id());
        p.blocks.push_back(std::move(block));
    }
    return p;
}

SuperCategoryPartition build_supercategories(const KnowledgeBase& kb, const Rational& theta, ClusterMode mode) {
    check_theta(theta);
    return build_supercategories(kb, score_matrix(kb), theta, mode);
}

DisjunctionReport verify_disjunction(const SuperCategoryPartition& partition, const KnowledgeBase& kb,
                                     const ScoreMatrix& scores) {
    std::vector<std::pair<std::size_t, std::size_t>> members;  // (kb index, block)
    for (std::size_t b = 0; b < partition.blocks.size(); ++b)
        for (const auto& id : partition.blocks[b]) members.emplace_back(kb.index_of(id), b);

    DisjunctionReport report;
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            if (members[x].second == members[y].second) continue;
            ++report.pairs_checked;
            const auto& value = scores(members[x].first, members[y].first);
            if (value > partition.theta)
                report.violations.push_back({kb[members[x].first].id(), kb[members[y].first].id(), value});
        }
    }
    return report;
}

DisjunctionReport verify_disjunction(const SuperCategoryPartition& partition, const KnowledgeBase& kb) {
    return verify_disjunction(partition, kb, score_matrix(kb));
}

HierarchyTrace build_hierarchy(const KnowledgeBase& kb, const std::vector<Rational>& thresholds) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        check_theta(thresholds[i]);
        if (i > 0 && !(thresholds[i - 1] < thresholds[i]))
            throw PreconditionError("thresholds must be strictly ascending");
    }
    HierarchyTrace trace;
    trace.thresholds = thresholds;
    if (thresholds.empty()) return trace;

    const auto scores = score_matrix(kb);
    for (const auto& theta : thresholds)
        trace.partitions.push_back(build_supercategories(kb, scores, theta, ClusterMode::ConnectedComponents));
    return trace;
}

bool refines(const SuperCategoryPartition& finer, const SuperCategoryPartition& coarser) {
    std::map<std::string, std::size_t> coarse_block;
    for (std::size_t b = 0; b < coarser.blocks.size(); ++b)
        for (const auto& id : coarser.blocks[b]) coarse_block[id] = b;

    for (const auto& block : finer.blocks) {
        if (block.empty()) continue;
        auto first = coarse_block.find(block.front());
        if (first == coarse_block.end()) return false;
        for (const auto& id : block) {
            auto it = coarse_block.find(id);
            if (it == coarse_block.end() || it->second != first->second) return false;
        }
    }
    return true;
}

}  // namespace paracon
