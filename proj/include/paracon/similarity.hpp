#pragma once

#include <cstddef>
#include <vector>

#include "paracon/kb_model.hpp"
#include "paracon/rational.hpp"

namespace paracon {

// Shared literals, cross-pair contradictory atoms and the literal union for
// one ordered pair of entities.
struct PropertyPartition {
    LiteralSet shared;
    AtomSet contradictory;
    LiteralSet total;

    friend bool operator==(const PropertyPartition&, const PropertyPartition&) = default;
};

// S* = S+ - D+-, with S+ = |shared|/|total| and D+- = |contradictory|/|total|.
struct SimilarityBreakdown {
    Rational s_plus;
    Rational d_pm;
    Rational s_star;
    PropertyPartition partition;

    friend bool operator==(const SimilarityBreakdown&, const SimilarityBreakdown&) = default;
};

// Measures of a pair whose literal union is empty.
inline const Rational kEmptyTotalSimilarity{0};
inline const Rational kEmptyUnionJaccard{1};

PropertyPartition partition_properties(const Entity& k1, const Entity& k2);

// Measures from precomputed counts. Shared by the set-algebra and the
// bit-packed routes so the empty-total convention lives in one place.
SimilarityBreakdown breakdown_from_counts(std::size_t shared, std::size_t contradictory, std::size_t total);

SimilarityBreakdown s_star(const Entity& k1, const Entity& k2);

enum class JaccardMode { PositiveOnly, AllLiterals };

// PositiveOnly compares the atoms of the positive literals only.
Rational jaccard(const Entity& k1, const Entity& k2, JaccardMode mode);

// Dense symmetric n x n matrix of full breakdowns, in KB order.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    SimilarityMatrix(std::size_t n, std::vector<SimilarityBreakdown> cells) : n_(n), cells_(std::move(cells)) {}

    std::size_t size() const noexcept { return n_; }
    const SimilarityBreakdown& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<SimilarityBreakdown> cells_;
};

SimilarityMatrix similarity_matrix(const KnowledgeBase& kb);

}  // namespace paracon
