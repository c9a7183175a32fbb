#include "paracon/similarity.hpp"

#include <algorithm>
#include <iterator>

#include "paracon/error.hpp"

namespace paracon {

PropertyPartition partition_properties(const Entity& k1, const Entity& k2) {
    PropertyPartition p;
    const auto& a = k1.literals();
    const auto& b = k2.literals();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(p.shared, p.shared.end()));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(p.total, p.total.end()));
    for (const auto& lit : a)
        if (b.count(complement(lit))) p.contradictory.insert(lit.atom);
    return p;
}

SimilarityBreakdown breakdown_from_counts(std::size_t shared, std::size_t contradictory, std::size_t total) {
    SimilarityBreakdown r;
    if (total == 0) {
        r.s_plus = kEmptyTotalSimilarity;
        r.d_pm = kEmptyTotalSimilarity;
        r.s_star = kEmptyTotalSimilarity;
        return r;
    }
    const auto den = static_cast<std::int64_t>(total);
    r.s_plus = Rational(static_cast<std::int64_t>(shared), den);
    r.d_pm = Rational(static_cast<std::int64_t>(contradictory), den);
    r.s_star = r.s_plus - r.d_pm;
    return r;
}

SimilarityBreakdown s_star(const Entity& k1, const Entity& k2) {
    auto partition = partition_properties(k1, k2);
    auto r = breakdown_from_counts(partition.shared.size(), partition.contradictory.size(), partition.total.size());
    r.partition = std::move(partition);
    return r;
}

namespace {

AtomSet positive_atoms(const Entity& k) {
    AtomSet out;
    for (const auto& lit : k.literals())
        if (lit.is_positive()) out.insert(lit.atom);
    return out;
}

template <class Set>
Rational jaccard_of(const Set& a, const Set& b) {
    std::size_t common = 0;
    for (const auto& x : a) common += b.count(x);
    const std::size_t united = a.size() + b.size() - common;
    if (united == 0) return kEmptyUnionJaccard;
    return Rational(static_cast<std::int64_t>(common), static_cast<std::int64_t>(united));
}

}  // namespace

Rational jaccard(const Entity& k1, const Entity& k2, JaccardMode mode) {
    if (mode == JaccardMode::PositiveOnly) return jaccard_of(positive_atoms(k1), positive_atoms(k2));
    return jaccard_of(k1.literals(), k2.literals());
}

SimilarityMatrix similarity_matrix(const KnowledgeBase& kb) {
    if (kb.empty()) throw PreconditionError("similarity matrix needs at least one entity");
    const std::size_t n = kb.size();
    std::vector<SimilarityBreakdown> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cells[i * n + j] = s_star(kb[i], kb[j]);
            if (j != i) cells[j * n + i] = s_star(kb[j], kb[i]);
        }
    }
    return SimilarityMatrix(n, std::move(cells));
}

}  // namespace paracon
