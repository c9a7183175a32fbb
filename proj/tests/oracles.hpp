#pragma once

// Independent brute-force references. Nothing here calls the routines under
// test; literals are compared field by field with nested loops.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "paracon/kb_model.hpp"
#include "paracon/rational.hpp"

namespace paracon::testing {

inline bool same_atom(const Literal& a, const Literal& b) {
    return a.atom.name() == b.atom.name() && a.atom.args() == b.atom.args();
}

inline bool same_literal(const Literal& a, const Literal& b) { return same_atom(a, b) && a.polarity == b.polarity; }

struct NaiveCounts {
    std::size_t shared = 0;
    std::size_t contradictory = 0;
    std::size_t total = 0;
};

inline NaiveCounts naive_counts(const Entity& k1, const Entity& k2) {
    const std::vector<Literal> a(k1.literals().begin(), k1.literals().end());
    const std::vector<Literal> b(k2.literals().begin(), k2.literals().end());
    NaiveCounts c;
    for (const auto& x : a)
        for (const auto& y : b)
            if (same_literal(x, y)) ++c.shared;
    c.total = a.size() + b.size() - c.shared;

    std::vector<Literal> seen;  // one representative per clashing atom
    for (const auto& x : a)
        for (const auto& y : b)
            if (same_atom(x, y) && x.polarity != y.polarity &&
                std::none_of(seen.begin(), seen.end(), [&](const Literal& s) { return same_atom(s, x); }))
                seen.push_back(x);
    c.contradictory = seen.size();
    return c;
}

inline Rational naive_s_star(const Entity& k1, const Entity& k2) {
    const auto c = naive_counts(k1, k2);
    if (c.total == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(c.shared) - static_cast<std::int64_t>(c.contradictory),
                    static_cast<std::int64_t>(c.total));
}

inline bool naive_consistent(const std::vector<Literal>& lits) {
    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j)
            if (same_atom(lits[i], lits[j]) && lits[i].polarity != lits[j].polarity) return false;
    return true;
}

inline std::vector<Literal> naive_extract(const Entity& k) {
    const std::vector<Literal> lits(k.literals().begin(), k.literals().end());
    std::vector<Literal> out;
    for (const auto& x : lits)
        for (const auto& y : lits)
            if (same_atom(x, y) && x.polarity != y.polarity) {
                out.push_back(x);
                break;
            }
    return out;
}

inline std::vector<Literal> without(const Entity& k, const std::vector<Literal>& removed) {
    std::vector<Literal> out;
    for (const auto& x : k.literals())
        if (std::none_of(removed.begin(), removed.end(), [&](const Literal& r) { return same_literal(r, x); }))
            out.push_back(x);
    return out;
}

// Smallest |R| over R subset of E(K) with K \ R consistent, skipping R = K
// when E(K) = K. Empty optional when no such R exists.
inline std::optional<std::size_t> brute_force_min_repair(const Entity& k) {
    const auto extracted = naive_extract(k);
    const std::size_t m = extracted.size();
    const bool everything = m == k.size();
    std::optional<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        std::vector<Literal> removed;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1U << i)) removed.push_back(extracted[i]);
        if (everything && removed.size() == k.size() && !k.empty()) continue;
        if (!naive_consistent(without(k, removed))) continue;
        if (!best || removed.size() < *best) best = removed.size();
    }
    return best;
}

// No proper subset of `removals` already restores consistency.
inline bool is_minimal_removal(const Entity& k, const std::vector<Literal>& removals) {
    const std::size_t m = removals.size();
    for (std::uint32_t mask = 0; mask + 1 < (1U << m); ++mask) {
        std::vector<Literal> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1U << i)) subset.push_back(removals[i]);
        if (naive_consistent(without(k, subset))) return false;
    }
    return true;
}

// Connected components of the graph {i~j : score(i,j) > theta} by repeated
// transitive closure; block label = smallest reachable index.
template <class Score>
std::vector<std::size_t> closure_labels(std::size_t n, Score score, const Rational& theta) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        reach[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && score(i, j) > theta) reach[i][j] = true;
    }
    for (std::size_t via = 0; via < n; ++via)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][via] && reach[via][j]) reach[i][j] = true;
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
        label[i] = i;
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j]) {
                label[i] = j;
                break;
            }
    }
    return label;
}

}  // namespace paracon::testing
