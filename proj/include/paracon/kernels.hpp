#pragma once

// Bit-packed pair counting for whole-KB similarity. Every kernel must return
// exactly the counts that partition_properties() would produce; the scalar
// kernel is the reference and vector kernels are checked against it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "paracon/kb_model.hpp"
#include "paracon/rational.hpp"

namespace paracon {

struct PairCounts {
    std::uint64_t shared = 0;
    std::uint64_t contradictory = 0;
    std::uint64_t total = 0;

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

enum class KernelKind { Scalar, Avx2, Neon };

std::string_view kernel_name(KernelKind kind);
// Compiled in and supported by the running CPU.
bool kernel_available(KernelKind kind);
std::vector<KernelKind> available_kernels();
KernelKind best_kernel();

// One positive and one negative bit plane per entity over the KB's atom
// universe (atoms numbered in sorted order).
class PackedKb {
public:
    explicit PackedKb(const KnowledgeBase& kb);

    std::size_t entity_count() const noexcept { return entities_; }
    std::size_t atom_count() const noexcept { return atoms_; }
    std::size_t words() const noexcept { return words_; }

    std::span<const std::uint64_t> positive(std::size_t i) const {
        return {bits_.data() + (2 * i) * words_, words_};
    }
    std::span<const std::uint64_t> negative(std::size_t i) const {
        return {bits_.data() + (2 * i + 1) * words_, words_};
    }

private:
    std::size_t entities_ = 0;
    std::size_t atoms_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// shared = |P1&P2| + |N1&N2|, total = |P1|P2| + |N1|N2|,
// contradictory = |(P1&N2) | (N1&P2)|. All four spans have equal length.
PairCounts count_pair(KernelKind kind,
                      std::span<const std::uint64_t> pos1, std::span<const std::uint64_t> neg1,
                      std::span<const std::uint64_t> pos2, std::span<const std::uint64_t> neg2);

// Row-major n x n, symmetric.
std::vector<PairCounts> count_matrix(const PackedKb& packed, KernelKind kind);

// S* values only, for clustering over large KBs.
class ScoreMatrix {
public:
    ScoreMatrix() = default;
    ScoreMatrix(std::size_t n, std::vector<Rational> cells) : n_(n), cells_(std::move(cells)) {}

    std::size_t size() const noexcept { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> cells_;
};

ScoreMatrix score_matrix(const KnowledgeBase& kb, KernelKind kind);
inline ScoreMatrix score_matrix(const KnowledgeBase& kb) { return score_matrix(kb, best_kernel()); }

}  // namespace paracon
