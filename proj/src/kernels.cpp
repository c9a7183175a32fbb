#include "paracon/kernels.hpp"

#include <map>

#include "kernels_impl.hpp"
#include "paracon/error.hpp"
#include "paracon/similarity.hpp"

namespace paracon {

std::string_view kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::Scalar: return "scalar";
        case KernelKind::Avx2: return "avx2";
        case KernelKind::Neon: return "neon";
    }
    return "unknown";
}

bool kernel_available(KernelKind kind) {
    switch (kind) {
        case KernelKind::Scalar: return true;
        case KernelKind::Avx2:
#if defined(PARACON_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
        case KernelKind::Neon:
#if defined(PARACON_HAVE_NEON)
            return true;  // mandatory on aarch64
#else
            return false;
#endif
    }
    return false;
}

std::vector<KernelKind> available_kernels() {
    std::vector<KernelKind> out;
    for (auto kind : {KernelKind::Scalar, KernelKind::Avx2, KernelKind::Neon})
        if (kernel_available(kind)) out.push_back(kind);
    return out;
}

KernelKind best_kernel() {
    static const KernelKind best = [] {
        if (kernel_available(KernelKind::Avx2)) return KernelKind::Avx2;
        if (kernel_available(KernelKind::Neon)) return KernelKind::Neon;
        return KernelKind::Scalar;
    }();
    return best;
}

PackedKb::PackedKb(const KnowledgeBase& kb) : entities_(kb.size()) {
    std::map<Atom, std::size_t> numbering;
    for (const auto& e : kb)
        for (const auto& lit : e.literals()) numbering.emplace(lit.atom, 0);
    std::size_t next = 0;
    for (auto& [atom, index] : numbering) index = next++;

    atoms_ = numbering.size();
    words_ = (atoms_ + 63) / 64;
    bits_.assign(2 * entities_ * words_, 0);
    for (std::size_t i = 0; i < entities_; ++i) {
        for (const auto& lit : kb[i].literals()) {
            const std::size_t a = numbering.at(lit.atom);
            const std::size_t plane = 2 * i + (lit.is_positive() ? 0 : 1);
            bits_[plane * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        }
    }
}

PairCounts count_pair(KernelKind kind,
                      std::span<const std::uint64_t> pos1, std::span<const std::uint64_t> neg1,
                      std::span<const std::uint64_t> pos2, std::span<const std::uint64_t> neg2) {
    const std::size_t n = pos1.size();
    if (neg1.size() != n || pos2.size() != n || neg2.size() != n)
        throw PreconditionError("count_pair: bit planes differ in length");
    if (!kernel_available(kind))
        throw PreconditionError("kernel '" + std::string(kernel_name(kind)) + "' is not available on this machine");

    switch (kind) {
#if defined(PARACON_HAVE_AVX2)
        case KernelKind::Avx2: return detail::count_pair_avx2(pos1, neg1, pos2, neg2);
#endif
#if defined(PARACON_HAVE_NEON)
        case KernelKind::Neon: return detail::count_pair_neon(pos1, neg1, pos2, neg2);
#endif
        default: return detail::count_pair_scalar(pos1, neg1, pos2, neg2);
    }
}

std::vector<PairCounts> count_matrix(const PackedKb& packed, KernelKind kind) {
    const std::size_t n = packed.entity_count();
    std::vector<PairCounts> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const auto c = count_pair(kind, packed.positive(i), packed.negative(i), packed.positive(j),
                                      packed.negative(j));
            cells[i * n + j] = c;
            cells[j * n + i] = c;
        }
    }
    return cells;
}

ScoreMatrix score_matrix(const KnowledgeBase& kb, KernelKind kind) {
    const auto counts = count_matrix(PackedKb(kb), kind);
    std::vector<Rational> cells;
    cells.reserve(counts.size());
    for (const auto& c : counts) cells.push_back(breakdown_from_counts(c.shared, c.contradictory, c.total).s_star);
    return ScoreMatrix(kb.size(), std::move(cells));
}

}  // namespace paracon
