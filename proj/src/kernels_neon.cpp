#include <arm_neon.h>

#include <bit>

#include "kernels_impl.hpp"

namespace paracon::detail {

namespace {

inline uint64x2_t accumulate(uint64x2_t acc, uint64x2_t v) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    return vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
}

}  // namespace

PairCounts count_pair_neon(Words pos1, Words neg1, Words pos2, Words neg2) {
    const std::size_t n = pos1.size();
    uint64x2_t shared = vdupq_n_u64(0);
    uint64x2_t total = vdupq_n_u64(0);
    uint64x2_t contra = vdupq_n_u64(0);

    std::size_t w = 0;
    for (; w + 2 <= n; w += 2) {
        const uint64x2_t p1 = vld1q_u64(pos1.data() + w);
        const uint64x2_t n1 = vld1q_u64(neg1.data() + w);
        const uint64x2_t p2 = vld1q_u64(pos2.data() + w);
        const uint64x2_t n2 = vld1q_u64(neg2.data() + w);
        shared = accumulate(shared, vandq_u64(p1, p2));
        shared = accumulate(shared, vandq_u64(n1, n2));
        total = accumulate(total, vorrq_u64(p1, p2));
        total = accumulate(total, vorrq_u64(n1, n2));
        contra = accumulate(contra, vorrq_u64(vandq_u64(p1, n2), vandq_u64(n1, p2)));
    }

    PairCounts c{vaddvq_u64(shared), vaddvq_u64(contra), vaddvq_u64(total)};
    for (; w < n; ++w) {
        c.shared += std::popcount(pos1[w] & pos2[w]) + std::popcount(neg1[w] & neg2[w]);
        c.total += std::popcount(pos1[w] | pos2[w]) + std::popcount(neg1[w] | neg2[w]);
        c.contradictory += std::popcount((pos1[w] & neg2[w]) | (neg1[w] & pos2[w]));
    }
    return c;
}

}  // namespace paracon::detail
