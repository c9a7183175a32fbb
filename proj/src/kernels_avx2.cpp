// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace paracon::detail {

namespace {

// Per-byte popcount through a nibble lookup table.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

// Adds popcount(v) into four 64-bit lanes.
inline __m256i accumulate(__m256i acc, __m256i v) {
    return _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
}

inline std::uint64_t horizontal_sum(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

PairCounts count_pair_avx2(Words pos1, Words neg1, Words pos2, Words neg2) {
    const std::size_t n = pos1.size();
    __m256i shared = _mm256_setzero_si256();
    __m256i total = _mm256_setzero_si256();
    __m256i contra = _mm256_setzero_si256();

    std::size_t w = 0;
    for (; w + 4 <= n; w += 4) {
        const __m256i p1 = load(pos1.data() + w);
        const __m256i n1 = load(neg1.data() + w);
        const __m256i p2 = load(pos2.data() + w);
        const __m256i n2 = load(neg2.data() + w);
        shared = accumulate(shared, _mm256_and_si256(p1, p2));
        shared = accumulate(shared, _mm256_and_si256(n1, n2));
        total = accumulate(total, _mm256_or_si256(p1, p2));
        total = accumulate(total, _mm256_or_si256(n1, n2));
        contra = accumulate(contra, _mm256_or_si256(_mm256_and_si256(p1, n2), _mm256_and_si256(n1, p2)));
    }

    PairCounts c{horizontal_sum(shared), horizontal_sum(contra), horizontal_sum(total)};
    for (; w < n; ++w) {
        c.shared += std::popcount(pos1[w] & pos2[w]) + std::popcount(neg1[w] & neg2[w]);
        c.total += std::popcount(pos1[w] | pos2[w]) + std::popcount(neg1[w] | neg2[w]);
        c.contradictory += std::popcount((pos1[w] & neg2[w]) | (neg1[w] & pos2[w]));
    }
    return c;
}

}  // namespace paracon::detail
