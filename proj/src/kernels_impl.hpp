#pragma once

#include <cstdint>
#include <span>

#include "paracon/kernels.hpp"

namespace paracon::detail {

using Words = std::span<const std::uint64_t>;

PairCounts count_pair_scalar(Words pos1, Words neg1, Words pos2, Words neg2);

#if defined(PARACON_HAVE_AVX2)
PairCounts count_pair_avx2(Words pos1, Words neg1, Words pos2, Words neg2);
#endif

#if defined(PARACON_HAVE_NEON)
PairCounts count_pair_neon(Words pos1, Words neg1, Words pos2, Words neg2);
#endif

}  // namespace paracon::detail
