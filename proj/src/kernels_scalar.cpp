#include <bit>

#include "kernels_impl.hpp"

namespace paracon::detail {

PairCounts count_pair_scalar(Words pos1, Words neg1, Words pos2, Words neg2) {
    PairCounts c;
    for (std::size_t w = 0; w < pos1.size(); ++w) {
        c.shared += std::popcount(pos1[w] & pos2[w]) + std::popcount(neg1[w] & neg2[w]);
        c.total += std::popcount(pos1[w] | pos2[w]) + std::popcount(neg1[w] | neg2[w]);
        c.contradictory += std::popcount((pos1[w] & neg2[w]) | (neg1[w] & pos2[w]));
    }
    return c;
}

}  // namespace paracon::detail
