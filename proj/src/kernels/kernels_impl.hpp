#pragma once
#include "abstain/kernels/kernels.hpp"

// Internal: per-backend entry points wired up by dispatch.cpp.

namespace abstain::kernels::detail {

struct KernelTable {
    double (*dot_f64)(const double*, const double*, std::size_t);
    void (*axpy_f64)(double, const double*, double*, std::size_t);
    VoteCounts (*masked_vote_i8)(const std::int8_t*, const std::uint8_t*,
                                 std::size_t);
    std::int64_t (*mask_filter_eq_i8)(const std::int8_t*, std::int8_t,
                                      std::uint8_t*, std::size_t);
    void (*accumulate_mismatch_i8)(const std::int8_t*, std::int8_t,
                                   std::int32_t*, std::size_t);
    WeightSums (*signed_weight_sums)(const double*, const std::int8_t*,
                                     std::size_t);
};

const KernelTable& scalar_table();

#if defined(ABSTAIN_HAVE_AVX2_TU)
const KernelTable& avx2_table();
#endif

}  // namespace abstain::kernels::detail
