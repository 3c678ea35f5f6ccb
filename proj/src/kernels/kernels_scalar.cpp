#include "kernels_impl.hpp"

// Reference implementations. These define the semantics; the SIMD variants
// are checked against them.

namespace abstain::kernels::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

VoteCounts masked_vote_scalar(const std::int8_t* col, const std::uint8_t* live,
                              std::size_t n) {
    VoteCounts v;
    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i]) continue;
        if (col[i] > 0)
            ++v.pos;
        else if (col[i] < 0)
            ++v.neg;
    }
    return v;
}

std::int64_t mask_filter_scalar(const std::int8_t* col, std::int8_t label,
                                std::uint8_t* live, std::size_t n) {
    std::int64_t alive = 0;
    for (std::size_t i = 0; i < n; ++i) {
        live[i] = static_cast<std::uint8_t>(live[i] & (col[i] == label));
        alive += live[i];
    }
    return alive;
}

void accumulate_mismatch_scalar(const std::int8_t* col, std::int8_t label,
                                std::int32_t* counts, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) counts[i] += (col[i] != label);
}

WeightSums signed_weight_sums_scalar(const double* w, const std::int8_t* col,
                                     std::size_t n) {
    WeightSums s;
    for (std::size_t i = 0; i < n; ++i) {
        if (col[i] > 0)
            s.pos += w[i];
        else if (col[i] < 0)
            s.neg += w[i];
    }
    return s;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{
        dot_scalar,
        axpy_scalar,
        masked_vote_scalar,
        mask_filter_scalar,
        accumulate_mismatch_scalar,
        signed_weight_sums_scalar,
    };
    return t;
}

}  // namespace abstain::kernels::detail
