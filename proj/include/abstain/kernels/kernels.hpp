#pragma once
#include <cstddef>
#include <cstdint>
#include <string_view>

// Data-parallel inner loops used by the learning algorithms: dense dot
// products and axpy for the polytope sampler, and byte-wide vote/filter
// primitives over +-1 prediction columns for the finite-class algorithms.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant selected once at startup from CPUID. The two must agree
// exactly for the integer kernels and to reduction-order tolerance for the
// floating-point ones; tests/test_kernels.cpp enforces this.

namespace abstain::kernels {

struct VoteCounts {
    std::int64_t pos = 0;  // live entries predicting +1
    std::int64_t neg = 0;  // live entries predicting -1
};

struct WeightSums {
    double pos = 0.0;  // total weight of entries with col > 0
    double neg = 0.0;  // total weight of entries with col < 0
};

// sum_i a[i]*b[i]
double dot_f64(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy_f64(double alpha, const double* x, double* y, std::size_t n);

// Vote tally over a prediction column restricted to live entries.
// col holds labels in {-1,+1}; live holds 0/1 bytes.
VoteCounts masked_vote_i8(const std::int8_t* col, const std::uint8_t* live,
                          std::size_t n);

// live[i] &= (col[i] == label); returns the number of surviving entries.
std::int64_t mask_filter_eq_i8(const std::int8_t* col, std::int8_t label,
                               std::uint8_t* live, std::size_t n);

// counts[i] += (col[i] != label)  -- per-hypothesis training-error tally.
void accumulate_mismatch_i8(const std::int8_t* col, std::int8_t label,
                            std::int32_t* counts, std::size_t n);

// Partition the weight vector by the sign of the prediction column.
WeightSums signed_weight_sums(const double* w, const std::int8_t* col,
                              std::size_t n);

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string_view backend_name(Backend b);
bool cpu_has_avx2();

// Testing hook: pin the dispatch table to one backend. Requesting avx2 on a
// machine without it is an error.
void force_backend(Backend b);

}  // namespace abstain::kernels
