#include <atomic>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace abstain::kernels {
namespace {

using detail::KernelTable;

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const KernelTable* pick_default() {
#if defined(ABSTAIN_HAVE_AVX2_TU)
    if (cpu_has_avx2()) {
        g_backend.store(Backend::avx2, std::memory_order_relaxed);
        return &detail::avx2_table();
    }
#endif
    g_backend.store(Backend::scalar, std::memory_order_relaxed);
    return &detail::scalar_table();
}

inline const KernelTable& table() {
    const KernelTable* t = g_table.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = pick_default();
        g_table.store(t, std::memory_order_release);
    }
    return *t;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(ABSTAIN_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() {
    table();  // ensure initialized
    return g_backend.load(std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::avx2: return "avx2";
        case Backend::scalar: break;
    }
    return "scalar";
}

void force_backend(Backend b) {
    if (b == Backend::avx2) {
#if defined(ABSTAIN_HAVE_AVX2_TU)
        if (!cpu_has_avx2())
            throw std::runtime_error("kernels: avx2 not available on this CPU");
        g_table.store(&detail::avx2_table(), std::memory_order_release);
        g_backend.store(Backend::avx2, std::memory_order_relaxed);
        return;
#else
        throw std::runtime_error("kernels: avx2 backend not compiled in");
#endif
    }
    g_table.store(&detail::scalar_table(), std::memory_order_release);
    g_backend.store(Backend::scalar, std::memory_order_relaxed);
}

double dot_f64(const double* a, const double* b, std::size_t n) {
    return table().dot_f64(a, b, n);
}

void axpy_f64(double alpha, const double* x, double* y, std::size_t n) {
    table().axpy_f64(alpha, x, y, n);
}

VoteCounts masked_vote_i8(const std::int8_t* col, const std::uint8_t* live,
                          std::size_t n) {
    return table().masked_vote_i8(col, live, n);
}

std::int64_t mask_filter_eq_i8(const std::int8_t* col, std::int8_t label,
                               std::uint8_t* live, std::size_t n) {
    return table().mask_filter_eq_i8(col, label, live, n);
}

void accumulate_mismatch_i8(const std::int8_t* col, std::int8_t label,
                            std::int32_t* counts, std::size_t n) {
    table().accumulate_mismatch_i8(col, label, counts, n);
}

WeightSums signed_weight_sums(const double* w, const std::int8_t* col,
                              std::size_t n) {
    return table().signed_weight_sums(w, col, n);
}

}  // namespace abstain::kernels
