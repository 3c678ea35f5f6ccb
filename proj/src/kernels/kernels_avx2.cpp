#include "kernels_impl.hpp"

#if defined(ABSTAIN_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cstring>

namespace abstain::kernels::detail {
namespace {

inline double hsum256_pd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                               acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                               _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                               acc0);
    }
    double acc = hsum256_pd(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

VoteCounts masked_vote_avx2(const std::int8_t* col, const std::uint8_t* live,
                            std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::int64_t pos = 0, neg = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
        __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(live + i));
        __m256i lm = _mm256_cmpgt_epi8(l, zero);
        __m256i pm = _mm256_and_si256(_mm256_cmpgt_epi8(c, zero), lm);
        __m256i nm = _mm256_and_si256(_mm256_cmpgt_epi8(zero, c), lm);
        pos += __builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_epi8(pm)));
        neg += __builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_epi8(nm)));
    }
    for (; i < n; ++i) {
        if (!live[i]) continue;
        if (col[i] > 0)
            ++pos;
        else if (col[i] < 0)
            ++neg;
    }
    return VoteCounts{pos, neg};
}

std::int64_t mask_filter_avx2(const std::int8_t* col, std::int8_t label,
                              std::uint8_t* live, std::size_t n) {
    const __m256i lab = _mm256_set1_epi8(label);
    const __m256i zero = _mm256_setzero_si256();
    std::int64_t alive = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + i));
        __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(live + i));
        __m256i keep = _mm256_cmpeq_epi8(c, lab);
        __m256i nl = _mm256_and_si256(l, keep);  // live bytes are 0/1
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(live + i), nl);
        alive += __builtin_popcount(static_cast<unsigned>(
            _mm256_movemask_epi8(_mm256_cmpgt_epi8(nl, zero))));
    }
    for (; i < n; ++i) {
        live[i] = static_cast<std::uint8_t>(live[i] & (col[i] == label));
        alive += live[i];
    }
    return alive;
}

void accumulate_mismatch_avx2(const std::int8_t* col, std::int8_t label,
                              std::int32_t* counts, std::size_t n) {
    const __m128i lab = _mm_set1_epi8(label);
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m128i c = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(col + i));
        __m128i eq = _mm_cmpeq_epi8(c, lab);          // -1 where equal
        __m256i eq32 = _mm256_cvtepi8_epi32(eq);      // sign-extended
        __m256i mism = _mm256_add_epi32(eq32, one);   // 1 where mismatch
        __m256i acc =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(counts + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(counts + i),
                            _mm256_add_epi32(acc, mism));
    }
    for (; i < n; ++i) counts[i] += (col[i] != label);
}

WeightSums signed_weight_sums_avx2(const double* w, const std::int8_t* col,
                                   std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    __m256d pos = _mm256_setzero_pd();
    __m256d neg = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        std::int32_t packed;
        std::memcpy(&packed, col + i, 4);
        __m256i c64 = _mm256_cvtepi8_epi64(_mm_cvtsi32_si128(packed));
        __m256d pm = _mm256_castsi256_pd(_mm256_cmpgt_epi64(c64, zero));
        __m256d nm = _mm256_castsi256_pd(_mm256_cmpgt_epi64(zero, c64));
        __m256d wv = _mm256_loadu_pd(w + i);
        pos = _mm256_add_pd(pos, _mm256_and_pd(wv, pm));
        neg = _mm256_add_pd(neg, _mm256_and_pd(wv, nm));
    }
    WeightSums s{hsum256_pd(pos), hsum256_pd(neg)};
    for (; i < n; ++i) {
        if (col[i] > 0)
            s.pos += w[i];
        else if (col[i] < 0)
            s.neg += w[i];
    }
    return s;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{
        dot_avx2,
        axpy_avx2,
        masked_vote_avx2,
        mask_filter_avx2,
        accumulate_mismatch_avx2,
        signed_weight_sums_avx2,
    };
    return t;
}

}  // namespace abstain::kernels::detail

#endif  // ABSTAIN_HAVE_AVX2_TU
