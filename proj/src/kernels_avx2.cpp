// AVX2 kernel variants. This translation unit is compiled with -mavx2 and
// only entered after a runtime cpuid check.
//
// Bit-compatibility with the scalar reference is part of the contract:
// multiplies and adds are kept separate (no FMA) and reductions follow the
// same tree as the scalar code.

#include <cmath>
#include <cstddef>

#include "kernels_internal.hpp"

#if BORE_HAVE_AVX2

#include <immintrin.h>

namespace bore::kernels {

namespace {

void sq_l2_batch_avx2(const double* query, const double* ref_cm, std::size_t n_rows,
                      std::size_t n_dims, double* out) {
    std::size_t r = 0;
    for (; r + 4 <= n_rows; r += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < n_dims; ++d) {
            const __m256d q = _mm256_set1_pd(query[d]);
            const __m256d v = _mm256_loadu_pd(ref_cm + d * n_rows + r);
            const __m256d diff = _mm256_sub_pd(q, v);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
        }
        _mm256_storeu_pd(out + r, acc);
    }
    // Remainder rows, one lane each, same per-row accumulation order.
    for (; r < n_rows; ++r) {
        double acc = 0.0;
        for (std::size_t d = 0; d < n_dims; ++d) {
            const double diff = query[d] - ref_cm[d * n_rows + r];
            acc += diff * diff;
        }
        out[r] = acc;
    }
}

void l1_batch_avx2(const double* query, const double* ref_cm, std::size_t n_rows,
                   std::size_t n_dims, double* out) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t r = 0;
    for (; r + 4 <= n_rows; r += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < n_dims; ++d) {
            const __m256d q = _mm256_set1_pd(query[d]);
            const __m256d v = _mm256_loadu_pd(ref_cm + d * n_rows + r);
            const __m256d diff = _mm256_sub_pd(q, v);
            acc = _mm256_add_pd(acc, _mm256_and_pd(diff, abs_mask));
        }
        _mm256_storeu_pd(out + r, acc);
    }
    for (; r < n_rows; ++r) {
        double acc = 0.0;
        for (std::size_t d = 0; d < n_dims; ++d) acc += std::fabs(query[d] - ref_cm[d * n_rows + r]);
        out[r] = acc;
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable kAvx2Table{sq_l2_batch_avx2, l1_batch_avx2, dot_avx2, axpy_avx2};

bool avx2_cpu_supported() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace bore::kernels

#endif  // BORE_HAVE_AVX2
