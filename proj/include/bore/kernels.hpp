#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by the neighbor search and the logistic
// solvers. Every kernel has a scalar reference implementation and, on x86,
// an AVX2 variant selected at runtime. SIMD variants are bit-compatible
// with the scalar reference:
//
//  * sq_l2_batch / l1_batch vectorize across candidate rows, so each
//    distance is accumulated in plain dimension order exactly like a naive
//    scalar loop over one pair.
//  * dot uses a fixed 4-accumulator reduction tree ((s0+s1)+(s2+s3)) plus a
//    sequential tail; the scalar reference implements the same tree.
//  * axpy is elementwise.

namespace bore::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

/// Backend in use; resolved on first call (BORE_KERNELS env var overrides
/// auto-detection, values "scalar" / "avx2").
Backend active_backend();

/// Forces a backend, mainly for equivalence tests. Throws if unavailable.
void set_backend(Backend b);

/// out[r] = sum_d (query[d] - ref_cm[d*n_rows + r])^2 for r in [0, n_rows).
/// ref_cm is the reference matrix stored dimension-major (column-major).
void sq_l2_batch(const double* query, const double* ref_cm, std::size_t n_rows,
                 std::size_t n_dims, double* out);

/// out[r] = sum_d |query[d] - ref_cm[d*n_rows + r]|.
void l1_batch(const double* query, const double* ref_cm, std::size_t n_rows,
              std::size_t n_dims, double* out);

/// Blocked dot product of a and b (see reduction-order note above).
double dot(const double* a, const double* b, std::size_t n);

/// y[i] += alpha * x[i].
void axpy(double alpha, const double* x, double* y, std::size_t n);

}  // namespace bore::kernels
