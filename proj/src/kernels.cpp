#include "bore/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace bore::kernels {

namespace {

void sq_l2_batch_scalar(const double* query, const double* ref_cm, std::size_t n_rows,
                        std::size_t n_dims, double* out) {
    for (std::size_t r = 0; r < n_rows; ++r) out[r] = 0.0;
    for (std::size_t d = 0; d < n_dims; ++d) {
        const double q = query[d];
        const double* col = ref_cm + d * n_rows;
        for (std::size_t r = 0; r < n_rows; ++r) {
            const double diff = q - col[r];
            out[r] += diff * diff;
        }
    }
}

void l1_batch_scalar(const double* query, const double* ref_cm, std::size_t n_rows,
                     std::size_t n_dims, double* out) {
    for (std::size_t r = 0; r < n_rows; ++r) out[r] = 0.0;
    for (std::size_t d = 0; d < n_dims; ++d) {
        const double q = query[d];
        const double* col = ref_cm + d * n_rows;
        for (std::size_t r = 0; r < n_rows; ++r) out[r] += std::fabs(q - col[r]);
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 += a[i] * b[i];
        acc1 += a[i + 1] * b[i + 1];
        acc2 += a[i + 2] * b[i + 2];
        acc3 += a[i + 3] * b[i + 3];
    }
    double sum = (acc0 + acc1) + (acc2 + acc3);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

const KernelTable* resolve_backend(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &kScalarTable;
        case Backend::avx2:
#if BORE_HAVE_AVX2
            return &kAvx2Table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

struct Dispatch {
    const KernelTable* table;
    Backend backend;
};

Dispatch detect() {
    if (const char* env = std::getenv("BORE_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return {&kScalarTable, Backend::scalar};
        if (want == "avx2") {
            if (const KernelTable* t = resolve_backend(Backend::avx2); t != nullptr)
                return {t, Backend::avx2};
            // Fall through to auto-detection when the request cannot be met.
        }
    }
#if BORE_HAVE_AVX2
    if (avx2_cpu_supported()) return {&kAvx2Table, Backend::avx2};
#endif
    return {&kScalarTable, Backend::scalar};
}

Dispatch& dispatch() {
    static Dispatch d = detect();
    return d;
}

}  // namespace

const KernelTable kScalarTable{sq_l2_batch_scalar, l1_batch_scalar, dot_scalar, axpy_scalar};

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    if (b == Backend::scalar) return true;
#if BORE_HAVE_AVX2
    if (b == Backend::avx2) return avx2_cpu_supported();
#endif
    return false;
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("kernels: backend not available: " +
                                    std::string(backend_name(b)));
    dispatch() = {resolve_backend(b), b};
}

void sq_l2_batch(const double* query, const double* ref_cm, std::size_t n_rows,
                 std::size_t n_dims, double* out) {
    dispatch().table->sq_l2_batch(query, ref_cm, n_rows, n_dims, out);
}

void l1_batch(const double* query, const double* ref_cm, std::size_t n_rows,
              std::size_t n_dims, double* out) {
    dispatch().table->l1_batch(query, ref_cm, n_rows, n_dims, out);
}

double dot(const double* a, const double* b, std::size_t n) {
    return dispatch().table->dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    dispatch().table->axpy(alpha, x, y, n);
}

}  // namespace bore::kernels
