#pragma once

#include <cstddef>

namespace bore::kernels {

struct KernelTable {
    void (*sq_l2_batch)(const double*, const double*, std::size_t, std::size_t, double*);
    void (*l1_batch)(const double*, const double*, std::size_t, std::size_t, double*);
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
};

extern const KernelTable kScalarTable;

#if BORE_HAVE_AVX2
extern const KernelTable kAvx2Table;
bool avx2_cpu_supported();
#endif

}  // namespace bore::kernels
