#include "lwc/kernels.hpp"

#include <algorithm>
#include <bit>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lwc {

void check_enum_cap(const char* what, int dim_log2, int cap_log2) {
    if (dim_log2 > cap_log2)
        throw CapacityError(std::string(what) + ": would enumerate 2^" +
                            std::to_string(dim_log2) + " items, cap is 2^" +
                            std::to_string(cap_log2));
}

namespace {

// Word at Gray index g(idx) = idx ^ (idx >> 1), as XOR of the basis vectors
// selected by its bits. Used to seed a chunk mid-sequence.
BitVector word_at(const std::vector<BitVector>& basis, int n, uint64_t idx) {
    BitVector w(n);
    uint64_t g = idx ^ (idx >> 1);
    while (g) {
        w ^= basis[std::countr_zero(g)];
        g &= g - 1;
    }
    return w;
}

void scan_range(const std::vector<BitVector>& basis, uint64_t lo, uint64_t hi,
                BitVector word, int* min_weight, std::vector<int>* covering) {
    for (uint64_t idx = lo; idx < hi; ++idx) {
        if (idx != lo) word ^= basis[std::countr_zero(idx)];
        if (idx == 0) continue;  // skip the zero word
        int w = word.weight();
        if (w < *min_weight) *min_weight = w;
        if (covering) {
            const auto& words = word.words();
            for (size_t k = 0; k < words.size(); ++k) {
                uint64_t x = words[k];
                while (x) {
                    int i = static_cast<int>(k * 64) + std::countr_zero(x);
                    if (w < (*covering)[i] || (*covering)[i] < 0) (*covering)[i] = w;
                    x &= x - 1;
                }
            }
        }
    }
}

}  // namespace

WeightScan scan_span(const std::vector<BitVector>& basis, int n, bool covering,
                     Exec exec) {
    WeightScan out;
    out.min_weight = n + 1;
    if (covering) out.covering.assign(n, -1);

    int dim = static_cast<int>(basis.size());
    uint64_t total = uint64_t{1} << dim;

#ifdef _OPENMP
    if (exec == Exec::Parallel && dim >= 12) {
        int nthreads = omp_get_max_threads();
        std::vector<int> mins(nthreads, n + 1);
        std::vector<std::vector<int>> covs(covering ? nthreads : 0);

#pragma omp parallel num_threads(nthreads)
        {
            int t = omp_get_thread_num();
            int nt = omp_get_num_threads();
            uint64_t lo = total * t / nt;
            uint64_t hi = total * (t + 1) / nt;
            if (lo < hi) {
                std::vector<int>* cov = nullptr;
                if (covering) {
                    covs[t].assign(n, -1);
                    cov = &covs[t];
                }
                scan_range(basis, lo, hi, word_at(basis, n, lo), &mins[t], cov);
            }
        }
        for (int t = 0; t < nthreads; ++t) {
            out.min_weight = std::min(out.min_weight, mins[t]);
            if (covering && !covs[t].empty())
                for (int i = 0; i < n; ++i)
                    if (covs[t][i] >= 0 && (out.covering[i] < 0 || covs[t][i] < out.covering[i]))
                        out.covering[i] = covs[t][i];
        }
        return out;
    }
#else
    (void)exec;
#endif

    scan_range(basis, 0, total, BitVector(n), &out.min_weight,
               covering ? &out.covering : nullptr);
    return out;
}

}  // namespace lwc
