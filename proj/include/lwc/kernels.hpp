#pragma once

// Exhaustive weight scans over spanned GF(2) codes. Every scan walks all
// 2^dim words of span(basis) in Gray-code order, so each step is a single
// basis XOR. Kernels come in a serial reference and an OpenMP version that
// must produce bit-identical results; see bench/ for the comparison.

#include <cstdint>
#include <vector>

#include "lwc/gf2.hpp"

namespace lwc {

enum class Exec { Serial, Parallel };

// Default cap: enumerations beyond 2^24 words are refused.
inline constexpr int kDefaultEnumCapLog2 = 24;

// Raises CapacityError unless dim_log2 <= cap_log2. `what` names the caller.
void check_enum_cap(const char* what, int dim_log2, int cap_log2);

struct WeightScan {
    // Min weight over nonzero words of the span; n+1 when the span is {0}.
    int min_weight = 0;
    // covering[i] = min weight over words whose support contains i, or -1 if
    // no word covers coordinate i. Empty unless requested.
    std::vector<int> covering;
};

// basis: independent length-n vectors spanning the code to scan.
// Caller enforces the enumeration cap before calling.
WeightScan scan_span(const std::vector<BitVector>& basis, int n, bool covering,
                     Exec exec = Exec::Parallel);

}  // namespace lwc
