#pragma once

// The LRC <-> LWC bridge: repair locality of a linear code used as an LRC,
// single-erasure repair, and construction of an LWC from an LRC's parity
// check matrix. For cyclic codes the two sides share parameters,
// (d*, r*) = (d, d_dual - 1); for anything else the report measures instead
// of asserting.

#include <string>
#include <vector>

#include "lwc/additive.hpp"
#include "lwc/codes.hpp"

namespace lwc {

struct LrcProfile {
    int n = 0, k = 0;
    int d = 0;                         // minimum distance
    std::vector<int> repair_locality;  // per coordinate; -1 if unrepairable
    int r = 0;                         // max over repairable coordinates
    bool optimal = false;              // d meets n - k - ceil(k/r) + 2
};

// d by exhaustive enumeration; locality[i] = (min weight of a dual codeword
// covering i) - 1.
LrcProfile repair_locality(const LinearCode& c, int cap_log2 = kDefaultEnumCapLog2,
                           Exec exec = Exec::Parallel);

struct RepairResult {
    int value = 0;              // the reconstructed bit
    std::vector<int> accessed;  // coordinates read, ascending; size == locality
};

// Reconstructs the erased coordinate of a codeword from a minimum-weight
// covering dual codeword: c_i = sum of c_j over the word's other support.
// Throws ConstructionError when no dual codeword covers the coordinate.
RepairResult repair_symbol(const LinearCode& c, const BitVector& word, int erased,
                           int cap_log2 = kDefaultEnumCapLog2);

// The LWC whose G0 is the LRC's parity check matrix.
AdditiveCode lwc_from_lrc(const LinearCode& c_lrc, int cap_log2 = kDefaultEnumCapLog2);

struct DualityReport {
    LrcProfile lrc;
    int lwc_d_star = 0;
    int lwc_r_star = 0;
    bool lwc_optimal = false;
    int d_dual = 0;           // min distance of the dual code, measured directly
    bool cyclic = false;      // identities are only guaranteed for cyclic codes
    bool identities_hold = false;  // (d*, r*) == (d, d_dual - 1)
};

// Computes the LRC profile and the LWC analysis independently and compares.
DualityReport verify_duality(const LinearCode& c_lrc,
                             int cap_log2 = kDefaultEnumCapLog2,
                             Exec exec = Exec::Parallel);

}  // namespace lwc
