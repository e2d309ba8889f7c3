#pragma once

// Additive masking codec for the stuck-at channel.
//
// A code is fixed by G0 (n x (n-k), full column rank). Writes are
//   c = (m, 0) + G0 * p
// with p chosen so c agrees with every stuck cell; reads are m = H0^T y.
// The message occupies the first k systematic positions and the parity the
// last n-k; when G0's own last n-k rows are not invertible, a recorded
// coordinate permutation decides which physical cells play which role.
//
// (m, 0) + G0 * p reaches every vector of F_2^n exactly once, so decode is
// total; masking can only fail when the stuck cells contradict each other.

#include <optional>
#include <vector>

#include "lwc/channel.hpp"
#include "lwc/codes.hpp"
#include "lwc/gf2.hpp"
#include "lwc/kernels.hpp"

namespace lwc {

// Coset searches above 2^20 solutions fall back to first-feasible.
inline constexpr int kDefaultCosetCapLog2 = 20;

struct LwcAnalysis {
    int d_star = 0;             // min weight of nonzero x with G0^T x = 0
    std::vector<int> locality;  // covering_weight(C0, i) - 1; -1 if uncovered
    int r_star = 0;             // max over covered coordinates
    bool optimal = false;       // d_star meets n - k - ceil(k/r_star) + 2
};

class AdditiveCode {
public:
    // Column-reduces G0 to [R; I] on a row permutation that keeps an
    // invertible block in the last n-k rows (identity permutation whenever
    // G0 is already systematic). Analysis is cached when the enumeration
    // caps allow it.
    static AdditiveCode build(const BitMatrix& g0, bool c0_cyclic = false,
                              int cap_log2 = kDefaultEnumCapLog2);

    int n() const { return n_; }
    int k() const { return k_; }
    // Reduced G0 in original coordinate order; same column space as the input.
    const BitMatrix& g0() const { return g0_; }
    // Decoder matrix, original coordinate order: H0^T G0 = 0.
    const BitMatrix& h0() const { return h0_; }
    const BitMatrix& r_block() const { return r_; }  // k x (n-k) top of [R; I]
    // perm[pos] = original coordinate at systematic position pos.
    const std::vector<int>& perm() const { return perm_; }
    const LinearCode& c0() const { return c0_; }
    const std::optional<LwcAnalysis>& analysis() const { return analysis_; }

    // (m, 0) + G0 * p for explicit p; mostly for tests and sweeps.
    BitVector assemble(const BitVector& m, const BitVector& p) const;

private:
    AdditiveCode(BitMatrix g0, BitMatrix h0, BitMatrix r, std::vector<int> perm,
                 LinearCode c0);
    int n_, k_;
    BitMatrix g0_, h0_, r_;
    std::vector<int> perm_, inv_perm_;
    LinearCode c0_;
    std::optional<LwcAnalysis> analysis_;

    friend BitVector decode(const AdditiveCode&, const BitVector&);
};

struct CostReport {
    std::optional<int> write_cost;    // ||c|| - t_nonzero, initial writes only
    std::optional<int> rewrite_cost;  // ||c - c_prev||, updates only
    // Single-defect cost bound: ||m|| + r* for initial writes,
    // ||m - m'|| + r* - 1 for updates. Absent otherwise.
    std::optional<int> bound;
    std::vector<int> cells_touched;  // physically written cells, ascending
    bool minimal = true;             // false when the coset cap forced first-feasible
};

struct MaskingFailure {
    // Defect positions whose constraints XOR to a contradiction.
    std::vector<int> unsatisfiable;
};

struct EncodeResult {
    bool ok = false;
    BitVector word;
    CostReport report;
    MaskingFailure failure;
};

// Initial write into all-zero memory: picks, among all masking p, the one
// minimizing ||c||, ties to the lexicographically smallest p.
EncodeResult encode_initial(const AdditiveCode& code, const BitVector& m,
                            const ChannelState& s,
                            int coset_cap_log2 = kDefaultCosetCapLog2);

// Update in place: c_prev must mask s; minimizes ||c_new - c_prev||.
EncodeResult encode_update(const AdditiveCode& code, const BitVector& c_prev,
                           const BitVector& m_new, const ChannelState& s,
                           int coset_cap_log2 = kDefaultCosetCapLog2);

// m = H0^T y; exact for every y = (m, 0) + G0 p.
BitVector decode(const AdditiveCode& code, const BitVector& y);

// Cached when available, otherwise computed (capacity error past the cap).
LwcAnalysis analyze(const AdditiveCode& code, int cap_log2 = kDefaultEnumCapLog2,
                    Exec exec = Exec::Parallel);

struct KuznetsovBounds {
    int lower = 0;
    int upper = 0;
};

// Storage bounds for n cells with t stuck-at defects:
//   upper = n - t,
//   lower = n - t - ceil(log2 ln(2^t choose(n,t))), clamped at 0.
// At t = 0 the log term is degenerate and both bounds equal n.
KuznetsovBounds kuznetsov_bounds(int n, int t);

// n - k - ceil(k / r_star) + 2; requires 1 <= r_star <= k.
int singleton_bound(int n, int k, int r_star);

}  // namespace lwc
