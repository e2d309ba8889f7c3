#pragma once

// The stuck-at defect channel: per-cell state in {normal, stuck-0, stuck-1},
// the masking operator y = x o s, i.i.d. defect sampling, and exhaustive
// enumeration of defect patterns for small instances.
//
// Text form of a state is a string over {0,1,*} with '*' for a normal cell,
// index 0 first: "*1**0".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lwc/gf2.hpp"
#include "lwc/kernels.hpp"

namespace lwc {

// SplitMix64 (Steele et al., "Fast splittable pseudorandom number
// generators"). Tiny, documented, and identical everywhere; parallel trials
// take disjoint streams by seeding with base_seed + trial_index.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool next_bit() { return next() & 1; }
    // Uniform in [0, bound) by rejection, bias-free.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = -bound % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }
};

class ChannelState {
public:
    static constexpr int8_t kNormal = -1;

    ChannelState() = default;
    explicit ChannelState(int n) : cells_(n, kNormal) {}
    // Parses the {0,1,*} text form.
    static ChannelState from_string(std::string_view s);

    int size() const { return static_cast<int>(cells_.size()); }
    bool is_normal(int i) const { return cells_[i] == kNormal; }
    bool is_stuck(int i) const { return cells_[i] != kNormal; }
    int stuck_value(int i) const { return cells_[i]; }  // 0 or 1; only if stuck
    void set_stuck(int i, int value);

    int defect_count() const;
    // Defects whose stuck value is nonzero (the t_{\0} of the writing cost).
    int nonzero_defect_count() const;
    std::vector<int> defect_positions() const;

    std::string to_string() const;
    bool operator==(const ChannelState&) const = default;

private:
    std::vector<int8_t> cells_;
};

// y = x o s: normal cells pass x through, stuck cells output their value.
BitVector apply(const BitVector& x, const ChannelState& s);

struct DefectModel {
    double beta = 0.0;  // P(cell is stuck); stuck value is then 0 or 1 evenly
    uint64_t seed = 0;
};

// I.i.d. per-cell draw: P(normal) = 1-beta, P(stuck-0) = P(stuck-1) = beta/2.
// Deterministic for a fixed seed.
ChannelState sample(const DefectModel& model, int n);

// Exactly t defects at a uniformly random support with uniform stuck values.
ChannelState sample_exact(SplitMix64& rng, int n, int t);

// All states with exactly t defects, every stuck-value assignment once:
// choose(n,t) * 2^t states, supports in lexicographic order, values in
// binary counting order. Indexable so sweeps can be parallelized.
class StateEnumerator {
public:
    StateEnumerator(int n, int t, int cap_log2 = kDefaultEnumCapLog2);

    uint64_t count() const { return count_; }
    ChannelState at(uint64_t index) const;

    // Iteration support: for (auto s : StateEnumerator(n, t)) ...
    class Iterator {
    public:
        Iterator(const StateEnumerator* e, uint64_t i) : e_(e), i_(i) {}
        ChannelState operator*() const { return e_->at(i_); }
        Iterator& operator++() { ++i_; return *this; }
        bool operator!=(const Iterator& o) const { return i_ != o.i_; }
    private:
        const StateEnumerator* e_;
        uint64_t i_;
    };
    Iterator begin() const { return {this, 0}; }
    Iterator end() const { return {this, count_}; }

private:
    int n_, t_;
    uint64_t combos_, count_;
};

// Exact binomial coefficient; requires the result to fit in uint64_t.
uint64_t binomial(int n, int t);

}  // namespace lwc
