#include "lwc/channel.hpp"

#include <stdexcept>

namespace lwc {

ChannelState ChannelState::from_string(std::string_view s) {
    ChannelState st(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case '*': break;
            case '0': st.cells_[i] = 0; break;
            case '1': st.cells_[i] = 1; break;
            default:
                throw std::invalid_argument("ChannelState: expected a string over {0,1,*}");
        }
    }
    return st;
}

void ChannelState::set_stuck(int i, int value) {
    if (value != 0 && value != 1)
        throw std::invalid_argument("ChannelState: stuck value must be 0 or 1");
    cells_[i] = static_cast<int8_t>(value);
}

int ChannelState::defect_count() const {
    int t = 0;
    for (int8_t c : cells_) t += c != kNormal;
    return t;
}

int ChannelState::nonzero_defect_count() const {
    int t = 0;
    for (int8_t c : cells_) t += c == 1;
    return t;
}

std::vector<int> ChannelState::defect_positions() const {
    std::vector<int> pos;
    for (int i = 0; i < size(); ++i)
        if (cells_[i] != kNormal) pos.push_back(i);
    return pos;
}

std::string ChannelState::to_string() const {
    std::string s(cells_.size(), '*');
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] != kNormal) s[i] = cells_[i] ? '1' : '0';
    return s;
}

BitVector apply(const BitVector& x, const ChannelState& s) {
    if (x.size() != s.size())
        throw std::invalid_argument("apply: input and state lengths differ");
    BitVector y = x;
    for (int i = 0; i < s.size(); ++i)
        if (s.is_stuck(i)) y.set(i, s.stuck_value(i));
    return y;
}

ChannelState sample(const DefectModel& model, int n) {
    if (model.beta < 0.0 || model.beta > 1.0)
        throw std::invalid_argument("sample: beta must lie in [0,1]");
    SplitMix64 rng(model.seed);
    ChannelState s(n);
    for (int i = 0; i < n; ++i)
        if (rng.next_unit() < model.beta) s.set_stuck(i, rng.next_bit());
    return s;
}

ChannelState sample_exact(SplitMix64& rng, int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("sample_exact: need 0 <= t <= n");
    // Partial Fisher-Yates over cell indices.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    ChannelState s(n);
    for (int j = 0; j < t; ++j) {
        int pick = j + static_cast<int>(rng.next_below(n - j));
        std::swap(idx[j], idx[pick]);
        s.set_stuck(idx[j], rng.next_bit());
    }
    return s;
}

uint64_t binomial(int n, int t) {
    if (t < 0 || t > n) return 0;
    if (t > n - t) t = n - t;
    // Multiply/divide interleaved; each prefix is itself a binomial, so the
    // division is exact. The intermediate product needs 128 bits.
    uint64_t r = 1;
    for (int i = 1; i <= t; ++i) {
        unsigned __int128 tmp = static_cast<unsigned __int128>(r) * (n - t + i);
        tmp /= i;
        if (tmp > UINT64_MAX) throw std::overflow_error("binomial: overflow");
        r = static_cast<uint64_t>(tmp);
    }
    return r;
}

StateEnumerator::StateEnumerator(int n, int t, int cap_log2) : n_(n), t_(t) {
    if (t < 0 || t > n) throw std::invalid_argument("StateEnumerator: need 0 <= t <= n");
    if (t > cap_log2 || t >= 64)
        throw CapacityError("enumerate_states: 2^t alone exceeds cap 2^" +
                            std::to_string(cap_log2));
    combos_ = binomial(n, t);
    count_ = combos_ << t;
    if (count_ >> t != combos_ || count_ > (uint64_t{1} << cap_log2))
        throw CapacityError("enumerate_states: choose(n,t)*2^t exceeds cap 2^" +
                            std::to_string(cap_log2));
}

ChannelState StateEnumerator::at(uint64_t index) const {
    uint64_t values = index & ((uint64_t{1} << t_) - 1);
    uint64_t combo = index >> t_;
    // Unrank the support in lexicographic order.
    ChannelState s(n_);
    int next = 0;
    for (int j = 0; j < t_; ++j) {
        for (int c = next; c < n_; ++c) {
            uint64_t with_c = binomial(n_ - c - 1, t_ - j - 1);
            if (combo < with_c) {
                s.set_stuck(c, (values >> j) & 1);
                next = c + 1;
                break;
            }
            combo -= with_c;
        }
    }
    return s;
}

}  // namespace lwc
