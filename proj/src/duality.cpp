#include "lwc/duality.hpp"

#include <algorithm>
#include <bit>

namespace lwc {

LrcProfile repair_locality(const LinearCode& c, int cap_log2, Exec exec) {
    LrcProfile p;
    p.n = c.n();
    p.k = c.k();
    p.d = min_distance(c, cap_log2, exec);
    auto cov = covering_weights(dual(c), cap_log2, exec);
    p.repair_locality.resize(c.n());
    p.r = 0;
    bool all_covered = true;
    for (int i = 0; i < c.n(); ++i) {
        p.repair_locality[i] = cov[i] < 0 ? -1 : cov[i] - 1;
        all_covered = all_covered && cov[i] >= 0;
        p.r = std::max(p.r, p.repair_locality[i]);
    }
    if (all_covered && p.r >= 1 && p.r <= p.k)
        p.optimal = p.d == singleton_bound(p.n, p.k, p.r);
    return p;
}

RepairResult repair_symbol(const LinearCode& c, const BitVector& word, int erased,
                           int cap_log2) {
    if (word.size() != c.n()) throw std::invalid_argument("repair_symbol: word length != n");
    if (erased < 0 || erased >= c.n())
        throw std::invalid_argument("repair_symbol: erased coordinate out of range");

    // Min-weight dual codeword through the erased coordinate; its other
    // support is exactly what we read.
    LinearCode d = dual(c);
    check_enum_cap("repair_symbol", d.k(), cap_log2);
    auto basis = d.gen().col_vectors();
    BitVector best;
    int best_w = c.n() + 1;
    BitVector w(c.n());
    uint64_t total = uint64_t{1} << basis.size();
    for (uint64_t idx = 1; idx < total; ++idx) {
        w ^= basis[std::countr_zero(idx)];
        if (!w.get(erased)) continue;
        int wt = w.weight();
        if (wt < best_w) {
            best_w = wt;
            best = w;
        }
    }
    if (best_w > c.n())
        throw ConstructionError("repair_symbol: no dual codeword covers the coordinate");

    RepairResult res;
    int acc = 0;
    for (int j : best.support()) {
        if (j == erased) continue;
        res.accessed.push_back(j);
        acc ^= word.get(j) ? 1 : 0;
    }
    res.value = acc;
    return res;
}

AdditiveCode lwc_from_lrc(const LinearCode& c_lrc, int cap_log2) {
    return AdditiveCode::build(c_lrc.pcheck(), c_lrc.is_cyclic(), cap_log2);
}

DualityReport verify_duality(const LinearCode& c_lrc, int cap_log2, Exec exec) {
    DualityReport rep;
    rep.cyclic = c_lrc.is_cyclic();
    rep.lrc = repair_locality(c_lrc, cap_log2, exec);
    rep.d_dual = min_distance(dual(c_lrc), cap_log2, exec);

    LwcAnalysis a = analyze(lwc_from_lrc(c_lrc, cap_log2), cap_log2, exec);
    rep.lwc_d_star = a.d_star;
    rep.lwc_r_star = a.r_star;
    rep.lwc_optimal = a.optimal;

    rep.identities_hold =
        rep.lwc_d_star == rep.lrc.d && rep.lwc_r_star == rep.d_dual - 1;
    return rep;
}

}  // namespace lwc
