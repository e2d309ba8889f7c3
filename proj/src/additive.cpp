#include "lwc/additive.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lwc {

namespace {

// Inverse of a square matrix via Gauss-Jordan on [M | I].
BitMatrix invert(const BitMatrix& m) {
    int n = m.rows();
    BitMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, n + i, true);
    }
    auto rr = rref(aug);
    BitMatrix inv(n, n);
    for (int i = 0; i < n; ++i) {
        if (i >= rr.rank || rr.pivot_cols[i] != i)
            throw std::invalid_argument("invert: singular matrix");
        for (int j = 0; j < n; ++j) inv.set(i, j, rr.reduced.get(i, n + j));
    }
    return inv;
}

// Greedy independent row set scanning from the last row up, so a G0 whose
// bottom block is already invertible keeps the identity permutation.
std::vector<int> pick_parity_rows(const BitMatrix& g0) {
    int n = g0.rows(), nk = g0.cols();
    std::vector<BitVector> reduced;  // mutually reduced independent rows
    std::vector<int> rows;
    for (int i = n - 1; i >= 0 && static_cast<int>(rows.size()) < nk; --i) {
        BitVector v = g0.row(i);
        for (const auto& r : reduced) {
            auto sup = r.support();
            if (!sup.empty() && v.get(sup.front())) v ^= r;
        }
        if (!v.is_zero()) {
            // Normalize so each kept row leads at a distinct column.
            int lead = v.support().front();
            for (auto& r : reduced)
                if (r.get(lead)) r ^= v;
            reduced.push_back(v);
            std::sort(reduced.begin(), reduced.end(),
                      [](const BitVector& a, const BitVector& b) {
                          return a.support().front() < b.support().front();
                      });
            rows.push_back(i);
        }
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

AdditiveCode::AdditiveCode(BitMatrix g0, BitMatrix h0, BitMatrix r,
                           std::vector<int> perm, LinearCode c0)
    : n_(g0.rows()),
      k_(h0.cols()),
      g0_(std::move(g0)),
      h0_(std::move(h0)),
      r_(std::move(r)),
      perm_(std::move(perm)),
      c0_(std::move(c0)) {
    inv_perm_.assign(n_, 0);
    for (int pos = 0; pos < n_; ++pos) inv_perm_[perm_[pos]] = pos;
}

AdditiveCode AdditiveCode::build(const BitMatrix& g0_in, bool c0_cyclic, int cap_log2) {
    int n = g0_in.rows();
    int nk = g0_in.cols();
    int k = n - nk;
    if (k <= 0 || nk <= 0) throw ConstructionError("build: need 0 < n-k < n");
    if (rank(g0_in) != nk) throw ConstructionError("build: G0 is rank-deficient");

    std::vector<int> parity_rows = pick_parity_rows(g0_in);

    std::vector<int> perm;
    perm.reserve(n);
    {
        std::vector<bool> is_parity(n, false);
        for (int i : parity_rows) is_parity[i] = true;
        for (int i = 0; i < n; ++i)
            if (!is_parity[i]) perm.push_back(i);
        for (int i : parity_rows) perm.push_back(i);
    }

    // Column-reduce so the parity block becomes the identity; column
    // operations leave the column space C0 untouched.
    BitMatrix bottom(nk, nk);
    for (int j = 0; j < nk; ++j)
        for (int c = 0; c < nk; ++c) bottom.set(j, c, g0_in.get(perm[k + j], c));
    BitMatrix sys(n, nk);
    for (int pos = 0; pos < n; ++pos)
        for (int c = 0; c < nk; ++c) sys.set(pos, c, g0_in.get(perm[pos], c));
    BitMatrix reduced_sys = sys.mul(invert(bottom));

    BitMatrix r_block(k, nk);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < nk; ++j) r_block.set(i, j, reduced_sys.get(i, j));

    BitMatrix g0(n, nk), h0(n, k);
    for (int pos = 0; pos < n; ++pos)
        for (int j = 0; j < nk; ++j) g0.set(perm[pos], j, reduced_sys.get(pos, j));
    // H0^T = [I_k  R] on systematic positions; over GF(2) the R terms cancel
    // against [R; I], giving H0^T G0 = 0.
    for (int i = 0; i < k; ++i) h0.set(perm[i], i, true);
    for (int j = 0; j < nk; ++j)
        for (int i = 0; i < k; ++i) h0.set(perm[k + j], i, r_block.get(i, j));

    if (!h0.transposed().mul(g0).is_zero())
        throw ConstructionError("build: H0^T * G0 != 0");

    LinearCode c0 = LinearCode::from_generator(g0, c0_cyclic);
    AdditiveCode code(std::move(g0), std::move(h0), std::move(r_block),
                      std::move(perm), std::move(c0));
    if (k <= cap_log2 && nk <= cap_log2) code.analysis_ = analyze(code, cap_log2);
    return code;
}

BitVector AdditiveCode::assemble(const BitVector& m, const BitVector& p) const {
    if (m.size() != k_ || p.size() != n_ - k_)
        throw std::invalid_argument("assemble: size mismatch");
    BitVector c = g0_.mul(p);
    for (int i = 0; i < k_; ++i)
        if (m.get(i)) c.flip(perm_[i]);
    return c;
}

namespace {

struct CosetPick {
    BitVector word;  // chosen codeword, original coordinate order
    bool minimal;
};

// Minimize cost(c) = ||c ^ target|| over the masking solutions
// p = particular + span(basis); ties go to the lexicographically smallest p.
// Above the cap: first-feasible (the particular solution), flagged.
CosetPick pick_codeword(const AdditiveCode& code, const BitVector& base_msg_part,
                        const SolveResult& sol, const BitVector& target,
                        int coset_cap_log2) {
    const BitMatrix& g0 = code.g0();
    auto word_for = [&](const BitVector& p) {
        BitVector c = base_msg_part;
        c ^= g0.mul(p);
        return c;
    };

    int dim = static_cast<int>(sol.null_basis.size());
    if (dim > coset_cap_log2)
        return {word_for(sol.particular), false};

    BitVector p = sol.particular;
    BitVector c = word_for(p);
    BitVector best_p = p, best_c = c;
    int best_cost = (c ^ target).weight();

    // Gray walk over the coset; both p and c advance by one precomputed step.
    std::vector<BitVector> c_step(dim, BitVector(code.n()));
    for (int j = 0; j < dim; ++j) c_step[j] = g0.mul(sol.null_basis[j]);
    uint64_t total = uint64_t{1} << dim;
    for (uint64_t idx = 1; idx < total; ++idx) {
        int j = std::countr_zero(idx);
        p ^= sol.null_basis[j];
        c ^= c_step[j];
        int cost = (c ^ target).weight();
        if (cost < best_cost || (cost == best_cost && p.lex_less(best_p))) {
            best_cost = cost;
            best_p = p;
            best_c = c;
        }
    }
    return {best_c, true};
}

// Constraint system: rows of G0 at the defect positions, right-hand side
// s_i - (m,0)_i.
SolveResult masking_system(const AdditiveCode& code, const BitVector& base_msg_part,
                           const ChannelState& s, const std::vector<int>& defects) {
    int nk = code.n() - code.k();
    BitMatrix a(static_cast<int>(defects.size()), nk);
    BitVector b(static_cast<int>(defects.size()));
    for (size_t r = 0; r < defects.size(); ++r) {
        int d = defects[r];
        for (int j = 0; j < nk; ++j) a.set(static_cast<int>(r), j, code.g0().get(d, j));
        b.set(static_cast<int>(r), s.stuck_value(d) ^ base_msg_part.get(d));
    }
    return solve(a, b);
}

BitVector message_part(const AdditiveCode& code, const BitVector& m) {
    BitVector base(code.n());
    for (int i = 0; i < code.k(); ++i)
        if (m.get(i)) base.set(code.perm()[i], true);
    return base;
}

std::optional<int> single_defect_bound(const AdditiveCode& code,
                                       const ChannelState& s, int delta_weight,
                                       int slack) {
    if (s.defect_count() > 1 || !code.analysis()) return std::nullopt;
    return delta_weight + code.analysis()->r_star + slack;
}

}  // namespace

EncodeResult encode_initial(const AdditiveCode& code, const BitVector& m,
                            const ChannelState& s, int coset_cap_log2) {
    if (m.size() != code.k()) throw std::invalid_argument("encode: message length != k");
    if (s.size() != code.n()) throw std::invalid_argument("encode: state length != n");

    EncodeResult res;
    BitVector base = message_part(code, m);
    auto defects = s.defect_positions();
    SolveResult sol = masking_system(code, base, s, defects);
    if (!sol.consistent) {
        for (int r : sol.witness_rows) res.failure.unsatisfiable.push_back(defects[r]);
        if (code.analysis() &&
            s.defect_count() <= code.analysis()->d_star - 1)
            throw std::logic_error("encode_initial: masking failed below d*-1 defects");
        return res;
    }

    CosetPick pick = pick_codeword(code, base, sol, BitVector(code.n()), coset_cap_log2);
    res.ok = true;
    res.word = pick.word;
    res.report.minimal = pick.minimal;
    res.report.write_cost = pick.word.weight() - s.nonzero_defect_count();
    for (int i = 0; i < code.n(); ++i)
        if (pick.word.get(i) && s.is_normal(i)) res.report.cells_touched.push_back(i);
    // Single-defect write bound ||m|| + r*.
    res.report.bound = single_defect_bound(code, s, m.weight(), 0);
    return res;
}

EncodeResult encode_update(const AdditiveCode& code, const BitVector& c_prev,
                           const BitVector& m_new, const ChannelState& s,
                           int coset_cap_log2) {
    if (c_prev.size() != code.n())
        throw std::invalid_argument("encode_update: previous word length != n");
    if (m_new.size() != code.k())
        throw std::invalid_argument("encode_update: message length != k");
    if (s.size() != code.n())
        throw std::invalid_argument("encode_update: state length != n");
    if (!(apply(c_prev, s) == c_prev))
        throw std::invalid_argument("encode_update: previous word does not mask the state");

    EncodeResult res;
    BitVector base = message_part(code, m_new);
    auto defects = s.defect_positions();
    SolveResult sol = masking_system(code, base, s, defects);
    if (!sol.consistent) {
        for (int r : sol.witness_rows) res.failure.unsatisfiable.push_back(defects[r]);
        if (code.analysis() &&
            s.defect_count() <= code.analysis()->d_star - 1)
            throw std::logic_error("encode_update: masking failed below d*-1 defects");
        return res;
    }

    CosetPick pick = pick_codeword(code, base, sol, c_prev, coset_cap_log2);
    res.ok = true;
    res.word = pick.word;
    res.report.minimal = pick.minimal;
    BitVector diff = pick.word ^ c_prev;
    res.report.rewrite_cost = diff.weight();
    res.report.cells_touched = diff.support();
    // Single-defect rewrite bound ||m - m'|| + r* - 1.
    BitVector m_prev = decode(code, c_prev);
    res.report.bound = single_defect_bound(code, s, (m_prev ^ m_new).weight(), -1);
    return res;
}

BitVector decode(const AdditiveCode& code, const BitVector& y) {
    if (y.size() != code.n()) throw std::invalid_argument("decode: word length != n");
    // m = y_msg + R * y_parity on systematic positions.
    BitVector parity(code.n() - code.k());
    for (int j = 0; j < code.n() - code.k(); ++j)
        parity.set(j, y.get(code.perm_[code.k() + j]));
    BitVector m = code.r_.mul(parity);
    for (int i = 0; i < code.k(); ++i)
        if (y.get(code.perm_[i])) m.flip(i);
    return m;
}

LwcAnalysis analyze(const AdditiveCode& code, int cap_log2, Exec exec) {
    if (code.analysis()) return *code.analysis();

    int n = code.n(), k = code.k();
    LwcAnalysis a;
    check_enum_cap("analyze: d* needs the null space of G0^T, dimension", k, cap_log2);
    a.d_star = scan_span(nullspace(code.g0().transposed()), n, false, exec).min_weight;

    check_enum_cap("analyze: locality needs C0, dimension", n - k, cap_log2);
    auto cov = scan_span(code.g0().col_vectors(), n, true, exec).covering;
    a.locality.resize(n);
    a.r_star = 0;
    bool all_covered = true;
    for (int i = 0; i < n; ++i) {
        a.locality[i] = cov[i] < 0 ? -1 : cov[i] - 1;
        all_covered = all_covered && cov[i] >= 0;
        a.r_star = std::max(a.r_star, a.locality[i]);
    }

    // The locality bound needs every coordinate covered; a zero row of G0
    // leaves its cell unmaskable and the locality unbounded there.
    if (all_covered && a.r_star >= 1) {
        int rhs = n - k - (k + a.r_star - 1) / a.r_star + 2;
        a.optimal = a.d_star == rhs;
        if (a.d_star > rhs)
            throw std::logic_error("analyze: d* exceeds the locality bound");
    }
    return a;
}

KuznetsovBounds kuznetsov_bounds(int n, int t) {
    if (n < 1 || t < 0 || t > n)
        throw std::invalid_argument("kuznetsov_bounds: need 0 <= t <= n");
    KuznetsovBounds b;
    b.upper = n - t;
    if (t == 0) {
        // ln(2^0 * choose(n,0)) = 0 makes the log term degenerate; both
        // bounds collapse to n.
        b.lower = n;
        return b;
    }
    long double ln_x = t * std::log(2.0L) + std::log(static_cast<long double>(binomial(n, t)));
    int ceil_term = static_cast<int>(std::ceil(std::log2(ln_x)));
    b.lower = std::max(0, n - t - ceil_term);
    return b;
}

int singleton_bound(int n, int k, int r_star) {
    if (r_star < 1 || r_star > k)
        throw std::invalid_argument("singleton_bound: need 1 <= r_star <= k");
    return n - k - (k + r_star - 1) / r_star + 2;
}

}  // namespace lwc
