#include "lwc/codes.hpp"

#include <string>

namespace lwc {

LinearCode::LinearCode(BitMatrix gen, BitMatrix pcheck, bool cyclic)
    : n_(gen.rows()),
      k_(gen.cols()),
      gen_(std::move(gen)),
      pcheck_(std::move(pcheck)),
      cyclic_(cyclic) {
    if (pcheck_.rows() != n_ || pcheck_.cols() != n_ - k_)
        throw ConstructionError("LinearCode: pcheck must be n x (n-k)");
    if (rank(gen_) != k_) throw ConstructionError("LinearCode: generator is rank-deficient");
    if (rank(pcheck_) != n_ - k_)
        throw ConstructionError("LinearCode: parity check is rank-deficient");
    pcheck_t_ = pcheck_.transposed();
    if (!pcheck_t_.mul(gen_).is_zero())
        throw ConstructionError("LinearCode: pcheck^T * gen != 0");
}

namespace {
// from_col_vectors cannot infer the row count of an empty basis.
BitMatrix cols_or_empty(const std::vector<BitVector>& basis, int n) {
    return basis.empty() ? BitMatrix(n, 0) : BitMatrix::from_col_vectors(basis);
}
}  // namespace

LinearCode LinearCode::from_generator(const BitMatrix& gen, bool is_cyclic) {
    auto basis = nullspace(gen.transposed());
    return LinearCode(gen, cols_or_empty(basis, gen.rows()), is_cyclic);
}

LinearCode LinearCode::from_parity_check(const BitMatrix& pcheck, bool is_cyclic) {
    auto basis = nullspace(pcheck.transposed());
    return LinearCode(cols_or_empty(basis, pcheck.rows()), pcheck, is_cyclic);
}

LinearCode LinearCode::from_matrices(BitMatrix gen, BitMatrix pcheck, bool is_cyclic) {
    return LinearCode(std::move(gen), std::move(pcheck), is_cyclic);
}

bool LinearCode::contains(const BitVector& v) const { return pcheck_t_.mul(v).is_zero(); }

BitVector LinearCode::encode(const BitVector& m) const { return gen_.mul(m); }

namespace {
// Columns j = 0..count-1 hold the coefficients of x^j * p; with
// deg(p) + count - 1 < n no reduction mod x^n - 1 is needed.
BitMatrix shift_columns(const BinPoly& p, int n, int count) {
    BitMatrix m(n, count);
    for (int j = 0; j < count; ++j)
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i)) m.set(i + j, j, true);
    return m;
}

BinPoly reciprocal(const BinPoly& p) {
    int d = p.degree();
    std::vector<int> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = p.coeff(d - i) ? 1 : 0;
    return BinPoly::from_coeffs(c);
}
}  // namespace

LinearCode cyclic_code(int n, const BinPoly& g) {
    if (g.is_zero() || g.degree() >= n)
        throw ConstructionError("cyclic_code: generator must be nonzero with deg < n");
    auto [h, rem] = BinPoly::divmod(BinPoly::x_pow_n_plus_1(n), g);
    if (!rem.is_zero())
        throw ConstructionError("cyclic_code: " + g.to_string() +
                                " does not divide x^" + std::to_string(n) + "-1");
    int k = n - g.degree();
    BitMatrix gen = shift_columns(g, n, k);
    BitMatrix pcheck = shift_columns(reciprocal(h), n, n - k);
    return LinearCode::from_matrices(std::move(gen), std::move(pcheck), /*cyclic=*/true);
}

LinearCode hamming7() { return cyclic_code(7, BinPoly::from_coeffs({1, 1, 0, 1})); }

LinearCode simplex7() { return cyclic_code(7, BinPoly::from_coeffs({1, 1, 1, 0, 1})); }

LinearCode repetition_code(int n) {
    if (n < 2) throw ConstructionError("repetition_code: n must be >= 2");
    std::vector<int> c(n, 1);
    return cyclic_code(n, BinPoly::from_coeffs(c));
}

LinearCode spc_code(int n) {
    if (n < 2) throw ConstructionError("spc_code: n must be >= 2");
    return cyclic_code(n, BinPoly::from_coeffs({1, 1}));
}

int min_distance(const LinearCode& c, int cap_log2, Exec exec) {
    check_enum_cap("min_distance", c.k(), cap_log2);
    return scan_span(c.gen().col_vectors(), c.n(), /*covering=*/false, exec).min_weight;
}

// Dual of the dual is the original code, matrices included.
LinearCode dual(const LinearCode& c) {
    return LinearCode::from_matrices(c.pcheck(), c.gen(), c.is_cyclic());
}

std::optional<int> covering_weight(const LinearCode& c, int i, int cap_log2, Exec exec) {
    if (i < 0 || i >= c.n()) throw std::invalid_argument("covering_weight: index out of range");
    auto cov = covering_weights(c, cap_log2, exec);
    if (cov[i] < 0) return std::nullopt;
    return cov[i];
}

std::vector<int> covering_weights(const LinearCode& c, int cap_log2, Exec exec) {
    check_enum_cap("covering_weight", c.k(), cap_log2);
    return scan_span(c.gen().col_vectors(), c.n(), /*covering=*/true, exec).covering;
}

BitMatrix flip_matrix(int n) {
    if (n < 2) throw ConstructionError("flip: n must be >= 2");
    BitMatrix g(n, 1);
    for (int i = 0; i < n; ++i) g.set(i, 0, true);
    return g;
}

BitMatrix groupflip_matrix(int n, int groups) {
    if (groups < 1 || n % groups != 0)
        throw ConstructionError("groupflip: groups must divide n");
    int len = n / groups;
    if (len < 2) throw ConstructionError("groupflip: group length n/g must be >= 2");
    BitMatrix g(n, groups);
    for (int j = 0; j < groups; ++j)
        for (int i = 0; i < len; ++i) g.set(j * len + i, j, true);
    return g;
}

}  // namespace lwc
