#include "lwc/gf2.hpp"

#include <algorithm>
#include <bit>

namespace lwc {

namespace {
// Zeroes the unused high bits of the last word so weight/compare stay exact.
uint64_t tail_mask(int len) {
    int r = len & 63;
    return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
}
}  // namespace

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVector: expected a string over {0,1}");
    }
    return v;
}

BitVector BitVector::ones(int n) {
    BitVector v(n);
    if (n == 0) return v;
    for (auto& w : v.w_) w = ~uint64_t{0};
    v.w_.back() &= tail_mask(n);
    return v;
}

int BitVector::weight() const {
    int w = 0;
    for (uint64_t x : w_) w += std::popcount(x);
    return w;
}

bool BitVector::is_zero() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

std::vector<int> BitVector::support() const {
    std::vector<int> s;
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t x = w_[k];
        while (x) {
            s.push_back(static_cast<int>(k * 64) + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return s;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in xor");
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

bool BitVector::dot(const BitVector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in dot");
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

BitVector BitVector::complement() const {
    BitVector v(len_);
    if (len_ == 0) return v;
    for (size_t k = 0; k < w_.size(); ++k) v.w_[k] = ~w_[k];
    v.w_.back() &= tail_mask(len_);
    return v;
}

bool BitVector::lex_less(const BitVector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in compare");
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t diff = w_[k] ^ o.w_[k];
        if (diff) {
            int bit = std::countr_zero(diff);
            return !((w_[k] >> bit) & 1u);  // first differing bit 0 => smaller
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative dimension");
    w_.assign(static_cast<size_t>(rows) * wpr_, 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BitMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("BitMatrix: ragged rows");
        for (int j = 0; j < c; ++j) {
            if (rows[i][j] != 0 && rows[i][j] != 1)
                throw std::invalid_argument("BitMatrix: entries must be 0 or 1");
            m.set(i, j, rows[i][j] != 0);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_col_vectors(const std::vector<BitVector>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : cols[0].size();
    BitMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw std::invalid_argument("BitMatrix: ragged columns");
        for (int i = 0; i < r; ++i) m.set(i, j, cols[j].get(i));
    }
    return m;
}

BitVector BitMatrix::row(int r) const {
    BitVector v(cols_);
    for (int j = 0; j < cols_; ++j) v.set(j, get(r, j));
    return v;
}

BitVector BitMatrix::col(int c) const {
    BitVector v(rows_);
    for (int i = 0; i < rows_; ++i) v.set(i, get(i, c));
    return v;
}

std::vector<BitVector> BitMatrix::col_vectors() const {
    std::vector<BitVector> cols;
    cols.reserve(cols_);
    for (int j = 0; j < cols_; ++j) cols.push_back(col(j));
    return cols;
}

void BitMatrix::xor_row(int dst, int src) {
    uint64_t* d = &w_[static_cast<size_t>(dst) * wpr_];
    const uint64_t* s = &w_[static_cast<size_t>(src) * wpr_];
    for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(w_.begin() + static_cast<size_t>(a) * wpr_,
                     w_.begin() + static_cast<size_t>(a + 1) * wpr_,
                     w_.begin() + static_cast<size_t>(b) * wpr_);
}

BitVector BitMatrix::mul(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix: size mismatch in mat-vec");
    BitVector y(rows_);
    const auto& xs = x.words();
    for (int i = 0; i < rows_; ++i) {
        const uint64_t* r = &w_[static_cast<size_t>(i) * wpr_];
        uint64_t acc = 0;
        for (int k = 0; k < wpr_; ++k) acc ^= r[k] & xs[k];
        y.set(i, std::popcount(acc) & 1);
    }
    return y;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix: size mismatch in matmul");
    BitMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t)
            if (get(i, t))
                for (int k = 0; k < o.wpr_; ++k)
                    out.w_[static_cast<size_t>(i) * out.wpr_ + k] ^=
                        o.w_[static_cast<size_t>(t) * o.wpr_ + k];
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

bool BitMatrix::is_zero() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, 0, {}};
    BitMatrix& a = res.reduced;
    int pr = 0;
    for (int c = 0; c < a.cols() && pr < a.rows(); ++c) {
        int pivot = -1;
        for (int r = pr; r < a.rows(); ++r)
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.swap_rows(pr, pivot);
        for (int r = 0; r < a.rows(); ++r)
            if (r != pr && a.get(r, c)) a.xor_row(r, pr);
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = pr;
    return res;
}

int rank(const BitMatrix& m) { return rref(m).rank; }

std::vector<BitVector> nullspace(const BitMatrix& a) {
    RrefResult rr = rref(a);
    std::vector<int> pivot_of_col(a.cols(), -1);
    for (int i = 0; i < rr.rank; ++i) pivot_of_col[rr.pivot_cols[i]] = i;

    std::vector<BitVector> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        BitVector v(a.cols());
        v.set(c, true);
        // Free column c: read its dependence on the pivots off the rref.
        for (int i = 0; i < rr.rank; ++i)
            if (rr.reduced.get(i, c)) v.set(rr.pivot_cols[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != b.size())
        throw std::invalid_argument("solve: A.rows() must equal b.size()");

    // Eliminate on [A | b | I] so an inconsistent row still names the
    // combination of input rows that produced it.
    int m = a.rows(), w = a.cols();
    BitMatrix aug(m, w + 1 + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < w; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, w, b.get(i));
        aug.set(i, w + 1 + i, true);
    }

    int pr = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c < w && pr < m; ++c) {
        int pivot = -1;
        for (int r = pr; r < m; ++r)
            if (aug.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        aug.swap_rows(pr, pivot);
        for (int r = 0; r < m; ++r)
            if (r != pr && aug.get(r, c)) aug.xor_row(r, pr);
        pivot_cols.push_back(c);
        ++pr;
    }

    SolveResult res;
    for (int r = pr; r < m; ++r) {
        if (aug.get(r, w)) {  // 0 = 1 row
            for (int i = 0; i < m; ++i)
                if (aug.get(r, w + 1 + i)) res.witness_rows.push_back(i);
            res.consistent = false;
            return res;
        }
    }

    res.consistent = true;
    res.particular = BitVector(w);
    for (int i = 0; i < pr; ++i)
        if (aug.get(i, w)) res.particular.set(pivot_cols[i], true);

    std::vector<int> pivot_of_col(w, -1);
    for (int i = 0; i < pr; ++i) pivot_of_col[pivot_cols[i]] = i;
    for (int c = 0; c < w; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        BitVector v(w);
        v.set(c, true);
        for (int i = 0; i < pr; ++i)
            if (aug.get(i, c)) v.set(pivot_cols[i], true);
        res.null_basis.push_back(std::move(v));
    }
    return res;
}

BinPoly BinPoly::from_coeffs(const std::vector<int>& coeffs) {
    BinPoly p;
    p.bits_.assign(coeffs.size(), false);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0 && coeffs[i] != 1)
            throw std::invalid_argument("BinPoly: coefficients must be 0 or 1");
        p.bits_[i] = coeffs[i] != 0;
    }
    p.trim();
    return p;
}

BinPoly BinPoly::x_pow_n_plus_1(int n) {
    if (n <= 0) throw std::invalid_argument("BinPoly: n must be positive");
    BinPoly p;
    p.bits_.assign(n + 1, false);
    p.bits_[0] = p.bits_[n] = true;
    return p;
}

int BinPoly::degree() const {
    for (int i = static_cast<int>(bits_.size()) - 1; i >= 0; --i)
        if (bits_[i]) return i;
    return -1;
}

std::vector<int> BinPoly::coeffs() const {
    std::vector<int> c(std::max(degree() + 1, 0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = bits_[i] ? 1 : 0;
    return c;
}

void BinPoly::trim() {
    while (!bits_.empty() && !bits_.back()) bits_.pop_back();
}

BinPoly BinPoly::operator+(const BinPoly& o) const {
    BinPoly r;
    r.bits_.assign(std::max(bits_.size(), o.bits_.size()), false);
    for (size_t i = 0; i < r.bits_.size(); ++i)
        r.bits_[i] = (i < bits_.size() && bits_[i]) ^ (i < o.bits_.size() && o.bits_[i]);
    r.trim();
    return r;
}

BinPoly BinPoly::operator*(const BinPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    BinPoly r;
    r.bits_.assign(degree() + o.degree() + 1, false);
    for (int i = 0; i <= degree(); ++i) {
        if (!bits_[i]) continue;
        for (int j = 0; j <= o.degree(); ++j)
            if (o.bits_[j]) r.bits_[i + j] = !r.bits_[i + j];
    }
    r.trim();
    return r;
}

std::pair<BinPoly, BinPoly> BinPoly::divmod(const BinPoly& num, const BinPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("BinPoly: division by zero polynomial");
    BinPoly rem = num, quot;
    int dd = den.degree();
    if (num.degree() >= dd) quot.bits_.assign(num.degree() - dd + 1, false);
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        quot.bits_[shift] = true;
        for (int j = 0; j <= dd; ++j)
            if (den.bits_[j]) rem.bits_[j + shift] = !rem.bits_[j + shift];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

bool BinPoly::operator==(const BinPoly& o) const {
    int d = degree();
    if (d != o.degree()) return false;
    for (int i = 0; i <= d; ++i)
        if (bits_[i] != o.bits_[i]) return false;
    return true;
}

std::string BinPoly::to_string() const {
    int d = degree();
    if (d < 0) return "0";
    std::string s;
    for (int i = d; i >= 0; --i) {
        if (!bits_[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

bool polymod_divides(const BinPoly& g, int n) {
    if (g.is_zero()) throw std::invalid_argument("polymod_divides: zero polynomial");
    if (g.degree() >= n)
        throw std::invalid_argument("polymod_divides: deg(g) must be below n");
    auto [q, r] = BinPoly::divmod(BinPoly::x_pow_n_plus_1(n), g);
    return r.is_zero();
}

}  // namespace lwc
