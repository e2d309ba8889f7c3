#pragma once

// Dense GF(2) linear algebra on bit-packed words: vectors, matrices,
// Gauss-Jordan elimination, null spaces, and polynomials mod x^n - 1.
//
// Conventions used throughout the library:
//   - vectors are column vectors; a matrix-vector product M*x takes x of
//     length M.cols() and yields a vector of length M.rows()
//   - all indexing is 0-based, including everything that crosses the CLI
//     or file formats
//   - bit strings read left to right: s[0] is coordinate 0

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lwc {

// Thrown when an exhaustive enumeration would exceed the configured cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a code constructor is handed inconsistent ingredients.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int n) : len_(check_len(n)), w_((n + 63) / 64, 0) {}

    // Parses a string over {0,1}; s[i] becomes bit i.
    static BitVector from_string(std::string_view s);
    static BitVector ones(int n);

    int size() const { return len_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        if (v)
            w_[i >> 6] |= uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    int weight() const;
    bool is_zero() const;
    std::vector<int> support() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    // Parity of the AND, i.e. the GF(2) inner product.
    bool dot(const BitVector& o) const;

    // Bitwise complement within the vector's length.
    BitVector complement() const;

    // Lexicographic order reading bit 0 first ("0..." < "1...").
    bool lex_less(const BitVector& o) const;

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }

    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return w_; }

private:
    static int check_len(int n) {
        if (n < 0) throw std::invalid_argument("BitVector: negative length");
        return n;
    }
    int len_ = 0;
    std::vector<uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    // Rows given as 0/1 arrays; all rows must share one length.
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static BitMatrix from_col_vectors(const std::vector<BitVector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        if (v)
            w_[r * wpr_ + (c >> 6)] |= uint64_t{1} << (c & 63);
        else
            w_[r * wpr_ + (c >> 6)] &= ~(uint64_t{1} << (c & 63));
    }

    BitVector row(int r) const;
    BitVector col(int c) const;
    std::vector<BitVector> col_vectors() const;

    void xor_row(int dst, int src);  // row[dst] ^= row[src]
    void swap_rows(int a, int b);

    // y = M * x with x.size() == cols().
    BitVector mul(const BitVector& x) const;
    BitMatrix mul(const BitMatrix& o) const;
    BitMatrix transposed() const;

    bool is_zero() const;
    bool operator==(const BitMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

struct RrefResult {
    BitMatrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;  // strictly increasing
};

// Gauss-Jordan reduced row echelon form.
RrefResult rref(const BitMatrix& m);

int rank(const BitMatrix& m);

// Basis of {x : A*x = 0}; size == cols - rank(A).
std::vector<BitVector> nullspace(const BitMatrix& a);

struct SolveResult {
    bool consistent = false;
    BitVector particular;               // one solution of A*x = b
    std::vector<BitVector> null_basis;  // basis of {x : A*x = 0}
    // When inconsistent: indices of input rows whose XOR yields 0 = 1.
    std::vector<int> witness_rows;
};

// Solves A*x = b; the full solution set is particular + span(null_basis).
SolveResult solve(const BitMatrix& a, const BitVector& b);

// Polynomial over GF(2), coefficient of x^i stored at bit i.
class BinPoly {
public:
    BinPoly() = default;  // zero polynomial
    // coeffs[i] is the coefficient of x^i.
    static BinPoly from_coeffs(const std::vector<int>& coeffs);
    static BinPoly x_pow_n_plus_1(int n);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    bool coeff(int i) const { return i < static_cast<int>(bits_.size()) && bits_[i]; }
    std::vector<int> coeffs() const;

    BinPoly operator+(const BinPoly& o) const;
    BinPoly operator*(const BinPoly& o) const;

    // Long division: returns {quotient, remainder}.
    static std::pair<BinPoly, BinPoly> divmod(const BinPoly& num, const BinPoly& den);

    bool operator==(const BinPoly& o) const;

    std::string to_string() const;  // e.g. "x^3+x+1"

private:
    void trim();
    std::vector<bool> bits_;
};

// True iff g divides x^n - 1 over GF(2). Requires g nonzero, deg(g) < n.
bool polymod_divides(const BinPoly& g, int n);

}  // namespace lwc
