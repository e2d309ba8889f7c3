#pragma once

// Binary linear code objects. A code is held by a generator matrix `gen`
// (n x k, columns span the code, c = gen * m) together with a parity-check
// matrix `pcheck` (n x (n-k), columns span the dual), so dualizing is a
// field swap. Distance and covering-weight questions are answered by
// exhaustive enumeration under a configurable cap.

#include <optional>
#include <vector>

#include "lwc/gf2.hpp"
#include "lwc/kernels.hpp"

namespace lwc {

class LinearCode {
public:
    // Computes pcheck as a null-space basis; rejects rank-deficient G.
    static LinearCode from_generator(const BitMatrix& gen, bool is_cyclic = false);
    // Computes gen as a null-space basis; rejects rank-deficient H.
    static LinearCode from_parity_check(const BitMatrix& pcheck, bool is_cyclic = false);
    // Both matrices given; checks ranks and pcheck^T * gen == 0.
    static LinearCode from_matrices(BitMatrix gen, BitMatrix pcheck, bool is_cyclic = false);

    int n() const { return n_; }
    int k() const { return k_; }
    const BitMatrix& gen() const { return gen_; }
    const BitMatrix& pcheck() const { return pcheck_; }
    bool is_cyclic() const { return cyclic_; }

    // Membership test via the parity check: pcheck^T * v == 0.
    bool contains(const BitVector& v) const;
    // c = gen * m.
    BitVector encode(const BitVector& m) const;

private:
    LinearCode(BitMatrix gen, BitMatrix pcheck, bool cyclic);
    int n_, k_;
    BitMatrix gen_;     // n x k
    BitMatrix pcheck_;  // n x (n-k)
    BitMatrix pcheck_t_;
    bool cyclic_;
};

// Cyclic code of length n with generator polynomial g | x^n - 1.
// k = n - deg(g); pcheck columns span the dual, which is the cyclic code
// generated by the reciprocal of the check polynomial h = (x^n - 1)/g.
LinearCode cyclic_code(int n, const BinPoly& g);

// Stock families.
LinearCode hamming7();                 // cyclic (7,4), g = x^3+x+1
LinearCode simplex7();                 // cyclic (7,3), g = x^4+x^2+x+1
LinearCode repetition_code(int n);     // {0^n, 1^n}
LinearCode spc_code(int n);            // even-weight code, g = x+1

// Minimum Hamming weight over the 2^k - 1 nonzero codewords.
// Requires k <= cap_log2 (capacity error otherwise).
int min_distance(const LinearCode& c, int cap_log2 = kDefaultEnumCapLog2,
                 Exec exec = Exec::Parallel);

// New code with gen/pcheck roles swapped.
LinearCode dual(const LinearCode& c);

// Min weight over codewords whose support contains i; nullopt when no
// codeword covers i.
std::optional<int> covering_weight(const LinearCode& c, int i,
                                   int cap_log2 = kDefaultEnumCapLog2,
                                   Exec exec = Exec::Parallel);
// All coordinates in one scan; entry -1 where uncovered.
std::vector<int> covering_weights(const LinearCode& c,
                                  int cap_log2 = kDefaultEnumCapLog2,
                                  Exec exec = Exec::Parallel);

// G0 matrices of the toy constructions. flip: n x 1 all-ones (k = n-1).
// groupflip: n x g block diagonal of all-ones columns of length n/g
// (k = n - g); requires g | n and n/g >= 2.
BitMatrix flip_matrix(int n);
BitMatrix groupflip_matrix(int n, int groups);

}  // namespace lwc
