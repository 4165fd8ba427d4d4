#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schur/word.hpp"

namespace schur {

/// The kernel N of F_n -> Z/p^r, x_1 -> 1, x_j -> 0 (j >= 2), with its free
/// generating set from Schreier's lemma over the transversal {x_1^i}:
/// basis symbol 0 is x_1^{p^r}; symbol 1 + (i(n-1) + (j-2)) is
/// x_1^i x_j x_1^{-i} for 0 <= i < p^r, 2 <= j <= n.
struct CyclicKernelBasis {
  std::uint32_t p = 3;
  unsigned n = 2;
  unsigned r = 1;

  unsigned transversal_size() const;  // p^r
  unsigned size() const;              // 1 + p^r (n - 1)
  FreeWord basis_word(unsigned idx) const;
  unsigned symbol(unsigned i, unsigned j) const;  // index of x_1^i x_j x_1^{-i}
};

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;  // column-major action: M[col] = image of basis col

long long trace(const IntMatrix& m);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
bool is_identity(const IntMatrix& m);

/// Reidemeister-Schreier rewriting of w in the kernel basis, abelianized to
/// an integer exponent vector.  Throws std::invalid_argument when w is not in
/// the kernel (x_1-exponent not divisible by p^r) or uses letters beyond n.
IntVector rewrite_in_kernel(const FreeWord& w, const CyclicKernelBasis& basis);

/// Matrices (over Z) of the actions on N_ab: conjugation by x_1, conjugation
/// by each x_j (trivial, since x_j lies in N), and sigma.
struct AbelianizedAction {
  IntMatrix x1;
  std::vector<IntMatrix> xj;  // j = 2..n
  IntMatrix sigma;
};

AbelianizedAction action_matrices(const CyclicKernelBasis& basis);

/// One row of the character comparison for the conjugation/sigma action on
/// N_ab against the closed-form values.
struct CharacterRow {
  std::string delta;        // "1", "[x1^s]", "sigma", "[a]sigma"
  long long computed = 0;
  long long predicted = 0;
  bool match = false;
  bool vacuous = false;     // row 4 when G^+ is contained in N
};

std::vector<CharacterRow> character_check(const CyclicKernelBasis& basis);

struct IndexCheck {
  long long i_n_computed = 0;  // trace of sigma on N_ab
  long long rhs = 0;           // |(G/N)^+| (i_G - 1) + 1 with i_G = -n
  bool match = false;
};

IndexCheck index_formula_check(const CyclicKernelBasis& basis);

}  // namespace schur
