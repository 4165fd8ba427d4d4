#pragma once

#include <cstdint>
#include <vector>

#include "schur/fp.hpp"
#include "schur/sigma_group.hpp"
#include "schur/word.hpp"

namespace schur {

/// One unit of the degree-truncated free associative F_p-algebra on n
/// noncommuting variables: 1 + (terms of degree 1..depth-1), stored sparsely
/// as (monomial id, coefficient) pairs sorted by id.  Monomial ids enumerate
/// words over the variables by degree, then lexicographically; id 0 is the
/// empty monomial and always carries coefficient 1 (units only).
struct TruncatedElement {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> coeffs;

  bool operator==(const TruncatedElement& o) const { return coeffs == o.coeffs; }
  /// Content hash, stable across runs.
  std::uint64_t hash() const;
};

/// Arithmetic context for F_p<X_1..X_n> / (degree >= depth).  The unit group
/// of this algebra receives the free pro-p-group via x_j -> 1 + X_j; the
/// kernel is exactly the depth-th dimension subgroup, so group arithmetic in
/// F_n / D_depth(F_n) is faithful truncated polynomial arithmetic here.  The
/// sigma-action x_j -> x_j^{-1} becomes the algebra endomorphism
/// X_j -> (1+X_j)^{-1} - 1.
class MagnusAlgebra {
 public:
  MagnusAlgebra(std::uint32_t p, unsigned n, unsigned depth);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned depth() const { return depth_; }
  std::size_t monomial_count() const { return offsets_.back(); }

  TruncatedElement one() const;
  /// Image of x_j (j in 1..n), or of x_j^{-1} when sign < 0 (truncated
  /// geometric series sum_{k<depth} (-X_j)^k).  Throws on j out of range.
  TruncatedElement generator(unsigned j, int sign = +1) const;
  TruncatedElement mul(const TruncatedElement& a, const TruncatedElement& b) const;
  /// Inverse of a unit 1 + u via the truncated series sum_k (-u)^k.
  TruncatedElement inverse(const TruncatedElement& a) const;
  TruncatedElement sigma(const TruncatedElement& a) const;
  bool is_one(const TruncatedElement& a) const;
  /// True iff sigma(a) * a = 1 in the truncated algebra.
  bool is_odd(const TruncatedElement& a) const;

  TruncatedElement eval(const FreeWord& w) const;

  /// Degree-truncation to a shallower context with the same p and n.
  TruncatedElement truncate_to(const TruncatedElement& a, const MagnusAlgebra& target) const;

  unsigned monomial_degree(std::uint32_t id) const;

 private:
  std::uint32_t concat(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  unsigned n_, depth_;
  std::vector<std::uint32_t> offsets_;  // offsets_[d] = first id of degree d; one past-the-end entry
  std::vector<TruncatedElement> gen_, gen_inv_, sigma_img_;
};

/// Enumerate F_{n,depth} := F_n / D_depth(F_n) as a concrete SigmaGroup by
/// BFS closure from the identity under right multiplication by the 2n
/// generator images.  The resulting order is checked against p^{sum Witt
/// dims}; disagreement raises std::logic_error.  Throws CapExceeded
/// (reporting the predicted order) if that order exceeds size_cap.
SigmaGroup enumerate_group(std::uint32_t p, unsigned n, unsigned depth,
                           std::uint64_t size_cap = 1'000'000);

}  // namespace schur
