#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schur {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a configured size/budget cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

bool is_odd_prime(std::uint32_t p);

/// Requires p to be an odd prime; throws std::invalid_argument otherwise.
void require_odd_prime(std::uint32_t p);

// Residue arithmetic mod an odd prime p < 2^16.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

/// Dense matrix over F_p, row major.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v % p_; }

  /// Rank over F_p by Gaussian elimination (works on a copy).
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

/// Number of n x l matrices over F_p of rank exactly k:
/// p^{(n+l-k)k} * C_n C_l / (C_{n-k} C_{l-k} C_k), evaluated exactly.
/// Throws std::invalid_argument if k > min(n, l).
Int rank_count(std::uint32_t p, unsigned n, unsigned l, unsigned k);

/// C_k = prod_{i=1}^{k} (1 - p^{-i}) as an exact rational (k finite).
Rat c_constant(std::uint32_t p, unsigned k);

/// C_infinity as a float, truncated once the tail is provably below `tol`.
/// The product is cut at index I with p^{-I}/(1 - p^{-1}) < tol, which bounds
/// |log tail| and hence the relative truncation error.
double c_constant_inf(std::uint32_t p, double tol = 1e-12);

/// Graded dimensions c_1..c_{depth-1} of the mod-p restricted free Lie algebra
/// on n generators: c_k = sum_{m p^j = k} l_m(n) with l_m the Witt numbers.
/// p^{sum c_k} is the order of the depth-truncated free group quotient.
struct GradedDims {
  std::uint32_t p = 3;
  unsigned n = 0;
  std::vector<long long> dims;  // dims[k-1] = c_k, 1 <= k < depth

  Int group_order() const;     // p^{sum_k c_k}
  Int odd_part_order() const;  // p^{sum_{k odd} c_k}
};

GradedDims witt_graded_dims(std::uint32_t p, unsigned n, unsigned depth);

/// Recover the partition (nu_1 >= nu_2 >= ...) of a finite abelian p-group
/// from the counts of elements x with x^{p^k} = 1:
/// counts[k] = #{x : order(x) divides p^k}, k = 0,1,... (counts[0] = 1).
/// Throws std::invalid_argument if the counts are not consistent.
std::vector<unsigned> partition_from_power_counts(std::uint32_t p,
                                                  const std::vector<Int>& counts);

}  // namespace schur
