#include "schur/fp.hpp"

#include <algorithm>
#include <cmath>

namespace schur {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint32_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime >= 3");
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("fp_inv of zero");
  return fp_pow(a, p - 2, p);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  require_odd_prime(p);
}

std::size_t FpMatrix::rank() const {
  std::vector<std::uint32_t> m = a_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r)
      if (m[r * cols_ + col] != 0) { pivot = r; break; }
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols_; ++c)
        std::swap(m[pivot * cols_ + c], m[rank * cols_ + c]);
    std::uint32_t piv_inv = fp_inv(m[rank * cols_ + col], p_);
    for (std::size_t c = col; c < cols_; ++c)
      m[rank * cols_ + c] = fp_mul(m[rank * cols_ + c], piv_inv, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      std::uint32_t f = m[r * cols_ + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols_; ++c)
        m[r * cols_ + c] = fp_sub(m[r * cols_ + c], fp_mul(f, m[rank * cols_ + c], p_), p_);
    }
    ++rank;
  }
  return rank;
}

namespace {

// prod_{i=1}^{k} (p^i - 1); C_k = this / p^{k(k+1)/2}
Int q_factorial_num(std::uint32_t p, unsigned k) {
  Int r = 1, pi = 1;
  for (unsigned i = 1; i <= k; ++i) {
    pi *= p;
    r *= pi - 1;
  }
  return r;
}

}  // namespace

Int rank_count(std::uint32_t p, unsigned n, unsigned l, unsigned k) {
  require_odd_prime(p);
  if (n < l) std::swap(n, l);  // count is symmetric under transposition
  if (k > l) throw std::invalid_argument("rank_count: k exceeds min(n, l)");
  // p^{(n+l-k)k} * C_n C_l / (C_{n-k} C_{l-k} C_k).  In terms of the integer
  // products Q_k := prod (p^i - 1), the powers of p cancel to give
  // p^{(n+l-k)k - k(k+1)/2 ... } -- assemble as an exact rational and check
  // integrality at the end.
  Rat c = Rat(q_factorial_num(p, n)) * q_factorial_num(p, l);
  c /= q_factorial_num(p, n - k);
  c /= q_factorial_num(p, l - k);
  c /= q_factorial_num(p, k);
  // exponent of p: (n+l-k)k - [n(n+1) + l(l+1) - (n-k)(n-k+1) - (l-k)(l-k+1) - k(k+1)]/2
  long long e = static_cast<long long>(n + l - k) * k;
  auto tri = [](long long x) { return x * (x + 1) / 2; };
  e -= tri(n) + tri(l) - tri(n - k) - tri(l - k) - tri(k);
  Int pe = 1;
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) pe *= p;
  if (e >= 0) c *= pe; else c /= pe;
  if (denominator(c) != 1) throw std::logic_error("rank_count: non-integral result");
  return numerator(c);
}

Rat c_constant(std::uint32_t p, unsigned k) {
  require_odd_prime(p);
  Rat r = 1;
  Int pi = 1;
  for (unsigned i = 1; i <= k; ++i) {
    pi *= p;
    r *= Rat(pi - 1, pi);
  }
  return r;
}

double c_constant_inf(std::uint32_t p, double tol) {
  require_odd_prime(p);
  if (!(tol > 0)) throw std::invalid_argument("c_constant_inf: tolerance must be positive");
  // Tail bound: 0 <= -log prod_{i>I}(1-p^-i) <= sum_{i>I} p^-i / (1-p^-1)
  //                                           <= p^-I / (p-1) / (1-p^-1).
  double r = 1.0;
  double pinv = 1.0 / p;
  double term = 1.0;
  unsigned i = 0;
  for (;;) {
    ++i;
    term *= pinv;  // p^{-i}
    r *= 1.0 - term;
    if (term / (1.0 - pinv) < tol) break;
    if (i > 4096) throw std::logic_error("c_constant_inf failed to converge");
  }
  return r;
}

Int GradedDims::group_order() const {
  long long s = 0;
  for (long long c : dims) s += c;
  Int r = 1;
  for (long long i = 0; i < s; ++i) r *= p;
  return r;
}

Int GradedDims::odd_part_order() const {
  long long s = 0;
  for (std::size_t k = 1; k <= dims.size(); ++k)
    if (k % 2 == 1) s += dims[k - 1];
  Int r = 1;
  for (long long i = 0; i < s; ++i) r *= p;
  return r;
}

namespace {

int moebius(unsigned m) {
  int mu = 1;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return 0;
      mu = -mu;
    }
  }
  if (m > 1) mu = -mu;
  return mu;
}

// Witt number l_m(n) = (1/m) sum_{d | m} mu(d) n^{m/d}
long long witt_number(unsigned n, unsigned m) {
  Int s = 0;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Int t = 1;
    for (unsigned i = 0; i < m / d; ++i) t *= n;
    s += mu * t;
  }
  Int l = s / m;
  if (l * m != s) throw std::logic_error("witt_number: non-integral");
  return static_cast<long long>(l);
}

}  // namespace

GradedDims witt_graded_dims(std::uint32_t p, unsigned n, unsigned depth) {
  require_odd_prime(p);
  if (depth < 2 || n < 1) throw std::invalid_argument("witt_graded_dims: need depth >= 2, n >= 1");
  GradedDims g;
  g.p = p;
  g.n = n;
  g.dims.resize(depth - 1);
  for (unsigned k = 1; k < depth; ++k) {
    long long c = 0;
    unsigned q = 1;  // p^j
    for (;;) {
      if (k % q == 0) c += witt_number(n, k / q);
      if (q > k / p) break;
      q *= p;
    }
    g.dims[k - 1] = c;
  }
  return g;
}

std::vector<unsigned> partition_from_power_counts(std::uint32_t p,
                                                  const std::vector<Int>& counts) {
  // lambda_k := log_p counts[k] = sum_j min(nu_j, k); then the conjugate
  // partition has parts m_k = lambda_k - lambda_{k-1} = #{j : nu_j >= k}.
  if (counts.empty() || counts[0] != 1)
    throw std::invalid_argument("power counts must start with counts[0] = 1");
  std::vector<long long> lambda(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    Int c = counts[k];
    long long e = 0;
    while (c > 1) {
      if (c % p != 0) throw std::invalid_argument("power count not a power of p");
      c /= p;
      ++e;
    }
    lambda[k] = e;
  }
  std::vector<long long> m;  // conjugate parts
  for (std::size_t k = 1; k < lambda.size(); ++k) {
    long long d = lambda[k] - lambda[k - 1];
    if (d < 0 || (!m.empty() && d > m.back()))
      throw std::invalid_argument("power counts not consistent with an abelian p-group");
    m.push_back(d);
  }
  if (!m.empty() && m.back() != 0)
    throw std::invalid_argument("power counts truncated before the exponent was reached");
  std::vector<unsigned> nu;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    long long parts_ge_k = m[k - 1];
    long long parts_ge_k1 = k < m.size() ? m[k] : 0;
    for (long long i = 0; i < parts_ge_k - parts_ge_k1; ++i)
      nu.push_back(static_cast<unsigned>(k));
  }
  std::sort(nu.rbegin(), nu.rend());
  return nu;
}

}  // namespace schur
