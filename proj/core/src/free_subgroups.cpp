#include "schur/free_subgroups.hpp"

#include <stdexcept>

#include "schur/fp.hpp"

namespace schur {

unsigned CyclicKernelBasis::transversal_size() const {
  require_odd_prime(p);
  if (n < 2 || r < 1) throw std::invalid_argument("CyclicKernelBasis: need n >= 2, r >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < r; ++i) q *= p;
  return q;
}

unsigned CyclicKernelBasis::size() const { return 1 + transversal_size() * (n - 1); }

unsigned CyclicKernelBasis::symbol(unsigned i, unsigned j) const {
  return 1 + i * (n - 1) + (j - 2);
}

FreeWord CyclicKernelBasis::basis_word(unsigned idx) const {
  FreeWord w;
  if (idx == 0) {
    w.letters.assign(transversal_size(), 1);  // x_1^{p^r}
    return w;
  }
  unsigned i = (idx - 1) / (n - 1);
  unsigned j = 2 + (idx - 1) % (n - 1);
  for (unsigned k = 0; k < i; ++k) w.letters.push_back(1);
  w.letters.push_back(static_cast<int>(j));
  for (unsigned k = 0; k < i; ++k) w.letters.push_back(-1);
  return w;
}

IntVector rewrite_in_kernel(const FreeWord& w, const CyclicKernelBasis& basis) {
  const unsigned q = basis.transversal_size();
  if (w.max_index() > static_cast<int>(basis.n))
    throw std::invalid_argument("rewrite_in_kernel: letter out of range");
  IntVector v(basis.size(), 0);
  unsigned t = 0;  // current coset representative x_1^t
  for (int l : w.letters) {
    if (l == 1) {
      if (++t == q) { t = 0; v[0] += 1; }
    } else if (l == -1) {
      if (t == 0) { t = q - 1; v[0] -= 1; } else --t;
    } else if (l > 1) {
      v[basis.symbol(t, static_cast<unsigned>(l))] += 1;
    } else {
      v[basis.symbol(t, static_cast<unsigned>(-l))] -= 1;
    }
  }
  if (t != 0)
    throw std::invalid_argument("rewrite_in_kernel: word is not in the kernel (x1-exponent " +
                                std::string("not divisible by p^r)"));
  return v;
}

long long trace(const IntMatrix& m) {
  long long t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t dim = a.size();
  IntMatrix r(dim, IntVector(dim, 0));
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t k = 0; k < dim; ++k) {
      long long c = b[col][k];
      if (c == 0) continue;
      for (std::size_t row = 0; row < dim; ++row) r[col][row] += c * a[k][row];
    }
  return r;
}

bool is_identity(const IntMatrix& m) {
  for (std::size_t col = 0; col < m.size(); ++col)
    for (std::size_t row = 0; row < m.size(); ++row)
      if (m[col][row] != (row == col ? 1 : 0)) return false;
  return true;
}

namespace {

FreeWord conjugate_word(int g, const FreeWord& b) {
  FreeWord w;
  w.letters.push_back(g);
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  w.letters.push_back(-g);
  return w;
}

IntMatrix action_of(const CyclicKernelBasis& basis, auto&& word_map) {
  IntMatrix m(basis.size());
  for (unsigned idx = 0; idx < basis.size(); ++idx)
    m[idx] = rewrite_in_kernel(word_map(basis.basis_word(idx)), basis);
  return m;
}

}  // namespace

AbelianizedAction action_matrices(const CyclicKernelBasis& basis) {
  AbelianizedAction a;
  a.x1 = action_of(basis, [](const FreeWord& b) { return conjugate_word(1, b); });
  for (unsigned j = 2; j <= basis.n; ++j)
    a.xj.push_back(action_of(basis, [&](const FreeWord& b) { return conjugate_word(static_cast<int>(j), b); }));
  a.sigma = action_of(basis, [](const FreeWord& b) { return b.sigma_word(); });
  return a;
}

std::vector<CharacterRow> character_check(const CyclicKernelBasis& basis) {
  const long long q = basis.transversal_size();
  const long long n = basis.n;
  AbelianizedAction act = action_matrices(basis);
  std::vector<CharacterRow> rows;

  // row 1: chi_N(1) = 1 + [G:N](d+ - 1 + d-) with d+ = 0, d- = n
  {
    CharacterRow r;
    r.delta = "1";
    r.computed = static_cast<long long>(basis.size());
    r.predicted = 1 + q * (n - 1);
    r.match = r.computed == r.predicted;
    rows.push_back(r);
  }
  // row 2: chi_N([a]) = 1 for every a outside N; G/N is generated by [x1],
  // so the classes are exactly [x1^s] for s = 1..p^r-1
  IntMatrix pw = act.x1;
  for (long long s = 1; s < q; ++s) {
    CharacterRow r;
    r.delta = "[x1^" + std::to_string(s) + "]";
    r.computed = trace(pw);
    r.predicted = 1;
    r.match = r.computed == r.predicted;
    rows.push_back(r);
    pw = mat_mul(pw, act.x1);
  }
  // row 3: chi_N(sigma) = 1 + |(G/N)^+| (d+ - 1 - d-) = -n, since the cyclic
  // quotient is totally odd
  {
    CharacterRow r;
    r.delta = "sigma";
    r.computed = trace(act.sigma);
    r.predicted = 1 + 1 * (0 - 1 - n);
    r.match = r.computed == r.predicted;
    rows.push_back(r);
  }
  // row 4 requires some even a outside N; here (G/N)^+ = 1 forces G^+ into N
  {
    CharacterRow r;
    r.delta = "[a]sigma";
    r.vacuous = true;
    rows.push_back(r);
  }
  return rows;
}

IndexCheck index_formula_check(const CyclicKernelBasis& basis) {
  AbelianizedAction act = action_matrices(basis);
  IndexCheck c;
  c.i_n_computed = trace(act.sigma);
  long long i_g = -static_cast<long long>(basis.n);  // all generators odd
  c.rhs = 1 * (i_g - 1) + 1;
  c.match = c.i_n_computed == c.rhs;
  return c;
}

}  // namespace schur
