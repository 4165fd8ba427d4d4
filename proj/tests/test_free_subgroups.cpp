#include <doctest.h>

#include <stdexcept>

#include "schur/free_subgroups.hpp"

using namespace schur;

TEST_CASE("rewrite_in_kernel: pinned basis images") {
  CyclicKernelBasis b{3, 2, 1};
  CHECK(b.size() == 4);

  // x1^{p^r} -> unit vector on symbol 0
  IntVector v0 = rewrite_in_kernel(FreeWord::parse("1 1 1"), b);
  CHECK(v0 == IntVector{1, 0, 0, 0});

  // x2 -> unit vector on x1^0 x2 x1^0
  IntVector v2 = rewrite_in_kernel(FreeWord::parse("2"), b);
  CHECK(v2 == IntVector{0, 1, 0, 0});

  // x1^{p^r} x2 x1^{-p^r} has the same abelianized image as x2
  IntVector conj = rewrite_in_kernel(FreeWord::parse("1 1 1 2 -1 -1 -1"), b);
  CHECK(conj == v2);

  CHECK_THROWS_AS(rewrite_in_kernel(FreeWord::parse("1"), b), std::invalid_argument);
  CHECK_THROWS_AS(rewrite_in_kernel(FreeWord::parse("3"), b), std::invalid_argument);
}

TEST_CASE("basis words rewrite to unit vectors") {
  for (CyclicKernelBasis b : {CyclicKernelBasis{3, 2, 1}, CyclicKernelBasis{3, 3, 1},
                              CyclicKernelBasis{3, 2, 2}, CyclicKernelBasis{5, 2, 1}}) {
    for (unsigned idx = 0; idx < b.size(); ++idx) {
      IntVector v = rewrite_in_kernel(b.basis_word(idx), b);
      for (unsigned k = 0; k < b.size(); ++k) CHECK(v[k] == (k == idx ? 1 : 0));
    }
  }
}

TEST_CASE("action_matrices: structure of the x1 action") {
  CyclicKernelBasis b{3, 2, 1};
  AbelianizedAction act = action_matrices(b);

  // x1 fixes [x1^{p^r}] and cyclically permutes each conjugate family
  CHECK(act.x1[0] == IntVector{1, 0, 0, 0});
  CHECK(act.x1[b.symbol(0, 2)][b.symbol(1, 2)] == 1);
  CHECK(act.x1[b.symbol(1, 2)][b.symbol(2, 2)] == 1);
  CHECK(act.x1[b.symbol(2, 2)][b.symbol(0, 2)] == 1);
  CHECK(trace(act.x1) == 1);

  // conjugation by x2 is trivial on N_ab (x2 lies in N)
  for (const IntMatrix& m : act.xj) CHECK(is_identity(m));

  // sigma is an involution and sigma M(x1) sigma = M(x1)^{-1}
  CHECK(is_identity(mat_mul(act.sigma, act.sigma)));
  IntMatrix lhs = mat_mul(mat_mul(act.sigma, act.x1), act.sigma);
  IntMatrix inv = act.x1;  // M^{p^r - 1} = M^{-1} since M^{p^r} = 1
  for (unsigned s = 2; s < b.transversal_size(); ++s) inv = mat_mul(inv, act.x1);
  CHECK(lhs == inv);
  CHECK(is_identity(mat_mul(act.x1, inv)));
}

TEST_CASE("x1-action trace is 1 whenever p^r > 1") {
  for (CyclicKernelBasis b : {CyclicKernelBasis{3, 2, 1}, CyclicKernelBasis{3, 3, 1},
                              CyclicKernelBasis{3, 2, 2}, CyclicKernelBasis{5, 3, 1}}) {
    AbelianizedAction act = action_matrices(b);
    CHECK(trace(act.x1) == 1);
  }
}

TEST_CASE("character table at (3,2,1): 4 / 1 / -2, row 4 vacuous") {
  auto rows = character_check(CyclicKernelBasis{3, 2, 1});
  REQUIRE(rows.size() == 5);  // 1, [x1], [x1^2], sigma, [a]sigma
  CHECK(rows[0].computed == 4);
  CHECK(rows[0].match);
  CHECK(rows[1].computed == 1);
  CHECK(rows[1].match);
  CHECK(rows[2].computed == 1);
  CHECK(rows[2].match);
  CHECK(rows[3].computed == -2);
  CHECK(rows[3].match);
  CHECK(rows[4].vacuous);
}

TEST_CASE("character table matches at the three pinned parameter triples") {
  for (CyclicKernelBasis b : {CyclicKernelBasis{3, 2, 1}, CyclicKernelBasis{3, 3, 1},
                              CyclicKernelBasis{3, 2, 2}}) {
    for (const CharacterRow& r : character_check(b))
      if (!r.vacuous) CHECK(r.match);
  }
}

TEST_CASE("module identity at the character level: chi_N + chi_+ = chi_0 + d- chi_-") {
  // with d+ = 0: values per row of the character table of Delta
  for (CyclicKernelBasis b : {CyclicKernelBasis{3, 2, 1}, CyclicKernelBasis{3, 3, 1},
                              CyclicKernelBasis{3, 2, 2}, CyclicKernelBasis{5, 2, 1}}) {
    const long long q = b.transversal_size(), n = b.n;
    auto rows = character_check(b);
    // row 1 (delta = 1): chi_+(1) = chi_-(1) = [G:N]
    CHECK(rows[0].computed + q == 1 + n * q);
    // rows [x1^s]: chi_eps = 0
    for (long long s = 1; s < q; ++s) CHECK(rows[s].computed + 0 == 1);
    // row sigma: chi_+(sigma) = |(G/N)^+| = 1, chi_-(sigma) = -1
    CHECK(rows[q].computed + 1 == 1 - n);
  }
}

TEST_CASE("index formula i_N - 1 = |(G:N)^+| (i_G - 1)") {
  struct Case { std::uint32_t p; unsigned n, r; long long expect; };
  for (Case c : {Case{3, 2, 1, -2}, Case{3, 3, 1, -3}, Case{3, 2, 2, -2}, Case{5, 4, 1, -4}}) {
    IndexCheck ic = index_formula_check(CyclicKernelBasis{c.p, c.n, c.r});
    CHECK(ic.match);
    CHECK(ic.i_n_computed == c.expect);
    CHECK(ic.rhs == c.expect);
  }
}

TEST_CASE("rank of N_ab equals 1 + p^r (n-1)") {
  CHECK(CyclicKernelBasis{3, 2, 1}.size() == 4);
  CHECK(CyclicKernelBasis{3, 3, 1}.size() == 7);
  CHECK(CyclicKernelBasis{3, 2, 2}.size() == 10);
  CHECK(CyclicKernelBasis{5, 3, 1}.size() == 11);
}
