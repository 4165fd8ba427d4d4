#include <doctest.h>

#include "schur/magnus.hpp"
#include "schur/rng.hpp"

using namespace schur;

namespace {

FreeWord random_word(CounterRng& rng, unsigned n, unsigned max_len) {
  FreeWord w;
  std::uint64_t len = rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < len; ++i) {
    int j = static_cast<int>(rng.below(n)) + 1;
    w.letters.push_back(rng.below(2) ? j : -j);
  }
  return w;
}

}  // namespace

TEST_CASE("FreeWord: parse and format") {
  FreeWord w = FreeWord::parse(" 1 2 -1 -2 ");
  CHECK(w.letters == std::vector<int>{1, 2, -1, -2});
  CHECK(w.str() == "1 2 -1 -2");
  CHECK(w.max_index() == 2);
  CHECK_THROWS_AS(FreeWord::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(FreeWord::parse("1 x"), std::invalid_argument);

  auto list = FreeWord::parse_list("1 2 -1 -2; 2 2 2");
  REQUIRE(list.size() == 2);
  CHECK(list[1].letters == std::vector<int>{2, 2, 2});
}

TEST_CASE("eval_word: pinned truncated expansions") {
  MagnusAlgebra a1(3, 1, 3);
  CHECK(a1.is_one(a1.eval(FreeWord{})));

  // (1+X)^{-1} = 1 + 2X + X^2 mod (deg 3, p=3)
  TruncatedElement inv1 = a1.eval(FreeWord{{-1}});
  CHECK(inv1.coeffs == decltype(inv1.coeffs){{0, 1}, {1, 2}, {2, 1}});

  // x1 x2 x1^-1 x2^-1 = 1 + (X1 X2 - X2 X1) mod deg 3
  MagnusAlgebra a2(3, 2, 3);
  TruncatedElement comm = a2.eval(FreeWord::parse("1 2 -1 -2"));
  // monomial ids: 0 = 1, 1 = X1, 2 = X2, 3 = X1X1, 4 = X1X2, 5 = X2X1, 6 = X2X2
  CHECK(comm.coeffs == decltype(comm.coeffs){{0, 1}, {4, 1}, {5, 2}});
}

TEST_CASE("eval_word rejects out-of-range letters") {
  MagnusAlgebra a(3, 2, 3);
  CHECK_THROWS_AS(a.eval(FreeWord{{3}}), std::invalid_argument);
}

TEST_CASE("eval_word is a homomorphism; inverse and sigma behave") {
  MagnusAlgebra a(3, 2, 4);
  CounterRng rng(2024, 7);
  for (int trial = 0; trial < 100; ++trial) {
    FreeWord u = random_word(rng, 2, 6), v = random_word(rng, 2, 6);
    FreeWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    CHECK(a.eval(uv) == a.mul(a.eval(u), a.eval(v)));

    TruncatedElement e = a.eval(u);
    CHECK(a.is_one(a.mul(e, a.inverse(e))));
    CHECK(a.eval(u.inverse()) == a.inverse(e));

    // sigma = image of the sign-flipped word, and an involution
    CHECK(a.sigma(e) == a.eval(u.sigma_word()));
    CHECK(a.sigma(a.sigma(e)) == e);
  }
}

TEST_CASE("sigma: fixed points and generator images") {
  MagnusAlgebra a(3, 2, 4);
  CHECK(a.sigma(a.one()) == a.one());
  CHECK(a.sigma(a.generator(1)) == a.generator(1, -1));
}

TEST_CASE("is_odd: generators odd, x1 x2 not odd, palindrome odd") {
  MagnusAlgebra a(3, 2, 3);
  CHECK(a.is_odd(a.generator(1)));
  CHECK(a.is_odd(a.generator(2)));
  CHECK_FALSE(a.is_odd(a.eval(FreeWord::parse("1 2"))));
  CHECK(a.is_odd(a.eval(FreeWord::parse("1 2 1"))));
}

TEST_CASE("truncation compatibility between depths") {
  MagnusAlgebra deep(3, 2, 4), shallow(3, 2, 3);
  CounterRng rng(99, 1);
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord w = random_word(rng, 2, 8);
    CHECK(deep.truncate_to(deep.eval(w), shallow) == shallow.eval(w));
  }
}

TEST_CASE("enumerate_group: orders match the Witt oracle") {
  struct Case { unsigned n, depth; std::uint32_t order, odd; };
  for (Case c : {Case{1, 3, 3, 3}, Case{1, 4, 9, 9}, Case{1, 5, 9, 9},
                 Case{2, 3, 27, 9}, Case{2, 4, 2187, 729}}) {
    SigmaGroup G = enumerate_group(3, c.n, c.depth);
    CHECK(G.order() == c.order);
    CHECK(G.odd_elements().size() == c.odd);
    auto dims = witt_graded_dims(3, c.n, c.depth);
    CHECK(Int(G.order()) == dims.group_order());
    CHECK(Int(G.odd_elements().size()) == dims.odd_part_order());
  }
}

TEST_CASE("enumerate_group: F_{1,4} is cyclic of order 9") {
  SigmaGroup G = enumerate_group(3, 1, 4);
  CHECK(G.order() == 9);
  CHECK(G.element_order(G.generators()[0]) == 9);
  G.validate();
}

TEST_CASE("enumerate_group: F_{2,4} has |G+| * |G-| = |G|") {
  SigmaGroup G = enumerate_group(3, 2, 4);
  std::uint32_t even = 0;
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (G.is_even(g)) ++even;
  CHECK(even == 3);
  CHECK(static_cast<std::uint64_t>(even) * G.odd_elements().size() == G.order());
}

TEST_CASE("enumerate_group: cap produces CapExceeded naming the order") {
  CHECK_THROWS_AS(enumerate_group(3, 2, 4, 100), CapExceeded);
  try {
    enumerate_group(3, 2, 4, 100);
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("2187") != std::string::npos);
  }
}

TEST_CASE("enumerate_group at p = 5") {
  SigmaGroup G = enumerate_group(5, 2, 3);
  CHECK(G.order() == 125);
  G.validate();
}
