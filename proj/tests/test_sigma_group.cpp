#include <doctest.h>

#include <map>
#include <set>

#include "schur/magnus.hpp"
#include "schur/rng.hpp"
#include "schur/sigma_group.hpp"

using namespace schur;

TEST_CASE("parts: sizes and structure") {
  SigmaGroup F23 = enumerate_group(3, 2, 3);
  auto [even, odd] = parts(F23);
  CHECK(even.size == 3);
  CHECK(odd.size() == 9);
  CHECK(is_subgroup(F23, even));
  CHECK(static_cast<std::uint64_t>(even.size) * odd.size() == F23.order());

  SigmaGroup Z9 = enumerate_group(3, 1, 4);  // totally odd
  auto [e9, o9] = parts(Z9);
  CHECK(e9.size == 1);
  CHECK(o9.size() == 9);
}

TEST_CASE("product map G+ x G- -> G is bijective (Prop on grading)") {
  for (auto [n, d] : {std::pair{1u, 4u}, {2u, 3u}, {2u, 4u}}) {
    SigmaGroup G = enumerate_group(3, n, d);
    auto [even, odd] = parts(G);
    std::set<std::uint32_t> products;
    for (std::uint32_t a : even.elements())
      for (std::uint32_t b : odd) products.insert(G.mul(a, b));
    CHECK(products.size() == G.order());
  }
}

TEST_CASE("normal_closure: pinned cases in F_{2,3}") {
  SigmaGroup G = enumerate_group(3, 2, 3);

  SubgroupSet none = normal_closure(G, {});
  CHECK(none.size == 1);

  std::uint32_t x1 = G.generators()[0];
  SubgroupSet n1 = normal_closure(G, {x1});
  CHECK(n1.size == 9);
  auto q = quotient(G, n1);
  CHECK(q.group.order() == 3);
  CHECK(q.group.element_order(q.group.generators()[1]) == 3);  // x2 image generates

  // central commutator z = [x1, x2]: already normal, closure is just <z>
  std::uint32_t x2 = G.generators()[1];
  std::uint32_t z = G.mul(G.conj(x1, x2), G.inv(x2));
  CHECK(z != 0);
  SubgroupSet nz = normal_closure(G, {z});
  CHECK(nz.size == 3);
  CHECK(nz == subgroup_closure(G, {z}));
}

TEST_CASE("quotient: identity and full cases") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  CHECK(quotient(G, trivial_subgroup(G)).group.order() == G.order());
  CHECK(quotient(G, full_subgroup(G)).group.order() == 1);
}

TEST_CASE("quotient: Z/9 by its order-3 subgroup, with fiber counts") {
  SigmaGroup Z9 = enumerate_group(3, 1, 4);
  std::uint32_t g3 = Z9.power(Z9.generators()[0], 3);
  SubgroupSet N = subgroup_closure(Z9, {g3});
  CHECK(N.size == 3);
  auto [Q, proj] = quotient(Z9, N);
  CHECK(Q.order() == 3);
  Q.validate();

  // Prop: G^eps -> (G/N)^eps is surjective with constant fibers |N^eps|.
  for (int eps : {+1, -1}) {
    auto in_part = [&](const SigmaGroup& H, std::uint32_t a) {
      return eps == 1 ? H.is_even(a) : H.is_odd(a);
    };
    std::uint32_t n_eps = 0;
    for (std::uint32_t x : N.elements())
      if (in_part(Z9, x)) ++n_eps;
    std::map<std::uint32_t, std::uint32_t> fiber;
    for (std::uint32_t g = 0; g < Z9.order(); ++g)
      if (in_part(Z9, g)) ++fiber[proj[g]];
    std::uint32_t image_size = 0, target_size = 0;
    for (std::uint32_t q = 0; q < Q.order(); ++q)
      if (in_part(Q, q)) ++target_size;
    for (auto [q, cnt] : fiber) {
      CHECK(in_part(Q, q));
      CHECK(cnt == n_eps);
      ++image_size;
    }
    CHECK(image_size == target_size);  // surjectivity onto (G/N)^eps
  }
}

TEST_CASE("quotient rejects non-normal and non-sigma-invariant subgroups") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  // <x1> has order 3 and is not normal in the Heisenberg group.
  SubgroupSet H = subgroup_closure(G, {G.generators()[0]});
  CHECK(H.size == 3);
  CHECK_FALSE(is_normal(G, H));
  CHECK_THROWS_AS(quotient(G, H), std::invalid_argument);
}

TEST_CASE("dimension subgroups: D_1 = G, D_2 = Frattini, self-depth vanishes") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  CHECK(dimension_subgroup(G, 1).size == G.order());

  SubgroupSet fr = frattini(G);
  CHECK(fr.size == 3);  // G / Fr has order 9
  // Direct Frattini description G^p [G, G]
  std::vector<std::uint32_t> seeds;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    std::uint32_t t = G.power(g, 3);
    if (t != 0) seeds.push_back(t);
  }
  SubgroupSet direct = derived_subgroup(G);
  for (std::uint32_t s : direct.elements()) seeds.push_back(s);
  CHECK(subgroup_closure(G, seeds) == fr);

  CHECK(dimension_subgroup(G, 3).size == 1);  // G = F_2 / D_3 by construction
}

TEST_CASE("dimension subgroups agree with Magnus truncation functoriality") {
  // F_{2,4} / D_3(F_{2,4}) must have the order of F_{2,3}.
  SigmaGroup G = enumerate_group(3, 2, 4);
  SubgroupSet d3 = dimension_subgroup(G, 3);
  CHECK(d3.size == 81);
  CHECK(quotient(G, d3).group.order() == 27);
  CHECK(dimension_subgroup(G, 4).size == 1);

  SigmaGroup Z9 = enumerate_group(3, 1, 4);
  CHECK(dimension_subgroup(Z9, 2).size == 3);   // Fr(Z/9) = 3Z/9
  CHECK(dimension_subgroup(Z9, 3).size == 3);   // D_3 = D_2 here
  CHECK(dimension_subgroup(Z9, 4).size == 1);
}

TEST_CASE("relation_rank: pinned cases") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  CHECK(relation_rank(G, trivial_subgroup(G)) == 0);
  CHECK(relation_rank(G, normal_closure(G, {G.generators()[0]})) == 1);
  CHECK(relation_rank(G, full_subgroup(G)) == 2);
}

TEST_CASE("zassenhaus_type: powers of x1 at p = 3") {
  auto t1 = zassenhaus_type(3, 1, {FreeWord::parse("1 1 1 1 1 1 1 1 1")}, 10);
  CHECK(t1.resolved == std::vector<unsigned>{9});
  CHECK(t1.unresolved == 0);

  auto t2 = zassenhaus_type(3, 1, {FreeWord::parse("1 1 1")}, 4);
  CHECK(t2.resolved == std::vector<unsigned>{3});
  CHECK(t2.str() == "(3)");

  auto t3 = zassenhaus_type(3, 1, {FreeWord{}}, 6);
  CHECK(t3.resolved.empty());
  CHECK(t3.unresolved == 1);
  CHECK(t3.str() == "(>=6)");
}

TEST_CASE("zassenhaus_type: (3,3) for x1^3, x2^3 and error paths") {
  auto t = zassenhaus_type(3, 2, {FreeWord::parse("1 1 1"), FreeWord::parse("2 2 2")}, 4);
  CHECK(t.resolved == std::vector<unsigned>{3, 3});
  CHECK(t.unresolved == 0);

  // not in the Frattini subgroup
  CHECK_THROWS_AS(zassenhaus_type(3, 1, {FreeWord::parse("1")}, 4), std::invalid_argument);
  // in Frattini but not odd: [x1, x2] has sigma(w) != w^-1
  CHECK_THROWS_AS(
      zassenhaus_type(3, 2, {FreeWord::parse("1 2 -1 -2"), FreeWord::parse("2 2 2")}, 4),
      std::invalid_argument);
}

TEST_CASE("zassenhaus_type: resolved entries are odd and ascending on random samples") {
  // random odd words in Fr(F_n): w = v' reverse(v') is a palindrome (hence
  // odd), with v' padded so every generator exponent sum vanishes mod p
  CounterRng rng(31337, 0);
  auto random_frattini_odd_word = [&](std::uint32_t p, unsigned n) {
    FreeWord v;
    std::uint64_t len = rng.below(5);
    for (std::uint64_t i = 0; i < len; ++i) {
      int j = static_cast<int>(rng.below(n)) + 1;
      v.letters.push_back(rng.below(2) ? j : -j);
    }
    for (unsigned j = 1; j <= n; ++j) {
      long long e = 0;
      for (int l : v.letters) e += (l == static_cast<int>(j)) - (l == -static_cast<int>(j));
      long long fix = ((-e) % p + p) % p;
      for (long long i = 0; i < fix; ++i) v.letters.push_back(static_cast<int>(j));
    }
    FreeWord w = v;
    w.letters.insert(w.letters.end(), v.letters.rbegin(), v.letters.rend());
    return w;
  };
  struct Case { std::uint32_t p; unsigned n, depth; };
  for (Case c : {Case{3, 1, 6}, Case{5, 1, 6}, Case{3, 2, 4}, Case{5, 2, 4}}) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<FreeWord> rel;
      for (unsigned k = 0; k < c.n; ++k) rel.push_back(random_frattini_odd_word(c.p, c.n));
      ZassenhausType t = zassenhaus_type(c.p, c.n, rel, c.depth);
      unsigned prev = 0;
      for (unsigned d : t.resolved) {
        CHECK(d >= 3);
        CHECK(d % 2 == 1);
        CHECK(d >= prev);
        prev = d;
      }
      CHECK(t.resolved.size() + t.unresolved == c.n);
    }
  }
}

TEST_CASE("even_sigma_representative") {
  SigmaGroup Z9 = enumerate_group(3, 1, 4);
  for (std::uint32_t a = 0; a < Z9.order(); ++a)
    CHECK(even_sigma_representative(Z9, a) == 0);  // G+ = {1} in a totally odd group

  SigmaGroup G = enumerate_group(3, 2, 3);
  for (std::uint32_t a = 0; a < G.order(); ++a) {
    std::uint32_t b = even_sigma_representative(G, a);
    CHECK(G.is_even(b));
    if (G.is_even(a)) CHECK(b == a);  // identity conjugator is tried first
    // verify the witness: some c with c a sigma(c)^-1 = b
    bool found = false;
    for (std::uint32_t c = 0; c < G.order() && !found; ++c)
      found = G.mul(G.mul(c, a), G.inv(G.sigma(c))) == b;
    CHECK(found);
  }
}

TEST_CASE("even_sigma_representative: uniqueness up to G+ conjugacy in F_{2,3}") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  auto [even, odd] = parts(G);
  for (std::uint32_t a = 0; a < G.order(); ++a) {
    std::set<std::uint32_t> reps;
    for (std::uint32_t c = 0; c < G.order(); ++c) {
      std::uint32_t b = G.mul(G.mul(c, a), G.inv(G.sigma(c)));
      if (G.is_even(b)) reps.insert(b);
    }
    // all admissible b form one orbit under conjugation by G+
    std::uint32_t b0 = *reps.begin();
    std::set<std::uint32_t> orbit;
    for (std::uint32_t c : even.elements()) orbit.insert(G.conj(c, b0));
    CHECK(reps == orbit);
  }
}

TEST_CASE("odd_even_conjugacy_representative") {
  SigmaGroup Z9 = enumerate_group(3, 1, 4);  // abelian: conjugation trivial
  for (std::uint32_t a = 0; a < Z9.order(); ++a) {
    CHECK(odd_even_conjugacy_representative(Z9, a, -1) == a);
    if (a != 0) CHECK_THROWS_AS(odd_even_conjugacy_representative(Z9, a, +1),
                                std::invalid_argument);
  }

  SigmaGroup G = enumerate_group(3, 2, 3);
  for (std::uint32_t a = 0; a < G.order(); ++a)
    for (int eps : {+1, -1}) {
      auto cls = conjugacy_class(G, a);
      std::uint32_t target = eps == 1 ? G.sigma(a) : G.inv(G.sigma(a));
      bool valid = false;
      for (std::uint32_t x : cls) valid = valid || x == target;
      if (!valid) continue;
      std::uint32_t b = odd_even_conjugacy_representative(G, a, eps);
      CHECK((eps == 1 ? G.is_even(b) : G.is_odd(b)));
      bool conj = false;
      for (std::uint32_t x : cls) conj = conj || x == b;
      CHECK(conj);
    }
}

TEST_CASE("subgroup with H Fr(G) = G equals G (generator criterion)") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  SubgroupSet fr = frattini(G);
  SubgroupSet H = subgroup_closure(G, {G.generators()[0], G.generators()[1]});
  CHECK(H.size == G.order());
  // and a proper subgroup H never satisfies H Fr(G) = G
  SubgroupSet H1 = subgroup_closure(G, {G.generators()[0]});
  std::set<std::uint32_t> hfr;
  for (std::uint32_t h : H1.elements())
    for (std::uint32_t f : fr.elements()) hfr.insert(G.mul(h, f));
  CHECK(hfr.size() < G.order());
}
