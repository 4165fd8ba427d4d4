#include <doctest.h>

#include <map>

#include "schur/experiments.hpp"
#include "schur/magnus.hpp"
#include "schur/rng.hpp"

using namespace schur;

TEST_CASE("sample_odd: only odd elements, near-uniform on Z/9") {
  SigmaGroup Z9 = enumerate_group(3, 1, 4);
  std::map<std::uint32_t, std::uint64_t> freq;
  CounterRng rng(7, 0);
  const std::uint64_t N = 100'000;
  for (std::uint64_t i = 0; i < N; ++i) {
    std::uint32_t g = sample_odd(Z9, rng);
    CHECK(Z9.is_odd(g));
    ++freq[g];
  }
  // binomial 4-sigma window around N/9
  double q = 1.0 / 9.0, sd = std::sqrt(N * q * (1 - q));
  for (auto [g, c] : freq)
    CHECK(std::abs(static_cast<double>(c) - N * q) <= 4 * sd);
}

TEST_CASE("sample_odd_gsigma: lands in G^- and matches the direct sampler") {
  SigmaGroup G = enumerate_group(3, 2, 3);
  CounterRng rng(11, 1);
  std::map<std::uint32_t, std::uint64_t> fa, fb;
  const std::uint64_t N = 50'000;
  for (std::uint64_t i = 0; i < N; ++i) {
    std::uint32_t a = sample_odd(G, rng);
    std::uint32_t b = sample_odd_gsigma(G, rng);
    CHECK(G.is_odd(b));
    ++fa[a];
    ++fb[b];
  }
  double q = 1.0 / G.odd_elements().size();
  double sd = std::sqrt(2 * N * q * (1 - q));
  for (std::uint32_t g : G.odd_elements())
    CHECK(std::abs(static_cast<double>(fa[g]) - static_cast<double>(fb[g])) <= 4 * sd);
}

TEST_CASE("exhaustive (3,1,4): classes 6/2/1 with exact predictions") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 1;
  spec.depth = 4;
  FrequencyReport rep = run_experiment(spec);
  CHECK(rep.total == 9);
  REQUIRE(rep.classes.size() == 3);

  std::multiset<std::uint64_t> counts;
  for (auto& c : rep.classes) counts.insert(c.observed);
  CHECK(counts == std::multiset<std::uint64_t>{1, 2, 6});

  for (auto& c : rep.classes) {
    REQUIRE(c.expected.has_value());
    CHECK(denominator(*c.expected) == 1);
    CHECK(numerator(*c.expected) == Int(c.observed));
    if (c.observed == 6) CHECK(c.d == 0);   // trivial class via restriction factor 2/3
    if (c.observed == 2) { CHECK(c.d == 1); CHECK(*c.m == 1); CHECK(*c.aut_order == 2); }
    if (c.observed == 1) { CHECK(c.d == 1); CHECK(*c.m == 0); CHECK(*c.aut_order == 6); }
  }
  CHECK(compare(rep, 4.0).pass);
}

TEST_CASE("exhaustive (3,2,3): 81 tuples, full-group class has count exactly 1") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 2;
  spec.depth = 3;
  FrequencyReport rep = run_experiment(spec);
  CHECK(rep.total == 81);
  REQUIRE(rep.classes.size() == 3);

  std::map<std::uint64_t, const ClassRecord*> by_count;
  for (auto& c : rep.classes) by_count[c.observed] = &c;
  REQUIRE(by_count.count(1));
  REQUIRE(by_count.count(32));
  REQUIRE(by_count.count(48));

  const ClassRecord* full = by_count[1];
  CHECK(full->d == 2);
  CHECK(*full->m == 0);
  CHECK(*full->aut_order == 48);

  CHECK(by_count[32]->d == 1);  // Z/3 class, aggregated via level-1 data
  CHECK(by_count[48]->d == 0);  // trivial class

  CompareResult cr = compare(rep, 4.0);
  CHECK(cr.pass);
}

TEST_CASE("exhaustive (5,1,3): sanity at another prime") {
  ExperimentSpec spec;
  spec.p = 5;
  spec.n = 1;
  spec.depth = 3;
  FrequencyReport rep = run_experiment(spec);
  CHECK(rep.total == 5);
  // F_{1,3} at p=5 is Z/5: classes {1} (4 tuples) and Z/5 (1 tuple)
  REQUIRE(rep.classes.size() == 2);
  CHECK(compare(rep, 4.0).pass);
}

TEST_CASE("monte carlo on (3,1,4): deterministic, worker-independent, 4-sigma") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 1;
  spec.depth = 4;
  spec.exhaustive = false;
  spec.samples = 20'000;
  spec.master_seed = 42;
  spec.workers = 1;
  FrequencyReport a = run_experiment(spec);
  spec.workers = 4;
  FrequencyReport b = run_experiment(spec);

  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].label == b.classes[i].label);
    CHECK(a.classes[i].observed == b.classes[i].observed);
    CHECK(a.classes[i].observed_alt == b.classes[i].observed_alt);
  }
  CHECK(compare(a, 4.0).pass);
}

TEST_CASE("compare: flags an off-by-one in exhaustive mode") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 1;
  spec.depth = 4;
  FrequencyReport rep = run_experiment(spec);
  rep.classes[0].observed += 1;
  rep.classes[1].observed -= 1;
  CompareResult cr = compare(rep, 4.0);
  CHECK_FALSE(cr.pass);
  bool named = false;
  for (auto& f : cr.failures) named = named || f.find(rep.classes[0].label) != std::string::npos;
  CHECK(named);
}

TEST_CASE("compare: inclusive boundary in monte carlo mode") {
  FrequencyReport rep;
  rep.spec.exhaustive = false;
  rep.spec.samples = 100;
  rep.total = 100;
  ClassRecord r;
  r.label = "boundary";
  r.observed = 100;
  r.expected = Rat(100);
  r.probability = Rat(1);
  r.sigma_dev = 4.0;  // exactly at tolerance
  rep.classes.push_back(r);
  CHECK(compare(rep, 4.0).pass);
  rep.classes[0].sigma_dev = 4.0001;
  CHECK_FALSE(compare(rep, 4.0).pass);
}

TEST_CASE("every produced quotient has totally odd mod-Frattini quotient") {
  // weak-Schur finite shadow: quotients by odd relation tuples
  SigmaGroup G = enumerate_group(3, 2, 3);
  const auto& odd = G.odd_elements();
  for (std::uint32_t a : odd)
    for (std::uint32_t b : odd) {
      SigmaGroup Q = quotient(G, normal_closure(G, {a, b}), false).group;
      SigmaGroup V = quotient(Q, frattini(Q), false).group;
      for (std::uint32_t v = 0; v < V.order(); ++v) CHECK(V.is_odd(v));
    }
}
