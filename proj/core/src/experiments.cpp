#include "schur/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "schur/magnus.hpp"
#include "schur/measure.hpp"
#include "schur/sigma_iso.hpp"

namespace schur {

std::uint32_t sample_odd(const SigmaGroup& G, CounterRng& rng) {
  const auto& odd = G.odd_elements();
  return odd[rng.below(odd.size())];
}

std::uint32_t sample_odd_gsigma(const SigmaGroup& G, CounterRng& rng) {
  std::uint32_t g = static_cast<std::uint32_t>(rng.below(G.order()));
  return G.mul(g, G.inv(G.sigma(g)));
}

namespace {

struct ClassEntry {
  SigmaGroup rep;
  Fingerprint fp;
  unsigned d = 0;
  SubgroupSet n_example;
  std::uint64_t observed = 0;
  std::uint64_t observed_alt = 0;
};

struct Classification {
  std::vector<ClassEntry> classes;
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;  // fp -> class ids
  Int total = 0;

  std::size_t locate_or_insert(const SigmaGroup& G, const SubgroupSet& N) {
    auto q = quotient(G, N, /*validate=*/false);  // N comes from a closure
    Fingerprint fp = fingerprint(q.group);
    auto& bucket = buckets[fp.data];
    for (std::size_t id : bucket)
      if (sigma_isomorphic(q.group, classes[id].rep).has_value()) return id;
    ClassEntry e;
    e.fp = fp;
    SubgroupSet fr = frattini(q.group);
    std::uint32_t v = q.group.order() / fr.size;
    unsigned d = 0;
    for (; v > 1; v /= q.group.p()) ++d;
    e.d = d;
    e.rep = std::move(q.group);
    e.n_example = N;
    classes.push_back(std::move(e));
    bucket.push_back(classes.size() - 1);
    return classes.size() - 1;
  }
};

// Distinct normal closures with multiplicity, keyed by subgroup bitset.
struct NTally {
  std::unordered_map<std::string, std::pair<SubgroupSet, std::pair<std::uint64_t, std::uint64_t>>> m;

  void add(const SubgroupSet& N, bool alt) {
    auto& slot = m[N.key()];
    if (slot.first.bits.empty()) slot.first = N;
    (alt ? slot.second.second : slot.second.first) += 1;
  }
  void merge(const NTally& o) {
    for (auto& [k, v] : o.m) {
      auto& slot = m[k];
      if (slot.first.bits.empty()) slot.first = v.first;
      slot.second.first += v.second.first;
      slot.second.second += v.second.second;
    }
  }
};

// Odometer over all n-tuples of odd elements.
template <typename F>
void for_each_tuple(const SigmaGroup& G, unsigned n, F&& f) {
  const auto& odd = G.odd_elements();
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::uint32_t> tuple(n);
  for (;;) {
    for (unsigned k = 0; k < n; ++k) tuple[k] = odd[idx[k]];
    f(tuple);
    unsigned k = 0;
    while (k < n && ++idx[k] == odd.size()) idx[k++] = 0;
    if (k == n) break;
  }
}

Classification classify_all(const SigmaGroup& G, const ExperimentSpec& spec) {
  NTally tally;
  if (spec.exhaustive) {
    Int count = 1;
    for (unsigned k = 0; k < spec.n; ++k) count *= Int(G.odd_elements().size());
    if (count > spec.caps.exhaustive_tuples)
      throw CapExceeded("exhaustive tuple count " + count.str() + " exceeds cap");
    for_each_tuple(G, spec.n, [&](const std::vector<std::uint32_t>& tuple) {
      tally.add(normal_closure(G, tuple), false);
    });
  } else {
    const unsigned workers = std::max(1u, spec.workers);
    std::vector<NTally> local(workers);
    auto work = [&](unsigned w) {
      std::uint64_t lo = spec.samples * w / workers, hi = spec.samples * (w + 1) / workers;
      std::vector<std::uint32_t> tuple(spec.n);
      for (std::uint64_t s = lo; s < hi; ++s) {
        // one logical stream per sample, so results are independent of the
        // worker partition; the alternate sampler uses a disjoint stream set
        CounterRng rng_a(spec.master_seed, 2 * s);
        for (unsigned k = 0; k < spec.n; ++k) tuple[k] = sample_odd(G, rng_a);
        local[w].add(normal_closure(G, tuple), false);
        CounterRng rng_b(spec.master_seed, 2 * s + 1);
        for (unsigned k = 0; k < spec.n; ++k) tuple[k] = sample_odd_gsigma(G, rng_b);
        local[w].add(normal_closure(G, tuple), true);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& l : local) tally.merge(l);
  }

  // Deterministic classification order: sorted subgroup keys.
  std::vector<const std::string*> keys;
  keys.reserve(tally.m.size());
  for (auto& [k, v] : tally.m) keys.push_back(&k);
  std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });

  Classification cls;
  for (const std::string* k : keys) {
    auto& [N, counts] = tally.m.at(*k);
    std::size_t id = cls.locate_or_insert(G, N);
    cls.classes[id].observed += counts.first;
    cls.classes[id].observed_alt += counts.second;
  }
  if (spec.exhaustive) {
    Int count = 1;
    for (unsigned k = 0; k < spec.n; ++k) count *= Int(G.odd_elements().size());
    cls.total = count;
  } else {
    cls.total = Int(spec.samples);
  }
  return cls;
}

std::string class_label(const ClassEntry& e, unsigned bucket_index) {
  std::string l = "o" + std::to_string(e.rep.order()) + "-" + e.fp.digest();
  if (bucket_index > 0) l += "-" + std::to_string(bucket_index);
  return l;
}

double binomial_sigma(double n, double q) { return std::sqrt(n * q * (1.0 - q)); }

}  // namespace

FrequencyReport run_experiment(const ExperimentSpec& spec) {
  require_odd_prime(spec.p);
  if (spec.n < 1) throw std::invalid_argument("run_experiment: n >= 1");
  if (!spec.exhaustive && spec.samples == 0)
    throw std::invalid_argument("monte carlo mode requires samples > 0");

  SigmaGroup G = enumerate_group(spec.p, spec.n, spec.depth, spec.caps.group_order);
  Classification cls = classify_all(G, spec);

  // Recursive exhaustive sub-runs (same depth, lower rank) for d < n classes.
  std::map<unsigned, Classification> subruns;
  std::map<unsigned, SigmaGroup> subgroups;
  auto subrun_for = [&](unsigned d) -> Classification& {
    auto it = subruns.find(d);
    if (it != subruns.end()) return it->second;
    ExperimentSpec sub = spec;
    sub.n = d;
    sub.exhaustive = true;
    sub.samples = 0;
    SigmaGroup Gd = enumerate_group(spec.p, std::max(d, 1u), spec.depth, spec.caps.group_order);
    if (d == 0) {
      // single empty tuple: the trivial class
      Classification c;
      c.locate_or_insert(Gd, full_subgroup(Gd));
      c.classes[0].observed = 1;
      c.total = 1;
      subgroups.emplace(d, std::move(Gd));
      return subruns.emplace(d, std::move(c)).first->second;
    }
    Classification c = classify_all(Gd, sub);
    subgroups.emplace(d, std::move(Gd));
    return subruns.emplace(d, std::move(c)).first->second;
  };

  FrequencyReport rep;
  rep.spec = spec;
  rep.total = cls.total;
  rep.truncation_note =
      "classes are isomorphism classes of quotients at truncation depth " +
      std::to_string(spec.depth) + "; classes separating only at greater depth are merged";

  Int odd_size = Int(G.odd_elements().size());
  std::map<std::vector<std::uint64_t>, unsigned> bucket_seen;

  for (std::size_t id = 0; id < cls.classes.size(); ++id) {
    ClassEntry& e = cls.classes[id];
    ClassRecord r;
    unsigned bucket_index = bucket_seen[e.fp.data]++;
    r.label = class_label(e, bucket_index);
    r.d = e.d;
    r.observed = e.observed;
    r.observed_alt = e.observed_alt;

    r.m = relation_rank(G, e.n_example);
    try {
      r.aut_order = sigma_aut_group(e.rep, spec.caps.aut_order).order();
    } catch (const CapExceeded&) {
      r.note = "prediction unavailable: aut cap exceeded for |G| = " +
               std::to_string(e.rep.order());
    }

    if (e.d == spec.n) {
      if (r.aut_order) {
        Rat count = mu_n_class_count(spec.p, spec.n, odd_size, *r.m, *r.aut_order);
        Int tuple_space = 1;
        for (unsigned k = 0; k < spec.n; ++k) tuple_space *= odd_size;
        r.probability = count / Rat(tuple_space);
        r.expected = spec.exhaustive ? count : *r.probability * Rat(cls.total);
      }
    } else {
      Classification& sub = subrun_for(e.d);
      std::optional<Rat> sub_q;
      for (ClassEntry& se : sub.classes) {
        if (se.d != e.d) continue;
        if (!(se.fp == e.fp)) continue;
        if (sigma_isomorphic(e.rep, se.rep).has_value()) {
          sub_q = Rat(Int(se.observed), sub.total);
          break;
        }
      }
      if (sub_q) {
        r.probability = mu_n_restriction_factor(spec.p, spec.n, e.d) * *sub_q;
        r.expected = *r.probability * Rat(cls.total);
      } else {
        r.note = "prediction unavailable: class not found in level-" +
                 std::to_string(e.d) + " exhaustive run";
      }
    }

    if (!spec.exhaustive && r.probability) {
      double q = static_cast<double>(*r.probability);
      double nn = static_cast<double>(spec.samples);
      double sd = binomial_sigma(nn, q);
      r.sigma_dev = sd > 0 ? std::abs(static_cast<double>(r.observed) - nn * q) / sd : 0.0;
      double qh = (static_cast<double>(r.observed) + static_cast<double>(r.observed_alt)) / (2 * nn);
      double sp = std::sqrt(2.0 * nn * qh * (1.0 - qh));
      r.alt_sigma_dev = sp > 0
          ? std::abs(static_cast<double>(r.observed) - static_cast<double>(r.observed_alt)) / sp
          : 0.0;
    }
    rep.classes.push_back(std::move(r));
  }
  return rep;
}

std::string CompareResult::summary() const {
  if (pass) return "PASS";
  std::string s = "FAIL";
  for (const auto& f : failures) s += "\n  " + f;
  return s;
}

CompareResult compare(const FrequencyReport& report, double tolerance_sigma) {
  CompareResult res;
  Int observed_total = 0;
  for (const ClassRecord& r : report.classes) observed_total += Int(r.observed);
  if (observed_total != report.total) {
    res.pass = false;
    res.failures.push_back("observed counts sum to " + observed_total.str() +
                           ", expected " + report.total.str());
  }
  for (const ClassRecord& r : report.classes) {
    if (!r.expected) {
      res.pass = false;
      res.failures.push_back("class " + r.label + ": " +
                             (r.note.empty() ? "no prediction" : r.note));
      continue;
    }
    if (report.spec.exhaustive) {
      if (denominator(*r.expected) != 1) {
        res.pass = false;
        res.failures.push_back("class " + r.label + ": non-integral expected count " +
                               r.expected->str());
      } else if (Int(r.observed) != numerator(*r.expected)) {
        res.pass = false;
        res.failures.push_back("class " + r.label + ": observed " +
                               std::to_string(r.observed) + " != expected " +
                               r.expected->str());
      }
    } else {
      if (r.sigma_dev > tolerance_sigma) {
        res.pass = false;
        res.failures.push_back("class " + r.label + ": deviation " +
                               std::to_string(r.sigma_dev) + " sigma > " +
                               std::to_string(tolerance_sigma));
      }
      if (r.alt_sigma_dev > tolerance_sigma) {
        res.pass = false;
        res.failures.push_back("class " + r.label + ": sampler disagreement " +
                               std::to_string(r.alt_sigma_dev) + " sigma > " +
                               std::to_string(tolerance_sigma));
      }
    }
  }
  return res;
}

}  // namespace schur
