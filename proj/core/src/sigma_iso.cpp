#include "schur/sigma_iso.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <stdexcept>

namespace schur {

// ------------------------------------------------------------ Fingerprint

namespace {

// counts[k] = #{x in S : x^{p^k} = 1}, continued one step past stabilization
std::vector<unsigned> abelian_type(const SigmaGroup& G, const std::vector<std::uint32_t>& subgroup) {
  std::vector<Int> counts;
  const std::uint64_t total = subgroup.size();
  long long pk = 1;
  for (;;) {
    std::uint64_t c = 0;
    for (std::uint32_t x : subgroup)
      if (G.power(x, pk) == 0) ++c;
    counts.push_back(Int(c));
    if (c == total) { counts.push_back(Int(c)); break; }
    pk *= G.p();
  }
  return partition_from_power_counts(G.p(), counts);
}

void append_partition(std::vector<std::uint64_t>& out, const std::vector<unsigned>& nu) {
  out.push_back(0xabcdef00ull + nu.size());
  for (unsigned v : nu) out.push_back(v);
}

}  // namespace

Fingerprint fingerprint(const SigmaGroup& G) {
  Fingerprint f;
  auto& d = f.data;
  d.push_back(G.order());
  std::uint64_t even = 0;
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (G.is_even(g)) ++even;
  d.push_back(even);
  d.push_back(G.odd_elements().size());

  // Abelianization with sigma split: even and odd parts are subgroups there.
  auto ab = quotient(G, derived_subgroup(G));
  const SigmaGroup& Q = ab.group;
  std::vector<std::uint32_t> qeven, qodd;
  for (std::uint32_t q = 0; q < Q.order(); ++q) {
    if (Q.is_even(q)) qeven.push_back(q);
    if (Q.is_odd(q)) qodd.push_back(q);
  }
  append_partition(d, abelian_type(Q, qeven));
  append_partition(d, abelian_type(Q, qodd));

  // Dimension subgroup orders until they vanish.
  auto series = dimension_subgroup_series(G);
  for (std::size_t i = 1; i < series.size(); ++i) d.push_back(series[i].size);
  if (series.size() == 1) d.push_back(1);

  // Multiset of (element order, parity kind).
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> hist;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    unsigned parity = G.is_even(g) ? (G.is_odd(g) ? 3 : 2) : (G.is_odd(g) ? 1 : 0);
    ++hist[{G.element_order(g), parity}];
  }
  d.push_back(0xfeedull);
  for (auto& [k, c] : hist) {
    d.push_back((static_cast<std::uint64_t>(k.first) << 8) | k.second);
    d.push_back(c);
  }

  // Multiset of (conjugacy class size, element order).
  std::map<std::pair<std::size_t, unsigned>, std::uint64_t> cls_hist;
  std::vector<bool> seen(G.order(), false);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    auto cls = conjugacy_class(G, g);
    for (std::uint32_t x : cls) seen[x] = true;
    ++cls_hist[{cls.size(), G.element_order(g)}];
  }
  d.push_back(0xc1a55ull);
  for (auto& [k, c] : cls_hist) {
    d.push_back((static_cast<std::uint64_t>(k.first) << 16) | k.second);
    d.push_back(c);
  }
  return f;
}

std::string Fingerprint::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : data) {
    h ^= w;
    h *= 0x100000001b3ull;
    h ^= h >> 31;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) { s[i] = hex[h & 15]; h >>= 4; }
  return s;
}

// --------------------------------------------- generating tuples, morphisms

std::vector<std::uint32_t> minimal_generating_tuple(const SigmaGroup& G) {
  if (G.order() == 1) return {};
  SubgroupSet fr = frattini(G);
  auto [Q, proj] = quotient(G, fr);  // elementary abelian
  // Greedily extend an independent family in Q, preferring odd lifts.
  std::vector<std::uint32_t> tuple;
  SubgroupSet span = trivial_subgroup(Q);
  std::vector<std::uint32_t> span_gens;
  auto consider = [&](std::uint32_t g) {
    if (span.test(proj[g])) return;
    tuple.push_back(g);
    span_gens.push_back(proj[g]);
    span = subgroup_closure(Q, span_gens);
  };
  for (std::uint32_t g : G.odd_elements()) consider(g);
  for (std::uint32_t g = 0; g < G.order() && span.size != Q.order(); ++g) consider(g);
  if (span.size != Q.order()) throw std::logic_error("minimal_generating_tuple failed");
  return tuple;
}

namespace {

// Right-multiplication permutations by each tuple entry.
std::vector<std::vector<std::uint32_t>> right_actions(const SigmaGroup& G,
                                                      const std::vector<std::uint32_t>& tuple) {
  std::vector<std::vector<std::uint32_t>> act(tuple.size(),
                                              std::vector<std::uint32_t>(G.order()));
  for (std::size_t k = 0; k < tuple.size(); ++k)
    for (std::uint32_t g = 0; g < G.order(); ++g) act[k][g] = G.mul(g, tuple[k]);
  return act;
}

constexpr std::uint32_t kUnset = 0xffffffffu;

// Extend t_k -> y_k to a sigma-isomorphism if possible.  BFS over G along
// tuple edges; every edge is checked, so success certifies multiplicativity
// on the whole table (any product decomposes along tuple words).
std::optional<std::vector<std::uint32_t>> build_iso(
    const SigmaGroup& G, const std::vector<std::vector<std::uint32_t>>& gact,
    const SigmaGroup& H, const std::vector<std::uint32_t>& images) {
  const std::size_t d = images.size();
  std::vector<std::vector<std::uint32_t>> hact(d, std::vector<std::uint32_t>(H.order()));
  for (std::size_t k = 0; k < d; ++k)
    for (std::uint32_t h = 0; h < H.order(); ++h) hact[k][h] = H.mul(h, images[k]);

  std::vector<std::uint32_t> phi(G.order(), kUnset);
  std::vector<bool> used(H.order(), false);
  phi[0] = 0;
  used[0] = true;
  std::vector<std::uint32_t> queue{0};
  std::size_t checked_edges = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t g = queue[qi];
    for (std::size_t k = 0; k < d; ++k) {
      std::uint32_t gt = gact[k][g];
      std::uint32_t ht = hact[k][phi[g]];
      if (phi[gt] == kUnset) {
        if (used[ht]) return std::nullopt;  // collision: not injective
        phi[gt] = ht;
        used[ht] = true;
        queue.push_back(gt);
      } else if (phi[gt] != ht) {
        return std::nullopt;  // inconsistent edge
      }
      ++checked_edges;
    }
  }
  if (queue.size() != G.order()) return std::nullopt;  // tuple does not generate
  (void)checked_edges;
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (phi[G.sigma(g)] != H.sigma(phi[g])) return std::nullopt;
  return phi;
}

struct CandidateContext {
  const SigmaGroup& H;
  SubgroupSet h_fr;
  QuotientResult h_mod_fr;
  std::vector<unsigned> h_orders;

  explicit CandidateContext(const SigmaGroup& h) : H(h), h_fr(frattini(h)), h_mod_fr(quotient(h, h_fr)) {
    h_orders.resize(H.order());
    for (std::uint32_t g = 0; g < H.order(); ++g) h_orders[g] = H.element_order(g);
  }
};

unsigned parity_kind(const SigmaGroup& G, std::uint32_t g) {
  return G.is_even(g) ? (G.is_odd(g) ? 3u : 2u) : (G.is_odd(g) ? 1u : 0u);
}

struct TupleInvariants {
  std::vector<unsigned> order, parity;
  std::vector<std::vector<unsigned>> prod_order;

  TupleInvariants(const SigmaGroup& G, const std::vector<std::uint32_t>& tuple) {
    const std::size_t d = tuple.size();
    order.resize(d);
    parity.resize(d);
    prod_order.assign(d, std::vector<unsigned>(d, 0));
    for (std::size_t k = 0; k < d; ++k) {
      order[k] = G.element_order(tuple[k]);
      parity[k] = parity_kind(G, tuple[k]);
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        prod_order[a][b] = G.element_order(G.mul(tuple[a], tuple[b]));
  }
};

// Depth-first search over image tuples starting from a partial assignment;
// on_leaf returns true to stop early.
template <typename Leaf>
void candidate_search_from(const TupleInvariants& inv, CandidateContext& ctx,
                           std::vector<std::uint32_t> images, Leaf&& on_leaf) {
  const std::size_t d = inv.order.size();
  const SigmaGroup& H = ctx.H;
  std::vector<std::uint32_t> span_gens;
  for (std::uint32_t y : images) span_gens.push_back(ctx.h_mod_fr.proj[y]);
  bool stop = false;

  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    std::size_t k = images.size();
    if (k == d) {
      stop = on_leaf(images);
      return;
    }
    SubgroupSet span = subgroup_closure(ctx.h_mod_fr.group, span_gens);
    for (std::uint32_t y = 0; y < H.order() && !stop; ++y) {
      if (ctx.h_orders[y] != inv.order[k]) continue;
      if (parity_kind(H, y) != inv.parity[k]) continue;
      if (span.test(ctx.h_mod_fr.proj[y])) continue;  // basis condition mod Frattini
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a)
        ok = H.element_order(H.mul(images[a], y)) == inv.prod_order[a][k] &&
             H.element_order(H.mul(y, images[a])) == inv.prod_order[k][a];
      if (!ok) continue;
      images.push_back(y);
      span_gens.push_back(ctx.h_mod_fr.proj[y]);
      self(self);
      images.pop_back();
      span_gens.pop_back();
    }
  };
  rec(rec);
}

// Admissible first-slot candidates, in element order.
std::vector<std::uint32_t> first_slot_candidates(const TupleInvariants& inv,
                                                 CandidateContext& ctx) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t y = 0; y < ctx.H.order(); ++y) {
    if (ctx.h_orders[y] != inv.order[0]) continue;
    if (parity_kind(ctx.H, y) != inv.parity[0]) continue;
    if (ctx.h_mod_fr.proj[y] == 0) continue;  // lies in the Frattini subgroup
    out.push_back(y);
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> sigma_isomorphic(const SigmaGroup& G,
                                                           const SigmaGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  if (G.order() == 1) return std::vector<std::uint32_t>{0};
  if (!(fingerprint(G) == fingerprint(H))) return std::nullopt;

  auto tuple = minimal_generating_tuple(G);
  auto gact = right_actions(G, tuple);
  CandidateContext ctx(H);
  TupleInvariants inv(G, tuple);
  std::optional<std::vector<std::uint32_t>> witness;
  candidate_search_from(inv, ctx, {}, [&](const std::vector<std::uint32_t>& images) {
    auto phi = build_iso(G, gact, H, images);
    if (phi) witness = std::move(phi);
    return witness.has_value();
  });
  return witness;
}

bool verify_sigma_iso(const SigmaGroup& G, const SigmaGroup& H,
                      const std::vector<std::uint32_t>& phi) {
  if (phi.size() != G.order() || G.order() != H.order()) return false;
  std::vector<bool> used(H.order(), false);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (used[phi[g]]) return false;
    used[phi[g]] = true;
  }
  if (phi[0] != 0) return false;
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (phi[G.sigma(g)] != H.sigma(phi[g])) return false;
  for (std::uint32_t a = 0; a < G.order(); ++a)
    for (std::uint32_t b = 0; b < G.order(); ++b)
      if (phi[G.mul(a, b)] != H.mul(phi[a], phi[b])) return false;
  return true;
}

SigmaAutGroup sigma_aut_group(const SigmaGroup& G, std::uint64_t order_cap, unsigned workers) {
  if (G.order() > order_cap)
    throw CapExceeded("sigma_aut_group: order " + std::to_string(G.order()) +
                      " exceeds cap " + std::to_string(order_cap));
  SigmaAutGroup aut;
  aut.gen_tuple = minimal_generating_tuple(G);
  if (G.order() == 1) {
    aut.image_tuples.push_back({});
    return aut;
  }
  auto gact = right_actions(G, aut.gen_tuple);
  TupleInvariants inv(G, aut.gen_tuple);
  CandidateContext ctx0(G);
  auto firsts = first_slot_candidates(inv, ctx0);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(firsts.size(), 1));
  std::vector<std::vector<std::vector<std::uint32_t>>> found(firsts.size());
  auto run_range = [&](CandidateContext& ctx, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      candidate_search_from(inv, ctx, {firsts[i]}, [&](const std::vector<std::uint32_t>& images) {
        if (build_iso(G, gact, G, images)) found[i].push_back(images);
        return false;
      });
  };
  if (workers <= 1) {
    run_range(ctx0, 0, firsts.size());
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        CandidateContext ctx(G);  // per-worker scratch; group tables are shared read-only
        run_range(ctx, firsts.size() * w / workers, firsts.size() * (w + 1) / workers);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& f : found)
    for (auto& images : f) aut.image_tuples.push_back(std::move(images));
  return aut;
}

ClassifyResult classify(const std::vector<const SigmaGroup*>& groups) {
  ClassifyResult res;
  res.class_of.resize(groups.size());
  std::vector<Fingerprint> rep_fp;
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;  // fp -> class ids
  for (std::size_t k = 0; k < groups.size(); ++k) {
    Fingerprint fp = fingerprint(*groups[k]);
    auto& bucket = buckets[fp.data];
    std::size_t cls = static_cast<std::size_t>(-1);
    for (std::size_t id : bucket)
      if (sigma_isomorphic(*groups[k], *groups[res.reps[id]]).has_value()) { cls = id; break; }
    if (cls == static_cast<std::size_t>(-1)) {
      cls = res.reps.size();
      res.reps.push_back(k);
      rep_fp.push_back(fp);
      std::string label = "o" + std::to_string(groups[k]->order()) + "-" + fp.digest();
      if (!bucket.empty()) label += "-" + std::to_string(bucket.size());
      res.labels.push_back(std::move(label));
      bucket.push_back(cls);
    }
    res.class_of[k] = cls;
  }
  return res;
}

std::vector<std::uint32_t> automorphism_permutation(const SigmaGroup& G,
                                                    const std::vector<std::uint32_t>& gen_tuple,
                                                    const std::vector<std::uint32_t>& images) {
  auto gact = right_actions(G, gen_tuple);
  auto phi = build_iso(G, gact, G, images);
  if (!phi) throw std::logic_error("automorphism_permutation: images do not define an automorphism");
  return *phi;
}

}  // namespace schur
