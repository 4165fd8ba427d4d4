#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/word.hpp"

namespace schur {

/// A fully enumerated finite sigma-p-group.  Elements are indices 0..order-1
/// with 0 the identity.  Multiplication is stored as right-action arrays for
/// the 2n distinguished generator letters (x_1..x_n, then x_1^-1..x_n^-1);
/// general products walk the BFS word of the right factor, or use a full
/// table when the order is small.  Immutable after construction.
class SigmaGroup {
 public:
  static constexpr std::uint32_t kFullTableCap = 243;

  /// Empty placeholder; only valid after assignment from build()/quotient().
  SigmaGroup() = default;

  /// Assemble a group from generator-action tables.
  ///   act[l][g] = g * gen(l)  for letters l in [0, 2n)
  ///   sigma_perm: the involutive automorphism as an index permutation
  ///   gens: element ids of the n distinguished generators
  /// Derives BFS words, inverses and parity data; letters must generate.
  static SigmaGroup build(unsigned n, std::vector<std::vector<std::uint32_t>> act,
                          std::vector<std::uint32_t> sigma_perm,
                          std::vector<std::uint32_t> gens, std::uint32_t p);

  std::uint32_t order() const { return order_; }
  std::uint32_t p() const { return p_; }
  unsigned rank_hint() const { return n_; }  // number of distinguished generators
  unsigned num_letters() const { return 2 * n_; }

  std::uint32_t act(unsigned letter, std::uint32_t g) const { return act_[letter][g]; }
  std::uint32_t letter_elem(unsigned letter) const {
    return letter < n_ ? gens_[letter] : inv_[gens_[letter - n_]];
  }
  unsigned inverse_letter(unsigned letter) const { return letter < n_ ? letter + n_ : letter - n_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    std::uint32_t r = a;
    for (std::uint8_t l : words_[b]) r = act_[l][r];
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t sigma(std::uint32_t a) const { return sigma_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t b) const {  // a b a^{-1}
    return mul(mul(a, b), inv_[a]);
  }
  std::uint32_t power(std::uint32_t a, long long e) const;
  unsigned element_order(std::uint32_t a) const;

  bool is_even(std::uint32_t a) const { return sigma_[a] == a; }
  bool is_odd(std::uint32_t a) const { return sigma_[a] == inv_[a]; }

  const std::vector<std::uint32_t>& generators() const { return gens_; }
  const std::vector<std::uint32_t>& odd_elements() const { return odd_; }
  const std::vector<std::uint8_t>& word(std::uint32_t a) const { return words_[a]; }

  /// Group axioms, sigma an involutive automorphism, generators generate.
  /// Costs O(order^2); intended for tests.
  void validate() const;

 private:
  std::uint32_t order_ = 1, p_ = 3;
  unsigned n_ = 0;
  std::vector<std::vector<std::uint32_t>> act_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::uint32_t> inv_, sigma_, gens_, odd_;
  std::vector<std::uint32_t> table_;  // full multiplication table if order <= kFullTableCap
};

/// Subgroup (or plain subset) as a bitset over element indices.
struct SubgroupSet {
  std::vector<std::uint64_t> bits;
  std::uint32_t size = 0;

  static SubgroupSet empty(std::uint32_t order) {
    return SubgroupSet{std::vector<std::uint64_t>((order + 63) / 64, 0), 0};
  }
  bool test(std::uint32_t i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint32_t i) {
    if (!test(i)) { bits[i >> 6] |= 1ull << (i & 63); ++size; }
  }
  std::vector<std::uint32_t> elements() const;
  /// Bytewise content key for hashing/memoization.
  std::string key() const;
  bool operator==(const SubgroupSet& o) const { return bits == o.bits; }
};

SubgroupSet trivial_subgroup(const SigmaGroup& G);
SubgroupSet full_subgroup(const SigmaGroup& G);

/// Smallest subgroup containing the seeds.
SubgroupSet subgroup_closure(const SigmaGroup& G, const std::vector<std::uint32_t>& seeds);
/// Smallest normal subgroup containing the seeds.
SubgroupSet normal_closure(const SigmaGroup& G, const std::vector<std::uint32_t>& seeds);

bool is_subgroup(const SigmaGroup& G, const SubgroupSet& S);
bool is_normal(const SigmaGroup& G, const SubgroupSet& S);
bool is_sigma_invariant(const SigmaGroup& G, const SubgroupSet& S);

/// Even part as a subgroup set together with the odd part as an index list.
std::pair<SubgroupSet, std::vector<std::uint32_t>> parts(const SigmaGroup& G);

struct QuotientResult {
  SigmaGroup group;
  std::vector<std::uint32_t> proj;  // element index -> coset index
};

/// Coset table of G/N with induced sigma and projected generators.
/// Throws std::invalid_argument if N is not normal or not sigma-invariant.
/// Callers holding an N already produced by a closure (hence known to be a
/// sigma-invariant normal subgroup) may skip the O(|N|^2) validation.
QuotientResult quotient(const SigmaGroup& G, const SubgroupSet& N, bool validate = true);

/// [G, N] for normal N: normal closure of commutators of the generator
/// letters with the elements of N.
SubgroupSet commutator_with_group(const SigmaGroup& G, const SubgroupSet& N);
/// [G, G], generated by commutators of the distinguished generators.
SubgroupSet derived_subgroup(const SigmaGroup& G);
/// Frattini subgroup G^p [G, G] (= second dimension subgroup).
SubgroupSet frattini(const SigmaGroup& G);

/// Lower central series gamma_1 = G, gamma_{j+1} = [G, gamma_j], down to {1}.
std::vector<SubgroupSet> lower_central_series(const SigmaGroup& G);

/// i-th dimension subgroup by the Jennings product formula
/// D_i(G) = prod_{j p^k >= i} gamma_j(G)^{p^k} over the lower central series.
SubgroupSet dimension_subgroup(const SigmaGroup& G, unsigned i);

/// D_1(G) = G, D_2(G), ... computed until the series reaches {1}.
std::vector<SubgroupSet> dimension_subgroup_series(const SigmaGroup& G);

/// dim_{F_p} N / (Fr(N) [G, N]): the minimal number of generators of N as a
/// normal subgroup of G.  N must be normal.
unsigned relation_rank(const SigmaGroup& G, const SubgroupSet& N);

std::vector<std::uint32_t> conjugacy_class(const SigmaGroup& G, std::uint32_t a);

/// b in G^+ with a*sigma conjugate to b*sigma in the semidirect product
/// G x {1, sigma}; found by sweeping conjugators (existence is guaranteed).
std::uint32_t even_sigma_representative(const SigmaGroup& G, std::uint32_t a);

/// b in G^eps conjugate to a.  Requires sigma(a) conjugate to a^eps, else
/// throws std::invalid_argument.
std::uint32_t odd_even_conjugacy_representative(const SigmaGroup& G, std::uint32_t a, int eps);

/// Zassenhaus type of the group presented by n odd relations inside Fr(F_n):
/// entries resolved from the jumps of m_i = relation_rank at truncation depth
/// i = 2..max_depth; entries not resolved by max_depth are reported as
/// ">= max_depth", never guessed.
struct ZassenhausType {
  std::vector<unsigned> resolved;  // ascending
  unsigned unresolved = 0;         // count of entries >= max_depth
  unsigned max_depth = 0;

  std::string str() const;
};

ZassenhausType zassenhaus_type(std::uint32_t p, unsigned n, const std::vector<FreeWord>& relations,
                               unsigned max_depth, std::uint64_t size_cap = 1'000'000);

}  // namespace schur
