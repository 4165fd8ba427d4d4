#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/fp.hpp"
#include "schur/sigma_group.hpp"

namespace schur {

/// Sigma-isomorphism invariants of a finite sigma-p-group, serialized to a
/// flat word vector: order, part sizes, graded abelianization type split into
/// sigma-eigenspaces, dimension subgroup orders, and the (element order,
/// parity) multiset.  Equal fingerprints are necessary for sigma-isomorphism
/// and drive bucket pruning in the class search.
struct Fingerprint {
  std::vector<std::uint64_t> data;

  bool operator==(const Fingerprint& o) const { return data == o.data; }
  bool operator<(const Fingerprint& o) const { return data < o.data; }
  std::string digest() const;  // 16-hex-digit content hash
};

Fingerprint fingerprint(const SigmaGroup& G);

/// A minimal generating tuple: lifts of a basis of G/Fr(G), odd lifts
/// preferred, chosen deterministically by element index.
std::vector<std::uint32_t> minimal_generating_tuple(const SigmaGroup& G);

/// A sigma-equivariant isomorphism G -> H as an index map, or std::nullopt
/// when none exists.  The search extends candidate images of a minimal
/// generating tuple (matching order, parity and the basis condition mod
/// Frattini) and validates multiplicativity edge by edge over the full
/// Cayley graph, so any returned witness is a genuine sigma-isomorphism.
std::optional<std::vector<std::uint32_t>> sigma_isomorphic(const SigmaGroup& G,
                                                           const SigmaGroup& H);

/// Literal full-table verification of a witness: bijectivity,
/// phi(g h) = phi(g) phi(h) for all pairs, and sigma-equivariance.
bool verify_sigma_iso(const SigmaGroup& G, const SigmaGroup& H,
                      const std::vector<std::uint32_t>& phi);

struct SigmaAutGroup {
  std::vector<std::uint32_t> gen_tuple;                   // the fixed minimal generating tuple
  std::vector<std::vector<std::uint32_t>> image_tuples;   // one entry per automorphism

  Int order() const { return Int(image_tuples.size()); }
};

/// All sigma-automorphisms of G, enumerated by candidate generator images.
/// The search parallelizes over the first generator's candidate set; the
/// result order is deterministic regardless of worker count.  Throws
/// CapExceeded when |G| exceeds the cap (default 3^7).
SigmaAutGroup sigma_aut_group(const SigmaGroup& G, std::uint64_t order_cap = 2187,
                              unsigned workers = 0);

/// Partition groups into sigma-isomorphism classes with canonical labels
/// (fingerprint digest plus a disambiguation index).  class_of[k] is the
/// class id of groups[k]; reps holds one representative index per class.
struct ClassifyResult {
  std::vector<std::size_t> class_of;
  std::vector<std::string> labels;      // per class
  std::vector<std::size_t> reps;        // per class: index into the input list
};

ClassifyResult classify(const std::vector<const SigmaGroup*>& groups);

/// Rebuild the full permutation of an automorphism from its image tuple.
std::vector<std::uint32_t> automorphism_permutation(const SigmaGroup& G,
                                                    const std::vector<std::uint32_t>& gen_tuple,
                                                    const std::vector<std::uint32_t>& images);

}  // namespace schur
