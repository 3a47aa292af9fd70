#pragma once

#include <memory>
#include <vector>

#include "grp/bitmask.hpp"
#include "grp/map.hpp"

namespace grp {

enum class InvarianceKind { none, automorphism_set, endomorphism_set, canonical_abelian };

// Descriptor for one step of the canonical fully invariant chain of an
// abelian group. The mask it denotes is
//   (product of full Sylow subgroups for primes q < prime)
//   * {x in S^(p^j) : x^(p^k) = 1} * S^(p^(j+1))
// where S is the Sylow p-subgroup and S^(m) = {x^m : x in S}. Subgroups of
// this shape are fully invariant whatever the parameters, which is what the
// certificate checker relies on.
struct CanonStep {
  long prime = 0;
  int power_exp = 0;    // j
  int torsion_exp = 0;  // k
};

// A witness series 1 = H_0 < H_1 < ... < H_k = G with a per-step element
// whose coset generates the cyclic factor H_i/H_{i-1}.
struct ChainCertificate {
  std::vector<Bitmask> steps;       // identity mask first, full mask last
  std::vector<int> cyclic_witness;  // size = steps.size() - 1
  InvarianceKind invariance = InvarianceKind::none;
  std::shared_ptr<const MapSet> maps;  // attached when invariance is a map set
  std::vector<CanonStep> canonical;    // descriptors when canonical_abelian
};

struct ChiefSeriesRecord {
  std::vector<Bitmask> steps;  // identity mask first, full mask last
  std::vector<long> factor_orders;
};

}  // namespace grp
