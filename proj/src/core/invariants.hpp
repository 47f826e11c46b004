#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/cardinal.hpp"
#include "core/enumeration.hpp"
#include "core/topology.hpp"

namespace macias {

// Window-backed certificates for the four equivalent conditions: units fail
// to be open iff primes are dense iff primes are infinite iff the ring is
// semiprimitive. Each report carries per-generator witnesses so the verdict
// can be replayed without trusting this module.

struct SemiprimitivityReport {
  RingId ring;
  long bound = 0;
  bool semiprimitive = true;
  // Nonzero radical member on the false side; for a local ring the prime
  // itself sits inside the unique maximal ideal.
  std::optional<Element> radical_witness;
  // Window elements shown to avoid some maximal ideal (true side evidence).
  long cleared = 0;
};

SemiprimitivityReport semiprimitivity(const Window& w);

struct DensityRecord {
  Element generator;
  std::optional<Element> prime_inside;  // prime rep lying in sigma_generator^0
};

struct DensityReport {
  RingId ring;
  long bound = 0;
  bool dense = false;
  std::vector<DensityRecord> records;
  // Finite-primes side: a generator whose basic open misses every prime.
  std::optional<Element> empty_open_generator;
};

DensityReport prime_density(const Window& w);

struct OpennessRecord {
  Element generator;
  std::optional<Element> non_unit_member;  // non-unit inside sigma_generator^0
};

struct OpennessReport {
  RingId ring;
  long bound = 0;
  bool units_open = false;
  // When units are open: alpha with sigma_alpha^0 = U(R), checked on the
  // window and by support coverage.
  std::optional<Element> alpha;
  bool alpha_exact = false;
  std::vector<OpennessRecord> records;
};

OpennessReport units_openness(const Window& w);

// Distinct proper singleton closures from the window, restricted to the ones
// not strictly contained in another; sorted by support index list.
std::vector<ClosureDescriptor> maximal_singleton_closures(const Window& w);

struct SupportPartition {
  RingId ring;
  long bound = 0;
  // Blocks keyed by common support, units first, then by index list; each
  // block lists its members in window order.
  std::vector<std::pair<Support, std::vector<Element>>> blocks;
};

SupportPartition support_partition(const Window& w);

// (unit cardinality, prime-class cardinality): the full homeomorphism
// invariant for the supported rings.
std::pair<Cardinal, Cardinal> classification_invariants(const RingId& ring);

struct EquivalenceReport {
  RingId ring;
  long bound = 0;
  bool units_not_open = false;
  bool primes_dense = false;
  bool primes_infinite = false;
  bool semiprimitive = false;
  bool consistent = false;  // the four verdicts coincide
  OpennessReport openness;
  DensityReport density;
  SemiprimitivityReport radical;
};

EquivalenceReport four_way_equivalence(const RingId& ring, long bound);

}  // namespace macias
