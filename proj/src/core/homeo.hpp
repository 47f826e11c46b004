#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/cardinal.hpp"
#include "core/enumeration.hpp"
#include "core/topology.hpp"

namespace macias {

// How the unit bijection psi is realized.
enum class UnitMapRule {
  FiniteTable,        // positional pairing of the full unit lists
  SignedSExponents,   // sign + per-prime exponent vector, S-inverted rings
  EnumerationIndex,   // height-order unit index pairing
};

struct HomeoMap {
  RingId source;
  RingId target;
  UnitMapRule rule = UnitMapRule::FiniteTable;
  bool forward = true;
  std::vector<Element> source_units;  // FiniteTable only
  std::vector<Element> target_units;
  // Verification control: when set, apply_homeo picks swapped target primes
  // for these two indices while the declared prime map stays index-preserving,
  // so the checker must flag the mismatch. Never set by build_homeo.
  std::optional<std::pair<long, long>> tamper_prime_images;
};

// The declared prime bijection: n-th source class -> n-th target class.
PrimeClass map_prime_class(const HomeoMap& map, const PrimeClass& cls);
Element map_unit(const HomeoMap& map, const Element& u);

HomeoMap invert(const HomeoMap& map);

struct ClassificationVerdict {
  RingId source;
  RingId target;
  Cardinal source_units;
  Cardinal target_units;
  Cardinal source_primes;
  Cardinal target_primes;
  bool homeomorphic = false;
  // "primes" or "units" when not homeomorphic; primes take precedence when
  // both cardinals differ.
  std::string differing;
  std::optional<HomeoMap> map;
};

ClassificationVerdict classify(const RingId& source, const RingId& target);

HomeoMap build_homeo(const RingId& source, const RingId& target);

Element apply_homeo(const HomeoMap& map, const Element& x);
Element apply_homeo_inverse(const HomeoMap& map, const Element& y);

struct HomeoVerification {
  RingId source;
  RingId target;
  long bound = 0;
  long elements = 0;
  long pairs = 0;
  bool injective = false;
  bool supports_transported = false;
  bool membership_preserved = false;
  bool roundtrip = false;
  std::vector<std::string> violations;  // capped textual samples
  long violation_count = 0;
  bool passed = false;
};

// Exhaustive three-clause check of the map over the source window.
HomeoVerification verify_homeo(const HomeoMap& map, const Window& source_window);

// Same checks against a caller-supplied image vector (images[i] must claim to
// be H(source_window.elements[i])); lets tests corrupt single entries.
HomeoVerification verify_images(const HomeoMap& map, const Window& source_window,
                                const std::vector<Element>& images);

struct CountSample {
  long bound = 0;
  long count = 0;
};

struct NonHomeoCertificate {
  RingId source;
  RingId target;
  std::string differing;  // as in ClassificationVerdict
  Cardinal source_units;
  Cardinal target_units;
  Cardinal source_primes;
  Cardinal target_primes;
  std::string counted;  // "generic-points" or "maximal-closures"
  std::vector<CountSample> source_counts;
  std::vector<CountSample> target_counts;
  bool discrepant = false;  // aligned samples differ throughout
};

NonHomeoCertificate non_homeo_certificate(const RingId& source,
                                          const RingId& target,
                                          const Window& w_source,
                                          const Window& w_target);

}  // namespace macias
