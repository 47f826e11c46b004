#include "core/report_json.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/oracle.hpp"
#include "core/parallel.hpp"

namespace macias {

using nlohmann::json;

json cardinal_json(const Cardinal& c) {
  json j;
  j["finite"] = c.is_finite();
  if (c.is_finite()) j["count"] = c.count();
  return j;
}

namespace {

json element_list(const std::vector<Element>& v) {
  json arr = json::array();
  for (const Element& e : v) arr.push_back(e.str());
  return arr;
}

json optional_element(const std::optional<Element>& e) {
  if (!e.has_value()) return nullptr;
  return e->str();
}

json closure_descriptor_json(const ClosureDescriptor& d) {
  json j;
  if (d.is_whole_space()) {
    j["kind"] = "whole-space";
  } else {
    j["kind"] = "divisible-by";
    j["support"] = support_json(d.divisor_support());
  }
  return j;
}

}  // namespace

json ring_info_json(const RingId& ring) {
  json j;
  j["ring"] = ring.str();
  j["euclidean"] = ring.euclidean();
  j["pid"] = ring.pid();
  j["units"] = cardinal_json(units_cardinality(ring));
  if (ring.pid()) {
    j["primes"] = cardinal_json(primes_cardinality(ring));
    long nprimes = 6;
    if (primes_cardinality(ring).is_finite())
      nprimes = std::min(nprimes, primes_cardinality(ring).count());
    json reps = json::array();
    for (const PrimeClass& cls : enumerate_prime_classes(ring, nprimes))
      reps.push_back(cls.representative.str());
    j["sample_prime_classes"] = reps;
    j["sample_units"] = element_list(enumerate_units(ring, 6));
  }
  return j;
}

json support_json(const Support& s) {
  json arr = json::array();
  for (const PrimeClass& cls : s.classes()) {
    json entry;
    entry["index"] = cls.index;
    entry["representative"] = cls.representative.str();
    arr.push_back(entry);
  }
  json j;
  j["classes"] = arr;
  j["ring"] = s.ring().str();
  return j;
}

json factor_json(const Element& x) {
  UnitDecomposition d = factor(x);
  json factors = json::array();
  for (const auto& [cls, exp] : d.factors) {
    json entry;
    entry["exponent"] = exp;
    entry["index"] = cls.index;
    entry["prime"] = cls.representative.str();
    factors.push_back(entry);
  }
  json j;
  j["element"] = x.str();
  j["factors"] = factors;
  j["ring"] = x.ring().str();
  j["unit"] = d.unit.str();
  return j;
}

json member_json(const Element& s, const Element& k) {
  json j;
  j["generator"] = k.str();
  j["member"] = in_basic_open(s, k);
  j["element"] = s.str();
  j["ring"] = s.ring().str();
  return j;
}

json closure_json(const Element& x, const Window& w) {
  json j;
  j["closure"] = closure_descriptor_json(closure_singleton(x));
  j["element"] = x.str();
  j["members_in_window"] = element_list(closure_members(x, w));
  j["ring"] = x.ring().str();
  j["window"] = w.bound;
  return j;
}

json witness_json(const Element& x, const Element& y) {
  std::optional<Element> p = separating_witness(x, y);
  json j;
  j["witness"] = optional_element(p);
  j["x"] = x.str();
  j["y"] = y.str();
  j["y_in_closure_of_x"] = !p.has_value();
  return j;
}

json graph_json(const SpecializationGraph& g, const Window& w) {
  std::vector<std::vector<long>> adj(w.elements.size());
  for (const auto& [from, to] : g.edges) adj[from].push_back(to);
  json adjacency = json::array();
  for (const auto& targets : adj) adjacency.push_back(targets);
  json j;
  j["adjacency"] = adjacency;
  j["edge_count"] = static_cast<long>(g.edges.size());
  j["nodes"] = element_list(w.elements);
  j["ring"] = g.ring.str();
  j["window"] = g.bound;
  return j;
}

std::string graph_dot(const SpecializationGraph& g, const Window& w) {
  std::string out = "digraph specialization {\n";
  for (size_t i = 0; i < w.elements.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + w.elements[i].str() + "\"];\n";
  for (const auto& [from, to] : g.edges)
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
  out += "}\n";
  return out;
}

json density_json(const DensityReport& r) {
  json records = json::array();
  for (const DensityRecord& rec : r.records) {
    json entry;
    entry["generator"] = rec.generator.str();
    entry["prime_inside"] = optional_element(rec.prime_inside);
    records.push_back(entry);
  }
  json j;
  j["empty_open_generator"] = optional_element(r.empty_open_generator);
  j["records"] = records;
  j["ring"] = r.ring.str();
  j["verdict"] = r.dense;
  j["window_bound"] = r.bound;
  return j;
}

json openness_json(const OpennessReport& r) {
  json records = json::array();
  for (const OpennessRecord& rec : r.records) {
    json entry;
    entry["generator"] = rec.generator.str();
    entry["non_unit_member"] = optional_element(rec.non_unit_member);
    records.push_back(entry);
  }
  json j;
  j["alpha"] = optional_element(r.alpha);
  j["alpha_exact"] = r.alpha_exact;
  j["records"] = records;
  j["ring"] = r.ring.str();
  j["verdict"] = r.units_open;
  j["window_bound"] = r.bound;
  return j;
}

json semiprimitivity_json(const SemiprimitivityReport& r) {
  json j;
  j["cleared"] = r.cleared;
  j["radical_witness"] = optional_element(r.radical_witness);
  j["records"] = json::array();
  j["ring"] = r.ring.str();
  j["verdict"] = r.semiprimitive;
  j["window_bound"] = r.bound;
  return j;
}

json partition_json(const SupportPartition& p) {
  json blocks = json::array();
  for (const auto& [support, members] : p.blocks) {
    json entry;
    entry["members"] = element_list(members);
    entry["support"] = support_json(support);
    blocks.push_back(entry);
  }
  json j;
  j["block_count"] = static_cast<long>(p.blocks.size());
  j["blocks"] = blocks;
  j["bound"] = p.bound;
  j["ring"] = p.ring.str();
  return j;
}

json equivalence_json(const EquivalenceReport& r) {
  json j;
  j["bound"] = r.bound;
  j["consistent"] = r.consistent;
  j["density"] = density_json(r.density);
  j["openness"] = openness_json(r.openness);
  j["primes_dense"] = r.primes_dense;
  j["primes_infinite"] = r.primes_infinite;
  j["ring"] = r.ring.str();
  j["semiprimitive"] = r.semiprimitive;
  j["semiprimitivity"] = semiprimitivity_json(r.radical);
  j["units_not_open"] = r.units_not_open;
  return j;
}

json classify_json(const ClassificationVerdict& v) {
  json j;
  j["differing"] = v.differing;
  j["homeomorphic"] = v.homeomorphic;
  j["source"] = v.source.str();
  j["source_primes"] = cardinal_json(v.source_primes);
  j["source_units"] = cardinal_json(v.source_units);
  j["target"] = v.target.str();
  j["target_primes"] = cardinal_json(v.target_primes);
  j["target_units"] = cardinal_json(v.target_units);
  return j;
}

json homeo_verification_json(const HomeoVerification& v) {
  json j;
  j["bound"] = v.bound;
  j["elements"] = v.elements;
  j["injective"] = v.injective;
  j["membership_preserved"] = v.membership_preserved;
  j["pairs"] = v.pairs;
  j["passed"] = v.passed;
  j["roundtrip"] = v.roundtrip;
  j["source"] = v.source.str();
  j["supports_transported"] = v.supports_transported;
  j["target"] = v.target.str();
  j["violation_count"] = v.violation_count;
  j["violations"] = v.violations;
  return j;
}

json certificate_json(const NonHomeoCertificate& c) {
  auto samples = [](const std::vector<CountSample>& v) {
    json arr = json::array();
    for (const CountSample& s : v) {
      json entry;
      entry["bound"] = s.bound;
      entry["count"] = s.count;
      arr.push_back(entry);
    }
    return arr;
  };
  json j;
  j["counted"] = c.counted;
  j["differing"] = c.differing;
  j["discrepant"] = c.discrepant;
  j["source"] = c.source.str();
  j["source_counts"] = samples(c.source_counts);
  j["source_primes"] = cardinal_json(c.source_primes);
  j["source_units"] = cardinal_json(c.source_units);
  j["target"] = c.target.str();
  j["target_counts"] = samples(c.target_counts);
  j["target_primes"] = cardinal_json(c.target_primes);
  j["target_units"] = cardinal_json(c.target_units);
  return j;
}

json zx_json(const ZxReport& r) {
  json j;
  j["coprime"] = r.coprime_2_x;
  j["even_constant_obstruction"] = r.even_constant_obstruction;
  j["ideal_constant_generator"] = r.ideal_constant_generator;
  j["non_associate"] = r.non_associate;
  j["oracle_coprime"] = r.oracle_coprime_2_x;
  j["passed"] = r.passed;
  j["regression_coprime_2_x_plus_1"] = r.regression_2_x1_coprime;
  j["sanity_certificate_checks"] = r.sanity_certificate_checks;
  j["sanity_cofactor_u"] = r.sanity_cofactor_u;
  j["sanity_cofactor_v"] = r.sanity_cofactor_v;
  j["sanity_pair_coprime"] = r.sanity_pair_coprime;
  j["supports_disjoint"] = r.supports_disjoint;
  j["two_is_prime"] = r.two_is_prime;
  j["x_is_prime"] = r.x_is_prime;
  return j;
}

json combined_report(const RingId& ring, long bound, long jobs,
                     bool with_oracle) {
  Window w = enumerate_elements(ring, bound);
  const long n = static_cast<long>(w.elements.size());

  // Per-element support lines computed in indexed slots; worker count does
  // not affect the assembled order.
  std::vector<std::string> support_lines(n);
  parallel_for(n, jobs, [&](long i) {
    support_lines[i] = support(w.elements[i]).str();
  });
  json supports = json::array();
  for (long i = 0; i < n; ++i) {
    json entry;
    entry["element"] = w.elements[i].str();
    entry["support"] = support_lines[i];
    supports.push_back(entry);
  }

  long generic = 0;
  for (const Element& e : w.elements)
    if (is_generic_point(e)) ++generic;

  SpecializationGraph g = specialization_graph(w);

  json closures = json::array();
  for (const ClosureDescriptor& d : maximal_singleton_closures(w))
    closures.push_back(closure_descriptor_json(d));

  SupportPartition part = support_partition(w);
  json block_summary = json::array();
  for (const auto& [sup, members] : part.blocks) {
    json entry;
    entry["size"] = static_cast<long>(members.size());
    entry["support"] = sup.str();
    block_summary.push_back(entry);
  }

  json j;
  j["element_count"] = n;
  j["equivalence"] = equivalence_json(four_way_equivalence(ring, bound));
  j["generic_points"] = generic;
  j["graph_edges"] = static_cast<long>(g.edges.size());
  j["maximal_closures"] = closures;
  j["partition"] = block_summary;
  j["ring_info"] = ring_info_json(ring);
  j["supports"] = supports;
  j["window"] = bound;

  if (with_oracle) {
    const long sample = std::min<long>(n, 40);
    long checked = 0, agreed = 0;
    for (long i = 0; i < sample; ++i) {
      for (long k = 0; k < sample; ++k) {
        const Element &a = w.elements[i], &b = w.elements[k];
        bool fast = coprime(a, b);
        bool slow = oracle_coprime(a, b, oracle_default_bound(a, b));
        ++checked;
        if (fast == slow) ++agreed;
      }
    }
    json cross;
    cross["coprime_agreed"] = agreed;
    cross["coprime_checked"] = checked;
    j["oracle"] = cross;
  }
  return j;
}

std::string dump_report(json payload) {
  payload["schema"] = "macias-report/1";
  return payload.dump(2) + "\n";
}

}  // namespace macias
