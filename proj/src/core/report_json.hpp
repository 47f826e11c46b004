#pragma once

#include <string>

#include <json.hpp>

#include "core/homeo.hpp"
#include "core/invariants.hpp"
#include "core/topology.hpp"

namespace macias {

// JSON builders for every report the CLI and C API emit. Keys serialize in
// sorted order (nlohmann default), elements print through Element::str, so
// output bytes depend only on the inputs.

nlohmann::json cardinal_json(const Cardinal& c);
nlohmann::json ring_info_json(const RingId& ring);
nlohmann::json support_json(const Support& s);
nlohmann::json factor_json(const Element& x);
nlohmann::json member_json(const Element& s, const Element& k);
nlohmann::json closure_json(const Element& x, const Window& w);
nlohmann::json witness_json(const Element& x, const Element& y);
nlohmann::json graph_json(const SpecializationGraph& g, const Window& w);
std::string graph_dot(const SpecializationGraph& g, const Window& w);
nlohmann::json density_json(const DensityReport& r);
nlohmann::json openness_json(const OpennessReport& r);
nlohmann::json semiprimitivity_json(const SemiprimitivityReport& r);
nlohmann::json partition_json(const SupportPartition& p);
nlohmann::json equivalence_json(const EquivalenceReport& r);
nlohmann::json classify_json(const ClassificationVerdict& v);
nlohmann::json homeo_verification_json(const HomeoVerification& v);
nlohmann::json certificate_json(const NonHomeoCertificate& c);
nlohmann::json zx_json(const ZxReport& r);

// Full per-ring report: info, four-way equivalence with certificates,
// partition and closure summaries, graph statistics, and (optionally)
// oracle cross-checks. jobs controls the worker count for the per-element
// sweep; the bytes do not depend on it.
nlohmann::json combined_report(const RingId& ring, long bound, long jobs,
                               bool with_oracle);

// Adds the schema tag and serializes with two-space indentation plus a
// trailing newline.
std::string dump_report(nlohmann::json payload);

}  // namespace macias
