#include "macias/macias.h"

#include <cstring>
#include <string>

#include "core/error.hpp"
#include "core/homeo.hpp"
#include "core/report_json.hpp"

struct macias_ring {
  macias::RingId id;
};

struct macias_element {
  macias::Element value;
};

struct macias_homeo {
  macias::HomeoMap map;
};

namespace {

thread_local std::string g_last_error = "ok";

macias_status status_of(macias::Errc code) {
  using macias::Errc;
  switch (code) {
    case Errc::Ok: return MACIAS_OK;
    case Errc::ZeroElement: return MACIAS_ERR_ZERO_ELEMENT;
    case Errc::UnsupportedForRing: return MACIAS_ERR_UNSUPPORTED_FOR_RING;
    case Errc::SizeLimit: return MACIAS_ERR_SIZE_LIMIT;
    case Errc::IndexBeyondFinitePrimes: return MACIAS_ERR_INDEX_BEYOND_FINITE_PRIMES;
    case Errc::NoPrimeOutside: return MACIAS_ERR_NO_PRIME_OUTSIDE;
    case Errc::NotHomeomorphicPrecondition: return MACIAS_ERR_NOT_HOMEOMORPHIC;
    case Errc::PreconditionHomeomorphic: return MACIAS_ERR_HOMEOMORPHIC;
    case Errc::ParseError: return MACIAS_ERR_PARSE;
    case Errc::RingMismatch: return MACIAS_ERR_RING_MISMATCH;
    case Errc::InfiniteSet: return MACIAS_ERR_INFINITE_SET;
    case Errc::InvalidArgument: return MACIAS_ERR_INVALID_ARGUMENT;
    case Errc::Internal: return MACIAS_ERR_INTERNAL;
  }
  return MACIAS_ERR_INTERNAL;
}

template <typename Fn>
macias_status guarded(Fn&& fn) {
  try {
    fn();
    return MACIAS_OK;
  } catch (const macias::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MACIAS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MACIAS_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

macias_status require(bool ok, const char* message) {
  if (ok) return MACIAS_OK;
  g_last_error = message;
  return MACIAS_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* macias_last_error(void) { return g_last_error.c_str(); }

void macias_string_free(char* s) { delete[] s; }

macias_status macias_ring_parse(const char* spec, macias_ring** out) {
  if (macias_status st = require(spec && out, "null argument")) return st;
  return guarded([&] { *out = new macias_ring{macias::RingId::parse(spec)}; });
}

void macias_ring_free(macias_ring* ring) { delete ring; }

macias_status macias_ring_str(const macias_ring* ring, char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(ring->id.str()); });
}

macias_status macias_ring_info_json(const macias_ring* ring, char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(macias::dump_report(macias::ring_info_json(ring->id)));
  });
}

macias_status macias_element_parse(const macias_ring* ring, const char* text,
                                   macias_element** out) {
  if (macias_status st = require(ring && text && out, "null argument")) return st;
  return guarded([&] {
    *out = new macias_element{macias::Element::parse(ring->id, text)};
  });
}

void macias_element_free(macias_element* x) { delete x; }

macias_status macias_element_str(const macias_element* x, char** out) {
  if (macias_status st = require(x && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(x->value.str()); });
}

macias_status macias_element_equal(const macias_element* a,
                                   const macias_element* b, int* out) {
  if (macias_status st = require(a && b && out, "null argument")) return st;
  return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

macias_status macias_is_unit(const macias_element* x, int* out) {
  if (macias_status st = require(x && out, "null argument")) return st;
  return guarded([&] { *out = macias::is_unit(x->value) ? 1 : 0; });
}

macias_status macias_is_generic_point(const macias_element* x, int* out) {
  if (macias_status st = require(x && out, "null argument")) return st;
  return guarded([&] { *out = macias::is_generic_point(x->value) ? 1 : 0; });
}

macias_status macias_coprime(const macias_element* a, const macias_element* b,
                             int* out) {
  if (macias_status st = require(a && b && out, "null argument")) return st;
  return guarded([&] { *out = macias::coprime(a->value, b->value) ? 1 : 0; });
}

macias_status macias_in_basic_open(const macias_element* s,
                                   const macias_element* k, int* out) {
  if (macias_status st = require(s && k && out, "null argument")) return st;
  return guarded([&] { *out = macias::in_basic_open(s->value, k->value) ? 1 : 0; });
}

macias_status macias_factor_json(const macias_element* x, char** out) {
  if (macias_status st = require(x && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(macias::dump_report(macias::factor_json(x->value)));
  });
}

macias_status macias_support_json(const macias_element* x, char** out) {
  if (macias_status st = require(x && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(
        macias::dump_report(macias::support_json(macias::support(x->value))));
  });
}

macias_status macias_member_json(const macias_element* s,
                                 const macias_element* k, char** out) {
  if (macias_status st = require(s && k && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(
        macias::dump_report(macias::member_json(s->value, k->value)));
  });
}

macias_status macias_closure_json(const macias_element* x, long window,
                                  char** out) {
  if (macias_status st = require(x && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(x->value.ring(), window);
    *out = copy_string(macias::dump_report(macias::closure_json(x->value, w)));
  });
}

macias_status macias_witness_json(const macias_element* x,
                                  const macias_element* y, char** out) {
  if (macias_status st = require(x && y && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(
        macias::dump_report(macias::witness_json(x->value, y->value)));
  });
}

macias_status macias_graph_json(const macias_ring* ring, long window,
                                char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(ring->id, window);
    *out = copy_string(macias::dump_report(
        macias::graph_json(macias::specialization_graph(w), w)));
  });
}

macias_status macias_graph_dot(const macias_ring* ring, long window,
                               char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(ring->id, window);
    *out = copy_string(macias::graph_dot(macias::specialization_graph(w), w));
  });
}

macias_status macias_density_json(const macias_ring* ring, long window,
                                  char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(ring->id, window);
    *out = copy_string(
        macias::dump_report(macias::density_json(macias::prime_density(w))));
  });
}

macias_status macias_units_open_json(const macias_ring* ring, long window,
                                     char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(ring->id, window);
    *out = copy_string(
        macias::dump_report(macias::openness_json(macias::units_openness(w))));
  });
}

macias_status macias_semiprimitive_json(const macias_ring* ring, long window,
                                        char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(ring->id, window);
    *out = copy_string(macias::dump_report(
        macias::semiprimitivity_json(macias::semiprimitivity(w))));
  });
}

macias_status macias_partition_json(const macias_ring* ring, long window,
                                    char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(ring->id, window);
    *out = copy_string(
        macias::dump_report(macias::partition_json(macias::support_partition(w))));
  });
}

macias_status macias_zx_json(char** out) {
  if (macias_status st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(
        macias::dump_report(macias::zx_json(macias::zx_counterexample())));
  });
}

macias_status macias_report_json(const macias_ring* ring, long window,
                                 long jobs, int with_oracle, char** out) {
  if (macias_status st = require(ring && out, "null argument")) return st;
  return guarded([&] {
    *out = copy_string(macias::dump_report(
        macias::combined_report(ring->id, window, jobs, with_oracle != 0)));
  });
}

macias_status macias_classify_json(const macias_ring* source,
                                   const macias_ring* target, char** out) {
  if (macias_status st = require(source && target && out, "null argument"))
    return st;
  return guarded([&] {
    *out = copy_string(macias::dump_report(
        macias::classify_json(macias::classify(source->id, target->id))));
  });
}

macias_status macias_homeo_build(const macias_ring* source,
                                 const macias_ring* target,
                                 macias_homeo** out) {
  if (macias_status st = require(source && target && out, "null argument"))
    return st;
  return guarded([&] {
    *out = new macias_homeo{macias::build_homeo(source->id, target->id)};
  });
}

void macias_homeo_free(macias_homeo* map) { delete map; }

macias_status macias_homeo_apply(const macias_homeo* map,
                                 const macias_element* x,
                                 macias_element** out) {
  if (macias_status st = require(map && x && out, "null argument")) return st;
  return guarded([&] {
    *out = new macias_element{macias::apply_homeo(map->map, x->value)};
  });
}

macias_status macias_homeo_apply_inverse(const macias_homeo* map,
                                         const macias_element* y,
                                         macias_element** out) {
  if (macias_status st = require(map && y && out, "null argument")) return st;
  return guarded([&] {
    *out = new macias_element{macias::apply_homeo_inverse(map->map, y->value)};
  });
}

macias_status macias_homeo_verify_json(const macias_homeo* map, long window,
                                       char** out) {
  if (macias_status st = require(map && out, "null argument")) return st;
  return guarded([&] {
    macias::Window w = macias::enumerate_elements(map->map.source, window);
    *out = copy_string(macias::dump_report(
        macias::homeo_verification_json(macias::verify_homeo(map->map, w))));
  });
}

macias_status macias_certificate_json(const macias_ring* source,
                                      const macias_ring* target, long window,
                                      char** out) {
  if (macias_status st = require(source && target && out, "null argument"))
    return st;
  return guarded([&] {
    macias::Window ws = macias::enumerate_elements(source->id, window);
    macias::Window wt = macias::enumerate_elements(target->id, window);
    *out = copy_string(macias::dump_report(macias::certificate_json(
        macias::non_homeo_certificate(source->id, target->id, ws, wt))));
  });
}

}  // extern "C"
