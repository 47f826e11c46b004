#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "macias/macias.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

[[noreturn]] void die(const std::string& message) {
  std::fprintf(stderr, "macias: %s\n", message.c_str());
  std::exit(kUsage);
}

void check(macias_status st) {
  if (st != MACIAS_OK) die(macias_last_error());
}

struct RingHandle {
  macias_ring* ptr = nullptr;
  explicit RingHandle(const std::string& spec) {
    check(macias_ring_parse(spec.c_str(), &ptr));
  }
  ~RingHandle() { macias_ring_free(ptr); }
  RingHandle(const RingHandle&) = delete;
  RingHandle& operator=(const RingHandle&) = delete;
};

struct ElementHandle {
  macias_element* ptr = nullptr;
  ElementHandle(const RingHandle& ring, const std::string& text) {
    check(macias_element_parse(ring.ptr, text.c_str(), &ptr));
  }
  explicit ElementHandle(macias_element* owned) : ptr(owned) {}
  ~ElementHandle() { macias_element_free(ptr); }
  ElementHandle(const ElementHandle&) = delete;
  ElementHandle& operator=(const ElementHandle&) = delete;
};

struct HomeoHandle {
  macias_homeo* ptr = nullptr;
  HomeoHandle(const RingHandle& from, const RingHandle& to) {
    check(macias_homeo_build(from.ptr, to.ptr, &ptr));
  }
  ~HomeoHandle() { macias_homeo_free(ptr); }
  HomeoHandle(const HomeoHandle&) = delete;
  HomeoHandle& operator=(const HomeoHandle&) = delete;
};

std::string take_string(char* raw) {
  std::string out = raw ? raw : "";
  macias_string_free(raw);
  return out;
}

json parse_payload(const std::string& text) { return json::parse(text); }

std::string card_str(const json& c) {
  if (c.at("finite").get<bool>())
    return "Finite(" + std::to_string(c.at("count").get<long>()) + ")";
  return "CountablyInfinite";
}

std::string join_elements(const json& arr, const char* sep = " ") {
  std::string out;
  for (const auto& e : arr) {
    if (!out.empty()) out += sep;
    out += e.get<std::string>();
  }
  return out;
}

std::string support_str(const json& support) {
  std::string out = "{";
  bool first = true;
  for (const auto& cls : support.at("classes")) {
    if (!first) out += ",";
    first = false;
    out += "[" + cls.at("representative").get<std::string>() + "]";
  }
  return out + "}";
}

// Options shared by most commands.
struct Common {
  std::string ring = "Z";
  long window = 100;
  std::string output = "text";
  bool with_oracle = false;
  long jobs = 1;
};

void add_ring_flag(CLI::App* cmd, Common& c) {
  cmd->add_option("--ring,-r", c.ring, "ring spec, e.g. Z, GF(3)[x], Z[i], Z_(5), Z[1/2], Z[x]");
}

void add_window_flag(CLI::App* cmd, Common& c) {
  cmd->add_option("--window,-w", c.window, "height bound of the element window")
      ->check(CLI::PositiveNumber);
}

void add_output_flag(CLI::App* cmd, Common& c, bool dot_allowed = false) {
  std::vector<std::string> modes = {"text", "json"};
  if (dot_allowed) modes.push_back("dot");
  cmd->add_option("--output", c.output, "output format")
      ->check(CLI::IsMember(modes));
}

int emit(const std::string& payload, const Common& c,
         int (*text_renderer)(const json&)) {
  if (c.output == "json") {
    std::fputs(payload.c_str(), stdout);
    return kOk;
  }
  return text_renderer(parse_payload(payload));
}

// ---- per-command text renderers -------------------------------------------

int render_ring_info(const json& j) {
  std::printf("ring: %s\n", j.at("ring").get<std::string>().c_str());
  std::printf("units: %s\n", card_str(j.at("units")).c_str());
  if (j.contains("primes")) {
    std::printf("primes: %s\n", card_str(j.at("primes")).c_str());
    std::printf("first prime classes: %s\n",
                join_elements(j.at("sample_prime_classes")).c_str());
    std::printf("first units: %s\n", join_elements(j.at("sample_units")).c_str());
  }
  return kOk;
}

int render_factor(const json& j) {
  std::string line = j.at("element").get<std::string>() + " = " +
                     j.at("unit").get<std::string>();
  for (const auto& f : j.at("factors")) {
    line += " * " + f.at("prime").get<std::string>();
    long e = f.at("exponent").get<long>();
    if (e != 1) line += "^" + std::to_string(e);
  }
  std::printf("%s\n", line.c_str());
  return kOk;
}

int render_support(const json& j) {
  std::printf("%s\n", support_str(j).c_str());
  return kOk;
}

int render_member(const json& j) {
  std::printf("%s\n", j.at("member").get<bool>() ? "true" : "false");
  return kOk;
}

int render_closure(const json& j) {
  const json& c = j.at("closure");
  if (c.at("kind").get<std::string>() == "whole-space") {
    std::printf("closure(%s) = whole-space\n",
                j.at("element").get<std::string>().c_str());
  } else {
    std::printf("closure(%s) = divisible-by%s\n",
                j.at("element").get<std::string>().c_str(),
                support_str(c.at("support")).c_str());
  }
  std::printf("members within window %ld: %s\n", j.at("window").get<long>(),
              join_elements(j.at("members_in_window")).c_str());
  return kOk;
}

int render_witness(const json& j) {
  if (j.at("witness").is_null())
    std::printf("none (%s lies in the closure of {%s})\n",
                j.at("y").get<std::string>().c_str(),
                j.at("x").get<std::string>().c_str());
  else
    std::printf("%s\n", j.at("witness").get<std::string>().c_str());
  return kOk;
}

int render_graph(const json& j) {
  std::printf("nodes: %zu\nedges: %ld\n", j.at("nodes").size(),
              j.at("edge_count").get<long>());
  return kOk;
}

int render_density(const json& j) {
  long witnessed = 0;
  for (const auto& r : j.at("records"))
    if (!r.at("prime_inside").is_null()) ++witnessed;
  std::printf("dense: %s (%ld/%zu generators witnessed)\n",
              j.at("verdict").get<bool>() ? "true" : "false", witnessed,
              j.at("records").size());
  if (!j.at("empty_open_generator").is_null())
    std::printf("empty basic open: sigma_%s^0 contains no prime\n",
                j.at("empty_open_generator").get<std::string>().c_str());
  return kOk;
}

int render_units_open(const json& j) {
  std::printf("units_open: %s\n", j.at("verdict").get<bool>() ? "true" : "false");
  if (!j.at("alpha").is_null())
    std::printf("alpha: %s (sigma_alpha^0 = units, window-exact: %s)\n",
                j.at("alpha").get<std::string>().c_str(),
                j.at("alpha_exact").get<bool>() ? "true" : "false");
  else
    std::printf("witnessed non-unit members for %zu generators\n",
                j.at("records").size());
  return kOk;
}

int render_semiprimitive(const json& j) {
  std::printf("semiprimitive: %s\n",
              j.at("verdict").get<bool>() ? "true" : "false");
  if (j.at("radical_witness").is_null())
    std::printf("cleared %ld window elements against maximal ideals\n",
                j.at("cleared").get<long>());
  else
    std::printf("radical witness: %s\n",
                j.at("radical_witness").get<std::string>().c_str());
  return kOk;
}

int render_partition(const json& j) {
  std::printf("blocks: %ld\n", j.at("block_count").get<long>());
  for (const auto& b : j.at("blocks"))
    std::printf("%s: %zu elements\n", support_str(b.at("support")).c_str(),
                b.at("members").size());
  return kOk;
}

int render_classify(const json& j) {
  if (j.at("homeomorphic").get<bool>()) {
    std::printf("Homeomorphic\n");
  } else {
    const std::string which = j.at("differing").get<std::string>();
    const char* prefix = which == "units" ? "units" : "primes";
    std::printf("NotHomeomorphic(%s: %s vs %s)\n", prefix,
                card_str(j.at(std::string("source_") + prefix)).c_str(),
                card_str(j.at(std::string("target_") + prefix)).c_str());
  }
  return kOk;
}

int render_verify(const json& j) {
  std::printf("passed: %s\n", j.at("passed").get<bool>() ? "true" : "false");
  std::printf("elements: %ld pairs: %ld violations: %ld\n",
              j.at("elements").get<long>(), j.at("pairs").get<long>(),
              j.at("violation_count").get<long>());
  std::printf("injective: %s support-transport: %s membership: %s roundtrip: %s\n",
              j.at("injective").get<bool>() ? "yes" : "NO",
              j.at("supports_transported").get<bool>() ? "yes" : "NO",
              j.at("membership_preserved").get<bool>() ? "yes" : "NO",
              j.at("roundtrip").get<bool>() ? "yes" : "NO");
  for (const auto& v : j.at("violations"))
    std::printf("  %s\n", v.get<std::string>().c_str());
  return j.at("passed").get<bool>() ? kOk : kVerifyFail;
}

int render_certificate(const json& j) {
  std::printf("differing: %s (%s)\n", j.at("differing").get<std::string>().c_str(),
              j.at("counted").get<std::string>().c_str());
  auto row = [](const json& samples) {
    std::string out;
    for (const auto& s : samples) {
      if (!out.empty()) out += " ";
      out += std::to_string(s.at("bound").get<long>()) + ":" +
             std::to_string(s.at("count").get<long>());
    }
    return out;
  };
  std::printf("source %s: %s\n", j.at("source").get<std::string>().c_str(),
              row(j.at("source_counts")).c_str());
  std::printf("target %s: %s\n", j.at("target").get<std::string>().c_str(),
              row(j.at("target_counts")).c_str());
  std::printf("discrepant: %s\n", j.at("discrepant").get<bool>() ? "true" : "false");
  return j.at("discrepant").get<bool>() ? kOk : kVerifyFail;
}

int render_zx(const json& j) {
  std::printf("supports_disjoint: %s\n",
              j.at("supports_disjoint").get<bool>() ? "true" : "false");
  std::printf("coprime: %s\n", j.at("coprime").get<bool>() ? "true" : "false");
  std::printf("oracle_coprime: %s\n",
              j.at("oracle_coprime").get<bool>() ? "true" : "false");
  std::printf("ideal constant generator: %s\n",
              j.at("ideal_constant_generator").get<std::string>().c_str());
  std::printf("even-constant obstruction: %s\n",
              j.at("even_constant_obstruction").get<bool>() ? "true" : "false");
  std::printf("sanity (x, x+1) coprime: %s via u=%s v=%s\n",
              j.at("sanity_pair_coprime").get<bool>() ? "true" : "false",
              j.at("sanity_cofactor_u").get<std::string>().c_str(),
              j.at("sanity_cofactor_v").get<std::string>().c_str());
  std::printf("passed: %s\n", j.at("passed").get<bool>() ? "true" : "false");
  return j.at("passed").get<bool>() ? kOk : kVerifyFail;
}

int render_report(const json& j) {
  std::printf("ring: %s window: %ld elements: %ld\n",
              j.at("ring_info").at("ring").get<std::string>().c_str(),
              j.at("window").get<long>(), j.at("element_count").get<long>());
  std::printf("generic points: %ld graph edges: %ld partition blocks: %zu "
              "maximal closures: %zu\n",
              j.at("generic_points").get<long>(), j.at("graph_edges").get<long>(),
              j.at("partition").size(), j.at("maximal_closures").size());
  const json& eq = j.at("equivalence");
  std::printf("four-way: units_not_open=%s dense=%s primes_infinite=%s "
              "semiprimitive=%s consistent=%s\n",
              eq.at("units_not_open").get<bool>() ? "true" : "false",
              eq.at("primes_dense").get<bool>() ? "true" : "false",
              eq.at("primes_infinite").get<bool>() ? "true" : "false",
              eq.at("semiprimitive").get<bool>() ? "true" : "false",
              eq.at("consistent").get<bool>() ? "true" : "false");
  if (j.contains("oracle"))
    std::printf("oracle cross-check: %ld/%ld coprime pairs agree\n",
                j.at("oracle").at("coprime_agreed").get<long>(),
                j.at("oracle").at("coprime_checked").get<long>());
  return eq.at("consistent").get<bool>() ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the Macias topology on integral domains"};
  app.require_subcommand(1);

  Common c;
  std::string element_text, k_text, s_text, x_text, y_text;
  std::string from_spec = "Z", to_spec = "Z";
  int exit_code = kOk;

  auto* ring_info = app.add_subcommand("ring-info", "cardinalities and samples");
  add_ring_flag(ring_info, c);
  add_output_flag(ring_info, c);
  ring_info->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    check(macias_ring_info_json(ring.ptr, &raw));
    exit_code = emit(take_string(raw), c, render_ring_info);
  });

  auto* factor_cmd = app.add_subcommand("factor", "unit and prime-power decomposition");
  add_ring_flag(factor_cmd, c);
  add_output_flag(factor_cmd, c);
  factor_cmd->add_option("--element,-e", element_text, "element literal")->required();
  factor_cmd->callback([&] {
    RingHandle ring(c.ring);
    ElementHandle x(ring, element_text);
    char* raw = nullptr;
    check(macias_factor_json(x.ptr, &raw));
    exit_code = emit(take_string(raw), c, render_factor);
  });

  auto* support_cmd = app.add_subcommand("support", "prime classes dividing an element");
  add_ring_flag(support_cmd, c);
  add_output_flag(support_cmd, c);
  support_cmd->add_option("--element,-e", element_text, "element literal")->required();
  support_cmd->callback([&] {
    RingHandle ring(c.ring);
    ElementHandle x(ring, element_text);
    char* raw = nullptr;
    check(macias_support_json(x.ptr, &raw));
    exit_code = emit(take_string(raw), c, render_support);
  });

  auto* member_cmd = app.add_subcommand("member", "is s inside sigma_k^0");
  add_ring_flag(member_cmd, c);
  add_output_flag(member_cmd, c);
  member_cmd->add_option("--k", k_text, "basic open generator")->required();
  member_cmd->add_option("--s", s_text, "candidate member")->required();
  member_cmd->callback([&] {
    RingHandle ring(c.ring);
    ElementHandle k(ring, k_text), s(ring, s_text);
    char* raw = nullptr;
    check(macias_member_json(s.ptr, k.ptr, &raw));
    exit_code = emit(take_string(raw), c, render_member);
  });

  auto* closure_cmd = app.add_subcommand("closure", "singleton closure and window slice");
  add_ring_flag(closure_cmd, c);
  add_window_flag(closure_cmd, c);
  add_output_flag(closure_cmd, c);
  closure_cmd->add_option("--element,-e", element_text, "element literal")->required();
  closure_cmd->callback([&] {
    RingHandle ring(c.ring);
    ElementHandle x(ring, element_text);
    char* raw = nullptr;
    check(macias_closure_json(x.ptr, c.window, &raw));
    exit_code = emit(take_string(raw), c, render_closure);
  });

  auto* witness_cmd = app.add_subcommand("witness", "prime separating y from closure({x})");
  add_ring_flag(witness_cmd, c);
  add_output_flag(witness_cmd, c);
  witness_cmd->add_option("--x", x_text, "closure base point")->required();
  witness_cmd->add_option("--y", y_text, "candidate outsider")->required();
  witness_cmd->callback([&] {
    RingHandle ring(c.ring);
    ElementHandle x(ring, x_text), y(ring, y_text);
    char* raw = nullptr;
    check(macias_witness_json(x.ptr, y.ptr, &raw));
    exit_code = emit(take_string(raw), c, render_witness);
  });

  auto* graph_cmd = app.add_subcommand("graph", "specialization graph of a window");
  add_ring_flag(graph_cmd, c);
  add_window_flag(graph_cmd, c);
  add_output_flag(graph_cmd, c, /*dot_allowed=*/true);
  graph_cmd->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    if (c.output == "dot") {
      check(macias_graph_dot(ring.ptr, c.window, &raw));
      std::fputs(take_string(raw).c_str(), stdout);
      return;
    }
    check(macias_graph_json(ring.ptr, c.window, &raw));
    exit_code = emit(take_string(raw), c, render_graph);
  });

  auto* density_cmd = app.add_subcommand("density", "are primes dense");
  add_ring_flag(density_cmd, c);
  add_window_flag(density_cmd, c);
  add_output_flag(density_cmd, c);
  density_cmd->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    check(macias_density_json(ring.ptr, c.window, &raw));
    exit_code = emit(take_string(raw), c, render_density);
  });

  auto* open_cmd = app.add_subcommand("units-open", "is the unit group open");
  add_ring_flag(open_cmd, c);
  add_window_flag(open_cmd, c);
  add_output_flag(open_cmd, c);
  open_cmd->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    check(macias_units_open_json(ring.ptr, c.window, &raw));
    exit_code = emit(take_string(raw), c, render_units_open);
  });

  auto* semi_cmd = app.add_subcommand("semiprimitive", "is the Jacobson radical zero");
  add_ring_flag(semi_cmd, c);
  add_window_flag(semi_cmd, c);
  add_output_flag(semi_cmd, c);
  semi_cmd->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    check(macias_semiprimitive_json(ring.ptr, c.window, &raw));
    exit_code = emit(take_string(raw), c, render_semiprimitive);
  });

  auto* part_cmd = app.add_subcommand("partition", "window grouped by support");
  add_ring_flag(part_cmd, c);
  add_window_flag(part_cmd, c);
  add_output_flag(part_cmd, c);
  part_cmd->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    check(macias_partition_json(ring.ptr, c.window, &raw));
    exit_code = emit(take_string(raw), c, render_partition);
  });

  auto* classify_cmd = app.add_subcommand("classify", "homeomorphism verdict for two rings");
  add_output_flag(classify_cmd, c);
  classify_cmd->add_option("--from", from_spec, "source ring spec")->required();
  classify_cmd->add_option("--to", to_spec, "target ring spec")->required();
  classify_cmd->callback([&] {
    RingHandle from(from_spec), to(to_spec);
    char* raw = nullptr;
    check(macias_classify_json(from.ptr, to.ptr, &raw));
    exit_code = emit(take_string(raw), c, render_classify);
  });

  auto* map_cmd = app.add_subcommand("homeo-map", "apply the constructed homeomorphism");
  map_cmd->add_option("--from", from_spec, "source ring spec")->required();
  map_cmd->add_option("--to", to_spec, "target ring spec")->required();
  map_cmd->add_option("--element,-e", element_text, "source element literal")->required();
  map_cmd->callback([&] {
    RingHandle from(from_spec), to(to_spec);
    HomeoHandle h(from, to);
    ElementHandle x(from, element_text);
    macias_element* image = nullptr;
    check(macias_homeo_apply(h.ptr, x.ptr, &image));
    ElementHandle owned(image);
    char* raw = nullptr;
    check(macias_element_str(owned.ptr, &raw));
    std::printf("%s\n", take_string(raw).c_str());
  });

  auto* verify_cmd = app.add_subcommand("homeo-verify", "three-clause window verification");
  add_output_flag(verify_cmd, c);
  verify_cmd->add_option("--from", from_spec, "source ring spec")->required();
  verify_cmd->add_option("--to", to_spec, "target ring spec")->required();
  verify_cmd->add_option("--window,-w,--bound", c.window, "source window bound")
      ->check(CLI::PositiveNumber);
  verify_cmd->callback([&] {
    RingHandle from(from_spec), to(to_spec);
    HomeoHandle h(from, to);
    char* raw = nullptr;
    check(macias_homeo_verify_json(h.ptr, c.window, &raw));
    std::string payload = take_string(raw);
    if (c.output == "json") {
      std::fputs(payload.c_str(), stdout);
      exit_code = parse_payload(payload).at("passed").get<bool>() ? kOk : kVerifyFail;
      return;
    }
    exit_code = render_verify(parse_payload(payload));
  });

  auto* cert_cmd = app.add_subcommand("certificate", "non-homeomorphism evidence");
  add_window_flag(cert_cmd, c);
  add_output_flag(cert_cmd, c);
  cert_cmd->add_option("--from", from_spec, "source ring spec")->required();
  cert_cmd->add_option("--to", to_spec, "target ring spec")->required();
  cert_cmd->callback([&] {
    RingHandle from(from_spec), to(to_spec);
    char* raw = nullptr;
    check(macias_certificate_json(from.ptr, to.ptr, c.window, &raw));
    std::string payload = take_string(raw);
    if (c.output == "json") {
      std::fputs(payload.c_str(), stdout);
      exit_code = parse_payload(payload).at("discrepant").get<bool>() ? kOk : kVerifyFail;
      return;
    }
    exit_code = render_certificate(parse_payload(payload));
  });

  auto* zx_cmd = app.add_subcommand("counterexample-zx", "the Z[x] support counterexample");
  add_output_flag(zx_cmd, c);
  zx_cmd->callback([&] {
    char* raw = nullptr;
    check(macias_zx_json(&raw));
    std::string payload = take_string(raw);
    if (c.output == "json") {
      std::fputs(payload.c_str(), stdout);
      exit_code = parse_payload(payload).at("passed").get<bool>() ? kOk : kVerifyFail;
      return;
    }
    exit_code = render_zx(parse_payload(payload));
  });

  auto* report_cmd = app.add_subcommand("report", "full per-ring certificate bundle");
  add_ring_flag(report_cmd, c);
  add_window_flag(report_cmd, c);
  add_output_flag(report_cmd, c);
  report_cmd->add_flag("--with-oracle", c.with_oracle, "include slow-path cross-checks");
  report_cmd->add_option("--jobs,-j", c.jobs, "worker threads for window sweeps")
      ->check(CLI::PositiveNumber);
  report_cmd->callback([&] {
    RingHandle ring(c.ring);
    char* raw = nullptr;
    check(macias_report_json(ring.ptr, c.window, c.jobs, c.with_oracle ? 1 : 0, &raw));
    std::string payload = take_string(raw);
    if (c.output == "json") {
      std::fputs(payload.c_str(), stdout);
      exit_code = parse_payload(payload)
                          .at("equivalence").at("consistent").get<bool>()
                      ? kOk : kVerifyFail;
      return;
    }
    exit_code = render_report(parse_payload(payload));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  return exit_code;
}
