#include "w1g/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace w1g {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  bool passed = true;
  Json result;
};

Json read_input(const RunConfig& cfg, std::string_view what) {
  if (cfg.input.empty()) throw UsageError(std::string(what) + " input file required (--input)");
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + cfg.input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Json j = parse_json(ss.str());
  // Accept a whole report envelope from make-cochain and friends.
  if (j.is_object() && j.contains("command") && j.contains("result")) return j.at("result");
  return j;
}

int coboundary_radius(const RunConfig& cfg) {
  return cfg.coboundary_radius < 0 ? cfg.value_radius : cfg.coboundary_radius;
}

Json config_json(std::string_view cmd, const RunConfig& c) {
  Json j = Json::object();
  auto put_window = [&] {
    j["genus"] = c.genus;
    j["domain_radius"] = c.domain_radius;
    j["value_radius"] = c.value_radius;
  };
  if (cmd == "verify-axioms") {
    j["exhaustive_radius"] = c.domain_radius;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
  } else if (cmd == "residual-scan" || cmd == "coboundary-test") {
    if (cmd == "coboundary-test") j["coboundary_radius"] = coboundary_radius(c);
  } else if (cmd == "check-k") {
    j["box_radius"] = c.domain_radius;
  } else if (cmd == "classify") {
    put_window();
    j["flavor"] = c.flavor;
    j["coboundary_radius"] = coboundary_radius(c);
  } else if (cmd == "propagate" || cmd == "kernel") {
    put_window();
    j["flavor"] = c.flavor;
    j["component"] = c.component;
    j["truncation"] = c.truncation;
    if (cmd == "kernel") j["with_basis"] = c.with_basis;
  } else if (cmd == "turaev") {
    j["genus"] = c.genus;
    j["value_radius"] = c.value_radius;
  } else if (cmd == "certificate-scan") {
    j["genus"] = c.genus;
    j["value_radius"] = c.value_radius;
  } else if (cmd == "make-cochain") {
    j["kind"] = c.kind;
    j["genus"] = c.genus;
    j["domain_radius"] = c.domain_radius;
    j["flavor"] = c.flavor;
    j["scale"] = c.scale;
  }
  return j;
}

std::uint64_t residual_pairs(int genus, int radius) {
  const auto box = box_monomials(genus, radius);
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((box[i] * box[j]).sup_norm() <= radius) ++n;
  return n;
}

template <class V>
Outcome residual_outcome(const Cochain<V>& c, Exec exec) {
  ResidualScanReport<V> r;
  r.genus = c.genus();
  r.domain_radius = c.domain_radius();
  r.pairs_checked = residual_pairs(c.genus(), c.domain_radius());
  r.witnesses = residual_scan(c, exec);
  return {r.passed(), Json(r)};
}

Outcome cmd_verify_axioms(const RunConfig& c) {
  const auto rep = verify_axioms(c.domain_radius, c.samples, c.seed);
  return {rep.passed(), Json(rep)};
}

Outcome cmd_residual_scan(const RunConfig& c) {
  const auto any = read<AnyCochain>(read_input(c, "cochain"), "cochain");
  return std::visit([&](const auto& cc) { return residual_outcome(cc, c.exec); }, any);
}

Outcome cmd_check_k(const RunConfig& c) {
  const auto k = read<KMap>(read_input(c, "k-map"), "k-map");
  const auto check = k_compatibility_check(k, c.domain_radius);
  const auto ext = extend_to_hom(k, c.domain_radius);
  Json j = Json::object();
  j["k"] = k;
  j["compatibility"] = check;
  const bool extends = std::holds_alternative<HomFunctional>(ext);
  if (extends)
    j["extension"] = {{"homomorphism", std::get<HomFunctional>(ext)}};
  else
    j["extension"] = {{"failure", std::get<ExtendFailure>(ext)}};
  return {check.origin_ok() && check.additive_on_box() && extends, std::move(j)};
}

Outcome cmd_classify(const RunConfig& c) {
  const auto rep = classification_report(c.genus, c.domain_radius, c.value_radius, c.flavor, coboundary_radius(c),
                                         c.exec);
  return {rep.passed(), Json(rep)};
}

Outcome cmd_coboundary_test(const RunConfig& c) {
  const auto any = read<AnyCochain>(read_input(c, "cochain"), "cochain");
  return std::visit(
      [&](const auto& cc) {
        const auto r = is_coboundary(cc, coboundary_radius(c), c.exec);
        return Outcome{r.feasible && r.verified, Json(r)};
      },
      any);
}

template <class V>
Outcome propagate_typed(const RunConfig& c) {
  PinnedValues<V> assignment;
  if (!c.input.empty()) {
    const auto given = read<Cochain<V>>(read_input(c, "assignment"), "assignment");
    if (given.genus() != c.genus) throw DimensionError("assignment genus differs from --genus");
    for (const auto& [z, v] : given.entries()) assignment.emplace(z, v);
  }
  SystemOptions opts{parse_component_filter(c.flavor, c.component), c.truncation, c.exec};
  const auto r = propagate_from_generators(c.genus, assignment, c.domain_radius, c.value_radius, opts);
  return {r.consistent && r.unique_on_interior, Json(r)};
}

Outcome cmd_propagate(const RunConfig& c) {
  return c.flavor == Flavor::tensor ? propagate_typed<Tensor2Element>(c) : propagate_typed<Wedge2Element>(c);
}

Outcome cmd_kernel(const RunConfig& c) {
  SystemOptions opts{parse_component_filter(c.flavor, c.component), c.truncation, c.exec};
  const auto sys = build_cocycle_system(c.genus, c.domain_radius, c.value_radius, c.flavor, opts);
  const auto rep = kernel_basis(sys, c.with_basis, c.exec);
  return {rep.consistent, Json(rep)};
}

Outcome cmd_turaev(const RunConfig& c) {
  const auto rep = nontriviality_scan(c.genus, c.value_radius, c.exec);
  return {rep.all_zero, Json(rep)};
}

Outcome cmd_certificate_scan(const RunConfig& c) {
  const auto rep = certificate_soundness_scan(c.genus, c.value_radius, c.exec);
  return {rep.nonzero == 0, Json(rep)};
}

Outcome cmd_make_cochain(const RunConfig& c) {
  const int r = c.domain_radius;
  if (c.kind == "delta0") return {true, Json(make_delta0(parse_rational(c.scale), c.genus, r))};
  if (c.kind == "coboundary") {
    const Json in = read_input(c, "element");
    if (c.flavor == Flavor::tensor) return {true, Json(coboundary_cochain(read<Tensor2Element>(in, "element"), r))};
    return {true, Json(coboundary_cochain(read<Wedge2Element>(in, "element"), r))};
  }
  const auto k = read<KMap>(read_input(c, "k-map"), "k-map");
  if (c.kind == "delta") return {true, Json(make_delta_k(k, r))};
  if (c.kind == "delta-left") return {true, Json(make_delta_k_left(k, r))};
  if (c.kind == "delta-right") return {true, Json(make_delta_k_right(k, r))};
  if (c.kind == "iota") return {true, Json(iota_cochain(k, r))};
  throw UsageError("unknown cochain kind '" + c.kind + "'");
}

using Handler = std::function<Outcome(const RunConfig&)>;

const std::map<std::string_view, Handler>& handlers() {
  static const std::map<std::string_view, Handler> h = {
      {"verify-axioms", cmd_verify_axioms},
      {"residual-scan", cmd_residual_scan},
      {"check-k", cmd_check_k},
      {"classify", cmd_classify},
      {"coboundary-test", cmd_coboundary_test},
      {"propagate", cmd_propagate},
      {"turaev", cmd_turaev},
      {"kernel", cmd_kernel},
      {"certificate-scan", cmd_certificate_scan},
      {"make-cochain", cmd_make_cochain},
  };
  return h;
}

void validate(std::string_view cmd, const RunConfig& c) {
  if (c.genus < 1 || c.genus > kMaxGenus) throw UsageError("genus must be in [1, " + std::to_string(kMaxGenus) + "]");
  if (c.domain_radius < 0 || c.value_radius < 0) throw UsageError("radii must be non-negative");
  if (cmd == "turaev" && c.genus < 2) throw UsageError("turaev needs genus at least 2");
  if (c.samples < 0) throw UsageError("samples must be non-negative");
}

void flatten_text(const Json& j, const std::string& prefix, std::ostringstream& out, int depth) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object() && depth < 2) {
      flatten_text(v, key, out, depth + 1);
    } else if (v.is_array()) {
      bool scalars = true;
      for (const auto& e : v) scalars = scalars && !e.is_structured();
      if (scalars && v.size() <= 16)
        out << key << ": " << v.dump() << "\n";
      else
        out << key << ": [" << v.size() << " entries]\n";
    } else if (v.is_string()) {
      out << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::vector<std::string_view> subcommands() {
  std::vector<std::string_view> out;
  for (const auto& [k, h] : handlers()) out.push_back(k);
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  flatten_text(report, "", out, 0);
  return out.str();
}

RunResult run(std::string_view subcommand, const RunConfig& config) {
  RunResult res;
  Json& rep = res.report;
  rep = Json::object();
  rep["command"] = std::string(subcommand);
  auto fail = [&](int code, std::string_view kind, const std::string& message) {
    res.exit_code = code;
    rep["passed"] = false;
    rep["error"] = {{"kind", std::string(kind)}, {"message", message}};
  };
  const auto& h = handlers();
  auto it = h.find(subcommand);
  if (it == h.end()) {
    fail(kExitUsage, "usage", "unknown subcommand '" + std::string(subcommand) + "'");
  } else {
    rep["config"] = config_json(subcommand, config);
    try {
      validate(subcommand, config);
      Outcome o = it->second(config);
      rep["passed"] = o.passed;
      rep["result"] = std::move(o.result);
      res.exit_code = o.passed ? kExitPass : kExitCheckFailed;
    } catch (const ParseError& e) {
      fail(kExitParse, "parse", e.what());
    } catch (const WindowError& e) {
      fail(kExitUsage, "window", e.what());
    } catch (const DimensionError& e) {
      fail(kExitUsage, "dimension", e.what());
    } catch (const std::invalid_argument& e) {
      fail(kExitUsage, "usage", e.what());
    } catch (const std::exception& e) {
      fail(kExitUsage, "error", e.what());
    }
  }
  res.rendered = config.format == OutputFormat::json ? dump_json(rep) : render_text(rep);
  return res;
}

void write_report(const RunResult& result, const RunConfig& config) {
  if (config.output.empty()) {
    std::cout << result.rendered;
    std::cout.flush();
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to '" + config.output + "'");
  out << result.rendered;
}

}  // namespace w1g
