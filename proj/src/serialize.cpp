#include "w1g/serialize.hpp"

namespace w1g {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\", got " + j.dump());
  return parse_rational(j.get<std::string>());
}

int genus_from(const Json& j) {
  const int g = j.at("genus").get<int>();
  (void)Monomial(g);
  return g;
}

void check_flavor(const Json& j, Flavor expected) {
  if (j.get<Flavor>() != expected)
    throw ParseError("expected flavor " + std::string(flavor_name(expected)) + ", got " + j.dump());
}

}  // namespace detail

void to_json(Json& j, const Monomial& m) {
  j = Json::array();
  for (auto e : m.exponents()) j.push_back(e);
}

void from_json(const Json& j, Monomial& m) {
  if (!j.is_array()) throw ParseError("monomial must be an exponent array, got " + j.dump());
  std::vector<Monomial::Exponent> e;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("exponent must be an integer, got " + x.dump());
    const auto v = x.get<std::int64_t>();
    if (v < std::numeric_limits<Monomial::Exponent>::min() || v > std::numeric_limits<Monomial::Exponent>::max())
      throw ParseError("exponent out of range: " + x.dump());
    e.push_back(static_cast<Monomial::Exponent>(v));
  }
  m = Monomial::from_exponents(e);
}

void to_json(Json& j, Flavor f) { j = std::string(flavor_name(f)); }
void from_json(const Json& j, Flavor& f) { f = parse_flavor(j.get<std::string>()); }
void to_json(Json& j, Truncation t) { j = std::string(truncation_name(t)); }
void from_json(const Json& j, Truncation& t) { t = parse_truncation(j.get<std::string>()); }

namespace {

std::string_view kind_name(RowTag::Kind k) {
  switch (k) {
    case RowTag::Kind::user: return "user";
    case RowTag::Kind::cocycle: return "cocycle";
    case RowTag::Kind::coboundary: return "coboundary";
  }
  return "?";
}

}  // namespace

void to_json(Json& j, const RowTag& t) {
  j = Json::object();
  j["kind"] = std::string(kind_name(t.kind));
  switch (t.kind) {
    case RowTag::Kind::user: break;
    case RowTag::Kind::cocycle:
      j["Z1"] = t.keys[0];
      j["Z2"] = t.keys[1];
      j["u"] = t.keys[2];
      j["v"] = t.keys[3];
      break;
    case RowTag::Kind::coboundary:
      j["Z"] = t.keys[0];
      j["u"] = t.keys[1];
      j["v"] = t.keys[2];
      break;
  }
}

void from_json(const Json& j, RowTag& t) {
  const auto kind = j.at("kind").get<std::string>();
  t = RowTag{};
  if (kind == "user") {
    t.kind = RowTag::Kind::user;
  } else if (kind == "cocycle") {
    t.kind = RowTag::Kind::cocycle;
    t.keys = {j.at("Z1").get<Monomial>(), j.at("Z2").get<Monomial>(), j.at("u").get<Monomial>(),
              j.at("v").get<Monomial>()};
  } else if (kind == "coboundary") {
    t.kind = RowTag::Kind::coboundary;
    const auto z = j.at("Z").get<Monomial>();
    t.keys = {z, j.at("u").get<Monomial>(), j.at("v").get<Monomial>(), Monomial(z.genus())};
  } else {
    throw ParseError("unknown row kind '" + kind + "'");
  }
}

void to_json(Json& j, const CertificateRow& r) { j = {{"row", r.tag}, {"multiplier", r.multiplier}}; }
void from_json(const Json& j, CertificateRow& r) {
  r.tag = j.at("row").get<RowTag>();
  r.multiplier = j.at("multiplier").get<Rational>();
}

void to_json(Json& j, const KWitness& w) { j = {{"u", w.u}, {"v", w.v}, {"defect", w.defect}}; }
void from_json(const Json& j, KWitness& w) {
  w.u = j.at("u").get<Monomial>();
  w.v = j.at("v").get<Monomial>();
  w.defect = j.at("defect").get<Rational>();
}

void to_json(Json& j, const KCheckResult& r) {
  j = {{"origin_value", r.origin_value},
       {"origin_ok", r.origin_ok()},
       {"additive_on_box", r.additive_on_box()},
       {"witnesses", r.witnesses}};
}
void from_json(const Json& j, KCheckResult& r) {
  r.origin_value = j.at("origin_value").get<Rational>();
  r.witnesses = j.at("witnesses").get<std::vector<KWitness>>();
}

void to_json(Json& j, const ExtendFailure& f) {
  j = {{"mismatch", f.mismatch}, {"k_value", f.k_value}, {"hom_value", f.hom_value}};
}
void from_json(const Json& j, ExtendFailure& f) {
  f.mismatch = j.at("mismatch").get<Monomial>();
  f.k_value = j.at("k_value").get<Rational>();
  f.hom_value = j.at("hom_value").get<Rational>();
}

void to_json(Json& j, const SoundnessScan& s) {
  j = {{"genus", s.genus}, {"radius", s.radius}, {"triples_checked", s.triples_checked}, {"nonzero", s.nonzero}};
}
void from_json(const Json& j, SoundnessScan& s) {
  s.genus = j.at("genus").get<int>();
  s.radius = j.at("radius").get<int>();
  s.triples_checked = j.at("triples_checked").get<std::uint64_t>();
  s.nonzero = j.at("nonzero").get<std::uint64_t>();
}

void to_json(Json& j, const SolveReport& r) {
  j = Json::object();
  j["genus"] = r.genus;
  j["flavor"] = r.flavor;
  j["domain_radius"] = r.domain_radius;
  j["value_radius"] = r.value_radius;
  j["num_vars"] = r.num_vars;
  j["num_equations"] = r.num_equations;
  j["rank"] = r.rank;
  j["kernel_dim"] = r.kernel_dim;
  j["components"] = r.components;
  j["consistent"] = r.consistent;
  j["certificate"] = r.certificate;
  j["kernel"] = r.kernel;
}
void from_json(const Json& j, SolveReport& r) {
  r.genus = j.at("genus").get<int>();
  r.flavor = j.at("flavor").get<Flavor>();
  r.domain_radius = j.at("domain_radius").get<int>();
  r.value_radius = j.at("value_radius").get<int>();
  r.num_vars = j.at("num_vars").get<std::size_t>();
  r.num_equations = j.at("num_equations").get<std::size_t>();
  r.rank = j.at("rank").get<std::size_t>();
  r.kernel_dim = j.at("kernel_dim").get<std::size_t>();
  r.components = j.at("components").get<std::size_t>();
  r.consistent = j.at("consistent").get<bool>();
  r.certificate = j.at("certificate").get<std::vector<CertificateRow>>();
  r.kernel.clear();
  for (const auto& k : j.at("kernel")) r.kernel.push_back(k.get<AnyCochain>());
}

void to_json(Json& j, const ClassificationReport& r) {
  j = Json::object();
  j["genus"] = r.genus;
  j["flavor"] = r.flavor;
  j["domain_radius"] = r.domain_radius;
  j["value_radius"] = r.value_radius;
  j["coboundary_radius"] = r.coboundary_radius;
  j["family"] = r.family;
  j["family_cocycles"] = r.family_cocycles;
  j["family_rank"] = r.family_rank;
  j["coboundary_rank"] = r.coboundary_rank;
  j["joint_rank"] = r.joint_rank;
  j["dimension"] = r.dimension;
  j["expected_dimension"] = r.expected_dimension;
  j["expected_met"] = r.expected_met;
  j["iota_check"] = r.iota_check;
  j["iota_difference_zero"] = r.iota_difference_zero;
}
void from_json(const Json& j, ClassificationReport& r) {
  r.genus = j.at("genus").get<int>();
  r.flavor = j.at("flavor").get<Flavor>();
  r.domain_radius = j.at("domain_radius").get<int>();
  r.value_radius = j.at("value_radius").get<int>();
  r.coboundary_radius = j.at("coboundary_radius").get<int>();
  r.family = j.at("family").get<std::vector<std::string>>();
  r.family_cocycles = j.at("family_cocycles").get<bool>();
  r.family_rank = j.at("family_rank").get<std::size_t>();
  r.coboundary_rank = j.at("coboundary_rank").get<std::size_t>();
  r.joint_rank = j.at("joint_rank").get<std::size_t>();
  r.dimension = j.at("dimension").get<std::size_t>();
  r.expected_dimension = j.at("expected_dimension").get<std::size_t>();
  r.expected_met = j.at("expected_met").get<bool>();
  r.iota_check = j.at("iota_check").get<bool>();
  r.iota_difference_zero = j.at("iota_difference_zero").get<bool>();
}

void to_json(Json& j, const TuraevReport& r) {
  j = Json::object();
  j["genus"] = r.genus;
  j["radius"] = r.radius;
  j["pairs_checked"] = r.pairs_checked;
  j["nonzero"] = r.nonzero;
  j["all_zero"] = r.all_zero;
  j["first_nonzero"] = r.first_nonzero ? Json{{"u", r.first_nonzero->first}, {"v", r.first_nonzero->second}}
                                       : Json(nullptr);
  j["gamma"] = r.gamma;
  j["target"] = {{"u", r.target.first}, {"v", r.target.second}};
  j["turaev_value"] = r.turaev_value;
  j["nontrivial_in_window"] = r.nontrivial_in_window;
}
void from_json(const Json& j, TuraevReport& r) {
  r.genus = j.at("genus").get<int>();
  r.radius = j.at("radius").get<int>();
  r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
  r.nonzero = j.at("nonzero").get<std::uint64_t>();
  r.all_zero = j.at("all_zero").get<bool>();
  r.first_nonzero.reset();
  if (const auto& f = j.at("first_nonzero"); !f.is_null())
    r.first_nonzero = PairKey{f.at("u").get<Monomial>(), f.at("v").get<Monomial>()};
  r.gamma = j.at("gamma").get<Monomial>();
  r.target = {j.at("target").at("u").get<Monomial>(), j.at("target").at("v").get<Monomial>()};
  r.turaev_value = j.at("turaev_value").get<Rational>();
  r.nontrivial_in_window = j.at("nontrivial_in_window").get<bool>();
}

void to_json(Json& j, const PropertyResult& r) {
  j = {{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"first_failure", r.first_failure}};
}
void from_json(const Json& j, PropertyResult& r) {
  r.name = j.at("name").get<std::string>();
  r.checked = j.at("checked").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::uint64_t>();
  r.first_failure = j.at("first_failure").get<std::string>();
}

void to_json(Json& j, const AxiomsReport& r) {
  j = {{"seed", r.seed},
       {"exhaustive_radius", r.exhaustive_radius},
       {"samples", r.samples},
       {"passed", r.passed()},
       {"properties", r.properties}};
}
void from_json(const Json& j, AxiomsReport& r) {
  r.seed = j.at("seed").get<std::uint64_t>();
  r.exhaustive_radius = j.at("exhaustive_radius").get<int>();
  r.samples = j.at("samples").get<int>();
  r.properties = j.at("properties").get<std::vector<PropertyResult>>();
}

}  // namespace w1g

namespace nlohmann {

void adl_serializer<w1g::LaurentElement>::to_json(json& j, const w1g::LaurentElement& p) {
  j = json::object();
  j["genus"] = p.genus();
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", m}, {"coef", w1g::detail::rational_json(c)}});
  j["terms"] = std::move(terms);
}

w1g::LaurentElement adl_serializer<w1g::LaurentElement>::from_json(const json& j) {
  const int genus = w1g::detail::genus_from(j);
  w1g::LaurentElement out(genus);
  for (const auto& t : j.at("terms")) {
    const auto m = t.at("exp").get<w1g::Monomial>();
    w1g::require_same_genus(genus, m.genus(), "Laurent term");
    out.add_term(m, w1g::detail::rational_from(t.at("coef")));
  }
  return out;
}

void adl_serializer<w1g::HomFunctional>::to_json(json& j, const w1g::HomFunctional& k) {
  json v = json::array();
  for (const auto& q : k.basis_values()) v.push_back(w1g::detail::rational_json(q));
  j = {{"basis_values", std::move(v)}};
}

w1g::HomFunctional adl_serializer<w1g::HomFunctional>::from_json(const json& j) {
  std::vector<w1g::Rational> v;
  for (const auto& q : j.at("basis_values")) v.push_back(w1g::detail::rational_from(q));
  return w1g::HomFunctional(std::move(v));
}

void adl_serializer<w1g::FiniteKMap>::to_json(json& j, const w1g::FiniteKMap& k) {
  json v = json::array();
  for (const auto& [m, q] : k.values()) v.push_back({{"exp", m}, {"value", w1g::detail::rational_json(q)}});
  j = {{"genus", k.genus()}, {"values", std::move(v)}};
}

w1g::FiniteKMap adl_serializer<w1g::FiniteKMap>::from_json(const json& j) {
  const int genus = w1g::detail::genus_from(j);
  w1g::FiniteKMap k(genus);
  for (const auto& e : j.at("values")) {
    const auto m = e.at("exp").get<w1g::Monomial>();
    w1g::require_same_genus(genus, m.genus(), "k-map point");
    if (k.values().count(m)) throw w1g::ParseError("duplicate k-map point " + m.str());
    k.set(m, w1g::detail::rational_from(e.at("value")));
  }
  return k;
}

}  // namespace nlohmann
