#pragma once

// JSON forms of every value and report. Rationals are strings "p/q" (or "p"),
// monomials are exponent arrays, and all lists are emitted in the canonical
// order of the container, so equal values serialize to identical bytes.

#include "w1g/axioms.hpp"
#include "w1g/cochain.hpp"
#include "w1g/cohomology.hpp"
#include "w1g/turaev.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace w1g {

using Json = nlohmann::json;

/// Parses JSON text; throws ParseError with the parser diagnostic.
Json parse_json(std::string_view text);
/// Pretty-printed with a trailing newline.
std::string dump_json(const Json& j);

/// Reads a value; every failure (missing key, wrong type, bad rational, genus
/// mismatch) becomes a ParseError naming the offending part.
template <class T>
T read(const Json& j, std::string_view what = "value") {
  try {
    return j.get<T>();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("malformed " + std::string(what) + ": " + e.what());
  }
}

// Scalars and keys.
void to_json(Json& j, const Monomial& m);
void from_json(const Json& j, Monomial& m);
void to_json(Json& j, Flavor f);
void from_json(const Json& j, Flavor& f);
void to_json(Json& j, Truncation t);
void from_json(const Json& j, Truncation& t);
void to_json(Json& j, const RowTag& t);
void from_json(const Json& j, RowTag& t);
void to_json(Json& j, const CertificateRow& r);
void from_json(const Json& j, CertificateRow& r);

// Reports with default-constructible layout.
void to_json(Json& j, const KWitness& w);
void from_json(const Json& j, KWitness& w);
void to_json(Json& j, const KCheckResult& r);
void from_json(const Json& j, KCheckResult& r);
void to_json(Json& j, const ExtendFailure& f);
void from_json(const Json& j, ExtendFailure& f);
void to_json(Json& j, const SoundnessScan& s);
void from_json(const Json& j, SoundnessScan& s);
void to_json(Json& j, const SolveReport& r);
void from_json(const Json& j, SolveReport& r);
void to_json(Json& j, const ClassificationReport& r);
void from_json(const Json& j, ClassificationReport& r);
void to_json(Json& j, const TuraevReport& r);
void from_json(const Json& j, TuraevReport& r);
void to_json(Json& j, const PropertyResult& r);
void from_json(const Json& j, PropertyResult& r);
void to_json(Json& j, const AxiomsReport& r);
void from_json(const Json& j, AxiomsReport& r);

namespace detail {
Json rational_json(const Rational& q);
Rational rational_from(const Json& j);
int genus_from(const Json& j);
void check_flavor(const Json& j, Flavor expected);
}  // namespace detail

template <class V>
struct ResidualScanReport {
  int genus = 0;
  int domain_radius = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<ResidualWitness<V>> witnesses;
  bool passed() const { return witnesses.empty(); }
  friend bool operator==(const ResidualScanReport&, const ResidualScanReport&) = default;
};

}  // namespace w1g

namespace nlohmann {

template <>
struct adl_serializer<w1g::Rational> {
  static void to_json(json& j, const w1g::Rational& q) { j = w1g::to_string(q); }
  static w1g::Rational from_json(const json& j) { return w1g::detail::rational_from(j); }
};

template <>
struct adl_serializer<w1g::LaurentElement> {
  static void to_json(json& j, const w1g::LaurentElement& p);
  static w1g::LaurentElement from_json(const json& j);
};

template <class O>
struct adl_serializer<w1g::PairElement<O>> {
  static void to_json(json& j, const w1g::PairElement<O>& e) {
    j = json::object();
    j["genus"] = e.genus();
    j["flavor"] = w1g::PairElement<O>::flavor;
    json terms = json::array();
    for (const auto& [k, c] : e.terms())
      terms.push_back({{"u", k.first}, {"v", k.second}, {"coef", w1g::detail::rational_json(c)}});
    j["terms"] = std::move(terms);
  }
  static w1g::PairElement<O> from_json(const json& j) {
    const int genus = w1g::detail::genus_from(j);
    if (j.contains("flavor")) w1g::detail::check_flavor(j.at("flavor"), w1g::PairElement<O>::flavor);
    w1g::PairElement<O> out(genus);
    for (const auto& t : j.at("terms")) {
      const auto u = t.at("u").get<w1g::Monomial>();
      const auto v = t.at("v").get<w1g::Monomial>();
      w1g::require_same_genus(genus, u.genus(), "pair term");
      w1g::require_same_genus(genus, v.genus(), "pair term");
      out.add_term(u, v, w1g::detail::rational_from(t.at("coef")));
    }
    return out;
  }
};

template <class V>
struct adl_serializer<w1g::Cochain<V>> {
  static void to_json(json& j, const w1g::Cochain<V>& c) {
    j = json::object();
    j["genus"] = c.genus();
    j["flavor"] = V::flavor;
    j["domain_radius"] = c.domain_radius();
    json entries = json::array();
    for (const auto& [z, v] : c.entries()) entries.push_back({{"Z", z}, {"value", v}});
    j["entries"] = std::move(entries);
  }
  static w1g::Cochain<V> from_json(const json& j) {
    const int genus = w1g::detail::genus_from(j);
    w1g::detail::check_flavor(j.at("flavor"), V::flavor);
    w1g::Cochain<V> out(genus, j.at("domain_radius").get<int>());
    for (const auto& e : j.at("entries")) {
      const auto z = e.at("Z").get<w1g::Monomial>();
      if (out.entries().count(z)) throw w1g::ParseError("duplicate cochain entry at " + z.str());
      out.set(z, e.at("value").get<V>());
    }
    return out;
  }
};

template <>
struct adl_serializer<w1g::AnyCochain> {
  static void to_json(json& j, const w1g::AnyCochain& c) {
    std::visit([&](const auto& cc) { j = cc; }, c);
  }
  static w1g::AnyCochain from_json(const json& j) {
    if (w1g::parse_flavor(j.at("flavor").get<std::string>()) == w1g::Flavor::tensor)
      return j.get<w1g::TensorCochain>();
    return j.get<w1g::WedgeCochain>();
  }
};

template <>
struct adl_serializer<w1g::HomFunctional> {
  static void to_json(json& j, const w1g::HomFunctional& k);
  static w1g::HomFunctional from_json(const json& j);
};

template <>
struct adl_serializer<w1g::FiniteKMap> {
  static void to_json(json& j, const w1g::FiniteKMap& k);
  static w1g::FiniteKMap from_json(const json& j);
};

template <>
struct adl_serializer<w1g::KMap> {
  static void to_json(json& j, const w1g::KMap& k) {
    std::visit([&](const auto& kk) { j = kk; }, k);
  }
  static w1g::KMap from_json(const json& j) {
    if (j.contains("basis_values")) return j.get<w1g::HomFunctional>();
    return j.get<w1g::FiniteKMap>();
  }
};

template <class V>
struct adl_serializer<w1g::ResidualWitness<V>> {
  static void to_json(json& j, const w1g::ResidualWitness<V>& w) {
    j = {{"Z1", w.z1}, {"Z2", w.z2}, {"residual", w.residual}};
  }
  static w1g::ResidualWitness<V> from_json(const json& j) {
    return {j.at("Z1").get<w1g::Monomial>(), j.at("Z2").get<w1g::Monomial>(), j.at("residual").get<V>()};
  }
};

template <class V>
struct adl_serializer<w1g::ResidualScanReport<V>> {
  static void to_json(json& j, const w1g::ResidualScanReport<V>& r) {
    j = {{"genus", r.genus},
         {"flavor", V::flavor},
         {"domain_radius", r.domain_radius},
         {"pairs_checked", r.pairs_checked},
         {"cocycle", r.passed()},
         {"witnesses", r.witnesses}};
  }
  static w1g::ResidualScanReport<V> from_json(const json& j) {
    w1g::detail::check_flavor(j.at("flavor"), V::flavor);
    w1g::ResidualScanReport<V> r;
    r.genus = j.at("genus").get<int>();
    r.domain_radius = j.at("domain_radius").get<int>();
    r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w.get<w1g::ResidualWitness<V>>());
    return r;
  }
};

template <class V>
struct adl_serializer<w1g::CoboundaryResult<V>> {
  static void to_json(json& j, const w1g::CoboundaryResult<V>& r) {
    j = json::object();
    j["flavor"] = V::flavor;
    j["coboundary_radius"] = r.coboundary_radius;
    j["num_vars"] = r.num_vars;
    j["num_equations"] = r.num_equations;
    j["feasible"] = r.feasible;
    j["m"] = r.m ? json(*r.m) : json(nullptr);
    j["certificate"] = r.certificate;
    j["verified"] = r.verified;
    j["absolute_witness"] = r.absolute_witness ? json(*r.absolute_witness) : json(nullptr);
  }
  static w1g::CoboundaryResult<V> from_json(const json& j) {
    w1g::detail::check_flavor(j.at("flavor"), V::flavor);
    w1g::CoboundaryResult<V> r;
    r.coboundary_radius = j.at("coboundary_radius").get<int>();
    r.num_vars = j.at("num_vars").get<std::size_t>();
    r.num_equations = j.at("num_equations").get<std::size_t>();
    r.feasible = j.at("feasible").get<bool>();
    if (!j.at("m").is_null()) r.m = j.at("m").get<V>();
    r.certificate = j.at("certificate").get<std::vector<w1g::CertificateRow>>();
    r.verified = j.at("verified").get<bool>();
    if (!j.at("absolute_witness").is_null()) r.absolute_witness = j.at("absolute_witness").get<w1g::Monomial>();
    return r;
  }
};

template <class V>
struct adl_serializer<w1g::PropagationReport<V>> {
  static void to_json(json& j, const w1g::PropagationReport<V>& r) {
    j = json::object();
    j["genus"] = r.genus;
    j["flavor"] = V::flavor;
    j["domain_radius"] = r.domain_radius;
    j["value_radius"] = r.value_radius;
    j["component"] = r.component;
    j["truncation"] = r.truncation;
    j["num_vars"] = r.num_vars;
    j["num_equations"] = r.num_equations;
    j["rank"] = r.rank;
    j["kernel_dim"] = r.kernel_dim;
    j["consistent"] = r.consistent;
    j["certificate"] = r.certificate;
    j["certificate_verified"] = r.certificate_verified;
    j["interior_radius"] = r.interior_radius;
    j["interior_vars"] = r.interior_vars;
    j["interior_undetermined"] = r.interior_undetermined;
    j["interior_dim"] = r.interior_dim;
    j["unique_on_interior"] = r.unique_on_interior;
    j["interior_solution"] = r.interior_solution ? json(*r.interior_solution) : json(nullptr);
  }
  static w1g::PropagationReport<V> from_json(const json& j) {
    w1g::detail::check_flavor(j.at("flavor"), V::flavor);
    w1g::PropagationReport<V> r;
    r.genus = j.at("genus").get<int>();
    r.domain_radius = j.at("domain_radius").get<int>();
    r.value_radius = j.at("value_radius").get<int>();
    r.component = j.at("component").get<std::string>();
    r.truncation = j.at("truncation").get<w1g::Truncation>();
    r.num_vars = j.at("num_vars").get<std::size_t>();
    r.num_equations = j.at("num_equations").get<std::size_t>();
    r.rank = j.at("rank").get<std::size_t>();
    r.kernel_dim = j.at("kernel_dim").get<std::size_t>();
    r.consistent = j.at("consistent").get<bool>();
    r.certificate = j.at("certificate").get<std::vector<w1g::CertificateRow>>();
    r.certificate_verified = j.at("certificate_verified").get<bool>();
    r.interior_radius = j.at("interior_radius").get<int>();
    r.interior_vars = j.at("interior_vars").get<std::size_t>();
    r.interior_undetermined = j.at("interior_undetermined").get<std::size_t>();
    r.interior_dim = j.at("interior_dim").get<std::size_t>();
    r.unique_on_interior = j.at("unique_on_interior").get<bool>();
    if (!j.at("interior_solution").is_null())
      r.interior_solution = j.at("interior_solution").get<w1g::Cochain<V>>();
    return r;
  }
};

}  // namespace nlohmann
