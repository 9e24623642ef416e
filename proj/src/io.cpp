#include "ncinv/io.hpp"

namespace ncinv {

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) schema_error(std::string("missing key '") + key + "'");
  return doc.at(key);
}

std::size_t positive_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) schema_error(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

FieldSpec parse_field_json(const Json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (!j.is_object()) schema_error("field must be a string or an object");
  const std::string kind = member(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    const Json& p = member(j, "p");
    if (!p.is_number_unsigned()) schema_error("field.p must be a positive integer");
    return FieldSpec::parse("F" + std::to_string(p.get<std::uint64_t>()));
  }
  schema_error("field.kind must be \"Q\" or \"Fp\"");
}

Json field_json(const FieldSpec& spec) {
  if (spec.kind == FieldKind::Rationals) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", spec.p}};
}

FieldSpec document_field(const Json& doc, const FieldSpec& fallback) {
  std::optional<FieldSpec> found;
  auto visit = [&](auto&& self, const Json& d) -> void {
    if (!d.is_object()) return;
    if (d.contains("field")) {
      FieldSpec s = parse_field_json(d.at("field"));
      if (found && !(*found == s)) throw Error(ErrorKind::FieldMismatch, found->name() + " vs " + s.name());
      found = s;
    }
    if (d.contains("of")) {
      const Json& of = d.at("of");
      if (of.is_array())
        for (const auto& c : of) self(self, c);
      else
        self(self, of);
    }
  };
  visit(visit, doc);
  return found.value_or(fallback);
}

template <class F>
typename F::Element parse_scalar(const F& field, const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return field.from_integer(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return field.from_int(j.get<long long>());
  }
  if (j.is_string()) return field.parse(j.get<std::string>());
  schema_error("scalar must be an integer or a string \"num/den\", got " + j.dump());
}

template <class F>
Json scalars_json(const F& field, const Vector<F>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(field.to_string(x));
  return out;
}

namespace {

template <class F>
std::vector<Algebra<F>> parse_children(const F& field, const Json& doc) {
  const Json& of = member(doc, "of");
  if (!of.is_array() || of.empty()) schema_error("'of' must be a nonempty array");
  std::vector<Algebra<F>> out;
  for (const auto& c : of) out.push_back(parse_algebra(field, c));
  return out;
}

template <class F>
Algebra<F> parse_constructor(const F& field, const Json& doc, const std::string& name) {
  if (name == "mat") return mat_algebra(positive_size(member(doc, "n"), "n"), field);
  if (name == "quaternion")
    return quaternion(parse_scalar(field, member(doc, "a")), parse_scalar(field, member(doc, "b")), field);
  if (name == "dual_numbers") return dual_numbers(field);
  if (name == "field") return field_algebra(field);
  if (name == "product" || name == "tensor") {
    auto parts = parse_children(field, doc);
    Algebra<F> acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = name == "product" ? product(acc, parts[i]) : tensor(acc, parts[i]);
    return acc;
  }
  if (name == "opposite") return opposite(parse_algebra(field, member(doc, "of")));
  if (name == "clifford") {
    const Json& coeffs = member(doc, "coeffs");
    if (!coeffs.is_array()) schema_error("'coeffs' must be an array");
    std::vector<typename F::Element> c;
    for (const auto& x : coeffs) c.push_back(parse_scalar(field, x));
    auto q = QuadraticForm<F>::make(field, std::move(c));
    bool even = doc.contains("even") && doc.at("even").is_boolean() && doc.at("even").get<bool>();
    return even ? even_clifford(q) : full_clifford(q);
  }
  schema_error("unknown constructor '" + name + "'");
}

}  // namespace

template <class F>
Algebra<F> parse_algebra(const F& field, const Json& doc) {
  if (!doc.is_object()) schema_error("algebra must be a JSON object");
  if (doc.contains("field")) {
    FieldSpec declared = parse_field_json(doc.at("field"));
    if (!(declared == spec_of(field)))
      throw Error(ErrorKind::FieldMismatch, "document is over " + declared.name() + ", expected " + field.name());
  }
  if (doc.contains("construct")) {
    if (!doc.at("construct").is_string()) schema_error("'construct' must be a string");
    return parse_constructor(field, doc, doc.at("construct").get<std::string>());
  }
  const std::size_t d = positive_size(member(doc, "dim"), "dim");
  const Json& unit = member(doc, "unit");
  const Json& mul = member(doc, "mul");
  if (!unit.is_array() || unit.size() != d) schema_error("'unit' must list dim scalars");
  if (!mul.is_array() || mul.size() != d) schema_error("'mul' must be a dim x dim x dim array");
  Vector<F> u;
  for (const auto& x : unit) u.push_back(parse_scalar(field, x));
  std::vector<typename F::Element> c;
  c.reserve(d * d * d);
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != d) schema_error("'mul' must be a dim x dim x dim array");
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != d) schema_error("'mul' must be a dim x dim x dim array");
      for (const auto& x : cell) c.push_back(parse_scalar(field, x));
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& l = doc.at("labels");
    if (!l.is_array() || l.size() != d) schema_error("'labels' must list dim strings");
    for (const auto& x : l) {
      if (!x.is_string()) schema_error("labels must be strings");
      labels.push_back(x.get<std::string>());
    }
  }
  return Algebra<F>(field, d, std::move(c), std::move(u), std::move(labels));
}

template <class F>
Json algebra_json(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  Json mul = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < d; ++k) cell.push_back(f.to_string(a.structure_constant(i, j, k)));
      row.push_back(std::move(cell));
    }
    mul.push_back(std::move(row));
  }
  Json out;
  out["field"] = field_json(spec_of(f));
  out["dim"] = d;
  out["labels"] = a.labels();
  out["unit"] = scalars_json(f, a.unit());
  out["mul"] = std::move(mul);
  return out;
}

BrauerDescriptor parse_brauer_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "unknown") return BrauerDescriptor::unknown();
    if (s == "trivial") return BrauerDescriptor::trivial();
    schema_error("brauer must be \"unknown\", \"trivial\" or an object");
  }
  // the output form of brauer_json
  if (j.is_object() && j.contains("kind") && j.at("kind").is_string()) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unknown") return BrauerDescriptor::unknown();
    if (kind == "finite_field") return BrauerDescriptor::finite_field();
    if (kind == "trivial" || kind == "quaternion")
      return parse_brauer_json(Json{{"ramified", j.value("ramified", Json::array())}});
    schema_error("unknown brauer kind '" + kind + "'");
  }
  if (j.is_object() && j.contains("quaternion")) {
    const Json& ab = j.at("quaternion");
    if (!ab.is_array() || ab.size() != 2 || !ab[0].is_number_integer() || !ab[1].is_number_integer())
      schema_error("brauer.quaternion must be two integers");
    return quaternion_descriptor(mpz_class(std::to_string(ab[0].get<long long>())),
                                 mpz_class(std::to_string(ab[1].get<long long>())));
  }
  if (j.is_object() && j.contains("ramified")) {
    PlaceSet places;
    const Json& r = j.at("ramified");
    if (!r.is_array()) schema_error("brauer.ramified must be an array");
    for (const auto& p : r) {
      if (p.is_string() && p.get<std::string>() == "inf")
        places.insert(kRealPlace);
      else if (p.is_number_unsigned())
        places.insert(p.get<std::uint64_t>());
      else
        schema_error("places are primes or \"inf\"");
    }
    return BrauerDescriptor::from_ramified(std::move(places));
  }
  schema_error("unrecognised brauer descriptor " + j.dump());
}

Json decision_json(Decision d) {
  if (d == Decision::Unknown) return "unknown";
  return d == Decision::Yes;
}

Json brauer_json(const BrauerDescriptor& d) {
  Json out;
  switch (d.kind) {
    case BrauerKind::Trivial: out["kind"] = "trivial"; break;
    case BrauerKind::QuaternionOverQ: out["kind"] = "quaternion"; break;
    case BrauerKind::FiniteField: out["kind"] = "finite_field"; break;
    case BrauerKind::Unknown: out["kind"] = "unknown"; break;
  }
  if (d.kind == BrauerKind::Trivial || d.kind == BrauerKind::QuaternionOverQ) {
    Json places = Json::array();
    for (Place p : d.ramified) {
      if (p == kRealPlace)
        places.push_back("inf");
      else
        places.push_back(p);
    }
    out["ramified"] = std::move(places);
  }
  if (d.symbol) out["symbol"] = {d.symbol->first.get_str(), d.symbol->second.get_str()};
  out["split"] = decision_json(d.is_split());
  return out;
}

template <class F>
Payload<F> parse_payload(const F& field, const Json& doc) {
  if (doc.is_object() && doc.contains("symbolic")) {
    SymbolicAlgebra s;
    if (!doc.at("symbolic").is_string()) schema_error("'symbolic' must be a name");
    s.name = doc.at("symbolic").get<std::string>();
    s.degree = positive_size(member(doc, "degree"), "degree");
    s.hh0_dim = doc.contains("hh0_dim") ? positive_size(doc.at("hh0_dim"), "hh0_dim") : 1;
    s.brauer = doc.contains("brauer") ? parse_brauer_json(doc.at("brauer")) : BrauerDescriptor::unknown();
    if (s.brauer.kind == BrauerKind::QuaternionOverQ && field.characteristic() != 0)
      throw Error(ErrorKind::FieldMismatch, "ramified places only make sense over Q");
    return s;
  }
  return parse_algebra(field, doc);
}

template <class F>
Json summand_json(const Summand<F>& s) {
  Json out;
  out["label"] = s.label;
  out["payload"] = s.is_explicit() ? "explicit" : "symbolic";
  if (s.is_explicit()) out["dim"] = std::get<0>(s.payload).dim();
  out["central_simple"] = s.central_simple;
  out["degree"] = s.degree ? Json(*s.degree) : Json(nullptr);
  out["reduced_degree"] = s.reduced_degree ? Json(*s.reduced_degree) : Json(nullptr);
  out["hh0_dim"] = s.hh0_dim;
  out["brauer"] = brauer_json(s.brauer);
  return out;
}

template <class F>
Json motive_json(const MotiveExpression<F>& e) {
  Json out;
  out["field"] = field_json(spec_of(e.field));
  out["count"] = e.summands.size();
  Json list = Json::array();
  for (const auto& s : e.summands) list.push_back(summand_json(s));
  out["summands"] = std::move(list);
  out["notes"] = e.notes;
  return out;
}

#define NCINV_INSTANTIATE(F)                                                  \
  template typename F::Element parse_scalar(const F&, const Json&);           \
  template Algebra<F> parse_algebra(const F&, const Json&);                   \
  template Json algebra_json(const Algebra<F>&);                              \
  template Json scalars_json(const F&, const Vector<F>&);                     \
  template Payload<F> parse_payload(const F&, const Json&);                   \
  template Json summand_json(const Summand<F>&);                              \
  template Json motive_json(const MotiveExpression<F>&);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv
