#include "ncinv/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "ncinv/hochschild.hpp"
#include "ncinv/io.hpp"
#include "ncinv/selftest.hpp"
#include "ncinv/weyl.hpp"

namespace ncinv::cli {

namespace {

struct Options {
  std::string format = "text";
  std::size_t budget = 0;
  std::string field = "Q";

  std::string algebra;
  std::size_t N = 3;
  std::string invariant = "HH";
  std::size_t depth = 2;
  int top = 1;

  std::string type;
  unsigned rank = 0;
  std::vector<unsigned> remove, retain;

  unsigned m = 1, n = 2;
  bool strict = false;

  std::string coeffs;
  bool even = false, split = false;

  std::string quaternion, vs, vs_algebra;

  std::string cplus, cminus, degrees = "0..4", reduce;

  std::uint64_t seed = 1;
  bool corrupt = false;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::string read_source(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) usage("cannot read " + text.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  return parts;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) usage("not an integer: '" + std::string(s) + "'");
  return v;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) usage("degree range must look like lo..hi");
  const long long lo = parse_int(std::string_view(text).substr(0, dots));
  const long long hi = parse_int(std::string_view(text).substr(dots + 2));
  if (lo > hi) usage("empty degree range " + text);
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

Json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// Field from --field, overridden by (but required to agree with) whatever the
// documents declare.
FieldSpec resolve_field(const Options& o, bool field_given, const std::vector<const Json*>& docs) {
  const FieldSpec fallback = FieldSpec::parse(o.field);
  const FieldSpec none{FieldKind::PrimeField, 0};
  std::optional<FieldSpec> declared;
  for (const Json* d : docs) {
    FieldSpec s = document_field(*d, none);
    if (s == none) continue;
    if (declared && !(*declared == s)) throw Error(ErrorKind::FieldMismatch, declared->name() + " vs " + s.name());
    declared = s;
  }
  if (!declared) return fallback;
  if (field_given && !(*declared == fallback))
    throw Error(ErrorKind::FieldMismatch, "--field " + fallback.name() + " but the input is over " + declared->name());
  return *declared;
}

Json table_row(const char* key, const Json& k, std::size_t dim) { return Json{{key, k}, {"dim", dim}}; }

Json invariant_table(const InvariantTable& t) {
  Json rows = Json::array();
  for (const auto& [deg, dim] : t.dims) {
    if (t.invariant == Invariant::HP)
      rows.push_back(table_row("class", deg == 0 ? "even" : "odd", dim));
    else
      rows.push_back(table_row("degree", deg, dim));
  }
  return rows;
}

template <class F>
std::vector<typename F::Element> parse_scalar_list(const F& f, const std::string& text) {
  std::vector<typename F::Element> out;
  for (const auto& s : split_list(text)) out.push_back(f.parse(s));
  return out;
}

template <class F>
Json homology_cmd(const F& f, const Json& doc, const Options& o) {
  const Algebra<F> a = parse_algebra(f, doc);
  const Invariant inv = parse_invariant(o.invariant);
  Json r;
  r["command"] = "homology";
  r["field"] = field_json(spec_of(f));
  r["algebra_dim"] = a.dim();
  r["invariant"] = std::string(to_string(inv));
  r["N"] = o.N;
  Json rows = Json::array();
  switch (inv) {
    case Invariant::HH: {
      const auto h = homology_dims(hochschild_complex(a, o.N));
      for (std::size_t j = 0; j < h.dims.size(); ++j) rows.push_back(table_row("degree", j, h.dims[j]));
      r["top_degree"] = h.top_degree;
      r["top_bound"] = h.top_bound;
      r["top_status"] = "UNRELIABLE";
      break;
    }
    case Invariant::HC: {
      const auto hc = cyclic_homology_dims(a, o.N);
      for (std::size_t j = 0; j < hc.size(); ++j) rows.push_back(table_row("degree", j, hc[j]));
      break;
    }
    case Invariant::HP:
    case Invariant::HN: {
      const auto pn = periodic_and_negative_dims(a, o.N, o.depth, o.top);
      r["depths"] = {pn.depth, pn.depth + 1};
      // not separable: values are images of the deeper truncation
      if (pn.tower_image) r["method"] = "tower_image";
      if (inv == Invariant::HP) {
        rows.push_back(table_row("class", "even", pn.hp_even));
        rows.push_back(table_row("class", "odd", pn.hp_odd));
      } else {
        for (std::size_t i = 0; i < pn.hn.size(); ++i)
          rows.push_back(table_row("degree", pn.hn_lo + static_cast<int>(i), pn.hn[i]));
      }
      break;
    }
    case Invariant::MixedC: {
      const auto mc = mixed_complex(a, o.N);
      const auto h = homology_dims(mc.hochschild);
      for (std::size_t j = 0; j < h.dims.size(); ++j)
        rows.push_back(Json{{"degree", j}, {"chain_dim", mc.hochschild.dims[j]}, {"dim", h.dims[j]}});
      r["b_squared_zero"] = mc.b_squared_zero();
      r["B_squared_zero"] = mc.B_squared_zero();
      r["bB_plus_Bb_zero"] = mc.anticommute();
      break;
    }
  }
  r["table"] = std::move(rows);
  return r;
}

template <class F>
Json hh0_cmd(const F& f, const Json& doc) {
  const Algebra<F> a = parse_algebra(f, doc);
  const auto h = hh0(a);
  Json r;
  r["command"] = "hh0";
  r["field"] = field_json(spec_of(f));
  r["algebra_dim"] = a.dim();
  r["dim"] = h.dim;
  Json basis = Json::array();
  for (const auto& v : h.coset_basis) basis.push_back(scalars_json(f, v));
  r["coset_basis"] = std::move(basis);
  return r;
}

template <class F>
Json class_json(const Algebra<F>& a) {
  Json c;
  c["central_simple"] = is_central_simple(a);
  if (c["central_simple"].get<bool>()) {
    c["degree"] = degree(a);
    c["brauer"] = brauer_json(descriptor(a));
  }
  return c;
}

template <class F>
Json clifford_cmd(const F& f, const Options& o) {
  const auto q = QuadraticForm<F>::make(f, parse_scalar_list(f, o.coeffs));
  const Algebra<F> c = o.even ? even_clifford(q) : full_clifford(q);
  Json r;
  r["command"] = "clifford";
  r["field"] = field_json(spec_of(f));
  r["form"] = scalars_json(f, q.coeffs);
  r["even"] = o.even;
  r["dim"] = c.dim();
  r["center_dim"] = center(c).dim();
  const Json cls = class_json(c);
  for (auto& [k, v] : cls.items()) r[k] = v;
  if (o.split) {
    auto [plus, minus] = split_components(c);
    Json comps = Json::array();
    for (const auto* part : {&plus, &minus}) {
      Json entry = class_json(*part);
      entry["algebra"] = algebra_json(*part);
      comps.push_back(std::move(entry));
    }
    r["components"] = std::move(comps);
  } else {
    r["algebra"] = algebra_json(c);
  }
  return r;
}

template <class F>
Algebra<F> brauer_operand(const F& f, const std::string& symbol, const Json* doc) {
  if (!symbol.empty()) {
    auto ab = parse_scalar_list(f, symbol);
    if (ab.size() != 2) usage("a quaternion symbol is two scalars a,b");
    return quaternion(ab[0], ab[1], f);
  }
  return parse_algebra(f, *doc);
}

template <class F>
Json brauer_cmd(const F& f, const Options& o, const Json* lhs_doc, const Json* rhs_doc) {
  const Algebra<F> a = brauer_operand(f, o.quaternion, lhs_doc);
  const BrauerDescriptor d = descriptor(a);
  Json r;
  r["command"] = "brauer";
  r["field"] = field_json(spec_of(f));
  r["degree"] = degree(a);
  Json dj = brauer_json(d);
  r["class"] = dj["kind"];
  if (dj.contains("ramified")) r["ramified"] = dj["ramified"];
  r["split"] = decision_json(d.is_split());
  if (!o.vs.empty() || rhs_doc) {
    const Algebra<F> b = brauer_operand(f, o.vs, rhs_doc);
    r["vs"] = brauer_json(descriptor(b));
    r["equal"] = decision_json(brauer_equal(a, b));
  }
  return r;
}

Json weyl_cmd(const Options& o) {
  const RootDatum rd = RootDatum::make(o.type, o.rank);
  Json r;
  r["command"] = "weyl";
  r["type"] = rd.name();
  r["order"] = big(weyl_order(rd));
  if (o.remove.empty() && o.retain.empty()) return r;
  const ParabolicSpec p = o.retain.empty() ? ParabolicSpec::remove(rd, o.remove) : ParabolicSpec::retain(rd, o.retain);
  r["retained"] = p.retained;
  r["levi"] = parabolic_components(p);
  r["parabolic_order"] = big(parabolic_order(p));
  r["index"] = big(weyl_index(p));
  if (rd.family == Family::A && p.retained.size() + 1 == rd.rank) {
    unsigned m = 1;
    for (unsigned node : p.retained)
      if (node == m) ++m;
    Json rows = Json::array();
    for (const auto& s : grassmann_sequences(m, rd.rank + 1)) rows.push_back(Json{{"alpha", s.alpha}, {"d", s.d}});
    r["grassmann"] = Json{{"m", m}, {"n", rd.rank + 1}};
    r["table"] = std::move(rows);
  }
  return r;
}

Json grassmann_cmd(const Options& o) {
  if (o.m < 1 || o.m >= o.n) throw Error(ErrorKind::InvalidArgument, "need 1 <= m <= n-1");
  const auto seqs = grassmann_sequences(o.m, o.n, o.strict);
  Json r;
  r["command"] = "grassmann";
  r["m"] = o.m;
  r["n"] = o.n;
  r["strict"] = o.strict;
  r["count"] = seqs.size();
  r["binomial"] = big(binomial(o.n, o.m));
  Json rows = Json::array();
  for (const auto& s : seqs) rows.push_back(Json{{"alpha", s.alpha}, {"d", s.d}});
  r["table"] = std::move(rows);
  return r;
}

template <class F>
Json motive_cmd(const F& f, const std::string& kind, const Options& o, const Json* a_doc, const Json* plus_doc,
                const Json* minus_doc) {
  auto payload = [&](const Json* doc, const char* flag) {
    if (!doc) usage(std::string("motive ") + kind + " needs " + flag);
    return parse_payload(f, *doc);
  };
  MotiveExpression<F> expr{f, {}, {}};
  if (kind == "severi-brauer")
    expr = severi_brauer_motive(f, o.N, payload(a_doc, "--algebra"));
  else if (kind == "grassmann")
    expr = grassmann_motive(f, o.m, o.n, payload(a_doc, "--algebra"));
  else if (kind == "quadric")
    expr = quadric_motive(QuadraticForm<F>::make(f, parse_scalar_list(f, o.coeffs)));
  else if (kind == "form-quadric")
    expr = form_quadric_motive(f, o.N, payload(a_doc, "--algebra"), payload(plus_doc, "--cplus"),
                               payload(minus_doc, "--cminus"));
  else
    expr = toric_motive(f, payload(a_doc, "--algebra"));

  Json r;
  r["command"] = "motive";
  r["kind"] = kind;
  const Json m = motive_json(expr);
  for (auto& [k, v] : m.items()) r[k] = v;
  r["trivial"] = decision_json(is_trivial_motive(expr));
  if (!o.reduce.empty()) {
    std::set<std::uint64_t> primes;
    for (const auto& s : split_list(o.reduce)) {
      const long long p = parse_int(s);
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) usage("--reduce takes primes, got " + s);
      primes.insert(static_cast<std::uint64_t>(p));
    }
    const auto red = reduce_coefficients(expr, primes);
    Json labels = Json::array();
    for (const auto& s : red.expr.summands) labels.push_back(s.label);
    r["reduction"] = Json{{"inverted", primes},
                          {"reduced", red.reduced()},
                          {"blocking_primes", red.blocking_primes},
                          {"summands", std::move(labels)},
                          {"trivial", decision_json(is_trivial_motive(red.expr))}};
  }
  const auto [lo, hi] = parse_range(o.degrees);
  const Invariant inv = parse_invariant(o.invariant);
  r["invariant"] = std::string(to_string(inv));
  r["table"] = invariant_table(evaluate(expr, inv, lo, hi));
  return r;
}

std::string text_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_array()) {
    for (const auto& x : v) s += (s.empty() ? "" : " ") + text_value(x);
  } else {
    s = text_value(v);
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(std::ostream& out, const std::string& format, const Json& r) {
  if (format == "json") {
    Json doc;
    doc["schema"] = "ncinv/1";
    for (auto& [k, v] : r.items()) doc[k] = v;
    out << doc.dump(2) << "\n";
    return;
  }
  const Json* table = r.contains("table") ? &r.at("table") : nullptr;
  if (format == "csv") {
    if (table && !table->empty()) {
      std::string header;
      for (auto& [k, v] : table->front().items()) header += (header.empty() ? "" : ",") + k;
      out << header << "\n";
      for (const auto& row : *table) {
        std::string line;
        bool first = true;
        for (auto& [k, v] : row.items()) {
          line += (first ? "" : ",") + csv_cell(v);
          first = false;
        }
        out << line << "\n";
      }
    } else {
      out << "key,value\n";
      for (auto& [k, v] : r.items())
        if (k != "table") out << k << "," << csv_cell(v) << "\n";
    }
    return;
  }
  for (auto& [k, v] : r.items()) {
    if (k == "table") continue;
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << k << ":\n";
      for (const auto& item : v) {
        std::string line;
        for (auto& [ik, iv] : item.items()) line += (line.empty() ? "" : ", ") + ik + "=" + text_value(iv);
        out << "  " << line << "\n";
      }
    } else {
      out << k << ": " << text_value(v) << "\n";
    }
  }
  if (table) {
    for (const auto& row : *table) {
      std::string line;
      for (auto& [k, v] : row.items()) line += (line.empty() ? "" : "  ") + k + " " + text_value(v);
      out << "  " << line << "\n";
    }
  }
}

int selftest_cmd(std::ostream& out, const Options& o) {
  const auto results = selftest({o.seed, o.corrupt});
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  const bool ok = passed == results.size();
  if (o.format == "json") {
    Json props = Json::array();
    for (const auto& r : results) props.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    Json doc{{"schema", "ncinv/1"}, {"command", "selftest"}, {"seed", o.seed}, {"passed", passed},
             {"total", results.size()}, {"properties", std::move(props)}};
    out << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "status,property,detail\n";
    for (const auto& r : results)
      out << (r.passed ? "PASS" : "FAIL") << "," << csv_cell(r.name) << "," << csv_cell(r.detail) << "\n";
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    out << passed << "/" << results.size() << " properties passed\n";
  }
  return ok ? 0 : 1;
}

struct BudgetGuard {
  ~BudgetGuard() { set_size_budget(0); }
};

const char* kHomologyHelp =
    "Brute-force homology of an algebra given as JSON (a literal, or @file).\n"
    "HH uses C_j = A^(j+1) for j <= N and reports H_0..H_{N-1}; the top term only\n"
    "gives a bound. HC reports degrees 0..N-2. HP/HN are computed at two truncation\n"
    "depths and must agree; for non-separable algebras each value is the image of\n"
    "the truncation two columns deeper, since a single truncation only sees HC.\n"
    "Sizes grow like dim(A)^(N+1): M_2 is fine to N ~ 7, M_3 to N = 4\n"
    "under the default budget of 200000 (see --budget, NCINV_SIZE_BUDGET).";

const char* kWeylHelp =
    "Weyl group orders and parabolic indices. Nodes use Bourbaki numbering:\n"
    "  A_r 1-2-...-r;  B_r/C_r 1-...-(r-1)=r;  D_r branch at r-2 with ends r-1, r;\n"
    "  E_r 1-3-4-...-r with 2 on 4;  F_4 1-2=>3-4;  G_2 1=>2.\n"
    "For type A with one node removed the Grassmann sequences are listed.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"ncinv: exact Hochschild/cyclic invariants and motive decompositions", "ncinv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", o.budget, "Largest tensor/total complex dimension allowed");
  auto* field_opt = app.add_option("--field", o.field, "Base field: Q or F<p>");

  const std::vector<std::string> invariants{"HH", "HC", "HP", "HN", "MixedC"};

  auto* homology = app.add_subcommand("homology", kHomologyHelp);
  homology->add_option("--algebra", o.algebra, "Algebra JSON")->required();
  homology->add_option("--N", o.N, "Number of chain degrees");
  homology->add_option("--invariant", o.invariant)->check(CLI::IsMember(invariants));
  homology->add_option("--depth", o.depth, "HP/HN truncation depth (also run at depth+1)");
  homology->add_option("--top", o.top, "Highest HN degree reported")->check(CLI::NonNegativeNumber);

  auto* hh0_sub = app.add_subcommand("hh0", "Dimension of A/[A,A]");
  hh0_sub->add_option("--algebra", o.algebra, "Algebra JSON")->required();

  auto* weyl = app.add_subcommand("weyl", kWeylHelp);
  weyl->add_option("--type", o.type, "A..G, or E6/E7/E8/F4/G2")->required();
  weyl->add_option("--rank", o.rank);
  auto* rem = weyl->add_option("--remove", o.remove, "Simple roots removed from the Levi")->delimiter(',');
  weyl->add_option("--retain", o.retain, "Simple roots kept in the Levi")->delimiter(',')->excludes(rem);

  auto* grass = app.add_subcommand("grassmann", "Sequences alpha indexing Gr(m, n)");
  grass->add_option("--m", o.m)->required();
  grass->add_option("--n", o.n)->required();
  grass->add_flag("--strict", o.strict, "Use the strict upper bound (C(n-1, m) sequences)");

  auto* cliff = app.add_subcommand("clifford", "Clifford algebra of a diagonal form");
  cliff->add_option("--coeffs", o.coeffs, "Diagonal entries a_1,...,a_n")->required();
  cliff->add_flag("--even", o.even, "Even subalgebra C_0");
  cliff->add_flag("--split", o.split, "Split along a nontrivial central idempotent");

  auto* brauer = app.add_subcommand("brauer", "Brauer class of a quaternion or central simple algebra");
  auto* quat = brauer->add_option("--quaternion", o.quaternion, "Symbol a,b");
  brauer->add_option("--algebra", o.algebra, "Algebra JSON")->excludes(quat);
  auto* vs = brauer->add_option("--vs", o.vs, "Compare with the symbol c,d");
  brauer->add_option("--vs-algebra", o.vs_algebra, "Compare with an algebra")->excludes(vs);

  auto* motive = app.add_subcommand("motive", "Direct-sum motive decompositions and their invariants");
  motive->require_subcommand(1);
  motive->fallthrough();
  std::vector<CLI::App*> kinds;
  auto add_kind = [&](const char* name, const char* help) {
    auto* s = motive->add_subcommand(name, help);
    s->add_option("--invariant", o.invariant)->check(CLI::IsMember(invariants));
    s->add_option("--degrees", o.degrees, "Degree range lo..hi");
    s->add_option("--reduce", o.reduce, "Primes inverted in the coefficients, e.g. 2,3");
    kinds.push_back(s);
    return s;
  };
  auto* sb = add_kind("severi-brauer", "k + A + ... + A^(n-1)");
  sb->add_option("--n", o.N)->required();
  sb->add_option("--algebra", o.algebra, "Algebra JSON or symbolic payload")->required();
  auto* gr = add_kind("grassmann", "One power of A per Grassmann sequence");
  gr->add_option("--m", o.m)->required();
  gr->add_option("--n", o.n)->required();
  gr->add_option("--algebra", o.algebra, "Algebra JSON or symbolic payload")->required();
  auto* qd = add_kind("quadric", "Quadric of a diagonal form");
  qd->add_option("--coeffs", o.coeffs, "Diagonal entries")->required();
  auto* fq = add_kind("form-quadric", "Twisted form of an even-dimensional quadric");
  fq->add_option("--n", o.N)->required();
  fq->add_option("--algebra", o.algebra)->required();
  fq->add_option("--cplus", o.cplus)->required();
  fq->add_option("--cminus", o.cminus)->required();
  auto* tor = add_kind("toric", "Summand U(A) of a toric variety");
  tor->add_option("--algebra", o.algebra)->required();

  auto* st = app.add_subcommand("selftest", "Run the property suite");
  st->add_option("--seed", o.seed, "Seed for the randomly drawn corpus members");
  st->add_flag("--corrupt-structure-constants", o.corrupt)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  BudgetGuard guard;
  try {
    if (o.budget) set_size_budget(o.budget);
    const bool field_given = field_opt->count() > 0;
    auto load = [](const std::string& text) { return parse_json_text(read_source(text)); };

    if (st->parsed()) return selftest_cmd(out, o);
    Json result;
    if (weyl->parsed()) {
      result = weyl_cmd(o);
    } else if (grass->parsed()) {
      result = grassmann_cmd(o);
    } else if (homology->parsed() || hh0_sub->parsed()) {
      const Json doc = load(o.algebra);
      const FieldSpec spec = resolve_field(o, field_given, {&doc});
      result = visit_field(spec, [&](const auto& f) { return homology->parsed() ? homology_cmd(f, doc, o) : hh0_cmd(f, doc); });
    } else if (cliff->parsed()) {
      result = visit_field(FieldSpec::parse(o.field), [&](const auto& f) { return clifford_cmd(f, o); });
    } else if (brauer->parsed()) {
      if (o.quaternion.empty() && o.algebra.empty()) usage("brauer needs --quaternion or --algebra");
      std::optional<Json> lhs, rhs;
      std::vector<const Json*> docs;
      if (!o.algebra.empty()) docs.push_back(&lhs.emplace(load(o.algebra)));
      if (!o.vs_algebra.empty()) docs.push_back(&rhs.emplace(load(o.vs_algebra)));
      const FieldSpec spec = resolve_field(o, field_given, docs);
      result = visit_field(spec, [&](const auto& f) {
        return brauer_cmd(f, o, lhs ? &*lhs : nullptr, rhs ? &*rhs : nullptr);
      });
    } else {
      std::string kind;
      for (auto* k : kinds)
        if (k->parsed()) kind = k->get_name();
      std::optional<Json> a, cp, cm;
      std::vector<const Json*> docs;
      if (!o.algebra.empty()) docs.push_back(&a.emplace(load(o.algebra)));
      if (!o.cplus.empty()) docs.push_back(&cp.emplace(load(o.cplus)));
      if (!o.cminus.empty()) docs.push_back(&cm.emplace(load(o.cminus)));
      const FieldSpec spec = resolve_field(o, field_given, docs);
      result = visit_field(spec, [&](const auto& f) {
        return motive_cmd(f, kind, o, a ? &*a : nullptr, cp ? &*cp : nullptr, cm ? &*cm : nullptr);
      });
    }
    emit(out, o.format, result);
    return 0;
  } catch (const Error& e) {
    err << "ncinv: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::bad_alloc&) {
    err << "ncinv: out of memory (lower --N or the input size)\n";
    return 1;
  }
}

}  // namespace ncinv::cli
