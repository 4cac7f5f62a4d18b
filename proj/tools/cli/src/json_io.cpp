#include "wlink/cli/report.hpp"
#include "wlink/errors.hpp"

namespace wlink::cli {

using nlohmann::ordered_json;

namespace {

std::string s(std::int64_t v) { return std::to_string(v); }
std::string s(std::size_t v) { return std::to_string(v); }
std::string s(const BigInt& v) { return to_string(v); }
std::string s(const Rational& v) { return to_string(v); }

[[noreturn]] void bad(const std::string& detail) {
  throw Error(ErrorCode::InvalidInput, "report_from_json", detail);
}

const ordered_json& at(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::string str_at(const ordered_json& obj, const char* key) {
  const ordered_json& v = at(obj, key);
  if (!v.is_string()) bad(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

BigInt big_at(const ordered_json& obj, const char* key) { return parse_integer(str_at(obj, key)); }
Rational rat_at(const ordered_json& obj, const char* key) {
  return parse_rational(str_at(obj, key));
}
std::int64_t int_at(const ordered_json& obj, const char* key) {
  return to_int64(big_at(obj, key));
}
std::size_t index_at(const ordered_json& obj, const char* key) {
  return static_cast<std::size_t>(int_at(obj, key));
}
bool bool_at(const ordered_json& obj, const char* key) {
  const ordered_json& v = at(obj, key);
  if (!v.is_boolean()) bad(std::string("\"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::int64_t int_of(const ordered_json& v) {
  if (!v.is_string()) bad("expected an integer string");
  return to_int64(parse_integer(v.get<std::string>()));
}

ordered_json int_array(const std::vector<std::int64_t>& values) {
  ordered_json a = ordered_json::array();
  for (std::int64_t v : values) a.push_back(s(v));
  return a;
}

std::vector<std::int64_t> int_array_at(const ordered_json& obj, const char* key) {
  std::vector<std::int64_t> out;
  for (const ordered_json& v : at(obj, key)) out.push_back(int_of(v));
  return out;
}

ordered_json conditions_json(const ConditionsBlock& c) {
  ordered_json j;
  j["well_formed"] = c.well_formed;
  ordered_json off = ordered_json::array();
  for (std::size_t i : c.offending) off.push_back(s(i));
  j["offending"] = off;
  if (c.ii) j["ii"] = *c.ii;
  if (c.iii) j["iii"] = *c.iii;
  if (c.iv) j["iv"] = *c.iv;
  j["first_failure"] = c.first_failure;
  return j;
}

ConditionsBlock conditions_from(const ordered_json& j) {
  ConditionsBlock c;
  c.well_formed = bool_at(j, "well_formed");
  for (const ordered_json& v : at(j, "offending")) {
    c.offending.push_back(static_cast<std::size_t>(int_of(v)));
  }
  if (j.contains("ii")) c.ii = bool_at(j, "ii");
  if (j.contains("iii")) c.iii = bool_at(j, "iii");
  if (j.contains("iv")) c.iv = bool_at(j, "iv");
  c.first_failure = str_at(j, "first_failure");
  return c;
}

ordered_json divisor_json(const CyclicDivisor& div) {
  ordered_json j;
  ordered_json terms = ordered_json::array();
  for (const auto& [n, coeff] : div.terms()) terms.push_back({s(n), s(coeff)});
  j["terms"] = terms;
  j["constant"] = s(div.constant());
  j["text"] = div.str();
  return j;
}

CyclicDivisor divisor_from(const ordered_json& j) {
  CyclicDivisor div(rat_at(j, "constant"));
  for (const ordered_json& t : at(j, "terms")) {
    if (!t.is_array() || t.size() != 2) bad("divisor term must be [j, coeff]");
    div += CyclicDivisor::lambda(parse_integer(t[0].get<std::string>()),
                                 parse_rational(t[1].get<std::string>()));
  }
  return div;
}

ordered_json char_poly_json(const FactoredCharPoly& p) {
  ordered_json j;
  j["one_exponent"] = s(p.one_exponent);
  ordered_json factors = ordered_json::array();
  for (const auto& [n, a] : p.factors) factors.push_back({s(n), s(a)});
  j["factors"] = factors;
  j["degree"] = s(p.degree());
  j["text"] = p.str();
  return j;
}

FactoredCharPoly char_poly_from(const ordered_json& j) {
  FactoredCharPoly p;
  p.one_exponent = big_at(j, "one_exponent");
  for (const ordered_json& f : at(j, "factors")) {
    if (!f.is_array() || f.size() != 2) bad("factor must be [j, exponent]");
    p.factors[parse_integer(f[0].get<std::string>())] = parse_integer(f[1].get<std::string>());
  }
  return p;
}

const char* verdict_kind(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::Sphere: return "Sphere";
    case LinkVerdict::ConnectedSumS2xS3: return "ConnectedSumS2xS3";
    case LinkVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

LinkVerdict verdict_from(const std::string& kind) {
  if (kind == "Sphere") return LinkVerdict::Sphere;
  if (kind == "ConnectedSumS2xS3") return LinkVerdict::ConnectedSumS2xS3;
  if (kind == "Unknown") return LinkVerdict::Unknown;
  bad("unknown classification kind '" + kind + "'");
}

ordered_json classification_json(const LinkClassification& c) {
  ordered_json j;
  j["dimension"] = s(c.dimension);
  j["betti"] = s(c.betti);
  j["torsion_free_assumed"] = c.torsion_free_assumed;
  j["spin_assumed"] = c.spin_assumed;
  j["kind"] = verdict_kind(c.verdict);
  j["verdict"] = c.str();
  j["reason"] = c.reason;
  return j;
}

LinkClassification classification_from(const ordered_json& j) {
  LinkClassification c;
  c.dimension = int_at(j, "dimension");
  c.betti = big_at(j, "betti");
  c.torsion_free_assumed = bool_at(j, "torsion_free_assumed");
  c.spin_assumed = bool_at(j, "spin_assumed");
  c.verdict = verdict_from(str_at(j, "kind"));
  c.reason = str_at(j, "reason");
  return c;
}

ordered_json link_json(const LinkBlock& l) {
  ordered_json j;
  j["mu"] = s(l.mu);
  j["divisor"] = divisor_json(l.divisor);
  j["char_poly_factored"] = char_poly_json(l.char_poly);
  if (l.char_poly_dense) {
    ordered_json coeffs = ordered_json::array();
    for (const BigInt& c : l.char_poly_dense->coefficients) coeffs.push_back(s(c));
    j["char_poly_dense"] = coeffs;
  }
  j["betti"] = s(l.betti);
  j["connectivity"] = s(l.connectivity);
  j["classification"] = classification_json(l.classification);
  return j;
}

LinkBlock link_from(const ordered_json& j) {
  LinkBlock l;
  l.mu = big_at(j, "mu");
  l.divisor = divisor_from(at(j, "divisor"));
  l.char_poly = char_poly_from(at(j, "char_poly_factored"));
  if (j.contains("char_poly_dense")) {
    DensePoly p;
    for (const ordered_json& c : j.at("char_poly_dense")) {
      p.coefficients.push_back(parse_integer(c.get<std::string>()));
    }
    l.char_poly_dense = std::move(p);
  }
  l.betti = big_at(j, "betti");
  l.connectivity = int_at(j, "connectivity");
  l.classification = classification_from(at(j, "classification"));
  return l;
}

ordered_json point_json(const SingularPoint& p) {
  ordered_json j;
  j["kind"] = p.kind == SingularKind::Vertex ? "Vertex" : "EdgePoint";
  j["i"] = s(p.i);
  j["j"] = s(p.j);
  j["root_index"] = s(p.root_index);
  j["group_order"] = s(p.group_order);
  j["text"] = p.str();
  return j;
}

SingularPoint point_from(const ordered_json& j) {
  SingularPoint p;
  const std::string kind = str_at(j, "kind");
  if (kind == "Vertex") {
    p.kind = SingularKind::Vertex;
  } else if (kind == "EdgePoint") {
    p.kind = SingularKind::EdgePoint;
  } else {
    bad("unknown singular point kind '" + kind + "'");
  }
  p.i = index_at(j, "i");
  p.j = index_at(j, "j");
  p.root_index = index_at(j, "root_index");
  p.group_order = int_at(j, "group_order");
  return p;
}

ordered_json orbifold_json(const OrbifoldReport& o) {
  ordered_json j;
  ordered_json points = ordered_json::array();
  for (const SingularPoint& p : o.singular_points) points.push_back(point_json(p));
  j["singular_points"] = points;
  j["b2_surface"] = s(o.b2_surface);
  j["chi_top"] = s(o.chi_top);
  j["tau_top"] = s(o.tau_top);
  j["chi_orb"] = s(o.chi_orb);
  j["tau_orb"] = s(o.tau_orb);
  j["tau_res"] = s(o.tau_res());
  j["c1_sq"] = s(o.c1_sq);
  ordered_json c;
  c["euler_lower_bound"] = o.checks.euler_lower_bound;
  c["orbifold_hitchin_thorpe"] = o.checks.orbifold_hitchin_thorpe;
  c["strengthened_chain"] = o.checks.strengthened_chain;
  c["c1_nonnegative"] = o.checks.c1_nonnegative;
  c["orbifold_margin"] = s(o.checks.orbifold_margin);
  c["local_correction"] = s(o.checks.local_correction);
  c["all"] = o.checks.all();
  j["checks"] = c;
  return j;
}

OrbifoldReport orbifold_from(const ordered_json& j) {
  OrbifoldReport o;
  for (const ordered_json& p : at(j, "singular_points")) o.singular_points.push_back(point_from(p));
  o.b2_surface = big_at(j, "b2_surface");
  o.chi_top = big_at(j, "chi_top");
  o.tau_top = big_at(j, "tau_top");
  o.chi_orb = rat_at(j, "chi_orb");
  o.tau_orb = rat_at(j, "tau_orb");
  o.c1_sq = rat_at(j, "c1_sq");
  const ordered_json& c = at(j, "checks");
  o.checks.euler_lower_bound = bool_at(c, "euler_lower_bound");
  o.checks.orbifold_hitchin_thorpe = bool_at(c, "orbifold_hitchin_thorpe");
  o.checks.strengthened_chain = bool_at(c, "strengthened_chain");
  o.checks.c1_nonnegative = bool_at(c, "c1_nonnegative");
  o.checks.orbifold_margin = rat_at(c, "orbifold_margin");
  o.checks.local_correction = rat_at(c, "local_correction");
  return o;
}

ordered_json moduli_json(const ModuliReport& m) {
  ordered_json j;
  j["dim_graded"] = s(m.dim_graded);
  j["dim_aut"] = s(m.dim_aut);
  j["dim_aut_projective"] = s(m.dim_aut_projective);
  j["per_variable"] = int_array(m.per_variable);
  j["moduli_dim"] = s(m.moduli_dim);
  j["effective_caveat"] = m.effective_caveat;
  return j;
}

ModuliReport moduli_from(const ordered_json& j) {
  ModuliReport m;
  m.dim_graded = int_at(j, "dim_graded");
  m.dim_aut = int_at(j, "dim_aut");
  m.dim_aut_projective = int_at(j, "dim_aut_projective");
  m.per_variable = int_array_at(j, "per_variable");
  m.moduli_dim = int_at(j, "moduli_dim");
  m.effective_caveat = bool_at(j, "effective_caveat");
  return m;
}

ordered_json table_json(const IntersectionTable& t) {
  ordered_json j;
  j["o1_c_total"] = s(t.o1_c_total);
  j["o1_c1"] = s(t.o1_c1);
  j["o1_c2"] = s(t.o1_c2);
  j["c1_c2"] = s(t.c1_c2);
  j["c1_sq_self"] = s(t.c1_sq_self);
  j["c2_sq_self"] = s(t.c2_sq_self);
  return j;
}

IntersectionTable table_from(const ordered_json& j) {
  IntersectionTable t;
  t.o1_c_total = rat_at(j, "o1_c_total");
  t.o1_c1 = rat_at(j, "o1_c1");
  t.o1_c2 = rat_at(j, "o1_c2");
  t.c1_c2 = rat_at(j, "c1_c2");
  t.c1_sq_self = rat_at(j, "c1_sq_self");
  t.c2_sq_self = rat_at(j, "c2_sq_self");
  return t;
}

ordered_json klt_json(const KltCertificate& k) {
  ordered_json j;
  j["gamma"] = s(k.gamma);
  j["generic_mult_bound"] = s(k.generic_mult_bound);
  j["mult_cap"] = s(k.mult_cap);
  j["a_max"] = s(k.a_max);
  j["b_max"] = s(k.b_max);
  j["tangent_coeff_max"] = s(k.tangent_coeff_max);
  ordered_json vertices = ordered_json::array();
  for (const VertexCertificate& v : k.vertices) {
    ordered_json vj;
    vj["label"] = v.label;
    vj["group_order"] = s(v.group_order);
    vj["mult_cap"] = s(v.mult_cap);
    vj["table"] = table_json(v.table);
    vj["a_max"] = s(v.bounds.a_max);
    vj["b_max"] = s(v.bounds.b_max);
    vj["tangent_coeff_max"] = s(v.bounds.tangent_coeff_max);
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  j["product"] = s(k.product);
  j["margin"] = s(k.margin);
  j["verdict"] = k.verdict;
  return j;
}

KltCertificate klt_from(const ordered_json& j) {
  KltCertificate k;
  k.gamma = rat_at(j, "gamma");
  k.generic_mult_bound = rat_at(j, "generic_mult_bound");
  k.mult_cap = rat_at(j, "mult_cap");
  k.a_max = rat_at(j, "a_max");
  k.b_max = rat_at(j, "b_max");
  k.tangent_coeff_max = rat_at(j, "tangent_coeff_max");
  for (const ordered_json& vj : at(j, "vertices")) {
    VertexCertificate v;
    v.label = str_at(vj, "label");
    v.group_order = int_at(vj, "group_order");
    v.mult_cap = rat_at(vj, "mult_cap");
    v.table = table_from(at(vj, "table"));
    v.bounds.a_max = rat_at(vj, "a_max");
    v.bounds.b_max = rat_at(vj, "b_max");
    v.bounds.tangent_coeff_max = rat_at(vj, "tangent_coeff_max");
    k.vertices.push_back(std::move(v));
  }
  k.product = rat_at(j, "product");
  k.margin = rat_at(j, "margin");
  k.verdict = bool_at(j, "verdict");
  return k;
}

ordered_json splitting_json(const SplittingCheck& c) {
  ordered_json j;
  j["a"] = s(c.a);
  j["b"] = s(c.b);
  j["c"] = s(c.c);
  j["discriminant"] = s(c.discriminant);
  j["distinct_roots"] = c.distinct_roots;
  return j;
}

SplittingCheck splitting_from(const ordered_json& j) {
  SplittingCheck c;
  c.a = rat_at(j, "a");
  c.b = rat_at(j, "b");
  c.c = rat_at(j, "c");
  c.discriminant = rat_at(j, "discriminant");
  c.distinct_roots = bool_at(j, "distinct_roots");
  return c;
}

}  // namespace

ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["schema"] = "1";
  j["weights"] = int_array(r.weights);
  j["degree"] = s(r.degree);
  j["index"] = s(r.index);
  if (r.conditions) j["conditions"] = conditions_json(*r.conditions);
  if (r.link) j["link"] = link_json(*r.link);
  if (r.orbifold) j["orbifold"] = orbifold_json(*r.orbifold);
  if (r.moduli) j["moduli"] = moduli_json(*r.moduli);
  if (r.klt) j["klt"] = klt_json(*r.klt);
  if (r.splitting) j["splitting"] = splitting_json(*r.splitting);
  j["warnings"] = r.warnings;
  return j;
}

InvariantReport report_from_json(const ordered_json& j) {
  if (str_at(j, "schema") != "1") bad("unsupported schema");
  InvariantReport r;
  r.weights = int_array_at(j, "weights");
  r.degree = int_at(j, "degree");
  r.index = int_at(j, "index");
  if (j.contains("conditions")) r.conditions = conditions_from(j.at("conditions"));
  if (j.contains("link")) r.link = link_from(j.at("link"));
  if (j.contains("orbifold")) r.orbifold = orbifold_from(j.at("orbifold"));
  if (j.contains("moduli")) r.moduli = moduli_from(j.at("moduli"));
  if (j.contains("klt")) r.klt = klt_from(j.at("klt"));
  if (j.contains("splitting")) r.splitting = splitting_from(j.at("splitting"));
  for (const ordered_json& w : at(j, "warnings")) r.warnings.push_back(w.get<std::string>());
  return r;
}

std::string render_json(const InvariantReport& report) { return to_json(report).dump() + "\n"; }

ordered_json candidate_to_json(const Candidate& c) {
  ordered_json j;
  j["weights"] = int_array(c.weights);
  j["degree"] = s(c.degree);
  j["index"] = s(c.index);
  j["graded_dimension"] = s(c.graded_dimension);
  if (c.invariants) {
    j["mu"] = s(c.invariants->mu);
    j["betti"] = s(c.invariants->betti);
    j["c1_sq"] = s(c.invariants->c1_sq);
  } else {
    j["skipped"] = c.skip_reason;
  }
  return j;
}

}  // namespace wlink::cli
