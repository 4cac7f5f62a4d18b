#include "wlink/cli/input.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wlink/errors.hpp"

namespace wlink::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& detail) {
  throw Error(ErrorCode::InvalidInput, "parse_input", detail);
}

// Integers may be JSON numbers or decimal strings.
std::int64_t as_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) return to_int64(parse_integer(v.get<std::string>()));
  fail(where + " must be an integer");
}

std::int64_t required_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) fail(where + " is missing \"" + key + "\"");
  return as_int(obj.at(key), where + "." + key);
}

std::int64_t optional_int(const json& obj, const std::string& key, std::int64_t fallback,
                          const std::string& where) {
  return obj.contains(key) ? as_int(obj.at(key), where + "." + key) : fallback;
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  fail(where + " must be a \"p/q\" string");
}

std::vector<Term> parse_monomials(const json& arr) {
  if (!arr.is_array()) fail("monomials must be an array");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const json& m = arr[k];
    const std::string where = "monomials[" + std::to_string(k) + "]";
    if (!m.is_object() || !m.contains("exponents")) fail(where + " needs \"exponents\"");
    Term t;
    for (const json& e : m.at("exponents")) {
      t.monomial.exponents.push_back(static_cast<int>(as_int(e, where + ".exponents")));
    }
    t.coefficient = m.contains("coefficient") ? as_rational(m.at("coefficient"), where)
                                              : Rational(1);
    terms.push_back(std::move(t));
  }
  return terms;
}

KltInputs parse_klt(const json& k) {
  if (!k.is_object()) fail("klt must be an object");
  KltInputs in;
  if (!k.contains("gamma")) fail("klt is missing \"gamma\"");
  in.gamma = as_rational(k.at("gamma"), "klt.gamma");
  in.generic_pencil_degree = required_int(k, "generic_pencil_degree", "klt");
  in.hyperplane_degree = optional_int(k, "hyperplane_degree", 1, "klt");
  if (k.contains("component_curve")) {
    const json& c = k.at("component_curve");
    if (!c.is_array() || c.size() != 2) fail("klt.component_curve must be [i, j]");
    in.component_curve = {static_cast<std::size_t>(as_int(c[0], "klt.component_curve")),
                          static_cast<std::size_t>(as_int(c[1], "klt.component_curve"))};
  }
  if (!k.contains("vertices") || !k.at("vertices").is_array()) {
    fail("klt.vertices must be an array");
  }
  for (const json& v : k.at("vertices")) {
    VertexData vd;
    vd.label = v.value("label", std::string("P") + std::to_string(in.vertices.size() + 1));
    vd.group_order = required_int(v, "group_order", "klt.vertices");
    vd.pencil_degree = required_int(v, "pencil_degree", "klt.vertices");
    vd.meet_order = required_int(v, "meet_order", "klt.vertices");
    in.vertices.push_back(std::move(vd));
  }
  return in;
}

}  // namespace

std::optional<QhPolynomial> InputDescription::polynomial() const {
  if (!monomials) return std::nullopt;
  return QhPolynomial::make(weight_vector(), degree, *monomials);
}

InputDescription parse_input(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  if (doc.contains("schema") && doc.at("schema") != "1") {
    fail("unsupported schema " + doc.at("schema").dump());
  }

  InputDescription in;
  if (!doc.contains("weights") || !doc.at("weights").is_array()) {
    fail("\"weights\" must be an array of integers");
  }
  for (const json& w : doc.at("weights")) in.weights.push_back(as_int(w, "weights"));
  in.degree = required_int(doc, "degree", "input");
  if (doc.contains("monomials")) in.monomials = parse_monomials(doc.at("monomials"));
  if (doc.contains("assume_torsion_free")) {
    if (!doc.at("assume_torsion_free").is_boolean()) fail("assume_torsion_free must be boolean");
    in.assume_torsion_free = doc.at("assume_torsion_free").get<bool>();
  }
  in.surface_betti_offset = optional_int(doc, "surface_betti_offset", 1, "input");
  if (doc.contains("klt")) {
    KltInputs k = parse_klt(doc.at("klt"));
    k.weights = in.weights;
    k.degree = in.degree;
    k.index = [&] {
      std::int64_t total = 0;
      for (std::int64_t w : in.weights) total += w;
      return total - in.degree;
    }();
    in.klt = std::move(k);
  }
  return in;
}

InputDescription read_input_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw Error(ErrorCode::InvalidInput, "read_input_file", "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_input(buf.str());
}

}  // namespace wlink::cli
