#include <algorithm>
#include <sstream>

#include "wlink/cli/report.hpp"

namespace wlink::cli {

std::string mixed_number(const Rational& value) {
  if (is_integral(value)) return to_string(value);
  const BigInt whole = floor(value);
  if (whole == 0 || abs(value) < 1) return to_string(value);
  const Rational frac = value - Rational(whole);
  return to_string(whole) + " + " + to_string(frac);
}

namespace {

bool is_power_of_two(const BigInt& m) { return m > 0 && mpz_popcount(m.get_mpz_t()) == 1; }

std::string exponent_suffix(const BigInt& e) { return e == 1 ? "" : "^" + to_string(e); }

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_char_poly(const FactoredCharPoly& p) {
  const std::map<BigInt, BigInt> cyc = p.cyclotomic_exponents();
  bool binomial = !cyc.empty();
  for (const auto& [m, e] : cyc) {
    if (e != 0 && !is_power_of_two(m)) binomial = false;
  }
  if (!binomial) return p.str();

  std::string out;
  for (const auto& [m, e] : cyc) {
    if (e == 0) continue;
    if (m == 1) {
      out += "(t-1)";
    } else if (m == 2) {
      out += "(t+1)";
    } else {
      const BigInt half = m / 2;
      out += "(t^" + to_string(half) + "+1)";
    }
    out += exponent_suffix(e);
  }
  return out.empty() ? "1" : out;
}

std::string render_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "P(" << join_ints(r.weights) << "), degree " << r.degree << ", index " << r.index
     << "\n";

  if (r.conditions) {
    const ConditionsBlock& c = *r.conditions;
    os << "\nconditions\n";
    os << "  well-formed        " << yes_no(c.well_formed) << "\n";
    if (c.ii) {
      os << "  II / III / IV      " << yes_no(*c.ii) << " / " << yes_no(*c.iii) << " / "
         << yes_no(*c.iv) << "\n";
    }
  }

  if (r.link) {
    const LinkBlock& l = *r.link;
    os << "\nlink\n";
    os << "  mu                 " << to_string(l.mu) << "\n";
    os << "  div Delta          " << l.divisor.str() << "\n";
    os << "  Delta(t)           " << render_char_poly(l.char_poly) << "\n";
    if (l.char_poly_dense) {
      os << "  Delta dense        ";
      const auto& coeffs = l.char_poly_dense->coefficients;
      bool first = true;
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        const BigInt& c = coeffs[k];
        if (c == 0) continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (mag != 1 || k == 0) os << to_string(mag);
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
      }
      os << "\n";
    }
    os << "  betti              " << to_string(l.betti) << "\n";
    os << "  connectivity       " << l.connectivity << "\n";
    os << "  classification     " << l.classification.str();
    if (!l.classification.reason.empty()) os << " (" << l.classification.reason << ")";
    os << "\n";
  }

  if (r.orbifold) {
    const OrbifoldReport& o = *r.orbifold;
    os << "\norbifold\n";
    os << "  singular points   ";
    if (o.singular_points.empty()) os << " none";
    for (std::size_t k = 0; k < o.singular_points.size(); ++k) {
      os << (k ? ", " : " ") << o.singular_points[k].str();
    }
    os << "\n";
    os << "  b2                 " << to_string(o.b2_surface) << "\n";
    os << "  chi_top / tau_top  " << to_string(o.chi_top) << " / " << to_string(o.tau_top)
       << "\n";
    os << "  chi_orb            " << mixed_number(o.chi_orb) << "\n";
    os << "  tau_orb            " << mixed_number(o.tau_orb) << "\n";
    os << "  c1^2               " << mixed_number(o.c1_sq) << "\n";
    os << "  checks             euler " << yes_no(o.checks.euler_lower_bound)
       << ", hitchin-thorpe " << yes_no(o.checks.orbifold_hitchin_thorpe) << ", chain "
       << yes_no(o.checks.strengthened_chain) << ", c1^2 >= 0 "
       << yes_no(o.checks.c1_nonnegative) << "\n";
    os << "  margin             " << mixed_number(o.checks.orbifold_margin) << "\n";
  }

  if (r.moduli) {
    const ModuliReport& m = *r.moduli;
    os << "\nmoduli\n";
    os << "  dim S^d            " << m.dim_graded << "\n";
    os << "  dim G              " << m.dim_aut << " (" << join_ints(m.per_variable) << ")\n";
    os << "  moduli             " << m.moduli_dim << "\n";
  }

  if (r.klt) {
    const KltCertificate& k = *r.klt;
    os << "\nklt certificate\n";
    os << "  gamma              " << to_string(k.gamma) << "\n";
    os << "  generic bound      " << to_string(k.generic_mult_bound) << "\n";
    for (const VertexCertificate& v : k.vertices) {
      std::string head = v.label + " (order " + std::to_string(v.group_order) + ")";
      head.resize(std::max<std::size_t>(head.size() + 1, 19), ' ');
      os << "  " << head << "cap " << to_string(v.mult_cap) << ", a_max " << to_string(v.bounds.a_max)
         << ", tangent " << to_string(v.bounds.tangent_coeff_max) << "\n";
    }
    os << "  product            " << to_string(k.product) << "\n";
    os << "  margin             " << to_string(k.margin) << "\n";
    os << "  verdict            " << (k.verdict ? "klt" : "not certified") << "\n";
  }

  if (r.splitting) {
    const SplittingCheck& sc = *r.splitting;
    os << "\nsplitting\n";
    os << "  (a,b,c)            (" << to_string(sc.a) << "," << to_string(sc.b) << ","
       << to_string(sc.c) << ")\n";
    os << "  discriminant       " << to_string(sc.discriminant) << "\n";
    os << "  distinct roots     " << yes_no(sc.distinct_roots) << "\n";
  }

  if (!r.warnings.empty()) {
    os << "\nwarnings\n";
    for (const std::string& w : r.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

}  // namespace wlink::cli
