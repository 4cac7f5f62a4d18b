#include "wlink/orb.hpp"

#include <algorithm>
#include <numeric>

#include "upoly.hpp"
#include "wlink/errors.hpp"

namespace wlink {

std::string SingularPoint::str() const {
  if (kind == SingularKind::Vertex) {
    return "Vertex(" + std::to_string(i) + ") order " + std::to_string(group_order);
  }
  return "EdgePoint(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(root_index) + ") order " + std::to_string(group_order);
}

namespace {

void require_surface(const WeightVector& w, const char* op) {
  if (w.size() != 4) {
    throw Error(ErrorCode::DimensionUnsupported, op,
                "expected 4 weights, got " + std::to_string(w.size()));
  }
}

// Points of Z on the open line {z_k = 0, k != i, j; z_i z_j != 0}. Set z_i = 1;
// the exponents of z_j in the restriction step by s = w_i / gcd(w_i, w_j) and
// (1, z_j) ~ (1, zeta z_j) for zeta in mu_s, so the points are the distinct
// non-zero roots of h(u) with u = z_j^s.
std::size_t edge_point_count(const QhPolynomial& f, std::size_t i, std::size_t j) {
  const WeightVector& w = f.weights();
  const std::int64_t step = w[i] / std::gcd(w[i], w[j]);

  std::vector<std::pair<int, Rational>> restriction;
  for (const Term& t : f.terms()) {
    bool on_line = true;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k != i && k != j && t.monomial.exponents[k] != 0) on_line = false;
    }
    if (on_line) restriction.emplace_back(t.monomial.exponents[j], t.coefficient);
  }
  if (restriction.empty()) {
    throw Error(ErrorCode::ContainsSingularLine, "singular_points",
                "f vanishes on the line z" + std::to_string(i) + " z" + std::to_string(j) +
                    " with gcd(w" + std::to_string(i) + ", w" + std::to_string(j) +
                    ") = " + std::to_string(std::gcd(w[i], w[j])));
  }
  int lowest = restriction.front().first;
  int highest = lowest;
  for (const auto& [e, c] : restriction) {
    lowest = std::min(lowest, e);
    highest = std::max(highest, e);
  }
  std::vector<Rational> h((highest - lowest) / step + 1);
  for (const auto& [e, c] : restriction) {
    if ((e - lowest) % step != 0) {
      throw Error(ErrorCode::DegreeMismatch, "singular_points",
                  "restriction exponents are not spaced by " + std::to_string(step));
    }
    h[(e - lowest) / step] += c;
  }
  return static_cast<std::size_t>(detail::distinct_root_count(detail::QPoly(std::move(h))));
}

}  // namespace

std::vector<SingularPoint> singular_points(const QhPolynomial& f) {
  const WeightVector& w = f.weights();
  require_surface(w, "singular_points");
  std::vector<SingularPoint> points;

  for (std::size_t i = 0; i < 4; ++i) {
    if (w[i] < 2) continue;
    const bool pure_power = std::any_of(f.terms().begin(), f.terms().end(),
                                        [&](const Term& t) {
                                          auto s = t.monomial.support();
                                          return s.size() == 1 && s.front() == i;
                                        });
    if (!pure_power) {
      points.push_back({SingularKind::Vertex, i, i, 0, w[i]});
    }
  }

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const std::int64_t g = std::gcd(w[i], w[j]);
      if (g < 2) continue;
      const std::size_t count = edge_point_count(f, i, j);
      for (std::size_t r = 0; r < count; ++r) {
        points.push_back({SingularKind::EdgePoint, i, j, r, g});
      }
    }
  }
  return points;
}

BigInt surface_betti(const BigInt& b2_link, const BigInt& offset) { return b2_link + offset; }

TopInvariants top_invariants(const BigInt& b2_surface) {
  TopInvariants t;
  t.chi_top = 2 + b2_surface;
  t.tau_top = 2 - b2_surface;
  t.combination = 2 * t.chi_top + 3 * t.tau_top;
  return t;
}

namespace {

Rational local_correction(const std::vector<SingularPoint>& points) {
  Rational sum = 0;
  for (const SingularPoint& p : points) {
    sum += Rational(1) - make_rational(1, BigInt(static_cast<long>(p.group_order)));
  }
  return sum;
}

}  // namespace

Rational chi_orb(const BigInt& chi_top, const std::vector<SingularPoint>& points) {
  return Rational(chi_top) - local_correction(points);
}

Rational c1_squared(const WeightVector& w, std::int64_t d) {
  require_surface(w, "c1_squared");
  const BigInt index(static_cast<long>(w.total() - d));
  const BigInt num = BigInt(static_cast<long>(d)) * index * index;
  return make_rational(num, w.product());
}

Rational tau_orb(const Rational& c1_sq, const Rational& chi_orb) {
  Rational t = (c1_sq - 2 * chi_orb) / 3;
  return t;
}

HitchinThorpeChecks hitchin_thorpe_checks(const BigInt& chi_top, const Rational& chi_orb,
                                          const Rational& tau_orb, const Rational& c1_sq,
                                          const std::vector<SingularPoint>& points) {
  HitchinThorpeChecks c;
  const Rational top(chi_top);
  const Rational half_n = make_rational(static_cast<long>(points.size()), 2);
  const Rational three_halves_tau = make_rational(3, 2) * abs(tau_orb);
  c.local_correction = local_correction(points);
  c.euler_lower_bound = top >= c.local_correction && c.local_correction >= half_n;
  c.orbifold_margin = chi_orb - three_halves_tau;
  c.orbifold_hitchin_thorpe = c.orbifold_margin >= 0;
  c.strengthened_chain = top >= three_halves_tau + c.local_correction &&
                         three_halves_tau + c.local_correction >= three_halves_tau + half_n;
  c.c1_nonnegative = c1_sq >= 0;
  return c;
}

OrbifoldReport orbifold_report(const QhPolynomial& f, const BigInt& b2_link,
                               const OrbifoldOptions& options) {
  OrbifoldReport r;
  r.singular_points = singular_points(f);
  r.b2_surface = surface_betti(b2_link, options.surface_betti_offset);
  const TopInvariants top = top_invariants(r.b2_surface);
  r.chi_top = top.chi_top;
  r.tau_top = top.tau_top;
  r.chi_orb = chi_orb(r.chi_top, r.singular_points);
  r.c1_sq = c1_squared(f.weights(), f.degree());
  r.tau_orb = tau_orb(r.c1_sq, r.chi_orb);
  r.checks = hitchin_thorpe_checks(r.chi_top, r.chi_orb, r.tau_orb, r.c1_sq,
                                   r.singular_points);
  return r;
}

}  // namespace wlink
