#pragma once
// Orbifold invariants of a quasi-smooth surface Z = {f = 0} in P(w0, w1, w2, w3).

#include <cstdint>
#include <string>
#include <vector>

#include "wlink/number.hpp"
#include "wlink/wring.hpp"

namespace wlink {

enum class SingularKind { Vertex, EdgePoint };

/// An isolated orbifold point of Z. Vertex(i) is P_i with local group of
/// order w_i; EdgePoint(i, j, r) is the r-th point of Z on the open coordinate
/// line P_i P_j, with local group of order gcd(w_i, w_j).
struct SingularPoint {
  SingularKind kind = SingularKind::Vertex;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t root_index = 0;
  std::int64_t group_order = 1;

  std::string str() const;

  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// Vertices first (ascending i), then edge points by (i, j, root_index).
/// Throws DimensionUnsupported for weight count != 4 and ContainsSingularLine
/// when f vanishes identically on a coordinate line with gcd(w_i, w_j) >= 2.
std::vector<SingularPoint> singular_points(const QhPolynomial& f);

/// b2(Z) = b2(L) + offset; the offset is 1 for a circle V-bundle.
BigInt surface_betti(const BigInt& b2_link, const BigInt& offset = BigInt(1));

struct TopInvariants {
  BigInt chi_top;
  BigInt tau_top;
  /// 2 chi_top + 3 tau_top = 10 - b2.
  BigInt combination;
};

TopInvariants top_invariants(const BigInt& b2_surface);

/// chi_orb = chi_top - sum_x (1 - 1/|Gamma_x|).
Rational chi_orb(const BigInt& chi_top, const std::vector<SingularPoint>& points);

/// c1^2 = d (|w| - d)^2 / (w0 w1 w2 w3). Throws DimensionUnsupported unless
/// there are four weights.
Rational c1_squared(const WeightVector& w, std::int64_t d);

/// From c1^2 = 2 chi_orb + 3 tau_orb.
Rational tau_orb(const Rational& c1_sq, const Rational& chi_orb);

struct HitchinThorpeChecks {
  /// chi_top >= sum (1 - 1/|Gamma|) >= N/2.
  bool euler_lower_bound = false;
  /// chi_orb >= (3/2) |tau_orb|.
  bool orbifold_hitchin_thorpe = false;
  /// chi_top >= (3/2)|tau_orb| + sum (1 - 1/|Gamma|) >= (3/2)|tau_orb| + N/2.
  bool strengthened_chain = false;
  /// c1^2 >= 0.
  bool c1_nonnegative = false;

  /// chi_orb - (3/2)|tau_orb|.
  Rational orbifold_margin;
  /// sum over singular points of (1 - 1/|Gamma_x|).
  Rational local_correction;

  bool all() const {
    return euler_lower_bound && orbifold_hitchin_thorpe && strengthened_chain &&
           c1_nonnegative;
  }

  friend bool operator==(const HitchinThorpeChecks&, const HitchinThorpeChecks&) = default;
};

struct OrbifoldReport {
  BigInt b2_surface;
  BigInt chi_top;
  BigInt tau_top;
  Rational chi_orb;
  Rational tau_orb;
  Rational c1_sq;
  std::vector<SingularPoint> singular_points;
  HitchinThorpeChecks checks;

  /// tau_top = tau_orb + tau_res.
  Rational tau_res() const { return Rational(tau_top) - tau_orb; }

  friend bool operator==(const OrbifoldReport&, const OrbifoldReport&) = default;
};

HitchinThorpeChecks hitchin_thorpe_checks(const BigInt& chi_top, const Rational& chi_orb,
                                          const Rational& tau_orb, const Rational& c1_sq,
                                          const std::vector<SingularPoint>& points);

struct OrbifoldOptions {
  BigInt surface_betti_offset = 1;
};

/// Full orbifold block for f, given b2 of the link. Throws ContainsSingularLine
/// when condition III fails (the singular locus would not be isolated).
OrbifoldReport orbifold_report(const QhPolynomial& f, const BigInt& b2_link,
                               const OrbifoldOptions& options = {});

}  // namespace wlink
