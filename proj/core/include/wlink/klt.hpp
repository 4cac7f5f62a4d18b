#pragma once
// Arithmetic klt certificate for a pair (Z, gamma * D) with D ~ -K_Z, where Z
// is a quasi-smooth surface in P(w0, w1, w2, w3).
//
// Away from the singular vertices the multiplicity of D is bounded by
// intersecting with a general member of a base-point-free pencil. At each
// singular vertex P the bound is lifted to a local cover C^2 -> (Z, P) of
// degree g, the special hyperplane section through P is split into two
// smooth components C1 + C2 meeting transversally, and D = a C1 + b C2 + D'
// is controlled by the intersection numbers of C1, C2 and D'.
//
// The certificate is parameterized so the same schema covers the whole
// deformation family of a given (w, d); the component data (which curves,
// which local orders) is taken as certified input.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wlink/number.hpp"
#include "wlink/wring.hpp"

namespace wlink {

/// Intersection numbers on Z for a split hyperplane section H = C1 + C2 with
/// H ~ D. Here "o1" stands for the class of H.
struct IntersectionTable {
  Rational o1_c_total;  // H . (C1 + C2) = H^2
  Rational o1_c1;       // H . C1
  Rational o1_c2;       // H . C2
  Rational c1_c2;       // C1 . C2
  Rational c1_sq_self;  // C1^2
  Rational c2_sq_self;  // C2^2

  friend bool operator==(const IntersectionTable&, const IntersectionTable&) = default;
};

/// a b c / (w0 w1 w2 w3): the product of three hypersurface classes of
/// degrees a, b, c on P(w). Throws DimensionUnsupported unless |w| has four
/// entries and InvalidInput for non-positive degrees.
Rational ambient_triple_intersection(const WeightVector& w,
                                     std::int64_t a, std::int64_t b, std::int64_t c);

/// k / (w_i w_j): degree of O(k) on the coordinate curve P(w_i, w_j).
Rational coordinate_curve_degree(const WeightVector& w, std::size_t i, std::size_t j,
                                 std::int64_t k);

/// C1 . C2 = 1 / meet_order (transversal meeting at a single orbifold point),
/// self-intersections from C_i . (C1 + C2) = H . C_i.
IntersectionTable build_intersection_table(const Rational& o1_c1, const Rational& o1_c2,
                                           std::int64_t meet_order);

/// g * k * I * d / (w0 w1 w2 w3): bound on mult_0 of the pull-back of D to a
/// local cover of degree g, obtained from a pencil of degree k through the
/// point. With g = 1 this is the generic multiplicity bound D . O(k).
Rational vertex_mult_cap(const WeightVector& w, std::int64_t d, std::int64_t index,
                         std::int64_t pencil_degree, std::int64_t group_order);

struct CoefficientBounds {
  Rational a_max;
  Rational b_max;
  /// Largest coefficient reachable in a tangent direction of C1 or C2:
  /// max over a in [0, a_max] of a + g (H^2 - a H.C1), and likewise for b.
  Rational tangent_coeff_max;

  friend bool operator==(const CoefficientBounds&, const CoefficientBounds&) = default;
};

/// Solves the inequality chain with exact rationals:
///   H.C1 = a C1^2 + b C1.C2 + C1.D',  C1.D' <= H^2 - a H.C1,  a + b <= cap
/// which gives a <= (cap C1.C2 + H^2 - H.C1) / (C1.C2 + H.C1 - C1^2), and the
/// symmetric bound for b. The residual part satisfies
/// mult_0(pi^* D') <= g (H^2 - a H.C1). Throws InfeasibleSystem when no
/// non-negative coefficient satisfies the chain.
CoefficientBounds coefficient_bounds(const IntersectionTable& table, const Rational& mult_cap,
                                     std::int64_t group_order);

/// Data for one singular vertex of Z.
struct VertexData {
  std::string label;               // e.g. "P1"
  std::int64_t group_order = 1;    // g, order of the local group
  std::int64_t pencil_degree = 1;  // k, pencil through the point
  std::int64_t meet_order = 1;     // local order where C1 and C2 meet

  friend bool operator==(const VertexData&, const VertexData&) = default;
};

struct KltInputs {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  std::int64_t index = 0;
  Rational gamma;
  /// Degree of the base-point-free pencil used away from the vertices.
  std::int64_t generic_pencil_degree = 1;
  /// C1 is the coordinate curve P(w_i, w_j) cut out by the remaining two
  /// coordinates; C2 is the other component of the hyperplane section.
  std::pair<std::size_t, std::size_t> component_curve{1, 2};
  /// Degree of the hyperplane class H (must equal the index so H ~ -K).
  std::int64_t hyperplane_degree = 1;
  std::vector<VertexData> vertices;

  friend bool operator==(const KltInputs&, const KltInputs&) = default;
};

struct VertexCertificate {
  std::string label;
  std::int64_t group_order = 1;
  Rational mult_cap;
  IntersectionTable table;
  CoefficientBounds bounds;

  friend bool operator==(const VertexCertificate&, const VertexCertificate&) = default;
};

struct KltCertificate {
  Rational gamma;
  Rational generic_mult_bound;
  /// Entries of the vertex with the largest tangent coefficient.
  Rational mult_cap;
  Rational a_max;
  Rational b_max;
  Rational tangent_coeff_max;
  std::vector<VertexCertificate> vertices;
  /// gamma * max(tangent_coeff_max, generic_mult_bound).
  Rational product;
  /// 1 - product; strictly positive iff verdict.
  Rational margin;
  bool verdict = false;

  friend bool operator==(const KltCertificate&, const KltCertificate&) = default;
};

/// verdict = gamma * tangent < 1 and gamma * generic < 1 (strict: klt, not lc).
KltCertificate klt_verdict(const Rational& tangent_coeff_max,
                           const Rational& generic_mult_bound, const Rational& gamma);

/// Runs the full chain for `inputs`.
KltCertificate certify(const KltInputs& inputs);

/// Z_16 in P(1,3,5,8) at gamma = 11/16: vertices P1 (order 5, pencil O(3))
/// and P2 (order 3, pencil O(5)), C1 = {z0 = z3 = 0}.
KltInputs z16_preset();

/// For f over (1,3,5,8) of degree 16: the form a s^2 + b s t + c t^2 with
/// a, b, c the coefficients of z3^2, z1 z2 z3 and (z1 z2)^2.
struct SplittingCheck {
  Rational a, b, c;
  Rational discriminant;
  bool distinct_roots = false;

  friend bool operator==(const SplittingCheck&, const SplittingCheck&) = default;
};

/// Throws InvalidInput unless f lives on P(1,3,5,8) in degree 16 and
/// MissingQuadraticPart when a = b = c = 0.
SplittingCheck splitting_condition(const QhPolynomial& f);

}  // namespace wlink
