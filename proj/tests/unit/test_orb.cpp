#include <gtest/gtest.h>

#include <algorithm>

#include "wlink/errors.hpp"
#include "wlink/milnor.hpp"
#include "wlink/orb.hpp"

using namespace wlink;

namespace {

Term term(std::vector<int> e, Rational c = 1) { return Term{Monomial{std::move(e)}, c}; }

QhPolynomial z16_f() {
  return QhPolynomial::make(validate_weights({1, 3, 5, 8}), 16,
                            {term({16, 0, 0, 0}), term({1, 5, 0, 0}), term({1, 0, 3, 0}),
                             term({0, 1, 1, 1}), term({0, 0, 0, 2})});
}

SingularPoint vertex(std::size_t i, std::int64_t order) {
  SingularPoint p;
  p.kind = SingularKind::Vertex;
  p.i = i;
  p.j = i;
  p.group_order = order;
  return p;
}

std::vector<std::int64_t> orders(const std::vector<SingularPoint>& pts) {
  std::vector<std::int64_t> out;
  for (const auto& p : pts) out.push_back(p.group_order);
  std::sort(out.begin(), out.end());
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(SingularPoints, Z16Vertices) {
  const auto pts = singular_points(z16_f());
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].kind, SingularKind::Vertex);
  EXPECT_EQ(pts[0].i, 1u);
  EXPECT_EQ(pts[0].group_order, 3);
  EXPECT_EQ(pts[1].i, 2u);
  EXPECT_EQ(pts[1].group_order, 5);
  EXPECT_EQ(pts[1].str(), "Vertex(2) order 5");
}

TEST(SingularPoints, QuadricHasNone) {
  const QhPolynomial f = QhPolynomial::make(
      validate_weights({1, 1, 1, 1}), 2,
      {term({2, 0, 0, 0}), term({0, 2, 0, 0}), term({0, 0, 2, 0}), term({0, 0, 0, 2})});
  EXPECT_TRUE(singular_points(f).empty());
}

// z0^12 + z1^4 + z2^3 + z3^2 on (1,3,4,6): on the z1 z3 line 1 + z3^2 has two
// roots, giving two points of order 3; the z2 z3 line carries one point of order 2.
TEST(SingularPoints, FermatEdgePoints) {
  const QhPolynomial f = QhPolynomial::make(
      validate_weights({1, 3, 4, 6}), 12,
      {term({12, 0, 0, 0}), term({0, 4, 0, 0}), term({0, 0, 3, 0}), term({0, 0, 0, 2})});
  const auto pts = singular_points(f);
  std::size_t edge13 = 0;
  std::size_t edge23 = 0;
  for (const SingularPoint& p : pts) {
    ASSERT_EQ(p.kind, SingularKind::EdgePoint) << p.str();
    if (p.i == 1 && p.j == 3) {
      ++edge13;
      EXPECT_EQ(p.group_order, 3);
    } else if (p.i == 2 && p.j == 3) {
      ++edge23;
      EXPECT_EQ(p.group_order, 2);
    } else {
      ADD_FAILURE() << p.str();
    }
  }
  EXPECT_EQ(edge13, 2u);
  EXPECT_EQ(edge23, 1u);
}

// Repeated roots of the restricted form collapse to one point.
TEST(SingularPoints, EdgeCountUsesDistinctRoots) {
  const WeightVector w = validate_weights({1, 1, 2, 2});
  const QhPolynomial split =
      QhPolynomial::make(w, 4, {term({4, 0, 0, 0}), term({0, 4, 0, 0}), term({0, 0, 2, 0}),
                                term({0, 0, 0, 2})});
  EXPECT_EQ(orders(singular_points(split)), (std::vector<std::int64_t>{2, 2}));
  const QhPolynomial square =
      QhPolynomial::make(w, 4, {term({4, 0, 0, 0}), term({0, 4, 0, 0}), term({0, 0, 2, 0}),
                                term({0, 0, 1, 1}, 2), term({0, 0, 0, 2})});
  EXPECT_EQ(orders(singular_points(square)), (std::vector<std::int64_t>{2}));
}

TEST(SingularPoints, LineInsideTheSurface) {
  const WeightVector w = validate_weights({1, 1, 2, 2});
  const QhPolynomial f = QhPolynomial::make(
      w, 4, {term({4, 0, 0, 0}), term({0, 4, 0, 0}), term({2, 0, 1, 0}), term({0, 2, 0, 1})});
  EXPECT_EQ(code_of([&] { singular_points(f); }), ErrorCode::ContainsSingularLine);
  EXPECT_EQ(code_of([&] { orbifold_report(f, BigInt(0)); }), ErrorCode::ContainsSingularLine);
}

TEST(Surface, BettiAndTopInvariants) {
  EXPECT_EQ(surface_betti(BigInt(9)), 10);
  EXPECT_EQ(surface_betti(BigInt(0)), 1);
  EXPECT_EQ(surface_betti(BigInt(1)), 2);
  EXPECT_EQ(surface_betti(BigInt(9), BigInt(0)), 9);
  const TopInvariants z = top_invariants(BigInt(10));
  EXPECT_EQ(z.chi_top, 12);
  EXPECT_EQ(z.tau_top, -8);
  EXPECT_EQ(z.combination, 0);
  const TopInvariants one = top_invariants(BigInt(1));
  EXPECT_EQ(one.chi_top, 3);
  EXPECT_EQ(one.tau_top, 1);
  EXPECT_EQ(one.combination, 9);
  const TopInvariants nine = top_invariants(BigInt(9));
  EXPECT_EQ(nine.chi_top, 11);
  EXPECT_EQ(nine.tau_top, -7);
  EXPECT_EQ(nine.combination, 1);
}

TEST(Orbifold, EulerCharacteristic) {
  EXPECT_EQ(chi_orb(BigInt(12), {vertex(2, 5), vertex(1, 3)}), Rational(158, 15));
  EXPECT_EQ(chi_orb(BigInt(12), {}), 12);
  EXPECT_EQ(chi_orb(BigInt(3), {vertex(0, 2)}), Rational(5, 2));
}

TEST(Orbifold, ChernSquare) {
  EXPECT_EQ(c1_squared(validate_weights({1, 3, 5, 8}), 16), Rational(2, 15));
  EXPECT_EQ(c1_squared(validate_weights({1, 1, 1, 1}), 4), 0);
  EXPECT_EQ(c1_squared(validate_weights({1, 3, 5, 8}), 17), 0);
  EXPECT_EQ(c1_squared(validate_weights({1, 1, 1, 1}), 2), 8);
  EXPECT_EQ(code_of([] { c1_squared(validate_weights({1, 1, 1}), 2); }),
            ErrorCode::DimensionUnsupported);
}

TEST(Orbifold, ChernSquarePermutationInvariant) {
  std::vector<std::int64_t> w{2, 3, 5, 7};
  const Rational base = c1_squared(validate_weights(w), 15);
  while (std::next_permutation(w.begin(), w.end())) {
    EXPECT_EQ(c1_squared(validate_weights(w), 15), base);
  }
}

TEST(Orbifold, Signature) {
  EXPECT_EQ(tau_orb(Rational(2, 15), Rational(158, 15)), Rational(-314, 45));
  EXPECT_EQ(tau_orb(0, 0), 0);
  EXPECT_EQ(tau_orb(8, 12), Rational(-16, 3));
}

TEST(HitchinThorpe, Z16AllPass) {
  const std::vector<SingularPoint> pts{vertex(2, 5), vertex(1, 3)};
  const HitchinThorpeChecks c = hitchin_thorpe_checks(
      BigInt(12), Rational(158, 15), Rational(-314, 45), Rational(2, 15), pts);
  EXPECT_TRUE(c.all());
  EXPECT_EQ(c.orbifold_margin, Rational(1, 15));
  EXPECT_EQ(c.local_correction, Rational(22, 15));
}

TEST(HitchinThorpe, EdgeCases) {
  const HitchinThorpeChecks zero = hitchin_thorpe_checks(BigInt(0), 0, 0, 0, {});
  EXPECT_TRUE(zero.orbifold_hitchin_thorpe);
  EXPECT_EQ(zero.orbifold_margin, 0);
  const std::vector<SingularPoint> three{vertex(0, 2), vertex(1, 2), vertex(2, 2)};
  const HitchinThorpeChecks c =
      hitchin_thorpe_checks(BigInt(1), chi_orb(BigInt(1), three), 0, 0, three);
  EXPECT_FALSE(c.euler_lower_bound);
  EXPECT_FALSE(c.all());
}

TEST(Orbifold, Z16EndToEnd) {
  const QhPolynomial f = z16_f();
  const BigInt b = betti(divisor_of_delta(f.weights(), f.degree()));
  const OrbifoldReport r = orbifold_report(f, b);
  EXPECT_EQ(r.b2_surface, 10);
  EXPECT_EQ(r.chi_top, 12);
  EXPECT_EQ(r.tau_top, -8);
  EXPECT_EQ(2 * r.chi_top + 3 * r.tau_top, 0);
  EXPECT_EQ(r.chi_orb, Rational(158, 15));
  EXPECT_EQ(r.c1_sq, Rational(2, 15));
  EXPECT_EQ(r.tau_orb, Rational(-314, 45));
  EXPECT_EQ(r.tau_res(), Rational(-8) - Rational(-314, 45));
  EXPECT_TRUE(r.checks.all());
  // Recompute the Noether-type identity independently of tau_orb.
  EXPECT_EQ(r.c1_sq, 2 * r.chi_orb + 3 * r.tau_orb);
  EXPECT_LT(r.chi_orb, Rational(r.chi_top));
}

TEST(Orbifold, ChiOrbNeverExceedsChiTop) {
  for (long chi = -3; chi <= 12; ++chi) {
    EXPECT_EQ(chi_orb(BigInt(chi), {}), chi);
    for (std::int64_t g = 2; g <= 9; ++g) {
      EXPECT_LT(chi_orb(BigInt(chi), {vertex(0, g)}), chi);
    }
  }
}
