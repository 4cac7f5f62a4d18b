#include "wlink/klt.hpp"

#include <algorithm>

#include "wlink/errors.hpp"

namespace wlink {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

void require_surface(const WeightVector& w, const char* op) {
  if (w.size() != 4) {
    throw Error(ErrorCode::DimensionUnsupported, op,
                "expected 4 weights, got " + std::to_string(w.size()));
  }
}

void require_positive(std::int64_t v, const char* what, const char* op) {
  if (v <= 0) {
    throw Error(ErrorCode::InvalidInput, op,
                std::string(what) + " must be positive, got " + std::to_string(v));
  }
}

}  // namespace

Rational ambient_triple_intersection(const WeightVector& w, std::int64_t a, std::int64_t b,
                                     std::int64_t c) {
  require_surface(w, "ambient_triple_intersection");
  require_positive(a, "degree a", "ambient_triple_intersection");
  require_positive(b, "degree b", "ambient_triple_intersection");
  require_positive(c, "degree c", "ambient_triple_intersection");
  return make_rational(big(a) * big(b) * big(c), w.product());
}

Rational coordinate_curve_degree(const WeightVector& w, std::size_t i, std::size_t j,
                                 std::int64_t k) {
  if (i >= w.size() || j >= w.size() || i == j) {
    throw Error(ErrorCode::InvalidInput, "coordinate_curve_degree",
                "need two distinct indices below " + std::to_string(w.size()));
  }
  if (k < 0) {
    throw Error(ErrorCode::InvalidInput, "coordinate_curve_degree",
                "class degree must be non-negative, got " + std::to_string(k));
  }
  return make_rational(big(k), big(w[i]) * big(w[j]));
}

IntersectionTable build_intersection_table(const Rational& o1_c1, const Rational& o1_c2,
                                           std::int64_t meet_order) {
  require_positive(meet_order, "meet_order", "build_intersection_table");
  IntersectionTable t;
  t.o1_c1 = o1_c1;
  t.o1_c2 = o1_c2;
  t.o1_c_total = o1_c1 + o1_c2;
  t.c1_c2 = make_rational(1, big(meet_order));
  t.c1_sq_self = o1_c1 - t.c1_c2;
  t.c2_sq_self = o1_c2 - t.c1_c2;
  return t;
}

Rational vertex_mult_cap(const WeightVector& w, std::int64_t d, std::int64_t index,
                         std::int64_t pencil_degree, std::int64_t group_order) {
  require_surface(w, "vertex_mult_cap");
  require_positive(d, "degree", "vertex_mult_cap");
  require_positive(index, "index", "vertex_mult_cap");
  require_positive(pencil_degree, "pencil degree", "vertex_mult_cap");
  require_positive(group_order, "group order", "vertex_mult_cap");
  return make_rational(big(group_order) * big(pencil_degree) * big(index) * big(d),
                       w.product());
}

namespace {

// Largest x in [0, cap] with slope * x <= rhs.
Rational max_feasible(const Rational& slope, const Rational& rhs, const Rational& cap,
                      const char* which) {
  auto infeasible = [&] {
    return Error(ErrorCode::InfeasibleSystem, "coefficient_bounds",
                 std::string("no non-negative ") + which + " satisfies " + to_string(slope) +
                     " * " + which + " <= " + to_string(rhs) + " with cap " + to_string(cap));
  };
  if (cap < 0) throw infeasible();
  if (slope > 0) {
    Rational bound = rhs / slope;
    if (bound < 0) throw infeasible();
    return std::min(bound, cap);
  }
  if (slope == 0) {
    if (rhs < 0) throw infeasible();
    return cap;
  }
  Rational lower = rhs / slope;
  if (lower > cap) throw infeasible();
  return cap;
}

// Coefficient in the tangent direction of one component: x + g (H^2 - x H.C),
// linear in x, so its maximum over [0, x_max] sits at an endpoint.
Rational tangent_max(const Rational& x_max, const Rational& total, const Rational& o1_c,
                     std::int64_t group_order) {
  const Rational g(big(group_order));
  Rational at_zero = g * total;
  Rational at_max = x_max + g * (total - x_max * o1_c);
  return std::max(at_zero, at_max);
}

}  // namespace

CoefficientBounds coefficient_bounds(const IntersectionTable& t, const Rational& mult_cap,
                                     std::int64_t group_order) {
  require_positive(group_order, "group order", "coefficient_bounds");
  // H.C1 = a C1^2 + b C1.C2 + C1.D' with C1.D' <= H^2 - a H.C1, b <= cap - a.
  Rational slope_a = t.c1_c2 + t.o1_c1 - t.c1_sq_self;
  Rational rhs_a = mult_cap * t.c1_c2 + t.o1_c_total - t.o1_c1;
  Rational slope_b = t.c1_c2 + t.o1_c2 - t.c2_sq_self;
  Rational rhs_b = mult_cap * t.c1_c2 + t.o1_c_total - t.o1_c2;

  CoefficientBounds out;
  out.a_max = max_feasible(slope_a, rhs_a, mult_cap, "a");
  out.b_max = max_feasible(slope_b, rhs_b, mult_cap, "b");
  out.tangent_coeff_max =
      std::max(tangent_max(out.a_max, t.o1_c_total, t.o1_c1, group_order),
               tangent_max(out.b_max, t.o1_c_total, t.o1_c2, group_order));
  return out;
}

KltCertificate klt_verdict(const Rational& tangent_coeff_max,
                           const Rational& generic_mult_bound, const Rational& gamma) {
  if (gamma < 0) {
    throw Error(ErrorCode::InvalidInput, "klt_verdict",
                "gamma must be non-negative, got " + to_string(gamma));
  }
  KltCertificate c;
  c.gamma = gamma;
  c.tangent_coeff_max = tangent_coeff_max;
  c.generic_mult_bound = generic_mult_bound;
  c.product = gamma * std::max(tangent_coeff_max, generic_mult_bound);
  c.margin = 1 - c.product;
  c.verdict = gamma * tangent_coeff_max < 1 && gamma * generic_mult_bound < 1;
  return c;
}

KltCertificate certify(const KltInputs& in) {
  const WeightVector w = WeightVector::validate(in.weights);
  require_surface(w, "certify");
  require_positive(in.degree, "degree", "certify");
  if (index_of(w, in.degree) != in.index) {
    throw Error(ErrorCode::DegreeMismatch, "certify",
                "index " + std::to_string(in.index) + " != |w| - d = " +
                    std::to_string(index_of(w, in.degree)));
  }
  if (in.hyperplane_degree != in.index) {
    throw Error(ErrorCode::InvalidInput, "certify",
                "hyperplane degree " + std::to_string(in.hyperplane_degree) +
                    " must equal the index so that H ~ -K");
  }
  if (in.vertices.empty()) {
    throw Error(ErrorCode::InvalidInput, "certify", "no vertex data");
  }

  const Rational h_sq =
      ambient_triple_intersection(w, in.hyperplane_degree, in.hyperplane_degree, in.degree);
  const Rational h_c1 = coordinate_curve_degree(w, in.component_curve.first,
                                                in.component_curve.second, in.hyperplane_degree);
  const Rational h_c2 = h_sq - h_c1;
  const Rational generic =
      vertex_mult_cap(w, in.degree, in.index, in.generic_pencil_degree, 1);

  std::vector<VertexCertificate> vertices;
  for (const VertexData& v : in.vertices) {
    VertexCertificate vc;
    vc.label = v.label;
    vc.group_order = v.group_order;
    vc.mult_cap = vertex_mult_cap(w, in.degree, in.index, v.pencil_degree, v.group_order);
    vc.table = build_intersection_table(h_c1, h_c2, v.meet_order);
    vc.bounds = coefficient_bounds(vc.table, vc.mult_cap, v.group_order);
    vertices.push_back(std::move(vc));
  }
  auto worst = std::max_element(vertices.begin(), vertices.end(),
                                [](const VertexCertificate& a, const VertexCertificate& b) {
                                  return a.bounds.tangent_coeff_max < b.bounds.tangent_coeff_max;
                                });

  KltCertificate cert = klt_verdict(worst->bounds.tangent_coeff_max, generic, in.gamma);
  cert.mult_cap = worst->mult_cap;
  cert.a_max = worst->bounds.a_max;
  cert.b_max = worst->bounds.b_max;
  cert.vertices = std::move(vertices);
  return cert;
}

KltInputs z16_preset() {
  KltInputs in;
  in.weights = {1, 3, 5, 8};
  in.degree = 16;
  in.index = 1;
  in.gamma = make_rational(11, 16);
  in.generic_pencil_degree = 3;
  in.component_curve = {1, 2};
  in.hyperplane_degree = 1;
  in.vertices = {
      {"P1", 5, 3, 5},
      {"P2", 3, 5, 3},
  };
  return in;
}

SplittingCheck splitting_condition(const QhPolynomial& f) {
  const auto w = f.weights().values();
  const std::vector<std::int64_t> expected{1, 3, 5, 8};
  if (!std::equal(w.begin(), w.end(), expected.begin(), expected.end()) || f.degree() != 16) {
    throw Error(ErrorCode::InvalidInput, "splitting_condition",
                "requires weights (1,3,5,8) and degree 16, got " + f.weights().str() +
                    " and " + std::to_string(f.degree()));
  }
  SplittingCheck s;
  s.a = f.coefficient(Monomial{{0, 0, 0, 2}});
  s.b = f.coefficient(Monomial{{0, 1, 1, 1}});
  s.c = f.coefficient(Monomial{{0, 2, 2, 0}});
  if (s.a == 0 && s.b == 0 && s.c == 0) {
    throw Error(ErrorCode::MissingQuadraticPart, "splitting_condition",
                "f has no z3^2, z1*z2*z3 or z1^2*z2^2 term");
  }
  s.discriminant = s.b * s.b - 4 * s.a * s.c;
  s.distinct_roots = s.discriminant != 0;
  return s;
}

}  // namespace wlink
