#pragma once
// Weighted graded polynomial rings C[z_0, ..., z_n] with deg z_i = w_i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlink/number.hpp"

namespace wlink {

/// Positive integer weights with overall gcd 1, kept in the order given.
class WeightVector {
 public:
  /// Validates and wraps `raw`. Throws NonPositiveWeight or
  /// NonCoprimeWeights (the detail names the common factor).
  static WeightVector validate(std::span<const std::int64_t> raw);

  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  std::span<const std::int64_t> values() const noexcept { return weights_; }

  /// |w| = sum of the weights.
  std::int64_t total() const noexcept { return total_; }
  BigInt product() const;

  std::string str() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  explicit WeightVector(std::vector<std::int64_t> weights);

  std::vector<std::int64_t> weights_;
  std::int64_t total_ = 0;
};

WeightVector validate_weights(std::span<const std::int64_t> raw);
inline WeightVector validate_weights(std::initializer_list<std::int64_t> raw) {
  return validate_weights(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

/// Exponent vector of z_0^{e_0} ... z_n^{e_n}. Ordered lexicographically.
struct Monomial {
  std::vector<int> exponents;

  std::int64_t weighted_degree(const WeightVector& w) const;
  /// Indices with a non-zero exponent.
  std::vector<std::size_t> support() const;
  /// e.g. "z0^2*z1*z3", or "1" for the constant monomial.
  std::string str() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A quasi-homogeneous polynomial of degree d: every term has weighted degree
/// d, coefficients are non-zero and monomials are distinct. Terms are stored in
/// lexicographic monomial order.
class QhPolynomial {
 public:
  /// Throws DegreeMismatch, InvalidInput (duplicate monomial, zero
  /// coefficient, wrong exponent count) or InvalidInput for d <= 0.
  static QhPolynomial make(WeightVector weights, std::int64_t degree,
                           std::vector<Term> terms);

  const WeightVector& weights() const noexcept { return weights_; }
  std::int64_t degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  std::vector<Monomial> support() const;
  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;

 private:
  QhPolynomial(WeightVector weights, std::int64_t degree, std::vector<Term> terms);

  WeightVector weights_;
  std::int64_t degree_;
  std::vector<Term> terms_;
};

/// S^d(w): the monomial basis of the degree-d piece.
struct GradedPiece {
  WeightVector weights;
  std::int64_t degree = 0;
  std::vector<Monomial> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

struct WellFormedness {
  bool well_formed = true;
  /// Indices of one n-element subset whose weights share a factor.
  std::vector<std::size_t> offending;
};

/// True iff every n-element subset of the n+1 weights is coprime.
WellFormedness is_well_formed(const WeightVector& w);

/// All exponent vectors of weighted degree d, lexicographically ascending.
GradedPiece monomial_basis(const WeightVector& w, std::int64_t d);

/// I = |w| - d. Positive means K = O(-I) is anti-ample.
std::int64_t index_of(const WeightVector& w, std::int64_t d);

// Quasi-smoothness monomial-existence conditions for surfaces in P(w0..w3).

/// Condition II at vertex i: some z_i^m z_j in the support.
struct VertexClause {
  std::size_t i = 0;
  std::optional<std::size_t> j;
  std::optional<Monomial> witness;
  bool pass() const noexcept { return witness.has_value(); }
};

/// Conditions III and IV for the coordinate line through P_i and P_j.
struct PairClause {
  std::size_t i = 0;
  std::size_t j = 0;
  /// False when the clause does not apply (III with gcd(w_i, w_j) == 1).
  bool applicable = true;
  bool pass = true;
  /// One monomial supported on {i, j}, or the pair z^c z_k, z^d z_l.
  std::vector<Monomial> witnesses;
};

struct QuasiSmoothReport {
  std::vector<VertexClause> ii;
  std::vector<PairClause> iii;
  std::vector<PairClause> iv;

  bool ii_pass() const;
  bool iii_pass() const;
  bool iv_pass() const;
  bool all_pass() const { return ii_pass() && iii_pass() && iv_pass(); }
  /// First failing clause as text ("II at i=1", "IV at (0,2)"), empty if none.
  std::string first_failure() const;
};

/// Evaluates II, III and IV against `support` (monomials of degree d).
/// Throws DimensionUnsupported unless w has exactly four weights.
QuasiSmoothReport quasi_smooth_conditions(const WeightVector& w, std::int64_t d,
                                          std::span<const Monomial> support);

}  // namespace wlink
