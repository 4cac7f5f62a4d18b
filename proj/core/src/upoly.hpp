#pragma once
// Univariate polynomials over Q. Internal to the orbifold module.

#include <vector>

#include "wlink/number.hpp"

namespace wlink::detail {

/// Ascending coefficients, trailing zeros trimmed; empty is the zero polynomial.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  QPoly derivative() const;
  QPoly monic() const;

  /// Euclidean division; returns {quotient, remainder}.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Number of distinct complex roots of p (p non-zero).
int distinct_root_count(const QPoly& p);

}  // namespace wlink::detail
