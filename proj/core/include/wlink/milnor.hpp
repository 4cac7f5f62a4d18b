#pragma once
// Milnor number and characteristic polynomial of the monodromy for links of
// weighted homogeneous singularities.
//
// Divisors of monic polynomials with roots on the unit circle live in the
// group ring Z[C*]. With Lambda_n = div(t^n - 1) the products obey
//   Lambda_a * Lambda_b = gcd(a, b) * Lambda_lcm(a, b),
// and Lambda_1 = <1> is the ring unit, so it is folded into the constant.

#include <cstdint>
#include <map>
#include <vector>

#include "wlink/number.hpp"
#include "wlink/wring.hpp"

namespace wlink {

/// constant + sum_j a_j Lambda_j with j >= 2. Zero coefficients are never
/// stored. Coefficients are rational so that intermediate factors such as
/// Lambda_16 / 5 are representable.
class CyclicDivisor {
 public:
  using Terms = std::map<BigInt, Rational>;

  CyclicDivisor() = default;
  explicit CyclicDivisor(Rational constant);

  /// coeff * Lambda_j; j == 1 folds into the constant.
  static CyclicDivisor lambda(const BigInt& j, const Rational& coeff = Rational(1));

  const Rational& constant() const noexcept { return constant_; }
  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(const BigInt& j) const;

  bool is_zero() const noexcept { return constant_ == 0 && terms_.empty(); }
  bool is_integral() const;

  /// Number of roots counted with multiplicity: constant + sum_j a_j * j.
  Rational degree() const;

  CyclicDivisor& operator+=(const CyclicDivisor& other);
  CyclicDivisor& operator-=(const CyclicDivisor& other);
  CyclicDivisor& operator*=(const Rational& scalar);

  friend CyclicDivisor operator+(CyclicDivisor a, const CyclicDivisor& b) { return a += b; }
  friend CyclicDivisor operator-(CyclicDivisor a, const CyclicDivisor& b) { return a -= b; }
  friend CyclicDivisor operator*(const CyclicDivisor& a, const CyclicDivisor& b);
  friend bool operator==(const CyclicDivisor&, const CyclicDivisor&) = default;

  /// e.g. "9*L16 - L2 + 1".
  std::string str() const;

 private:
  void add_term(const BigInt& j, const Rational& coeff);

  Rational constant_ = 0;
  Terms terms_;
};

CyclicDivisor lambda_product(const CyclicDivisor& x, const CyclicDivisor& y);

/// Delta(t) = (t-1)^c * prod_j (t^j - 1)^{a_j} with integer exponents.
struct FactoredCharPoly {
  BigInt one_exponent = 0;
  std::map<BigInt, BigInt> factors;  // j >= 2 -> a_j, never zero

  BigInt degree() const;
  /// Multiplicity of the primitive m-th roots of unity, i.e. the exponent of
  /// the cyclotomic polynomial Phi_m. Only non-zero entries are listed.
  std::map<BigInt, BigInt> cyclotomic_exponents() const;
  /// "(t-1)^1*(t^16-1)^9*(t^2-1)^-1" with factors in ascending j.
  std::string str() const;

  friend bool operator==(const FactoredCharPoly&, const FactoredCharPoly&) = default;
};

/// Integer coefficients in ascending degree; empty means the zero polynomial.
struct DensePoly {
  std::vector<BigInt> coefficients;

  std::int64_t degree() const;  // -1 for zero
  BigInt constant_term() const;
  BigInt evaluate(const BigInt& t) const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

/// mu = prod_i (d / w_i - 1). Throws DegenerateFactor when some w_i >= d and
/// NonIntegralMilnorNumber when the product is not a positive integer.
BigInt milnor_number(const WeightVector& w, std::int64_t d);

/// div Delta = prod_i ((1/v_i) Lambda_{u_i} - 1) where d / w_i = u_i / v_i in
/// lowest terms. Throws DegenerateFactor (w_i >= d) or NonIntegralDivisor.
CyclicDivisor divisor_of_delta(const WeightVector& w, std::int64_t d);

/// Reads off c and a_j. Throws NonIntegralDivisor for rational coefficients
/// and NotAPolynomial when some cyclotomic multiplicity would be negative.
FactoredCharPoly factored_char_poly(const CyclicDivisor& div);

/// Dense expansion by exact multiplication and remainder-free division.
/// Throws NotAPolynomial for invalid input; RemainderNonZero is an internal
/// consistency failure.
DensePoly expand(const FactoredCharPoly& p);

/// Betti number b_n = b_{n-1}: the number of factors (t - 1) in Delta,
/// c + sum_j a_j.
BigInt betti(const CyclicDivisor& div);

/// Multiplicity of the root t = 1, by repeated synthetic division.
std::int64_t root_one_multiplicity(const DensePoly& p);

}  // namespace wlink
