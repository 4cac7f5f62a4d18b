#include "wlink/milnor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wlink/errors.hpp"

namespace wlink {

CyclicDivisor::CyclicDivisor(Rational constant) : constant_(std::move(constant)) {}

CyclicDivisor CyclicDivisor::lambda(const BigInt& j, const Rational& coeff) {
  if (j < 1) {
    throw Error(ErrorCode::InvalidInput, "CyclicDivisor::lambda",
                "index must be positive, got " + j.get_str());
  }
  CyclicDivisor d;
  d.add_term(j, coeff);
  return d;
}

void CyclicDivisor::add_term(const BigInt& j, const Rational& coeff) {
  if (coeff == 0) return;
  if (j == 1) {
    constant_ += coeff;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(j, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CyclicDivisor::coefficient(const BigInt& j) const {
  if (j == 1) return constant_;
  auto it = terms_.find(j);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CyclicDivisor::is_integral() const {
  if (!wlink::is_integral(constant_)) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return wlink::is_integral(kv.second); });
}

Rational CyclicDivisor::degree() const {
  Rational deg = constant_;
  for (const auto& [j, a] : terms_) deg += a * Rational(j);
  return deg;
}

CyclicDivisor& CyclicDivisor::operator+=(const CyclicDivisor& other) {
  constant_ += other.constant_;
  for (const auto& [j, a] : other.terms_) add_term(j, a);
  return *this;
}

CyclicDivisor& CyclicDivisor::operator-=(const CyclicDivisor& other) {
  constant_ -= other.constant_;
  for (const auto& [j, a] : other.terms_) add_term(j, Rational(-a));
  return *this;
}

CyclicDivisor& CyclicDivisor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    *this = CyclicDivisor();
    return *this;
  }
  constant_ *= scalar;
  for (auto& [j, a] : terms_) a *= scalar;
  return *this;
}

CyclicDivisor operator*(const CyclicDivisor& x, const CyclicDivisor& y) {
  CyclicDivisor out(Rational(x.constant_ * y.constant_));
  if (x.constant_ != 0) {
    for (const auto& [k, b] : y.terms_) out.add_term(k, Rational(x.constant_ * b));
  }
  if (y.constant_ != 0) {
    for (const auto& [j, a] : x.terms_) out.add_term(j, Rational(y.constant_ * a));
  }
  for (const auto& [j, a] : x.terms_) {
    for (const auto& [k, b] : y.terms_) {
      const BigInt g = gcd(j, k);
      const BigInt l = lcm(j, k);
      out.add_term(l, Rational(a * b * Rational(g)));
    }
  }
  return out;
}

CyclicDivisor lambda_product(const CyclicDivisor& x, const CyclicDivisor& y) {
  return x * y;
}

std::string CyclicDivisor::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& coeff, const std::string& symbol) {
    Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) os << '-';
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (symbol.empty()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << '*';
      os << symbol;
    }
    first = false;
  };
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    emit(it->second, "L" + it->first.get_str());
  }
  if (constant_ != 0 || first) emit(constant_, "");
  return os.str();
}

namespace {

void reject_degenerate(const WeightVector& w, std::int64_t d, const char* op) {
  if (d <= 0) {
    throw Error(ErrorCode::InvalidInput, op,
                "degree must be positive, got " + std::to_string(d));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= d) {
      throw Error(ErrorCode::DegenerateFactor, op,
                  "w" + std::to_string(i) + " = " + std::to_string(w[i]) +
                      " >= d = " + std::to_string(d) + " makes d/w_i - 1 <= 0");
    }
  }
}

}  // namespace

BigInt milnor_number(const WeightVector& w, std::int64_t d) {
  reject_degenerate(w, d, "milnor_number");
  Rational mu = 1;
  for (std::int64_t wi : w.values()) {
    mu *= make_rational(BigInt(static_cast<long>(d)), BigInt(static_cast<long>(wi))) - 1;
  }
  if (!is_integral(mu) || mu <= 0) {
    throw Error(ErrorCode::NonIntegralMilnorNumber, "milnor_number",
                "product is " + to_string(mu) + " for weights " + w.str() +
                    ", d = " + std::to_string(d));
  }
  return mu.get_num();
}

CyclicDivisor divisor_of_delta(const WeightVector& w, std::int64_t d) {
  reject_degenerate(w, d, "divisor_of_delta");
  CyclicDivisor product(Rational(1));
  for (std::int64_t wi : w.values()) {
    const std::int64_t g = std::gcd(d, wi);
    const BigInt u(static_cast<long>(d / g));
    const BigInt v(static_cast<long>(wi / g));
    CyclicDivisor factor = CyclicDivisor::lambda(u, make_rational(1, v));
    factor -= CyclicDivisor(Rational(1));
    product = product * factor;
  }
  if (!product.is_integral()) {
    throw Error(ErrorCode::NonIntegralDivisor, "divisor_of_delta",
                product.str() + " for weights " + w.str() + ", d = " + std::to_string(d));
  }
  return product;
}

BigInt FactoredCharPoly::degree() const {
  BigInt deg = one_exponent;
  for (const auto& [j, a] : factors) deg += j * a;
  return deg;
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& n) {
  std::vector<BigInt> small, large;
  for (BigInt k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      small.push_back(k);
      BigInt other = n / k;
      if (other != k) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::map<BigInt, BigInt> FactoredCharPoly::cyclotomic_exponents() const {
  // t^j - 1 = prod_{m | j} Phi_m(t).
  std::map<BigInt, BigInt> exps;
  if (one_exponent != 0) exps[BigInt(1)] += one_exponent;
  for (const auto& [j, a] : factors) {
    for (const BigInt& m : divisors_of(j)) exps[m] += a;
  }
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  return exps;
}

std::string FactoredCharPoly::str() const {
  std::ostringstream os;
  os << "(t-1)^" << one_exponent.get_str();
  for (const auto& [j, a] : factors) {
    os << "*(t^" << j.get_str() << "-1)^" << a.get_str();
  }
  return os.str();
}

FactoredCharPoly factored_char_poly(const CyclicDivisor& div) {
  if (!div.is_integral()) {
    throw Error(ErrorCode::NonIntegralDivisor, "factored_char_poly", div.str());
  }
  FactoredCharPoly p;
  p.one_exponent = div.constant().get_num();
  for (const auto& [j, a] : div.terms()) p.factors.emplace(j, a.get_num());

  for (const auto& [m, e] : p.cyclotomic_exponents()) {
    if (e < 0) {
      throw Error(ErrorCode::NotAPolynomial, "factored_char_poly",
                  "primitive " + m.get_str() + "-th roots of unity get multiplicity " +
                      e.get_str() + " in " + p.str());
    }
  }
  return p;
}

std::int64_t DensePoly::degree() const {
  return static_cast<std::int64_t>(coefficients.size()) - 1;
}

BigInt DensePoly::constant_term() const {
  return coefficients.empty() ? BigInt(0) : coefficients.front();
}

BigInt DensePoly::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

namespace {

void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

using Coeffs = std::vector<BigInt>;

// `b` is short with small coefficients (a cyclotomic polynomial).
Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    const int sign = sgn(b[j]);
    if (sign == 0) continue;
    const bool unit = b[j] == 1 || b[j] == -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      mpz_ptr target = out[i + j].get_mpz_t();
      if (!unit) {
        mpz_addmul(target, a[i].get_mpz_t(), b[j].get_mpz_t());
      } else if (sign > 0) {
        mpz_add(target, target, a[i].get_mpz_t());
      } else {
        mpz_sub(target, target, a[i].get_mpz_t());
      }
    }
  }
  return out;
}

// Exact division by a monic polynomial.
Coeffs divide_monic(Coeffs num, const Coeffs& den) {
  const std::size_t dn = den.size();
  Coeffs q(num.size() - dn + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = num[k + dn - 1];
    if (q[k] == 0) continue;
    for (std::size_t i = 0; i < dn; ++i) num[k + i] -= q[k] * den[i];
  }
  for (const BigInt& r : num) {
    if (r != 0) {
      throw Error(ErrorCode::RemainderNonZero, "expand", "inexact cyclotomic division");
    }
  }
  return q;
}

// Phi_m = (t^m - 1) / prod_{e | m, e < m} Phi_e.
const Coeffs& cyclotomic(std::size_t m, std::map<std::size_t, Coeffs>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  Coeffs p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (std::size_t e = 1; e < m; ++e) {
    if (m % e == 0) p = divide_monic(std::move(p), cyclotomic(e, cache));
  }
  return cache.emplace(m, std::move(p)).first->second;
}

std::size_t as_size(const BigInt& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw Error(ErrorCode::InvalidInput, "expand",
                std::string(what) + " out of range: " + v.get_str());
  }
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

DensePoly expand(const FactoredCharPoly& p) {
  for (const auto& [m, e] : p.cyclotomic_exponents()) {
    if (e < 0) {
      throw Error(ErrorCode::NotAPolynomial, "expand", p.str());
    }
  }
  // Multiply cyclotomic factors so no intermediate degree exceeds deg Delta.
  std::map<std::size_t, Coeffs> cache;
  Coeffs poly{BigInt(1)};
  for (const auto& [m, e] : p.cyclotomic_exponents()) {
    const Coeffs& phi = cyclotomic(as_size(m, "cyclotomic index"), cache);
    for (BigInt k = 0; k < e; ++k) poly = multiply(poly, phi);
  }
  trim(poly);
  return DensePoly{std::move(poly)};
}

BigInt betti(const CyclicDivisor& div) {
  if (!div.is_integral()) {
    throw Error(ErrorCode::NonIntegralDivisor, "betti", div.str());
  }
  BigInt b = div.constant().get_num();
  for (const auto& [j, a] : div.terms()) b += a.get_num();
  if (b < 0) {
    throw Error(ErrorCode::NotAPolynomial, "betti",
                "negative multiplicity " + b.get_str() + " of t = 1 in " + div.str());
  }
  return b;
}

std::int64_t root_one_multiplicity(const DensePoly& p) {
  if (p.coefficients.empty()) {
    throw Error(ErrorCode::InvalidInput, "root_one_multiplicity", "zero polynomial");
  }
  std::vector<BigInt> c = p.coefficients;
  std::int64_t mult = 0;
  while (c.size() > 1) {
    // Horner from the top gives the quotient by (t - 1) and the value at 1.
    std::vector<BigInt> q(c.size() - 1);
    BigInt acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      acc += c[k];
      q[k - 1] = acc;
    }
    acc += c[0];
    if (acc != 0) break;
    c = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace wlink
