#include "upoly.hpp"

#include "wlink/errors.hpp"

namespace wlink::detail {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> m = c_;
  const Rational lead = c_.back();
  for (Rational& x : m) x /= lead;
  return QPoly(std::move(m));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::InvalidInput, "QPoly::divmod", "division by zero polynomial");
  }
  std::vector<Rational> rem = a.c_;
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational factor = rem[k + b.degree()] / b.leading();
    quo[k] = factor;
    for (int t = 0; t <= b.degree(); ++t) rem[k + t] -= factor * b.c_[t];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int distinct_root_count(const QPoly& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::InvalidInput, "distinct_root_count", "zero polynomial");
  }
  const QPoly g = QPoly::gcd(p, p.derivative());
  return QPoly::divmod(p, g).first.degree();
}

}  // namespace wlink::detail
