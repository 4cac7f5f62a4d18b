#include "wlink/number.hpp"

#include <limits>

#include "wlink/errors.hpp"

namespace wlink {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidInput, "make_rational", "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  bool negative = false;
  std::string_view digits = strip_sign(text, negative);
  if (!is_digits(digits)) {
    throw Error(ErrorCode::InvalidInput, "parse_integer",
                "not an integer: '" + std::string(text) + "'");
  }
  BigInt v(std::string(digits), 10);
  if (negative) v = -v;
  return v;
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = strip_sign(text, negative);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(ErrorCode::InvalidInput, "parse_rational",
                "not a rational: '" + std::string(text) + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::InvalidInput, "parse_rational",
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  return make_rational(p, q);
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& value) {
  Rational r = value;
  if (r < 0) r = -r;
  return r;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::InvalidInput, "to_int64",
                "value out of 64-bit range: " + value.get_str());
  }
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace wlink
