#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace wlink::oracle {

std::vector<Exponents> brute_force_basis(const std::vector<std::int64_t>& w, std::int64_t d) {
  const std::size_t n = w.size();
  std::vector<int> limit(n);
  for (std::size_t i = 0; i < n; ++i) limit[i] = static_cast<int>(d / w[i]);
  std::vector<Exponents> out;
  Exponents e(n, 0);
  while (true) {
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += e[i] * w[i];
    if (deg == d) out.push_back(e);
    // Odometer, last index fastest, so the output is lexicographic.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (e[k] < limit[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::int64_t series_dimension(const std::vector<std::int64_t>& w, std::int64_t d) {
  if (d < 0) return 0;
  std::vector<std::int64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (std::int64_t wi : w) {
    for (std::int64_t k = wi; k <= d; ++k) ways[k] += ways[k - wi];
  }
  return ways[d];
}

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly binomial(std::int64_t j, int constant) {
  Poly p(static_cast<std::size_t>(j) + 1, BigInt(0));
  p[j] += 1;
  p[0] += constant;
  trim(p);
  return p;
}

Poly poly_pow(const Poly& a, int e) {
  Poly out{BigInt(1)};
  for (int k = 0; k < e; ++k) out = poly_mul(out, a);
  return out;
}

std::optional<Poly> poly_div_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  trim(rem);
  Poly d = den;
  trim(d);
  if (d.empty()) return std::nullopt;
  if (rem.size() < d.size()) {
    if (rem.empty()) return Poly{};
    return std::nullopt;
  }
  const BigInt& lead = d.back();
  Poly q(rem.size() - d.size() + 1, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt c = top / lead;
    q[k] = c;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= c * d[i];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

std::optional<Poly> jacobian_poincare(const std::vector<std::int64_t>& w, std::int64_t d) {
  Poly num{BigInt(1)};
  for (std::int64_t wi : w) {
    if (wi >= d) return std::nullopt;
    num = poly_mul(num, binomial(d - wi, -1));
  }
  for (std::int64_t wi : w) {
    auto q = poly_div_exact(num, binomial(wi, -1));
    if (!q) return std::nullopt;
    num = std::move(*q);
  }
  return num;
}

std::vector<BigInt> spectral_multiplicities(const std::vector<std::int64_t>& w, std::int64_t d,
                                            const Poly& poincare) {
  const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  std::vector<BigInt> mult(static_cast<std::size_t>(d), BigInt(0));
  for (std::size_t k = 0; k < poincare.size(); ++k) {
    mult[(static_cast<std::int64_t>(k) + total) % d] += poincare[k];
  }
  return mult;
}

std::vector<BigInt> factored_multiplicities(std::int64_t d, const BigInt& one_exponent,
                                            const std::map<BigInt, BigInt>& factors) {
  std::vector<BigInt> mult(static_cast<std::size_t>(d), BigInt(0));
  mult[0] += one_exponent;
  for (std::int64_t r = 0; r < d; ++r) {
    for (const auto& [j, a] : factors) {
      BigInt rj = j * r;
      if (rj % d == 0) mult[r] += a;
    }
  }
  return mult;
}

bool well_formed(const std::vector<std::int64_t>& w) {
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != skip) g = std::gcd(g, w[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

bool conditions_hold(const std::vector<std::int64_t>& w, const std::vector<Exponents>& support) {
  const std::size_t n = 4;
  auto outside_sum = [](const Exponents& m, std::size_t i, std::size_t j) {
    int s = 0;
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (t != i && t != j) s += m[t];
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const Exponents& m : support) {
      const int rest = outside_sum(m, i, i);
      if (rest == 1 || (rest == 0 && m[i] >= 1)) found = true;
    }
    if (!found) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool edge = false;
      for (const Exponents& m : support) {
        if (outside_sum(m, i, j) == 0) edge = true;
      }
      if (std::gcd(w[i], w[j]) > 1 && !edge) return false;
      if (edge) continue;
      bool via_k = false;
      bool via_l = false;
      std::vector<std::size_t> kl;
      for (std::size_t t = 0; t < n; ++t) {
        if (t != i && t != j) kl.push_back(t);
      }
      for (const Exponents& m : support) {
        if (outside_sum(m, i, j) != 1) continue;
        if (m[kl[0]] == 1) via_k = true;
        if (m[kl[1]] == 1) via_l = true;
      }
      if (!(via_k && via_l)) return false;
    }
  }
  return true;
}

std::vector<ScanHit> brute_force_scan(std::int64_t index, std::int64_t max_weight) {
  std::vector<ScanHit> hits;
  const std::int64_t W = max_weight;
  for (std::int64_t a = 1; a <= W; ++a) {
    for (std::int64_t b = a; b <= W; ++b) {
      for (std::int64_t c = b; c <= W; ++c) {
        for (std::int64_t e = c; e <= W; ++e) {
          if (std::gcd(std::gcd(a, b), std::gcd(c, e)) != 1) continue;
          const std::int64_t d = a + b + c + e - index;
          if (d < 1) continue;
          const std::vector<std::int64_t> w{a, b, c, e};
          if (!well_formed(w)) continue;
          if (!conditions_hold(w, brute_force_basis(w, d))) continue;
          hits.push_back({w, d});
        }
      }
    }
  }
  return hits;
}

Rational random_rational(std::mt19937_64& rng, int num, int den) {
  std::uniform_int_distribution<int> pn(-num, num);
  std::uniform_int_distribution<int> pd(1, den);
  Rational r(pn(rng), pd(rng));
  r.canonicalize();
  return r;
}

}  // namespace wlink::oracle
