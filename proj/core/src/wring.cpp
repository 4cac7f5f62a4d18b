#include "wlink/wring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wlink/errors.hpp"

namespace wlink {

WeightVector::WeightVector(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  total_ = std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

WeightVector WeightVector::validate(std::span<const std::int64_t> raw) {
  if (raw.size() < 3) {
    throw Error(ErrorCode::InvalidInput, "validate_weights",
                "need at least 3 weights, got " + std::to_string(raw.size()));
  }
  std::int64_t g = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 1) {
      throw Error(ErrorCode::NonPositiveWeight, "validate_weights",
                  "w" + std::to_string(i) + " = " + std::to_string(raw[i]));
    }
    g = std::gcd(g, raw[i]);
  }
  if (g != 1) {
    throw Error(ErrorCode::NonCoprimeWeights, "validate_weights",
                "common factor " + std::to_string(g));
  }
  return WeightVector(std::vector<std::int64_t>(raw.begin(), raw.end()));
}

BigInt WeightVector::product() const {
  BigInt p = 1;
  for (std::int64_t w : weights_) p *= static_cast<long>(w);
  return p;
}

std::string WeightVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) os << ',';
    os << weights_[i];
  }
  os << ')';
  return os.str();
}

WeightVector validate_weights(std::span<const std::int64_t> raw) {
  return WeightVector::validate(raw);
}

std::int64_t Monomial::weighted_degree(const WeightVector& w) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * w[i];
  return d;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) s.push_back(i);
  }
  return s;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'z' + std::to_string(i);
    if (exponents[i] != 1) out += '^' + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

QhPolynomial::QhPolynomial(WeightVector weights, std::int64_t degree,
                           std::vector<Term> terms)
    : weights_(std::move(weights)), degree_(degree), terms_(std::move(terms)) {}

QhPolynomial QhPolynomial::make(WeightVector weights, std::int64_t degree,
                                std::vector<Term> terms) {
  if (degree <= 0) {
    throw Error(ErrorCode::InvalidInput, "QhPolynomial",
                "degree must be positive, got " + std::to_string(degree));
  }
  for (const Term& t : terms) {
    if (t.monomial.exponents.size() != weights.size()) {
      throw Error(ErrorCode::InvalidInput, "QhPolynomial",
                  "monomial " + t.monomial.str() + " has " +
                      std::to_string(t.monomial.exponents.size()) +
                      " exponents for " + std::to_string(weights.size()) + " weights");
    }
    if (std::any_of(t.monomial.exponents.begin(), t.monomial.exponents.end(),
                    [](int e) { return e < 0; })) {
      throw Error(ErrorCode::InvalidInput, "QhPolynomial",
                  "negative exponent in monomial");
    }
    if (t.coefficient == 0) {
      throw Error(ErrorCode::InvalidInput, "QhPolynomial",
                  "zero coefficient on " + t.monomial.str());
    }
    const std::int64_t deg = t.monomial.weighted_degree(weights);
    if (deg != degree) {
      throw Error(ErrorCode::DegreeMismatch, "QhPolynomial",
                  t.monomial.str() + " has weighted degree " + std::to_string(deg) +
                      ", expected " + std::to_string(degree));
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].monomial == terms[k - 1].monomial) {
      throw Error(ErrorCode::InvalidInput, "QhPolynomial",
                  "duplicate monomial " + terms[k].monomial.str());
    }
  }
  return QhPolynomial(std::move(weights), degree, std::move(terms));
}

std::vector<Monomial> QhPolynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const Term& t : terms_) s.push_back(t.monomial);
  return s;
}

Rational QhPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational(0);
}

WellFormedness is_well_formed(const WeightVector& w) {
  const std::size_t n1 = w.size();
  for (std::size_t skip = 0; skip < n1; ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      if (i != skip) g = std::gcd(g, w[i]);
    }
    if (g != 1) {
      WellFormedness r{false, {}};
      for (std::size_t i = 0; i < n1; ++i) {
        if (i != skip) r.offending.push_back(i);
      }
      return r;
    }
  }
  return {};
}

namespace {

void enumerate(const WeightVector& w, std::size_t var, std::int64_t remaining,
               std::vector<int>& current, std::vector<Monomial>& out) {
  const std::int64_t wi = w[var];
  if (var + 1 == w.size()) {
    if (remaining % wi == 0) {
      current[var] = static_cast<int>(remaining / wi);
      out.push_back(Monomial{current});
    }
    return;
  }
  for (std::int64_t e = 0; e * wi <= remaining; ++e) {
    current[var] = static_cast<int>(e);
    enumerate(w, var + 1, remaining - e * wi, current, out);
  }
  current[var] = 0;
}

}  // namespace

GradedPiece monomial_basis(const WeightVector& w, std::int64_t d) {
  GradedPiece piece{w, d, {}};
  if (d < 0) return piece;
  std::vector<int> current(w.size(), 0);
  enumerate(w, 0, d, current, piece.basis);
  return piece;
}

std::int64_t index_of(const WeightVector& w, std::int64_t d) { return w.total() - d; }

bool QuasiSmoothReport::ii_pass() const {
  return std::all_of(ii.begin(), ii.end(), [](const VertexClause& c) { return c.pass(); });
}

bool QuasiSmoothReport::iii_pass() const {
  return std::all_of(iii.begin(), iii.end(), [](const PairClause& c) { return c.pass; });
}

bool QuasiSmoothReport::iv_pass() const {
  return std::all_of(iv.begin(), iv.end(), [](const PairClause& c) { return c.pass; });
}

std::string QuasiSmoothReport::first_failure() const {
  for (const auto& c : ii) {
    if (!c.pass()) return "II at i=" + std::to_string(c.i);
  }
  auto pair_failure = [](const char* label, const std::vector<PairClause>& clauses) {
    for (const auto& c : clauses) {
      if (!c.pass) {
        return std::string(label) + " at (" + std::to_string(c.i) + "," +
               std::to_string(c.j) + ")";
      }
    }
    return std::string();
  };
  if (auto s = pair_failure("III", iii); !s.empty()) return s;
  return pair_failure("IV", iv);
}

namespace {

bool supported_on(const Monomial& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.exponents.size(); ++k) {
    if (k != i && k != j && m.exponents[k] != 0) return false;
  }
  return true;
}

// z_i^{c_i} z_j^{c_j} z_k: exponent one at k, zero outside {i, j, k}.
bool is_pair_times_linear(const Monomial& m, std::size_t i, std::size_t j, std::size_t k) {
  if (m.exponents[k] != 1) return false;
  for (std::size_t t = 0; t < m.exponents.size(); ++t) {
    if (t != i && t != j && t != k && m.exponents[t] != 0) return false;
  }
  return true;
}

}  // namespace

QuasiSmoothReport quasi_smooth_conditions(const WeightVector& w, std::int64_t d,
                                          std::span<const Monomial> support) {
  if (w.size() != 4) {
    throw Error(ErrorCode::DimensionUnsupported, "quasi_smooth_conditions",
                "expected 4 weights, got " + std::to_string(w.size()));
  }
  for (const Monomial& m : support) {
    if (m.exponents.size() != 4 || m.weighted_degree(w) != d) {
      throw Error(ErrorCode::DegreeMismatch, "quasi_smooth_conditions",
                  m.str() + " is not a monomial of degree " + std::to_string(d));
    }
  }
  constexpr std::size_t n1 = 4;
  QuasiSmoothReport report;

  // II: z_i^m z_j, j == i meaning a pure power of z_i.
  for (std::size_t i = 0; i < n1; ++i) {
    VertexClause clause{i, std::nullopt, std::nullopt};
    for (std::size_t j = 0; j < n1 && !clause.pass(); ++j) {
      for (const Monomial& m : support) {
        const bool shape = (j == i) ? (m.exponents[i] >= 1 && supported_on(m, i, i))
                                    : (m.exponents[j] == 1 && supported_on(m, i, j));
        if (shape) {
          clause.j = j;
          clause.witness = m;
          break;
        }
      }
    }
    report.ii.push_back(std::move(clause));
  }

  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      const Monomial* edge = nullptr;
      for (const Monomial& m : support) {
        if (supported_on(m, i, j)) {
          edge = &m;
          break;
        }
      }

      PairClause iii{i, j, std::gcd(w[i], w[j]) > 1, true, {}};
      if (iii.applicable) {
        iii.pass = edge != nullptr;
        if (edge) iii.witnesses.push_back(*edge);
      }
      report.iii.push_back(std::move(iii));

      PairClause iv{i, j, true, false, {}};
      if (edge) {
        iv.pass = true;
        iv.witnesses.push_back(*edge);
      } else {
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k < n1; ++k) {
          if (k != i && k != j) others.push_back(k);
        }
        const std::size_t k = others[0];
        const std::size_t l = others[1];
        const Monomial* mk = nullptr;
        const Monomial* ml = nullptr;
        for (const Monomial& m : support) {
          if (!mk && is_pair_times_linear(m, i, j, k)) mk = &m;
          if (!ml && is_pair_times_linear(m, i, j, l)) ml = &m;
        }
        if (mk && ml) {
          iv.pass = true;
          iv.witnesses = {*mk, *ml};
        }
      }
      report.iv.push_back(std::move(iv));
    }
  }
  return report;
}

}  // namespace wlink
