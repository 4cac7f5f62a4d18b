#pragma once
// Parallel enumeration of weighted hypersurfaces Z_d in P(w0 <= w1 <= w2 <= w3)
// of a fixed index that pass well-formedness and the quasi-smoothness
// monomial-existence conditions for a generic member of S^d(w).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlink/number.hpp"
#include "wlink/wring.hpp"

namespace wlink {

struct QuickInvariants {
  BigInt mu;
  BigInt betti;
  Rational c1_sq;

  friend bool operator==(const QuickInvariants&, const QuickInvariants&) = default;
};

struct Candidate {
  std::vector<std::int64_t> weights;  // ascending
  std::int64_t degree = 0;
  std::int64_t index = 0;
  /// Number of monomials in S^d(w).
  std::int64_t graded_dimension = 0;
  /// Absent when the link invariants are inadmissible; see skip_reason.
  std::optional<QuickInvariants> invariants;
  std::string skip_reason;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct ScanOptions {
  std::int64_t index = 1;
  std::int64_t max_weight = 1;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
};

/// Well-formed (V) and II-IV against the full basis of S^d(w), d = |w| - I.
bool passes_conditions(const WeightVector& w, std::int64_t d);

/// Lexicographic in (weights, degree) for any worker count.
/// Throws InvalidInput for index < 1 or max_weight < 1.
std::vector<Candidate> scan_candidates(const ScanOptions& options);

}  // namespace wlink
