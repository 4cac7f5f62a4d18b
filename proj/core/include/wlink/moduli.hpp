#pragma once
// Naive dimension count for the moduli of degree-d hypersurfaces in P(w):
// dim S^d(w) minus the dimension of the graded automorphism group G(w).

#include <cstdint>
#include <vector>

#include "wlink/wring.hpp"

namespace wlink {

struct ModuliReport {
  std::int64_t dim_graded = 0;
  std::int64_t dim_aut = 0;
  std::int64_t dim_aut_projective = 0;
  std::int64_t moduli_dim = 0;
  /// dim S^{w_i}(w) for each generator: the number of free coefficients in
  /// its image under an automorphism.
  std::vector<std::int64_t> per_variable;
  /// Always set: the count ignores stabilizers and ineffective parameters.
  bool effective_caveat = true;

  friend bool operator==(const ModuliReport&, const ModuliReport&) = default;
};

std::int64_t dim_graded(const WeightVector& w, std::int64_t d);

/// dim S^{w_i}(w) for every i.
std::vector<std::int64_t> automorphism_counts(const WeightVector& w);

/// dim G(w) = sum_i dim S^{w_i}(w).
std::int64_t dim_automorphism_group(const WeightVector& w);

/// Throws NegativeModuliDimension when dim S^d(w) < dim G(w).
ModuliReport moduli_dimension(const WeightVector& w, std::int64_t d);

}  // namespace wlink
