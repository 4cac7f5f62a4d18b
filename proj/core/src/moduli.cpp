#include "wlink/moduli.hpp"

#include <numeric>

#include "wlink/errors.hpp"

namespace wlink {

std::int64_t dim_graded(const WeightVector& w, std::int64_t d) {
  return static_cast<std::int64_t>(monomial_basis(w, d).dimension());
}

std::vector<std::int64_t> automorphism_counts(const WeightVector& w) {
  std::vector<std::int64_t> counts;
  counts.reserve(w.size());
  for (std::int64_t wi : w.values()) counts.push_back(dim_graded(w, wi));
  return counts;
}

std::int64_t dim_automorphism_group(const WeightVector& w) {
  const auto counts = automorphism_counts(w);
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

ModuliReport moduli_dimension(const WeightVector& w, std::int64_t d) {
  ModuliReport r;
  r.dim_graded = dim_graded(w, d);
  r.per_variable = automorphism_counts(w);
  r.dim_aut = std::accumulate(r.per_variable.begin(), r.per_variable.end(), std::int64_t{0});
  r.dim_aut_projective = r.dim_aut - 1;
  r.moduli_dim = r.dim_graded - r.dim_aut;
  if (r.moduli_dim < 0) {
    throw Error(ErrorCode::NegativeModuliDimension, "moduli_dimension",
                "dim S^" + std::to_string(d) + w.str() + " = " + std::to_string(r.dim_graded) +
                    " < dim G = " + std::to_string(r.dim_aut));
  }
  return r;
}

}  // namespace wlink
