#pragma once
// Input files for the wlink tool (schema "1").
//
//   {
//     "schema": "1",
//     "weights": [1, 3, 5, 8],
//     "degree": 16,
//     "monomials": [{"exponents": [16, 0, 0, 0], "coefficient": "1"}, ...],
//     "assume_torsion_free": true,
//     "surface_betti_offset": 1,
//     "klt": {
//       "gamma": "11/16",
//       "generic_pencil_degree": 3,
//       "component_curve": [1, 2],
//       "hyperplane_degree": 1,
//       "vertices": [{"label": "P1", "group_order": 5, "pencil_degree": 3,
//                     "meet_order": 5}, ...]
//     }
//   }
//
// Only "weights" and "degree" are required.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlink/klt.hpp"
#include "wlink/wring.hpp"

namespace wlink::cli {

struct InputDescription {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  std::optional<std::vector<Term>> monomials;
  bool assume_torsion_free = false;
  std::int64_t surface_betti_offset = 1;
  /// Certificate data; weights, degree and index are filled from the top level.
  std::optional<KltInputs> klt;

  WeightVector weight_vector() const { return validate_weights(weights); }
  /// The polynomial, when monomials were given. Validates degrees.
  std::optional<QhPolynomial> polynomial() const;
};

/// Throws wlink::Error(InvalidInput) on malformed JSON or schema violations.
InputDescription parse_input(const std::string& json_text);
InputDescription read_input_file(const std::string& path);

}  // namespace wlink::cli
