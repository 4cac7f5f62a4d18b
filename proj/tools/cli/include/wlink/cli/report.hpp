#pragma once
// The aggregated invariant report and its exact JSON and text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wlink/cli/input.hpp"
#include "wlink/klt.hpp"
#include "wlink/milnor.hpp"
#include "wlink/moduli.hpp"
#include "wlink/orb.hpp"
#include "wlink/scan.hpp"
#include "wlink/topo.hpp"

namespace wlink::cli {

struct ConditionsBlock {
  bool well_formed = true;
  std::vector<std::size_t> offending;
  /// Present when f was given on four weights.
  std::optional<bool> ii;
  std::optional<bool> iii;
  std::optional<bool> iv;
  std::string first_failure;

  friend bool operator==(const ConditionsBlock&, const ConditionsBlock&) = default;
};

struct LinkBlock {
  BigInt mu;
  CyclicDivisor divisor;
  FactoredCharPoly char_poly;
  std::optional<DensePoly> char_poly_dense;
  BigInt betti;
  std::int64_t connectivity = 0;
  LinkClassification classification;

  friend bool operator==(const LinkBlock&, const LinkBlock&) = default;
};

struct InvariantReport {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;
  std::int64_t index = 0;
  std::optional<ConditionsBlock> conditions;
  std::optional<LinkBlock> link;
  std::optional<OrbifoldReport> orbifold;
  std::optional<ModuliReport> moduli;
  std::optional<KltCertificate> klt;
  std::optional<SplittingCheck> splitting;
  std::vector<std::string> warnings;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct Sections {
  bool conditions = false;
  bool link = false;
  bool orbifold = false;
  bool moduli = false;
  bool klt = false;
  /// When false, inadmissible results in the orbifold, moduli and klt blocks
  /// drop the block and add a warning instead of failing the whole report.
  bool strict = true;

  static Sections full_report() { return {true, true, true, true, true, false}; }
};

struct ReportOptions {
  bool expand = false;
  /// Dense expansion is skipped above this Milnor number.
  std::int64_t expand_limit = 200000;
};

InvariantReport build_report(const InputDescription& input, const Sections& sections,
                             const ReportOptions& options = {});

// JSON: every integer is a decimal string and every rational a "p/q" string.
nlohmann::ordered_json to_json(const InvariantReport& report);
InvariantReport report_from_json(const nlohmann::ordered_json& doc);
std::string render_json(const InvariantReport& report);

/// Human-readable rendering; mixed numbers and the cyclotomic form of Delta.
std::string render_text(const InvariantReport& report);

/// "10 + 8/15", "-7 + 1/45", "2/15", "0".
std::string mixed_number(const Rational& value);

/// Delta as a product of cyclotomic binomials t^{2^k} + 1 when every factor
/// is of that shape, e.g. "(t-1)^9(t+1)^8(t^2+1)^9(t^4+1)^9(t^8+1)^9";
/// otherwise the (t^j-1) product.
std::string render_char_poly(const FactoredCharPoly& p);

nlohmann::ordered_json candidate_to_json(const Candidate& c);

}  // namespace wlink::cli
