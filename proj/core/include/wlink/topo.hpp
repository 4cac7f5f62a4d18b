#pragma once
// Topology of links: connectivity and the Smale classification of simply
// connected spin 5-manifolds.

#include <cstdint>
#include <string>

#include "wlink/number.hpp"

namespace wlink {

/// A link of an isolated singularity in C^{n+1} is (n-2)-connected.
/// Throws InvalidInput for n < 2.
std::int64_t connectivity(std::int64_t n);

enum class LinkVerdict { Sphere, ConnectedSumS2xS3, Unknown };

struct LinkClassification {
  std::int64_t dimension = 5;
  BigInt betti = 0;
  bool torsion_free_assumed = false;
  /// Recorded rather than verified: Sasaki-Einstein links are spin.
  bool spin_assumed = true;
  LinkVerdict verdict = LinkVerdict::Unknown;
  std::string reason;  // set for Unknown

  /// "S5", "S2xS3", "9#(S2xS3)" or "Unknown".
  std::string str() const;

  friend bool operator==(const LinkClassification&, const LinkClassification&) = default;
};

/// Smale: simply connected, spin and torsion-free with b2 = k gives
/// k#(S^2 x S^3) (S^5 for k = 0). Torsion-freeness must be asserted by the
/// caller; otherwise the verdict is Unknown.
LinkClassification classify_5d(const BigInt& b2, bool torsion_free);

}  // namespace wlink
