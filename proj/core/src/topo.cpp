#include "wlink/topo.hpp"

#include "wlink/errors.hpp"

namespace wlink {

std::int64_t connectivity(std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidInput, "connectivity",
                "need n >= 2, got " + std::to_string(n));
  }
  return n - 2;
}

std::string LinkClassification::str() const {
  switch (verdict) {
    case LinkVerdict::Sphere: return "S5";
    case LinkVerdict::ConnectedSumS2xS3:
      return betti == 1 ? std::string("S2xS3") : betti.get_str() + "#(S2xS3)";
    case LinkVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

LinkClassification classify_5d(const BigInt& b2, bool torsion_free) {
  if (b2 < 0) {
    throw Error(ErrorCode::InvalidInput, "classify_5d",
                "negative Betti number " + b2.get_str());
  }
  LinkClassification c;
  c.betti = b2;
  c.torsion_free_assumed = torsion_free;
  if (!torsion_free) {
    c.verdict = LinkVerdict::Unknown;
    c.reason = "torsion not ruled out";
  } else if (b2 == 0) {
    c.verdict = LinkVerdict::Sphere;
  } else {
    c.verdict = LinkVerdict::ConnectedSumS2xS3;
  }
  return c;
}

}  // namespace wlink
