#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/charsum.hpp"

namespace fermat {

struct CheckTally {
  std::string name;
  long run = 0;
  long failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  long q = 0;
  int d = 0;
  std::vector<CheckTally> checks;
  bool ok() const;
  const CheckTally& at(const std::string& name) const;
};

struct VerifyOptions {
  // Davenport-Hasse is checked for orbits with q^{2|A|} up to this size
  std::uint64_t dh_field_cap = std::uint64_t{1} << 20;
  // units t used for the Galois check when phi(d) is larger; 0 means all
  std::size_t galois_sample = 32;
  std::uint64_t seed = 0;
  bool point_counts = true;
};

/// Every exact oracle on the surface of degree d over F_q: point counts
/// against enumeration, |Ja|^2 = q^{2|A|}, Galois equivariance, invariance
/// under a -> q a, Davenport-Hasse, direct versus Gauss-sum evaluation, the
/// functional equation, Stickelberger pairs and norm valuations, and both
/// lower bounds for P*. Failed comparisons are tallied, not thrown; faults
/// inside the engine still surface as VerificationFailure.
VerifyReport verify_surface(JacobiEngine& engine, int d, const VerifyOptions& opt = {});

nlohmann::json to_json(const VerifyReport& r);

}  // namespace fermat
