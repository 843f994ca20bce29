#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fermat {

/// A computation would exceed a configured size cap (field size, orbit order,
/// brute-force budget). Never silently skipped.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed: an exact identity that must hold did
/// not. Always indicates a fault, never a recoverable condition.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::uint64_t max_field = std::uint64_t{1} << 22;
  int max_orbit_order = 20;
  // Largest field on which the O(Q^2) direct Jacobi sum is run.
  std::uint64_t direct_cap = std::uint64_t{1} << 12;
  // Fields up to this size have every fast-path Jacobi sum re-checked against
  // the direct sum.
  std::uint64_t spot_check_cap = std::uint64_t{1} << 8;
  std::uint64_t brute_budget = 100000000;
};

/// Explicit constants for the asymptotic bounds, with the values extracted
/// from their proofs as defaults.
struct BoundConstants {
  double c5 = 9;   // number of q-orbits
  double c6 = 18;  // sum of log orbit lengths
  double C2 = 25;  // upper bound on log P*
  double c3 = 3;   // rank
  double c4 = 4;   // bad-set lemma, 4 |G_d| tau(d) / X
  // log log x is replaced by max(loglog_floor, log log x)
  double loglog_floor = 1;
};

}  // namespace fermat
