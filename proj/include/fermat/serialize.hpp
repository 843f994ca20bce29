#pragma once

#include <json.hpp>

#include "fermat/cyclo.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

struct ZetaFactorization;
struct FermatInvariants;
struct WeightReport;

// Integers that may outgrow 64 bits are written as decimal strings. Keys are
// emitted in sorted order, so equal values always serialize to equal bytes.

/// {"m": m, "coeffs": [...]}, canonical coefficients of 1, z, ..., z^{phi(m)-1}.
nlohmann::json to_json(const CycElement& x);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
CycElement cyc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const QPowRational& x);
nlohmann::json to_json(const Tuple4& a);
nlohmann::json to_json(const OrbitRecord& o);
nlohmann::json to_json(const OrbitStats& s);
nlohmann::json to_json(const ZetaFactorization& Z);
nlohmann::json to_json(const FermatInvariants& inv);
nlohmann::json to_json(const WeightReport& w);

}  // namespace fermat
