#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fermat/cyclo.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

/// On-disk store of Jacobi sums, one JSON file per key
/// (p, q, d_a, primitive tuple). Writes go to a temporary file that is renamed
/// into place, so readers never observe a partial entry. A file that fails to
/// parse, carries another format version or names a different key is a miss.
class JacobiCache {
 public:
  static constexpr int kVersion = 1;

  explicit JacobiCache(std::filesystem::path dir, bool quiet = false);

  /// FERMAT_ZETA_CACHE if set, otherwise the given directory.
  static std::filesystem::path resolve_dir(const std::string& flag_value);

  const std::filesystem::path& dir() const { return dir_; }
  std::string key(int p, long q, const Tuple4& prim) const;
  std::filesystem::path path_for(int p, long q, const Tuple4& prim) const;

  std::optional<CycElement> get(int p, long q, const Tuple4& prim) const;
  void put(int p, long q, const Tuple4& prim, const CycElement& value) const;

 private:
  std::filesystem::path dir_;
  bool quiet_;
};

}  // namespace fermat
