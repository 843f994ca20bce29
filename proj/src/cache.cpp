#include "fermat/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "fermat/serialize.hpp"

namespace fermat {

namespace fs = std::filesystem;

JacobiCache::JacobiCache(fs::path dir, bool quiet) : dir_(std::move(dir)), quiet_(quiet) {}

fs::path JacobiCache::resolve_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("FERMAT_ZETA_CACHE"); env && *env) return env;
  return flag_value;
}

std::string JacobiCache::key(int p, long q, const Tuple4& prim) const {
  std::ostringstream k;
  k << "j-v" << kVersion << "-p" << p << "-q" << q << "-m" << prim.d << "-" << prim.a[0] << "_" << prim.a[1] << "_"
    << prim.a[2] << "_" << prim.a[3];
  return k.str();
}

fs::path JacobiCache::path_for(int p, long q, const Tuple4& prim) const {
  return dir_ / (key(p, q, prim) + ".json");
}

std::optional<CycElement> JacobiCache::get(int p, long q, const Tuple4& prim) const {
  const fs::path path = path_for(p, q, prim);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kVersion) throw std::runtime_error("format version mismatch");
    if (j.at("key").get<std::string>() != key(p, q, prim)) throw std::runtime_error("key mismatch");
    CycElement v = cyc_from_json(j.at("value"));
    if (v.conductor() != prim.d) throw std::runtime_error("conductor mismatch");
    return v;
  } catch (const std::exception& e) {
    if (!quiet_) std::cerr << "warning: ignoring cache entry " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void JacobiCache::put(int p, long q, const Tuple4& prim, const CycElement& value) const {
  static std::atomic<unsigned long> serial{0};
  nlohmann::json j;
  j["version"] = kVersion;
  j["key"] = key(p, q, prim);
  j["value"] = to_json(value);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path path = path_for(p, q, prim);
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << serial++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) {
      if (!quiet_) std::cerr << "warning: could not write cache entry " << tmp.string() << "\n";
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    if (!quiet_) std::cerr << "warning: could not install cache entry " << path.string() << ": " << ec.message() << "\n";
    fs::remove(tmp, ec);
  }
}

}  // namespace fermat
