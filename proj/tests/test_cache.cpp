#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "fermat/arith.hpp"
#include "fermat/cache.hpp"
#include "fermat/charsum.hpp"
#include "fermat/serialize.hpp"
#include "fermat/stick.hpp"
#include "fermat/zeta.hpp"

using namespace fermat;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fermat-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("CycElement JSON round trip") {
    std::mt19937_64 rng(1);
    for (int m : {1, 3, 7, 12, 35}) {
      std::vector<mpz_class> c(m);
      for (auto& x : c) x = mpz_class(static_cast<long>(rng() % 2001) - 1000) * mpz_pow(10, rng() % 30);
      const CycElement x(m, c);
      const auto j = to_json(x);
      CHECK(j["coeffs"].size() == static_cast<std::size_t>(euler_phi(m)));
      CHECK(cyc_from_json(j) == x);
      CHECK(to_json(cyc_from_json(j)).dump() == j.dump());
    }
    CHECK(to_json(CycElement::constant(3, 4)).dump() == R"({"coeffs":["4","0"],"m":3})");
    CHECK_THROWS(cyc_from_json(nlohmann::json::parse(R"({"m":3})")));
    CHECK_THROWS(cyc_from_json(nlohmann::json::parse(R"({"m":3,"coeffs":[1,2]})")));
    CHECK_THROWS(cyc_from_json(nlohmann::json::parse(R"({"m":3,"coeffs":["1x"]})")));
  }

  TEST_CASE("put, get, miss") {
    TempDir tmp;
    JacobiCache cache(tmp.path, true);
    const Tuple4 a = Tuple4::make(7, {1, 1, 2, 3});
    CHECK_FALSE(cache.get(2, 2, a).has_value());
    const CycElement v = jacobi_fast(2, a);
    cache.put(2, 2, a, v);
    REQUIRE(cache.get(2, 2, a).has_value());
    CHECK(*cache.get(2, 2, a) == v);
    CHECK_FALSE(cache.get(2, 4, a).has_value());
    CHECK(cache.key(2, 2, a) == "j-v1-p2-q2-m7-1_1_2_3");
    CHECK(fs::exists(cache.path_for(2, 2, a)));
  }

  TEST_CASE("corrupt and foreign entries are misses") {
    TempDir tmp;
    JacobiCache cache(tmp.path, true);
    const Tuple4 a = Tuple4::make(5, {1, 1, 4, 4});
    const Tuple4 b = Tuple4::make(5, {1, 2, 3, 4});
    cache.put(2, 2, a, CycElement::constant(5, 16));
    {
      std::ofstream(cache.path_for(2, 2, a)) << "{\"version\": 1, \"key\": tru";
    }
    CHECK_FALSE(cache.get(2, 2, a).has_value());

    cache.put(2, 2, a, CycElement::constant(5, 16));
    auto j = nlohmann::json::parse(std::ifstream(cache.path_for(2, 2, a)));
    j["version"] = 99;
    std::ofstream(cache.path_for(2, 2, a)) << j.dump();
    CHECK_FALSE(cache.get(2, 2, a).has_value());

    // an entry copied under another key's name
    cache.put(2, 2, a, CycElement::constant(5, 16));
    fs::copy_file(cache.path_for(2, 2, a), cache.path_for(2, 2, b));
    CHECK_FALSE(cache.get(2, 2, b).has_value());
  }

  TEST_CASE("engine recomputes over a corrupt entry and rewrites it") {
    TempDir tmp;
    JacobiCache cache(tmp.path, true);
    const Tuple4 a = Tuple4::make(7, {1, 1, 2, 3});
    CycElement fresh;
    {
      JacobiEngine E(2, {}, &cache);
      fresh = E.jacobi(a).value;
      CHECK(E.counters().cache_hits == 0);
    }
    {
      JacobiEngine E(2, {}, &cache);
      const auto rec = E.jacobi(a);
      CHECK(rec.provenance == Provenance::cache);
      CHECK(rec.value == fresh);
    }
    // a wrong value with the right shape fails the absolute-value test
    cache.put(2, 2, a, CycElement::constant(7, 5));
    {
      JacobiEngine E(2, {}, &cache);
      const auto rec = E.jacobi(a);
      CHECK(rec.provenance != Provenance::cache);
      CHECK(rec.value == fresh);
    }
    CHECK(*cache.get(2, 2, a) == fresh);
  }

  TEST_CASE("concurrent puts of one key") {
    TempDir tmp;
    JacobiCache cache(tmp.path, true);
    const Tuple4 a = Tuple4::make(3, {1, 1, 2, 2});
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i)
      ts.emplace_back([&] {
        for (int k = 0; k < 20; ++k) cache.put(2, 2, a, CycElement::constant(3, 4));
      });
    for (auto& t : ts) t.join();
    REQUIRE(cache.get(2, 2, a).has_value());
    CHECK(*cache.get(2, 2, a) == CycElement::constant(3, 4));
    long files = std::distance(fs::directory_iterator(tmp.path), fs::directory_iterator());
    CHECK(files == 1);
  }

  TEST_CASE("environment override") {
    ::setenv("FERMAT_ZETA_CACHE", "/tmp/elsewhere", 1);
    CHECK(JacobiCache::resolve_dir("./jcache") == fs::path("/tmp/elsewhere"));
    ::unsetenv("FERMAT_ZETA_CACHE");
    CHECK(JacobiCache::resolve_dir("./jcache") == fs::path("./jcache"));
  }

  TEST_CASE("documents do not depend on the cache") {
    TempDir tmp;
    JacobiCache cache(tmp.path, true);
    std::string cold, warm, none;
    {
      JacobiEngine E(2, {}, &cache);
      cold = to_json(assemble(E, 7, Lambda::full())).dump();
    }
    {
      JacobiEngine E(2, {}, &cache);
      const auto Z = assemble(E, 7, Lambda::full());
      warm = to_json(Z).dump();
      CHECK(E.counters().cache_hits > 0);
    }
    {
      JacobiEngine E(2);
      none = to_json(assemble(E, 7, Lambda::full())).dump();
    }
    CHECK(cold == warm);
    CHECK(cold == none);
  }

  TEST_CASE("invariants JSON") {
    JacobiEngine E(2);
    const auto j5 = to_json(fermat_invariants(E, 5));
    CHECK(j5["br_reg"] == "1073741824");
    CHECK(j5["bs_ratio"] == 7.5);
    CHECK(to_json(fermat_invariants(E, 3))["bs_ratio"] == "undefined");
    const auto w = to_json(w_total(assemble(E, 7, Lambda::full()), Lambda::full()));
    CHECK(w["refined_ok"] == true);
  }
}
