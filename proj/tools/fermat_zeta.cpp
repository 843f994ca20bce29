// Command-line front end. Exit status: 0 success, 2 usage, 3 size cap,
// 4 failed verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <sstream>

#include "fermat/arith.hpp"
#include "fermat/bounds.hpp"
#include "fermat/cache.hpp"
#include "fermat/equidist.hpp"
#include "fermat/serialize.hpp"
#include "fermat/stick.hpp"
#include "fermat/verify.hpp"
#include "fermat/zeta.hpp"

using namespace fermat;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;
constexpr int kCap = 3;
constexpr int kVerify = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string cache_dir = "./jcache";
  int max_orbit_order = 20;
  std::uint64_t max_field = std::uint64_t{1} << 22;
  std::string emit = "json";
  std::uint64_t seed = 0;
  bool quiet = false;
};

struct Session {
  Limits lim;
  std::unique_ptr<JacobiCache> cache;

  explicit Session(const Globals& g) {
    lim.max_orbit_order = g.max_orbit_order;
    lim.max_field = g.max_field;
    cache = std::make_unique<JacobiCache>(JacobiCache::resolve_dir(g.cache_dir), g.quiet);
  }
  JacobiEngine engine(long q) { return JacobiEngine(q, lim, cache.get()); }
};

void check_q_d(long q, int d) {
  prime_power(q);
  if (d < 1) throw UsageError("--d must be >= 1");
  if (gcd(q, d) != 1) throw UsageError("--q and --d must be coprime");
}

void require_json(const Globals& g, const char* cmd) {
  if (g.emit != "json") throw UsageError(std::string(cmd) + " only emits JSON");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

Tuple4 parse_tuple(const std::string& text, int d) {
  std::array<long, 4> a{};
  std::istringstream in(text);
  std::string field;
  int k = 0;
  while (std::getline(in, field, ',')) {
    if (k >= 4) throw UsageError("--tuple needs four comma-separated integers");
    try {
      std::size_t used = 0;
      a[k++] = std::stol(field, &used);
      if (used != field.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--tuple needs four comma-separated integers");
    }
  }
  if (k != 4) throw UsageError("--tuple needs four comma-separated integers");
  try {
    return Tuple4::make(d, a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions, special values and Artin-Tate invariants of Fermat surfaces over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Jacobi-sum cache directory (FERMAT_ZETA_CACHE overrides)");
  app.add_option("--max-orbit-order", g.max_orbit_order, "Largest orbit order |A| to compute")->check(CLI::PositiveNumber);
  app.add_option("--max-field", g.max_field, "Largest finite field to tabulate")->check(CLI::PositiveNumber);
  auto* emit_opt = app.add_option("--emit", g.emit, "Output format (sweep defaults to csv)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for randomized check subsets");
  app.add_flag("--quiet", g.quiet, "Suppress warnings");

  long q = 0, p = 0;
  int d = 0, d_from = 0, d_to = 0, step = 1;
  std::string lambda_text = "full", tuple_text;
  double epsilon = 0.125;

  auto* zeta = app.add_subcommand("zeta", "Factorization of P(Lambda, T)");
  zeta->add_option("--q", q)->required();
  zeta->add_option("--d", d)->required();
  zeta->add_option("--lambda", lambda_text, "full, circ or subgroup:h0,h1,h2,h3;...");

  auto* inv = app.add_subcommand("invariants", "Rank, |Br| Reg and the Brauer-Siegel ratio");
  inv->add_option("--q", q)->required();
  inv->add_option("--d", d)->required();

  auto* sweep = app.add_subcommand("sweep", "Brauer-Siegel ratios over a range of degrees");
  sweep->add_option("--q", q)->required();
  sweep->add_option("--d-from", d_from)->required();
  sweep->add_option("--d-to", d_to)->required();
  sweep->add_option("--step", step)->check(CLI::PositiveNumber);

  auto* orb = app.add_subcommand("orbits", "q-orbits of Lambda and their statistics");
  orb->add_option("--q", q)->required();
  orb->add_option("--d", d)->required();
  orb->add_option("--lambda", lambda_text);

  auto* stick = app.add_subcommand("stickelberger", "Stickelberger valuations and weights");
  stick->add_option("--p", p)->required();
  stick->add_option("--d", d)->required();
  stick->add_option("--tuple", tuple_text, "a0,a1,a2,a3");

  auto* eq = app.add_subcommand("equidist", "Translate averages against the explicit bound");
  eq->add_option("--d", d)->required();
  eq->add_option("--subgroup-of", p)->required();
  eq->add_option("--epsilon", epsilon);

  auto* ver = app.add_subcommand("verify", "Run every exact oracle on one surface");
  ver->add_option("--q", q)->required();
  ver->add_option("--d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Session s(g);
    if (*zeta) {
      require_json(g, "zeta");
      check_q_d(q, d);
      Lambda lambda = parse_lambda(lambda_text);
      JacobiEngine E = s.engine(q);
      print(to_json(assemble(E, d, lambda)));
    } else if (*inv) {
      require_json(g, "invariants");
      check_q_d(q, d);
      JacobiEngine E = s.engine(q);
      const ZetaFactorization Z = assemble(E, d, Lambda::full());
      const FermatInvariants fi = fermat_invariants(Z);
      json j = to_json(fi);
      if (d >= 2) {
        const RankBoundCheck rb = rank_bound_check(fi);
        j["rank_bound"] = {{"bound", rb.bound}, {"ok", rb.ok}};
      }
      print(j);
    } else if (*sweep) {
      prime_power(q);
      if (d_from < 1 || d_to < d_from) throw UsageError("need 1 <= --d-from <= --d-to");
      std::vector<int> ds;
      for (int x = d_from; x <= d_to; x += step) ds.push_back(x);
      JacobiEngine E = s.engine(q);
      const SweepResult r = bs_sweep(E, ds);
      if (g.emit == "csv" || emit_opt->count() == 0) {
        std::cout << sweep_csv(r);
      } else {
        json rows = json::array();
        for (const auto& row : r.rows)
          rows.push_back({{"d", row.d},
                          {"p_g", row.p_g},
                          {"rank", row.rank},
                          {"br_reg", row.br_reg.get_str()},
                          {"bs_ratio", row.bs_ratio},
                          {"w_total", row.w_total.get_str()},
                          {"window_lo", row.window_lo},
                          {"window_hi", row.window_hi},
                          {"in_window", row.in_window}});
        json skipped = json::array();
        for (const auto& [x, why] : r.skipped) skipped.push_back({{"d", x}, {"reason", why}});
        print({{"q", q}, {"rows", rows}, {"skipped", skipped}});
      }
      for (const auto& [x, why] : r.skipped)
        if (!g.quiet) std::cerr << "skipped d = " << x << ": " << why << "\n";
      if (r.cap_exceeded) return kCap;
      for (const auto& row : r.rows)
        if (!row.in_window) {
          std::cerr << "d = " << row.d << ": ratio outside its window\n";
          return kVerify;
        }
    } else if (*orb) {
      require_json(g, "orbits");
      check_q_d(q, d);
      const Lambda lambda = parse_lambda(lambda_text);
      const auto os = orbits(q, d, lambda);
      json list = json::array();
      for (const auto& o : os) list.push_back(to_json(o));
      long size = 0;
      for (const auto& o : os) size += o.len;
      json j = {{"q", q}, {"d", d}, {"lambda", lambda.name()}, {"orbits", list}, {"lambda_size", size}};
      j["stats"] = size >= 2 ? to_json(orbit_stats(q, os)) : json(nullptr);
      print(j);
    } else if (*stick) {
      require_json(g, "stickelberger");
      if (!is_prime(p)) throw UsageError("--p must be prime");
      check_q_d(p, d);
      json j = {{"p", p}, {"d", d}};
      if (!tuple_text.empty()) {
        const Tuple4 a = parse_tuple(tuple_text, d);
        if (!a.is_circ()) throw UsageError("--tuple must have all coordinates nonzero mod d");
        j["tuple"] = {{"tuple", to_json(a)},
                      {"stickelberger", stickelberger_valuation(a, p).get_str()},
                      {"stickelberger_negated", stickelberger_valuation(a.negated(), p).get_str()},
                      {"w", w_single(a, p).get_str()}};
      }
      JacobiEngine E = s.engine(p);
      const WeightReport w = w_total(assemble(E, d, Lambda::full()), Lambda::full());
      json vals = json::array();
      for (const auto& e : w.weights)
        vals.push_back({{"rep", to_json(e.rep)}, {"stickelberger", stickelberger_valuation(e.rep, p).get_str()}});
      j["valuations"] = vals;
      j["w_report"] = to_json(w);
      print(j);
    } else if (*eq) {
      if (d < 2) throw UsageError("--d must be >= 2");
      if (gcd(p, d) != 1) throw UsageError("--subgroup-of must be coprime to --d");
      const auto H = subgroup_generated(p, d);
      const EquidisCheck c = equidis_bound_check(d, H, epsilon);
      if (g.emit == "csv") {
        std::cout << equidist_csv_header() << "\n" << equidist_csv_row(d, H, c) << "\n";
      } else {
        print({{"d", d},
               {"H_size", H.size()},
               {"theta", c.theta.get_str()},
               {"c7", c.c7},
               {"f", c.f},
               {"bound", c.bound},
               {"ok", c.ok}});
      }
    } else if (*ver) {
      require_json(g, "verify");
      check_q_d(q, d);
      JacobiEngine E = s.engine(q);
      VerifyOptions opt;
      opt.seed = g.seed;
      const VerifyReport r = verify_surface(E, d, opt);
      print(to_json(r));
      if (!r.ok()) return kVerify;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
