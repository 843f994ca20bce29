#include "fermat/serialize.hpp"

#include <stdexcept>

#include "fermat/arith.hpp"
#include "fermat/stick.hpp"
#include "fermat/zeta.hpp"

namespace fermat {

using nlohmann::json;

json to_json(const CycElement& x) {
  const CycElement c = x.canonical();
  const long phi = euler_phi(c.conductor());
  json coeffs = json::array();
  for (long k = 0; k < phi; ++k) coeffs.push_back(c.coeffs()[k].get_str());
  return {{"m", c.conductor()}, {"coeffs", coeffs}};
}

CycElement cyc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("coeffs")) throw std::invalid_argument("CycElement JSON: missing fields");
  const int m = j.at("m").get<int>();
  if (m < 1) throw std::invalid_argument("CycElement JSON: bad conductor");
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || static_cast<long>(arr.size()) > m) throw std::invalid_argument("CycElement JSON: bad coefficients");
  std::vector<mpz_class> c;
  for (const auto& v : arr) {
    mpz_class z;
    if (!v.is_string() || z.set_str(v.get<std::string>(), 10) != 0)
      throw std::invalid_argument("CycElement JSON: coefficient is not a decimal string");
    c.push_back(z);
  }
  return CycElement(m, c);
}

json to_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

json to_json(const QPowRational& x) {
  return {{"num", x.num().get_str()}, {"e", x.exponent()}, {"q", x.q()}, {"value", x.to_mpq().get_str()}};
}

json to_json(const Tuple4& a) { return json::array({a.a[0], a.a[1], a.a[2], a.a[3]}); }

json to_json(const OrbitRecord& o) {
  return {{"rep", to_json(o.rep)}, {"d_a", o.d_a}, {"len", o.len}, {"class", to_string(o.cls)}};
}

json to_json(const OrbitStats& s) {
  return {{"lambda_size", s.lambda_size},
          {"count", s.count},
          {"sum_log_len", s.sum_log_len},
          {"count_bound", s.count_bound},
          {"sum_log_bound", s.sum_log_bound},
          {"count_ok", s.count_ok},
          {"sum_log_ok", s.sum_log_ok},
          {"loglog_clamped", s.loglog_clamped}};
}

json to_json(const ZetaFactorization& Z) {
  // provenance (cache or fresh) is deliberately left out so that warm and
  // cold runs print the same document
  json factors = json::array();
  for (const auto& f : Z.factors) {
    json o = to_json(f.orbit);
    o["ja"] = to_json(f.ja.value);
    o["in_lambda0"] = f.in_lambda0;
    factors.push_back(o);
  }
  return {{"q", Z.q},
          {"d", Z.d},
          {"lambda", Z.lambda},
          {"lambda_size", Z.lambda_size},
          {"factors", factors},
          {"poly", to_json(Z.poly)},
          {"degree", static_cast<long>(Z.poly.size()) - 1},
          {"rho", Z.rho},
          {"pstar", to_json(Z.pstar)}};
}

json to_json(const FermatInvariants& inv) {
  json j = {{"q", inv.q},
            {"d", inv.d},
            {"p_g", inv.p_g},
            {"b2", inv.b2},
            {"rank", inv.rank},
            {"br_reg", inv.br_reg.get_str()},
            {"pstar", to_json(inv.pstar)},
            {"degree", inv.degree}};
  if (inv.bs_ratio)
    j["bs_ratio"] = *inv.bs_ratio;
  else
    j["bs_ratio"] = "undefined";
  return j;
}

json to_json(const WeightReport& w) {
  json weights = json::array();
  for (const auto& e : w.weights)
    weights.push_back({{"rep", to_json(e.rep)}, {"multiplicity", e.multiplicity}, {"w", e.w.get_str()}});
  return {{"q", w.q},
          {"d", w.d},
          {"p", w.p},
          {"lambda", w.lambda},
          {"lambda_size", w.lambda_size},
          {"weights", weights},
          {"w_total", w.w_total.get_str()},
          {"pstar_num", w.pstar_num.get_str()},
          {"pstar_e", w.pstar_e},
          {"trivial_ok", w.trivial_ok},
          {"refined_ok", w.refined_ok}};
}

}  // namespace fermat
