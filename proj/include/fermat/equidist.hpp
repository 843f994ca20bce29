#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fermat {

/// Finite sequence of rationals in [0, 1].
struct PointSample {
  std::vector<mpq_class> points;

  /// Throws std::invalid_argument for an empty sample or a point outside [0, 1].
  static PointSample make(std::vector<mpq_class> pts);
  std::size_t size() const { return points.size(); }
};

/// Piecewise-linear function on [0, 1] through (t_j, v_j), 0 = t_0 < ... < t_k = 1.
struct BVFunction {
  std::vector<mpq_class> t;
  std::vector<mpq_class> v;

  static BVFunction make(std::vector<mpq_class> t, std::vector<mpq_class> v);
  static BVFunction identity();  // F(x) = x
  mpq_class operator()(const mpq_class& x) const;
  mpq_class integral() const;
};

mpq_class total_variation(const BVFunction& F);

/// sup over intervals I in [0, 1] of |len(I) - #{n : x_n in I} / N|, from the
/// sorted sample: 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i)).
mpq_class discrepancy(const PointSample& S);

/// Same quantity by scanning every interval whose endpoints lie in
/// {0, 1, x_1, ..., x_N}, in all four open/closed variants. O(N^3).
mpq_class discrepancy_brute(const PointSample& S);

struct ErdosTuran {
  double bound = 0;  // 6/(K+1) + (4/pi) sum_k |avg e(k x_n)| / k
  double discrepancy = 0;
  bool ok = false;  // discrepancy <= bound + 1e-9
};

ErdosTuran erdos_turan_bound(const PointSample& S, int K);

struct KoksmaResult {
  mpq_class lhs;  // |int F - avg F(x_n)|
  mpq_class rhs;  // V(F) D(x_n)
  bool ok = false;
};

KoksmaResult koksma_check(const BVFunction& F, const PointSample& S);

/// <p> as a subset of (Z/d)^x.
std::vector<long> subgroup_generated(long p, int d);

/// Theta_d(a_d, H) = (1/phi(d)) sum_g |int F - (1/|H|) sum_h F(<a_d g h / d>)|.
mpq_class theta_average(int d, long a_d, const std::vector<long>& H, const BVFunction& F);

struct EquidisCheck {
  mpq_class theta;  // Theta_d(1, H) for F(x) = x
  double c7 = 0;  // 12 + e^gamma / (36 pi^3) eps^-2
  double f = 0;  // log log d / |H|
  double bound = 0;  // c7 f^{1/4 - eps}
  bool ok = false;
};

EquidisCheck equidis_bound_check(int d, const std::vector<long>& H, double eps);

struct FourierCheck {
  double lhs = 0;  // (1/phi(d)) sum_g |psi_H^(k g)|
  double rhs = 0;  // beta + e^gamma log log d gcd(k, d) / (|H| beta^2)
  bool ok = false;
};

FourierCheck fourier_avg_check(int d, const std::vector<long>& H, long k, double beta);

/// theta_p(a, d) with F(x) = x, H = <p> mod d.
mpq_class theta_p(long a, int d, long p);

std::string equidist_csv_header();
std::string equidist_csv_row(int d, const std::vector<long>& H, const EquidisCheck& c);

}  // namespace fermat
