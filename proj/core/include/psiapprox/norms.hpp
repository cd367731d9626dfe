#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "psiapprox/psi.hpp"
#include "psiapprox/trig_poly.hpp"

namespace psiapprox {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct NormTolerances {
  static constexpr double rel = 1e-9;      // successive-refinement agreement
  static constexpr int min_grid = 256;
  static constexpr int max_grid = 1 << 20;
};

/// Samples of a 2 pi-periodic function on t_j = -pi + 2 pi j / m.
struct GridFunction {
  std::vector<double> values;
  int resolution = 0;
  std::string source;

  double t(int j) const;
};

using PeriodicFn = std::function<double(double)>;

/// m must be a power of two >= 256.
GridFunction sample(const PeriodicFn& f, int m, std::string source = "callable");
GridFunction sample(const TrigPoly& p, int m);

/// p' with 1/p + 1/p' = 1 (1 <-> inf).
double conjugate_exponent(double p);

/// L_p norm over one period, (int_0^{2 pi} |f|^p)^{1/p}, or the max for
/// p = inf. For a GridFunction this is the trapezoid value (grid max) at
/// its resolution.
double lp_norm(const GridFunction& f, double p);

/// Trapezoid rule with doubling from 256 points until two successive pairs
/// of values agree to NormTolerances::rel; the sup norm refines the largest grid
/// maxima with a three-point parabola. Throws ConvergenceError at the cap.
double lp_norm(const PeriodicFn& f, double p);

/// Norms of trigonometric polynomials: Parseval for p = 2, an exact
/// trapezoid for even integer p, segment-wise tanh-sinh quadrature between
/// the sign changes otherwise, and refined local maxima for p = inf.
double lp_norm(const TrigPoly& f, double p);

/// sup |f| with the location of the maximum.
struct SupNorm {
  double value = 0.0;
  double argmax = 0.0;
};
SupNorm sup_norm(const TrigPoly& f);

/// All local maxima of |f| on the period with |f| >= floor_ratio * max |f|
/// on a 16x oversampled grid, each refined by Brent's method.
std::vector<double> local_abs_maxima(const TrigPoly& f, double floor_ratio);

/// int_{-pi}^{pi} f g dt, exact from coefficients:
/// 2 pi a0h a0h' + pi sum (a_k a'_k + b_k b'_k).
double pairing(const TrigPoly& f, const TrigPoly& g);

/// Same integral by the trapezoid rule on a grid fine enough to be exact
/// for the product's degree; independent of the coefficient formula.
double pairing_quadrature(const TrigPoly& f, const TrigPoly& g);

/// Trapezoid pairing of sampled data with a polynomial.
double pairing(const GridFunction& f, const TrigPoly& g);

/// Closed-form value of the pairing of the extremal psi-difference with its
/// lambda = 1 counterpart:
///   pi/([eta]-n)^2 sum psi(k)(k-n)^2 + pi psi([eta])
///   + pi/([eta eta]-[eta])^2 sum psi(k)([eta eta]-k)^2.
double pairing_analytic(const PsiSpec& spec, int n);

/// (1/pi) int_{-pi}^{pi} h(x - t) g(t) dt by coefficient multiplication.
TrigPoly convolve(const TrigPoly& h, const TrigPoly& g);

}  // namespace psiapprox
