#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "grid.hpp"
#include "psiapprox/trig_poly.hpp"

namespace psiapprox::detail {

// Sign changes of f on [-pi, pi), located on a grid of factor * (D + 1)
// points and refined by TOMS 748. Grid points where f is exactly zero are
// returned as is. Touching zeros without a sign change are not found.
inline std::vector<double> sign_change_zeros(const TrigPoly& f, int factor) {
  constexpr double pi = std::numbers::pi;
  const int m = grid_for_degree(f.degree(), factor);
  const double h = 2.0 * pi / m;
  const auto v = sample_uniform(f, m);
  std::vector<double> zeros;
  for (int j = 0; j < m; ++j) {
    const double tj = -pi + h * j;
    const double a = v[j], b = v[(j + 1) % m];
    if (a == 0.0) {
      zeros.push_back(tj);
    } else if ((a < 0.0) != (b < 0.0) && b != 0.0) {
      std::uintmax_t iters = 100;
      boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 3);
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          [&](double t) { return f(t); }, tj, tj + h, a, b, tol, iters);
      zeros.push_back(0.5 * (lo + hi));
    }
  }
  return zeros;
}

}  // namespace psiapprox::detail
