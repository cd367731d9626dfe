#pragma once

#include "psiapprox/trig_poly.hpp"

namespace psiapprox {

enum class ApproxMethod { discrete_minimax, projection, smooth_descent };

const char* to_string(ApproxMethod m) noexcept;

struct ApproxDiagnostics {
  int grid_size = 0;
  int iterations = 0;
  /// Uniform solver: max |f - t| minus the smallest |f - t| over the
  /// alternation reference. L_s solver: final gradient norm / objective.
  double residual = 0.0;
  /// Uniform solver only: min |f - t| over the alternating reference, a
  /// certified lower bound for the best approximation (de la Vallee Poussin).
  double reference_lower = 0.0;
};

struct ApproxResult {
  double error = 0.0;
  TrigPoly best_poly;
  ApproxMethod method = ApproxMethod::discrete_minimax;
  ApproxDiagnostics diagnostics;
};

struct ApproxTolerances {
  static constexpr double minimax = 1e-8;  // relative change between grids
  static constexpr double ls = 1e-8;       // gradient norm / objective
  static constexpr int grid_cap = 1 << 18;
  static constexpr int iteration_cap = 10'000;
  static constexpr double smoothing = 1e-12;
};

/// Best uniform approximation of f by trigonometric polynomials of the given
/// order (n - 1). Exchange iterations on a uniform grid of at least
/// 16 max(D, n) points, followed by exchange on the exact local extrema of
/// the error; the grid is doubled until the error changes by less than
/// ApproxTolerances::minimax. Even and odd f are solved in the cosine and
/// sine subspaces. Throws ConvergenceError at the grid cap.
ApproxResult best_uniform(const TrigPoly& f, int order);

/// Best L_s approximation, 1 < s < inf. s = 2 is the Fourier truncation;
/// otherwise damped Newton on the smoothed objective
/// int (e^2 + eps^2)^{s/2}, started at the Fourier truncation.
ApproxResult best_ls(const TrigPoly& f, double s, int order);

/// || f - S_order f ||_p.
double fourier_error(const TrigPoly& f, int order, double p);

}  // namespace psiapprox
