#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "psiapprox/trig_poly.hpp"

namespace psiapprox::detail {

enum class Symmetry { even, odd, general };

inline Symmetry symmetry_of(const TrigPoly& f) {
  if (!f.has_sine_part()) return Symmetry::even;
  if (!f.has_cosine_part() && f.a0_half() == 0.0) return Symmetry::odd;
  return Symmetry::general;
}

/// Trigonometric polynomials of order <= `order` restricted to the subspace
/// matching the target's symmetry (a best approximation inherits it).
///   even:    1, cos t, ..., cos(order t)
///   odd:     sin t, ..., sin(order t)
///   general: 1, cos t, sin t, ..., cos(order t), sin(order t)
struct Basis {
  Symmetry sym = Symmetry::general;
  int order = 0;

  int size() const {
    switch (sym) {
      case Symmetry::even: return order + 1;
      case Symmetry::odd: return order;
      case Symmetry::general: return 2 * order + 1;
    }
    return 0;
  }

  void row(double t, double* out) const {
    int c = 0;
    if (sym != Symmetry::odd) out[c++] = 1.0;
    for (int k = 1; k <= order; ++k) {
      const double x = k * t;
      if (sym != Symmetry::odd) out[c++] = std::cos(x);
      if (sym != Symmetry::even) out[c++] = std::sin(x);
    }
  }

  Eigen::MatrixXd matrix(std::span<const double> ts) const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(ts.size()), size());
    std::vector<double> r(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      row(ts[i], r.data());
      for (int j = 0; j < size(); ++j) m(static_cast<Eigen::Index>(i), j) = r[j];
    }
    return m;
  }

  TrigPoly poly(const Eigen::VectorXd& c) const {
    std::vector<double> a(order, 0.0), b(order, 0.0);
    double a0h = 0.0;
    int i = 0;
    if (sym != Symmetry::odd) a0h = c[i++];
    for (int k = 1; k <= order; ++k) {
      if (sym != Symmetry::odd) a[k - 1] = c[i++];
      if (sym != Symmetry::even) b[k - 1] = c[i++];
    }
    return TrigPoly(a0h, std::move(a), std::move(b));
  }

  Eigen::VectorXd coeffs(const TrigPoly& p) const {
    Eigen::VectorXd c(size());
    int i = 0;
    if (sym != Symmetry::odd) c[i++] = p.a0_half();
    for (int k = 1; k <= order; ++k) {
      if (sym != Symmetry::odd) c[i++] = p.cos_coeff(k);
      if (sym != Symmetry::even) c[i++] = p.sin_coeff(k);
    }
    return c;
  }
};

}  // namespace psiapprox::detail
