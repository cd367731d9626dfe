#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "basis.hpp"
#include "grid.hpp"
#include "zeros.hpp"
#include "psiapprox/approx.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/norms.hpp"

namespace psiapprox {

using std::numbers::pi;
using detail::Basis;

namespace {

struct Objective {
  const Eigen::MatrixXd& G;
  const Eigen::VectorXd& fv;
  double s;
  double w;  // quadrature weight
  double eps2;

  double value(const Eigen::VectorXd& c) const {
    const Eigen::VectorXd e = fv - G * c;
    double sum = 0.0;
    for (Eigen::Index j = 0; j < e.size(); ++j) {
      sum += std::pow(e[j] * e[j] + eps2, 0.5 * s);
    }
    return w * sum;
  }
};


// Fixed tanh-sinh rule on [-1, 1], one side: `gap[k]` is the distance of
// node k from the endpoint (1 - tanh(pi/2 sinh(kh))), `weight[k]` its
// weight. Node 0 is the midpoint and appears once.
struct DeRule {
  std::vector<double> gap, weight;
};

const DeRule& de_rule() {
  static const DeRule rule = [] {
    DeRule r;
    constexpr double h = 1.0 / 16.0;
    for (int k = 0;; ++k) {
      const double u = k * h;
      const double y = 0.5 * pi * std::sinh(u);
      const double w = h * 0.5 * pi * std::cosh(u) / (std::cosh(y) * std::cosh(y));
      const double gap = 2.0 / (1.0 + std::exp(2.0 * y));
      if (w < 1e-20 || gap < 1e-300) break;
      r.gap.push_back(gap);
      r.weight.push_back(w);
    }
    return r;
  }();
  return rule;
}

struct Accurate {
  double F = 0.0;
  Eigen::VectorXd g;
  Eigen::MatrixXd H;
};

// int |e|^s with gradient and Hessian in the basis coefficients, integrated
// between consecutive zeros of e with the rule above. Within 1e-4 of a zero
// e is taken from its Taylor expansion there, which keeps |e|^{s-2} free of
// cancellation.
Accurate accurate_objective(const TrigPoly& e, const Basis& basis, double s) {
  std::vector<double> xs, ws, es;
  const auto zeros = detail::sign_change_zeros(e, 16);
  if (zeros.empty()) {
    const int m = detail::grid_for_degree(e.degree(), 32);
    for (int j = 0; j < m; ++j) {
      const double t = -pi + 2.0 * pi * j / m;
      xs.push_back(t);
      ws.push_back(2.0 * pi / m);
      es.push_back(e(t));
    }
  } else {
    const auto& rule = de_rule();
    const TrigPoly d1 = e.derivative();
    const TrigPoly d2 = d1.derivative();
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const double a = zeros[i];
      const double b = i + 1 < zeros.size() ? zeros[i + 1] : zeros.front() + 2.0 * pi;
      if (!(b > a)) continue;
      const double half = 0.5 * (b - a);
      const double near = 1e-4 * (b - a);
      const double da1 = d1(a), da2 = d2(a), db1 = d1(b), db2 = d2(b);
      for (std::size_t k = 0; k < rule.gap.size(); ++k) {
        const double delta = half * rule.gap[k];
        const double w = half * rule.weight[k];
        for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
          const double x = side == 0 ? a + delta : b - delta;
          double v;
          if (delta >= near) v = e(x);
          else if (side == 0) v = da1 * delta + 0.5 * da2 * delta * delta;
          else v = -db1 * delta + 0.5 * db2 * delta * delta;
          xs.push_back(x);
          ws.push_back(w);
          es.push_back(v);
        }
      }
    }
  }

  const auto n = static_cast<Eigen::Index>(xs.size());
  const Eigen::MatrixXd G = basis.matrix(xs);
  Eigen::VectorXd wg(n), wh(n);
  Accurate out;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(es[j]);
    const double p = a > 0.0 ? std::pow(a, s - 2.0) : 0.0;
    out.F += ws[j] * p * a * a;
    wg[j] = ws[j] * p * es[j];
    wh[j] = ws[j] * p;
  }
  out.g = -s * (G.transpose() * wg);
  out.H = s * (s - 1.0) * (G.transpose() * wh.asDiagonal() * G);
  return out;
}

}  // namespace

ApproxResult best_ls(const TrigPoly& f, double s, int order) {
  if (!(s > 1.0)) throw DomainError("best_ls: s must exceed 1");
  if (std::isinf(s)) throw DomainError("best_ls: s must be finite (use best_uniform)");
  if (order < 0) throw PreconditionError("best_ls: order must be >= 0");

  ApproxResult res;
  const TrigPoly start = fourier_partial_sum(f, order);
  if (f.degree() <= order) {
    res.method = ApproxMethod::projection;
    res.best_poly = f;
    return res;
  }
  if (s == 2.0) {
    res.method = ApproxMethod::projection;
    res.best_poly = start;
    res.error = lp_norm(f - start, 2.0);
    return res;
  }

  res.method = ApproxMethod::smooth_descent;
  const Basis basis{detail::symmetry_of(f), order};
  if (basis.size() == 0) {
    res.error = lp_norm(f, s);
    return res;
  }

  // Work with f / ||f||_s so that the tolerances are scale free.
  const double scale = lp_norm(f, s);
  const int m = detail::grid_for_degree(f.degree(), 32);
  std::vector<double> ts(m);
  for (int j = 0; j < m; ++j) ts[j] = -pi + 2.0 * pi * j / m;
  const Eigen::MatrixXd G = basis.matrix(ts);
  const auto fs = sample_uniform(f, m);
  Eigen::VectorXd fv(m);
  for (int j = 0; j < m; ++j) fv[j] = fs[j] / scale;

  const double w = 2.0 * pi / m;
  const double eps2 = ApproxTolerances::smoothing * ApproxTolerances::smoothing;
  const Objective obj{G, fv, s, w, eps2};

  Eigen::VectorXd c = basis.coeffs(start) / scale;
  Eigen::VectorXd wh(m);
  const auto gradient = [&](const Eigen::VectorXd& x) {
    const Eigen::VectorXd e = fv - G * x;
    Eigen::VectorXd wg(m);
    for (int j = 0; j < m; ++j) {
      const double k = std::pow(e[j] * e[j] + eps2, 0.5 * s - 1.0);
      wg[j] = k * e[j];
      wh[j] = k;
    }
    return Eigen::VectorXd(-s * w * (G.transpose() * wg));
  };

  double F = obj.value(c);
  Eigen::VectorXd g = gradient(c);
  double gnorm = g.norm();
  int it = 0;
  for (; it < ApproxTolerances::iteration_cap; ++it) {
    if (gnorm < ApproxTolerances::ls * F) break;

    const Eigen::MatrixXd H =
        s * (s - 1.0) * w * (G.transpose() * wh.asDiagonal() * G);
    Eigen::VectorXd d = H.ldlt().solve(-g);
    if (!d.allFinite() || g.dot(d) >= 0.0) d = -g;

    // Backtracking with the Armijo condition. Close to the optimum the
    // decrease drops below the rounding level of F; a full step that halves
    // the gradient is then accepted instead.
    const double slope = g.dot(d);
    bool moved = false;
    double step = 1.0;
    for (int k = 0; k < 60 && !moved; ++k, step *= 0.5) {
      const Eigen::VectorXd cn = c + step * d;
      const double Fn = obj.value(cn);
      if (Fn <= F + 1e-4 * step * slope && Fn < F) {
        c = cn;
        F = Fn;
        moved = true;
      }
    }
    if (!moved) {
      const Eigen::VectorXd cn = c + d;
      const double Fn = obj.value(cn);
      const Eigen::VectorXd gn = gradient(cn);
      if (gn.norm() < 0.5 * gnorm && Fn <= F * (1.0 + 1e-12)) {
        c = cn;
        F = Fn;
        g = gn;
        gnorm = g.norm();
        continue;
      }
      break;
    }
    g = gradient(c);
    gnorm = g.norm();
  }

  if (it == ApproxTolerances::iteration_cap) {
    throw ConvergenceError("best_ls: iteration cap reached at s = " + std::to_string(s));
  }

  // Polish: the grid objective misplaces the optimum by the trapezoid error
  // at the kinks of |e|^s, so finish with Newton on the segment-wise
  // integrals. Stops at the tolerance or when no step decreases F.
  const TrigPoly fn = f * (1.0 / scale);
  Accurate q = accurate_objective(fn - basis.poly(c), basis, s);
  double residual = q.g.norm() / q.F;
  for (int k = 0; k < 100 && residual >= ApproxTolerances::ls; ++k, ++it) {
    Eigen::VectorXd d = q.H.ldlt().solve(-q.g);
    if (!d.allFinite() || q.g.dot(d) >= 0.0) d = -q.g;
    bool moved = false;
    double step = 1.0;
    for (int j = 0; j < 40 && !moved; ++j, step *= 0.5) {
      const Eigen::VectorXd cn = c + step * d;
      Accurate qn = accurate_objective(fn - basis.poly(cn), basis, s);
      const double rn = qn.g.norm() / qn.F;
      if (qn.F < q.F || (qn.F <= q.F * (1.0 + 1e-14) && rn < 0.5 * residual)) {
        c = cn;
        q = std::move(qn);
        residual = rn;
        moved = true;
      }
    }
    if (!moved) break;
  }
  if (residual > 1e-6) {
    throw ConvergenceError("best_ls: stalled at relative gradient " + std::to_string(residual) +
                           " for s = " + std::to_string(s));
  }

  res.best_poly = basis.poly(c * scale);
  res.error = lp_norm(f - res.best_poly, s);
  res.diagnostics.grid_size = m;
  res.diagnostics.iterations = it;
  res.diagnostics.residual = residual;
  return res;
}

}  // namespace psiapprox
