#include "psiapprox/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>

#include "grid.hpp"
#include "zeros.hpp"
#include "psiapprox/errors.hpp"

namespace psiapprox {

using std::numbers::pi;

double GridFunction::t(int j) const { return -pi + 2.0 * pi * j / resolution; }

namespace {

void check_resolution(int m) {
  if (m < NormTolerances::min_grid || (m & (m - 1)) != 0) {
    throw PreconditionError("grid resolution must be a power of two >= 256, got " +
                            std::to_string(m));
  }
}

void check_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("L_p norm requires p >= 1");
}

double trapezoid_pow(std::span<const double> v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return s * (2.0 * pi / static_cast<double>(v.size()));
}

// Vertex of the parabola through (-h, l), (0, c), (h, r), as an offset.
double parabola_offset(double l, double c, double r, double h) {
  const double den = l - 2.0 * c + r;
  if (den == 0.0) return 0.0;
  return std::clamp(0.5 * h * (l - r) / den, -h, h);
}

double callable_sup(const PeriodicFn& f, int m) {
  const auto g = sample(f, m);
  const int n = g.resolution;
  const double h = 2.0 * pi / n;
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = j;
  const int top = std::min(5, n);
  std::partial_sort(idx.begin(), idx.begin() + top, idx.end(), [&](int a, int b) {
    return std::abs(g.values[a]) > std::abs(g.values[b]);
  });
  double best = 0.0;
  for (int i = 0; i < top; ++i) {
    const int j = idx[i];
    const double c = std::abs(g.values[j]);
    const double l = std::abs(g.values[(j + n - 1) % n]);
    const double r = std::abs(g.values[(j + 1) % n]);
    best = std::max(best, c);
    best = std::max(best, std::abs(f(g.t(j) + parabola_offset(l, c, r, h))));
  }
  return best;
}

double segmented_norm_pow(const TrigPoly& f, double p) {
  const int m = detail::grid_for_degree(f.degree(), 16);
  const auto v = sample_uniform(f, m);
  const auto zeros = detail::sign_change_zeros(f, 16);

  if (zeros.empty()) {
    // Smooth, positive, periodic: the trapezoid rule converges spectrally.
    double prev = trapezoid_pow(v, p);
    for (int mm = 2 * m; mm <= NormTolerances::max_grid; mm *= 2) {
      const double cur = trapezoid_pow(sample_uniform(f, mm), p);
      if (std::abs(cur - prev) <= 1e-14 * cur) return cur;
      prev = cur;
    }
    throw ConvergenceError("lp_norm: trapezoid refinement cap reached");
  }

  // Two-argument form: the abscissae may round onto an endpoint, where the
  // integrand simply vanishes.
  const auto integrand = [&](double t, double) { return std::pow(std::abs(f(t)), p); };
  thread_local boost::math::quadrature::tanh_sinh<double> quad;
  double total = 0.0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const double a = zeros[i];
    const double b = i + 1 < zeros.size() ? zeros[i + 1] : zeros.front() + 2.0 * pi;
    if (b > a) total += quad.integrate(integrand, a, b, 1e-13);
  }
  return total;
}

}  // namespace

GridFunction sample(const PeriodicFn& f, int m, std::string source) {
  check_resolution(m);
  GridFunction g;
  g.resolution = m;
  g.source = std::move(source);
  g.values.resize(m);
  for (int j = 0; j < m; ++j) g.values[j] = f(g.t(j));
  return g;
}

GridFunction sample(const TrigPoly& p, int m) {
  check_resolution(m);
  GridFunction g;
  g.resolution = m;
  g.source = "trig_poly";
  g.values = sample_uniform(p, m);
  return g;
}

double conjugate_exponent(double p) {
  check_exponent(p);
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double lp_norm(const GridFunction& f, double p) {
  check_exponent(p);
  if (std::isinf(p)) {
    double mx = 0.0;
    for (double v : f.values) mx = std::max(mx, std::abs(v));
    return mx;
  }
  return std::pow(trapezoid_pow(f.values, p), 1.0 / p);
}

double lp_norm(const PeriodicFn& f, double p) {
  check_exponent(p);
  const auto value_at = [&](int m) {
    return std::isinf(p) ? callable_sup(f, m) : lp_norm(sample(f, m), p);
  };
  // Two agreements in a row: with kinks in |f| the trapezoid error is not
  // monotone in m and a single agreement can be a coincidence.
  double prev = value_at(NormTolerances::min_grid);
  int agreed = 0;
  for (int m = 2 * NormTolerances::min_grid; m <= NormTolerances::max_grid; m *= 2) {
    const double cur = value_at(m);
    agreed = std::abs(cur - prev) <= NormTolerances::rel * std::abs(cur) ? agreed + 1 : 0;
    if (agreed == 2) return cur;
    prev = cur;
  }
  throw ConvergenceError("lp_norm: no convergence at grid cap 2^20");
}

std::vector<double> local_abs_maxima(const TrigPoly& f, double floor_ratio) {
  const int m = detail::grid_for_degree(f.degree(), 16);
  const double h = 2.0 * pi / m;
  const auto v = sample_uniform(f, m);
  double top = 0.0;
  for (double x : v) top = std::max(top, std::abs(x));
  std::vector<double> out;
  if (top == 0.0) return out;

  const auto neg_abs = [&](double t) { return -std::abs(f(t)); };
  for (int j = 0; j < m; ++j) {
    const double c = std::abs(v[j]);
    const double l = std::abs(v[(j + m - 1) % m]);
    const double r = std::abs(v[(j + 1) % m]);
    if (c < floor_ratio * top || c < l || c < r || (c == l && c == r)) continue;
    if (c == l && j > 0) continue;  // plateau: keep its first point only
    const double tj = -pi + h * j;
    const auto [t_best, val] = boost::math::tools::brent_find_minima(
        neg_abs, tj - h, tj + h, std::numeric_limits<double>::digits / 2);
    out.push_back(-val >= c ? t_best : tj);
  }
  return out;
}

SupNorm sup_norm(const TrigPoly& f) {
  SupNorm s;
  if (f.degree() == 0) {
    s.value = std::abs(f.a0_half());
    return s;
  }
  for (double t : local_abs_maxima(f, 0.9)) {
    const double v = std::abs(f(t));
    if (v > s.value) {
      s.value = v;
      s.argmax = std::remainder(t, 2.0 * pi);
    }
  }
  return s;
}

double lp_norm(const TrigPoly& f, double p) {
  check_exponent(p);
  if (f.is_zero()) return 0.0;
  if (std::isinf(p)) return sup_norm(f).value;
  if (p == 2.0) {
    double s = 2.0 * f.a0_half() * f.a0_half();
    for (int k = 1; k <= f.degree(); ++k) {
      s += f.cos_coeff(k) * f.cos_coeff(k) + f.sin_coeff(k) * f.sin_coeff(k);
    }
    return std::sqrt(pi * s);
  }
  if (p == std::floor(p) && static_cast<long>(p) % 2 == 0 && p <= 64) {
    // |f|^p = f^p is a trigonometric polynomial of degree p D.
    const int m = detail::grid_for_degree(static_cast<int>(p) * f.degree(), 2);
    return std::pow(trapezoid_pow(sample_uniform(f, m), p), 1.0 / p);
  }
  if (f.degree() == 0) return std::abs(f.a0_half()) * std::pow(2.0 * pi, 1.0 / p);
  return std::pow(segmented_norm_pow(f, p), 1.0 / p);
}

double pairing(const TrigPoly& f, const TrigPoly& g) {
  double s = 2.0 * f.a0_half() * g.a0_half();
  const int d = std::min(f.degree(), g.degree());
  double h = 0.0;
  for (int k = 1; k <= d; ++k) {
    h += f.cos_coeff(k) * g.cos_coeff(k) + f.sin_coeff(k) * g.sin_coeff(k);
  }
  return pi * (s + h);
}

double pairing_quadrature(const TrigPoly& f, const TrigPoly& g) {
  const int m = detail::grid_for_degree(f.degree() + g.degree(), 2);
  const auto fv = sample_uniform(f, m);
  const auto gv = sample_uniform(g, m);
  double s = 0.0;
  for (int j = 0; j < m; ++j) s += fv[j] * gv[j];
  return s * (2.0 * pi / m);
}

double pairing(const GridFunction& f, const TrigPoly& g) {
  check_resolution(f.resolution);
  const auto gv = sample_uniform(g, f.resolution);
  double s = 0.0;
  for (int j = 0; j < f.resolution; ++j) s += f.values[j] * gv[j];
  return s * (2.0 * pi / f.resolution);
}

double pairing_analytic(const PsiSpec& spec, int n) {
  const auto idx = extremal_indices(spec, n);
  const int e = idx.eta_floor, ee = idx.eta_eta_floor;
  const auto psi = [&](int k) { return spec(static_cast<double>(k)); };

  double ramp_up = 0.0;
  for (int k = n + 1; k <= e - 1; ++k) {
    const double w = k - n;
    ramp_up += psi(k) * w * w;
  }
  double ramp_down = 0.0;
  for (int k = e + 1; k <= ee - 1; ++k) {
    const double w = ee - k;
    ramp_down += psi(k) * w * w;
  }
  const double g1 = e - n, g2 = ee - e;
  return pi * ramp_up / (g1 * g1) + pi * psi(e) + pi * ramp_down / (g2 * g2);
}

TrigPoly convolve(const TrigPoly& h, const TrigPoly& g) {
  const int d = std::min(h.degree(), g.degree());
  std::vector<double> a(d), b(d);
  for (int k = 1; k <= d; ++k) {
    const double ha = h.cos_coeff(k), hb = h.sin_coeff(k);
    const double ga = g.cos_coeff(k), gb = g.sin_coeff(k);
    a[k - 1] = ha * ga - hb * gb;
    b[k - 1] = ha * gb + hb * ga;
  }
  return TrigPoly(2.0 * h.a0_half() * g.a0_half(), std::move(a), std::move(b));
}

}  // namespace psiapprox
