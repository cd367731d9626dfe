#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "basis.hpp"
#include "grid.hpp"
#include "psiapprox/approx.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/norms.hpp"

namespace psiapprox {

using std::numbers::pi;
using detail::Basis;
using detail::Symmetry;

const char* to_string(ApproxMethod m) noexcept {
  switch (m) {
    case ApproxMethod::discrete_minimax: return "discrete-minimax";
    case ApproxMethod::projection: return "projection";
    case ApproxMethod::smooth_descent: return "smooth-descent";
  }
  return "?";
}

double fourier_error(const TrigPoly& f, int order, double p) {
  return lp_norm(f - fourier_partial_sum(f, std::max(order, 0)), p);
}

namespace {

constexpr int kExchangeCap = 200;

// Indices (into e) of an alternating set of `count` extrema that keeps the
// largest deviation: one peak per sign run, then the smallest peaks are
// dropped in ways that preserve alternation.
std::optional<std::vector<int>> alternating_extrema(const std::vector<double>& e,
                                                    int count, bool cyclic) {
  std::vector<int> peaks;
  for (int j = 0; j < static_cast<int>(e.size()); ++j) {
    if (e[j] == 0.0) continue;
    if (!peaks.empty() && (e[peaks.back()] > 0.0) == (e[j] > 0.0)) {
      if (std::abs(e[j]) > std::abs(e[peaks.back()])) peaks.back() = j;
    } else {
      peaks.push_back(j);
    }
  }
  if (cyclic && peaks.size() > 1 && (e[peaks.front()] > 0.0) == (e[peaks.back()] > 0.0)) {
    if (std::abs(e[peaks.back()]) > std::abs(e[peaks.front()])) {
      peaks.front() = peaks.back();
    }
    peaks.pop_back();
    std::sort(peaks.begin(), peaks.end());
  }
  if (static_cast<int>(peaks.size()) < count) return std::nullopt;

  const auto mag = [&](int i) { return std::abs(e[peaks[i]]); };
  while (static_cast<int>(peaks.size()) > count) {
    const int sz = static_cast<int>(peaks.size());
    const int excess = sz - count;
    int i = 0;
    for (int k = 1; k < sz; ++k) {
      if (mag(k) < mag(i)) i = k;
    }
    if (cyclic) {
      const int l = (i + sz - 1) % sz, r = (i + 1) % sz;
      const int other = mag(l) < mag(r) ? l : r;
      peaks.erase(peaks.begin() + std::max(i, other));
      peaks.erase(peaks.begin() + std::min(i, other));
    } else if (i == 0 || i == sz - 1) {
      peaks.erase(peaks.begin() + i);
    } else if (excess >= 2) {
      const int other = mag(i - 1) < mag(i + 1) ? i - 1 : i + 1;
      peaks.erase(peaks.begin() + std::max(i, other));
      peaks.erase(peaks.begin() + std::min(i, other));
    } else {
      peaks.erase(peaks.begin() + (mag(0) < mag(sz - 1) ? 0 : sz - 1));
    }
  }
  return peaks;
}

// Solve basis(t_i) c + (-1)^i E = f(t_i) on the reference.
struct Levelled {
  Eigen::VectorXd c;
  double level = 0.0;
};

Levelled solve_reference(const Basis& basis, std::span<const double> ref,
                         std::span<const double> fref) {
  const int nb = basis.size();
  const int N = nb + 1;
  Eigen::MatrixXd A(N, N);
  A.leftCols(nb) = basis.matrix(ref);
  for (int i = 0; i < N; ++i) A(i, nb) = (i % 2 == 0) ? 1.0 : -1.0;
  Eigen::VectorXd rhs(N);
  for (int i = 0; i < N; ++i) rhs[i] = fref[i];
  const Eigen::VectorXd x = A.colPivHouseholderQr().solve(rhs);
  return {x.head(nb), x[nb]};
}

bool in_domain(Symmetry sym, double t) {
  switch (sym) {
    case Symmetry::even: return t >= 0.0 && t <= pi;
    case Symmetry::odd: return t > 0.0 && t < pi;
    case Symmetry::general: return true;
  }
  return false;
}

// Reference grid on the fundamental domain of the symmetry class.
std::vector<double> domain_grid(Symmetry sym, int m) {
  std::vector<double> ts;
  const double h = 2.0 * pi / m;
  switch (sym) {
    case Symmetry::even:
      for (int j = 0; j <= m / 2; ++j) ts.push_back(h * j);
      break;
    case Symmetry::odd:
      for (int j = 1; j < m / 2; ++j) ts.push_back(h * j);
      break;
    case Symmetry::general:
      for (int j = 0; j < m; ++j) ts.push_back(-pi + h * j);
      break;
  }
  return ts;
}

// Extremal points of the Chebyshev alternant cos(nt) (or sin(nt)) as the
// starting reference.
std::vector<double> initial_reference(Symmetry sym, int n, int count) {
  std::vector<double> ts(count);
  for (int i = 0; i < count; ++i) {
    switch (sym) {
      case Symmetry::even: ts[i] = pi * i / n; break;
      case Symmetry::odd: ts[i] = pi * (i + 0.5) / n; break;
      case Symmetry::general: ts[i] = -pi + pi * i / n; break;
    }
  }
  return ts;
}

struct Stage {
  TrigPoly poly;
  double error = 0.0;
  double lower = 0.0;
  int iterations = 0;
};

Stage discrete_stage(const TrigPoly& f, const Basis& basis, int m) {
  const auto ts = domain_grid(basis.sym, m);
  const int npts = static_cast<int>(ts.size());
  const int N = basis.size() + 1;
  const Eigen::MatrixXd G = basis.matrix(ts);
  Eigen::VectorXd fv(npts);
  for (int j = 0; j < npts; ++j) fv[j] = f(ts[j]);

  std::vector<int> ref;
  const double h = ts.size() > 1 ? ts[1] - ts[0] : 1.0;
  for (double t : initial_reference(basis.sym, basis.order + 1, N)) {
    const int j = static_cast<int>(std::lround((t - ts.front()) / h));
    ref.push_back(std::clamp(j, 0, npts - 1));
  }

  Stage out;
  std::vector<double> rt(N), rf(N), e(npts);
  for (out.iterations = 1; out.iterations <= kExchangeCap; ++out.iterations) {
    for (int i = 0; i < N; ++i) {
      rt[i] = ts[ref[i]];
      rf[i] = fv[ref[i]];
    }
    const auto lv = solve_reference(basis, rt, rf);
    const Eigen::VectorXd ev = fv - G * lv.c;
    double emax = 0.0;
    for (int j = 0; j < npts; ++j) {
      e[j] = ev[j];
      emax = std::max(emax, std::abs(e[j]));
    }
    out.poly = basis.poly(lv.c);
    out.error = emax;
    out.lower = std::abs(lv.level);
    if (emax - std::abs(lv.level) <= 1e-13 * emax) break;
    auto next = alternating_extrema(e, N, basis.sym == Symmetry::general);
    if (!next || *next == ref) break;
    ref = std::move(*next);
  }
  return out;
}

// Candidate extrema of e = f - t on the fundamental domain with their values.
void continuous_extrema(const TrigPoly& e, Symmetry sym, std::vector<double>& ts,
                        std::vector<double>& vs) {
  ts.clear();
  for (double t : local_abs_maxima(e, 0.0)) {
    if (sym == Symmetry::even) t = std::min(std::abs(t), pi);
    if (in_domain(sym, t)) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-9; }),
           ts.end());
  vs.resize(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = e(ts[i]);
}

Stage continuous_stage(const TrigPoly& f, const Basis& basis, Stage start) {
  const int N = basis.size() + 1;
  std::vector<double> ts, vs, rt(N), rf(N);
  TrigPoly p = start.poly;
  Stage best = start;
  int stall = 0;
  for (int it = 1; it <= kExchangeCap; ++it) {
    continuous_extrema(f - p, basis.sym, ts, vs);
    double emax = 0.0;
    for (double v : vs) emax = std::max(emax, std::abs(v));
    const auto ref = alternating_extrema(vs, N, basis.sym == Symmetry::general);
    if (!ref) break;
    double emin = emax;
    for (int i : *ref) emin = std::min(emin, std::abs(vs[i]));

    Stage cur{p, emax, emin, start.iterations + it};
    if (it == 1 || emax - emin < 0.5 * (best.error - best.lower)) {
      stall = 0;
    } else if (++stall >= 3) {
      break;  // at the rounding floor
    }
    if (it == 1 || emax - emin < best.error - best.lower) best = cur;
    if (emax - emin <= 1e-13 * emax) break;

    for (int i = 0; i < N; ++i) {
      rt[i] = ts[(*ref)[i]];
      rf[i] = f(rt[i]);
    }
    p = basis.poly(solve_reference(basis, rt, rf).c);
  }
  return best;
}

Stage solve_at(const TrigPoly& f, const Basis& basis, int m) {
  return continuous_stage(f, basis, discrete_stage(f, basis, m));
}

}  // namespace

ApproxResult best_uniform(const TrigPoly& f, int order) {
  if (order < 0) throw PreconditionError("best_uniform: order must be >= 0");
  ApproxResult res;
  res.method = ApproxMethod::discrete_minimax;
  if (f.degree() <= order) {
    res.best_poly = f;
    return res;
  }

  const Basis basis{detail::symmetry_of(f), order};
  if (basis.size() == 0) {
    const auto s = sup_norm(f);
    res.error = s.value;
    res.diagnostics.reference_lower = s.value;
    return res;
  }

  int m = detail::grid_for_degree(std::max(f.degree(), order + 1), 16);
  Stage prev = solve_at(f, basis, m);
  for (;;) {
    if (2 * m > ApproxTolerances::grid_cap) {
      throw ConvergenceError("best_uniform: grid cap 2^18 reached");
    }
    m *= 2;
    Stage cur = solve_at(f, basis, m);
    const bool done =
        std::abs(cur.error - prev.error) <= ApproxTolerances::minimax * cur.error;
    prev = std::move(cur);
    if (done) break;
  }

  res.error = prev.error;
  res.best_poly = std::move(prev.poly);
  res.diagnostics.grid_size = m;
  res.diagnostics.iterations = prev.iterations;
  res.diagnostics.residual = prev.error - prev.lower;
  res.diagnostics.reference_lower = prev.lower;
  if (res.diagnostics.residual > 1e-6 * res.error) {
    throw ConvergenceError("best_uniform: equioscillation residual " +
                           std::to_string(res.diagnostics.residual) + " exceeds 1e-6 * error");
  }
  return res;
}

}  // namespace psiapprox
