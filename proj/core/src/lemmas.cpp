#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "grid.hpp"
#include "psiapprox/bounds.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/kernel.hpp"
#include "psiapprox/norms.hpp"
#include "verdict.hpp"

namespace psiapprox {

using std::numbers::pi;
using detail::add_note;
using detail::compare_le;
using detail::finish;

namespace {

BoundReport make_report(const char* check, const BoundParams& params) {
  BoundReport r;
  r.check = check;
  r.params = params;
  return r;
}

}  // namespace

std::vector<BoundReport> verify_lemma2(const BoundParams& params, const VerifyOptions& opts) {
  const double gap = characteristics(params.spec, params.n).eta_minus_t;
  const auto d = psi_beta_derivative(extremal_difference(params.spec, params.n),
                                     params.spec, params.beta);
  std::vector<BoundReport> out;

  auto sup = make_report("lemma2_sup", params);
  sup.measured = sup_norm(d).value;
  sup.upper = (1.0 + 1.0 / (2.0 * params.a) + 1.0 / (2.0 * params.b)) * gap;
  finish(sup, opts.slack);
  out.push_back(std::move(sup));

  // |D(t)| t^2 (eta - n) / pi^2 on 1/(eta - n) <= |t| <= pi, both signs.
  auto decay = make_report("lemma2_decay", params);
  const double t0 = 1.0 / gap;
  const int m = detail::grid_for_degree(d.degree(), 16);
  double worst_ratio = 0.0, worst_t = t0;
  for (int j = 0; j <= m; ++j) {
    const double t = t0 + (pi - t0) * j / m;
    for (double u : {t, -t}) {
      const double ratio = std::abs(d(u)) * t * t * gap / (pi * pi);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst_t = u;
      }
    }
  }
  decay.measured = worst_ratio;
  decay.upper = params.a / (params.a - 1.0) + 2.0 * params.a / (params.a - 2.0);
  add_note(decay, "t_at_max", worst_t);
  add_note(decay, "samples", 2.0 * (m + 1));
  finish(decay, opts.slack);
  out.push_back(std::move(decay));
  return out;
}

std::vector<BoundReport> verify_lemma3(const BoundParams& params, const VerifyOptions& opts) {
  const auto idx = extremal_indices(params.spec, params.n);
  const double gap = idx.eta - params.n;
  const double a = params.a, b = params.b;
  std::vector<BoundReport> out;

  auto g1 = make_report("lemma3_gap", params);
  g1.lower = (1.0 - 1.0 / a) * gap;
  g1.measured = idx.lower_gap();
  g1.upper = gap;
  finish(g1, opts.slack);
  out.push_back(std::move(g1));

  auto g2 = make_report("lemma3_second_gap", params);
  g2.lower = (0.5 - 1.0 / a) * gap;
  g2.measured = idx.upper_gap();
  g2.upper = (1.0 + 1.0 / a + 1.0 / b) * gap;
  finish(g2, opts.slack);
  out.push_back(std::move(g2));

  auto inc = make_report("lemma3_increment", params);
  inc.lower = 0.5 * gap;
  inc.measured = idx.eta_eta - idx.eta;
  inc.upper = (1.0 + 1.0 / b) * gap;
  finish(inc, opts.slack);
  out.push_back(std::move(inc));
  return out;
}

BoundReport verify_statement2(const PsiSpec& spec, int m, const VerifyOptions& opts) {
  const auto c = characteristics(spec, m);
  if (!(c.mu > 2.0)) {
    throw HypothesisError("μ(" + std::to_string(m) + ")=" + detail::g17(c.mu) +
                          " ≤ 2, hypothesis violated");
  }
  BoundParams bp;
  bp.spec = spec;
  bp.n = m;
  bp.a = c.eta_minus_t;
  bp.b = c.mu;
  auto r = make_report("statement2", bp);
  r.measured = tail_integral(spec, m);
  r.upper = 2.0 / (1.0 - 2.0 / c.mu) * spec(static_cast<double>(m)) * c.eta_minus_t;
  finish(r, opts.slack);
  return r;
}

std::vector<BoundReport> hypothesis_gate(const BoundParams& params, const VerifyOptions& opts) {
  auto out = verify_lemma2(params, opts);
  for (auto& r : verify_lemma3(params, opts)) out.push_back(std::move(r));
  out.push_back(verify_statement2(params.spec, params.n, opts));
  return out;
}

std::vector<BoundReport> verify_kernel_bounds(const BoundParams& params,
                                              const VerifyOptions& opts) {
  const KernelSpec k{params.spec, params.beta, params.n};
  const double psi_n = params.spec(static_cast<double>(params.n));
  const double tol = opts.kernel_tol * psi_n;
  std::vector<BoundReport> out;

  // Samples t_j = pi j / J, j = 1..J, through the dispatching evaluator.
  auto decay = make_report("kernel_decay", params);
  constexpr int J = 1024;
  double worst_ratio = 0.0, worst_t = pi;
  for (int j = 1; j <= J; ++j) {
    const double t = pi * j / J;
    const double ratio = std::abs(kernel_eval(k, t, tol)) * t / (2.0 * pi * psi_n);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_t = t;
    }
  }
  decay.measured = worst_ratio;
  decay.upper = 1.0;
  add_note(decay, "t_at_max", worst_t);
  finish(decay, opts.slack);
  out.push_back(std::move(decay));

  auto sup = make_report("kernel_sup", params);
  sup.measured = pi * kernel_norm_upper(params.spec, params.n, params.beta, kInf,
                                        opts.kernel_tol);
  const double gap = characteristics(params.spec, params.n).eta_minus_t;
  sup.upper = (2.0 * params.b / (params.b - 2.0) + 1.0 / params.a) * psi_n * gap;
  finish(sup, opts.slack);
  out.push_back(std::move(sup));
  return out;
}

}  // namespace psiapprox
