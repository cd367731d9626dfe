#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "psiapprox/bounds.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/norms.hpp"
#include "verdict.hpp"

namespace psiapprox {

using detail::add_note;

double corollary_rate(double alpha, double r, int n, double inv_exponent) {
  const double nr = std::pow(static_cast<double>(n), r);
  const double inner = std::pow(std::numbers::ln2 / (alpha * nr) + 1.0, 1.0 / r) - 1.0;
  return std::exp(-alpha * nr) * std::pow(n * inner, inv_exponent);
}

namespace {

template <class Verify>
CorollaryResult sweep(double alpha, double r, double p, double s, double inv_exponent,
                      int n_lo, int n_hi, double beta, Verify verify) {
  const auto th = exp_family_thresholds(alpha, r);
  const std::int64_t lo = std::max<std::int64_t>(n_lo, th.n_min);
  if (lo > n_hi) {
    throw PreconditionError("empty n range after clipping to n_min=" + std::to_string(th.n_min));
  }
  const auto spec = PsiSpec::exponential(alpha, r);

  CorollaryResult out;
  out.n_first = static_cast<int>(lo);
  out.n_last = n_hi;
  OrderSummary& sum = out.summary;
  sum.min_ratio = std::numeric_limits<double>::infinity();
  sum.max_ratio = 0.0;
  for (int n = out.n_first; n <= n_hi; ++n) {
    const auto params = BoundParams::make(spec, n, beta, p, s, th.a, th.b);
    BoundReport rep = verify(params);

    // The closed-form rate must agree with psi(n)(eta(n)-n)^{e}.
    const double closed = corollary_rate(alpha, r, n, inv_exponent);
    const auto c = characteristics(spec, n);
    const double direct = spec(static_cast<double>(n)) * std::pow(c.eta_minus_t, inv_exponent);
    add_note(rep, "rate_rel_diff", std::abs(closed - direct) / direct);

    const double scale = std::exp(-alpha * std::pow(static_cast<double>(n), r)) *
                         std::pow(static_cast<double>(n), (1.0 - r) * inv_exponent);
    const double ratio = rep.measured / scale;
    add_note(rep, "order_ratio", ratio);
    if (ratio < sum.min_ratio) {
      sum.min_ratio = ratio;
      sum.n_at_min = n;
    }
    if (ratio > sum.max_ratio) {
      sum.max_ratio = ratio;
      sum.n_at_max = n;
    }
    out.reports.push_back(std::move(rep));
  }
  sum.finite = std::isfinite(sum.min_ratio) && std::isfinite(sum.max_ratio) &&
               sum.min_ratio > 0.0;
  return out;
}

}  // namespace

CorollaryResult verify_corollary1(double alpha, double r, double p, int n_lo, int n_hi,
                                  double beta, const VerifyOptions& opts) {
  if (!(p >= 1.0) || std::isinf(p)) throw PreconditionError("corollary 1 requires 1 <= p < inf");
  return sweep(alpha, r, p, 2.0, 1.0 / p, n_lo, n_hi, beta,
               [&](const BoundParams& bp) { return verify_theorem1(bp, opts); });
}

CorollaryResult verify_corollary2(double alpha, double r, double s, int n_lo, int n_hi,
                                  double beta, const VerifyOptions& opts) {
  if (!(s > 1.0)) throw PreconditionError("corollary 2 requires s > 1");
  const double s_conj = conjugate_exponent(s);
  const double inv = std::isinf(s_conj) ? 0.0 : 1.0 / s_conj;
  return sweep(alpha, r, 1.0, s, inv, n_lo, n_hi, beta,
               [&](const BoundParams& bp) { return verify_theorem2(bp, opts); });
}

}  // namespace psiapprox
