#include "psiapprox/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "psiapprox/errors.hpp"

namespace psiapprox {
namespace {

using std::numbers::pi;

constexpr int kTermCap = 10'000'000;

double direct_tail_bound(const PsiSpec& psi, int K) {
  const double v = psi(static_cast<double>(K));
  if (v == 0.0) return 0.0;
  return v + tail_integral_bound(psi, K);
}

void check_kernel(const KernelSpec& k, double tol) {
  if (k.n < 1) throw PreconditionError("kernel: n must be >= 1");
  if (!(tol > 0.0)) throw PreconditionError("kernel: tol must be positive");
}

}  // namespace

double kernel_switch_point(const KernelSpec& k) {
  return 1.0 / characteristics(k.psi, k.n).eta_minus_t;
}

int kernel_direct_terms(const KernelSpec& k, double tol) {
  check_kernel(k, tol);
  if (direct_tail_bound(k.psi, k.n) <= tol) return k.n;

  // Doubling search for a certified K, then bisection down to the smallest.
  long lo = k.n, hi = k.n;
  while (direct_tail_bound(k.psi, static_cast<int>(hi)) > tol) {
    lo = hi;
    hi *= 2;
    if (hi > kTermCap) {
      throw ConvergenceError("kernel: more than " + std::to_string(kTermCap) +
                             " terms needed for tol");
    }
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (direct_tail_bound(k.psi, static_cast<int>(mid)) <= tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<int>(hi);
}

double kernel_eval_direct(const KernelSpec& k, double t, double tol) {
  const int K = kernel_direct_terms(k, tol);
  const auto ph = half_pi_phase(k.beta);
  double sum = 0.0;
  for (int j = K - 1; j >= k.n; --j) {
    const double x = j * t;
    sum += k.psi(static_cast<double>(j)) * (std::cos(x) * ph.c + std::sin(x) * ph.s);
  }
  return sum;
}

double kernel_eval_abel(const KernelSpec& k, double t, double tol) {
  check_kernel(k, tol);
  const double x = std::remainder(t, 2.0 * pi);
  if (x == 0.0) throw DomainError("kernel_eval_abel: t must not be 0 mod 2 pi");

  // psi(K) <= tol |x| / pi certifies the remainder.
  const double target = tol * std::abs(x) / pi;
  int K = k.n;
  if (k.psi(static_cast<double>(k.n)) > target) {
    const double t_star = psi_inverse(k.psi, std::min(target, k.psi(1.0)));
    if (!(t_star < kTermCap)) throw ConvergenceError("kernel: Abel term cap exceeded");
    K = static_cast<int>(std::ceil(t_star));
    while (k.psi(static_cast<double>(K)) > target) ++K;
  }

  double sum = 0.0;
  double next = k.psi(static_cast<double>(K));
  for (int j = K - 1; j >= k.n; --j) {
    const double cur = k.psi(static_cast<double>(j));
    sum += (cur - next) * dirichlet_closed_form(j, k.beta, x);
    next = cur;
  }
  return sum - k.psi(static_cast<double>(k.n)) * dirichlet_closed_form(k.n - 1, k.beta, x);
}

double kernel_eval(const KernelSpec& k, double t, double tol) {
  const double x = std::remainder(t, 2.0 * pi);
  if (std::abs(x) >= kernel_switch_point(k)) return kernel_eval_abel(k, x, tol);
  return kernel_eval_direct(k, x, tol);
}

TruncatedKernel truncate_kernel(const KernelSpec& k, double tol) {
  TruncatedKernel out;
  out.terms_end = kernel_direct_terms(k, tol);
  out.tail_bound = direct_tail_bound(k.psi, out.terms_end);

  const auto ph = half_pi_phase(k.beta);
  const int d = out.terms_end - 1;
  std::vector<double> a(std::max(d, 0), 0.0), b(std::max(d, 0), 0.0);
  for (int j = k.n; j <= d; ++j) {
    const double w = k.psi(static_cast<double>(j));
    a[j - 1] = w * ph.c;
    b[j - 1] = w * ph.s;
  }
  out.poly = TrigPoly(0.0, std::move(a), std::move(b));
  return out;
}

}  // namespace psiapprox
