#pragma once

#include "psiapprox/psi.hpp"
#include "psiapprox/trig_poly.hpp"

namespace psiapprox {

/// Psi_{beta,n}(t) = sum_{k >= n} psi(k) cos(kt - beta pi / 2).
struct KernelSpec {
  PsiSpec psi;
  double beta = 0.0;
  int n = 1;
};

/// |t| at and above which kernel_eval uses the summation-by-parts series:
/// 1 / (eta(n) - n).
double kernel_switch_point(const KernelSpec& k);

/// Smallest K >= n with psi(K) + (bound on the integral of psi over
/// [K, inf)) <= tol, so that sum_{k >= K} psi(k) <= tol.
int kernel_direct_terms(const KernelSpec& k, double tol);

/// Direct partial sum sum_{k=n}^{K-1} with the certified tail above.
double kernel_eval_direct(const KernelSpec& k, double t, double tol);

/// Summation by parts:
///   Psi_{beta,n}(t) = sum_{k >= n} (psi(k) - psi(k+1)) D_{k,beta}(t)
///                     - psi(n) D_{n-1,beta}(t).
/// The minus sign on the boundary term is what summation by parts gives
/// (D_k - D_{k-1} is the k-th term); it is also cross-checked against the
/// direct partial sums in the tests. The tail beyond K is bounded by
/// psi(K) pi / |t| since |D_{k,beta}(t)| <= pi / |t|. Requires t != 0 mod 2 pi.
double kernel_eval_abel(const KernelSpec& k, double t, double tol);

/// Dispatches on |t| against kernel_switch_point(); both paths agree within
/// 2 tol. Throws ConvergenceError past the term cap.
double kernel_eval(const KernelSpec& k, double t, double tol);

/// Psi_{beta,n} truncated to a trigonometric polynomial with
/// sup |Psi_{beta,n} - poly| <= tail_bound <= tol.
struct TruncatedKernel {
  TrigPoly poly;
  int terms_end = 0;  // harmonics n..terms_end-1 are kept
  double tail_bound = 0.0;
};

TruncatedKernel truncate_kernel(const KernelSpec& k, double tol);

}  // namespace psiapprox
