#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psiapprox/psi.hpp"
#include "psiapprox/trig_poly.hpp"

namespace psiapprox {

/// C_a = pi / (96 (1 + pi^2)^2) * (a-1)^2 (a-2)^2 / (a^3 (3a-4)), a > 2.
double const_Ca(double a);

/// C_{a,b} = (1/pi) max{2b/(b-2) + 1/a, 2 pi}, a > 0, b > 2.
double const_Cab(double a, double b);

/// Constant of the pairing lower bound, pi (a-1)(a-2) / (48 (1+pi^2) a^2).
double pairing_lower_constant(double a);

/// Constant of the dual-polynomial norm bound,
/// 2 (1+pi^2) a (3a-4) / ((a-1)(a-2)). Its ratio with the pairing constant
/// above is C_a.
double dual_norm_constant(double a);

/// Parameters of one verification point. `p` is the Theorem 1 exponent
/// (p = inf only for the non-theorem sup-norm checks); `s` the Theorem 2
/// exponent. a and b must satisfy 2 < a <= eta(n) - n and 2 < b <= mu(n).
struct BoundParams {
  PsiSpec spec = PsiSpec::exponential(0.69314718055994531, 0.5);
  int n = 1;
  double beta = 0.0;
  double p = 1.0;
  double s = 2.0;
  double a = 0.0;
  double b = 0.0;

  /// Validates and throws HypothesisError naming the violated condition,
  /// e.g. "μ(4)=0.8 ≤ 2, hypothesis violated".
  static BoundParams make(PsiSpec spec, int n, double beta, double p, double s,
                          double a, double b);

  /// a = eta(n) - n - 1e-9 and b = mu(n) - 1e-9, the largest admissible values.
  static BoundParams at(PsiSpec spec, int n, double beta = 0.0, double p = 1.0,
                        double s = 2.0);

  void validate() const;
};

enum class Verdict { passed, inconclusive, failed };

const char* to_string(Verdict v) noexcept;

/// Result of one inequality check. `lower <= measured` and, when present,
/// `measured <= upper` and `aux <= upper` are asserted with a relative slack;
/// a violation within the slack is inconclusive rather than failed.
struct BoundReport {
  std::string check;
  BoundParams params;
  double lower = 0.0;
  double measured = 0.0;
  std::optional<double> upper;
  std::optional<double> aux;  // secondary measured quantity, see `check`
  Verdict verdict = Verdict::passed;
  bool passed = true;          // verdict != failed
  double margin_low = 0.0;     // measured / lower (inf when lower = 0)
  std::optional<double> margin_high;  // upper / max(measured, aux)
  std::string notes;
};

struct VerifyOptions {
  double slack = 1e-9;
  /// Kernel truncation tolerance relative to psi(n).
  double kernel_tol = 1e-10;
  /// Run the Lemma 2 / Lemma 3 / tail-integral checks first and fail the
  /// theorem check if any of them fails.
  bool gate = true;
};

/// f_p = (a-1)(a-2) / (2 (1+pi^2) a (3a-4)) (eta(n)-n)^{-(1-1/p)} times the
/// extremal difference of W-means; degree [eta(eta(n))] - 1.
TrigPoly build_extremal(const BoundParams& params);

/// Same with an explicit exponent (p = 1 for Theorem 2).
TrigPoly build_extremal(const BoundParams& params, double p);

/// ||(f_p)^psi_beta||_p <= 1. For p = inf, aux is the pointwise bound
/// (1 + 1/(2a) + 1/(2b)) (eta(n) - n) times the normalization, also <= 1.
BoundReport verify_derivative_ball(const BoundParams& params,
                                   const VerifyOptions& opts = {});

/// Theorem 1 at one point, 1 <= p < inf:
///   lower    = C_a psi(n) (eta(n)-n)^{1/p}
///   measured = best uniform error of f_p by order n-1
///   upper    = C_{a,b} (2p)^{1-1/p} psi(n) (eta(n)-n)^{1/p}
///   aux      = (1/pi) ||Psi_{beta,n}||_{p'} (certified upper estimate)
/// The alternation lower bound of the solver is also required to exceed
/// `lower`.
BoundReport verify_theorem1(const BoundParams& params, const VerifyOptions& opts = {});

/// Theorem 2 at one point, 1 < s <= inf, with f_1:
///   lower    = C_a psi(n) (eta(n)-n)^{1/s'}
///   measured = best L_s error of f_1 (uniform when s = inf)
///   upper    = C_{a,b} (2s')^{1/s} psi(n) (eta(n)-n)^{1/s'}
///   aux      = (1/pi) ||Psi_{beta,n}||_s
BoundReport verify_theorem2(const BoundParams& params, const VerifyOptions& opts = {});

/// Duality chain for f_p and the lambda = 1 dual polynomial g:
///   lower    = pairing constant * psi(n) (eta(n)-n)^{1/p}
///   measured = int f_p g (closed form)
///   aux      = ||g||_1, required <= dual_norm_constant(a)
/// and additionally: quadrature pairing = closed form to 1e-12 relative,
/// ||g||_{s'} <= dual_norm_constant(a) (eta(n)-n)^{1/s}, and
/// pairing constant / dual constant = C_a to machine precision.
BoundReport verify_duality_chain(const BoundParams& params,
                                 const VerifyOptions& opts = {});

/// Pointwise bounds on the (psi, beta)-derivative D of the extremal
/// difference: sup |D| <= (1 + 1/(2a) + 1/(2b)) (eta(n)-n) ("lemma2_sup") and
/// |D(t)| t^2 (eta(n)-n) / pi^2 <= a/(a-1) + 2a/(a-2) for
/// 1/(eta(n)-n) <= |t| <= pi ("lemma2_decay").
std::vector<BoundReport> verify_lemma2(const BoundParams& params,
                                       const VerifyOptions& opts = {});

/// Integer-part gaps: (1-1/a)(eta-n) < [eta]-n <= eta-n ("lemma3_gap"),
/// (1/2-1/a)(eta-n) < [eta eta]-[eta] < (1+1/a+1/b)(eta-n)
/// ("lemma3_second_gap") and (eta-n)/2 <= eta(eta)-eta < (1+1/b)(eta-n)
/// ("lemma3_increment").
std::vector<BoundReport> verify_lemma3(const BoundParams& params,
                                       const VerifyOptions& opts = {});

/// int_m^inf psi <= 2 / (1 - 2/mu(m)) psi(m) (eta(m) - m); requires mu(m) > 2.
BoundReport verify_statement2(const PsiSpec& spec, int m, const VerifyOptions& opts = {});

/// Lemma 2, Lemma 3 and the tail-integral bound at params.n.
std::vector<BoundReport> hypothesis_gate(const BoundParams& params,
                                         const VerifyOptions& opts = {});

/// |Psi_{beta,n}(t)| <= 2 pi psi(n) / |t| at sampled t in (0, pi]
/// ("kernel_decay") and sup |Psi_{beta,n}| <= (2b/(b-2) + 1/a) psi(n) (eta(n)-n)
/// ("kernel_sup").
std::vector<BoundReport> verify_kernel_bounds(const BoundParams& params,
                                              const VerifyOptions& opts = {});

/// (1/pi) ||Psi_{beta,n}||_q from a truncated kernel plus its certified tail.
double kernel_norm_upper(const PsiSpec& spec, int n, double beta, double q,
                         double kernel_tol = 1e-10);

/// Order-constancy summary of a corollary sweep: ratios of the measured
/// errors to exp(-alpha n^r) n^{(1-r) e} where e = 1/p or 1/s'.
struct OrderSummary {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  int n_at_min = 0;
  int n_at_max = 0;
  bool finite = false;  // both ratios finite and positive

  double band() const { return max_ratio / min_ratio; }
};

struct CorollaryResult {
  std::vector<BoundReport> reports;
  OrderSummary summary;
  int n_first = 0;  // after clipping to n_min
  int n_last = 0;
};

/// Theorem 1 over n_lo..n_hi with the uniform a(alpha, r), b(alpha, r) of
/// the exponential family; n_lo is raised to n_min. Throws PreconditionError
/// when nothing is left.
CorollaryResult verify_corollary1(double alpha, double r, double p, int n_lo, int n_hi,
                                  double beta, const VerifyOptions& opts = {});

/// Same with Theorem 2 and exponent s.
CorollaryResult verify_corollary2(double alpha, double r, double s, int n_lo, int n_hi,
                                  double beta, const VerifyOptions& opts = {});

/// exp(-alpha n^r) n^{1/e} ((ln 2/(alpha n^r) + 1)^{1/r} - 1)^{1/e}, the
/// corollary rate; equals psi(n)(eta(n)-n)^{1/e}.
double corollary_rate(double alpha, double r, int n, double inv_exponent);

/// CSV with the fixed columns
///   check,n,beta,p,s,a,b,lower,measured,upper,aux,verdict,margin_low,margin_high,notes
/// Absent optionals are empty fields; numbers use 17 significant digits.
std::string csv_header();
std::string to_csv_row(const BoundReport& r);

/// Structured text: one "key: value" line per field in the CSV column order,
/// records separated by a blank line.
std::string to_text(const BoundReport& r);

}  // namespace psiapprox
