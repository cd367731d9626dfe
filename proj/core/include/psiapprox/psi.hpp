#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psiapprox {

/// Numerical tolerances of the psi-function layer.
struct PsiTolerances {
  static constexpr double root = 1e-12;        // relative, for psi^{-1}
  static constexpr double convex_rel = 1e-10;  // times psi(t)
  static constexpr double decay = 1e-6;        // psi(T) < psi(1) * decay
  static constexpr double quad = 1e-10;        // relative, tail integrals
  static constexpr double slope = 1e-3;        // eta' finite differences
  static constexpr double floor_eps = 1e-9;    // [x] = floor(x + eps)
};

/// Integer part [x] with a small upward nudge so that values which are
/// integers in exact arithmetic (eta(25) = 36 for the flagship family) are
/// not rounded down.
std::int64_t integer_part(double x);

/// A weight function psi(t), t >= 1: either the exponential family
/// exp(-alpha t^r) or a user-supplied callable.
///
/// Instances are immutable and cheap to copy; the generic callable is
/// shared and must itself be safe to call concurrently.
class PsiSpec {
 public:
  using Callable = std::function<double(double)>;

  /// exp(-alpha t^r) with alpha > 0 and r in (0, 1].
  static PsiSpec exponential(double alpha, double r);

  /// Arbitrary psi on [1, inf). Class membership is not checked here; use
  /// classify() for a sampled report.
  static PsiSpec generic(Callable fn, std::string label = "generic");

  bool is_exponential() const noexcept { return kind_ == Kind::exponential; }
  double alpha() const;
  double r() const;
  const std::string& label() const noexcept { return label_; }
  double domain_min() const noexcept { return 1.0; }

  /// psi(t); throws DomainError for t < 1.
  double operator()(double t) const;

  /// log psi(t). Exact for the exponential family, so usable far past the
  /// point where psi(t) itself underflows.
  double log_value(double t) const;

 private:
  enum class Kind { exponential, generic };

  PsiSpec() = default;

  Kind kind_ = Kind::exponential;
  double alpha_ = 0.0;
  double r_ = 0.0;
  std::shared_ptr<const Callable> fn_;
  std::string label_;
};

/// psi(t) for t >= 1.
double psi_eval(const PsiSpec& spec, double t);

/// t >= 1 with psi(t) = y, for 0 < y <= psi(1). Closed form for the
/// exponential family, bracketed bisection otherwise.
double psi_inverse(const PsiSpec& spec, double y);

/// Bisection path of psi_inverse regardless of the kind of spec. The
/// bracket starts at [1, 2] and doubles its right end until psi drops
/// below y.
double psi_inverse_bisection(const PsiSpec& spec, double y);

struct Characteristics {
  double t = 0.0;
  double eta = 0.0;          // psi^{-1}(psi(t) / 2)
  double mu = 0.0;           // t / (eta - t)
  double eta_minus_t = 0.0;
};

/// eta(t) and mu(t). For the exponential family eta is evaluated in log
/// space as (ln 2 / alpha + t^r)^{1/r}.
Characteristics characteristics(const PsiSpec& spec, double t);

/// eta(t) alone; same paths as characteristics().
double eta(const PsiSpec& spec, double t);

struct Witness {
  std::string check;
  double t = 0.0;
  std::string detail;
};

/// Sampled class-membership flags. Each flag means "consistent with
/// membership on the sample grid"; failures carry witnesses.
struct ClassReport {
  bool in_M = false;
  bool mu_increasing_to_infinity = false;
  bool eta_gap_bounded_above = false;
  bool eta_gap_bounded_below = false;
  std::vector<double> sample_grid;
  std::vector<Witness> witnesses;
};

/// Requires a sorted grid in [1, inf) with at least 8 points; throws
/// PreconditionError otherwise.
ClassReport classify(const PsiSpec& spec, std::span<const double> grid);

/// Integral of psi over [m, inf), truncated at the first half-decay point
/// T = eta^j(m) whose Statement-type remainder bound
/// 2 / (1 - 2 / mu(T)) * psi(T) * (eta(T) - T) drops below the relative
/// tolerance.
double tail_integral(const PsiSpec& spec, double m);

/// Upper bound on the tail integral over [m, inf) valid when mu(m) > 2;
/// returns +inf when mu(m) <= 2.
double tail_integral_bound(const PsiSpec& spec, double m);

/// Thresholds for the exponential family exp(-alpha t^r), r in (0, 1):
/// eta(n) - n >= a and mu(n) >= b for all n >= n_min.
struct ExpThresholds {
  double a = 0.0;
  double b = 0.0;
  double n_min_real = 0.0;  // 1 + max{...}, before rounding up
  std::int64_t n_min = 0;   // saturates at INT64_MAX
};

ExpThresholds exp_family_thresholds(double alpha, double r);

/// Log-spaced grid of `count` points covering [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Flat key-value record: "kind=exponential alpha=<v> r=<v>". Values are
/// printed with 17 significant digits; the parser also accepts the token
/// "ln2" for alpha.
std::string to_record(const PsiSpec& spec);
PsiSpec parse_psi_record(std::string_view record);

/// Parses a real number, accepting "ln2" as the exact natural log of 2.
double parse_alpha_token(std::string_view token);

}  // namespace psiapprox
