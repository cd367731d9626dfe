#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psiapprox/psi.hpp"

namespace psiapprox {

/// Finite trigonometric polynomial
///   a0/2 + sum_{k=1}^{D} (a_k cos kt + b_k sin kt)
/// stored densely. The degree is canonical: trailing (a_k, b_k) pairs that
/// are both zero are trimmed on construction.
class TrigPoly {
 public:
  TrigPoly() = default;

  /// `cos_coeffs[k-1]` is a_k and `sin_coeffs[k-1]` is b_k; the shorter
  /// array is zero-padded.
  TrigPoly(double a0_half, std::vector<double> cos_coeffs,
           std::vector<double> sin_coeffs);

  /// amplitude * cos(kt), amplitude * sin(kt).
  static TrigPoly cosine(int k, double amplitude = 1.0);
  static TrigPoly sine(int k, double amplitude = 1.0);
  static TrigPoly constant(double value);

  int degree() const noexcept { return static_cast<int>(a_.size()); }
  bool is_zero() const noexcept { return a_.empty() && a0_half_ == 0.0; }
  double a0_half() const noexcept { return a0_half_; }

  /// a_k, b_k for k >= 1; zero beyond the degree.
  double cos_coeff(int k) const noexcept;
  double sin_coeff(int k) const noexcept;
  std::span<const double> cos_coeffs() const noexcept { return a_; }
  std::span<const double> sin_coeffs() const noexcept { return b_; }

  bool has_sine_part() const noexcept;
  bool has_cosine_part() const noexcept;

  /// Value at t (Clenshaw recurrence).
  double operator()(double t) const noexcept;

  /// d/dt of the polynomial.
  TrigPoly derivative() const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(double s);

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, double s) { return a *= s; }
  friend TrigPoly operator*(double s, TrigPoly a) { return a *= s; }
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  void canonicalize();

  double a0_half_ = 0.0;
  std::vector<double> a_;
  std::vector<double> b_;
};

double eval(const TrigPoly& p, double t);

/// Values at the uniform grid t_j = -pi + 2 pi j / m, j = 0..m-1.
std::vector<double> sample_uniform(const TrigPoly& p, int m);

/// Largest |a_k - a'_k|, |b_k - b'_k| (including the constant term).
double max_coeff_diff(const TrigPoly& p, const TrigPoly& q);

/// Exact (cos, sin) of beta * pi / 2; exact zeros and ones for integer beta.
struct Phase {
  double c = 1.0;
  double s = 0.0;
};
Phase half_pi_phase(double beta);

/// D_{k,beta}(t) = cos(beta pi/2) / 2 + sum_{j=1}^{k} cos(jt - beta pi/2).
TrigPoly dirichlet(int k, double beta);

/// Closed form of D_{k,beta}:
///   (sin((k + 1/2) t - beta pi/2) + sin(beta pi/2) cos(t/2)) / (2 sin(t/2)).
/// Near t = 0 (mod 2 pi) the removable singularity is handled by falling
/// back to the coefficient sum.
double dirichlet_closed_form(int k, double beta, double t);

using Sequence = std::function<double(int)>;

/// W_{N,M}(lambda; gamma; t): average of the partial sums of orders
/// N..M-1 of sum lambda(j) cos(jt + gamma), built by the literal double sum.
TrigPoly w_nm(const Sequence& lambda, double gamma, int N, int M);

/// Same polynomial built in one pass: weight 1 for k <= N and
/// (M - k) / (M - N) for N < k < M.
TrigPoly w_nm_rearranged(const Sequence& lambda, double gamma, int N, int M);

/// n, [eta(n)] and [eta(eta(n))] for the extremal construction.
struct ExtremalIndices {
  int n = 0;
  int eta_floor = 0;      // [eta(n)]
  int eta_eta_floor = 0;  // [eta(eta(n))]
  double eta = 0.0;       // eta(n)
  double eta_eta = 0.0;   // eta(eta(n))

  int lower_gap() const noexcept { return eta_floor - n; }
  int upper_gap() const noexcept { return eta_eta_floor - eta_floor; }
};

/// Throws PreconditionError when either gap is below 2.
ExtremalIndices extremal_indices(const PsiSpec& spec, int n);

/// Cosine polynomial with the ramp-up / plateau / ramp-down profile
///   (k - n)/([eta]-n) lambda(k),     n < k < [eta]
///   lambda([eta]),                   k = [eta]
///   ([eta eta] - k)/([eta eta]-[eta]) lambda(k),  [eta] < k < [eta eta]
TrigPoly extremal_profile(const ExtremalIndices& idx, const Sequence& lambda);

/// W_{[eta(n)],[eta(eta(n))]}(psi;0;.) - W_{n,[eta(n)]}(psi;0;.).
TrigPoly extremal_difference(const PsiSpec& spec, int n);

/// The lambda = 1 counterpart used as the dual polynomial.
TrigPoly extremal_dual(const PsiSpec& spec, int n);

/// (psi, beta)-derivative: harmonic k is divided by psi(k) and advanced in
/// phase by beta pi/2. The constant term is dropped (with a warning when it
/// is non-zero).
TrigPoly psi_beta_derivative(const TrigPoly& p, const PsiSpec& spec, double beta);

/// Inverse of psi_beta_derivative: harmonic k is multiplied by psi(k) and
/// retarded by beta pi/2. Never produces a constant term.
TrigPoly psi_beta_integral(const TrigPoly& p, const PsiSpec& spec, double beta);

/// Truncation to harmonics k <= order (the Fourier sum S_order).
TrigPoly fourier_partial_sum(const TrigPoly& p, int order);

/// "D;a0/2;a_1 ... a_D;b_1 ... b_D" with 17 significant digits. Contains no
/// commas, so it can be embedded in a CSV field.
std::string to_record(const TrigPoly& p);
TrigPoly parse_trig_record(std::string_view record);

}  // namespace psiapprox
