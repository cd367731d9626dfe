#include "psiapprox/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "format.hpp"
#include "psiapprox/diagnostics.hpp"
#include "psiapprox/errors.hpp"

namespace psiapprox {

using std::numbers::pi;

TrigPoly::TrigPoly(double a0_half, std::vector<double> cos_coeffs,
                   std::vector<double> sin_coeffs)
    : a0_half_(a0_half), a_(std::move(cos_coeffs)), b_(std::move(sin_coeffs)) {
  canonicalize();
}

void TrigPoly::canonicalize() {
  const auto n = std::max(a_.size(), b_.size());
  a_.resize(n, 0.0);
  b_.resize(n, 0.0);
  while (!a_.empty() && a_.back() == 0.0 && b_.back() == 0.0) {
    a_.pop_back();
    b_.pop_back();
  }
}

TrigPoly TrigPoly::cosine(int k, double amplitude) {
  if (k < 0) throw PreconditionError("cosine: negative harmonic");
  if (k == 0) return constant(amplitude);
  std::vector<double> a(k, 0.0);
  a[k - 1] = amplitude;
  return TrigPoly(0.0, std::move(a), {});
}

TrigPoly TrigPoly::sine(int k, double amplitude) {
  if (k < 1) throw PreconditionError("sine: harmonic must be >= 1");
  std::vector<double> b(k, 0.0);
  b[k - 1] = amplitude;
  return TrigPoly(0.0, {}, std::move(b));
}

TrigPoly TrigPoly::constant(double value) { return TrigPoly(value, {}, {}); }

double TrigPoly::cos_coeff(int k) const noexcept {
  return k >= 1 && k <= degree() ? a_[k - 1] : 0.0;
}

double TrigPoly::sin_coeff(int k) const noexcept {
  return k >= 1 && k <= degree() ? b_[k - 1] : 0.0;
}

bool TrigPoly::has_sine_part() const noexcept {
  return std::any_of(b_.begin(), b_.end(), [](double v) { return v != 0.0; });
}

bool TrigPoly::has_cosine_part() const noexcept {
  return a0_half_ != 0.0 ||
         std::any_of(a_.begin(), a_.end(), [](double v) { return v != 0.0; });
}

double TrigPoly::operator()(double t) const noexcept {
  // Clenshaw for phi_{k+1} = 2 cos t phi_k - phi_{k-1} in Reinsch's form:
  // the recurrence runs on differences d_k = u_k -+ u_{k+1} with the factor
  // -4 sin^2(t/2) or 4 cos^2(t/2), which stays accurate near t = 0 and pi.
  const double c = std::cos(t);
  double u = 0.0, d = 0.0, v = 0.0, e = 0.0;
  double cos_sum = 0.0;
  if (c >= 0.0) {
    const double h = std::sin(0.5 * t);
    const double lam = -4.0 * h * h;
    for (auto k = a_.size(); k-- > 0;) {
      d = a_[k] + lam * u + d;
      u = d + u;
      e = b_[k] + lam * v + e;
      v = e + v;
    }
    cos_sum = d + 0.5 * lam * u;
  } else {
    const double h = std::cos(0.5 * t);
    const double lam = 4.0 * h * h;
    for (auto k = a_.size(); k-- > 0;) {
      d = a_[k] + lam * u - d;
      u = d - u;
      e = b_[k] + lam * v - e;
      v = e - v;
    }
    cos_sum = -d + 0.5 * lam * u;
  }
  return a0_half_ + cos_sum + std::sin(t) * v;
}

TrigPoly TrigPoly::derivative() const {
  std::vector<double> a(a_.size()), b(b_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    a[i] = k * b_[i];
    b[i] = -k * a_[i];
  }
  return TrigPoly(0.0, std::move(a), std::move(b));
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  a0_half_ += o.a0_half_;
  const auto n = std::max(a_.size(), o.a_.size());
  a_.resize(n, 0.0);
  b_.resize(n, 0.0);
  for (std::size_t i = 0; i < o.a_.size(); ++i) {
    a_[i] += o.a_[i];
    b_[i] += o.b_[i];
  }
  canonicalize();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += o * -1.0; }

TrigPoly& TrigPoly::operator*=(double s) {
  a0_half_ *= s;
  for (auto& v : a_) v *= s;
  for (auto& v : b_) v *= s;
  canonicalize();
  return *this;
}

double eval(const TrigPoly& p, double t) { return p(t); }

std::vector<double> sample_uniform(const TrigPoly& p, int m) {
  if (m <= 0) throw PreconditionError("sample_uniform: m must be positive");
  std::vector<double> out(m);
  const double h = 2.0 * pi / m;
  for (int j = 0; j < m; ++j) out[j] = p(-pi + h * j);
  return out;
}

double max_coeff_diff(const TrigPoly& p, const TrigPoly& q) {
  double d = std::abs(p.a0_half() - q.a0_half());
  const int n = std::max(p.degree(), q.degree());
  for (int k = 1; k <= n; ++k) {
    d = std::max(d, std::abs(p.cos_coeff(k) - q.cos_coeff(k)));
    d = std::max(d, std::abs(p.sin_coeff(k) - q.sin_coeff(k)));
  }
  return d;
}

Phase half_pi_phase(double beta) {
  double q = std::fmod(beta, 4.0);
  if (q < 0) q += 4.0;
  if (q == std::floor(q)) {
    static constexpr Phase table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[static_cast<int>(q) % 4];
  }
  return {std::cos(q * pi / 2), std::sin(q * pi / 2)};
}

TrigPoly dirichlet(int k, double beta) {
  if (k < 0) throw PreconditionError("dirichlet: k must be >= 0");
  const auto ph = half_pi_phase(beta);
  // cos(jt - theta) = cos theta cos jt + sin theta sin jt
  return TrigPoly(0.5 * ph.c, std::vector<double>(k, ph.c),
                  std::vector<double>(k, ph.s));
}

double dirichlet_closed_form(int k, double beta, double t) {
  if (k < 0) throw PreconditionError("dirichlet: k must be >= 0");
  double x = std::remainder(t, 2.0 * pi);
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < 1e-4) return dirichlet(k, beta)(x);
  const auto ph = half_pi_phase(beta);
  // sin((k+1/2)x - theta) expanded so that the phase stays exact.
  const double arg = (k + 0.5) * x;
  const double lead = std::sin(arg) * ph.c - std::cos(arg) * ph.s;
  return (lead + ph.s * std::cos(0.5 * x)) / (2.0 * s);
}

namespace {

void check_nm(int N, int M) {
  if (N < 1 || N >= M) {
    throw PreconditionError("W_{N,M} requires 1 <= N < M (got N = " + std::to_string(N) +
                            ", M = " + std::to_string(M) + ")");
  }
}

}  // namespace

TrigPoly w_nm(const Sequence& lambda, double gamma, int N, int M) {
  check_nm(N, M);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double scale = 1.0 / (M - N);
  std::vector<double> a(M - 1, 0.0), b(M - 1, 0.0);
  for (int k = N; k <= M - 1; ++k) {
    for (int j = 1; j <= k; ++j) {
      const double l = lambda(j) * scale;
      a[j - 1] += l * cg;
      b[j - 1] -= l * sg;
    }
  }
  return TrigPoly(0.0, std::move(a), std::move(b));
}

TrigPoly w_nm_rearranged(const Sequence& lambda, double gamma, int N, int M) {
  check_nm(N, M);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  std::vector<double> a(M - 1, 0.0), b(M - 1, 0.0);
  for (int k = 1; k <= M - 1; ++k) {
    const double w = k <= N ? 1.0 : static_cast<double>(M - k) / (M - N);
    const double l = w * lambda(k);
    a[k - 1] = l * cg;
    b[k - 1] = -l * sg;
  }
  return TrigPoly(0.0, std::move(a), std::move(b));
}

ExtremalIndices extremal_indices(const PsiSpec& spec, int n) {
  if (n < 1) throw PreconditionError("extremal: n must be >= 1");
  ExtremalIndices idx;
  idx.n = n;
  idx.eta = eta(spec, n);
  idx.eta_eta = eta(spec, idx.eta);
  idx.eta_floor = static_cast<int>(integer_part(idx.eta));
  idx.eta_eta_floor = static_cast<int>(integer_part(idx.eta_eta));
  if (idx.lower_gap() < 2) {
    throw PreconditionError("extremal: [eta(n)] - n = " + std::to_string(idx.lower_gap()) +
                            " < 2 at n = " + std::to_string(n));
  }
  if (idx.upper_gap() < 2) {
    throw PreconditionError("extremal: [eta(eta(n))] - [eta(n)] = " +
                            std::to_string(idx.upper_gap()) + " < 2 at n = " +
                            std::to_string(n));
  }
  return idx;
}

TrigPoly extremal_profile(const ExtremalIndices& idx, const Sequence& lambda) {
  const int n = idx.n, e = idx.eta_floor, ee = idx.eta_eta_floor;
  std::vector<double> a(ee - 1, 0.0);
  for (int k = n + 1; k <= e - 1; ++k) {
    a[k - 1] = static_cast<double>(k - n) / (e - n) * lambda(k);
  }
  a[e - 1] = lambda(e);
  for (int k = e + 1; k <= ee - 1; ++k) {
    a[k - 1] = static_cast<double>(ee - k) / (ee - e) * lambda(k);
  }
  return TrigPoly(0.0, std::move(a), {});
}

TrigPoly extremal_difference(const PsiSpec& spec, int n) {
  return extremal_profile(extremal_indices(spec, n),
                          [&](int k) { return spec(static_cast<double>(k)); });
}

TrigPoly extremal_dual(const PsiSpec& spec, int n) {
  return extremal_profile(extremal_indices(spec, n), [](int) { return 1.0; });
}

TrigPoly psi_beta_derivative(const TrigPoly& p, const PsiSpec& spec, double beta) {
  if (p.a0_half() != 0.0) {
    warn("(psi,beta)-derivative drops a non-zero constant term");
  }
  const auto ph = half_pi_phase(beta);
  const int d = p.degree();
  std::vector<double> a(d), b(d);
  for (int k = 1; k <= d; ++k) {
    const double inv = 1.0 / spec(static_cast<double>(k));
    const double ak = p.cos_coeff(k), bk = p.sin_coeff(k);
    a[k - 1] = (ak * ph.c + bk * ph.s) * inv;
    b[k - 1] = (bk * ph.c - ak * ph.s) * inv;
  }
  return TrigPoly(0.0, std::move(a), std::move(b));
}

TrigPoly psi_beta_integral(const TrigPoly& p, const PsiSpec& spec, double beta) {
  const auto ph = half_pi_phase(beta);
  const int d = p.degree();
  std::vector<double> a(d), b(d);
  for (int k = 1; k <= d; ++k) {
    const double w = spec(static_cast<double>(k));
    const double ak = p.cos_coeff(k), bk = p.sin_coeff(k);
    a[k - 1] = (ak * ph.c - bk * ph.s) * w;
    b[k - 1] = (bk * ph.c + ak * ph.s) * w;
  }
  return TrigPoly(0.0, std::move(a), std::move(b));
}

TrigPoly fourier_partial_sum(const TrigPoly& p, int order) {
  if (order < 0) throw PreconditionError("fourier_partial_sum: order must be >= 0");
  const int d = std::min(order, p.degree());
  return TrigPoly(p.a0_half(),
                  std::vector<double>(p.cos_coeffs().begin(), p.cos_coeffs().begin() + d),
                  std::vector<double>(p.sin_coeffs().begin(), p.sin_coeffs().begin() + d));
}

std::string to_record(const TrigPoly& p) {
  std::string out = std::to_string(p.degree()) + ";" + detail::g17(p.a0_half()) + ";";
  const auto join = [&out](std::span<const double> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ' ';
      out += detail::g17(xs[i]);
    }
  };
  join(p.cos_coeffs());
  out += ';';
  join(p.sin_coeffs());
  return out;
}

TrigPoly parse_trig_record(std::string_view record) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : record) {
    if (ch == ';') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  if (fields.size() != 4) throw PreconditionError("trig record: expected 4 fields");

  const auto num = [](std::string_view s) {
    auto v = detail::parse_double(s);
    if (!v) throw PreconditionError("trig record: bad number '" + std::string(s) + "'");
    return *v;
  };
  const auto list = [&](const std::string& s) {
    std::vector<double> xs;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) xs.push_back(num(tok));
    return xs;
  };
  const double deg = num(fields[0]);
  auto a = list(fields[2]);
  auto b = list(fields[3]);
  if (a.size() != b.size() || static_cast<double>(a.size()) != deg) {
    throw PreconditionError("trig record: coefficient count does not match degree");
  }
  return TrigPoly(num(fields[1]), std::move(a), std::move(b));
}

}  // namespace psiapprox
