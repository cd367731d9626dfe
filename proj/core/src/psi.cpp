#include "psiapprox/psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "format.hpp"
#include "psiapprox/errors.hpp"

namespace psiapprox {

using std::numbers::ln2;

std::int64_t integer_part(double x) {
  return static_cast<std::int64_t>(std::floor(x + PsiTolerances::floor_eps));
}

PsiSpec PsiSpec::exponential(double alpha, double r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("exponential psi: alpha must be a positive finite real");
  }
  if (!(r > 0.0 && r <= 1.0)) {
    throw DomainError("exponential psi: r must lie in (0, 1]");
  }
  PsiSpec s;
  s.kind_ = Kind::exponential;
  s.alpha_ = alpha;
  s.r_ = r;
  s.label_ = "exponential";
  return s;
}

PsiSpec PsiSpec::generic(Callable fn, std::string label) {
  if (!fn) throw PreconditionError("generic psi: empty callable");
  PsiSpec s;
  s.kind_ = Kind::generic;
  s.fn_ = std::make_shared<const Callable>(std::move(fn));
  s.label_ = std::move(label);
  return s;
}

double PsiSpec::alpha() const {
  if (!is_exponential()) throw PreconditionError("generic psi has no alpha");
  return alpha_;
}

double PsiSpec::r() const {
  if (!is_exponential()) throw PreconditionError("generic psi has no r");
  return r_;
}

double PsiSpec::operator()(double t) const {
  if (!(t >= 1.0)) throw DomainError("psi(t) requires t >= 1");
  if (is_exponential()) return std::exp(-alpha_ * std::pow(t, r_));
  return (*fn_)(t);
}

double PsiSpec::log_value(double t) const {
  if (!(t >= 1.0)) throw DomainError("psi(t) requires t >= 1");
  if (is_exponential()) return -alpha_ * std::pow(t, r_);
  return std::log((*fn_)(t));
}

double psi_eval(const PsiSpec& spec, double t) { return spec(t); }

namespace {

void check_inverse_range(const PsiSpec& spec, double y) {
  const double top = spec(1.0);
  if (!(y > 0.0)) throw RangeError("psi^{-1}(y) requires y > 0");
  if (y > top * (1.0 + 4 * std::numeric_limits<double>::epsilon())) {
    throw RangeError("psi^{-1}(y) requires y <= psi(1)");
  }
}

}  // namespace

double psi_inverse_bisection(const PsiSpec& spec, double y) {
  check_inverse_range(spec, y);
  if (spec(1.0) <= y) return 1.0;

  double lo = 1.0;
  double hi = 2.0;
  constexpr int kMaxDoublings = 200;
  int doublings = 0;
  while (spec(hi) > y) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > kMaxDoublings || !std::isfinite(hi)) {
      throw ConvergenceError("psi^{-1}: could not bracket y; psi may not decay");
    }
  }
  if (spec(hi) == y) return hi;

  const auto f = [&](double t) { return spec(t) - y; };
  boost::math::tools::eps_tolerance<double> tol(
      std::numeric_limits<double>::digits - 2);
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol, max_iter);
  if (max_iter >= 200) throw ConvergenceError("psi^{-1}: bisection cap reached");
  return 0.5 * (a + b);
}

double psi_inverse(const PsiSpec& spec, double y) {
  if (!spec.is_exponential()) return psi_inverse_bisection(spec, y);
  check_inverse_range(spec, y);
  const double t = std::pow(-std::log(y) / spec.alpha(), 1.0 / spec.r());
  return std::max(t, 1.0);
}

double eta(const PsiSpec& spec, double t) {
  if (!(t >= 1.0)) throw DomainError("eta(t) requires t >= 1");
  if (spec.is_exponential()) {
    return std::pow(ln2 / spec.alpha() + std::pow(t, spec.r()), 1.0 / spec.r());
  }
  return psi_inverse_bisection(spec, 0.5 * spec(t));
}

Characteristics characteristics(const PsiSpec& spec, double t) {
  Characteristics c;
  c.t = t;
  c.eta = eta(spec, t);
  c.eta_minus_t = c.eta - t;
  c.mu = c.eta_minus_t > 0.0 ? t / c.eta_minus_t
                             : std::numeric_limits<double>::infinity();
  return c;
}

double tail_integral_bound(const PsiSpec& spec, double m) {
  const auto c = characteristics(spec, m);
  if (!(c.mu > 2.0)) return std::numeric_limits<double>::infinity();
  return 2.0 / (1.0 - 2.0 / c.mu) * spec(m) * c.eta_minus_t;
}

double tail_integral(const PsiSpec& spec, double m) {
  if (!(m >= 1.0)) throw DomainError("tail_integral requires m >= 1");
  if (spec(m) == 0.0) return 0.0;

  using boost::math::quadrature::gauss_kronrod;
  const auto f = [&](double u) { return spec(u); };

  constexpr int kMaxSegments = 10000;
  double total = 0.0;
  double lo = m;
  for (int seg = 0; seg < kMaxSegments; ++seg) {
    const double hi = eta(spec, lo);
    if (!(hi > lo) || !std::isfinite(hi)) {
      throw ConvergenceError("tail_integral: half-decay point did not advance");
    }
    total += gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, 1e-14);
    if (spec(hi) == 0.0) return total;
    if (tail_integral_bound(spec, hi) <= PsiTolerances::quad * total) {
      return total;
    }
    lo = hi;
  }
  throw ConvergenceError("tail_integral: remainder bound never fell below tolerance");
}

ExpThresholds exp_family_thresholds(double alpha, double r) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("thresholds: alpha must be positive");
  }
  if (!(r > 0.0 && r < 1.0)) throw DomainError("thresholds: r must lie in (0, 1)");

  // log(1 + X) with X = (2 r alpha / ln 2)^{1/(1-r)}, kept finite as r -> 1.
  const double log_x1 = std::log(2.0 * r * alpha / ln2) / (1.0 - r);
  const double log1p_x1 = log_x1 > 0.0 ? log_x1 + std::log1p(std::exp(-log_x1))
                                       : std::log1p(std::exp(log_x1));

  ExpThresholds th;
  th.a = ln2 / (alpha * r) * std::exp((1.0 - r) * log1p_x1);

  const double x2 = std::pow(ln2 / (alpha * (std::pow(3.0, r) - std::pow(2.0, r))),
                             1.0 / r);
  const double inner = ln2 / alpha * std::pow(1.0 + 2.0 * x2, -r) + 1.0;
  th.b = 1.0 / (std::pow(inner, 1.0 / r) - 1.0);

  th.n_min_real = 1.0 + std::max(std::exp(log_x1), 2.0 * x2);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  const double up = std::ceil(th.n_min_real);
  th.n_min = (std::isfinite(up) && up < 9.2e18) ? static_cast<std::int64_t>(up) : kMax;
  return th;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw PreconditionError("log_grid: need count >= 2 and 0 < lo < hi");
  }
  std::vector<double> g(count);
  const double l0 = std::log(lo);
  const double step = (std::log(hi) - l0) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    g[i] = std::exp(l0 + step * static_cast<double>(i));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::string to_record(const PsiSpec& spec) {
  if (!spec.is_exponential()) return "kind=generic label=" + spec.label();
  return "kind=exponential alpha=" + detail::g17(spec.alpha()) +
         " r=" + detail::g17(spec.r());
}

double parse_alpha_token(std::string_view token) {
  if (token == "ln2") return ln2;
  if (auto v = detail::parse_double(token)) return *v;
  throw PreconditionError("not a real number: '" + std::string(token) + "'");
}

PsiSpec parse_psi_record(std::string_view record) {
  std::istringstream in{std::string(record)};
  std::string field;
  std::string kind;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double r = std::numeric_limits<double>::quiet_NaN();
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("psi record: malformed field '" + field + "'");
    }
    const auto key = field.substr(0, eq);
    const auto value = std::string_view(field).substr(eq + 1);
    if (key == "kind") {
      kind = value;
    } else if (key == "alpha") {
      alpha = parse_alpha_token(value);
    } else if (key == "r") {
      r = parse_alpha_token(value);
    } else if (key != "label") {
      throw PreconditionError("psi record: unknown key '" + key + "'");
    }
  }
  if (kind == "generic") {
    throw PreconditionError("psi record: generic specs are constructed programmatically");
  }
  if (kind != "exponential") throw PreconditionError("psi record: missing kind");
  if (std::isnan(alpha) || std::isnan(r)) {
    throw PreconditionError("psi record: exponential kind needs alpha and r");
  }
  return PsiSpec::exponential(alpha, r);
}

}  // namespace psiapprox
