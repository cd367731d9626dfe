#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "psiapprox/approx.hpp"
#include "psiapprox/bounds.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/norms.hpp"
#include "support/oracles.hpp"

using namespace psiapprox;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

const PsiSpec kSqrt = PsiSpec::exponential(ln2, 0.5);

double parseval_tail(const TrigPoly& f, int order) {
  long double acc = 0.0L;
  for (int k = order + 1; k <= f.degree(); ++k) {
    acc += static_cast<long double>(f.cos_coeff(k)) * f.cos_coeff(k) +
           static_cast<long double>(f.sin_coeff(k)) * f.sin_coeff(k);
  }
  return static_cast<double>(std::sqrt(pi * acc));
}

// Chebyshev certificate: f - P alternates at 2 order + 2 points at level
// (1 - rel) * error, so by de la Vallee Poussin the best error is at least
// that level.
void expect_alternation(const TrigPoly& f, const ApproxResult& r, int order, double rel) {
  const auto e = f - r.best_poly;
  const int count = oracle::alternation_count([&](double t) { return e(t); },
                                              r.error * (1 - rel), 1 << 18);
  EXPECT_GE(count, 2 * order + 2) << "order " << order << " error " << r.error;
}

}  // namespace

TEST(BestUniform, PureHarmonic) {
  for (int n : {1, 2, 5, 9}) {
    const auto r = best_uniform(TrigPoly::cosine(n), n - 1);
    EXPECT_NEAR(r.error, 1.0, 1e-12) << n;
    EXPECT_LT(max_coeff_diff(r.best_poly, TrigPoly()), 1e-12) << n;
    EXPECT_EQ(r.method, ApproxMethod::discrete_minimax);
  }
  const auto s = best_uniform(TrigPoly::sine(4, 2.0), 3);
  EXPECT_NEAR(s.error, 2.0, 1e-12);
}

TEST(BestUniform, LowDegreeIsExact) {
  oracle::Gen g(41);
  const auto f = g.poly(5);
  const auto r = best_uniform(f, 5);
  EXPECT_EQ(r.error, 0.0);
  EXPECT_EQ(r.best_poly, f);
  EXPECT_EQ(best_uniform(f, 9).error, 0.0);
}

TEST(BestUniform, OddFunctionOrderZero) {
  const auto f = TrigPoly::sine(1) + TrigPoly::sine(3, 0.4);
  EXPECT_NEAR(best_uniform(f, 0).error, sup_norm(f).value, 1e-15);
}

TEST(BestUniform, RandomAlternationCertificates) {
  oracle::Gen g(42);
  for (int i = 0; i < 24; ++i) {
    const int parity = i % 3;
    const int deg = g.integer(3, 14);
    const int order = g.integer(0, deg - 1);
    const auto f = g.poly(deg, parity);
    const auto r = best_uniform(f, order);
    SCOPED_TRACE("case " + std::to_string(i) + " parity " + std::to_string(parity));
    ASSERT_LE(r.best_poly.degree(), order);
    EXPECT_NEAR(r.error, sup_norm(f - r.best_poly).value, 1e-13 * r.error);
    EXPECT_LE(r.error, fourier_error(f, order, kInf) * (1 + 1e-12));
    EXPECT_LE(r.diagnostics.reference_lower, r.error * (1 + 1e-12));
    EXPECT_GE(r.diagnostics.reference_lower, r.error * (1 - 1e-8));
    expect_alternation(f, r, order, 1e-6);
  }
}

TEST(BestUniform, PerturbationsDoNotImprove) {
  oracle::Gen g(43);
  for (int i = 0; i < 10; ++i) {
    const auto f = g.poly(10);
    const int order = 4;
    const auto r = best_uniform(f, order);
    for (int j = 0; j < 10; ++j) {
      const auto q = fourier_partial_sum(g.poly(order), order) * 1e-3;
      EXPECT_GE(sup_norm(f - r.best_poly - q).value, r.error * (1 - 1e-10));
    }
  }
}

// Measured errors of the extremal f_p, certified by alternation.
TEST(BestUniform, ExtremalFrozen) {
  struct Case {
    int n;
    double p;
    double error;
  };
  const Case cases[] = {
      {21, 1.0, 0.0021905332069090833},
      {22, 1.0, 0.0020671837244349432},
      {23, 1.0, 0.0019951295454983448},
      {21, 2.0, 0.00068705723244951095},
  };
  for (const auto& c : cases) {
    const auto f = build_extremal(BoundParams::at(kSqrt, c.n, 0.0, c.p));
    const auto r = best_uniform(f, c.n - 1);
    EXPECT_NEAR(r.error, c.error, 1e-9 * c.error) << c.n << " " << c.p;
    expect_alternation(f, r, c.n - 1, 1e-6);
  }
}

TEST(BestLs, ParsevalProjection) {
  const auto r = best_ls(TrigPoly::cosine(3), 2.0, 2);
  EXPECT_NEAR(r.error, std::sqrt(pi), 1e-15);
  EXPECT_TRUE(r.best_poly.is_zero());
  EXPECT_EQ(r.method, ApproxMethod::projection);

  oracle::Gen g(44);
  for (int i = 0; i < 20; ++i) {
    const auto f = g.poly(g.integer(2, 30));
    const int order = g.integer(0, f.degree() - 1);
    EXPECT_NEAR(best_ls(f, 2.0, order).error, parseval_tail(f, order),
                1e-12 * parseval_tail(f, order));
  }
}

TEST(BestLs, QuarticOfCosine) {
  const auto r = best_ls(TrigPoly::cosine(3), 4.0, 2);
  EXPECT_NEAR(r.error, std::pow(3.0 * pi / 4.0, 0.25), 1e-10);
  EXPECT_LT(max_coeff_diff(r.best_poly, TrigPoly()), 1e-8);
}

TEST(BestLs, ContinuityInS) {
  oracle::Gen g(45);
  for (int i = 0; i < 8; ++i) {
    const auto f = g.poly(8);
    const double e2 = best_ls(f, 2.0, 3).error;
    const double e201 = best_ls(f, 2.01, 3).error;
    EXPECT_NEAR(e201, e2, 0.01 * e2) << i;
  }
}

TEST(BestLs, OptimalityConditions) {
  oracle::Gen g(46);
  for (int i = 0; i < 12; ++i) {
    const auto f = g.poly(g.integer(3, 10), i % 3);
    const int order = g.integer(0, f.degree() - 1);
    const double s = i % 2 ? g.uniform(1.2, 1.9) : g.uniform(2.1, 6.0);
    SCOPED_TRACE("s=" + std::to_string(s));
    const auto r = best_ls(f, s, order);
    EXPECT_EQ(r.method, ApproxMethod::smooth_descent);
    EXPECT_LE(r.error, fourier_error(f, order, s) * (1 + 1e-12));
    EXPECT_NEAR(r.error, lp_norm(f - r.best_poly, s), 1e-9 * r.error);
    // Orthogonality of |e|^{s-2} e to every harmonic of order <= `order`.
    const auto e = f - r.best_poly;
    const double scale = std::pow(r.error, s - 1) * std::sqrt(2 * pi);
    const auto ev = [&](long double t) { return static_cast<long double>(e(double(t))); };
    const auto w = [&](long double v) {
      return std::pow(std::abs(v), static_cast<long double>(s) - 1) * (v > 0 ? 1 : -1);
    };
    for (int k = 0; k <= order; ++k) {
      const auto c = [&](long double t) { return std::cos(k * t); };
      const auto sn = [&](long double t) { return std::sin(k * t); };
      const long double gc = oracle::cusp_integral(ev, w, c, 1024, 2000);
      const long double gs = oracle::cusp_integral(ev, w, sn, 1024, 2000);
      EXPECT_LT(std::abs(double(gc)), 1e-7 * scale) << "cos " << k;
      EXPECT_LT(std::abs(double(gs)), 1e-7 * scale) << "sin " << k;
    }
    for (int j = 0; j < 5; ++j) {
      const auto q = fourier_partial_sum(g.poly(std::max(order, 1)), order) * 1e-3;
      EXPECT_GE(lp_norm(e - q, s), r.error * (1 - 1e-10));
    }
  }
}

TEST(BestLs, RejectsBadExponent) {
  EXPECT_THROW(best_ls(TrigPoly::cosine(2), 1.0, 1), DomainError);
  EXPECT_THROW(best_ls(TrigPoly::cosine(2), kInf, 1), DomainError);
}

TEST(FourierError, Examples) {
  EXPECT_NEAR(fourier_error(TrigPoly::cosine(6), 5, kInf), 1.0, 1e-15);
  EXPECT_NEAR(fourier_error(TrigPoly::cosine(6), 5, 2.0), std::sqrt(pi), 1e-15);
  oracle::Gen g(47);
  const auto f = g.poly(4);
  for (double p : {1.0, 2.0, 3.5, kInf}) EXPECT_EQ(fourier_error(f, 4, p), 0.0);
}

TEST(Methods, Names) {
  EXPECT_STREQ(to_string(ApproxMethod::discrete_minimax), "discrete-minimax");
  EXPECT_STREQ(to_string(ApproxMethod::projection), "projection");
  EXPECT_STREQ(to_string(ApproxMethod::smooth_descent), "smooth-descent");
}
