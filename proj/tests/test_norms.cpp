#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "psiapprox/errors.hpp"
#include "psiapprox/norms.hpp"
#include "support/oracles.hpp"

using namespace psiapprox;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

const PsiSpec kSqrt = PsiSpec::exponential(ln2, 0.5);

}  // namespace

TEST(Norms, Examples) {
  const auto c3 = TrigPoly::cosine(3);
  EXPECT_NEAR(lp_norm(c3, 2.0), std::sqrt(pi), 1e-15);
  EXPECT_NEAR(lp_norm(c3, kInf), 1.0, 1e-15);
  EXPECT_NEAR(lp_norm(TrigPoly::cosine(1), 1.0), 4.0, 1e-13);
  EXPECT_NEAR(lp_norm(c3, 4.0), std::pow(3.0 * pi / 4.0, 0.25), 1e-14);
  EXPECT_NEAR(lp_norm(c3, 4.0), 1.2389471586471041, 1e-14);
}

TEST(Norms, ConjugateExponent) {
  EXPECT_EQ(conjugate_exponent(1.0), kInf);
  EXPECT_EQ(conjugate_exponent(kInf), 1.0);
  EXPECT_DOUBLE_EQ(conjugate_exponent(2.0), 2.0);
  EXPECT_DOUBLE_EQ(conjugate_exponent(4.0 / 3.0), 4.0);
}

TEST(Norms, PolynomialMatchesMidpointOracle) {
  oracle::Gen g(31);
  for (int i = 0; i < 40; ++i) {
    const auto f = g.poly(g.integer(1, 24), g.integer(0, 2));
    const double p = i % 4 == 0 ? 1.0 : g.uniform(1.0, 6.0);
    const double got = lp_norm(f, p);
    const double want = oracle::lp_midpoint([&](double t) { return f(t); }, p, 1 << 18);
    EXPECT_NEAR(got, want, 1e-8 * want) << "p=" << p << " deg=" << f.degree();
  }
}

TEST(Norms, SupMatchesFineGrid) {
  oracle::Gen g(32);
  for (int i = 0; i < 100; ++i) {
    const auto f = g.poly(g.integer(1, 40), g.integer(0, 2));
    const auto s = sup_norm(f);
    const double grid = oracle::sup_grid([&](double t) { return f(t); }, 1 << 16);
    EXPECT_GE(s.value, grid * (1 - 1e-14)) << i;
    // Grid spacing h misses at most |f''| h^2 / 8 <= sum k^2 |c_k| h^2 / 8.
    double curv = 0.0;
    for (int k = 1; k <= f.degree(); ++k) {
      curv += k * k * (std::abs(f.cos_coeff(k)) + std::abs(f.sin_coeff(k)));
    }
    const double h = 2 * pi / (1 << 16);
    EXPECT_LE(s.value, grid + curv * h * h / 8 + 1e-14) << i;
    EXPECT_NEAR(std::abs(f(s.argmax)), s.value, 1e-14);
  }
}

TEST(Norms, LocalMaximaAreCritical) {
  oracle::Gen g(33);
  const auto f = g.poly(15);
  const auto top = sup_norm(f).value;
  const auto pts = local_abs_maxima(f, 0.5);
  ASSERT_FALSE(pts.empty());
  for (double t : pts) {
    EXPECT_GE(std::abs(f(t)), 0.5 * top * (1 - 1e-12));
    for (double h : {1e-5, -1e-5}) EXPECT_GE(std::abs(f(t)), std::abs(f(t + h)) - 1e-15);
  }
}

TEST(Norms, CallableAgreesWithPolynomial) {
  oracle::Gen g(34);
  for (int i = 0; i < 20; ++i) {
    const auto f = g.poly(g.integer(1, 12));
    const PeriodicFn fn = [&](double t) { return f(t); };
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
      EXPECT_NEAR(lp_norm(fn, p), lp_norm(f, p), 1e-8 * lp_norm(f, p)) << p;
    }
  }
}

TEST(Norms, GridFunction) {
  const auto gf = sample(TrigPoly::cosine(3), 256);
  EXPECT_EQ(gf.resolution, 256);
  EXPECT_NEAR(lp_norm(gf, 2.0), std::sqrt(pi), 1e-13);
  EXPECT_NEAR(lp_norm(gf, kInf), 1.0, 1e-15);
  EXPECT_THROW(sample(TrigPoly::cosine(1), 100), PreconditionError);
}

TEST(Norms, HolderAndMonotonicity) {
  oracle::Gen g(35);
  for (int i = 0; i < 30; ++i) {
    const auto f = g.poly(g.integer(1, 10));
    const auto h = g.poly(g.integer(1, 10));
    const double p = g.uniform(1.1, 5.0);
    const double q = conjugate_exponent(p);
    EXPECT_LE(std::abs(pairing(f, h)), lp_norm(f, p) * lp_norm(h, q) * (1 + 1e-10));
    // Normalized L_p means (2 pi)^{-1/p} ||f||_p increase with p.
    const double m1 = lp_norm(f, p) * std::pow(2 * pi, -1.0 / p);
    const double m2 = lp_norm(f, p + 1) * std::pow(2 * pi, -1.0 / (p + 1));
    EXPECT_LE(m1, m2 * (1 + 1e-10));
  }
}

TEST(Pairing, Orthogonality) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(pairing(TrigPoly::cosine(k), TrigPoly::cosine(k)), pi, 1e-15);
    EXPECT_NEAR(pairing_quadrature(TrigPoly::cosine(k), TrigPoly::cosine(k)), pi, 1e-14);
    EXPECT_NEAR(pairing(TrigPoly::cosine(k), TrigPoly::cosine(k + 1)), 0.0, 1e-15);
    EXPECT_NEAR(pairing(TrigPoly::cosine(k), TrigPoly::sine(k)), 0.0, 1e-15);
  }
}

TEST(Pairing, QuadratureMatchesCoefficients) {
  oracle::Gen g(36);
  for (int i = 0; i < 50; ++i) {
    const auto f = g.poly(g.integer(0, 40));
    const auto h = g.poly(g.integer(0, 40));
    EXPECT_NEAR(pairing_quadrature(f, h), pairing(f, h), 1e-12 * (1 + std::abs(pairing(f, h))));
  }
}

TEST(Pairing, ExtremalAnalytic) {
  for (int n = 21; n <= 60; ++n) {
    const auto d = extremal_difference(kSqrt, n);
    const auto g = extremal_dual(kSqrt, n);
    const double a = pairing_analytic(kSqrt, n);
    EXPECT_NEAR(pairing_quadrature(d, g), a, 1e-12 * a) << n;
    EXPECT_NEAR(pairing(d, g), a, 1e-13 * a) << n;
  }
  EXPECT_NEAR(pairing_analytic(kSqrt, 25), 0.394366837477437180816, 1e-15);
}

TEST(Convolve, MatchesQuadrature) {
  oracle::Gen g(37);
  for (int i = 0; i < 10; ++i) {
    const auto h = g.poly(g.integer(1, 8));
    const auto k = g.poly(g.integer(1, 8));
    const auto c = convolve(h, k);
    for (double x : {-2.0, 0.0, 0.7, 3.0}) {
      // (1/pi) int h(x - t) k(t) dt by a trapezoid rule exact for this degree.
      const int m = 64;
      double acc = 0.0;
      for (int j = 0; j < m; ++j) {
        const double t = -pi + 2 * pi * j / m;
        acc += h(x - t) * k(t);
      }
      EXPECT_NEAR(c(x), acc * (2 * pi / m) / pi, 1e-12);
    }
  }
}
