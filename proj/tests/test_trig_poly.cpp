#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "psiapprox/errors.hpp"
#include "psiapprox/kernel.hpp"
#include "psiapprox/trig_poly.hpp"
#include "support/oracles.hpp"

using namespace psiapprox;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

const PsiSpec kSqrt = PsiSpec::exponential(ln2, 0.5);
const PsiSpec kLinear = PsiSpec::exponential(ln2, 1.0);

Sequence ones() {
  return [](int) { return 1.0; };
}

// Expected coefficients of the extremal difference from the profile
// (k-n)/([eta]-n), 1, ([eta eta]-k)/([eta eta]-[eta]) times psi(k).
std::vector<double> profile_oracle(const PsiSpec& spec, int n, int e1, int e2) {
  std::vector<double> c(e2, 0.0);
  for (int k = n + 1; k < e2; ++k) {
    double w = 0.0;
    if (k < e1) w = double(k - n) / (e1 - n);
    else if (k == e1) w = 1.0;
    else w = double(e2 - k) / (e2 - e1);
    c[k - 1] = w * spec(k);
  }
  return c;
}

}  // namespace

TEST(TrigPoly, Evaluation) {
  EXPECT_DOUBLE_EQ(TrigPoly::cosine(1)(0.0), 1.0);
  EXPECT_NEAR(dirichlet(1, 0.0)(pi / 2), 0.5, 1e-15);
  EXPECT_NEAR(TrigPoly::sine(2)(pi / 4), 1.0, 1e-15);
}

TEST(TrigPoly, CanonicalDegree) {
  TrigPoly p(1.0, {1.0, 0.0, 0.0}, {0.0, 2.0});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), 0);
}

TEST(TrigPoly, ClenshawMatchesDirectSum) {
  oracle::Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const auto p = g.poly(g.integer(1, 80));
    const double t = g.uniform(-10.0, 10.0);
    EXPECT_NEAR(p(t), static_cast<double>(oracle::eval_direct(p, t)), 1e-12) << i;
  }
}

TEST(TrigPoly, DerivativeMatchesFiniteDifference) {
  oracle::Gen g(22);
  for (int i = 0; i < 50; ++i) {
    const auto p = g.poly(g.integer(1, 20));
    const double t = g.uniform(-pi, pi), h = 1e-6;
    EXPECT_NEAR(p.derivative()(t), (p(t + h) - p(t - h)) / (2 * h), 1e-6) << i;
  }
}

TEST(TrigPoly, RecordRoundTrip) {
  oracle::Gen g(23);
  for (int i = 0; i < 20; ++i) {
    const auto p = g.poly(g.integer(0, 30));
    const auto rec = to_record(p);
    EXPECT_EQ(rec.find(','), std::string::npos);
    EXPECT_EQ(parse_trig_record(rec), p);
  }
}

TEST(Dirichlet, ClosedFormMatchesSum) {
  oracle::Gen g(24);
  for (int i = 0; i < 1000; ++i) {
    const int k = g.integer(0, 64);
    const double beta = g.uniform(-3.0, 3.0);
    const double t = g.uniform(-pi, pi);
    EXPECT_NEAR(dirichlet_closed_form(k, beta, t), dirichlet(k, beta)(t), 1e-12)
        << k << " " << beta << " " << t;
  }
}

TEST(Dirichlet, RemovableSingularity) {
  for (int k : {0, 1, 5, 64}) {
    EXPECT_NEAR(dirichlet_closed_form(k, 0.0, 0.0), k + 0.5, 1e-12);
    EXPECT_NEAR(dirichlet_closed_form(k, 0.0, 1e-13), k + 0.5, 1e-9);
  }
}

TEST(Dirichlet, PiOverTBound) {
  oracle::Gen g(25);
  for (int i = 0; i < 2000; ++i) {
    const int k = g.integer(0, 200);
    const double beta = g.uniform(0.0, 2.0);
    const double t = g.uniform(1e-3, pi);
    EXPECT_LE(std::abs(dirichlet_closed_form(k, beta, t)), pi / t * (1 + 1e-12));
  }
}

TEST(HalfPiPhase, ExactForIntegers) {
  EXPECT_EQ(half_pi_phase(0).c, 1.0);
  EXPECT_EQ(half_pi_phase(1).c, 0.0);
  EXPECT_EQ(half_pi_phase(1).s, 1.0);
  EXPECT_EQ(half_pi_phase(2).c, -1.0);
  EXPECT_EQ(half_pi_phase(-1).s, -1.0);
}

TEST(WMeans, Examples) {
  EXPECT_EQ(w_nm(ones(), 0.0, 1, 2), TrigPoly::cosine(1));
  const TrigPoly want(0.0, {1.0, 1.0, 0.5}, {});
  EXPECT_LT(max_coeff_diff(w_nm(ones(), 0.0, 2, 4), want), 1e-15);
  EXPECT_LT(max_coeff_diff(w_nm_rearranged(ones(), 0.0, 2, 4), want), 1e-15);
  EXPECT_EQ(w_nm_rearranged(ones(), 0.0, 1, 2), TrigPoly::cosine(1));
  const TrigPoly half(0.0, {0.5, 0.125}, {});
  EXPECT_LT(max_coeff_diff(w_nm([](int k) { return std::ldexp(1.0, -k); }, 0.0, 1, 3), half),
            1e-16);
  EXPECT_THROW(w_nm(ones(), 0.0, 3, 3), PreconditionError);
}

TEST(WMeans, RearrangementMatchesDoubleSum) {
  oracle::Gen g(26);
  for (int i = 0; i < 200; ++i) {
    const int M = g.integer(2, 64);
    const int N = g.integer(1, M - 1);
    std::vector<double> lam(M + 1);
    for (auto& x : lam) x = g.uniform(-1.0, 1.0);
    const Sequence seq = [&](int k) { return lam[k]; };
    const double gamma = g.uniform(-pi, pi);
    EXPECT_LT(max_coeff_diff(w_nm(seq, gamma, N, M), w_nm_rearranged(seq, gamma, N, M)), 1e-14)
        << N << " " << M;
  }
}

TEST(Extremal, IndicesAtTwentyFive) {
  const auto idx = extremal_indices(kSqrt, 25);
  EXPECT_EQ(idx.eta_floor, 36);
  EXPECT_EQ(idx.eta_eta_floor, 49);
  EXPECT_THROW(extremal_indices(kLinear, 5), PreconditionError);
}

TEST(Extremal, SupportAndPlateau) {
  const auto d = extremal_difference(kSqrt, 25);
  EXPECT_EQ(d.degree(), 48);
  for (int k = 1; k <= 25; ++k) EXPECT_EQ(d.cos_coeff(k), 0.0) << k;
  for (int k = 26; k <= 48; ++k) EXPECT_GT(d.cos_coeff(k), 0.0) << k;
  EXPECT_DOUBLE_EQ(d.cos_coeff(36), std::ldexp(1.0, -6));
  EXPECT_FALSE(d.has_sine_part());
}

TEST(Extremal, DifferenceIdentity) {
  for (int n = 21; n <= 120; ++n) {
    const auto idx = extremal_indices(kSqrt, n);
    const Sequence psi = [](int k) { return kSqrt(k); };
    const auto lhs = extremal_difference(kSqrt, n);
    const auto rhs = w_nm(psi, 0.0, idx.eta_floor, idx.eta_eta_floor) -
                     w_nm(psi, 0.0, n, idx.eta_floor);
    // The double sum cancels harmonics k <= n whose partial sums are of
    // size psi(1), so the comparison is at that scale.
    EXPECT_LE(max_coeff_diff(lhs, rhs), 8 * std::numeric_limits<double>::epsilon() * kSqrt(1.0))
        << n;
    const double scale = kSqrt(n);
    const auto want = profile_oracle(kSqrt, n, idx.eta_floor, idx.eta_eta_floor);
    for (int k = 1; k <= lhs.degree(); ++k) {
      EXPECT_NEAR(lhs.cos_coeff(k), want[k - 1], 4e-16 * scale) << n << " " << k;
    }
    const auto dual = extremal_dual(kSqrt, n);
    for (int k = 1; k <= dual.degree(); ++k) {
      EXPECT_NEAR(dual.cos_coeff(k) * kSqrt(k), want[k - 1], 4e-16 * scale) << n << " " << k;
    }
  }
}

TEST(Derivative, Examples) {
  const auto d1 = psi_beta_derivative(TrigPoly::cosine(1, kSqrt(1.0)), kSqrt, 0.0);
  EXPECT_LT(max_coeff_diff(d1, TrigPoly::cosine(1)), 1e-15);
  const auto d2 = psi_beta_derivative(TrigPoly::cosine(2, kSqrt(2.0)), kSqrt, 1.0);
  EXPECT_LT(max_coeff_diff(d2, TrigPoly::sine(2, -1.0)), 1e-15);
  for (int k : {1, 3, 10}) {
    EXPECT_LT(max_coeff_diff(psi_beta_integral(TrigPoly::cosine(k), kSqrt, 0.0),
                             TrigPoly::cosine(k, kSqrt(k))),
              1e-17);
    EXPECT_LT(max_coeff_diff(psi_beta_integral(TrigPoly::cosine(k), kSqrt, 2.0),
                             TrigPoly::cosine(k, -kSqrt(k))),
              1e-17);
  }
}

TEST(Derivative, RoundTrip) {
  oracle::Gen g(27);
  for (int i = 0; i < 100; ++i) {
    auto p = g.poly(20);
    p -= TrigPoly::constant(p.a0_half());
    const double beta = g.uniform(-4.0, 4.0);
    const auto back = psi_beta_derivative(psi_beta_integral(p, kSqrt, beta), kSqrt, beta);
    EXPECT_LT(max_coeff_diff(back, p), 1e-14) << i;
  }
}

TEST(Derivative, PhaseMatchesPointwiseDefinition) {
  // Harmonic k of the derivative is cos(kt + beta pi / 2) / psi(k).
  oracle::Gen g(28);
  for (int i = 0; i < 100; ++i) {
    const int k = g.integer(1, 30);
    const double beta = g.uniform(-3.0, 3.0);
    const double t = g.uniform(-pi, pi);
    const auto d = psi_beta_derivative(TrigPoly::cosine(k), kSqrt, beta);
    EXPECT_NEAR(d(t), std::cos(k * t + beta * pi / 2) / kSqrt(k), 1e-12 / kSqrt(k));
  }
}

TEST(FourierPartialSum, Examples) {
  EXPECT_TRUE(fourier_partial_sum(TrigPoly::cosine(7), 6).is_zero());
  oracle::Gen g(29);
  const auto p = g.poly(6);
  EXPECT_EQ(fourier_partial_sum(p, 6), p);
  EXPECT_TRUE(fourier_partial_sum(extremal_difference(kSqrt, 25), 24).is_zero());
}

TEST(Kernel, GeometricSeriesAtZero) {
  const KernelSpec k{kLinear, 0.0, 3};
  EXPECT_NEAR(kernel_eval(k, 0.0, 1e-14), 0.25, 1e-13);
}

TEST(Kernel, PathsAgreeWithLongDoubleOracle) {
  oracle::Gen g(30);
  for (int i = 0; i < 60; ++i) {
    const int n = g.integer(21, 60);
    const double beta = g.uniform(0.0, 2.0);
    const double t = g.uniform(0.01, pi);
    const KernelSpec k{kSqrt, beta, n};
    const double tol = 1e-10 * kSqrt(n);
    long double want = 0.0L;
    for (int j = n; j < 200000; ++j) {
      const long double w = std::exp(-ln2 * std::sqrt(static_cast<long double>(j)));
      if (w < 1e-30L) break;
      want += w * std::cos(j * static_cast<long double>(t) - beta * pi / 2);
    }
    EXPECT_NEAR(kernel_eval(k, t, tol), static_cast<double>(want), 2 * tol) << n << " " << t;
    EXPECT_NEAR(kernel_eval_abel(k, t, tol), static_cast<double>(want), 2 * tol);
    EXPECT_NEAR(kernel_eval_direct(k, t, tol), static_cast<double>(want), 2 * tol);
  }
}

TEST(Kernel, DecayBound) {
  for (int n = 21; n <= 49; n += 7) {
    for (double beta : {0.0, 0.5, 1.0}) {
      const KernelSpec k{kSqrt, beta, n};
      const double tol = 1e-10 * kSqrt(n);
      for (int j = 1; j <= 256; ++j) {
        const double t = pi * j / 256;
        EXPECT_LE(std::abs(kernel_eval(k, t, tol)), 2 * pi * kSqrt(n) / t) << n << " " << t;
      }
    }
  }
}

TEST(Kernel, TruncationTailIsCertified) {
  const KernelSpec k{kSqrt, 0.5, 25};
  const double tol = 1e-10 * kSqrt(25);
  const auto tk = truncate_kernel(k, tol);
  EXPECT_LE(tk.tail_bound, tol);
  EXPECT_GT(tk.terms_end, 25);
  for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    EXPECT_NEAR(tk.poly(t), kernel_eval(k, t, tol), 3 * tol) << t;
  }
  EXPECT_EQ(kernel_switch_point(k), 1.0 / 11.0);
}
