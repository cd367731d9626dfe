#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "psiapprox/errors.hpp"
#include "psiapprox/psi.hpp"
#include "support/oracles.hpp"

using namespace psiapprox;
using std::numbers::ln2;

namespace {

const PsiSpec kSqrt = PsiSpec::exponential(ln2, 0.5);
const PsiSpec kLinear = PsiSpec::exponential(ln2, 1.0);

}  // namespace

TEST(Psi, Values) {
  EXPECT_DOUBLE_EQ(kLinear(3.0), 0.125);
  EXPECT_DOUBLE_EQ(kSqrt(25.0), 0.03125);
  const auto inv = PsiSpec::generic([](double t) { return 1.0 / t; }, "inverse");
  EXPECT_DOUBLE_EQ(inv(4.0), 0.25);
  EXPECT_THROW(kSqrt(0.5), DomainError);
}

TEST(Psi, LogValueBeyondUnderflow) {
  EXPECT_DOUBLE_EQ(kSqrt.log_value(1e8), -ln2 * 1e4);
  EXPECT_EQ(kSqrt(1e8), 0.0);
}

TEST(Psi, Inverse) {
  EXPECT_NEAR(psi_inverse(kLinear, 0.125), 3.0, 1e-12);
  EXPECT_NEAR(psi_inverse(kSqrt, std::ldexp(1.0, -6)), 36.0, 1e-11);
  const auto gen = PsiSpec::generic([](double t) { return std::exp(-std::sqrt(t)) / t; });
  EXPECT_NEAR(psi_inverse(gen, gen(7.0)), 7.0, 7.0 * 1e-11);
  EXPECT_THROW(psi_inverse(kSqrt, 2.0), RangeError);
  EXPECT_THROW(psi_inverse(kSqrt, 0.0), RangeError);
}

TEST(Psi, InverseBisectionAgreesWithClosedForm) {
  oracle::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const double t = g.uniform(1.0, 1e4);
    const double y = kSqrt(t);
    EXPECT_NEAR(psi_inverse_bisection(kSqrt, y), t, 1e-10 * t) << "t=" << t;
    EXPECT_NEAR(psi_inverse(kSqrt, y), t, 1e-11 * t);
  }
}

TEST(Psi, Characteristics) {
  const auto c = characteristics(kSqrt, 25.0);
  EXPECT_NEAR(c.eta, 36.0, 1e-12);
  EXPECT_NEAR(c.eta_minus_t, 11.0, 1e-12);
  EXPECT_NEAR(c.mu, 25.0 / 11.0, 1e-13);
  EXPECT_NEAR(kSqrt(c.eta), kSqrt(25.0) / 2.0, 1e-16);

  const auto c4 = characteristics(kSqrt, 4.0);
  EXPECT_NEAR(c4.eta, 9.0, 1e-13);
  EXPECT_NEAR(c4.mu, 0.8, 1e-14);

  for (int n : {1, 2, 10, 1000}) {
    EXPECT_NEAR(characteristics(kLinear, n).eta_minus_t, 1.0, 1e-11) << n;
  }
}

TEST(Psi, CharacteristicsMatchBisectionOracle) {
  oracle::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const double alpha = g.uniform(0.1, 3.0);
    const double r = g.uniform(0.1, 1.0);
    const double t = g.uniform(1.0, 500.0);
    const auto spec = PsiSpec::exponential(alpha, r);
    const double want = static_cast<double>(oracle::eta_bisect(alpha, r, t));
    EXPECT_NEAR(eta(spec, t), want, 1e-11 * want) << alpha << " " << r << " " << t;
  }
}

TEST(Psi, GenericCharacteristicsAgreeWithExponential) {
  const auto gen = PsiSpec::generic([](double t) { return std::exp(-ln2 * std::sqrt(t)); });
  for (double t : {1.0, 4.0, 25.0, 100.0, 400.0}) {
    EXPECT_NEAR(eta(gen, t), eta(kSqrt, t), 1e-9 * eta(kSqrt, t)) << t;
  }
}

TEST(Psi, IntegerPart) {
  EXPECT_EQ(integer_part(36.0 - 1e-12), 36);
  EXPECT_EQ(integer_part(35.9), 35);
  EXPECT_EQ(integer_part(2.0), 2);
}

TEST(Classify, ExponentialSqrt) {
  const auto grid = log_grid(4.0, 1e4, 96);
  const auto rep = classify(kSqrt, grid);
  EXPECT_TRUE(rep.in_M);
  EXPECT_TRUE(rep.mu_increasing_to_infinity);
  EXPECT_TRUE(rep.eta_gap_bounded_below);
  EXPECT_FALSE(rep.eta_gap_bounded_above);
  EXPECT_FALSE(rep.witnesses.empty());
}

TEST(Classify, ExponentialLinearHasBoundedGap) {
  const auto rep = classify(kLinear, log_grid(1.0, 1e3, 64));
  EXPECT_TRUE(rep.eta_gap_bounded_above);
  EXPECT_TRUE(rep.in_M);
}

TEST(Classify, ConstantIsNotInM) {
  const auto flat = PsiSpec::generic([](double) { return 0.5; }, "flat");
  EXPECT_FALSE(classify(flat, log_grid(1.0, 1e3, 32)).in_M);
}

TEST(Classify, RejectsShortOrUnsortedGrid) {
  const std::vector<double> shortg{1, 2, 3};
  EXPECT_THROW(classify(kSqrt, shortg), PreconditionError);
  std::vector<double> unsorted = log_grid(1.0, 100.0, 16);
  std::swap(unsorted[2], unsorted[5]);
  EXPECT_THROW(classify(kSqrt, unsorted), PreconditionError);
}

TEST(TailIntegral, SqrtFamilyMatchesAntiderivative) {
  EXPECT_NEAR(tail_integral(kSqrt, 25.0), 0.58092776159065, 1e-10);
  for (double m : {1.0, 21.0, 50.0, 137.0, 200.0}) {
    const double want = oracle::tail_sqrt_exp(ln2, m);
    EXPECT_NEAR(tail_integral(kSqrt, m), want, 1e-9 * want) << m;
  }
}

TEST(TailIntegral, LinearFamily) {
  for (int n : {1, 3, 10, 40}) {
    const double want = std::ldexp(1.0, -n) / ln2;
    EXPECT_NEAR(tail_integral(kLinear, n), want, 1e-9 * want) << n;
  }
}

TEST(TailIntegral, UnderflowedPsiGivesZero) {
  EXPECT_EQ(tail_integral(kSqrt, 1e12), 0.0);
}

TEST(TailIntegral, BoundHolds) {
  for (int m = 21; m <= 200; ++m) {
    EXPECT_LE(tail_integral(kSqrt, m), tail_integral_bound(kSqrt, m)) << m;
  }
  EXPECT_TRUE(std::isinf(tail_integral_bound(kSqrt, 4.0)));
}

TEST(Thresholds, SqrtFamily) {
  const auto th = exp_family_thresholds(ln2, 0.5);
  EXPECT_NEAR(th.a, 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(th.b, 2.0550, 1e-3);
  EXPECT_EQ(th.n_min, 21);
}

// b re-derived as mu at 1 + 2 x2 with x2 = (ln 2 / (alpha (3^r - 2^r)))^{1/r},
// with eta from bisection rather than the closed form.
TEST(Thresholds, BMatchesBisectionOracle) {
  oracle::Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const double alpha = g.uniform(0.2, 2.0);
    const double r = g.uniform(0.2, 0.9);
    const long double x2 =
        std::pow(ln2 / (alpha * (std::pow(3.0L, r) - std::pow(2.0L, r))), 1.0L / r);
    const long double t = 1.0L + 2.0L * x2;
    const long double mu = t / (oracle::eta_bisect(alpha, r, t) - t);
    const auto th = exp_family_thresholds(alpha, r);
    EXPECT_NEAR(th.b, static_cast<double>(mu), 1e-9 * th.b) << alpha << " " << r;
  }
}

TEST(Thresholds, HoldForAllLargerN) {
  const auto th = exp_family_thresholds(ln2, 0.5);
  for (int n = static_cast<int>(th.n_min); n <= 100000; n += (n < 1000 ? 1 : 97)) {
    const auto c = characteristics(kSqrt, n);
    ASSERT_GE(c.eta_minus_t, th.a) << n;
    ASSERT_GE(c.mu, th.b) << n;
  }
}

TEST(Thresholds, RandomFamiliesHoldPastNMin) {
  oracle::Gen g(14);
  for (int i = 0; i < 50; ++i) {
    const double alpha = g.uniform(0.3, 2.0);
    const double r = g.uniform(0.2, 0.8);
    const auto th = exp_family_thresholds(alpha, r);
    if (th.n_min > 1'000'000) continue;
    const auto spec = PsiSpec::exponential(alpha, r);
    for (std::int64_t n = th.n_min; n < th.n_min + 200; ++n) {
      const auto c = characteristics(spec, static_cast<double>(n));
      ASSERT_GE(c.eta_minus_t, th.a * (1 - 1e-12)) << alpha << " " << r << " " << n;
      ASSERT_GE(c.mu, th.b * (1 - 1e-12)) << alpha << " " << r << " " << n;
    }
  }
}

TEST(Thresholds, FiniteAsRApproachesOne) {
  for (double r : {0.9, 0.99, 0.999, 0.9999}) {
    const auto th = exp_family_thresholds(ln2, r);
    EXPECT_TRUE(std::isfinite(th.a)) << r;
    EXPECT_TRUE(std::isfinite(th.b)) << r;
  }
  EXPECT_THROW(exp_family_thresholds(ln2, 1.0), DomainError);
  EXPECT_THROW(exp_family_thresholds(-1.0, 0.5), DomainError);
}

TEST(Records, RoundTrip) {
  const auto spec = PsiSpec::exponential(0.3, 0.7);
  const auto back = parse_psi_record(to_record(spec));
  EXPECT_EQ(back.alpha(), 0.3);
  EXPECT_EQ(back.r(), 0.7);
  EXPECT_EQ(parse_psi_record("kind=exponential alpha=ln2 r=0.5").alpha(), ln2);
  EXPECT_EQ(parse_alpha_token("ln2"), ln2);
  EXPECT_THROW(parse_alpha_token("two"), std::exception);
}
