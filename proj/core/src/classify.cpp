#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "format.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/psi.hpp"

namespace psiapprox {
namespace {

// Flags are sampled, so "tends to infinity" and "bounded" are judged by
// comparing the upper half of the grid against the lower half.
constexpr double kMuGrowthFactor = 2.0;
constexpr double kGapSlack = 0.01;
constexpr double kMonotoneRel = 1e-12;

bool check_in_M(const PsiSpec& spec, std::span<const double> grid,
                std::vector<Witness>& w) {
  bool ok = true;
  const bool exp_kind = spec.is_exponential();

  std::vector<double> logs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    if (exp_kind) {
      logs[i] = spec.log_value(t);
      continue;
    }
    const double v = spec(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
      w.push_back({"positive", t, "psi(t) = " + detail::g17(v)});
      ok = false;
      logs[i] = -std::numeric_limits<double>::infinity();
    } else {
      logs[i] = std::log(v);
    }
  }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (logs[i + 1] > logs[i] + kMonotoneRel) {
      w.push_back({"non_increasing", grid[i + 1],
                   "psi increases after t = " + detail::g17(grid[i])});
      ok = false;
    }
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const double spacing = i + 1 < grid.size() ? grid[i + 1] - t : 1.0;
    for (double h : {0.5, 0.5 * spacing}) {
      if (!(h > 0.0)) continue;
      const double v0 = spec(t);
      const double second = v0 - 2.0 * spec(t + h) + spec(t + 2.0 * h);
      if (second < -PsiTolerances::convex_rel * v0) {
        w.push_back({"convex", t,
                     "second difference " + detail::g17(second) + " at h = " +
                         detail::g17(h)});
        ok = false;
        break;
      }
    }
  }

  const double log_top = spec.log_value(1.0);
  if (!(logs.back() < log_top + std::log(PsiTolerances::decay))) {
    w.push_back({"decay", grid.back(),
                 "psi(T) / psi(1) = " + detail::g17(std::exp(logs.back() - log_top))});
    ok = false;
  }
  return ok;
}

}  // namespace

ClassReport classify(const PsiSpec& spec, std::span<const double> grid) {
  if (grid.size() < 8) throw PreconditionError("classify: grid needs at least 8 points");
  if (!std::is_sorted(grid.begin(), grid.end()) || !(grid.front() >= 1.0)) {
    throw PreconditionError("classify: grid must be sorted and contained in [1, inf)");
  }

  ClassReport rep;
  rep.sample_grid.assign(grid.begin(), grid.end());
  rep.in_M = check_in_M(spec, grid, rep.witnesses);

  std::vector<Characteristics> ch;
  ch.reserve(grid.size());
  for (double t : grid) {
    try {
      ch.push_back(characteristics(spec, t));
    } catch (const std::exception& e) {
      rep.witnesses.push_back({"characteristics", t, e.what()});
      return rep;
    }
  }

  bool mu_ok = true;
  for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
    if (ch[i + 1].mu < ch[i].mu * (1.0 - 1e-9)) {
      rep.witnesses.push_back({"mu_increasing", ch[i + 1].t,
                               "mu drops from " + detail::g17(ch[i].mu) + " to " +
                                   detail::g17(ch[i + 1].mu)});
      mu_ok = false;
    }
  }
  if (!(ch.back().mu >= kMuGrowthFactor * ch.front().mu)) {
    rep.witnesses.push_back({"mu_to_infinity", ch.back().t,
                             "mu grows only from " + detail::g17(ch.front().mu) +
                                 " to " + detail::g17(ch.back().mu)});
    mu_ok = false;
  }
  rep.mu_increasing_to_infinity = rep.in_M && mu_ok;

  const std::size_t half = ch.size() / 2;
  double max_lo = 0.0, max_hi = 0.0;
  double min_lo = std::numeric_limits<double>::infinity(), min_hi = min_lo;
  std::size_t argmax_hi = half, argmin_hi = half;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const double g = ch[i].eta_minus_t;
    if (i < half) {
      max_lo = std::max(max_lo, g);
      min_lo = std::min(min_lo, g);
    } else {
      if (g > max_hi) { max_hi = g; argmax_hi = i; }
      if (g < min_hi) { min_hi = g; argmin_hi = i; }
    }
  }

  const bool above = max_hi <= (1.0 + kGapSlack) * max_lo + 1e-12;
  if (!above) {
    rep.witnesses.push_back({"eta_gap_bounded_above", ch[argmax_hi].t,
                             "gap " + detail::g17(max_hi) + " exceeds lower-half max " +
                                 detail::g17(max_lo)});
  }
  const bool below = std::min(min_lo, min_hi) > 0.0 &&
                     min_hi >= (1.0 - kGapSlack) * min_lo - 1e-12;
  if (!below) {
    rep.witnesses.push_back({"eta_gap_bounded_below", ch[argmin_hi].t,
                             "gap " + detail::g17(min_hi) + " falls below lower-half min " +
                                 detail::g17(min_lo)});
  }
  rep.eta_gap_bounded_above = rep.mu_increasing_to_infinity && above;
  rep.eta_gap_bounded_below = rep.mu_increasing_to_infinity && below;
  return rep;
}

}  // namespace psiapprox
