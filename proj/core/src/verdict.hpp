#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "format.hpp"
#include "psiapprox/bounds.hpp"

namespace psiapprox::detail {

/// lhs <= rhs, or within the relative slack (inconclusive).
inline Verdict compare_le(double lhs, double rhs, double slack) {
  if (lhs <= rhs) return Verdict::passed;
  if (lhs <= rhs + slack * std::abs(rhs)) return Verdict::inconclusive;
  return Verdict::failed;
}

inline Verdict worst(Verdict a, Verdict b) {
  return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

/// Applies the standard comparisons (lower <= measured, measured <= upper,
/// aux <= upper) on top of `extra`, and fills margins.
inline void finish(BoundReport& r, double slack, Verdict extra = Verdict::passed) {
  Verdict v = worst(extra, compare_le(r.lower, r.measured, slack));
  if (r.upper) {
    v = worst(v, compare_le(r.measured, *r.upper, slack));
    if (r.aux) v = worst(v, compare_le(*r.aux, *r.upper, slack));
    const double top = std::max(r.measured, r.aux.value_or(0.0));
    r.margin_high = top > 0.0 ? *r.upper / top : std::numeric_limits<double>::infinity();
  }
  r.margin_low = r.lower > 0.0 ? r.measured / r.lower : std::numeric_limits<double>::infinity();
  r.verdict = v;
  r.passed = v != Verdict::failed;
}

inline void add_note(BoundReport& r, const std::string& key, double value) {
  if (!r.notes.empty()) r.notes += "; ";
  r.notes += key + "=" + g17(value);
}

inline void add_note(BoundReport& r, const std::string& text) {
  if (!r.notes.empty()) r.notes += "; ";
  r.notes += text;
}

}  // namespace psiapprox::detail
