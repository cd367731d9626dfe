#pragma once

#include <algorithm>

#include "psiapprox/norms.hpp"

namespace psiapprox::detail {

// Smallest power of two >= max(256, factor * (degree + 1)).
inline int grid_for_degree(int degree, int factor) {
  const long want = std::max<long>(NormTolerances::min_grid,
                                   static_cast<long>(factor) * (degree + 1));
  long m = 1;
  while (m < want) m <<= 1;
  return static_cast<int>(m);
}

}  // namespace psiapprox::detail
