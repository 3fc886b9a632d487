#pragma once

#include "steiner/error.hpp"

namespace steiner {

// Dimension of the family of bundles whose unstable arrangement has exactly
// i hyperplanes on a common rational normal curve, inside the full moduli
// count (k-1)(n-1)(k+n+1).
inline long long moduli_dimension(long long n, long long k, long long i) {
  if (n < 2) throw DomainError("the moduli count needs n >= 2");
  if (k < 3) throw DomainError("the moduli count needs k >= 3");
  if (i < 0 || i > n + k + 1) throw DomainError("the curve incidence count is out of range");
  return (k - 1) * (n - 1) * (k + n + 1) - i * ((n - 1) * (k - 2) - 1);
}

}  // namespace steiner
