#pragma once

#include <cstddef>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/scalar.hpp"
#include "steiner/tensor.hpp"

namespace steiner {

// Monotone lattice paths in the box Z_{k1} x ... x Z_{kp}: every path starts
// at the origin, ends at (k1,...,kp), and each of its k0 steps increments one
// coordinate, so a path visits k0+1 lattice points.
struct PathSliceReport {
  std::size_t path_count = 0;
  // slice_totals[d][j]: over all paths, how many visited points have
  // coordinate d equal to j (directions d = 1..p stored at d-1).
  std::vector<std::vector<std::size_t>> slice_totals;
  // The per-direction common value of the totals above.
  std::vector<std::size_t> common;
};

inline BigInt admissible_path_count(const BoundaryFormat& fmt) {
  BigInt n = 1;
  for (std::size_t i = 2; i <= fmt.k(0); ++i) n *= BigInt(i);
  for (std::size_t j = 1; j <= fmt.p(); ++j) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= fmt.k(j); ++i) f *= BigInt(i);
    n /= f;
  }
  return n;
}

// Enumerates every admissible path and counts, per direction, the visited
// points in each parallel slice.  The totals must agree across the slices of
// a direction; the common values are returned.
inline PathSliceReport path_slice_totals(const BoundaryFormat& fmt) {
  if (admissible_path_count(fmt) > 1000000) throw DomainError("path enumeration too large");
  std::size_t p = fmt.p();
  PathSliceReport rep;
  rep.slice_totals.resize(p);
  for (std::size_t d = 0; d < p; ++d) rep.slice_totals[d].assign(fmt.k(d + 1) + 1, 0);

  std::vector<std::size_t> cur(p, 0);
  std::vector<std::vector<std::size_t>> trail;
  auto rec = [&](auto&& self) -> void {
    trail.push_back(cur);
    bool done = true;
    for (std::size_t d = 0; d < p; ++d)
      if (cur[d] < fmt.k(d + 1)) done = false;
    if (done) {
      rep.path_count += 1;
      for (const auto& pt : trail)
        for (std::size_t d = 0; d < p; ++d) rep.slice_totals[d][pt[d]] += 1;
    } else {
      for (std::size_t d = 0; d < p; ++d) {
        if (cur[d] == fmt.k(d + 1)) continue;
        cur[d] += 1;
        self(self);
        cur[d] -= 1;
      }
    }
    trail.pop_back();
  };
  rec(rec);

  for (std::size_t d = 0; d < p; ++d) {
    for (std::size_t j = 0; j + 1 < rep.slice_totals[d].size(); ++j)
      require(rep.slice_totals[d][j] == rep.slice_totals[d][j + 1],
              "parallel slices collected different totals");
    rep.common.push_back(rep.slice_totals[d][0]);
  }
  return rep;
}

}  // namespace steiner
