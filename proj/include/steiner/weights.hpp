#pragma once

#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/tensor.hpp"

namespace steiner {

// One-parameter-subgroup weight data: list j holds the weights of factor j,
// a^0 weakly decreasing, the others weakly increasing, each list summing to
// zero.
struct WeightVector {
  BigRat scale;  // the parameter N
  std::vector<std::vector<BigRat>> w;
};

namespace detail {
inline bool is_integer(const BigRat& q) { return boost::multiprecision::denominator(q) == 1; }
}  // namespace detail

// The canonical weights a_i^0 = N(k0 - 2i), a_i^j = N(-k_j + 2i).  N must be
// an integer, except that a half-integer is allowed when every side k_j is
// even (then all weights are still integers).
inline WeightVector canonical_weights(const BoundaryFormat& fmt, const BigRat& N) {
  bool all_even = true;
  for (std::size_t j = 1; j <= fmt.p(); ++j)
    if (fmt.k(j) % 2 != 0) all_even = false;
  if (all_even) {
    if (!detail::is_integer(N * 2))
      throw DomainError("weight scale must be a half-integer for this format");
  } else if (!detail::is_integer(N)) {
    throw DomainError("weight scale must be an integer when some side is odd");
  }

  WeightVector out;
  out.scale = N;
  out.w.resize(fmt.dims.size());
  long long k0 = static_cast<long long>(fmt.k(0));
  for (long long i = 0; i <= k0; ++i) out.w[0].push_back(N * BigRat(k0 - 2 * i));
  for (std::size_t j = 1; j < fmt.dims.size(); ++j) {
    long long kj = static_cast<long long>(fmt.k(j));
    for (long long i = 0; i <= kj; ++i) out.w[j].push_back(N * BigRat(-kj + 2 * i));
  }
  for (const auto& list : out.w) {
    BigRat sum = 0;
    for (const auto& x : list) {
      require(detail::is_integer(x), "canonical weight is not an integer");
      sum += x;
    }
    require(sum == 0, "factor weights must sum to zero");
  }
  return out;
}

// Minimum and maximum of the total weight over the support of the tensor.  A
// minimum >= 0 certifies that the limit of the one-parameter subgroup exists
// on the tensor, i.e. non-stability for that subgroup.
inline std::pair<BigRat, BigRat> weight_range(const BoundaryTensor& a,
                                                 const std::vector<std::vector<BigRat>>& w) {
  const auto& dims = a.format().dims;
  if (w.size() != dims.size()) throw DomainError("one weight list per factor required");
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].size() != dims[j])
      throw DomainError("weight list length mismatch on factor " + std::to_string(j));
    BigRat sum = 0;
    for (const auto& x : w[j]) sum += x;
    if (sum != 0) throw DomainError("weight list on factor " + std::to_string(j) + " has nonzero sum");
  }
  if (a.is_zero()) throw DomainError("the zero tensor has no weight support");

  bool first = true;
  BigRat lo = 0, hi = 0;
  std::vector<std::size_t> idx(dims.size(), 0);
  do {
    if (a.at(idx).is_zero()) continue;
    BigRat total = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) total += w[j][idx[j]];
    if (first || total < lo) lo = total;
    if (first || total > hi) hi = total;
    first = false;
  } while (next_multi_index(idx, dims));
  return {lo, hi};
}

inline std::pair<BigRat, BigRat> weight_range(const BoundaryTensor& a, const WeightVector& wv) {
  return weight_range(a, wv.w);
}

}  // namespace steiner
