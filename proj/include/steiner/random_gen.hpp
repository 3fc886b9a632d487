#pragma once

#include <cstdint>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/rng.hpp"
#include "steiner/tensor.hpp"

namespace steiner {

// Seeded generators.  Every function draws from its own SplitMix64 stream in
// a fixed traversal order, so a (format, seed) pair pins the output exactly.

inline BoundaryTensor random_tensor(const BoundaryFormat& fmt, std::uint64_t seed,
                                    long long lo = -9, long long hi = 9,
                                    Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  BoundaryTensor a(fmt, f);
  for (std::size_t i = 0; i < a.size(); ++i) a.entry(i) = f.from_int(rng.uniform(lo, hi));
  return a;
}

// Random tensor with the degeneracy-forcing zero pattern attached to a box
// point beta = (beta_1..beta_p): cells with i_t <= beta_t for all t >= 1 and
// i_0 >= beta_1 + ... + beta_p are cleared.  Every such tensor has
// certificate zero.
inline BoundaryTensor degenerate_pattern_tensor(const BoundaryFormat& fmt,
                                                const std::vector<std::size_t>& beta,
                                                std::uint64_t seed,
                                                Field f = Field::rationals()) {
  if (beta.size() != fmt.p()) throw DomainError("one box coordinate per small factor required");
  for (std::size_t t = 0; t < beta.size(); ++t)
    if (beta[t] > fmt.k(t + 1)) throw DomainError("box point out of range");
  std::size_t beta0 = 0;
  for (std::size_t b : beta) beta0 += b;

  BoundaryTensor a = random_tensor(fmt, seed, -9, 9, f);
  std::vector<std::size_t> idx(fmt.dims.size(), 0);
  do {
    bool inside = idx[0] >= beta0;
    for (std::size_t t = 1; t < idx.size() && inside; ++t)
      if (idx[t] > beta[t - 1]) inside = false;
    if (inside) a.at(idx) = f.zero();
  } while (next_multi_index(idx, fmt.dims));
  return a;
}

// Random tensor supported on the diagonal i_0 = i_1 + ... + i_p, with
// nonzero entries there.
inline BoundaryTensor random_diagonal(const BoundaryFormat& fmt, std::uint64_t seed,
                                      Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  BoundaryTensor a(fmt, f);
  std::vector<std::size_t> idx(fmt.dims.size(), 0);
  do {
    if (idx[0] == side_index_sum(idx)) a.at(idx) = f.from_int(rng.uniform(1, 99));
  } while (next_multi_index(idx, fmt.dims));
  return a;
}

// Random tensor vanishing above the diagonal (i_0 > i_1 + ... + i_p), with
// the diagonal itself forced nonzero so the certificate has a chance to
// survive.
inline BoundaryTensor random_triangular(const BoundaryFormat& fmt, std::uint64_t seed,
                                        Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  BoundaryTensor a(fmt, f);
  std::vector<std::size_t> idx(fmt.dims.size(), 0);
  do {
    std::size_t s = side_index_sum(idx);
    if (idx[0] == s)
      a.at(idx) = f.from_int(rng.uniform(1, 9));
    else if (idx[0] < s)
      a.at(idx) = f.from_int(rng.uniform(-9, 9));
  } while (next_multi_index(idx, fmt.dims));
  return a;
}

// Product of elementary shears: determinant exactly one.
inline ExactMatrix random_special_linear(std::size_t dim, std::uint64_t seed,
                                         Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  ExactMatrix m = ExactMatrix::identity(dim, f);
  if (dim < 2) return m;
  std::size_t shears = 2 * dim;
  for (std::size_t s = 0; s < shears; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(dim) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(dim) - 2));
    if (j >= i) ++j;
    long long c = rng.uniform(-3, 3);
    if (c == 0) c = 1;
    ExactMatrix e = ExactMatrix::identity(dim, f);
    e.at(i, j) = f.from_int(c);
    m = m * e;
  }
  return m;
}

// Random invertible matrix with small entries (resampled until nonsingular).
inline ExactMatrix random_invertible(std::size_t dim, std::uint64_t seed,
                                     Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  for (;;) {
    ExactMatrix m(dim, dim, f);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = f.from_int(rng.uniform(-9, 9));
    if (rank_of(m) == dim) return m;
  }
}

inline std::vector<ExactMatrix> random_special_linear_triple(const BoundaryFormat& fmt,
                                                             std::uint64_t seed,
                                                             Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  std::vector<ExactMatrix> g;
  for (std::size_t j = 0; j < fmt.dims.size(); ++j)
    g.push_back(random_special_linear(fmt.dims[j], rng.next(), f));
  return g;
}

inline std::vector<ExactMatrix> random_invertible_triple(const BoundaryFormat& fmt,
                                                         std::uint64_t seed,
                                                         Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  std::vector<ExactMatrix> g;
  for (std::size_t j = 0; j < fmt.dims.size(); ++j)
    g.push_back(random_invertible(fmt.dims[j], rng.next(), f));
  return g;
}

// Deterministic nonzero coefficient vectors of length n+1, for hyperplane
// sampling.
inline std::vector<std::vector<BigRat>> sample_covectors(std::size_t length, std::size_t count,
                                                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<BigRat>> out;
  while (out.size() < count) {
    std::vector<BigRat> v(length);
    bool nonzero = false;
    for (auto& x : v) {
      long long c = rng.uniform(-9, 9);
      if (c != 0) nonzero = true;
      x = BigRat(c);
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

// Draws random tensors until the certificate is nonzero.  Generic draws are
// nondegenerate, so the retry loop is a formality; the guard is for safety.
inline BoundaryTensor random_nondegenerate(const BoundaryFormat& fmt, std::uint64_t seed,
                                           Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    BoundaryTensor a = random_tensor(fmt, rng.next(), -9, 9, f);
    if (!hyperdet_certificate(a).is_zero()) return a;
  }
  throw InternalError("no nondegenerate draw after 32 attempts");
}

// Triangular variant of the above.
inline BoundaryTensor random_nondegenerate_triangular(const BoundaryFormat& fmt,
                                                      std::uint64_t seed,
                                                      Field f = Field::rationals()) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    BoundaryTensor a = random_triangular(fmt, rng.next(), f);
    if (!hyperdet_certificate(a).is_zero()) return a;
  }
  throw InternalError("no nondegenerate triangular draw after 32 attempts");
}

}  // namespace steiner
