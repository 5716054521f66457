#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <map>
#include <random>
#include <vector>

#include "invsub/analyzer.hpp"
#include "invsub/matrix.hpp"
#include "invsub/polynomial.hpp"

namespace invsub::testing {

/// det(xI - A) by cofactor expansion along the first row, entries kept as
/// polynomials.
inline RationalPolynomial cofactor_char_poly(const std::vector<std::vector<RationalPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RationalPolynomial det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<RationalPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      auto& row = minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
    }
    RationalPolynomial term = m[0][j] * cofactor_char_poly(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

inline RationalPolynomial cofactor_char_poly(const RationalMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<RationalPolynomial>> m(n, std::vector<RationalPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = RationalPolynomial::constant(-a(i, j));
      if (i == j) m[i][j] += RationalPolynomial{0, 1};
    }
  }
  return cofactor_char_poly(m);
}

/// Partitions of n with parts at most max_part, by direct recursion.
inline unsigned long long brute_partition_count(unsigned n, unsigned max_part) {
  if (n == 0) return 1;
  unsigned long long total = 0;
  for (unsigned k = std::min(n, max_part); k >= 1; --k) total += brute_partition_count(n - k, k);
  return total;
}

/// Dimension tally over every choice of one nested subspace per block:
/// a real block of size k offers dims 0..k, a complex block with part k
/// offers 0,2,...,2k.
inline std::vector<unsigned long long> brute_dimension_profile(const std::vector<unsigned>& real_blocks,
                                                               const std::vector<unsigned>& complex_parts) {
  std::vector<std::pair<unsigned, unsigned>> blocks;  // (k, step)
  unsigned n = 0;
  for (unsigned k : real_blocks) {
    blocks.push_back({k, 1});
    n += k;
  }
  for (unsigned k : complex_parts) {
    blocks.push_back({k, 2});
    n += 2 * k;
  }
  std::vector<unsigned long long> tally(n + 1, 0);
  std::vector<unsigned> choice(blocks.size(), 0);
  while (true) {
    unsigned dim = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) dim += choice[i] * blocks[i].second;
    ++tally[dim];
    std::size_t i = 0;
    while (i < blocks.size() && choice[i] == blocks[i].first) choice[i++] = 0;
    if (i == blocks.size()) break;
    ++choice[i];
  }
  return tally;
}

inline Rational random_rational(std::mt19937_64& rng, int range, bool fractions) {
  std::uniform_int_distribution<int> num(-range, range);
  if (!fractions) return Rational(num(rng));
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int range = 4,
                                    bool fractions = false) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, range, fractions);
  }
  return m;
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    RationalMatrix p = random_matrix(rng, n, 3, rng() % 2 == 0);
    if (determinant(p) != 0) return p;
  }
}

/// Block-diagonal matrix from explicit (eigenvalue, block size) pairs,
/// allowing repeated eigenvalues so derogatory cases arise.
inline RationalMatrix jordan_matrix(const std::vector<std::pair<int, unsigned>>& blocks) {
  unsigned n = 0;
  for (const auto& b : blocks) n += b.second;
  RationalMatrix m(n);
  std::size_t off = 0;
  for (const auto& [lambda, k] : blocks) {
    for (unsigned i = 0; i < k; ++i) {
      m(off + i, off + i) = lambda;
      if (i + 1 < k) m(off + i, off + i + 1) = 1;
    }
    off += k;
  }
  return m;
}

/// A mix of structured and dense matrices of size n: dense random, Jordan
/// forms with possibly repeated eigenvalues, and realized block configs.
inline RationalMatrix random_test_matrix(std::mt19937_64& rng, std::size_t n) {
  switch (rng() % 3) {
    case 0:
      return random_matrix(rng, n, 3, rng() % 2 == 0);
    case 1: {
      std::vector<std::pair<int, unsigned>> blocks;
      std::size_t left = n;
      while (left > 0) {
        const unsigned k = 1 + static_cast<unsigned>(rng() % left);
        blocks.push_back({static_cast<int>(rng() % 3) - 1, k});
        left -= k;
      }
      return jordan_matrix(blocks);
    }
    default: {
      const auto configs = enumerate_configs(static_cast<unsigned>(n));
      return realize_config(configs[rng() % configs.size()]);
    }
  }
}

inline RationalMatrix conjugate(const RationalMatrix& a, const RationalMatrix& p) {
  return inverse(p) * a * p;
}

}  // namespace invsub::testing
