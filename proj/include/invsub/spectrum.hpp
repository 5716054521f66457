#pragma once

#include <functional>
#include <vector>

#include "invsub/combinatorics.hpp"
#include "invsub/numeric.hpp"

namespace invsub {

/// Block structure of an operator on R^n with one Jordan block per
/// distinct root. Each part k of `complex_blocks` is a real Jordan block of
/// size 2k for a conjugate pair; each part k of `real_blocks` is a standard
/// Jordan block of size k for a real root.
struct BlockConfig {
  Partition complex_blocks;
  Partition real_blocks;

  unsigned n() const { return 2 * complex_blocks.n() + real_blocks.n(); }

  /// Accepts block sizes in any order.
  static BlockConfig from_blocks(std::vector<unsigned> complex_sizes,
                                 std::vector<unsigned> real_sizes);

  bool operator==(const BlockConfig&) const = default;
};

/// The set M_n in ascending order.
struct SpectrumSet {
  unsigned n = 0;
  std::vector<BigInt> values;

  bool operator==(const SpectrumSet&) const = default;
};

/// Entry d counts the invariant subspaces of dimension d.
struct DimensionProfile {
  std::vector<BigInt> coefficients;

  BigInt total() const;
  bool operator==(const DimensionProfile&) const = default;
};

/// Product of (k+1) over every block part k.
BigInt count_for_config(const BlockConfig& c);

/// Product of the per-block chain polynomials: 1+x+...+x^k for a real block
/// and 1+x^2+...+x^{2k} for a complex block.
DimensionProfile dimension_profile(const BlockConfig& c);

/// Calls `visit` once per BlockConfig of dimension n, grouped by the number
/// r of complex parts' total (r = 0..n/2), partitions in reverse-lex order.
void for_each_config(unsigned n, const std::function<void(const BlockConfig&)>& visit);

std::vector<BlockConfig> enumerate_configs(unsigned n);

/// M_n from the block configurations. Throws std::invalid_argument for n = 0.
SpectrumSet enumerate_Mn(unsigned n);

/// Same set, computed by direct recursion over block-size multisets without
/// any partition machinery.
SpectrumSet oracle_Mn(unsigned n);

}  // namespace invsub
