#pragma once

#include <variant>
#include <vector>

#include "invsub/matrix.hpp"
#include "invsub/spectrum.hpp"

namespace invsub {

/// Root multiplicities of the characteristic polynomial, split into real
/// roots and conjugate pairs. Both lists are kept in descending order.
/// Root values are not recorded.
struct JordanSignature {
  std::vector<unsigned> real_root_multiplicities;
  std::vector<unsigned> complex_pair_multiplicities;

  unsigned n() const;
  /// The block configuration with one block per root.
  BlockConfig as_block_config() const;

  bool operator==(const JordanSignature&) const = default;
};

struct InfiniteCount {
  bool operator==(const InfiniteCount&) const = default;
};

struct FiniteCount {
  BigInt count;
  JordanSignature signature;
  DimensionProfile profile;

  bool operator==(const FiniteCount&) const = default;
};

using SubspaceCount = std::variant<InfiniteCount, FiniteCount>;

JordanSignature jordan_signature(const RationalMatrix& a);

/// True iff the minimal polynomial has degree n. Otherwise some root
/// carries two or more Jordan blocks and there are infinitely many
/// invariant subspaces.
bool is_count_finite(const RationalMatrix& a);

SubspaceCount count_invariant_subspaces(const RationalMatrix& a);

/// Block-diagonal matrix in real Jordan form: conjugate-pair blocks first
/// (a = 0, b = 1, 2, ...), then real blocks (lambda = 1, 2, ...). Blocks
/// follow the partitions' order.
RationalMatrix realize_config(const BlockConfig& c);

}  // namespace invsub
