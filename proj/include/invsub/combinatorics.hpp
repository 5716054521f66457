#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsub/numeric.hpp"

namespace invsub {

/// A weakly decreasing sequence of positive parts. The partition of zero
/// is the empty sequence.
class Partition {
 public:
  Partition() = default;

  /// Validates `parts` as given; throws std::invalid_argument otherwise.
  static Partition from_parts(std::vector<unsigned> parts);

  /// Sorts arbitrary positive parts into canonical order. Zero parts are
  /// dropped.
  static Partition canonical(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;

 private:
  explicit Partition(std::vector<unsigned> parts, unsigned n)
      : parts_(std::move(parts)), n_(n) {}

  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// Ordered nonnegative parts; zero may appear at most once.
class Composition {
 public:
  Composition() = default;
  static Composition from_parts(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  bool operator==(const Composition&) const = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// One partition per part of `mu`.
struct Multipartition {
  Composition mu;
  std::vector<Partition> thetas;

  /// True when thetas[i] partitions mu.parts()[i] for every i.
  bool valid() const;
};

/// Concatenation of a multipartition's partitions, zero parts dropped.
struct DerivedComposition {
  std::vector<unsigned> parts;
  unsigned n = 0;

  bool operator==(const DerivedComposition&) const = default;
};

/// Streams the partitions of n in reverse-lexicographic order, starting at
/// (n) and ending at (1,...,1).
class PartitionStream {
 public:
  explicit PartitionStream(unsigned n);

  /// Advances to the next partition. The first call yields (n).
  bool next();
  Partition current() const { return Partition::from_parts(parts_); }
  /// The current parts without constructing a Partition.
  const std::vector<unsigned>& parts() const { return parts_; }

 private:
  unsigned n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<unsigned> parts_;
};

/// Every partition of n exactly once, reverse-lexicographic.
std::vector<Partition> partitions_of(unsigned n);

/// p(n) by Euler's pentagonal-number recurrence.
BigInt partition_count(unsigned n);

/// Throws std::invalid_argument if `m` is not a valid multipartition.
DerivedComposition derived_composition(const Multipartition& m);

std::string to_string(const std::vector<unsigned>& parts);
std::string to_string(const Partition& p);

}  // namespace invsub
