#include "invsub/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace invsub {

Partition Partition::from_parts(std::vector<unsigned> parts) {
  unsigned n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n += parts[i];
  }
  return Partition(std::move(parts), n);
}

Partition Partition::canonical(std::vector<unsigned> parts) {
  std::erase(parts, 0u);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const unsigned n = std::accumulate(parts.begin(), parts.end(), 0u);
  return Partition(std::move(parts), n);
}

Composition Composition::from_parts(std::vector<unsigned> parts) {
  if (std::count(parts.begin(), parts.end(), 0u) > 1) {
    throw std::invalid_argument("a composition may contain at most one zero part");
  }
  Composition c;
  c.n_ = std::accumulate(parts.begin(), parts.end(), 0u);
  c.parts_ = std::move(parts);
  return c;
}

bool Multipartition::valid() const {
  if (thetas.size() != mu.length()) return false;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (thetas[i].n() != mu.parts()[i]) return false;
  }
  return true;
}

PartitionStream::PartitionStream(unsigned n) : n_(n) {}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ > 0) parts_.assign(1, n_);
    return true;
  }
  // Rightmost part greater than one; everything after it is a 1.
  auto it = std::find(parts_.begin(), parts_.end(), 1u);
  if (it == parts_.begin()) {
    done_ = true;
    return false;
  }
  const std::size_t i = static_cast<std::size_t>(it - parts_.begin()) - 1;
  unsigned rem = static_cast<unsigned>(parts_.size() - i - 1) + 1;
  const unsigned v = --parts_[i];
  parts_.resize(i + 1);
  while (rem >= v) {
    parts_.push_back(v);
    rem -= v;
  }
  if (rem > 0) parts_.push_back(rem);
  return true;
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  PartitionStream stream(n);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

BigInt partition_count(unsigned n) {
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    BigInt sum = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const unsigned g2 = k * (3 * k + 1) / 2;
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[m] = sum;
  }
  return p[n];
}

DerivedComposition derived_composition(const Multipartition& m) {
  if (!m.valid()) {
    throw std::invalid_argument("thetas do not partition the parts of mu");
  }
  DerivedComposition d;
  for (const auto& theta : m.thetas) {
    for (unsigned part : theta.parts()) {
      d.parts.push_back(part);
      d.n += part;
    }
  }
  return d;
}

std::string to_string(const std::vector<unsigned>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts[i]);
  }
  s += ')';
  return s;
}

std::string to_string(const Partition& p) { return to_string(p.parts()); }

}  // namespace invsub
