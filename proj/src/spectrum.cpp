#include "invsub/spectrum.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <set>
#include <stdexcept>

namespace invsub {

namespace {

void require_positive(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
}

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 + x^step + x^{2 step} + ... + x^{k step}
Poly chain(unsigned k, unsigned step) {
  Poly p(k * step + 1, 0);
  for (unsigned i = 0; i <= k; ++i) p[i * step] = 1;
  return p;
}

using Wide = unsigned __int128;

BigInt to_bigint(Wide v) {
  BigInt b = static_cast<std::uint64_t>(v >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(v);
  return b;
}

// Distinct values of prod(k+1) over the partitions of m.
std::set<Wide> partition_products(unsigned m) {
  std::set<Wide> distinct;
  PartitionStream stream(m);
  while (stream.next()) {
    Wide product = 1;
    for (unsigned k : stream.parts()) product *= k + 1;
    distinct.insert(product);
  }
  return distinct;
}

// count_for_config is multiplicative over the (complex, real) split, so the
// products for a fixed r are the pairwise products of the two factor sets.
// Every product is at most 2^n, which fits in 128 bits for n <= kMaxWideN.
std::set<Wide> products_for_r(unsigned n, unsigned r) {
  const std::set<Wide> complex_products = partition_products(r);
  const std::set<Wide> real_products = partition_products(n - 2 * r);
  std::set<Wide> out;
  for (Wide a : complex_products) {
    for (Wide b : real_products) out.insert(a * b);
  }
  return out;
}

constexpr unsigned kMaxWideN = 127;

void oracle_real(unsigned rem, unsigned max_part, const BigInt& product,
                 std::set<BigInt>& out) {
  if (rem == 0) {
    out.insert(product);
    return;
  }
  for (unsigned a = std::min(max_part, rem); a >= 1; --a) {
    oracle_real(rem - a, a, product * (a + 1), out);
  }
}

void oracle_complex(unsigned rem, unsigned max_part, const BigInt& product,
                    std::set<BigInt>& out) {
  oracle_real(rem, rem, product, out);
  for (unsigned b = std::min(max_part, rem / 2); b >= 1; --b) {
    oracle_complex(rem - 2 * b, b, product * (b + 1), out);
  }
}

}  // namespace

BlockConfig BlockConfig::from_blocks(std::vector<unsigned> complex_sizes,
                                     std::vector<unsigned> real_sizes) {
  return {Partition::canonical(std::move(complex_sizes)),
          Partition::canonical(std::move(real_sizes))};
}

BigInt DimensionProfile::total() const {
  BigInt sum = 0;
  for (const auto& c : coefficients) sum += c;
  return sum;
}

BigInt count_for_config(const BlockConfig& c) {
  BigInt product = 1;
  for (unsigned k : c.complex_blocks.parts()) product *= k + 1;
  for (unsigned k : c.real_blocks.parts()) product *= k + 1;
  return product;
}

DimensionProfile dimension_profile(const BlockConfig& c) {
  Poly p{1};
  for (unsigned k : c.complex_blocks.parts()) p = multiply(p, chain(k, 2));
  for (unsigned k : c.real_blocks.parts()) p = multiply(p, chain(k, 1));
  return {std::move(p)};
}

void for_each_config(unsigned n, const std::function<void(const BlockConfig&)>& visit) {
  require_positive(n);
  for (unsigned r = 0; r <= n / 2; ++r) {
    PartitionStream complex_stream(r);
    while (complex_stream.next()) {
      PartitionStream real_stream(n - 2 * r);
      while (real_stream.next()) {
        visit({complex_stream.current(), real_stream.current()});
      }
    }
  }
}

std::vector<BlockConfig> enumerate_configs(unsigned n) {
  std::vector<BlockConfig> out;
  for_each_config(n, [&](const BlockConfig& c) { out.push_back(c); });
  return out;
}

SpectrumSet enumerate_Mn(unsigned n) {
  require_positive(n);
  // Each r is independent; merge by set union.
  if (n > kMaxWideN) throw std::invalid_argument("n too large for spectrum enumeration");
  std::vector<std::future<std::set<Wide>>> parts;
  for (unsigned r = 0; r <= n / 2; ++r) {
    const auto policy = n >= 24 ? std::launch::async : std::launch::deferred;
    parts.push_back(std::async(policy, products_for_r, n, r));
  }
  std::set<Wide> merged;
  for (auto& f : parts) merged.merge(f.get());
  SpectrumSet out{n, {}};
  out.values.reserve(merged.size());
  for (Wide v : merged) out.values.push_back(to_bigint(v));
  return out;
}

SpectrumSet oracle_Mn(unsigned n) {
  require_positive(n);
  std::set<BigInt> out;
  oracle_complex(n, n / 2, 1, out);
  return {n, {out.begin(), out.end()}};
}

}  // namespace invsub
