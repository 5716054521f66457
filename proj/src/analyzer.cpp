#include "invsub/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "invsub/exactalg.hpp"

namespace invsub {

unsigned JordanSignature::n() const {
  const unsigned real = std::accumulate(real_root_multiplicities.begin(),
                                        real_root_multiplicities.end(), 0u);
  const unsigned pairs = std::accumulate(complex_pair_multiplicities.begin(),
                                         complex_pair_multiplicities.end(), 0u);
  return real + 2 * pairs;
}

BlockConfig JordanSignature::as_block_config() const {
  return BlockConfig::from_blocks(complex_pair_multiplicities, real_root_multiplicities);
}

JordanSignature jordan_signature(const RationalMatrix& a) {
  JordanSignature sig;
  for (const auto& [factor, multiplicity] : squarefree_decompose(char_poly(a)).factors) {
    const unsigned real = count_real_roots(factor);
    const unsigned pairs = (static_cast<unsigned>(factor.degree()) - real) / 2;
    sig.real_root_multiplicities.insert(sig.real_root_multiplicities.end(), real, multiplicity);
    sig.complex_pair_multiplicities.insert(sig.complex_pair_multiplicities.end(), pairs,
                                           multiplicity);
  }
  std::sort(sig.real_root_multiplicities.begin(), sig.real_root_multiplicities.end(),
            std::greater<>());
  std::sort(sig.complex_pair_multiplicities.begin(), sig.complex_pair_multiplicities.end(),
            std::greater<>());
  return sig;
}

bool is_count_finite(const RationalMatrix& a) {
  return static_cast<std::size_t>(min_poly(a).degree()) == a.size();
}

SubspaceCount count_invariant_subspaces(const RationalMatrix& a) {
  if (!is_count_finite(a)) return InfiniteCount{};
  JordanSignature sig = jordan_signature(a);
  const BlockConfig config = sig.as_block_config();
  return FiniteCount{count_for_config(config), std::move(sig), dimension_profile(config)};
}

RationalMatrix realize_config(const BlockConfig& c) {
  RationalMatrix m(c.n());
  std::size_t offset = 0;

  unsigned b = 1;
  for (unsigned k : c.complex_blocks.parts()) {
    // k diagonal copies of [[0,-b],[b,0]] with 2x2 identities above them.
    for (unsigned i = 0; i < k; ++i) {
      const std::size_t p = offset + 2 * i;
      m(p, p + 1) = -Rational(b);
      m(p + 1, p) = Rational(b);
      if (i + 1 < k) {
        m(p, p + 2) = 1;
        m(p + 1, p + 3) = 1;
      }
    }
    offset += 2 * k;
    ++b;
  }

  unsigned lambda = 1;
  for (unsigned k : c.real_blocks.parts()) {
    for (unsigned i = 0; i < k; ++i) {
      m(offset + i, offset + i) = Rational(lambda);
      if (i + 1 < k) m(offset + i, offset + i + 1) = 1;
    }
    offset += k;
    ++lambda;
  }
  return m;
}

}  // namespace invsub
