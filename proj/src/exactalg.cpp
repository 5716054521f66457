#include "invsub/exactalg.hpp"

#include <stdexcept>

namespace invsub {

RationalPolynomial SquarefreeDecomposition::reconstruct() const {
  RationalPolynomial out = RationalPolynomial::constant(unit);
  for (const auto& f : factors) out *= pow(f.factor, f.multiplicity);
  return out;
}

RationalPolynomial char_poly(const RationalMatrix& a) {
  const std::size_t n = a.size();
  // c[n] = 1; M_k = A M_{k-1} + c[n-k+1] I; c[n-k] = -tr(A M_k) / k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rational(k);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial min_poly(const RationalMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t len = n * n;

  // Echelon basis of flattened powers; combo[i] expresses basis[i] as a
  // combination of I, A, ..., A^d.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Rational>> combos;

  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Rational> v = power.entries();
    std::vector<Rational> combo(d + 1);
    combo[d] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& coef = v[pivots[b]];
      if (coef == 0) continue;
      const Rational f = coef / basis[b][pivots[b]];
      for (std::size_t j = 0; j < len; ++j) v[j] -= f * basis[b][j];
      for (std::size_t j = 0; j < combos[b].size(); ++j) combo[j] -= f * combos[b][j];
    }
    std::size_t pivot = 0;
    while (pivot < len && v[pivot] == 0) ++pivot;
    if (pivot == len) return RationalPolynomial(std::move(combo));
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
    combos.push_back(std::move(combo));
    power = power * a;
  }
  // Cayley-Hamilton guarantees dependence by degree n.
  throw std::logic_error("min_poly: no dependency found among matrix powers");
}

RationalMatrix evaluate(const RationalPolynomial& p, const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix acc(n);
  const RationalMatrix id = RationalMatrix::identity(n);
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + id * c[i];
  return acc;
}

SquarefreeDecomposition squarefree_decompose(const RationalPolynomial& p) {
  if (p.is_constant()) {
    throw std::invalid_argument("squarefree decomposition needs a nonconstant polynomial");
  }
  SquarefreeDecomposition out;
  out.unit = p.leading();
  const RationalPolynomial f = p.monic();
  const RationalPolynomial df = f.derivative();

  RationalPolynomial a = gcd(f, df);
  RationalPolynomial b = divmod(f, a).first;
  RationalPolynomial c = divmod(df, a).first;
  RationalPolynomial d = c - b.derivative();
  for (unsigned i = 1; !b.is_constant(); ++i) {
    a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (!a.is_constant()) out.factors.push_back({a.monic(), i});
  }
  return out;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_constant()) {
    RationalPolynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

unsigned count_real_roots(const RationalPolynomial& p) {
  if (p.is_constant()) throw std::invalid_argument("count_real_roots needs a nonconstant polynomial");
  const auto chain = sturm_chain(p);
  if (!chain.back().is_constant()) {
    throw std::invalid_argument("count_real_roots needs a squarefree polynomial");
  }

  // Sign at +inf is the leading sign; at -inf it flips for odd degree.
  auto variations = [&](bool at_negative_infinity) {
    unsigned changes = 0;
    int last = 0;
    for (const auto& q : chain) {
      int s = q.leading() > 0 ? 1 : -1;
      if (at_negative_infinity && q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  return variations(true) - variations(false);
}

}  // namespace invsub
