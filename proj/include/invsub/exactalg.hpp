#pragma once

#include <vector>

#include "invsub/matrix.hpp"
#include "invsub/polynomial.hpp"

namespace invsub {

struct SquarefreeFactor {
  RationalPolynomial factor;  // monic, squarefree, nonconstant
  unsigned multiplicity = 0;

  bool operator==(const SquarefreeFactor&) const = default;
};

/// p = unit * prod(factor_i ^ multiplicity_i), factors pairwise coprime,
/// listed in increasing multiplicity.
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<SquarefreeFactor> factors;

  RationalPolynomial reconstruct() const;
};

/// det(xI - A) by the Faddeev-LeVerrier recurrence. Monic of degree n.
RationalPolynomial char_poly(const RationalMatrix& a);

/// Monic annihilating polynomial of least degree. Searches for the first
/// power A^d lying in the span of I, A, ..., A^{d-1}.
RationalPolynomial min_poly(const RationalMatrix& a);

/// p(A) by Horner's scheme.
RationalMatrix evaluate(const RationalPolynomial& p, const RationalMatrix& a);

/// Yun's algorithm. Throws std::invalid_argument for zero or constant p.
SquarefreeDecomposition squarefree_decompose(const RationalPolynomial& p);

/// Number of distinct real roots of a squarefree nonconstant p, from the
/// Sturm chain's sign variations at -inf and +inf. Throws
/// std::invalid_argument if p is constant or has a repeated factor.
unsigned count_real_roots(const RationalPolynomial& p);

/// The Sturm chain p, p', -rem(p, p'), ... down to a nonzero constant.
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);

}  // namespace invsub
