#pragma once

// The unitary Psi f = J_{phi^-1} * (f o phi^-1) between the Hartogs-triangle
// and polydisc Hardy spaces (and its extension to all of L^2(T^n)).
//
// On a monomial z^g it is a pure reindexing: the composition contributes the
// exponent pushforward (partial sums) and the Jacobian contributes the fixed
// offset (0, 1, ..., n-1). Unitarity is therefore a combinatorial fact about
// an affine bijection of Z^n.

#include <cstddef>

#include "hartop/lattice.hpp"
#include "hartop/operators.hpp"
#include "hartop/report.hpp"
#include "hartop/symbol.hpp"

namespace hartop {

class PsiMap {
 public:
  explicit PsiMap(std::size_t n);

  std::size_t dim() const noexcept { return offset_.dim(); }
  /// Exponent of the Jacobian of the inverse biholomorphism: (0, 1, ..., n-1).
  const MultiIndex& jacobian_offset() const noexcept { return offset_; }

  MultiIndex forward(const MultiIndex& g) const;
  MultiIndex inverse(const MultiIndex& d) const;
  LinearCombination forward(const LinearCombination& v) const;
  LinearCombination inverse(const LinearCombination& v) const;

 private:
  MultiIndex offset_;
};

/// Psi on the monomial z^g: exponent_pushforward(g) + (0, 1, ..., n-1).
MultiIndex psi_monomial(const MultiIndex& g);
MultiIndex psi_inverse_monomial(const MultiIndex& d);

/// The polydisc symbol phi o phi^-1 with T_{phi,triangle} = Psi^-1 T_{., polydisc} Psi.
/// The Jacobian factors cancel under conjugation and do not appear.
LaurentSymbol conjugated_symbol(const LaurentSymbol& phi);

/// Psi P_triangle Psi^-1 = P_polydisc on every monomial with |g_k| <= bound_k,
/// together with [g in I] == [Psi(g) in Z_+^n].
CheckReport check_projection_relation(const MultiIndex& bound);

}  // namespace hartop
