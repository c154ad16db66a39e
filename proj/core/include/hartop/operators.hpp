#pragma once

// Exact Toeplitz, Hankel and coordinate-multiplication operators on the Hardy
// spaces of the polydisc and the Hartogs triangle, realized by their action on
// individual monomials of L^2(T^n). Nothing is ever materialized as an
// infinite matrix: a Laurent symbol has finite support, so the image of a
// basis vector is a finite combination and every identity can be checked
// exactly on the genuine operator rather than on a finite section.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hartop/lattice.hpp"
#include "hartop/rational.hpp"
#include "hartop/symbol.hpp"

namespace hartop {

/// Finite combination of monomials z^g, g in Z^n, with exact coefficients.
class LinearCombination {
 public:
  using TermMap = std::map<MultiIndex, ComplexRational>;

  explicit LinearCombination(std::size_t n);
  static LinearCombination basis_vector(const MultiIndex& exponent);

  std::size_t dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  ComplexRational coefficient(const MultiIndex& exponent) const;
  void add_term(const MultiIndex& exponent, const ComplexRational& c);
  void add_scaled(const LinearCombination& other, const ComplexRational& c);

  LinearCombination& operator+=(const LinearCombination& o);
  LinearCombination& operator-=(const LinearCombination& o);
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const ComplexRational& c, const LinearCombination& v);

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  /// "0" or e.g. "2*e(0,-1) + (1/2-i)*e(1,-1)"
  std::string to_string() const;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// <v, w>, linear in v and conjugate-linear in w.
ComplexRational inner(const LinearCombination& v, const LinearCombination& w);

/// Orthogonal projection of L^2(T^n) onto the Hardy space: keeps the
/// monomials whose exponent lies in the space's basis lattice.
LinearCombination project(const LinearCombination& v, SpaceKind space);

/// phi * v in L^2(T^n), no projection.
LinearCombination multiply(const LaurentSymbol& phi, const LinearCombination& v);

// Primitive actions on basis vectors. Each throws DomainError when the input
// exponent is not in the space's basis (or, for the Hankel adjoint, when it is).
LinearCombination toeplitz_apply(const LaurentSymbol& phi, SpaceKind space, const MultiIndex& a);
/// <T_phi e_a, e_b> = phi^(b - a).
ComplexRational toeplitz_entry(const LaurentSymbol& phi, SpaceKind space, const MultiIndex& a,
                               const MultiIndex& b);
/// (I - P)(phi e_a): supported outside the basis lattice.
LinearCombination hankel_apply(const LaurentSymbol& phi, SpaceKind space, const MultiIndex& a);
/// H_phi^* e_g for g outside the basis lattice, assembled from the defining
/// relation <H^* e_g, e_a> = <e_g, H e_a> over the finitely many basis a that
/// can reach g.
LinearCombination hankel_adjoint_apply(const LaurentSymbol& phi, SpaceKind space,
                                       const MultiIndex& g);
/// Multiplication by the coordinate z_j (0-based j).
LinearCombination mult_apply(std::size_t j, SpaceKind space, const MultiIndex& a);
/// Adjoint of mult_apply: e_a -> e_{a - e_j} when that stays in the basis, else 0.
LinearCombination mult_adjoint_apply(std::size_t j, SpaceKind space, const MultiIndex& a);

/// Immutable composition tree of operators on one Hardy space.
///
/// Every node maps between two "sides": the Hardy space itself or its
/// orthocomplement in L^2(T^n). Hankel operators map Hardy -> complement and
/// their adjoints map back; everything else stays on the Hardy side. Products
/// and sums whose sides do not line up are rejected with IllFormedExpression.
class OperatorExpr {
 public:
  enum class Kind { Toeplitz, Hankel, Mult, Identity, Scalar, Diagonal, Adjoint, Product, Sum };
  enum class Side { Hardy, Complement };

  static OperatorExpr toeplitz(LaurentSymbol phi, SpaceKind space);
  static OperatorExpr hankel(LaurentSymbol phi, SpaceKind space);
  static OperatorExpr mult(std::size_t n, std::size_t j, SpaceKind space);
  static OperatorExpr identity(std::size_t n, SpaceKind space);
  static OperatorExpr scalar(std::size_t n, SpaceKind space, ComplexRational c);
  /// Diagonal operator e_a -> d_a e_a; exponents absent from `entries` map to 0.
  static OperatorExpr diagonal(std::size_t n, SpaceKind space,
                               std::map<MultiIndex, ComplexRational> entries);

  /// Adjoint, pushed down to the leaves: (AB)^* = B^* A^*, (A+B)^* = A^* + B^*.
  static OperatorExpr adjoint(const OperatorExpr& a);
  /// factors[0] * factors[1] * ... ; the last factor is applied first.
  static OperatorExpr product(std::vector<OperatorExpr> factors);
  static OperatorExpr sum(std::vector<OperatorExpr> terms);
  /// a^k with a^0 the identity.
  static OperatorExpr power(const OperatorExpr& a, unsigned k);

  Kind kind() const;
  SpaceKind space() const;
  std::size_t dim() const;
  Side domain() const;
  Side codomain() const;

  /// Leaf payloads.
  const LaurentSymbol& symbol() const;
  std::size_t coordinate() const;
  const ComplexRational& scalar_value() const;
  const std::map<MultiIndex, ComplexRational>& diagonal_entries() const;
  /// Adjoint / Product / Sum children.
  const std::vector<OperatorExpr>& children() const;

  std::string to_string() const;

  struct Node;

 private:
  explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  return OperatorExpr::product({a, b});
}
inline OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  return OperatorExpr::sum({a, b});
}
inline OperatorExpr adjoint(const OperatorExpr& a) { return OperatorExpr::adjoint(a); }

/// Exact image of the basis vector e_a. Throws DomainError if `a` is not on
/// the expression's domain side.
LinearCombination apply(const OperatorExpr& expr, const MultiIndex& a);
LinearCombination apply(const OperatorExpr& expr, const LinearCombination& v);

/// Dense exact finite section P_W expr P_W over enumerate_window(m, space).
struct ExactMatrix {
  std::vector<MultiIndex> labels;
  std::vector<ComplexRational> entries;  ///< row-major, size labels^2

  std::size_t size() const noexcept { return labels.size(); }
  const ComplexRational& at(std::size_t row, std::size_t col) const {
    return entries[row * labels.size() + col];
  }
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
};

/// Entry (row b, col a) is <expr e_a, e_b>. The expression must map the Hardy
/// side to itself.
ExactMatrix window_matrix(const OperatorExpr& expr, const MultiIndex& m);

ExactMatrix conjugate_transpose(const ExactMatrix& a);

}  // namespace hartop
