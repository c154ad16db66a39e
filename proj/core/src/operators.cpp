#include "hartop/operators.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "hartop/errors.hpp"

namespace hartop {

// ---------------------------------------------------------------------------
// LinearCombination

LinearCombination::LinearCombination(std::size_t n) : n_(n) {
  if (n < kMinDimension) throw DomainError("dimension must be at least 2");
}

LinearCombination LinearCombination::basis_vector(const MultiIndex& exponent) {
  LinearCombination v(exponent.dim());
  v.add_term(exponent, 1);
  return v;
}

ComplexRational LinearCombination::coefficient(const MultiIndex& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? ComplexRational{} : it->second;
}

void LinearCombination::add_term(const MultiIndex& exponent, const ComplexRational& c) {
  if (exponent.dim() != n_) throw DimensionMismatch("exponent dimension differs from combination");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LinearCombination::add_scaled(const LinearCombination& other, const ComplexRational& c) {
  if (other.n_ != n_) throw DimensionMismatch("combination dimensions differ");
  if (c.is_zero()) return;
  for (const auto& [e, a] : other.terms_) add_term(e, a * c);
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
  add_scaled(o, 1);
  return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& o) {
  add_scaled(o, -1);
  return *this;
}

LinearCombination operator*(const ComplexRational& c, const LinearCombination& v) {
  LinearCombination out(v.dim());
  out.add_scaled(v, c);
  return out;
}

std::string LinearCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != ComplexRational(1)) s += "(" + c.to_string() + ")*";
    s += "e" + e.to_string();
  }
  return s;
}

ComplexRational inner(const LinearCombination& v, const LinearCombination& w) {
  if (v.dim() != w.dim()) throw DimensionMismatch("combination dimensions differ");
  ComplexRational acc;
  for (const auto& [e, c] : v.terms()) {
    const auto it = w.terms().find(e);
    if (it != w.terms().end()) acc += c * it->second.conj();
  }
  return acc;
}

LinearCombination project(const LinearCombination& v, SpaceKind space) {
  LinearCombination out(v.dim());
  for (const auto& [e, c] : v.terms()) {
    if (in_basis(e, space)) out.add_term(e, c);
  }
  return out;
}

LinearCombination multiply(const LaurentSymbol& phi, const LinearCombination& v) {
  if (phi.dim() != v.dim()) throw DimensionMismatch("symbol and combination dimensions differ");
  LinearCombination out(v.dim());
  for (const auto& [e, c] : v.terms()) {
    for (const auto& [g, a] : phi.terms()) out.add_term(e + g, a * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primitive actions

namespace {

void require_basis(const MultiIndex& a, SpaceKind space) {
  if (!in_basis(a, space)) {
    throw DomainError("exponent " + a.to_string() + " is not a basis index of the " +
                      std::string(to_string(space)) + " Hardy space");
  }
}

void require_complement(const MultiIndex& a, SpaceKind space) {
  if (in_basis(a, space)) {
    throw DomainError("exponent " + a.to_string() + " lies in the " +
                      std::string(to_string(space)) + " Hardy space, not its complement");
  }
}

void require_dim(std::size_t n, const MultiIndex& a) {
  if (a.dim() != n) throw DimensionMismatch("exponent dimension differs from operator");
}

}  // namespace

LinearCombination toeplitz_apply(const LaurentSymbol& phi, SpaceKind space, const MultiIndex& a) {
  require_dim(phi.dim(), a);
  require_basis(a, space);
  LinearCombination out(a.dim());
  for (const auto& [g, c] : phi.terms()) {
    MultiIndex target = a + g;
    if (in_basis(target, space)) out.add_term(target, c);
  }
  return out;
}

ComplexRational toeplitz_entry(const LaurentSymbol& phi, SpaceKind space, const MultiIndex& a,
                               const MultiIndex& b) {
  require_dim(phi.dim(), a);
  require_dim(phi.dim(), b);
  require_basis(a, space);
  require_basis(b, space);
  return phi.coefficient(b - a);
}

LinearCombination hankel_apply(const LaurentSymbol& phi, SpaceKind space, const MultiIndex& a) {
  require_dim(phi.dim(), a);
  require_basis(a, space);
  LinearCombination out(a.dim());
  for (const auto& [g, c] : phi.terms()) {
    MultiIndex target = a + g;
    if (!in_basis(target, space)) out.add_term(target, c);
  }
  return out;
}

LinearCombination hankel_adjoint_apply(const LaurentSymbol& phi, SpaceKind space,
                                       const MultiIndex& g) {
  require_dim(phi.dim(), g);
  require_complement(g, space);
  LinearCombination out(g.dim());
  // Only a = g - d with d in supp(phi) can have H e_a touching e_g.
  for (const auto& [d, unused] : phi.terms()) {
    const MultiIndex a = g - d;
    if (!in_basis(a, space)) continue;
    out.add_term(a, hankel_apply(phi, space, a).coefficient(g).conj());
  }
  return out;
}

LinearCombination mult_apply(std::size_t j, SpaceKind space, const MultiIndex& a) {
  require_basis(a, space);
  if (j >= a.dim()) throw DomainError("coordinate index out of range");
  // I and Z_+^n are both closed under a -> a + e_j
  return LinearCombination::basis_vector(a + MultiIndex::unit(a.dim(), j));
}

LinearCombination mult_adjoint_apply(std::size_t j, SpaceKind space, const MultiIndex& a) {
  require_basis(a, space);
  if (j >= a.dim()) throw DomainError("coordinate index out of range");
  MultiIndex target = a - MultiIndex::unit(a.dim(), j);
  if (!in_basis(target, space)) return LinearCombination(a.dim());
  return LinearCombination::basis_vector(target);
}

// ---------------------------------------------------------------------------
// OperatorExpr

struct OperatorExpr::Node {
  Kind kind;
  SpaceKind space;
  std::size_t n;
  Side domain = Side::Hardy;
  Side codomain = Side::Hardy;
  std::optional<LaurentSymbol> symbol;  // Toeplitz, Hankel; Adjoint(Toeplitz) holds conj
  std::size_t coordinate = 0;
  ComplexRational scalar;
  std::map<MultiIndex, ComplexRational> diagonal;
  std::vector<OperatorExpr> children;
};

namespace {

using Node = OperatorExpr::Node;
using Kind = OperatorExpr::Kind;

std::shared_ptr<Node> leaf(Kind kind, std::size_t n, SpaceKind space) {
  if (n < kMinDimension) throw DomainError("operator dimension must be at least 2");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->n = n;
  node->space = space;
  return node;
}


void require_compatible(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.dim() != b.dim()) throw IllFormedExpression("operands act in different dimensions");
  if (a.space() != b.space()) throw IllFormedExpression("operands act on different Hardy spaces");
}

}  // namespace

OperatorExpr OperatorExpr::toeplitz(LaurentSymbol phi, SpaceKind space) {
  auto node = leaf(Kind::Toeplitz, phi.dim(), space);
  node->symbol = std::move(phi);
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::hankel(LaurentSymbol phi, SpaceKind space) {
  auto node = leaf(Kind::Hankel, phi.dim(), space);
  node->symbol = std::move(phi);
  node->codomain = Side::Complement;
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::mult(std::size_t n, std::size_t j, SpaceKind space) {
  if (j >= n) throw DomainError("coordinate index out of range");
  auto node = leaf(Kind::Mult, n, space);
  node->coordinate = j;
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::identity(std::size_t n, SpaceKind space) {
  return OperatorExpr(leaf(Kind::Identity, n, space));
}

OperatorExpr OperatorExpr::scalar(std::size_t n, SpaceKind space, ComplexRational c) {
  auto node = leaf(Kind::Scalar, n, space);
  node->scalar = std::move(c);
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::diagonal(std::size_t n, SpaceKind space,
                                    std::map<MultiIndex, ComplexRational> entries) {
  auto node = leaf(Kind::Diagonal, n, space);
  for (auto& [e, c] : entries) {
    require_dim(n, e);
    require_basis(e, space);
    if (!c.is_zero()) node->diagonal.emplace(e, std::move(c));
  }
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::adjoint(const OperatorExpr& a) {
  switch (a.kind()) {
    case Kind::Adjoint:
      return a.children().front();
    case Kind::Product: {
      std::vector<OperatorExpr> factors;
      for (auto it = a.children().rbegin(); it != a.children().rend(); ++it) {
        factors.push_back(adjoint(*it));
      }
      return product(std::move(factors));
    }
    case Kind::Sum: {
      std::vector<OperatorExpr> terms;
      for (const auto& t : a.children()) terms.push_back(adjoint(t));
      return sum(std::move(terms));
    }
    case Kind::Identity:
      return a;
    case Kind::Scalar:
      return scalar(a.dim(), a.space(), a.scalar_value().conj());
    case Kind::Diagonal: {
      std::map<MultiIndex, ComplexRational> entries;
      for (const auto& [e, c] : a.diagonal_entries()) entries.emplace(e, c.conj());
      return diagonal(a.dim(), a.space(), std::move(entries));
    }
    default:
      break;
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Adjoint;
  node->n = a.dim();
  node->space = a.space();
  node->domain = a.codomain();
  node->codomain = a.domain();
  if (a.kind() == Kind::Toeplitz) {
    node->symbol = conjugate(a.symbol());
  } else if (a.kind() == Kind::Hankel) {
    node->symbol = a.symbol();
  }
  node->children = {a};
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::product(std::vector<OperatorExpr> factors) {
  if (factors.empty()) throw IllFormedExpression("empty product");
  std::vector<OperatorExpr> flat;
  for (auto& f : factors) {
    if (f.kind() == Kind::Product) {
      flat.insert(flat.end(), f.children().begin(), f.children().end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.size() == 1) return flat.front();
  for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
    require_compatible(flat[i], flat[i + 1]);
    if (flat[i].domain() != flat[i + 1].codomain()) {
      throw IllFormedExpression("cannot compose " + flat[i].to_string() + " after " +
                                flat[i + 1].to_string() + ": range and domain differ");
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->n = flat.front().dim();
  node->space = flat.front().space();
  node->domain = flat.back().domain();
  node->codomain = flat.front().codomain();
  node->children = std::move(flat);
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
  if (terms.empty()) throw IllFormedExpression("empty sum");
  if (terms.size() == 1) return terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    require_compatible(terms.front(), terms[i]);
    if (terms[i].domain() != terms.front().domain() ||
        terms[i].codomain() != terms.front().codomain()) {
      throw IllFormedExpression("summands map between different spaces");
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->n = terms.front().dim();
  node->space = terms.front().space();
  node->domain = terms.front().domain();
  node->codomain = terms.front().codomain();
  node->children = std::move(terms);
  return OperatorExpr(node);
}

OperatorExpr OperatorExpr::power(const OperatorExpr& a, unsigned k) {
  if (a.domain() != a.codomain()) throw IllFormedExpression("power of a non-endomorphism");
  if (k == 0) return identity(a.dim(), a.space());
  return product(std::vector<OperatorExpr>(k, a));
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }
SpaceKind OperatorExpr::space() const { return node_->space; }
std::size_t OperatorExpr::dim() const { return node_->n; }
OperatorExpr::Side OperatorExpr::domain() const { return node_->domain; }
OperatorExpr::Side OperatorExpr::codomain() const { return node_->codomain; }

const LaurentSymbol& OperatorExpr::symbol() const {
  if (!node_->symbol) throw std::logic_error("operator node carries no symbol");
  return *node_->symbol;
}
std::size_t OperatorExpr::coordinate() const { return node_->coordinate; }
const ComplexRational& OperatorExpr::scalar_value() const { return node_->scalar; }
const std::map<MultiIndex, ComplexRational>& OperatorExpr::diagonal_entries() const {
  return node_->diagonal;
}
const std::vector<OperatorExpr>& OperatorExpr::children() const { return node_->children; }

std::string OperatorExpr::to_string() const {
  switch (kind()) {
    case Kind::Toeplitz:
      return "T[" + to_display_string(symbol()) + "]";
    case Kind::Hankel:
      return "H[" + to_display_string(symbol()) + "]";
    case Kind::Mult:
      return "M" + std::to_string(coordinate() + 1);
    case Kind::Identity:
      return "I";
    case Kind::Scalar:
      return "(" + scalar_value().to_string() + ")";
    case Kind::Diagonal:
      return "D{" + std::to_string(diagonal_entries().size()) + "}";
    case Kind::Adjoint:
      return children().front().to_string() + "*";
    case Kind::Product: {
      std::string s;
      for (const auto& c : children()) s += (s.empty() ? "" : " ") + c.to_string();
      return s;
    }
    case Kind::Sum: {
      std::string s = "(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i != 0) s += " + ";
        s += children()[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

LinearCombination apply_basis(const OperatorExpr& expr, const MultiIndex& a);

LinearCombination apply_adjoint_leaf(const OperatorExpr& expr, const MultiIndex& a) {
  const OperatorExpr& base = expr.children().front();
  switch (base.kind()) {
    case Kind::Toeplitz:
      return toeplitz_apply(expr.symbol(), expr.space(), a);
    case Kind::Hankel:
      return hankel_adjoint_apply(expr.symbol(), expr.space(), a);
    case Kind::Mult:
      return mult_adjoint_apply(base.coordinate(), expr.space(), a);
    default:
      throw std::logic_error("unexpected adjoint leaf");
  }
}

LinearCombination apply_basis(const OperatorExpr& expr, const MultiIndex& a) {
  switch (expr.kind()) {
    case Kind::Toeplitz:
      return toeplitz_apply(expr.symbol(), expr.space(), a);
    case Kind::Hankel:
      return hankel_apply(expr.symbol(), expr.space(), a);
    case Kind::Mult:
      return mult_apply(expr.coordinate(), expr.space(), a);
    case Kind::Identity:
      require_basis(a, expr.space());
      return LinearCombination::basis_vector(a);
    case Kind::Scalar:
      require_basis(a, expr.space());
      return expr.scalar_value() * LinearCombination::basis_vector(a);
    case Kind::Diagonal: {
      require_basis(a, expr.space());
      LinearCombination out(a.dim());
      const auto it = expr.diagonal_entries().find(a);
      if (it != expr.diagonal_entries().end()) out.add_term(a, it->second);
      return out;
    }
    case Kind::Adjoint:
      return apply_adjoint_leaf(expr, a);
    case Kind::Product:
    case Kind::Sum:
      return apply(expr, LinearCombination::basis_vector(a));
  }
  throw std::logic_error("unknown operator kind");
}

LinearCombination apply_termwise(const OperatorExpr& expr, const LinearCombination& v) {
  LinearCombination out(v.dim());
  for (const auto& [e, c] : v.terms()) out.add_scaled(apply_basis(expr, e), c);
  return out;
}

}  // namespace

LinearCombination apply(const OperatorExpr& expr, const MultiIndex& a) {
  require_dim(expr.dim(), a);
  if (expr.domain() == OperatorExpr::Side::Hardy) {
    require_basis(a, expr.space());
  } else {
    require_complement(a, expr.space());
  }
  return apply_basis(expr, a);
}

LinearCombination apply(const OperatorExpr& expr, const LinearCombination& v) {
  if (v.dim() != expr.dim()) throw DimensionMismatch("vector dimension differs from operator");
  switch (expr.kind()) {
    case Kind::Product: {
      LinearCombination cur = v;
      const auto& fs = expr.children();
      for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        cur = apply(*it, cur);
        if (cur.is_zero()) break;
      }
      return cur;
    }
    case Kind::Sum: {
      LinearCombination out(v.dim());
      for (const auto& t : expr.children()) out += apply(t, v);
      return out;
    }
    default:
      return apply_termwise(expr, v);
  }
}

ExactMatrix window_matrix(const OperatorExpr& expr, const MultiIndex& m) {
  if (expr.domain() != OperatorExpr::Side::Hardy || expr.codomain() != OperatorExpr::Side::Hardy) {
    throw IllFormedExpression("window compression needs an operator on the Hardy space");
  }
  require_dim(expr.dim(), m);
  ExactMatrix out;
  out.labels = enumerate_window(m, expr.space());
  const std::size_t size = out.labels.size();
  std::map<MultiIndex, std::size_t> row_of;
  for (std::size_t i = 0; i < size; ++i) row_of.emplace(out.labels[i], i);
  out.entries.assign(size * size, ComplexRational{});
  for (std::size_t col = 0; col < size; ++col) {
    const LinearCombination image = apply(expr, out.labels[col]);
    for (const auto& [e, c] : image.terms()) {
      const auto it = row_of.find(e);
      if (it != row_of.end()) out.entries[it->second * size + col] = c;
    }
  }
  return out;
}

ExactMatrix conjugate_transpose(const ExactMatrix& a) {
  ExactMatrix out;
  out.labels = a.labels;
  const std::size_t size = a.size();
  out.entries.resize(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) out.entries[c * size + r] = a.at(r, c).conj();
  }
  return out;
}

}  // namespace hartop
