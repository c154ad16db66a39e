#include "hartop/transport.hpp"

#include "hartop/errors.hpp"

namespace hartop {

namespace {

MultiIndex jacobian_exponent(std::size_t n) {
  MultiIndex off = MultiIndex::zero(n);
  for (std::size_t k = 0; k < n; ++k) off[k] = static_cast<std::int64_t>(k);
  return off;
}

}  // namespace

PsiMap::PsiMap(std::size_t n) : offset_(jacobian_exponent(n)) {}

MultiIndex PsiMap::forward(const MultiIndex& g) const {
  if (g.dim() != dim()) throw DimensionMismatch("exponent dimension differs from Psi");
  return exponent_pushforward(g) + offset_;
}

MultiIndex PsiMap::inverse(const MultiIndex& d) const {
  if (d.dim() != dim()) throw DimensionMismatch("exponent dimension differs from Psi");
  return exponent_pullback(d - offset_);
}

LinearCombination PsiMap::forward(const LinearCombination& v) const {
  LinearCombination out(v.dim());
  for (const auto& [e, c] : v.terms()) out.add_term(forward(e), c);
  return out;
}

LinearCombination PsiMap::inverse(const LinearCombination& v) const {
  LinearCombination out(v.dim());
  for (const auto& [e, c] : v.terms()) out.add_term(inverse(e), c);
  return out;
}

MultiIndex psi_monomial(const MultiIndex& g) { return PsiMap(g.dim()).forward(g); }

MultiIndex psi_inverse_monomial(const MultiIndex& d) { return PsiMap(d.dim()).inverse(d); }

LaurentSymbol conjugated_symbol(const LaurentSymbol& phi) { return pushforward(phi); }

CheckReport check_projection_relation(const MultiIndex& bound) {
  if (!in_polydisc_basis(bound)) throw DomainError("projection bound must be non-negative");
  const std::size_t n = bound.dim();
  const PsiMap psi(n);
  CheckReport report("projection-relation");
  report.param("n", std::to_string(n)).param("bound", bound.to_string());

  MultiIndex g = -bound;
  for (bool more = true; more;) {
    const bool in_triangle = in_hartogs_basis(g);
    const MultiIndex image = psi.forward(g);
    if (in_triangle != in_polydisc_basis(image)) {
      report.fail({"membership of " + g.to_string(),
                   std::string("[g in I] = ") + (in_triangle ? "true" : "false"),
                   "[Psi(g) in Z_+^n] for Psi(g) = " + image.to_string()});
    }
    // both sides of Psi P_tri Psi^-1 = P_poly on the polydisc monomial z^g
    const LinearCombination e = LinearCombination::basis_vector(g);
    const LinearCombination lhs = psi.forward(project(psi.inverse(e), SpaceKind::Triangle));
    const LinearCombination rhs = project(e, SpaceKind::Polydisc);
    if (lhs != rhs) {
      report.fail({"z^" + g.to_string(), rhs.to_string(), lhs.to_string()});
    }
    report.add_cases();

    more = false;
    for (std::size_t k = n; k-- > 0;) {
      if (g[k] < bound[k]) {
        ++g[k];
        more = true;
        break;
      }
      g[k] = -bound[k];
    }
  }
  return report;
}

}  // namespace hartop
