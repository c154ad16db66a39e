#include <doctest.h>

#include <random>

#include "hartop/transport.hpp"
#include "hartop/verify.hpp"
#include "support.hpp"

using hartop::LinearCombination;
using hartop::MultiIndex;
using hartop::PsiMap;
using hartop::SpaceKind;

namespace {

// z_k = w_k w_{k+1} ... w_n, then multiply by the Jacobian w_2 w_3^2 ... w_n^(n-1).
MultiIndex substitute(const MultiIndex& g) {
  const std::size_t n = g.dim();
  MultiIndex w = MultiIndex::zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j < n; ++j) w[j] += g[k];
  }
  for (std::size_t j = 1; j < n; ++j) w[j] += static_cast<std::int64_t>(j);
  return w;
}

LinearCombination random_vector(std::mt19937_64& rng, std::size_t n) {
  LinearCombination v(n);
  for (int t = 0; t < 6; ++t) v.add_term(testing::random_exponent(rng, n, 4), testing::random_coefficient(rng));
  return v;
}

}  // namespace

TEST_CASE("Psi on monomials is the substitution followed by the Jacobian") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const PsiMap psi(n);
    CHECK(psi.jacobian_offset() == substitute(MultiIndex::zero(n)));
    for (const auto& g : testing::cube(n, 2)) {
      CHECK(psi.forward(g) == substitute(g));
      CHECK(hartop::psi_monomial(g) == substitute(g));
      CHECK(psi.inverse(psi.forward(g)) == g);
      CHECK(hartop::psi_inverse_monomial(hartop::psi_monomial(g)) == g);
    }
  }
}

TEST_CASE("Psi maps the triangle basis onto the polydisc basis") {
  for (const auto& g : testing::cube(3, 4)) {
    CHECK(hartop::in_hartogs_basis(g) == hartop::in_polydisc_basis(hartop::psi_monomial(g)));
  }
}

TEST_CASE("Psi preserves inner products") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3;
    const PsiMap psi(n);
    const auto v = random_vector(rng, n);
    const auto w = random_vector(rng, n);
    CHECK(hartop::inner(psi.forward(v), psi.forward(w)) == hartop::inner(v, w));
    CHECK(psi.inverse(psi.forward(v)) == v);
  }
}

TEST_CASE("conjugated symbol intertwines multiplication") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 2;
    const PsiMap psi(n);
    const auto phi = hartop::random_symbol(n, rng);
    const auto v = random_vector(rng, n);
    CHECK(psi.forward(hartop::multiply(phi, v)) ==
          hartop::multiply(hartop::conjugated_symbol(phi), psi.forward(v)));
  }
}

TEST_CASE("projection relation holds exhaustively on small cubes") {
  for (std::size_t n : {2u, 3u}) {
    MultiIndex bound = MultiIndex::zero(n);
    for (std::size_t k = 0; k < n; ++k) bound[k] = 3;
    const auto report = hartop::check_projection_relation(bound);
    CHECK(report.passed());
    CHECK(report.cases() == (n == 2 ? 49u : 343u));
  }
}

TEST_CASE("polydisc projection computed directly matches the transported one") {
  std::mt19937_64 rng(33);
  const PsiMap psi(3);
  for (int t = 0; t < 50; ++t) {
    const auto v = random_vector(rng, 3);
    LinearCombination direct(3);
    const auto image = psi.forward(v);
    for (const auto& [g, c] : image.terms()) {
      if (g[0] >= 0 && g[1] >= 0 && g[2] >= 0) direct.add_term(g, c);
    }
    CHECK(psi.forward(hartop::project(v, SpaceKind::Triangle)) == direct);
  }
}
