#include <doctest.h>

#include <random>

#include "hartop/errors.hpp"
#include "hartop/operators.hpp"
#include "hartop/verify.hpp"
#include "support.hpp"

using hartop::ComplexRational;
using hartop::LaurentSymbol;
using hartop::LinearCombination;
using hartop::MultiIndex;
using hartop::OperatorExpr;
using hartop::SpaceKind;

namespace {

LinearCombination e(const MultiIndex& a) { return LinearCombination::basis_vector(a); }

// <v, e_b> read off coefficient-wise.
ComplexRational entry(const LinearCombination& v, const MultiIndex& b) { return v.coefficient(b); }

std::vector<MultiIndex> basis_in_cube(std::size_t n, std::int64_t b, SpaceKind space) {
  std::vector<MultiIndex> out;
  for (const auto& a : testing::cube(n, b)) {
    if (hartop::in_basis(a, space)) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("inner product is linear in the first slot and conjugate-linear in the second") {
  LinearCombination v(2);
  v.add_term(MultiIndex{0, 0}, ComplexRational(1, 2));
  v.add_term(MultiIndex{1, 0}, 3);
  LinearCombination w(2);
  w.add_term(MultiIndex{0, 0}, ComplexRational::i());
  // (1+2i) * conj(i) = (1+2i)(-i) = 2 - i
  CHECK(hartop::inner(v, w) == ComplexRational(2, -1));
  CHECK(hartop::inner(w, v) == ComplexRational(2, 1));
  CHECK(hartop::inner(ComplexRational::i() * v, w) == ComplexRational::i() * hartop::inner(v, w));
}

TEST_CASE("Toeplitz entries are Fourier coefficients of the symbol") {
  std::mt19937_64 rng(21);
  for (auto space : {SpaceKind::Triangle, SpaceKind::Polydisc}) {
    for (int t = 0; t < 20; ++t) {
      const auto phi = hartop::random_symbol(2, rng);
      const auto basis = basis_in_cube(2, 3, space);
      for (const auto& a : basis) {
        const auto image = hartop::toeplitz_apply(phi, space, a);
        for (const auto& b : basis) {
          CHECK(entry(image, b) == phi.coefficient(b - a));
          CHECK(hartop::toeplitz_entry(phi, space, a, b) == phi.coefficient(b - a));
        }
        for (const auto& [g, c] : image.terms()) CHECK(hartop::in_basis(g, space));
      }
    }
  }
  CHECK_THROWS_AS((hartop::toeplitz_apply(LaurentSymbol(2), SpaceKind::Triangle, MultiIndex{0, -2})),
                  hartop::DomainError);
}

TEST_CASE("Toeplitz and Hankel parts add up to multiplication") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 2;
    const auto phi = hartop::random_symbol(n, rng);
    for (const auto& a : basis_in_cube(n, 2, SpaceKind::Triangle)) {
      const auto h = hartop::hankel_apply(phi, SpaceKind::Triangle, a);
      for (const auto& [g, c] : h.terms()) CHECK_FALSE(hartop::in_hartogs_basis(g));
      CHECK(hartop::toeplitz_apply(phi, SpaceKind::Triangle, a) + h == hartop::multiply(phi, e(a)));
    }
  }
}

TEST_CASE("Hankel adjoint satisfies the defining inner-product relation") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    hartop::RandomSymbolOptions opts;
    opts.exponent_bound = 2;
    const auto phi = hartop::random_symbol(2, rng, opts);
    // any basis a with <e_g, H e_a> != 0 has a = g - (support exponent), so
    // the cube of radius 4 around the origin covers g in radius 2
    const auto basis = basis_in_cube(2, 4, SpaceKind::Triangle);
    for (const auto& g : testing::cube(2, 2)) {
      if (hartop::in_hartogs_basis(g)) {
        CHECK_THROWS_AS(hartop::hankel_adjoint_apply(phi, SpaceKind::Triangle, g), hartop::DomainError);
        continue;
      }
      const auto adj = hartop::hankel_adjoint_apply(phi, SpaceKind::Triangle, g);
      for (const auto& a : basis) {
        const auto h = hartop::hankel_apply(phi, SpaceKind::Triangle, a);
        CHECK(hartop::inner(adj, e(a)) == hartop::inner(e(g), h));
      }
    }
  }
}

TEST_CASE("coordinate multiplications and their adjoints") {
  for (auto space : {SpaceKind::Triangle, SpaceKind::Polydisc}) {
    const auto basis = basis_in_cube(3, 3, space);
    for (std::size_t j = 0; j < 3; ++j) {
      for (const auto& a : basis) {
        CHECK(hartop::mult_apply(j, space, a) == e(a + MultiIndex::unit(3, j)));
        const auto adj = hartop::mult_adjoint_apply(j, space, a);
        for (const auto& b : basis) {
          CHECK(hartop::inner(adj, e(b)) == hartop::inner(e(a), hartop::mult_apply(j, space, b)));
        }
      }
    }
  }
  // z1 e_{(0,-1)} cannot be divided back out of the triangle basis
  CHECK(hartop::mult_adjoint_apply(0, SpaceKind::Triangle, MultiIndex{0, -1}).is_zero());
  CHECK(hartop::mult_adjoint_apply(1, SpaceKind::Triangle, MultiIndex{1, -1}) == e(MultiIndex{1, -2}));
}

TEST_CASE("expression trees: adjoint rules and well-formedness") {
  const auto t = OperatorExpr::toeplitz(LaurentSymbol::monomial(MultiIndex{1, -1}), SpaceKind::Triangle);
  const auto h = OperatorExpr::hankel(LaurentSymbol::monomial(MultiIndex{0, -2}), SpaceKind::Triangle);
  const auto m1 = OperatorExpr::mult(2, 0, SpaceKind::Triangle);

  CHECK(hartop::adjoint(hartop::adjoint(t)).kind() == OperatorExpr::Kind::Toeplitz);
  CHECK(h.codomain() == OperatorExpr::Side::Complement);
  CHECK(hartop::adjoint(h).domain() == OperatorExpr::Side::Complement);

  CHECK_THROWS_AS(t * h, hartop::IllFormedExpression);
  CHECK_THROWS_AS(t + h, hartop::IllFormedExpression);
  CHECK_THROWS_AS(t * OperatorExpr::identity(3, SpaceKind::Triangle), hartop::IllFormedExpression);
  CHECK_THROWS_AS(t * OperatorExpr::identity(2, SpaceKind::Polydisc), hartop::IllFormedExpression);
  CHECK_NOTHROW(hartop::adjoint(h) * h);
  CHECK_THROWS_AS(OperatorExpr::power(h, 2), hartop::IllFormedExpression);
  CHECK_THROWS_AS((OperatorExpr::diagonal(2, SpaceKind::Triangle, {{MultiIndex{0, -2}, 1}})), hartop::DomainError);
  CHECK_THROWS_AS((hartop::apply(h, MultiIndex{0, -2})), hartop::DomainError);
  CHECK_THROWS_AS((hartop::apply(hartop::adjoint(h), MultiIndex{0, 0})), hartop::DomainError);

  // (T M1)^* = M1^* T^* acting on a basis vector
  const auto tm = t * m1;
  const MultiIndex a{2, -1};
  CHECK(hartop::apply(hartop::adjoint(tm), a) ==
        hartop::apply(hartop::adjoint(m1), hartop::apply(hartop::adjoint(t), a)));
  CHECK(hartop::apply(OperatorExpr::power(m1, 3), a) == e(MultiIndex{5, -1}));
  CHECK(hartop::apply(OperatorExpr::power(m1, 0), a) == e(a));
}

TEST_CASE("window matrices") {
  const auto id = hartop::window_matrix(OperatorExpr::identity(2, SpaceKind::Triangle), MultiIndex{1, 1});
  REQUIRE(id.size() == 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) CHECK(id.at(r, c) == ComplexRational(r == c ? 1 : 0));
  }

  std::mt19937_64 rng(24);
  const auto phi = hartop::random_symbol(2, rng);
  const auto t = OperatorExpr::toeplitz(phi, SpaceKind::Triangle);
  const auto w = hartop::window_matrix(t, MultiIndex{3, 2});
  for (std::size_t r = 0; r < w.size(); ++r) {
    for (std::size_t c = 0; c < w.size(); ++c) {
      CHECK(w.at(r, c) == phi.coefficient(w.labels[r] - w.labels[c]));
    }
  }
  CHECK(hartop::conjugate_transpose(hartop::conjugate_transpose(w)) == w);
  CHECK_THROWS_AS((
      hartop::window_matrix(OperatorExpr::hankel(phi, SpaceKind::Triangle), MultiIndex{1, 1})),
      hartop::IllFormedExpression);
}

TEST_CASE("sums, scalars and diagonals") {
  const MultiIndex a{1, -1};
  const auto d = OperatorExpr::diagonal(2, SpaceKind::Triangle, {{a, ComplexRational(2, 1)}});
  const auto s = OperatorExpr::scalar(2, SpaceKind::Triangle, -1);
  CHECK(hartop::apply(d, a) == ComplexRational(2, 1) * e(a));
  CHECK(hartop::apply(d, MultiIndex{0, 0}).is_zero());
  CHECK(hartop::apply(hartop::adjoint(d), a) == ComplexRational(2, -1) * e(a));
  CHECK(hartop::apply(d + s, a) == ComplexRational(1, 1) * e(a));
}
