#include <doctest.h>

#include <map>
#include <random>

#include "hartop/errors.hpp"
#include "hartop/symbol.hpp"
#include "hartop/verify.hpp"
#include "support.hpp"

using hartop::ComplexRational;
using hartop::LaurentSymbol;
using hartop::MultiIndex;

namespace {

LaurentSymbol random_laurent(std::mt19937_64& rng, std::size_t n, int terms, std::int64_t bound) {
  LaurentSymbol f(n);
  for (int t = 0; t < terms; ++t) {
    f.add_term(testing::random_exponent(rng, n, bound), testing::random_coefficient(rng));
  }
  return f;
}

// Product by brute force: every pair of terms, accumulated in a plain map.
std::map<MultiIndex, ComplexRational> product_oracle(const LaurentSymbol& f, const LaurentSymbol& g) {
  std::map<MultiIndex, ComplexRational> acc;
  for (const auto& [a, c] : f.terms()) {
    for (const auto& [b, d] : g.terms()) acc[a + b] += c * d;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return acc;
}

}  // namespace

TEST_CASE("add_term drops cancelled coefficients") {
  LaurentSymbol f(2);
  f.add_term(MultiIndex{1, 0}, 3);
  f.add_term(MultiIndex{1, 0}, -3);
  CHECK(f.is_zero());
  CHECK(f.coefficient(MultiIndex{1, 0}) == ComplexRational(0));
  CHECK_THROWS_AS(LaurentSymbol(1), hartop::DomainError);
}

TEST_CASE("multiplication agrees with the pairwise-product oracle") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 2;
    const auto f = random_laurent(rng, n, 6, 3);
    const auto g = random_laurent(rng, n, 6, 3);
    CHECK((f * g).terms() == product_oracle(f, g));
    CHECK(f * g == g * f);
    CHECK(hartop::conjugate(f * g) == hartop::conjugate(f) * hartop::conjugate(g));
    CHECK(f - f == LaurentSymbol(n));
  }
  CHECK_THROWS_AS(LaurentSymbol(2) * LaurentSymbol(3), hartop::DimensionMismatch);
}

TEST_CASE("conjugation negates exponents and conjugates coefficients") {
  LaurentSymbol f(2);
  f.add_term(MultiIndex{-1, 3}, ComplexRational(2, 5));
  const auto g = hartop::conjugate(f);
  CHECK(g.coefficient(MultiIndex{1, -3}) == ComplexRational(2, -5));
  CHECK(g.size() == 1);
}

TEST_CASE("pushforward maps z~ variables to coordinates") {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = hartop::pushforward(hartop::ztilde(n, j, 2));
      CHECK(w == LaurentSymbol::monomial(2 * MultiIndex::unit(n, j)));
      CHECK(hartop::pullback(w) == hartop::ztilde(n, j, 2));
    }
  }
  CHECK(hartop::ztilde(3, 0) == LaurentSymbol::monomial(MultiIndex{1, -1, 0}));
  CHECK(hartop::ztilde(3, 2) == LaurentSymbol::monomial(MultiIndex{0, 0, 1}));
}

TEST_CASE("pushforward is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_laurent(rng, 3, 4, 3);
    const auto g = random_laurent(rng, 3, 4, 3);
    CHECK(hartop::pushforward(f * g) == hartop::pushforward(f) * hartop::pushforward(g));
    CHECK(hartop::pushforward(f + g) == hartop::pushforward(f) + hartop::pushforward(g));
  }
}

TEST_CASE("classification") {
  const auto cls = hartop::classify(LaurentSymbol::monomial(MultiIndex{1, -1}));
  CHECK_FALSE(cls.polydisc_analytic);
  CHECK(cls.triangle_analytic);
  CHECK(cls.triangle_hardy);
  CHECK(cls.inner_monomial);
  CHECK(hartop::to_string(cls) ==
        "polydisc_analytic=false triangle_analytic=true triangle_hardy=true inner_monomial=true");

  const auto boundary = hartop::classify(LaurentSymbol::monomial(MultiIndex{0, -1}));
  CHECK(boundary.triangle_hardy);
  CHECK_FALSE(boundary.triangle_analytic);

  // 3/5 + 4/5 i is unimodular
  CHECK(hartop::classify(LaurentSymbol::monomial(MultiIndex{0, 2}, {mpq_class(3, 5), mpq_class(4, 5)}))
            .inner_monomial);
  CHECK_FALSE(hartop::classify(LaurentSymbol::monomial(MultiIndex{0, 2}, 2)).inner_monomial);
  const auto zero = hartop::classify(LaurentSymbol(2));
  CHECK(zero.polydisc_analytic);
  CHECK_FALSE(zero.inner_monomial);
}

TEST_CASE("canonical serialization") {
  LaurentSymbol f(2);
  f.add_term(MultiIndex{1, -1}, 1);
  f.add_term(MultiIndex{-1, 3}, ComplexRational(mpq_class(1, 2), -2));
  CHECK(hartop::serialize_symbol(f) ==
        R"({"n":2,"terms":[{"exp":[-1,3],"re":"1/2","im":"-2"},{"exp":[1,-1],"re":"1","im":"0"}]})");
  CHECK(hartop::serialize_symbol(LaurentSymbol(3)) == R"({"n":3,"terms":[]})");
}

TEST_CASE("parse and serialize round-trip on random symbols") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto f = hartop::random_symbol(2 + t % 3, rng);
    const auto text = hartop::serialize_symbol(f);
    CHECK(hartop::parse_symbol(text) == f);
    CHECK(hartop::serialize_symbol(hartop::parse_symbol(text)) == text);
  }
}

TEST_CASE("parse accepts non-canonical input") {
  const auto f = hartop::parse_symbol(R"({
    "terms": [
      {"im": "0", "re": "2/4", "exp": [0, 0]},
      {"exp": [1, 1], "re": "0", "im": "0"}
    ],
    "n": 2
  })");
  CHECK(f == LaurentSymbol::constant(2, ComplexRational(mpq_class(1, 2))));
}

TEST_CASE("parse errors carry locations") {
  SUBCASE("syntax error reports line and column") {
    try {
      hartop::parse_symbol("{\"n\": 2,\n  \"terms\": [}\n");
      FAIL("expected ParseError");
    } catch (const hartop::ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 13);
    }
  }
  SUBCASE("structural error reports a JSON pointer") {
    try {
      hartop::parse_symbol(R"({"n":2,"terms":[{"exp":[1,2,3],"re":"1","im":"0"}]})");
      FAIL("expected ParseError");
    } catch (const hartop::ParseError& e) {
      CHECK(e.path() == "/terms/0/exp");
      CHECK(e.line() == 0);
    }
  }
  SUBCASE("bad rational") {
    CHECK_THROWS_AS((hartop::parse_symbol(R"({"n":2,"terms":[{"exp":[1,2],"re":"1/0","im":"0"}]})")),
                    hartop::ParseError);
  }
  SUBCASE("duplicate exponent") {
    CHECK_THROWS_AS((hartop::parse_symbol(R"({"n":2,"terms":[{"exp":[1,2],"re":"1","im":"0"},
                                                              {"exp":[1,2],"re":"2","im":"0"}]})")),
                    hartop::DuplicateExponent);
  }
  SUBCASE("dimension too small") {
    CHECK_THROWS_AS((hartop::parse_symbol(R"({"n":1,"terms":[]})")), hartop::ParseError);
  }
}

TEST_CASE("display form") {
  LaurentSymbol f(2);
  f.add_term(MultiIndex{1, -1}, 1);
  f.add_term(MultiIndex{0, 0}, mpq_class(1, 2));
  f.add_term(MultiIndex{0, 3}, ComplexRational::i());
  CHECK(hartop::to_display_string(f) == "(1/2) + (i)*z2^3 + z1*z2^-1");
  CHECK(hartop::to_display_string(LaurentSymbol(2)) == "0");
}

TEST_CASE("cone and lattice containments") {
  for (const auto& a : testing::cube(3, 3)) {
    if (hartop::in_analytic_cone(a)) CHECK(hartop::in_hartogs_basis(a));
  }
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_laurent(rng, 2 + t % 3, 3, 3);
    CHECK(hartop::classify(f).polydisc_analytic == hartop::classify(hartop::pullback(f)).triangle_analytic);
    const auto cls = hartop::classify(f);
    if (cls.triangle_analytic) CHECK(cls.triangle_hardy);
  }
}
