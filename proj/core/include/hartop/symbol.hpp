#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "hartop/lattice.hpp"
#include "hartop/rational.hpp"

namespace hartop {

/// A trigonometric polynomial on the n-torus: finitely many exponents in Z^n
/// with nonzero exact complex-rational coefficients.
class LaurentSymbol {
 public:
  using TermMap = std::map<MultiIndex, ComplexRational>;

  explicit LaurentSymbol(std::size_t n);

  static LaurentSymbol constant(std::size_t n, const ComplexRational& c);
  static LaurentSymbol monomial(const MultiIndex& exponent, const ComplexRational& c = 1);

  std::size_t dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Fourier coefficient at `exponent` (zero when absent).
  ComplexRational coefficient(const MultiIndex& exponent) const;

  /// Adds c to the coefficient at `exponent`, dropping it if the sum vanishes.
  void add_term(const MultiIndex& exponent, const ComplexRational& c);

  friend bool operator==(const LaurentSymbol&, const LaurentSymbol&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

LaurentSymbol add(const LaurentSymbol& f, const LaurentSymbol& g);
LaurentSymbol subtract(const LaurentSymbol& f, const LaurentSymbol& g);
LaurentSymbol scale(const LaurentSymbol& f, const ComplexRational& c);
/// Convolution of supports: (fg)^(g) = sum_h f^(h) g^(g - h).
LaurentSymbol multiply(const LaurentSymbol& f, const LaurentSymbol& g);
/// Boundary conjugate: coefficient at g becomes conj of coefficient at -g.
LaurentSymbol conjugate(const LaurentSymbol& f);
/// Composition with the inverse biholomorphism: exponents reindexed by
/// exponent_pushforward, coefficients unchanged.
LaurentSymbol pushforward(const LaurentSymbol& f);
/// Composition with the biholomorphism; inverse of pushforward.
LaurentSymbol pullback(const LaurentSymbol& f);

inline LaurentSymbol operator+(const LaurentSymbol& f, const LaurentSymbol& g) { return add(f, g); }
inline LaurentSymbol operator-(const LaurentSymbol& f, const LaurentSymbol& g) { return subtract(f, g); }
inline LaurentSymbol operator*(const LaurentSymbol& f, const LaurentSymbol& g) { return multiply(f, g); }

struct SymbolClass {
  bool polydisc_analytic = false;  ///< support in Z_+^n
  bool triangle_analytic = false;  ///< support in the analytic cone
  bool triangle_hardy = false;     ///< support in the Hartogs lattice I
  bool inner_monomial = false;     ///< single unimodular term in the analytic cone

  friend bool operator==(const SymbolClass&, const SymbolClass&) = default;
};

SymbolClass classify(const LaurentSymbol& f);

/// One-line description, e.g. "polydisc_analytic=false triangle_analytic=true ...".
std::string to_string(const SymbolClass& c);

/// Reads the JSON symbol format
///   {"n": 2, "terms": [{"exp": [1,-1], "re": "1", "im": "0"}, ...]}
/// Zero-coefficient terms are accepted and dropped. Throws ParseError, or
/// DuplicateExponent when an exponent repeats.
LaurentSymbol parse_symbol(std::string_view text);

/// Canonical compact JSON: keys in the order n, terms / exp, re, im; terms
/// sorted lexicographically by exponent; no zero terms; no trailing newline.
std::string serialize_symbol(const LaurentSymbol& f);

/// Human-readable polynomial form, e.g. "z1*z2^-1 + (1/2)".
std::string to_display_string(const LaurentSymbol& f);

/// z~_j^p where z~_j = z_j / z_{j+1} (j < n-1, 0-based) and z~_{n-1} = z_{n-1}.
/// These pull back the polydisc coordinates, so pushforward(ztilde(n, j, p))
/// is w_j^p.
LaurentSymbol ztilde(std::size_t n, std::size_t j, std::int64_t power = 1);

}  // namespace hartop
