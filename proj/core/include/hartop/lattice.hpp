#pragma once

// Exponent-lattice combinatorics for the Hartogs triangle and the polydisc.
//
// The Hardy space of the n-dimensional Hartogs triangle has the orthonormal
// basis {z^a : a in I}, where
//
//     I = { a in Z^n : s_k(a) + k - 1 >= 0,  k = 1..n },   s_k(a) = a_1 + ... + a_k,
//
// while the polydisc Hardy space is indexed by Z_+^n. The biholomorphism
// z -> (z1/z2, ..., z_{n-1}/z_n, z_n) turns monomials into monomials, so every
// map between the two spaces reduces to an affine map of exponents.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hartop {

inline constexpr std::size_t kMinDimension = 2;

enum class SpaceKind { Polydisc, Triangle };

std::string_view to_string(SpaceKind space);
std::optional<SpaceKind> parse_space(std::string_view name);

/// Integer exponent tuple of length n >= 2.
class MultiIndex {
 public:
  MultiIndex(std::initializer_list<std::int64_t> entries);
  explicit MultiIndex(std::vector<std::int64_t> entries);

  static MultiIndex zero(std::size_t n);
  /// The unit index e_j (0-based coordinate j).
  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t dim() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t k) const { return entries_[k]; }
  std::int64_t& operator[](std::size_t k) { return entries_[k]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_zero() const;
  std::int64_t total() const;

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
  MultiIndex operator-() const;
  friend MultiIndex operator*(std::int64_t c, MultiIndex a);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Lexicographic order; used for every ordered container in the library.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

  /// "(a1,a2,...,an)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// Running sums s_k = a_1 + ... + a_k.
struct PartialSums {
  std::vector<std::int64_t> sums;

  std::size_t size() const noexcept { return sums.size(); }
  std::int64_t operator[](std::size_t k) const { return sums[k]; }
};

PartialSums partial_sums(const MultiIndex& a);

/// a in I.
bool in_hartogs_basis(const MultiIndex& a);

/// All partial sums non-negative: the exponents of monomials bounded on the
/// triangle. The cone satisfies A + I ⊆ I.
bool in_analytic_cone(const MultiIndex& a);

/// a in Z_+^n.
bool in_polydisc_basis(const MultiIndex& a);

bool in_basis(const MultiIndex& a, SpaceKind space);

/// Basis bijection I -> Z_+^n induced by the unitary between the two Hardy
/// spaces: b_k = s_k(a) + k - 1. Throws DomainError if a is not in I.
MultiIndex to_polydisc(const MultiIndex& a);

/// Inverse of to_polydisc: a_1 = b_1, a_k = b_k - b_{k-1} - 1.
/// Throws DomainError if any b_k < 0.
MultiIndex from_polydisc(const MultiIndex& b);

/// Exponent of z^g composed with the inverse biholomorphism: d_k = s_k(g).
MultiIndex exponent_pushforward(const MultiIndex& g);

/// Inverse of exponent_pushforward: g_k = d_k - d_{k-1}.
MultiIndex exponent_pullback(const MultiIndex& d);

/// Graded order: total degree first, then lexicographic.
bool graded_less(const MultiIndex& a, const MultiIndex& b);

/// Window basis. Polydisc: every b with 0 <= b_k <= m_k in graded order.
/// Triangle: from_polydisc of that list, in the same order, so the unitary
/// maps the k-th triangle vector to the k-th polydisc vector.
std::vector<MultiIndex> enumerate_window(const MultiIndex& m, SpaceKind space);

namespace detail {
/// to_polydisc without the membership precondition.
MultiIndex to_polydisc_formal(const MultiIndex& a);
}  // namespace detail

}  // namespace hartop
