#include "hartop/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "hartop/errors.hpp"

namespace hartop {

std::string_view to_string(SpaceKind space) {
  return space == SpaceKind::Polydisc ? "polydisc" : "triangle";
}

std::optional<SpaceKind> parse_space(std::string_view name) {
  if (name == "polydisc") return SpaceKind::Polydisc;
  if (name == "triangle") return SpaceKind::Triangle;
  return std::nullopt;
}

MultiIndex::MultiIndex(std::initializer_list<std::int64_t> entries)
    : MultiIndex(std::vector<std::int64_t>(entries)) {}

MultiIndex::MultiIndex(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.size() < kMinDimension) {
    throw DomainError("multi-index dimension must be at least 2, got " +
                      std::to_string(entries_.size()));
  }
}

MultiIndex MultiIndex::zero(std::size_t n) { return MultiIndex(std::vector<std::int64_t>(n, 0)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  if (j >= n) throw DomainError("coordinate index out of range");
  MultiIndex e = zero(n);
  e.entries_[j] = 1;
  return e;
}

bool MultiIndex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t MultiIndex::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.dim() != dim()) throw DimensionMismatch("multi-index dimensions differ");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  if (o.dim() != dim()) throw DimensionMismatch("multi-index dimensions differ");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex r = *this;
  for (auto& v : r.entries_) v = -v;
  return r;
}

MultiIndex operator*(std::int64_t c, MultiIndex a) {
  for (auto& v : a.entries_) v *= c;
  return a;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k != 0) s += ',';
    s += std::to_string(entries_[k]);
  }
  s += ')';
  return s;
}

PartialSums partial_sums(const MultiIndex& a) {
  PartialSums ps;
  ps.sums.resize(a.dim());
  std::partial_sum(a.entries().begin(), a.entries().end(), ps.sums.begin());
  return ps;
}

bool in_hartogs_basis(const MultiIndex& a) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    s += a[k];
    // 0-based k: the constraint s_{k+1} + k >= 0
    if (s + static_cast<std::int64_t>(k) < 0) return false;
  }
  return true;
}

bool in_analytic_cone(const MultiIndex& a) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    s += a[k];
    if (s < 0) return false;
  }
  return true;
}

bool in_polydisc_basis(const MultiIndex& a) {
  return std::all_of(a.entries().begin(), a.entries().end(), [](std::int64_t v) { return v >= 0; });
}

bool in_basis(const MultiIndex& a, SpaceKind space) {
  return space == SpaceKind::Triangle ? in_hartogs_basis(a) : in_polydisc_basis(a);
}

MultiIndex detail::to_polydisc_formal(const MultiIndex& a) {
  MultiIndex b = exponent_pushforward(a);
  for (std::size_t k = 0; k < b.dim(); ++k) b[k] += static_cast<std::int64_t>(k);
  return b;
}

MultiIndex to_polydisc(const MultiIndex& a) {
  if (!in_hartogs_basis(a)) {
    throw DomainError("exponent " + a.to_string() + " is not in the Hartogs basis lattice");
  }
  return detail::to_polydisc_formal(a);
}

MultiIndex from_polydisc(const MultiIndex& b) {
  if (!in_polydisc_basis(b)) {
    throw DomainError("exponent " + b.to_string() + " is not in the polydisc basis lattice");
  }
  MultiIndex a = b;
  for (std::size_t k = 1; k < b.dim(); ++k) a[k] = b[k] - b[k - 1] - 1;
  return a;
}

MultiIndex exponent_pushforward(const MultiIndex& g) {
  MultiIndex d = g;
  for (std::size_t k = 1; k < d.dim(); ++k) d[k] += d[k - 1];
  return d;
}

MultiIndex exponent_pullback(const MultiIndex& d) {
  MultiIndex g = d;
  for (std::size_t k = 1; k < d.dim(); ++k) g[k] = d[k] - d[k - 1];
  return g;
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  const auto ta = a.total();
  const auto tb = b.total();
  if (ta != tb) return ta < tb;
  return a < b;
}

std::vector<MultiIndex> enumerate_window(const MultiIndex& m, SpaceKind space) {
  if (!in_polydisc_basis(m)) {
    throw DomainError("window bounds must be non-negative, got " + m.to_string());
  }
  const std::size_t n = m.dim();
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zero(n);
  // odometer over the box, then sort into graded order
  for (bool more = true; more;) {
    out.push_back(cur);
    more = false;
    for (std::size_t k = n; k-- > 0;) {
      if (cur[k] < m[k]) {
        ++cur[k];
        more = true;
        break;
      }
      cur[k] = 0;
    }
  }
  std::sort(out.begin(), out.end(), graded_less);
  if (space == SpaceKind::Triangle) {
    for (auto& b : out) b = from_polydisc(b);
  }
  return out;
}

}  // namespace hartop
