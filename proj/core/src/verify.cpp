#include "hartop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hartop/errors.hpp"
#include "hartop/numerics.hpp"
#include "hartop/transport.hpp"

namespace hartop {

namespace {

constexpr SpaceKind kTri = SpaceKind::Triangle;
constexpr SpaceKind kPoly = SpaceKind::Polydisc;

std::string describe(const LaurentSymbol& f) { return to_display_string(f); }

void require_window(const MultiIndex& m, std::size_t n) {
  if (m.dim() != n) {
    throw DimensionMismatch("window " + m.to_string() + " does not have dimension " +
                            std::to_string(n));
  }
}

/// Compares two combinations and records a failure with the given input label.
bool expect_equal(CheckReport& report, const std::string& input, const LinearCombination& expected,
                  const LinearCombination& actual) {
  report.add_cases();
  if (expected == actual) return true;
  report.fail({input, expected.to_string(), actual.to_string()});
  return false;
}

std::string at(const MultiIndex& a) { return "a=" + a.to_string(); }

OperatorExpr mult(std::size_t n, std::size_t j, SpaceKind space = kTri) {
  return OperatorExpr::mult(n, j, space);
}

mpq_class pow_q(const mpq_class& q, unsigned long e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

std::string decimal(const mpq_class& q) {
  std::ostringstream os;
  os.precision(17);
  os << q.get_d();
  return os.str();
}

bool single_variable_power(const LaurentSymbol& theta, std::optional<std::size_t>& variable) {
  const MultiIndex d = pushforward(theta).terms().begin()->first;
  variable.reset();
  for (std::size_t k = 0; k < d.dim(); ++k) {
    if (d[k] == 0) continue;
    if (variable) return false;
    variable = k;
  }
  return true;
}

void require_inner(const LaurentSymbol& theta, const char* what) {
  if (!classify(theta).inner_monomial) {
    throw PreconditionViolated(std::string(what) + " must be a unimodular monomial in the analytic cone, got " +
                               describe(theta));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Random symbols

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

LaurentSymbol random_symbol(std::size_t n, std::mt19937_64& rng, const RandomSymbolOptions& options) {
  auto admissible = [&](const MultiIndex& e) {
    switch (options.support) {
      case SupportClass::Hartogs:
        return in_hartogs_basis(e);
      case SupportClass::AnalyticCone:
        return in_analytic_cone(e);
      case SupportClass::Any:
        break;
    }
    return true;
  };
  auto coefficient_part = [&] {
    const auto p = uniform_int(rng, -options.coefficient_bound, options.coefficient_bound);
    const auto q = uniform_int(rng, 1, options.coefficient_bound);
    mpq_class r(static_cast<long>(p), static_cast<unsigned long>(q));
    r.canonicalize();
    return r;
  };
  while (true) {
    LaurentSymbol f(n);
    const auto terms = uniform_int(rng, 1, static_cast<std::int64_t>(options.max_terms));
    for (std::int64_t t = 0; t < terms; ++t) {
      std::vector<std::int64_t> entries(n);
      MultiIndex e = MultiIndex::zero(n);
      do {
        for (std::size_t k = 0; k < n; ++k) {
          e[k] = uniform_int(rng, -options.exponent_bound, options.exponent_bound);
        }
      } while (!admissible(e));
      ComplexRational c;
      do {
        c = ComplexRational(coefficient_part(), coefficient_part());
      } while (c.is_zero());
      f.add_term(e, c);
    }
    if (!f.is_zero()) return f;
  }
}

// ---------------------------------------------------------------------------
// Main theorem

CheckReport check_conjugation(const LaurentSymbol& phi, const MultiIndex& m) {
  const std::size_t n = phi.dim();
  require_window(m, n);
  CheckReport report("conjugation");
  report.param("n", std::to_string(n)).param("window", m.to_string()).param("symbol", describe(phi));
  const PsiMap psi(n);
  const LaurentSymbol conj_sym = conjugated_symbol(phi);
  for (const auto& a : enumerate_window(m, kTri)) {
    const auto lhs = psi.forward(toeplitz_apply(phi, kTri, a));
    const auto rhs = toeplitz_apply(conj_sym, kPoly, to_polydisc(a));
    expect_equal(report, at(a), rhs, lhs);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Brown-Halmos

CheckReport check_brown_halmos_operator(const OperatorExpr& t, const MultiIndex& m) {
  const std::size_t n = t.dim();
  require_window(m, n);
  if (t.space() != kTri) throw PreconditionViolated("Brown-Halmos check expects a triangle operator");
  CheckReport report("brown-halmos");
  report.param("n", std::to_string(n)).param("window", m.to_string()).param("operator", t.to_string());
  const auto window = enumerate_window(m, kTri);
  for (std::size_t j = 0; j < n; ++j) {
    const auto conjugated = OperatorExpr::product({adjoint(mult(n, j)), t, mult(n, j)});
    for (const auto& a : window) {
      expect_equal(report, "j=" + std::to_string(j + 1) + " " + at(a), apply(t, a),
                   apply(conjugated, a));
    }
  }
  return report;
}

CheckReport check_brown_halmos(const LaurentSymbol& phi, const MultiIndex& m) {
  CheckReport report = check_brown_halmos_operator(OperatorExpr::toeplitz(phi, kTri), m);
  report.param("symbol", describe(phi));
  return report;
}

CheckReport check_brown_halmos_negative(const MultiIndex& m, std::uint64_t seed, std::size_t trials) {
  const std::size_t n = m.dim();
  CheckReport report("brown-halmos-negative");
  report.param("n", std::to_string(n)).param("window", m.to_string());
  report.param("seed", std::to_string(seed)).param("trials", std::to_string(trials));
  std::mt19937_64 rng(seed);
  const auto window = enumerate_window(m, kTri);
  std::size_t detected = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::map<MultiIndex, ComplexRational> entries;
    if (trial == 0) {
      entries.emplace(from_polydisc(MultiIndex::zero(n)), 1);
    } else {
      const auto count = uniform_int(rng, 1, 4);
      for (std::int64_t k = 0; k < count; ++k) {
        const auto idx = uniform_int(rng, 0, static_cast<std::int64_t>(window.size()) - 1);
        mpq_class v(static_cast<long>(uniform_int(rng, 1, 20)),
                    static_cast<unsigned long>(uniform_int(rng, 1, 20)));
        v.canonicalize();
        if (uniform_int(rng, 0, 1) == 1) v = -v;
        entries[window[static_cast<std::size_t>(idx)]] = ComplexRational(v);
      }
    }
    const auto diag = OperatorExpr::diagonal(n, kTri, entries);
    const CheckReport inner = check_brown_halmos_operator(diag, m);
    report.add_cases();
    if (!inner.passed()) {
      ++detected;
      if (trial == 0) {
        report.param("first_witness", inner.counterexample()->input + ": expected " +
                                          inner.counterexample()->expected + ", got " +
                                          inner.counterexample()->actual);
      }
    } else {
      std::string support;
      for (const auto& [e, c] : entries) support += e.to_string() + "->" + c.to_string() + " ";
      report.fail({"diagonal " + support, "a Brown-Halmos violation", "identity held on the window"});
    }
  }
  report.param("detected", std::to_string(detected));
  return report;
}

// ---------------------------------------------------------------------------
// Algebraic properties of triangle Toeplitz operators

CheckReport check_toeplitz_adjoint(const LaurentSymbol& phi, const MultiIndex& m) {
  require_window(m, phi.dim());
  CheckReport report("toeplitz-adjoint");
  report.param("window", m.to_string()).param("symbol", describe(phi));
  const auto t = OperatorExpr::toeplitz(phi, kTri);
  const ExactMatrix direct = window_matrix(adjoint(t), m);
  const ExactMatrix transposed = conjugate_transpose(window_matrix(t, m));
  for (std::size_t r = 0; r < direct.size(); ++r) {
    for (std::size_t c = 0; c < direct.size(); ++c) {
      report.add_cases();
      if (direct.at(r, c) != transposed.at(r, c)) {
        report.fail({"entry (" + direct.labels[r].to_string() + ", " + direct.labels[c].to_string() + ")",
                     transposed.at(r, c).to_string(), direct.at(r, c).to_string()});
      }
    }
  }
  return report;
}

CheckReport check_toeplitz_product(const LaurentSymbol& phi, const LaurentSymbol& psi,
                                   const MultiIndex& m) {
  require_window(m, phi.dim());
  const bool psi_analytic = classify(psi).triangle_analytic;
  const bool phi_coanalytic = classify(conjugate(phi)).triangle_analytic;
  if (!psi_analytic && !phi_coanalytic) {
    throw PreconditionViolated("product law needs psi or conj(phi) supported in the analytic cone");
  }
  CheckReport report("toeplitz-product");
  report.param("window", m.to_string()).param("phi", describe(phi)).param("psi", describe(psi));
  report.param("hypothesis", psi_analytic ? "psi analytic" : "conj(phi) analytic");
  const auto lhs = OperatorExpr::toeplitz(phi, kTri) * OperatorExpr::toeplitz(psi, kTri);
  const LaurentSymbol prod = multiply(phi, psi);
  for (const auto& a : enumerate_window(m, kTri)) {
    expect_equal(report, at(a), toeplitz_apply(prod, kTri, a), apply(lhs, a));
  }
  return report;
}

CheckReport check_semicommutator(const LaurentSymbol& phi, const LaurentSymbol& psi,
                                 const MultiIndex& m) {
  const std::size_t n = phi.dim();
  require_window(m, n);
  CheckReport report("semicommutator");
  report.param("window", m.to_string()).param("phi", describe(phi)).param("psi", describe(psi));
  const auto tt = OperatorExpr::toeplitz(phi, kTri) * OperatorExpr::toeplitz(psi, kTri);
  const auto t_prod = OperatorExpr::toeplitz(multiply(phi, psi), kTri);
  const auto hh = OperatorExpr::product({OperatorExpr::scalar(n, kTri, -1),
                                         adjoint(OperatorExpr::hankel(conjugate(phi), kTri)),
                                         OperatorExpr::hankel(psi, kTri)});
  for (const auto& a : enumerate_window(m, kTri)) {
    expect_equal(report, at(a), apply(hh, a), apply(tt, a) - apply(t_prod, a));
  }
  return report;
}

CheckReport check_symbol_recovery(const LaurentSymbol& phi) {
  const std::size_t n = phi.dim();
  CheckReport report("symbol-recovery");
  report.param("symbol", describe(phi));
  MultiIndex lo = MultiIndex::zero(n);
  MultiIndex hi = MultiIndex::zero(n);
  for (const auto& [e, c] : phi.terms()) {
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = std::min(lo[k], e[k]);
      hi[k] = std::max(hi[k], e[k]);
    }
  }
  LaurentSymbol recovered(n);
  MultiIndex g = lo;
  for (bool more = true; more;) {
    // a = (N, 0, ..., 0) with N large enough that a + g lands in I
    const PartialSums s = partial_sums(g);
    std::int64_t big = 0;
    for (std::size_t k = 0; k < n; ++k) big = std::max(big, -s[k] - static_cast<std::int64_t>(k));
    MultiIndex a = MultiIndex::zero(n);
    a[0] = big;
    const ComplexRational c = toeplitz_entry(phi, kTri, a, a + g);
    recovered.add_term(g, c);
    report.add_cases();
    if (c != phi.coefficient(g)) {
      report.fail({"g=" + g.to_string() + " via a=" + a.to_string(), phi.coefficient(g).to_string(),
                   c.to_string()});
    }
    more = false;
    for (std::size_t k = n; k-- > 0;) {
      if (g[k] < hi[k]) {
        ++g[k];
        more = true;
        break;
      }
      g[k] = lo[k];
    }
  }
  if (recovered != phi) {
    report.fail({"full symbol", describe(phi), describe(recovered)});
  }
  return report;
}

CheckReport check_toeplitz_algebra(const LaurentSymbol& phi, const LaurentSymbol& psi, const MultiIndex& m) {
  CheckReport report("toeplitz-algebra");
  report.param("window", m.to_string()).param("phi", describe(phi)).param("psi", describe(psi));
  report.merge(check_toeplitz_adjoint(phi, m));
  report.merge(check_toeplitz_product(phi, psi, m));
  report.merge(check_semicommutator(phi, psi, m));
  report.merge(check_symbol_recovery(phi));
  return report;
}

// ---------------------------------------------------------------------------
// Coburn alternative

CheckReport check_coburn_failure(std::size_t n) {
  CheckReport report("coburn");
  report.param("n", std::to_string(n));
  MultiIndex g = MultiIndex::zero(n);
  g[0] = -1;
  g[1] = 3;
  const auto phi = OperatorExpr::toeplitz(LaurentSymbol::monomial(g), kTri);
  const MultiIndex one = MultiIndex::zero(n);
  const LinearCombination zero(n);
  expect_equal(report, "T(1) for conj(z1) z2^3", zero, apply(phi, one));
  expect_equal(report, "T*(1) for conj(z1) z2^3", zero, apply(adjoint(phi), one));

  // analytic control z1/z2: T^*(1) = 0 but T(1) = z1/z2, so T is injective
  MultiIndex h = MultiIndex::zero(n);
  h[0] = 1;
  h[1] = -1;
  const auto control = OperatorExpr::toeplitz(LaurentSymbol::monomial(h), kTri);
  expect_equal(report, "T*(1) for z1/z2", zero, apply(adjoint(control), one));
  expect_equal(report, "T(1) for z1/z2", LinearCombination::basis_vector(h), apply(control, one));
  return report;
}

// ---------------------------------------------------------------------------
// Inner functions and shifts

unsigned shift_vanishing_order(const MultiIndex& g, const MultiIndex& a) {
  if (!in_analytic_cone(g) || g.is_zero()) {
    throw PreconditionViolated("vanishing order needs a nonzero exponent in the analytic cone");
  }
  if (!in_hartogs_basis(a)) throw DomainError("exponent " + a.to_string() + " is not in I");
  const PartialSums sg = partial_sums(g);
  const PartialSums sa = partial_sums(a);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (sg[k] >= 1) best = std::min(best, (sa[k] + static_cast<std::int64_t>(k)) / sg[k]);
  }
  return static_cast<unsigned>(best + 1);
}

CheckReport check_inner_shift(const LaurentSymbol& theta, const MultiIndex& m, unsigned kmax) {
  require_inner(theta, "theta");
  const auto& [g, c] = *theta.terms().begin();
  if (g.is_zero()) throw PreconditionViolated("theta must be nonconstant");
  const std::size_t n = theta.dim();
  require_window(m, n);
  CheckReport report("inner-shift");
  report.param("window", m.to_string()).param("theta", describe(theta)).param("kmax", std::to_string(kmax));

  const auto t = OperatorExpr::toeplitz(theta, kTri);
  const auto t_adj = adjoint(t);
  std::set<MultiIndex> images;
  for (const auto& a : enumerate_window(m, kTri)) {
    // isometry: e_a -> c e_{a+g}, injective on the basis, T^*T = I
    const auto image = apply(t, a);
    expect_equal(report, "T e_a, " + at(a), c * LinearCombination::basis_vector(a + g), image);
    report.add_cases();
    if (!images.insert(a + g).second) {
      report.fail({"injectivity at " + at(a), "distinct image", "repeated image e" + (a + g).to_string()});
    }
    expect_equal(report, "T*T e_a, " + at(a), LinearCombination::basis_vector(a), apply(t_adj, image));

    const unsigned k0 = shift_vanishing_order(g, a);
    LinearCombination v = LinearCombination::basis_vector(a);
    for (unsigned k = 0; k <= std::max(kmax, k0); ++k) {
      report.add_cases();
      const bool expect_zero = k >= k0;
      if (v.is_zero() != expect_zero) {
        report.fail({"(T*)^" + std::to_string(k) + " e_a, " + at(a) + ", k0=" + std::to_string(k0),
                     expect_zero ? "0" : "nonzero", v.to_string()});
      }
      v = apply(t_adj, v);
    }
  }
  return report;
}

CheckReport check_partial_isometry_unrestricted(const LaurentSymbol& theta1,
                                                const LaurentSymbol& theta2, const MultiIndex& m) {
  require_inner(theta1, "theta1");
  require_inner(theta2, "theta2");
  require_window(m, theta1.dim());
  CheckReport report("partial-isometry");
  report.param("window", m.to_string()).param("theta1", describe(theta1)).param("theta2", describe(theta2));
  const auto v = adjoint(OperatorExpr::toeplitz(theta1, kTri)) * OperatorExpr::toeplitz(theta2, kTri);
  const auto vvv = OperatorExpr::product({v, adjoint(v), v});
  for (const auto& a : enumerate_window(m, kTri)) {
    expect_equal(report, at(a), apply(v, a), apply(vvv, a));
  }
  return report;
}

CheckReport check_partial_isometry(const LaurentSymbol& theta1, const LaurentSymbol& theta2,
                                   const MultiIndex& m) {
  require_inner(theta1, "theta1");
  require_inner(theta2, "theta2");
  std::optional<std::size_t> v1;
  std::optional<std::size_t> v2;
  if (!single_variable_power(theta1, v1) || !single_variable_power(theta2, v2)) {
    throw PreconditionViolated("theta1 and theta2 must each be a power of a single z~ variable");
  }
  if (v1 && v2 && *v1 == *v2) {
    throw PreconditionViolated("theta1 and theta2 must depend on different z~ variables");
  }
  return check_partial_isometry_unrestricted(theta1, theta2, m);
}

// ---------------------------------------------------------------------------
// Noncompact operator with vanishing compressions

CheckReport check_noncompact_example(std::size_t n, const MultiIndex& m, const MultiIndex& m_large,
                                     unsigned kmax) {
  require_window(m, n);
  require_window(m_large, n);
  CheckReport report("noncompact");
  report.param("n", std::to_string(n)).param("window", m.to_string());
  report.param("window_large", m_large.to_string()).param("kmax", std::to_string(kmax));
  const auto mn = mult(n, n - 1);
  const auto t = OperatorExpr::identity(n, kTri) +
                 OperatorExpr::product({OperatorExpr::scalar(n, kTri, -1), mn, adjoint(mn)});
  const auto window = enumerate_window(m, kTri);
  const LinearCombination zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (unsigned k = 1; k <= kmax; ++k) {
        const auto compressed = OperatorExpr::product(
            {adjoint(OperatorExpr::power(mult(n, j), k)), t, OperatorExpr::power(mult(n, i), k)});
        for (const auto& a : window) {
          expect_equal(report,
                       "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                           " k=" + std::to_string(k) + " " + at(a),
                       zero, apply(compressed, a));
        }
      }
    }
  }
  auto fixed_count = [&](const MultiIndex& w) {
    std::size_t count = 0;
    for (const auto& a : enumerate_window(w, kTri)) {
      if (apply(t, a) == LinearCombination::basis_vector(a)) ++count;
    }
    return count;
  };
  const std::size_t small = fixed_count(m);
  const std::size_t large = fixed_count(m_large);
  report.param("fixed_small", std::to_string(small)).param("fixed_large", std::to_string(large));
  report.add_cases(2);
  if (small == 0) report.fail({"T on " + m.to_string(), "T != 0", "no window vector survives T"});
  if (large <= small) {
    report.fail({"fixed vectors " + m.to_string() + " -> " + m_large.to_string(),
                 "strictly more than " + std::to_string(small), std::to_string(large)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hardy norm

RadiiGrid::RadiiGrid(std::vector<std::vector<mpq_class>> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("radii grid is empty");
  for (const auto& p : points_) {
    if (p.size() != points_.front().size() || p.size() < kMinDimension) {
      throw DimensionMismatch("radii grid points must share one dimension >= 2");
    }
    for (const auto& r : p) {
      if (sgn(r) <= 0 || r >= 1) throw DomainError("radii must lie strictly between 0 and 1");
    }
  }
}

RadiiGrid RadiiGrid::product(std::size_t n, const std::vector<mpq_class>& values) {
  std::vector<std::vector<mpq_class>> points;
  std::vector<std::size_t> idx(n, 0);
  for (bool more = !values.empty(); more;) {
    std::vector<mpq_class> p;
    for (auto i : idx) p.push_back(values[i]);
    points.push_back(std::move(p));
    more = false;
    for (std::size_t k = n; k-- > 0;) {
      if (idx[k] + 1 < values.size()) {
        ++idx[k];
        more = true;
        break;
      }
      idx[k] = 0;
    }
  }
  return RadiiGrid(std::move(points));
}

RadiiGrid default_radii_grid(std::size_t n) {
  return RadiiGrid::product(n, {mpq_class(1, 2), mpq_class(9, 10), mpq_class(99, 100),
                                mpq_class(999, 1000)});
}

namespace {

std::vector<unsigned long> norm_exponents(const MultiIndex& a) {
  const PartialSums s = partial_sums(a);
  std::vector<unsigned long> e(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    // 2 s_k + 2k - 1 with 1-based k; positive exactly when a is in I
    e[k] = static_cast<unsigned long>(2 * s[k] + 2 * static_cast<std::int64_t>(k) + 1);
  }
  return e;
}

}  // namespace

mpq_class norm_integral(const LaurentSymbol& f, const std::vector<mpq_class>& r) {
  if (r.size() != f.dim()) throw DimensionMismatch("radius tuple dimension differs from symbol");
  mpq_class total = 0;
  for (const auto& [a, c] : f.terms()) {
    if (!in_hartogs_basis(a)) throw DomainError("norm integral needs support in I");
    mpq_class w = c.norm();
    const auto e = norm_exponents(a);
    for (std::size_t k = 0; k < r.size(); ++k) w *= pow_q(r[k], e[k]);
    total += w;
  }
  return total;
}

CheckReport check_norm_formula(const LaurentSymbol& f, const RadiiGrid& grid) {
  if (!classify(f).triangle_hardy) throw PreconditionViolated("symbol support must lie in I");
  if (grid.dim() != f.dim()) throw DimensionMismatch("grid dimension differs from symbol");
  CheckReport report("norm-formula");
  report.param("symbol", describe(f)).param("grid_points", std::to_string(grid.points().size()));

  mpq_class norm2 = 0;
  for (const auto& [a, c] : f.terms()) norm2 += c.norm();

  const auto& pts = grid.points();
  std::vector<mpq_class> w;
  for (const auto& r : pts) {
    w.push_back(norm_integral(f, r));
    report.add_cases();
    if (w.back() > norm2) {
      report.fail({"W(r) at r-index " + std::to_string(w.size() - 1), "<= " + rational_to_string(norm2),
                   rational_to_string(w.back())});
    }
  }
  auto leq = [](const std::vector<mpq_class>& p, const std::vector<mpq_class>& q) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] > q[k]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j || !leq(pts[i], pts[j])) continue;
      report.add_cases();
      if (w[i] > w[j]) {
        report.fail({"monotonicity between r-index " + std::to_string(i) + " and " + std::to_string(j),
                     "W nondecreasing", rational_to_string(w[i]) + " > " + rational_to_string(w[j])});
      }
    }
  }

  // gap at the point with the largest smallest radius
  std::size_t top = 0;
  auto min_of = [](const std::vector<mpq_class>& p) { return *std::min_element(p.begin(), p.end()); };
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (min_of(pts[i]) > min_of(pts[top])) top = i;
  }
  unsigned long max_exp = 0;
  for (const auto& [a, c] : f.terms()) {
    unsigned long total = 0;
    for (auto e : norm_exponents(a)) total += e;
    max_exp = std::max(max_exp, total);
  }
  const mpq_class rho = min_of(pts[top]);
  const mpq_class eps = 1 - pow_q(rho, max_exp);
  const mpq_class gap = norm2 - w[top];
  report.param("norm_squared", rational_to_string(norm2));
  report.param("gap", decimal(gap)).param("epsilon", decimal(eps));
  report.param("relative_gap", sgn(norm2) == 0 ? "0" : decimal(gap / norm2));
  report.add_cases();
  if (gap > eps * norm2) {
    report.fail({"gap at largest radii", "<= " + decimal(eps * norm2), decimal(gap)});
  }
  return report;
}

CheckReport check_unbounded_interior(std::size_t n, std::vector<mpq_class> samples,
                                     const mpq_class& threshold) {
  if (n < kMinDimension) throw DomainError("dimension must be at least 2");
  for (const auto& t : samples) {
    if (sgn(t) <= 0 || t >= 1) throw DomainError("interior samples must lie in (0, 1)");
  }
  CheckReport report("unbounded-interior");
  report.param("n", std::to_string(n)).param("threshold", rational_to_string(threshold));
  std::sort(samples.begin(), samples.end(), std::greater<>());

  // |1/(z2...zn)| at z_k = t^(n-k+1)
  mpq_class prev = 0;
  mpq_class largest = 0;
  for (const auto& t : samples) {
    mpq_class modulus = 1;
    for (std::size_t k = 2; k <= n; ++k) modulus *= pow_q(t, n - k + 1);
    const mpq_class value = 1 / modulus;
    report.add_cases();
    if (value <= prev) {
      report.fail({"t=" + rational_to_string(t), "> " + rational_to_string(prev), rational_to_string(value)});
    }
    prev = value;
    largest = std::max(largest, value);
  }
  report.param("max_value", rational_to_string(largest));
  report.add_cases();
  if (largest <= threshold) {
    report.fail({"largest sampled value", "> " + rational_to_string(threshold), rational_to_string(largest)});
  }

  MultiIndex g = MultiIndex::zero(n);
  for (std::size_t k = 1; k < n; ++k) g[k] = -1;
  const LaurentSymbol boundary = LaurentSymbol::monomial(g);
  const SymbolClass cls = classify(boundary);
  report.add_cases();
  const mpq_class modulus2 = boundary.terms().begin()->second.norm();
  if (boundary.size() != 1 || modulus2 != 1 || !cls.triangle_hardy || cls.triangle_analytic) {
    report.fail({"boundary function " + describe(boundary),
                 "single unimodular term in H^2 but outside the analytic cone", to_string(cls)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Analytic Toeplitz operators

namespace {

/// Returns the first failing (input, lhs, rhs) of the commutation identity.
std::optional<Counterexample> commutation_witness(const LaurentSymbol& phi, const MultiIndex& m,
                                                  CommutationVariant variant, std::size_t& cases) {
  const std::size_t n = phi.dim();
  const auto t = OperatorExpr::toeplitz(phi, kTri);
  for (std::size_t j = 0; j < n; ++j) {
    const auto mj = variant == CommutationVariant::Analytic ? mult(n, j) : adjoint(mult(n, j));
    const auto left = t * mj;
    const auto right = mj * t;
    for (const auto& a : enumerate_window(m, kTri)) {
      ++cases;
      const auto l = apply(left, a);
      const auto r = apply(right, a);
      if (l != r) {
        return Counterexample{"j=" + std::to_string(j + 1) + " " + at(a), r.to_string(), l.to_string()};
      }
    }
  }
  return std::nullopt;
}

const char* variant_name(CommutationVariant v) {
  return v == CommutationVariant::Analytic ? "analytic" : "co-analytic";
}

}  // namespace

CheckReport check_analytic_commutation(const LaurentSymbol& phi, const MultiIndex& m,
                                       CommutationVariant variant) {
  require_window(m, phi.dim());
  const LaurentSymbol& hyp = variant == CommutationVariant::Analytic ? phi : conjugate(phi);
  if (!classify(hyp).triangle_analytic) {
    throw PreconditionViolated(std::string("symbol is not ") + variant_name(variant));
  }
  CheckReport report("commutation");
  report.param("variant", variant_name(variant)).param("window", m.to_string()).param("symbol", describe(phi));
  std::size_t cases = 0;
  if (auto witness = commutation_witness(phi, m, variant, cases)) report.fail(*witness);
  report.add_cases(cases);
  return report;
}

CheckReport check_commutation_failure(const LaurentSymbol& phi, const MultiIndex& m,
                                      CommutationVariant variant) {
  require_window(m, phi.dim());
  CheckReport report("commutation-negative");
  report.param("variant", variant_name(variant)).param("window", m.to_string()).param("symbol", describe(phi));
  std::size_t cases = 0;
  if (auto witness = commutation_witness(phi, m, variant, cases)) {
    report.param("witness", witness->input + ": " + witness->actual + " vs " + witness->expected);
  } else {
    report.fail({"symbol " + describe(phi), "commutation broken somewhere in the window",
                 "commutation held on every window vector"});
  }
  report.add_cases(cases);
  return report;
}

CheckReport check_left_inverse(const ComplexRational& c, const ComplexRational& lambda,
                               const MultiIndex& g, unsigned order, const MultiIndex& m) {
  const std::size_t n = g.dim();
  require_window(m, n);
  if (c.is_zero()) throw PreconditionViolated("c must be nonzero");
  if (lambda.norm() >= 1) throw PreconditionViolated("|lambda| must be < 1");
  if (g.is_zero() || !in_analytic_cone(g)) {
    throw PreconditionViolated("gamma must be a nonzero exponent in the analytic cone");
  }
  CheckReport report("left-inverse");
  report.param("c", c.to_string()).param("lambda", lambda.to_string());
  report.param("gamma", g.to_string()).param("order", std::to_string(order)).param("window", m.to_string());

  LaurentSymbol phi(n);
  phi.add_term(MultiIndex::zero(n), c);
  phi.add_term(g, -(c * lambda));
  LaurentSymbol sigma(n);
  const ComplexRational c_inv = c.inverse();
  ComplexRational lk = 1;
  for (unsigned k = 0; k <= order; ++k) {
    sigma.add_term(static_cast<std::int64_t>(k) * g, c_inv * lk);
    lk *= lambda;
  }
  const ComplexRational residual = -lk;  // -lambda^(N+1)
  const auto ts_tp = OperatorExpr::toeplitz(sigma, kTri) * OperatorExpr::toeplitz(phi, kTri);
  const MultiIndex shift = static_cast<std::int64_t>(order + 1) * g;
  for (const auto& a : enumerate_window(m, kTri)) {
    const auto actual = apply(ts_tp, a) - LinearCombination::basis_vector(a);
    const auto expected = residual * LinearCombination::basis_vector(a + shift);
    expect_equal(report, at(a), expected, actual);
  }
  report.add_cases();
  if (residual.norm() != pow(lambda, order + 1).norm()) {
    report.fail({"residual modulus", rational_to_string(pow(lambda, order + 1).norm()),
                 rational_to_string(residual.norm())});
  }
  report.param("residual", residual.to_string());
  return report;
}

CheckReport check_left_inverse_family(const ComplexRational& c, const ComplexRational& lambda,
                                      const MultiIndex& g, unsigned max_order, const MultiIndex& m) {
  CheckReport report("left-inverse");
  report.param("c", c.to_string()).param("lambda", lambda.to_string()).param("gamma", g.to_string());
  report.param("orders", "0.." + std::to_string(max_order)).param("window", m.to_string());
  std::optional<mpq_class> prev;
  for (unsigned order = 0; order <= max_order; ++order) {
    const CheckReport one = check_left_inverse(c, lambda, g, order, m);
    report.merge(one);
    const mpq_class modulus2 = pow(lambda, order + 1).norm();
    if (prev) {
      report.add_cases();
      if (modulus2 != lambda.norm() * *prev) {
        report.fail({"decay from order " + std::to_string(order - 1) + " to " + std::to_string(order),
                     "ratio |lambda|^2 = " + rational_to_string(lambda.norm()),
                     rational_to_string(modulus2) + " / " + rational_to_string(*prev)});
      }
    }
    prev = modulus2;
  }
  report.param("final_residual_modulus_squared", rational_to_string(*prev));
  return report;
}

CheckReport check_kernel_growth(const LaurentSymbol& theta, const MultiIndex& m1,
                                const MultiIndex& m2) {
  require_inner(theta, "theta");
  if (theta.terms().begin()->first.is_zero()) throw PreconditionViolated("theta must be nonconstant");
  require_window(m1, theta.dim());
  require_window(m2, theta.dim());
  bool nested = m1 != m2;
  for (std::size_t k = 0; k < m1.dim(); ++k) nested = nested && m1[k] <= m2[k];
  if (!nested) throw PreconditionViolated("windows must be strictly nested");

  CheckReport report("kernel-growth");
  report.param("theta", describe(theta)).param("window_small", m1.to_string()).param("window_large", m2.to_string());
  const auto t_adj = adjoint(OperatorExpr::toeplitz(theta, kTri));
  auto count = [&](const MultiIndex& w) {
    std::size_t c = 0;
    for (const auto& a : enumerate_window(w, kTri)) {
      report.add_cases();
      if (apply(t_adj, a).is_zero()) ++c;
    }
    return c;
  };
  const std::size_t c1 = count(m1);
  const std::size_t c2 = count(m2);
  report.param("kernel_small", std::to_string(c1)).param("kernel_large", std::to_string(c2));
  if (c1 < 1) report.fail({"kernel witnesses in " + m1.to_string(), ">= 1", "0"});
  if (c2 <= c1) {
    report.fail({"kernel witnesses " + m1.to_string() + " -> " + m2.to_string(),
                 "more than " + std::to_string(c1), std::to_string(c2)});
  }
  return report;
}

CheckReport check_mult_factorization(const MultiIndex& m) {
  const std::size_t n = m.dim();
  CheckReport report("mult-factorization");
  report.param("n", std::to_string(n)).param("window", m.to_string());
  const PsiMap psi(n);
  for (std::size_t j = 0; j < n; ++j) {
    MultiIndex tail = MultiIndex::zero(n);
    std::vector<OperatorExpr> poly_factors;
    for (std::size_t l = j; l < n; ++l) {
      tail[l] = 1;
      poly_factors.push_back(mult(n, l, kPoly));
    }
    const auto poly_product = OperatorExpr::product(poly_factors);
    const auto tri = mult(n, j);
    for (const auto& a : enumerate_window(m, kTri)) {
      const std::string input = "j=" + std::to_string(j + 1) + " " + at(a);
      const MultiIndex shifted = a + MultiIndex::unit(n, j);
      report.add_cases();
      if (psi_monomial(shifted) != psi_monomial(a) + tail) {
        report.fail({input, (psi_monomial(a) + tail).to_string(), psi_monomial(shifted).to_string()});
      }
      expect_equal(report, input + " (operators)", apply(poly_product, psi.forward(LinearCombination::basis_vector(a))),
                   psi.forward(apply(tri, a)));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Float layer

CheckReport check_float_layer(const LaurentSymbol& phi, const MultiIndex& m, unsigned kmax) {
  const std::size_t n = phi.dim();
  require_window(m, n);
  CheckReport report("float-layer");
  report.param("window", m.to_string()).param("symbol", describe(phi));

  const ExactMatrix exact = window_matrix(OperatorExpr::toeplitz(phi, kTri), m);
  const FloatMatrix fl = to_float_matrix(exact);
  auto within_ulp = [](const mpq_class& q, double d) {
    const double ulp = std::nextafter(std::abs(d), std::numeric_limits<double>::infinity()) - std::abs(d);
    return abs(q - mpq_class(d)) <= mpq_class(ulp);
  };
  for (std::size_t k = 0; k < exact.entries.size(); ++k) {
    report.add_cases();
    const auto& e = exact.entries[k];
    const auto& f = fl.matrix.entries[k];
    if (!within_ulp(e.re(), f.real()) || !within_ulp(e.im(), f.imag())) {
      std::ostringstream os;
      os.precision(17);
      os << f;
      report.fail({"entry " + std::to_string(k), e.to_string(), os.str()});
    }
  }

  std::stringstream buffer;
  write_matrix_market(fl.matrix, buffer);
  const DenseMatrix back = read_matrix_market(buffer);
  report.add_cases();
  if (back.rows != fl.matrix.rows || back.cols != fl.matrix.cols || back.entries != fl.matrix.entries) {
    report.fail({"MatrixMarket roundtrip", "bit-identical entries", "entries differ after reading back"});
  }

  const auto mn = mult(n, n - 1);
  const auto t = OperatorExpr::identity(n, kTri) +
                 OperatorExpr::product({OperatorExpr::scalar(n, kTri, -1), mn, adjoint(mn)});
  const auto pn = mult(n, n - 1, kPoly);
  const auto s = OperatorExpr::identity(n, kPoly) +
                 OperatorExpr::product({OperatorExpr::scalar(n, kPoly, -1), pn, adjoint(pn)});
  for (const auto& row : decay_profile(t, s, kmax, m)) {
    if (row.k == 0) continue;
    report.add_cases();
    if (row.triangle.value != 0.0) {
      report.fail({"decay profile k=" + std::to_string(row.k), "0", std::to_string(row.triangle.value)});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "conjugation",    "brown-halmos",     "brown-halmos-negative", "toeplitz-algebra",
      "projection-relation", "coburn",           "inner-shift",           "partial-isometry",
      "noncompact",     "mult-factorization", "norm-formula",        "unbounded-interior",
      "commutation",    "commutation-negative", "left-inverse",      "kernel-growth",
      "float-layer",
  };
  return names;
}

namespace {

CheckReport family(const std::string& name, const SuiteConfig& cfg) {
  CheckReport r(name);
  r.param("n", std::to_string(cfg.n)).param("window", cfg.window.to_string());
  r.param("seed", std::to_string(cfg.seed)).param("trials", std::to_string(cfg.trials));
  return r;
}

MultiIndex doubled(const MultiIndex& m) {
  MultiIndex out = 2 * m;
  for (std::size_t k = 0; k < out.dim(); ++k) out[k] = std::max<std::int64_t>(out[k], m[k] + 1);
  return out;
}

}  // namespace

CheckReport run_check(std::string_view name, const SuiteConfig& cfg) {
  const std::size_t n = cfg.n;
  require_window(cfg.window, n);
  const MultiIndex& m = cfg.window;
  std::mt19937_64 rng(cfg.seed);
  const std::string key(name);

  if (key == "conjugation" || key == "brown-halmos") {
    CheckReport r = family(key, cfg);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const LaurentSymbol phi = random_symbol(n, rng);
      r.merge(key == "conjugation" ? check_conjugation(phi, m) : check_brown_halmos(phi, m));
    }
    return r;
  }
  if (key == "brown-halmos-negative") {
    return check_brown_halmos_negative(m, cfg.seed, cfg.trials);
  }
  if (key == "toeplitz-algebra") {
    CheckReport r = family(key, cfg);
    RandomSymbolOptions cone;
    cone.support = SupportClass::AnalyticCone;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const LaurentSymbol phi = random_symbol(n, rng);
      const LaurentSymbol psi = random_symbol(n, rng);
      r.merge(check_toeplitz_adjoint(phi, m));
      r.merge(check_semicommutator(phi, psi, m));
      r.merge(check_symbol_recovery(phi));
      // product law: alternate between an analytic right factor and a
      // co-analytic left factor
      const LaurentSymbol analytic = random_symbol(n, rng, cone);
      if (t % 2 == 0) {
        r.merge(check_toeplitz_product(phi, analytic, m));
      } else {
        r.merge(check_toeplitz_product(conjugate(analytic), psi, m));
      }
    }
    return r;
  }
  if (key == "projection-relation") {
    MultiIndex bound = MultiIndex::zero(n);
    for (std::size_t k = 0; k < n; ++k) bound[k] = 5;
    return check_projection_relation(bound);
  }
  if (key == "coburn") return check_coburn_failure(n);
  if (key == "inner-shift") {
    CheckReport r = family(key, cfg);
    r.param("kmax", std::to_string(cfg.kmax));
    for (const auto& theta : {ztilde(n, 0), ztilde(n, 1), ztilde(n, 0, 2)}) {
      r.merge(check_inner_shift(theta, m, cfg.kmax));
    }
    return r;
  }
  if (key == "partial-isometry") {
    CheckReport r = family(key, cfg);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::int64_t p = 1; p <= 3; ++p) {
          for (std::int64_t q = 1; q <= 3; ++q) {
            r.merge(check_partial_isometry(ztilde(n, i, p), ztilde(n, j, q), m));
          }
        }
      }
    }
    // constant factor and same-variable cases
    r.merge(check_partial_isometry(LaurentSymbol::constant(n, 1), ztilde(n, 0), m));
    r.merge(check_partial_isometry_unrestricted(ztilde(n, 0), ztilde(n, 0, 2), m));
    r.merge(check_partial_isometry_unrestricted(ztilde(n, 0), ztilde(n, 0), m));
    return r;
  }
  if (key == "noncompact") return check_noncompact_example(n, m, doubled(m), cfg.kmax);
  if (key == "mult-factorization") return check_mult_factorization(m);
  if (key == "norm-formula") {
    CheckReport r = family(key, cfg);
    RandomSymbolOptions hardy;
    hardy.support = SupportClass::Hartogs;
    const RadiiGrid grid = default_radii_grid(n);
    for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 20); ++t) {
      r.merge(check_norm_formula(random_symbol(n, rng, hardy), grid));
    }
    return r;
  }
  if (key == "unbounded-interior") {
    return check_unbounded_interior(
        n, {mpq_class(1, 10), mpq_class(1, 100), mpq_class(1, 1000), mpq_class(1, 10000), mpq_class(1, 10000000)},
        mpq_class(1000000));
  }
  if (key == "commutation") {
    CheckReport r = family(key, cfg);
    RandomSymbolOptions cone;
    cone.support = SupportClass::AnalyticCone;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const LaurentSymbol phi = random_symbol(n, rng, cone);
      r.merge(check_analytic_commutation(phi, m, CommutationVariant::Analytic));
      r.merge(check_analytic_commutation(conjugate(phi), m, CommutationVariant::CoAnalytic));
    }
    return r;
  }
  if (key == "commutation-negative") {
    const LaurentSymbol bar_zn = conjugate(LaurentSymbol::monomial(MultiIndex::unit(n, n - 1)));
    CheckReport r = check_commutation_failure(bar_zn, m, CommutationVariant::Analytic);
    r.merge(check_commutation_failure(conjugate(bar_zn), m, CommutationVariant::CoAnalytic));
    return r;
  }
  if (key == "left-inverse") return check_left_inverse_family(1, cfg.lambda, cfg.gamma, cfg.order, m);
  if (key == "kernel-growth") {
    CheckReport r = family(key, cfg);
    for (std::size_t j = 0; j < n; ++j) r.merge(check_kernel_growth(ztilde(n, j), m, doubled(m)));
    return r;
  }
  if (key == "float-layer") {
    CheckReport r = family(key, cfg);
    for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 20); ++t) {
      r.merge(check_float_layer(random_symbol(n, rng), m, cfg.kmax));
    }
    return r;
  }
  throw std::invalid_argument("unknown check \"" + key + "\"");
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& names, const SuiteConfig& config,
                                   unsigned threads) {
  std::vector<CheckReport> out;
  out.reserve(names.size());
  if (threads <= 1) {
    for (const auto& name : names) out.push_back(run_check(name, config));
    return out;
  }
  // bounded batches of async tasks; results collected in declaration order
  for (std::size_t start = 0; start < names.size(); start += threads) {
    std::vector<std::future<CheckReport>> batch;
    for (std::size_t i = start; i < std::min(names.size(), start + threads); ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] { return run_check(names[i], config); }));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace hartop
