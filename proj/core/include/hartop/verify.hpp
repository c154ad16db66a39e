#pragma once

// Executable checks of the operator identities relating Toeplitz operators on
// the Hartogs triangle to those on the polydisc. Positive checks evaluate the
// genuine (infinite) operators through exact lazy action; windows only bound
// the set of basis vectors that are tested.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hartop/lattice.hpp"
#include "hartop/operators.hpp"
#include "hartop/rational.hpp"
#include "hartop/report.hpp"
#include "hartop/symbol.hpp"

namespace hartop {

// ---------------------------------------------------------------------------
// Random symbols

enum class SupportClass { Any, Hartogs, AnalyticCone };

struct RandomSymbolOptions {
  std::int64_t exponent_bound = 3;      ///< exponents drawn from [-b, b]^n
  std::size_t max_terms = 12;
  std::int64_t coefficient_bound = 20;  ///< re, im = p/q with |p|, q <= bound
  SupportClass support = SupportClass::Any;
};

/// Uniform integer in [lo, hi] by rejection sampling; reproducible across
/// standard libraries, unlike std::uniform_int_distribution.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Nonzero random symbol. Deterministic for a given generator state.
LaurentSymbol random_symbol(std::size_t n, std::mt19937_64& rng,
                            const RandomSymbolOptions& options = {});

// ---------------------------------------------------------------------------
// Individual checks

/// Psi T_{phi,triangle} e_a == T_{phi o phi^-1, polydisc} Psi e_a for every a in the window.
CheckReport check_conjugation(const LaurentSymbol& phi, const MultiIndex& m);

/// M_j^* T M_j e_a == T e_a for all j and window a, for an arbitrary operator
/// on the triangle Hardy space.
CheckReport check_brown_halmos_operator(const OperatorExpr& t, const MultiIndex& m);
CheckReport check_brown_halmos(const LaurentSymbol& phi, const MultiIndex& m);
/// Negative control: diagonal operators supported in the window must violate
/// the criterion. Trial 0 is the indicator of the first basis vector of I;
/// the remaining trials are random diagonals. Passes iff every trial is
/// caught with a witness.
CheckReport check_brown_halmos_negative(const MultiIndex& m, std::uint64_t seed,
                                        std::size_t trials);

/// Window matrix of T_phi^* equals the conjugate transpose of that of T_phi.
CheckReport check_toeplitz_adjoint(const LaurentSymbol& phi, const MultiIndex& m);
/// T_phi T_psi == T_{phi psi}; requires psi or conj(phi) in the analytic cone.
CheckReport check_toeplitz_product(const LaurentSymbol& phi, const LaurentSymbol& psi,
                                   const MultiIndex& m);
/// T_phi T_psi - T_{phi psi} == -H_{conj phi}^* H_psi, the right side computed
/// only from Hankel actions and inner products.
CheckReport check_semicommutator(const LaurentSymbol& phi, const LaurentSymbol& psi,
                                 const MultiIndex& m);
/// Recovers every Fourier coefficient of phi (over the bounding box of its
/// support) from a single Toeplitz matrix entry.
CheckReport check_symbol_recovery(const LaurentSymbol& phi);
/// All four of the above; throws PreconditionViolated when the product law's
/// hypothesis fails.
CheckReport check_toeplitz_algebra(const LaurentSymbol& phi, const LaurentSymbol& psi, const MultiIndex& m);

/// T(1) = T^*(1) = 0 for conj(z1) z2^3, plus the analytic control z1/z2.
CheckReport check_coburn_failure(std::size_t n);

/// Smallest k with (T_theta^*)^k e_a = 0 for the inner monomial z^g:
/// 1 + min over {k : s_k(g) >= 1} of floor((s_k(a) + k - 1) / s_k(g)).
unsigned shift_vanishing_order(const MultiIndex& g, const MultiIndex& a);

/// T_theta is an isometry sending basis vectors to distinct basis vectors, and
/// its adjoint powers kill e_a exactly from shift_vanishing_order on.
CheckReport check_inner_shift(const LaurentSymbol& theta, const MultiIndex& m, unsigned kmax);

/// V = T_{theta1}^* T_{theta2} satisfies V V^* V = V. The inner monomials must
/// be powers of distinct z~ variables (a constant factor is allowed).
CheckReport check_partial_isometry(const LaurentSymbol& theta1, const LaurentSymbol& theta2,
                                   const MultiIndex& m);
/// Same identity without the distinct-variable precondition.
CheckReport check_partial_isometry_unrestricted(const LaurentSymbol& theta1,
                                                const LaurentSymbol& theta2, const MultiIndex& m);

/// T = I - M_n M_n^*: M_j^{*k} T M_i^k = 0 for all i, j, 1 <= k <= kmax, while
/// the number of window vectors fixed by T grows from `m` to `m_large`.
CheckReport check_noncompact_example(std::size_t n, const MultiIndex& m, const MultiIndex& m_large,
                                     unsigned kmax);

/// Points r in (0,1)^n at which the Hardy norm integral is sampled.
class RadiiGrid {
 public:
  explicit RadiiGrid(std::vector<std::vector<mpq_class>> points);
  /// Cartesian product values^n.
  static RadiiGrid product(std::size_t n, const std::vector<mpq_class>& values);

  const std::vector<std::vector<mpq_class>>& points() const noexcept { return points_; }
  std::size_t dim() const noexcept { return points_.front().size(); }

 private:
  std::vector<std::vector<mpq_class>> points_;
};

/// {1/2, 9/10, 99/100, 999/1000}^n
RadiiGrid default_radii_grid(std::size_t n);

/// The weighted boundary integral at radii r, evaluated in closed form:
/// sum |a_a|^2 prod_k r_k^(2 s_k(a) + 2k - 1).
mpq_class norm_integral(const LaurentSymbol& f, const std::vector<mpq_class>& r);

CheckReport check_norm_formula(const LaurentSymbol& f, const RadiiGrid& grid);

/// |1/(z2...zn)| at (t^n, t^(n-1), ..., t) grows without bound while the
/// boundary function has modulus exactly 1.
CheckReport check_unbounded_interior(std::size_t n, std::vector<mpq_class> samples,
                                     const mpq_class& threshold);

enum class CommutationVariant { Analytic, CoAnalytic };

/// Analytic: T_phi M_j == M_j T_phi. Co-analytic: T_phi M_j^* == M_j^* T_phi.
CheckReport check_analytic_commutation(const LaurentSymbol& phi, const MultiIndex& m,
                                       CommutationVariant variant);
/// Negative control: passes iff the commutation breaks somewhere in the window.
CheckReport check_commutation_failure(const LaurentSymbol& phi, const MultiIndex& m,
                                      CommutationVariant variant);

/// phi = c (1 - lambda z^g), sigma_N = c^-1 sum_{k<=N} lambda^k z^{kg}:
/// (T_sigma T_phi - I) e_a == -lambda^{N+1} e_{a + (N+1) g}.
CheckReport check_left_inverse(const ComplexRational& c, const ComplexRational& lambda,
                               const MultiIndex& g, unsigned order, const MultiIndex& m);
/// check_left_inverse for N = 0..max_order, plus geometric decay of the residual.
CheckReport check_left_inverse_family(const ComplexRational& c, const ComplexRational& lambda,
                                      const MultiIndex& g, unsigned max_order,
                                      const MultiIndex& m);

/// Window vectors annihilated by T_theta^* strictly increase from m1 to m2.
CheckReport check_kernel_growth(const LaurentSymbol& theta, const MultiIndex& m1,
                                const MultiIndex& m2);

/// Psi M_{z_j} Psi^-1 = M_j M_{j+1} ... M_n on every window basis vector.
CheckReport check_mult_factorization(const MultiIndex& m);

/// Float sections agree with exact ones within one ulp, MatrixMarket output
/// reads back bit-exactly, and the decay profile of I - M_n M_n^* is exactly
/// zero for k >= 1.
CheckReport check_float_layer(const LaurentSymbol& phi, const MultiIndex& m, unsigned kmax);

// ---------------------------------------------------------------------------
// Suites

struct SuiteConfig {
  std::size_t n = 2;
  MultiIndex window{6, 6};
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  unsigned kmax = 5;
  ComplexRational lambda{mpq_class(1, 2)};
  MultiIndex gamma{1, -1};
  unsigned order = 8;
};

/// Every check name accepted by run_check, in suite order.
const std::vector<std::string>& check_names();

/// Runs one named check family under `config`. Throws std::invalid_argument
/// for unknown names.
CheckReport run_check(std::string_view name, const SuiteConfig& config);

/// Runs `names` with up to `threads` workers; reports come back in the order
/// of `names` regardless of scheduling.
std::vector<CheckReport> run_suite(const std::vector<std::string>& names, const SuiteConfig& config,
                                   unsigned threads = 1);

}  // namespace hartop
