#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <Eigen/Sparse>
#include <unsupported/Eigen/SparseExtra>

#include "hartop/errors.hpp"
#include "hartop/numerics.hpp"
#include "hartop/verify.hpp"

using hartop::DenseMatrix;
using hartop::MultiIndex;
using hartop::OperatorExpr;
using hartop::SpaceKind;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hartop_test_numerics";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Nearest-double property checked in exact arithmetic: no neighbouring double
// is strictly closer, and exact ties land on an even significand.
bool is_nearest(const mpq_class& q, double d) {
  const mpq_class err = abs(q - mpq_class(d));
  for (double nb : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
    const mpq_class other = abs(q - mpq_class(nb));
    if (other < err) return false;
    if (other == err) {
      int exp = 0;
      const double mant = std::frexp(d, &exp);
      const auto bits = static_cast<std::int64_t>(std::ldexp(mant, 53));
      if (bits % 2 != 0) return false;
    }
  }
  return true;
}

DenseMatrix random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::bernoulli_distribution keep(0.4);
  DenseMatrix a(r, c);
  for (auto& z : a.entries) {
    if (keep(rng)) z = {u(rng), u(rng)};
  }
  return a;
}

}  // namespace

TEST_CASE("round_to_double is correctly rounded") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 2000; ++t) {
    mpz_class num(static_cast<long>(rng() % 2000000001) - 1000000000);
    mpz_class den(static_cast<long>(rng() % 1000000000 + 1));
    num *= mpz_class(static_cast<long>(rng() % 1000000 + 1));
    mpq_class q(num, den);
    q.canonicalize();
    const double d = hartop::round_to_double(q);
    CAPTURE(q.get_str());
    CHECK(is_nearest(q, d));
  }
  CHECK(hartop::round_to_double(mpq_class(1, 10)) == 0.1);
  CHECK(hartop::round_to_double(mpq_class(-1, 3)) == -1.0 / 3.0);
  // halfway between 1 and the next double rounds to even
  mpq_class half_ulp(1);
  half_ulp += mpq_class(1, mpz_class(1) << 53);
  CHECK(hartop::round_to_double(half_ulp) == 1.0);

  bool overflow = false;
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(std::isinf(hartop::round_to_double(mpq_class(big), &overflow)));
  CHECK(overflow);
}

TEST_CASE("operator norm estimates") {
  DenseMatrix diag(2, 2);
  diag.at(0, 0) = 3.0;
  diag.at(1, 1) = 1.0;
  auto est = hartop::operator_norm_estimate(diag);
  CHECK(est.converged);
  CHECK(est.value == doctest::Approx(3.0).epsilon(1e-9));

  DenseMatrix a(2, 2);
  a.at(0, 0) = 1.0;
  a.at(0, 1) = 2.0;
  a.at(1, 0) = 3.0;
  a.at(1, 1) = 4.0;
  // largest singular value of [[1,2],[3,4]] is sqrt(15 + sqrt(221))
  CHECK(hartop::operator_norm_estimate(a).value == doctest::Approx(std::sqrt(15 + std::sqrt(221.0))).epsilon(1e-9));

  // all-ones start vector lies in the kernel
  DenseMatrix k(2, 2);
  k.at(0, 0) = 1.0;
  k.at(0, 1) = -1.0;
  k.at(1, 0) = 1.0;
  k.at(1, 1) = -1.0;
  CHECK(hartop::operator_norm_estimate(k).value == doctest::Approx(2.0).epsilon(1e-9));

  const auto zero = hartop::operator_norm_estimate(DenseMatrix(3, 3));
  CHECK(zero.value == 0.0);
  CHECK(zero.converged);
}

TEST_CASE("decay profile of I - M_n M_n^* vanishes after the first step") {
  for (std::size_t n : {2u, 3u}) {
    const auto mt = OperatorExpr::mult(n, n - 1, SpaceKind::Triangle);
    const auto t = OperatorExpr::identity(n, SpaceKind::Triangle) +
                   OperatorExpr::product({OperatorExpr::scalar(n, SpaceKind::Triangle, -1), mt, hartop::adjoint(mt)});
    const auto mp = OperatorExpr::mult(n, n - 1, SpaceKind::Polydisc);
    const auto s = OperatorExpr::identity(n, SpaceKind::Polydisc) +
                   OperatorExpr::product({OperatorExpr::scalar(n, SpaceKind::Polydisc, -1), mp, hartop::adjoint(mp)});
    const MultiIndex m(std::vector<std::int64_t>(n, 3));
    const auto rows = hartop::decay_profile(t, s, 4, m);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].triangle.value == doctest::Approx(1.0));
    CHECK(rows[0].polydisc.value == doctest::Approx(1.0));
    for (std::size_t k = 1; k < rows.size(); ++k) {
      CHECK(rows[k].triangle.value == 0.0);
      CHECK(rows[k].polydisc.value == 0.0);
    }
    // every pair (i, j) vanishes too
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(hartop::decay_profile(t, s, 2, m, i, j)[2].triangle.value == 0.0);
      }
    }
  }
}

TEST_CASE("MatrixMarket output format") {
  DenseMatrix a(2, 3);
  a.at(0, 1) = {0.1, -2.0};
  a.at(1, 2) = {1e300, 0.0};
  std::ostringstream os;
  hartop::write_matrix_market(a, os);
  CHECK(os.str() ==
        "%%MatrixMarket matrix coordinate complex general\n"
        "2 3 2\n"
        "1 2 0.1 -2\n"
        "2 3 1e+300 0\n");

  hartop::ExactMatrix e;
  e.labels = {MultiIndex{0, -1}, MultiIndex{1, -2}};
  e.entries = {hartop::ComplexRational(mpq_class(1, 3)), 0, 0, hartop::ComplexRational(0, -2)};
  std::ostringstream ex;
  hartop::write_matrix_market(e, ex);
  CHECK(ex.str() ==
        "%%MatrixMarket matrix coordinate complex general\n"
        "2 2 2\n"
        "1 1 1/3 0\n"
        "2 2 0 -2\n");
}

TEST_CASE("CSV and label formats") {
  DenseMatrix a(1, 2);
  a.at(0, 0) = {1.5, -0.25};
  a.at(0, 1) = {0.0, 2.0};
  std::ostringstream os;
  hartop::write_csv(a, os);
  CHECK(os.str() == "1.5-0.25i,0+2i\n");
  std::ostringstream ls;
  hartop::write_labels({MultiIndex{0, -1}, MultiIndex{1, -2}}, ls);
  CHECK(ls.str() == "1: (0,-1)\n2: (1,-2)\n");
}

TEST_CASE("MatrixMarket round-trips bit-exactly") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_dense(rng, 1 + t % 7, 1 + t % 5);
    std::stringstream ss;
    hartop::write_matrix_market(a, ss);
    const auto b = hartop::read_matrix_market(ss);
    CHECK(b.rows == a.rows);
    CHECK(b.cols == a.cols);
    CHECK(b.entries == a.entries);
  }
}

TEST_CASE("an independent MatrixMarket reader sees the same matrix") {
  std::mt19937_64 rng(43);
  const auto phi = hartop::random_symbol(2, rng);
  const auto fl = hartop::to_float_matrix(OperatorExpr::toeplitz(phi, SpaceKind::Triangle), MultiIndex{3, 3});
  const auto path = scratch("toeplitz.mtx");
  hartop::export_matrix(fl.matrix, hartop::ExportFormat::MatrixMarket, path);

  Eigen::SparseMatrix<std::complex<double>> m;
  REQUIRE(Eigen::loadMarket(m, path.string()));
  REQUIRE(static_cast<std::size_t>(m.rows()) == fl.matrix.rows);
  for (std::size_t r = 0; r < fl.matrix.rows; ++r) {
    for (std::size_t c = 0; c < fl.matrix.cols; ++c) {
      CHECK(m.coeff(static_cast<long>(r), static_cast<long>(c)) == fl.matrix.at(r, c));
    }
  }
  const auto labels = slurp(hartop::labels_path(path));
  CHECK(labels.rfind("1: (0,-1)\n2: (0,0)\n3: (1,-2)\n", 0) == 0);
}

TEST_CASE("exact export and error handling") {
  const auto path = scratch("exact.mtx");
  const auto w = hartop::window_matrix(OperatorExpr::identity(2, SpaceKind::Triangle), MultiIndex{1, 1});
  hartop::export_matrix(w, path);
  CHECK(slurp(path) ==
        "%%MatrixMarket matrix coordinate complex general\n4 4 4\n1 1 1 0\n2 2 1 0\n3 3 1 0\n4 4 1 0\n");
  CHECK(slurp(hartop::labels_path(path)) == "1: (0,-1)\n2: (0,0)\n3: (1,-2)\n4: (1,-1)\n");

  CHECK_THROWS_AS(hartop::export_matrix(w, "/nonexistent-dir/x.mtx"), hartop::IoError);
  std::istringstream bad("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 x 0\n");
  CHECK_THROWS_AS(hartop::read_matrix_market(bad), hartop::IoError);
  std::istringstream real("%%MatrixMarket matrix coordinate real general\n1 1 0\n");
  CHECK_THROWS_AS(hartop::read_matrix_market(real), hartop::IoError);
}

TEST_CASE("float sections of exact matrices") {
  hartop::ExactMatrix e;
  e.labels = {MultiIndex{0, -1}};
  e.entries = {hartop::ComplexRational(mpq_class(2, 3), mpq_class(-1, 7))};
  const auto f = hartop::to_float_matrix(e);
  CHECK_FALSE(f.overflow);
  CHECK(f.matrix.at(0, 0) == std::complex<double>(2.0 / 3.0, -1.0 / 7.0));
  CHECK(f.matrix.row_labels == e.labels);
}
