#pragma once

// Floating-point finite sections. Everything here is illustrative or
// export-oriented; exact verdicts live in the verify module.

#include <complex>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hartop/lattice.hpp"
#include "hartop/operators.hpp"

namespace hartop {

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Basis exponents per row/column; empty when unknown (e.g. read from a
  /// file without a label sidecar).
  std::vector<MultiIndex> row_labels;
  std::vector<MultiIndex> col_labels;
  std::vector<std::complex<double>> entries;  ///< row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Nearest double (ties to even). Values beyond the double range become
/// +/-infinity and set *overflow.
double round_to_double(const mpq_class& q, bool* overflow = nullptr);

struct FloatMatrix {
  DenseMatrix matrix;
  bool overflow = false;  ///< some entry exceeded the double range
};

FloatMatrix to_float_matrix(const ExactMatrix& exact);
FloatMatrix to_float_matrix(const OperatorExpr& expr, const MultiIndex& m);

struct NormEstimate {
  double value = 0.0;
  bool converged = false;
  unsigned iterations = 0;
};

/// Largest singular value by power iteration on A^*A from the normalized
/// all-ones vector; stops when the relative change drops below `tolerance`.
NormEstimate operator_norm_estimate(const DenseMatrix& a, unsigned max_iterations = 1000,
                                    double tolerance = 1e-10);

struct DecayRow {
  unsigned k = 0;
  NormEstimate triangle;  ///< ||P_W M_{z_j}^{*k} T M_{z_i}^k P_W|| on the triangle
  NormEstimate polydisc;  ///< ||P_W M_n^{*k} S M_n^k P_W|| on the polydisc
};

/// Finite-section norms of the compressions appearing in the compactness
/// criterion, for k = 0..kmax. `t` acts on the triangle, `s` on the polydisc
/// (normally the Psi-conjugate of `t`). Coordinates i, j are 0-based and
/// default to the last one.
std::vector<DecayRow> decay_profile(const OperatorExpr& t, const OperatorExpr& s, unsigned kmax,
                                    const MultiIndex& m, std::optional<std::size_t> i = {},
                                    std::optional<std::size_t> j = {});

enum class ExportFormat { MatrixMarket, Csv };

/// "%%MatrixMarket matrix coordinate complex general", size line "r c nnz",
/// then "row col re im" (1-based) for each nonzero in row-major order.
/// Doubles are written in shortest round-trip form.
void write_matrix_market(const DenseMatrix& a, std::ostream& out);
/// Same layout with exact "p/q" rational parts.
void write_matrix_market(const ExactMatrix& a, std::ostream& out);
/// Dense rows of "re+imi" literals separated by commas.
void write_csv(const DenseMatrix& a, std::ostream& out);
/// One line per basis index: "i: (a1,...,an)", 1-based.
void write_labels(const std::vector<MultiIndex>& labels, std::ostream& out);

/// Reads the coordinate complex format written above (labels left empty).
DenseMatrix read_matrix_market(std::istream& in);

/// Writes `a` to `path` and its labels to `path` + ".labels". Throws IoError.
void export_matrix(const DenseMatrix& a, ExportFormat format, const std::filesystem::path& path);
void export_matrix(const ExactMatrix& a, const std::filesystem::path& path);

std::filesystem::path labels_path(const std::filesystem::path& matrix_path);

}  // namespace hartop
