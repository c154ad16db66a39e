#include "hartop/numerics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hartop/errors.hpp"

namespace hartop {

double round_to_double(const mpq_class& q, bool* overflow) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  if (overflow != nullptr && std::isinf(d)) *overflow = true;
  return d;
}

FloatMatrix to_float_matrix(const ExactMatrix& exact) {
  FloatMatrix out;
  const std::size_t size = exact.size();
  out.matrix = DenseMatrix(size, size);
  out.matrix.row_labels = exact.labels;
  out.matrix.col_labels = exact.labels;
  for (std::size_t k = 0; k < exact.entries.size(); ++k) {
    const auto& c = exact.entries[k];
    out.matrix.entries[k] = {round_to_double(c.re(), &out.overflow),
                             round_to_double(c.im(), &out.overflow)};
  }
  return out;
}

FloatMatrix to_float_matrix(const OperatorExpr& expr, const MultiIndex& m) {
  return to_float_matrix(window_matrix(expr, m));
}

namespace {

using Vec = std::vector<std::complex<double>>;

double norm2(const Vec& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

Vec mul(const DenseMatrix& a, const Vec& v) {
  Vec out(a.rows);
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::complex<double> s = 0.0;
    for (std::size_t c = 0; c < a.cols; ++c) s += a.at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Vec mul_adjoint(const DenseMatrix& a, const Vec& v) {
  Vec out(a.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) out[c] += std::conj(a.at(r, c)) * v[r];
  }
  return out;
}

void normalize(Vec& v) {
  const double n = std::sqrt(norm2(v));
  for (auto& x : v) x /= n;
}

}  // namespace

NormEstimate operator_norm_estimate(const DenseMatrix& a, unsigned max_iterations,
                                    double tolerance) {
  NormEstimate est;
  if (a.rows == 0 || a.cols == 0) {
    est.converged = true;
    return est;
  }
  Vec v(a.cols, 1.0);
  normalize(v);
  double prev = -1.0;
  bool restarted = false;
  for (unsigned it = 1; it <= max_iterations; ++it) {
    const Vec w = mul(a, v);
    const double sigma2 = norm2(w);  // v^* A^* A v with ||v|| = 1
    Vec u = mul_adjoint(a, w);
    est.iterations = it;
    if (norm2(u) == 0.0) {
      if (restarted) {
        est.value = 0.0;
        est.converged = true;
        return est;
      }
      // Start vector in the kernel: restart from the heaviest column.
      std::size_t best = 0;
      double best_norm = 0.0;
      for (std::size_t c = 0; c < a.cols; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows; ++r) s += std::norm(a.at(r, c));
        if (s > best_norm) {
          best_norm = s;
          best = c;
        }
      }
      restarted = true;
      if (best_norm == 0.0) {
        est.value = 0.0;
        est.converged = true;
        return est;
      }
      v.assign(a.cols, 0.0);
      v[best] = 1.0;
      continue;
    }
    est.value = std::sqrt(sigma2);
    if (prev >= 0.0 && std::abs(sigma2 - prev) <= tolerance * sigma2) {
      est.converged = true;
      return est;
    }
    prev = sigma2;
    normalize(u);
    v = std::move(u);
  }
  return est;
}

std::vector<DecayRow> decay_profile(const OperatorExpr& t, const OperatorExpr& s, unsigned kmax,
                                    const MultiIndex& m, std::optional<std::size_t> i,
                                    std::optional<std::size_t> j) {
  if (t.space() != SpaceKind::Triangle || s.space() != SpaceKind::Polydisc) {
    throw DomainError("decay_profile expects a triangle operator and a polydisc operator");
  }
  const std::size_t n = t.dim();
  const std::size_t last = n - 1;
  const auto tri_in = OperatorExpr::mult(n, i.value_or(last), SpaceKind::Triangle);
  const auto tri_out = OperatorExpr::mult(n, j.value_or(last), SpaceKind::Triangle);
  const auto poly = OperatorExpr::mult(n, last, SpaceKind::Polydisc);

  std::vector<DecayRow> rows;
  for (unsigned k = 0; k <= kmax; ++k) {
    DecayRow row;
    row.k = k;
    const auto tri = OperatorExpr::product(
        {adjoint(OperatorExpr::power(tri_out, k)), t, OperatorExpr::power(tri_in, k)});
    const auto pol = OperatorExpr::product(
        {adjoint(OperatorExpr::power(poly, k)), s, OperatorExpr::power(poly, k)});
    row.triangle = operator_norm_estimate(to_float_matrix(tri, m).matrix);
    row.polydisc = operator_norm_estimate(to_float_matrix(pol, m).matrix);
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text, std::size_t entry) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw IoError("malformed MatrixMarket value \"" + text + "\" in entry " + std::to_string(entry + 1));
  }
  return v;
}

constexpr const char* kMatrixMarketHeader = "%%MatrixMarket matrix coordinate complex general";

}  // namespace

void write_matrix_market(const DenseMatrix& a, std::ostream& out) {
  const auto nnz = static_cast<std::size_t>(std::count_if(
      a.entries.begin(), a.entries.end(), [](const auto& z) { return z != 0.0; }));
  out << kMatrixMarketHeader << '\n' << a.rows << ' ' << a.cols << ' ' << nnz << '\n';
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) {
      const auto& z = a.at(r, c);
      if (z == 0.0) continue;
      out << r + 1 << ' ' << c + 1 << ' ' << format_double(z.real()) << ' '
          << format_double(z.imag()) << '\n';
    }
  }
}

void write_matrix_market(const ExactMatrix& a, std::ostream& out) {
  const auto nnz = static_cast<std::size_t>(std::count_if(
      a.entries.begin(), a.entries.end(), [](const auto& z) { return !z.is_zero(); }));
  out << kMatrixMarketHeader << '\n' << a.size() << ' ' << a.size() << ' ' << nnz << '\n';
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto& z = a.at(r, c);
      if (z.is_zero()) continue;
      out << r + 1 << ' ' << c + 1 << ' ' << rational_to_string(z.re()) << ' '
          << rational_to_string(z.im()) << '\n';
    }
  }
}

void write_csv(const DenseMatrix& a, std::ostream& out) {
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) {
      if (c != 0) out << ',';
      const auto& z = a.at(r, c);
      out << format_double(z.real()) << (std::signbit(z.imag()) ? '-' : '+')
          << format_double(std::abs(z.imag())) << 'i';
    }
    out << '\n';
  }
}

void write_labels(const std::vector<MultiIndex>& labels, std::ostream& out) {
  for (std::size_t k = 0; k < labels.size(); ++k) out << k + 1 << ": " << labels[k].to_string() << '\n';
}

DenseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0) {
    throw IoError("missing MatrixMarket banner");
  }
  if (line.find("coordinate") == std::string::npos || line.find("complex") == std::string::npos) {
    throw IoError("only coordinate complex MatrixMarket files are supported");
  }
  while (std::getline(in, line) && (line.empty() || line.front() == '%')) {
  }
  std::istringstream size_line(line);
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;
  if (!(size_line >> rows >> cols >> nnz)) throw IoError("malformed MatrixMarket size line");
  DenseMatrix a(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0;
    std::size_t c = 0;
    std::string re;
    std::string im;
    if (!(in >> r >> c >> re >> im) || r == 0 || c == 0 || r > rows || c > cols) {
      throw IoError("malformed MatrixMarket entry " + std::to_string(k + 1));
    }
    a.at(r - 1, c - 1) = {parse_double(re, k), parse_double(im, k)};
  }
  return a;
}

std::filesystem::path labels_path(const std::filesystem::path& matrix_path) {
  std::filesystem::path p = matrix_path;
  p += ".labels";
  return p;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace

void export_matrix(const DenseMatrix& a, ExportFormat format, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  if (format == ExportFormat::MatrixMarket) {
    write_matrix_market(a, out);
  } else {
    write_csv(a, out);
  }
  finish(out, path);
  const auto lpath = labels_path(path);
  auto labels = open_for_write(lpath);
  write_labels(a.row_labels, labels);
  finish(labels, lpath);
}

void export_matrix(const ExactMatrix& a, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_matrix_market(a, out);
  finish(out, path);
  const auto lpath = labels_path(path);
  auto labels = open_for_write(lpath);
  write_labels(a.labels, labels);
  finish(labels, lpath);
}

}  // namespace hartop
