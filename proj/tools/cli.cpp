#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hartop/errors.hpp"
#include "hartop/lattice.hpp"
#include "hartop/numerics.hpp"
#include "hartop/operators.hpp"
#include "hartop/rational.hpp"
#include "hartop/symbol.hpp"
#include "hartop/verify.hpp"

namespace hartop::cli {

namespace {

/// Raised for bad flag values detected after CLI11 has parsed the line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* flag) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw UsageError(std::string(flag) + ": expected comma-separated integers, got \"" + text + "\"");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(std::string(flag) + " is empty");
  return values;
}

MultiIndex parse_window(const std::optional<std::string>& text, std::size_t n) {
  if (!text) return MultiIndex(std::vector<std::int64_t>(n, 6));
  auto values = parse_int_list(*text, "--window");
  if (values.size() != n) {
    throw UsageError("--window has " + std::to_string(values.size()) + " entries but --n is " +
                     std::to_string(n));
  }
  for (auto v : values) {
    if (v < 0) throw UsageError("--window entries must be non-negative");
  }
  return MultiIndex(std::move(values));
}

MultiIndex parse_gamma(const std::optional<std::string>& text, std::size_t n) {
  if (!text) {
    MultiIndex g = MultiIndex::zero(n);
    g[0] = 1;
    g[1] = -1;
    return g;
  }
  auto values = parse_int_list(*text, "--gamma");
  if (values.size() != n) throw UsageError("--gamma must have n entries");
  return MultiIndex(std::move(values));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LaurentSymbol load_symbol(const std::string& path) {
  try {
    return parse_symbol(read_file(path));
  } catch (const ParseError& e) {
    std::string where = path;
    if (e.line() != 0) where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    if (!e.path().empty()) where += " at " + e.path();
    throw UsageError(where + ": " + e.what());
  }
}

/// Writes to --out when given, otherwise to `out`.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot write " + out_path);
  f << text;
  if (!f) throw IoError("write to " + out_path + " failed");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HARTOP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) cap = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("HARTOP_THREADS is not a positive integer: ") + env);
    }
  }
  return cap;
}

struct Options {
  std::size_t n = 2;
  std::string space = "triangle";
  std::optional<std::string> window;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::string format;
  std::string out;
  bool exact = false;
  bool deterministic = false;
  unsigned kmax = 5;
  std::string lambda = "1/2";
  std::optional<std::string> gamma;
  unsigned order = 8;

  std::string symbol_op;
  std::vector<std::string> files;
  std::string check;
};

SpaceKind space_of(const Options& o) {
  auto s = parse_space(o.space);
  if (!s) throw UsageError("--space must be triangle or polydisc");
  return *s;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const SpaceKind space = space_of(o);
  const MultiIndex m = parse_window(o.window, o.n);
  std::ostringstream text;
  for (const auto& a : enumerate_window(m, space)) {
    text << a.to_string();
    if (space == SpaceKind::Triangle) text << " -> " << to_polydisc(a).to_string();
    text << '\n';
  }
  emit(text.str(), o.out, out);
  return kOk;
}

int cmd_symbol(const Options& o, std::ostream& out) {
  static const std::map<std::string, std::size_t> arity = {
      {"add", 2}, {"mul", 2}, {"conj", 1}, {"pushforward", 1}, {"pullback", 1}, {"classify", 1}};
  const auto it = arity.find(o.symbol_op);
  if (it == arity.end()) throw UsageError("unknown symbol operation \"" + o.symbol_op + "\"");
  if (o.files.size() != it->second) {
    throw UsageError("symbol " + o.symbol_op + " takes " + std::to_string(it->second) + " file(s)");
  }
  std::vector<LaurentSymbol> in;
  for (const auto& f : o.files) in.push_back(load_symbol(f));
  if (in.size() == 2 && in[0].dim() != in[1].dim()) {
    throw DimensionMismatch("symbols have dimensions " + std::to_string(in[0].dim()) + " and " +
                            std::to_string(in[1].dim()));
  }
  std::string text;
  if (o.symbol_op == "classify") {
    text = to_string(classify(in[0])) + "\n";
  } else {
    LaurentSymbol r(in[0].dim());
    if (o.symbol_op == "add") r = in[0] + in[1];
    if (o.symbol_op == "mul") r = in[0] * in[1];
    if (o.symbol_op == "conj") r = conjugate(in[0]);
    if (o.symbol_op == "pushforward") r = pushforward(in[0]);
    if (o.symbol_op == "pullback") r = pullback(in[0]);
    text = serialize_symbol(r) + "\n";
  }
  emit(text, o.out, out);
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const LaurentSymbol phi = load_symbol(o.files.front());
  const SpaceKind space = space_of(o);
  const MultiIndex m = parse_window(o.window, phi.dim());
  const std::string format = o.format.empty() ? "mm" : o.format;
  if (format != "mm" && format != "csv") throw UsageError("--format must be mm or csv for matrix");
  if (o.exact && format == "csv") throw UsageError("--exact output is MatrixMarket only");

  const ExactMatrix exact = window_matrix(OperatorExpr::toeplitz(phi, space), m);
  if (o.exact) {
    if (o.out.empty()) {
      write_matrix_market(exact, out);
    } else {
      export_matrix(exact, o.out);
    }
    return kOk;
  }
  const FloatMatrix fl = to_float_matrix(exact);
  if (fl.overflow) throw DomainError("matrix entries overflow double precision");
  const ExportFormat f = format == "csv" ? ExportFormat::Csv : ExportFormat::MatrixMarket;
  if (o.out.empty()) {
    if (f == ExportFormat::Csv) {
      write_csv(fl.matrix, out);
    } else {
      write_matrix_market(fl.matrix, out);
    }
  } else {
    export_matrix(fl.matrix, f, o.out);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  config.n = o.n;
  config.window = parse_window(o.window, o.n);
  config.seed = o.seed;
  config.trials = o.trials;
  config.kmax = o.kmax;
  try {
    config.lambda = ComplexRational(parse_rational(o.lambda));
  } catch (const std::exception&) {
    throw UsageError("--lambda must be a rational p or p/q");
  }
  config.gamma = parse_gamma(o.gamma, o.n);
  config.order = o.order;

  std::vector<std::string> names;
  if (o.check == "all") {
    names = check_names();
  } else {
    const auto& known = check_names();
    if (std::find(known.begin(), known.end(), o.check) == known.end()) {
      std::string list;
      for (const auto& k : known) list += " " + k;
      throw UsageError("unknown check \"" + o.check + "\"; known:" + list + " all");
    }
    names = {o.check};
  }
  const std::string format = o.format.empty() ? "text" : o.format;
  if (format != "text" && format != "json") throw UsageError("--format must be text or json for verify");

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) throw IoError("cannot write " + o.out);
  }
  std::ostream& sink = o.out.empty() ? out : file;
  auto render = [&](const CheckReport& r) {
    if (format == "json") {
      return to_json(r, o.deterministic ? std::nullopt : std::optional<std::string>(utc_timestamp())) + "\n";
    }
    return to_text(r) + "\n";
  };

  bool all_passed = true;
  const unsigned threads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(names.size()));
  if (o.deterministic || threads <= 1) {
    for (const auto& r : run_suite(names, config, threads)) {
      all_passed = all_passed && r.passed();
      sink << render(r) << std::flush;
    }
  } else {
    // completion order; each worker pulls the next unclaimed check
    std::mutex lock;
    std::size_t next = 0;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = 0;
          {
            std::lock_guard<std::mutex> g(lock);
            if (next == names.size() || error) return;
            i = next++;
          }
          try {
            const CheckReport r = run_check(names[i], config);
            std::lock_guard<std::mutex> g(lock);
            all_passed = all_passed && r.passed();
            sink << render(r) << std::flush;
          } catch (...) {
            std::lock_guard<std::mutex> g(lock);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  return all_passed ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Toeplitz and Hankel operators on the Hartogs triangle and the polydisc", "hartop"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Dimension")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", o.window, "Window bounds m1,...,mn (default 6 in every coordinate)");
  };

  auto* basis = app.add_subcommand("basis", "List window basis exponents");
  add_n(basis);
  add_window(basis);
  basis->add_option("--space", o.space, "triangle or polydisc");
  basis->add_option("--out", o.out, "Output file");

  auto* symbol = app.add_subcommand("symbol", "Symbol algebra on JSON symbol files");
  symbol->add_option("op", o.symbol_op, "add | mul | conj | pushforward | pullback | classify")->required();
  symbol->add_option("files", o.files, "Symbol files")->required();
  symbol->add_option("--out", o.out, "Output file");

  auto* matrix = app.add_subcommand("matrix", "Export the window matrix of a Toeplitz operator");
  matrix->add_option("file", o.files, "Symbol file")->required()->expected(1);
  add_window(matrix);
  matrix->add_option("--space", o.space, "triangle or polydisc");
  auto* exact = matrix->add_flag("--exact", o.exact, "Exact rational entries");
  matrix->add_flag("--float", "Double-precision entries (default)")->excludes(exact);
  matrix->add_option("--format", o.format, "mm or csv");
  matrix->add_option("--out", o.out, "Output file; a .labels sidecar is written next to it");

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("check", o.check, "Check name or all")->required();
  add_n(verify);
  add_window(verify);
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trials", o.trials, "Random trials per check")->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format, "text or json");
  verify->add_option("--out", o.out, "Report file");
  verify->add_flag("--deterministic", o.deterministic, "Declaration order, no timestamps");
  verify->add_option("--kmax", o.kmax, "Largest shift power");
  verify->add_option("--lambda", o.lambda, "Left-inverse parameter");
  verify->add_option("--gamma", o.gamma, "Left-inverse exponent g1,...,gn");
  verify->add_option("--order", o.order, "Largest left-inverse truncation order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hartop: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (basis->parsed()) return cmd_basis(o, out);
    if (symbol->parsed()) return cmd_symbol(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    return cmd_verify(o, out);
  } catch (const IoError& e) {
    err << "hartop: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    // bad flags, unreadable input, dimension or domain errors
    err << "hartop: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hartop::cli
