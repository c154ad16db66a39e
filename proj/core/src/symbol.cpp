#include "hartop/symbol.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "hartop/errors.hpp"

namespace hartop {

namespace {

void require_same_dim(const LaurentSymbol& f, const LaurentSymbol& g) {
  if (f.dim() != g.dim()) {
    throw DimensionMismatch("symbol dimensions differ: " + std::to_string(f.dim()) + " vs " +
                            std::to_string(g.dim()));
  }
}

template <class ExponentMap>
LaurentSymbol reindex(const LaurentSymbol& f, ExponentMap map) {
  LaurentSymbol out(f.dim());
  for (const auto& [e, c] : f.terms()) out.add_term(map(e), c);
  return out;
}

}  // namespace

LaurentSymbol::LaurentSymbol(std::size_t n) : n_(n) {
  if (n < kMinDimension) {
    throw DomainError("symbol dimension must be at least 2, got " + std::to_string(n));
  }
}

LaurentSymbol LaurentSymbol::constant(std::size_t n, const ComplexRational& c) {
  LaurentSymbol f(n);
  f.add_term(MultiIndex::zero(n), c);
  return f;
}

LaurentSymbol LaurentSymbol::monomial(const MultiIndex& exponent, const ComplexRational& c) {
  LaurentSymbol f(exponent.dim());
  f.add_term(exponent, c);
  return f;
}

ComplexRational LaurentSymbol::coefficient(const MultiIndex& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? ComplexRational{} : it->second;
}

void LaurentSymbol::add_term(const MultiIndex& exponent, const ComplexRational& c) {
  if (exponent.dim() != n_) throw DimensionMismatch("exponent dimension differs from symbol");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentSymbol add(const LaurentSymbol& f, const LaurentSymbol& g) {
  require_same_dim(f, g);
  LaurentSymbol out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, c);
  return out;
}

LaurentSymbol subtract(const LaurentSymbol& f, const LaurentSymbol& g) {
  require_same_dim(f, g);
  LaurentSymbol out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, -c);
  return out;
}

LaurentSymbol scale(const LaurentSymbol& f, const ComplexRational& c) {
  LaurentSymbol out(f.dim());
  for (const auto& [e, a] : f.terms()) out.add_term(e, a * c);
  return out;
}

LaurentSymbol multiply(const LaurentSymbol& f, const LaurentSymbol& g) {
  require_same_dim(f, g);
  LaurentSymbol out(f.dim());
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : g.terms()) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentSymbol conjugate(const LaurentSymbol& f) {
  LaurentSymbol out(f.dim());
  for (const auto& [e, c] : f.terms()) out.add_term(-e, c.conj());
  return out;
}

LaurentSymbol pushforward(const LaurentSymbol& f) { return reindex(f, exponent_pushforward); }

LaurentSymbol pullback(const LaurentSymbol& f) { return reindex(f, exponent_pullback); }

SymbolClass classify(const LaurentSymbol& f) {
  SymbolClass c{true, true, true, false};
  for (const auto& [e, a] : f.terms()) {
    c.polydisc_analytic = c.polydisc_analytic && in_polydisc_basis(e);
    c.triangle_analytic = c.triangle_analytic && in_analytic_cone(e);
    c.triangle_hardy = c.triangle_hardy && in_hartogs_basis(e);
  }
  if (f.size() == 1) {
    const auto& [e, a] = *f.terms().begin();
    c.inner_monomial = a.norm() == 1 && in_analytic_cone(e);
  }
  return c;
}

std::string to_string(const SymbolClass& c) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string s = "polydisc_analytic=";
  s += flag(c.polydisc_analytic);
  s += " triangle_analytic=";
  s += flag(c.triangle_analytic);
  s += " triangle_hardy=";
  s += flag(c.triangle_hardy);
  s += " inner_monomial=";
  s += flag(c.inner_monomial);
  return s;
}

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void structural(const std::string& path, const std::string& what) {
  throw ParseError("symbol " + path + ": " + what, 0, 0, path);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) structural(path, std::string("missing field \"") + key + "\"");
  return *it;
}

mpq_class rational_field(const json& v, const std::string& path) {
  if (!v.is_string()) structural(path, "expected a rational string \"p\" or \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    structural(path, e.what());
  }
}

}  // namespace

LaurentSymbol parse_symbol(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("symbol JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     line, col);
  }
  if (!doc.is_object()) structural("", "top level must be an object");
  const json& n_field = member(doc, "n", "");
  if (!n_field.is_number_integer() || n_field.get<std::int64_t>() < 2) {
    structural("/n", "dimension must be an integer >= 2");
  }
  const auto n = n_field.get<std::size_t>();
  const json& terms = member(doc, "terms", "");
  if (!terms.is_array()) structural("/terms", "expected an array");

  LaurentSymbol f(n);
  std::set<MultiIndex> seen;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string path = "/terms/" + std::to_string(t);
    const json& term = terms[t];
    if (!term.is_object()) structural(path, "expected an object");
    const json& exp = member(term, "exp", path);
    if (!exp.is_array() || exp.size() != n) {
      structural(path + "/exp", "expected an array of " + std::to_string(n) + " integers");
    }
    std::vector<std::int64_t> entries;
    for (const auto& v : exp) {
      if (!v.is_number_integer()) structural(path + "/exp", "exponent entries must be integers");
      entries.push_back(v.get<std::int64_t>());
    }
    MultiIndex e(std::move(entries));
    if (!seen.insert(e).second) {
      throw DuplicateExponent("symbol " + path + ": duplicate exponent " + e.to_string(), 0, 0,
                              path + "/exp");
    }
    ComplexRational c(rational_field(member(term, "re", path), path + "/re"),
                      rational_field(member(term, "im", path), path + "/im"));
    f.add_term(e, c);
  }
  return f;
}

std::string serialize_symbol(const LaurentSymbol& f) {
  nlohmann::ordered_json doc;
  doc["n"] = f.dim();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::ordered_json term;
    term["exp"] = std::vector<std::int64_t>(e.entries().begin(), e.entries().end());
    term["re"] = rational_to_string(c.re());
    term["im"] = rational_to_string(c.im());
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string to_display_string(const LaurentSymbol& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.dim(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "z" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << '(' << c.to_string() << ')';
    } else if (c == ComplexRational(1)) {
      os << mono;
    } else {
      os << '(' << c.to_string() << ")*" << mono;
    }
  }
  return os.str();
}

LaurentSymbol ztilde(std::size_t n, std::size_t j, std::int64_t power) {
  if (j >= n) throw DomainError("z~ index out of range");
  return LaurentSymbol::monomial(exponent_pullback(power * MultiIndex::unit(n, j)));
}

}  // namespace hartop
