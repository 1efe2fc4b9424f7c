#ifndef LEIBNIZ_TEXT_FORMAT_HPP
#define LEIBNIZ_TEXT_FORMAT_HPP

// Line-oriented `.alg` text format for algebra tables:
//
//   algebra NAME
//   dim INT
//   params NAME+            (optional)
//   basis NAME+
//   [NAME,NAME] = EXPR      (zero or more; unlisted products are zero)
//
// EXPR is `0` or terms joined by `+`/`-`; a term is an optional rational
// coefficient, optional parameter monomial, then a basis symbol, all joined
// by `*`, e.g. `-1/2*a*b*x2`. `#` starts a comment. Whitespace inside a line
// is insignificant.
//
// Change-of-basis files use the same header with `change NAME` in place of
// `algebra NAME` and lines `new NAME = EXPR` giving each new basis vector in
// old coordinates; new names not listed keep their identity row.

#include <leibniz/algebra_table.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leibniz {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline bool is_number_token(std::string_view s) {
  if (s.empty()) return false;
  return std::isdigit(static_cast<unsigned char>(s[0])) != 0;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Splits "a-b+c" into signed chunks; a leading sign belongs to the first term.
inline std::vector<std::pair<bool, std::string>> split_terms(const std::string& expr, std::size_t line) {
  std::vector<std::pair<bool, std::string>> out;
  std::size_t i = 0;
  while (i < expr.size()) {
    bool negative = false;
    if (expr[i] == '+' || expr[i] == '-') {
      negative = expr[i] == '-';
      ++i;
    } else if (!out.empty()) {
      throw ParseError(line, "expected '+' or '-' in expression");
    }
    std::size_t j = i;
    while (j < expr.size() && expr[j] != '+' && expr[j] != '-') ++j;
    if (j == i) throw ParseError(line, "empty term in expression '" + expr + "'");
    out.emplace_back(negative, expr.substr(i, j - i));
    i = j;
  }
  if (out.empty()) throw ParseError(line, "empty expression");
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

struct ParsedTerm {
  Rational coeff{1};
  Monomial mono;
  std::optional<std::string> symbol;
};

// Parses one unsigned term. `symbols` non-null means the term must end in a
// basis symbol from that list.
inline ParsedTerm parse_term(const std::string& text, const std::vector<std::string>* symbols,
                             const std::set<std::string>* params, std::size_t line) {
  ParsedTerm term;
  auto factors = split_on(text, '*');
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const std::string& tok = factors[f];
    if (tok.empty()) throw ParseError(line, "empty factor in term '" + text + "'");
    if (is_number_token(tok)) {
      if (f != 0) throw ParseError(line, "coefficient must come first in term '" + text + "'");
      try {
        term.coeff = parse_rational(tok);
      } catch (const std::exception&) {
        throw ParseError(line, "malformed coefficient '" + tok + "'");
      }
      continue;
    }
    const bool last = f + 1 == factors.size();
    if (symbols && last) {
      bool known = false;
      for (const auto& s : *symbols) known = known || s == tok;
      if (!known) {
        if (params && params->count(tok)) throw ParseError(line, "term '" + text + "' must end with a basis symbol");
        throw ParseError(line, "unknown symbol '" + tok + "'");
      }
      term.symbol = tok;
      continue;
    }
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    unsigned exponent = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(line, "malformed exponent in '" + tok + "'");
      exponent = static_cast<unsigned>(std::stoul(e));
      if (exponent == 0) throw ParseError(line, "zero exponent in '" + tok + "'");
    }
    if (!is_identifier(name)) throw ParseError(line, "malformed factor '" + tok + "'");
    if (params && !params->count(name)) {
      if (symbols) {
        for (const auto& s : *symbols)
          if (s == name) throw ParseError(line, "basis symbol '" + name + "' must be the last factor");
      }
      throw ParseError(line, "unknown symbol '" + name + "'");
    }
    term.mono.multiply_by(name, exponent);
  }
  if (symbols && !term.symbol) throw ParseError(line, "term '" + text + "' has no basis symbol");
  return term;
}

inline Element parse_element_expr(const std::string& raw, const std::vector<std::string>& basis,
                                  const std::set<std::string>& params, std::size_t line) {
  Element e(basis.size());
  const std::string expr = strip_spaces(raw);
  if (expr == "0") return e;
  for (const auto& [negative, text] : split_terms(expr, line)) {
    ParsedTerm t = parse_term(text, &basis, &params, line);
    std::size_t idx = 0;
    while (basis[idx] != *t.symbol) ++idx;
    e[idx].add_term(t.mono, negative ? Rational(-t.coeff) : t.coeff);
  }
  return e;
}

struct Header {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> basis;
};

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string s(raw);
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (!strip_spaces(s).empty()) out.push_back({number, s});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

// Reads the shared header; returns the index of the first body line.
inline std::size_t parse_header(const std::vector<Line>& lines, const char* keyword, Header& h) {
  std::size_t pos = 0;
  auto expect = [&](const char* kw) -> std::vector<std::string> {
    if (pos >= lines.size())
      throw ParseError(lines.empty() ? 0 : lines.back().number, std::string("missing '") + kw + "' line");
    auto w = words(lines[pos].text);
    if (w.empty() || w[0] != kw)
      throw ParseError(lines[pos].number, std::string("expected '") + kw + "', found '" + lines[pos].text + "'");
    return w;
  };

  auto w = expect(keyword);
  if (w.size() != 2) throw ParseError(lines[pos].number, std::string("'") + keyword + "' takes exactly one name");
  h.name = w[1];
  ++pos;

  w = expect("dim");
  const std::size_t dim_line = lines[pos].number;
  if (w.size() != 2 || !std::all_of(w[1].begin(), w[1].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(dim_line, "'dim' takes one non-negative integer");
  const std::size_t dim = std::stoul(w[1]);
  if (dim == 0) throw ParseError(dim_line, "dimension must be positive");
  ++pos;

  if (pos < lines.size() && words(lines[pos].text).at(0) == "params") {
    w = words(lines[pos].text);
    if (w.size() < 2) throw ParseError(lines[pos].number, "'params' needs at least one name");
    std::set<std::string> seen;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (!is_identifier(w[k])) throw ParseError(lines[pos].number, "bad parameter name '" + w[k] + "'");
      if (!seen.insert(w[k]).second) throw ParseError(lines[pos].number, "duplicate parameter '" + w[k] + "'");
      h.params.push_back(w[k]);
    }
    ++pos;
  }

  w = expect("basis");
  std::set<std::string> seen(h.params.begin(), h.params.end());
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!is_identifier(w[k])) throw ParseError(lines[pos].number, "bad basis name '" + w[k] + "'");
    if (!seen.insert(w[k]).second)
      throw ParseError(lines[pos].number, "basis name '" + w[k] + "' repeats a basis or parameter name");
    h.basis.push_back(w[k]);
  }
  if (h.basis.size() != dim)
    throw ParseError(lines[pos].number, "dim is " + std::to_string(dim) + " but " + std::to_string(h.basis.size()) +
                                            " basis names were given");
  return pos + 1;
}

}  // namespace detail

/// Parses a scalar in the `[rational][*mono]` sum syntax. When `params` is
/// given, every name must be one of them.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>* params = nullptr) {
  std::set<std::string> allowed;
  if (params) allowed.insert(params->begin(), params->end());
  const std::string expr = detail::strip_spaces(text);
  Polynomial p;
  if (expr == "0") return p;
  for (const auto& [negative, chunk] : detail::split_terms(expr, 0)) {
    auto t = detail::parse_term(chunk, nullptr, params ? &allowed : nullptr, 0);
    p.add_term(t.mono, negative ? Rational(-t.coeff) : t.coeff);
  }
  return p;
}

inline AlgebraTable parse_algebra(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  detail::Header h;
  std::size_t pos = detail::parse_header(lines, "algebra", h);
  AlgebraTable t(h.name, h.basis, h.params);
  const std::set<std::string> params(h.params.begin(), h.params.end());
  std::set<std::pair<std::string, std::string>> seen;

  for (; pos < lines.size(); ++pos) {
    const auto& [number, raw] = lines[pos];
    const std::string s = detail::strip_spaces(raw);
    auto close = s.find(']');
    auto comma = s.find(',');
    if (s.empty() || s[0] != '[' || close == std::string::npos || comma == std::string::npos || comma > close ||
        close + 1 >= s.size() || s[close + 1] != '=')
      throw ParseError(number, "expected a product line '[a,b] = expr', found '" + raw + "'");
    std::string left = s.substr(1, comma - 1), right = s.substr(comma + 1, close - comma - 1);
    for (const auto* sym : {&left, &right})
      if (!t.has_symbol(*sym)) throw ParseError(number, "unknown symbol '" + *sym + "'");
    if (!seen.emplace(left, right).second)
      throw ParseError(number, "duplicate product [" + left + "," + right + "]");
    t.set_product(left, right, detail::parse_element_expr(s.substr(close + 2), h.basis, params, number));
  }
  return t;
}

/// Canonical text: header, then nonzero products in basis-index order.
inline std::string serialize_algebra(const AlgebraTable& t) {
  std::string out = "algebra " + t.name() + "\n";
  out += "dim " + std::to_string(t.dim()) + "\n";
  if (!t.params().empty()) {
    out += "params";
    for (const auto& p : t.params()) out += " " + p;
    out += "\n";
  }
  out += "basis";
  for (const auto& b : t.basis()) out += " " + b;
  out += "\n";
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const Element& v = t.product(i, j);
      if (v.is_zero()) continue;
      out += "[" + t.basis()[i] + "," + t.basis()[j] + "] = " + v.to_string(t.basis(), t.params()) + "\n";
    }
  return out;
}

/// Contents of a change-of-basis file: row i is the new basis vector i
/// expressed in the old basis.
struct ChangeDocument {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::string> params;
  std::vector<Element> rows;
};

inline ChangeDocument parse_change(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  detail::Header h;
  std::size_t pos = detail::parse_header(lines, "change", h);
  ChangeDocument doc{h.name, h.basis, h.params, {}};
  for (std::size_t i = 0; i < h.basis.size(); ++i) doc.rows.push_back(Element::basis_vector(h.basis.size(), i));
  const std::set<std::string> params(h.params.begin(), h.params.end());
  std::set<std::string> seen;
  for (; pos < lines.size(); ++pos) {
    const auto& [number, raw] = lines[pos];
    auto w = detail::words(raw);
    auto eq = raw.find('=');
    if (w.empty() || w[0] != "new" || eq == std::string::npos)
      throw ParseError(number, "expected 'new NAME = expr', found '" + raw + "'");
    std::string target = detail::strip_spaces(std::string_view(raw).substr(0, eq));
    target = target.substr(3);
    std::size_t idx = h.basis.size();
    for (std::size_t k = 0; k < h.basis.size(); ++k)
      if (h.basis[k] == target) idx = k;
    if (idx == h.basis.size()) throw ParseError(number, "unknown symbol '" + target + "'");
    if (!seen.insert(target).second) throw ParseError(number, "duplicate definition of new '" + target + "'");
    doc.rows[idx] = detail::parse_element_expr(raw.substr(eq + 1), h.basis, params, number);
  }
  return doc;
}

inline std::string serialize_change(const ChangeDocument& doc) {
  std::string out = "change " + doc.name + "\ndim " + std::to_string(doc.basis.size()) + "\n";
  if (!doc.params.empty()) {
    out += "params";
    for (const auto& p : doc.params) out += " " + p;
    out += "\n";
  }
  out += "basis";
  for (const auto& b : doc.basis) out += " " + b;
  out += "\n";
  for (std::size_t i = 0; i < doc.rows.size(); ++i)
    if (!(doc.rows[i] == Element::basis_vector(doc.basis.size(), i)))
      out += "new " + doc.basis[i] + " = " + doc.rows[i].to_string(doc.basis, doc.params) + "\n";
  return out;
}

}  // namespace leibniz

#endif  // LEIBNIZ_TEXT_FORMAT_HPP
