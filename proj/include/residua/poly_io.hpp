#pragma once

// Text syntax for polynomials: `3*x^2*y - 1/2*z + 5`. `*` is required
// between factors, `^` takes a non-negative integer, parentheses group.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "residua/errors.hpp"
#include "residua/polynomial.hpp"

namespace residua {

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const RingPtr<F>& ring, std::string_view text, std::size_t line,
             std::size_t column_offset)
      : ring_(ring), text_(text), line_(line), col0_(column_offset) {}

  Polynomial<F> parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    Polynomial<F> acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    auto t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<F> term() {
    auto acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        auto d = digits();
        auto c = ring_->field().from_digits(d);
        if (ring_->field().is_zero(c)) fail("division by zero");
        acc = acc.scaled(ring_->field().inv(c));
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<F> factor() {
    auto base = primary();
    if (accept('^')) {
      skip_ws();
      auto d = digits();
      if (d.size() > 5) fail("exponent too large");
      int e = std::stoi(std::string(d));
      auto r = Polynomial<F>::one(ring_);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  Polynomial<F> primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto d = digits();
      return Polynomial<F>::constant(ring_, ring_->field().from_digits(d));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial<F>::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one polynomial. `line` and `column_offset` only affect error positions.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text,
                               std::size_t line = 1, std::size_t column_offset = 0) {
  return detail::PolyParser<F>(ring, text, line, column_offset).parse();
}

/// Parses a comma-separated polynomial list; an empty string yields no
/// polynomials.
template <class F>
PolyList<F> parse_polynomial_list(const RingPtr<F>& ring, std::string_view text,
                                  std::size_t line = 1, std::size_t column_offset = 0) {
  PolyList<F> out;
  std::size_t depth = 0, start = 0;
  bool any = false;
  for (char c : text) any = any || !std::isspace(static_cast<unsigned char>(c));
  if (!any) return out;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')' && depth > 0) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_polynomial(ring, text.substr(start, i - start), line, column_offset + start));
      start = i + 1;
    }
  }
  return out;
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Canonical text form; terms appear in descending ring order.
template <class F>
std::string to_string(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const auto& field = p.ring()->field();
  const auto& names = p.ring()->variables();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = field.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = format_monomial(t.mono, names);
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

template <class F>
std::vector<std::string> to_strings(const PolyList<F>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

template <class F>
std::string join(const PolyList<F>& ps, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += sep;
    out += to_string(ps[i]);
  }
  return out;
}

}  // namespace residua
