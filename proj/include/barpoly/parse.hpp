#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "barpoly/mpoly.hpp"
#include "barpoly/scaled_poly.hpp"

namespace barpoly {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Recursive-descent reader for the canonical polynomial text format:
/// sums of terms C*x1^a1*...*xn^an, with C a rational, r^k, or a
/// parenthesized Laurent sum; "^1" and unit factors elided.
class PolyReader {
 public:
  PolyReader(const std::string& text, int n) : s_(text), n_(n) {}

  MPoly read_mpoly() {
    MPoly p = read_sum(/*allow_x=*/true);
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

  RLaurent read_rlaurent() {
    MPoly p = read_sum(/*allow_x=*/false);
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return constant_of(p);
  }

  ScaledPoly read_scaled() {
    skip_ws();
    if (peek() == '(') {
      std::size_t close = matching_paren(pos_);
      std::size_t after = close + 1;
      while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
      if (after < s_.size() && s_[after] == '/') {
        ++pos_;  // consume '('
        MPoly num = read_sum(true, /*stop_at=*/close);
        pos_ = after + 1;
        skip_ws();
        expect('(');
        std::size_t dclose = matching_paren(pos_ - 1);
        MPoly den = read_sum(false, dclose);
        pos_ = dclose + 1;
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return ScaledPoly(std::move(num), constant_of(den));
      }
    }
    return ScaledPoly(read_mpoly());
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (s_[i] == '(') ++depth;
      if (s_[i] == ')' && --depth == 0) return i;
    }
    throw ParseError("unbalanced parentheses");
  }

  BigInt read_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return BigInt(s_.substr(start, pos_ - start));
  }

  // sum := ['-'] term (('+'|'-') term)*   up to stop_at (or end)
  MPoly read_sum(bool allow_x, std::size_t stop_at = std::string::npos) {
    MPoly total(n_);
    bool neg = false;
    skip_ws();
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    total += read_term(allow_x, neg);
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || pos_ >= stop_at) break;
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      total += read_term(allow_x, c == '-');
    }
    return total;
  }

  // term := factor ('*' factor)*
  MPoly read_term(bool allow_x, bool negate) {
    RLaurent coeff(1);
    std::vector<int> exp(n_, 0);
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '(') {
        ++pos_;
        std::size_t close = matching_paren(pos_ - 1);
        MPoly inner = read_sum(false, close);
        pos_ = close + 1;
        coeff *= constant_of(inner);
      } else if (c == 'r') {
        ++pos_;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          bool eneg = false;
          if (peek() == '-') {
            eneg = true;
            ++pos_;
          }
          e = static_cast<int>(read_int());
          if (eneg) e = -e;
        }
        coeff *= RLaurent::r(e);
      } else if (c == 'x') {
        if (!allow_x) fail("unexpected variable in a scalar context");
        ++pos_;
        int idx = static_cast<int>(read_int());
        if (idx < 1 || idx > n_) fail("variable index out of range");
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = static_cast<int>(read_int());
        }
        exp[idx - 1] += e;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num = read_int();
        BigInt den = 1;
        if (peek() == '/') {
          ++pos_;
          den = read_int();
          if (den == 0) fail("zero denominator");
        }
        coeff *= RLaurent(Rational(num, den));
      } else {
        fail("expected a factor");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    MPoly t(n_);
    t.add_term(std::move(exp), negate ? -coeff : coeff);
    return t;
  }

  static RLaurent constant_of(const MPoly& p) {
    RLaurent out;
    for (const auto& [e, c] : p.terms()) out += c;  // all exponents are zero here
    return out;
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly parse_mpoly(const std::string& text, int n) {
  return detail::PolyReader(text, n).read_mpoly();
}

inline RLaurent parse_rlaurent(const std::string& text) {
  return detail::PolyReader(text, 0).read_rlaurent();
}

inline ScaledPoly parse_scaled_poly(const std::string& text, int n) {
  return detail::PolyReader(text, n).read_scaled();
}

/// Comma-separated RLaurent coordinates, e.g. "-1-r,-1".
inline std::vector<RLaurent> parse_point(const std::string& text) {
  std::vector<RLaurent> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_rlaurent(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace barpoly
