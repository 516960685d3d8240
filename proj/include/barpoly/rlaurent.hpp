#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "barpoly/rational.hpp"

namespace barpoly {

// Thrown when an operation that is guaranteed exact by construction turns out
// not to be; it signals a bug in the caller, not bad user input.
struct InternalInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Laurent polynomial in the single parameter r with Rational coefficients.
/// This is the coefficient ring of every polynomial in the library; the Jack
/// parameter alpha = 1/r appears as negative powers of r. Terms with zero
/// coefficient are never stored, so equality is map equality.
class RLaurent {
 public:
  RLaurent() = default;
  RLaurent(int c) { add_term(c, 0); }                 // NOLINT(runtime/explicit)
  RLaurent(const Rational& c) { add_term(c, 0); }     // NOLINT(runtime/explicit)

  static RLaurent term(const Rational& c, int exp) {
    RLaurent p;
    p.add_term(c, exp);
    return p;
  }
  static RLaurent r(int exp = 1) { return term(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && coeff(0) == 1; }

  // Exponent range of the support; calling these on zero is a bug.
  int min_exp() const {
    if (is_zero()) throw InternalInvariantError("min_exp of zero");
    return terms_.begin()->first;
  }
  int max_exp() const {
    if (is_zero()) throw InternalInvariantError("max_exp of zero");
    return terms_.rbegin()->first;
  }

  Rational coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<int, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Rational& c, int exp) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  RLaurent& operator+=(const RLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
  }
  RLaurent& operator-=(const RLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
  }
  friend RLaurent operator+(RLaurent a, const RLaurent& b) { return a += b; }
  friend RLaurent operator-(RLaurent a, const RLaurent& b) { return a -= b; }
  friend RLaurent operator-(const RLaurent& a) {
    RLaurent out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend RLaurent operator*(const RLaurent& a, const RLaurent& b) {
    RLaurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
    return out;
  }
  RLaurent& operator*=(const RLaurent& o) { return *this = *this * o; }

  friend bool operator==(const RLaurent& a, const RLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RLaurent& a, const RLaurent& b) {
    return !(a == b);
  }
  friend bool operator<(const RLaurent& a, const RLaurent& b) {
    return a.terms_ < b.terms_;
  }

  RLaurent shifted(int delta) const {
    RLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + delta, c);
    return out;
  }

  /// Exact division; the remainder must vanish. Both operands are shifted so
  /// the divisor becomes an honest polynomial, then ordinary long division in
  /// r runs top-down.
  std::optional<RLaurent> try_divide(const RLaurent& d) const {
    if (d.is_zero()) throw InternalInvariantError("division by zero RLaurent");
    if (is_zero()) return RLaurent();
    RLaurent rem = shifted(-min_exp());
    RLaurent div = d.shifted(-d.min_exp());
    RLaurent quot;
    const int ddeg = div.max_exp();
    const Rational dlead = div.coeff(ddeg);
    while (!rem.is_zero() && rem.max_exp() >= ddeg) {
      int e = rem.max_exp() - ddeg;
      Rational c = rem.coeff(rem.max_exp()) / dlead;
      quot.add_term(c, e);
      rem -= div * term(c, e);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(min_exp() - d.min_exp());
  }

  RLaurent divide_exact(const RLaurent& d) const {
    auto q = try_divide(d);
    if (!q) throw InternalInvariantError("inexact RLaurent division");
    return *q;
  }

  bool all_coeffs_integer() const {
    for (const auto& [e, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }
  bool all_coeffs_nonneg() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Canonical text, r-exponents descending: "r^2 + r", "-2*r + 1", "r^-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (e == 0) {
        os << rational_to_string(mag);
      } else {
        if (mag != 1) os << rational_to_string(mag) << "*";
        os << "r";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  std::string to_latex() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::string ms = rational_to_string(mag);
      if (!is_integer(mag)) ms = "\\tfrac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
      if (e == 0) {
        os << ms;
      } else {
        if (mag != 1) os << ms;
        os << "r";
        if (e != 1) os << "^{" << e << "}";
      }
    }
    return os.str();
  }

 private:
  std::map<int, Rational> terms_;
};

/// Monic gcd in Q[r] up to units (powers of r are units in the Laurent ring,
/// so supports are shifted away first). gcd(0, b) = b normalized.
inline RLaurent rlaurent_gcd(const RLaurent& a, const RLaurent& b) {
  auto normalize = [](const RLaurent& p) {
    if (p.is_zero()) return p;
    RLaurent out = p.shifted(-p.min_exp());
    return out.divide_exact(RLaurent::term(out.coeff(out.max_exp()), 0));
  };
  RLaurent x = normalize(a), y = normalize(b);
  while (!y.is_zero()) {
    // remainder of x by y in Q[r]
    RLaurent rem = x;
    const int ydeg = y.max_exp();
    const Rational ylead = y.coeff(ydeg);
    while (!rem.is_zero() && rem.max_exp() >= ydeg) {
      rem -= y * RLaurent::term(rem.coeff(rem.max_exp()) / ylead, rem.max_exp() - ydeg);
    }
    x = y;
    y = normalize(rem);
  }
  return x;
}

}  // namespace barpoly
