#pragma once

#include <string>
#include <utility>

#include "barpoly/mpoly.hpp"

namespace barpoly {

/// A polynomial divided by a scalar: num/den with num an MPoly and den a
/// nonzero RLaurent. The monic interpolation families E and P have
/// coefficients in Q(r) that are not Laurent polynomials, so the recursions
/// carry the accumulated scalar denominator through and divide exactly only
/// where the result is known to be Laurent (the F and J normalizations).
///
/// Canonical form after reduce(): den has min exponent 0, integer coprime
/// coefficients, positive leading coefficient, and shares no nonunit factor
/// with the content of num.
class ScaledPoly {
 public:
  ScaledPoly(MPoly num, RLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InternalInvariantError("ScaledPoly: zero denominator");
    reduce();
  }
  explicit ScaledPoly(MPoly num) : ScaledPoly(std::move(num), RLaurent(1)) {}

  const MPoly& num() const { return num_; }
  const RLaurent& den() const { return den_; }
  int n() const { return num_.n(); }
  bool is_plain() const { return den_.is_one(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Coefficient of x^exp as a scalar fraction (numerator part only; pair it
  /// with den()).
  RLaurent coeff_num(const std::vector<int>& exp) const { return num_.coeff(exp); }

  ScaledPoly operator+(const ScaledPoly& o) const {
    return ScaledPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  ScaledPoly operator-(const ScaledPoly& o) const {
    return ScaledPoly(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  ScaledPoly scale(const RLaurent& s) const { return ScaledPoly(num_ * s, den_); }
  ScaledPoly divide_scalar(const RLaurent& s) const {
    if (s.is_zero()) throw InternalInvariantError("ScaledPoly: divide by zero scalar");
    return ScaledPoly(num_, den_ * s);
  }

  friend bool operator==(const ScaledPoly& a, const ScaledPoly& b) {
    // canonical after reduce(): cross-multiplied equality is map equality
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const ScaledPoly& a, const ScaledPoly& b) { return !(a == b); }

  /// The value as a plain MPoly; every coefficient must be exactly divisible
  /// by den.
  MPoly to_mpoly_exact() const {
    MPoly out(num_.n());
    for (const auto& [e, c] : num_.terms()) out.add_term(e, c.divide_exact(den_));
    return out;
  }

  std::string to_string() const {
    if (is_plain()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }
  std::string to_latex() const {
    if (is_plain()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = RLaurent(1);
      return;
    }
    // common polynomial factor of den and every num coefficient, up to units
    RLaurent g = den_;
    for (const auto& [e, c] : num_.terms()) {
      g = rlaurent_gcd(g, c);
      if (g.is_one()) break;
    }
    if (!g.is_one()) {
      MPoly nn(num_.n());
      for (const auto& [e, c] : num_.terms()) nn.add_term(e, c.divide_exact(g));
      num_ = std::move(nn);
      den_ = den_.divide_exact(g);
    }
    // normalize den: min exponent 0, integer coprime coefficients, positive lead
    int shift = -den_.min_exp();
    if (shift != 0) {
      den_ = den_.shifted(shift);
      num_ = num_ * RLaurent::r(shift);
    }
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& [e, c] : den_.terms()) {
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    }
    RLaurent scaled = den_ * RLaurent(Rational(lcm_den));
    for (const auto& [e, c] : scaled.terms())
      gcd_num = boost::multiprecision::gcd(gcd_num, numerator(c));
    Rational unit(lcm_den, gcd_num == 0 ? BigInt(1) : gcd_num);
    if (scaled.coeff(scaled.max_exp()) < 0) unit = -unit;
    den_ *= RLaurent(unit);
    num_ = num_ * RLaurent(unit);
  }

  MPoly num_;
  RLaurent den_;
};

}  // namespace barpoly
