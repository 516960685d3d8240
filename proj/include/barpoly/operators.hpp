#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "barpoly/composition.hpp"
#include "barpoly/mpoly.hpp"

namespace barpoly {

/// Interchange x_i and x_{i+1} (1-based, i < n).
inline MPoly apply_si(const MPoly& f, int i) {
  if (i < 1 || i >= f.n()) throw std::invalid_argument("apply_si: index out of range");
  MPoly out(f.n());
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> ne = e;
    std::swap(ne[i - 1], ne[i]);
    out.add_term(std::move(ne), c);
  }
  return out;
}

/// Divided difference (s_i(f) - f) / (x_i - x_{i+1}). Note the sign this
/// convention carries on linear input: div_diff(x_i, i) = -1 and
/// div_diff(x_{i+1}, i) = +1.
inline MPoly div_diff(const MPoly& f, int i) {
  return (apply_si(f, i) - f).divide_exact_by_linear(i);
}

/// sigma_i^+ = s_i + r * d_i.
inline MPoly sigma_plus(const MPoly& f, int i) {
  return apply_si(f, i) + RLaurent::r() * div_diff(f, i);
}

/// sigma_i^- = s_i - r * d_i.
inline MPoly sigma_minus(const MPoly& f, int i) {
  return apply_si(f, i) - RLaurent::r() * div_diff(f, i);
}

namespace detail {

// g(x) = f(x_n + shift, x_1, ..., x_{n-1}), optionally times x_n.
inline MPoly cycle_substitute(const MPoly& f, int shift, bool times_xn) {
  const int n = f.n();
  if (n == 0) throw std::invalid_argument("cycle_substitute: empty dimension");
  MPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> base(n, 0);
    for (int j = 2; j <= n; ++j) base[j - 2] = e[j - 1];
    const int a = e[0];
    if (shift == 0) {
      base[n - 1] = a + (times_xn ? 1 : 0);
      out.add_term(std::move(base), c);
      continue;
    }
    // (x_n + shift)^a expanded binomially
    Rational binom(1);
    for (int t = a; t >= 0; --t) {
      // binom = C(a, t) * shift^(a-t), updated incrementally from t = a down
      std::vector<int> ne = base;
      ne[n - 1] = t + (times_xn ? 1 : 0);
      out.add_term(std::move(ne), c * RLaurent(binom));
      if (t > 0) binom = binom * t / (a - t + 1) * shift;
    }
  }
  return out;
}

}  // namespace detail

/// Phi f(x) = x_n f(x_n, x_1, ..., x_{n-1}); sends x^eta to x^{Phi eta}.
inline MPoly phi(const MPoly& f) { return detail::cycle_substitute(f, 0, true); }

/// Phi^+ f(x) = x_n f(x_n + 1, x_1, ..., x_{n-1}).
inline MPoly phi_plus(const MPoly& f) { return detail::cycle_substitute(f, +1, true); }

/// Phi^- f(x) = x_n f(x_n - 1, x_1, ..., x_{n-1}).
inline MPoly phi_minus(const MPoly& f) { return detail::cycle_substitute(f, -1, true); }

/// omega~ f(x) = f(x_n + 1, x_1, ..., x_{n-1}), the multiplicative part of
/// Phi^+.
inline MPoly omega_tilde(const MPoly& f) { return detail::cycle_substitute(f, +1, false); }

/// Substitute x_i -> x_i + c simultaneously in every variable.
inline MPoly shift_all(const MPoly& f, const RLaurent& c) {
  const int n = f.n();
  MPoly out(n);
  for (const auto& [e, coeff] : f.terms()) {
    MPoly term = MPoly::constant(n, coeff);
    for (int i = 1; i <= n; ++i) {
      if (e[i - 1] == 0) continue;
      MPoly base = MPoly::var(n, i) + MPoly::constant(n, c);
      for (int t = 0; t < e[i - 1]; ++t) term *= base;
    }
    out += term;
  }
  return out;
}

/// S f(x) = f(-x).
inline MPoly sign_flip(const MPoly& f) {
  MPoly out(f.n());
  for (const auto& [e, c] : f.terms()) {
    int deg = 0;
    for (int v : e) deg += v;
    out.add_term(e, (deg % 2 == 0) ? c : -c);
  }
  return out;
}

/// Supplier of bar monomials x-underline(eta); the games module provides the
/// canonical memoized one.
using BarMonomialOracle = std::function<MPoly(const Composition&)>;

/// The dehomogenization operator, extended linearly from monomials:
/// coefficient * x^eta maps to coefficient * x-underline(eta).
inline MPoly dehomogenize_xi(const MPoly& f, const BarMonomialOracle& barmon) {
  MPoly out(f.n());
  for (const auto& [e, c] : f.terms()) out += barmon(Composition(e)) * c;
  return out;
}

/// Psi = S Xi S.
inline MPoly psi(const MPoly& f, const BarMonomialOracle& barmon) {
  return sign_flip(dehomogenize_xi(sign_flip(f), barmon));
}

/// First-class operator values, so recursion paths can be logged and
/// replayed.
struct OperatorTag {
  enum class Kind {
    Si,
    DivDiff,
    SigmaPlus,
    SigmaMinus,
    Phi,
    PhiPlus,
    PhiMinus,
    OmegaTilde,
    SignFlip,
    Xi
  };
  Kind kind;
  int i = 0;  // 1 <= i <= n-1 for the indexed kinds

  std::string name() const {
    switch (kind) {
      case Kind::Si: return "s_" + std::to_string(i);
      case Kind::DivDiff: return "d_" + std::to_string(i);
      case Kind::SigmaPlus: return "sigma+_" + std::to_string(i);
      case Kind::SigmaMinus: return "sigma-_" + std::to_string(i);
      case Kind::Phi: return "Phi";
      case Kind::PhiPlus: return "Phi+";
      case Kind::PhiMinus: return "Phi-";
      case Kind::OmegaTilde: return "omega~";
      case Kind::SignFlip: return "S";
      case Kind::Xi: return "Xi";
    }
    return "?";
  }
};

inline MPoly apply_operator(const OperatorTag& tag, const MPoly& f,
                            const BarMonomialOracle& barmon = nullptr) {
  using K = OperatorTag::Kind;
  switch (tag.kind) {
    case K::Si: return apply_si(f, tag.i);
    case K::DivDiff: return div_diff(f, tag.i);
    case K::SigmaPlus: return sigma_plus(f, tag.i);
    case K::SigmaMinus: return sigma_minus(f, tag.i);
    case K::Phi: return phi(f);
    case K::PhiPlus: return phi_plus(f);
    case K::PhiMinus: return phi_minus(f);
    case K::OmegaTilde: return omega_tilde(f);
    case K::SignFlip: return sign_flip(f);
    case K::Xi:
      if (!barmon) throw std::invalid_argument("apply_operator: Xi needs a bar-monomial oracle");
      return dehomogenize_xi(f, barmon);
  }
  throw std::logic_error("apply_operator: unknown tag");
}

}  // namespace barpoly
