#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "barpoly/composition.hpp"
#include "barpoly/games.hpp"
#include "barpoly/mpoly.hpp"
#include "barpoly/operators.hpp"
#include "barpoly/scaled_poly.hpp"
#include "barpoly/shapes.hpp"

namespace barpoly {

/// A scalar fraction num/den of Laurent polynomials in r.
struct RFrac {
  RLaurent num;
  RLaurent den;
};

/// The recursion scalars c_i^eta = r / (etabar_{i+1} - etabar_i) and
/// d_i^eta = 1 (ascent) or 1 - (c_i^eta)^2. The denominator of c is an
/// honest Laurent polynomial, so both are carried as fractions.
struct HeckeScalars {
  RFrac c;
  RFrac d;
};

/// etabar_{i+1} - etabar_i as a Laurent polynomial (integer + integer * r).
inline RLaurent rho_gap(const Composition& eta, int i) {
  auto bar = rho_point(eta);
  return bar[i] - bar[i - 1];
}

inline HeckeScalars hecke_scalars(const Composition& eta, int i) {
  if (i < 1 || i >= eta.length()) throw std::invalid_argument("hecke_scalars: index out of range");
  RLaurent gap = rho_gap(eta, i);
  HeckeScalars out;
  out.c = RFrac{RLaurent::r(), gap};
  if (eta[i] < eta[i + 1]) {
    out.d = RFrac{RLaurent(1), RLaurent(1)};
  } else {
    out.d = RFrac{gap * gap - RLaurent::r(2), gap * gap};
  }
  return out;
}

enum class Family { E_alpha, E_rdelta, F_alpha, F_rdelta, P_alpha, J_alpha, P_rdelta, J_rdelta };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::E_alpha: return "E_alpha";
    case Family::E_rdelta: return "E_rdelta";
    case Family::F_alpha: return "F_alpha";
    case Family::F_rdelta: return "F_rdelta";
    case Family::P_alpha: return "P_alpha";
    case Family::J_alpha: return "J_alpha";
    case Family::P_rdelta: return "P_rdelta";
    case Family::J_rdelta: return "J_rdelta";
  }
  return "?";
}

struct PolyFamilyEntry {
  Family family;
  Composition index;
  ScaledPoly value;
};

/// Memoized generator for all eight polynomial families in a fixed ambient
/// dimension. The monic E and P entries carry scalar denominators; the F and
/// J normalizations are Laurent and reduce to plain polynomials with the
/// division checked exactly.
class JackFamilies {
 public:
  explicit JackFamilies(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("JackFamilies: n must be >= 1");
  }

  int n() const { return n_; }
  BarmonCache& barmons() { return barmons_; }
  MPoly barmon(const Composition& eta) { return barmon_transition(eta, barmons_); }
  MPoly xi(const MPoly& f) { return dehomogenize_xi(f, barmon_oracle(barmons_)); }

  /// Homogeneous nonsymmetric Jack polynomial, monic in x^eta.
  const ScaledPoly& E_alpha(const Composition& eta) { return e_entry(eta, false); }

  /// Nonsymmetric interpolation polynomial: monic in x^eta, vanishing at
  /// gammabar for every |gamma| <= |eta|, gamma != eta.
  const ScaledPoly& E_rdelta(const Composition& eta) { return e_entry(eta, true); }

  /// F^(alpha) = d_eta E^(alpha); coefficients are Laurent in r.
  MPoly F_alpha(const Composition& eta) {
    check_len(eta);
    const ScaledPoly& e = E_alpha(eta);
    return ScaledPoly(e.num() * d_eta(eta), e.den()).to_mpoly_exact();
  }

  /// F^{r delta} = (-1)^|eta| d_eta E^{r delta}(-x).
  MPoly F_rdelta(const Composition& eta) {
    check_len(eta);
    const ScaledPoly& e = E_rdelta(eta);
    RLaurent scale = d_eta(eta);
    if (eta.norm() % 2 == 1) scale = -scale;
    return ScaledPoly(sign_flip(e.num()) * scale, e.den()).to_mpoly_exact();
  }

  /// Symmetric Jack polynomial with m_lambda coefficient 1, built by
  /// symmetrizing E^(alpha)_lambda over S_n and rescaling.
  const ScaledPoly& P_alpha(const Composition& lambda) {
    require_partition(lambda, "P_alpha");
    check_len(lambda);
    auto it = p_alpha_.find(lambda);
    if (it != p_alpha_.end()) return it->second;
    const ScaledPoly& e = E_alpha(lambda);
    MPoly sym(n_);
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = i;
    do {
      sym += e.num().permute_vars(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    RLaurent top = sym.coeff(lambda.parts());
    if (top.is_zero())
      throw InternalInvariantError("P_alpha: zero m_lambda coefficient after symmetrization");
    return p_alpha_.emplace(lambda, ScaledPoly(std::move(sym), top)).first->second;
  }

  MPoly J_alpha(const Composition& lambda) {
    const ScaledPoly& p = P_alpha(lambda);
    return ScaledPoly(p.num() * c_lambda(lambda), p.den()).to_mpoly_exact();
  }

  MPoly J_rdelta(const Composition& lambda) { return xi(J_alpha(lambda)); }

  ScaledPoly P_rdelta(const Composition& lambda) {
    const ScaledPoly& p = P_alpha(lambda);
    return ScaledPoly(xi(p.num()), p.den());
  }

  PolyFamilyEntry entry(Family family, const Composition& index) {
    switch (family) {
      case Family::E_alpha: return {family, index, E_alpha(index)};
      case Family::E_rdelta: return {family, index, E_rdelta(index)};
      case Family::F_alpha: return {family, index, ScaledPoly(F_alpha(index))};
      case Family::F_rdelta: return {family, index, ScaledPoly(F_rdelta(index))};
      case Family::P_alpha: return {family, index, P_alpha(index)};
      case Family::J_alpha: return {family, index, ScaledPoly(J_alpha(index))};
      case Family::P_rdelta: return {family, index, P_rdelta(index)};
      case Family::J_rdelta: return {family, index, ScaledPoly(J_rdelta(index))};
    }
    throw std::logic_error("entry: unknown family");
  }

 private:
  void check_len(const Composition& eta) const {
    if (eta.length() != n_) throw std::invalid_argument("JackFamilies: index length != n");
  }

  const ScaledPoly& e_entry(const Composition& eta, bool interp) {
    check_len(eta);
    auto& cache = interp ? e_rdelta_ : e_alpha_;
    auto it = cache.find(eta);
    if (it != cache.end()) return it->second;
    ScaledPoly value = compute_e(eta, interp);
    return cache.emplace(eta, std::move(value)).first->second;
  }

  // One step of the generating recursion: peel with the affine intertwiner
  // when the last nonzero index is n, else shift it right with the
  // divided-difference intertwiner. On that path the divisor d_i is
  // always 1, so only the scalar c = r/gap enters; multiplying through by
  // the gap keeps every coefficient Laurent.
  ScaledPoly compute_e(const Composition& eta, bool interp) {
    if (eta.is_zero()) return ScaledPoly(MPoly::one(n_));
    int i = eta.last_nonzero();
    if (i == n_) {
      std::vector<int> parts(n_);
      parts[0] = eta[n_] - 1;
      for (int j = 1; j < n_; ++j) parts[j] = eta[j];
      const ScaledPoly& prev = e_entry(Composition(std::move(parts)), interp);
      return ScaledPoly(interp ? phi_minus(prev.num()) : phi(prev.num()), prev.den());
    }
    Composition zeta = eta.s(i);
    if (!(zeta[i] < zeta[i + 1]))
      throw InternalInvariantError("compute_e: expected an ascent at the recursion step");
    const ScaledPoly& prev = e_entry(zeta, interp);
    RLaurent gap = rho_gap(zeta, i);  // c_i^zeta = r / gap, d_i^zeta = 1
    MPoly moved = interp ? sigma_minus(prev.num(), i) : apply_si(prev.num(), i);
    MPoly num = moved * gap + prev.num() * RLaurent::r();
    return ScaledPoly(std::move(num), prev.den() * gap);
  }

  int n_;
  BarmonCache barmons_;
  std::unordered_map<Composition, ScaledPoly, CompositionHash> e_alpha_;
  std::unordered_map<Composition, ScaledPoly, CompositionHash> e_rdelta_;
  std::unordered_map<Composition, ScaledPoly, CompositionHash> p_alpha_;
};

/// m_lambda as a polynomial: the sum of x^eta over rearrangements.
inline MPoly monomial_sym(const Composition& lambda) {
  MPoly out(lambda.length());
  for (const auto& eta : rearrangements(lambda)) out.add_term(eta.parts(), RLaurent(1));
  return out;
}

enum class Basis { Monomials, BarMonomials, SymmetricMonomials, SymmetricBar };

/// Exact coefficients of f against the chosen basis. The bar bases are
/// unitriangular against monomials by degree, so repeated subtraction of the
/// leading basis element terminates; the symmetric bases additionally read
/// the (always dominant) leading exponent as a partition.
inline std::map<Composition, RLaurent> expansion_coeffs(const MPoly& f, Basis basis,
                                                        BarmonCache& cache) {
  std::map<Composition, RLaurent> out;
  if (basis == Basis::Monomials) {
    for (const auto& [e, c] : f.terms()) out.emplace(Composition(e), c);
    return out;
  }
  MPoly rest = f;
  long rounds = 0;
  // every round retires one exponent vector of norm <= deg(f) for good
  long limit = 1;
  for (int t = 1; t <= f.n(); ++t)
    limit = limit * (std::max(f.total_degree(), 0) + t) / t;
  while (!rest.is_zero()) {
    if (++rounds > limit)
      throw InternalInvariantError("expansion_coeffs: reduction does not terminate");
    const auto& [lead, c] = *rest.terms().begin();
    Composition idx{lead};
    MPoly element(rest.n());
    switch (basis) {
      case Basis::BarMonomials:
        element = barmon_transition(idx, cache);
        break;
      case Basis::SymmetricMonomials:
        require_partition(idx, "expansion_coeffs: leading exponent");
        element = monomial_sym(idx);
        break;
      case Basis::SymmetricBar:
        require_partition(idx, "expansion_coeffs: leading exponent");
        element = sym_barmon(idx, cache);
        break;
      default:
        throw std::logic_error("expansion_coeffs: unknown basis");
    }
    out[idx] += c;
    rest -= element * c;
  }
  // drop exact cancellations
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

/// Evaluate at the negated rho-shifted point of gamma.
inline RLaurent eval_at_neg_bar(const MPoly& f, const Composition& gamma) {
  return f.eval(negated_point(rho_point(gamma)));
}

/// The Jack-type binomial value (-r)^|lambda| J^{r delta}_lambda(-mu - r delta).
inline RLaurent binomial_value(JackFamilies& fam, const Composition& lambda,
                               const Composition& mu) {
  require_partition(lambda, "binomial_value");
  require_partition(mu, "binomial_value");
  RLaurent raw = eval_at_neg_bar(fam.J_rdelta(lambda), mu);
  RLaurent scale = RLaurent::term(lambda.norm() % 2 == 0 ? 1 : -1, lambda.norm());
  return raw * scale;
}

}  // namespace barpoly
