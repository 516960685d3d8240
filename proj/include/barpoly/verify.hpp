#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "barpoly/composition.hpp"
#include "barpoly/games.hpp"
#include "barpoly/interp.hpp"
#include "barpoly/mpoly.hpp"
#include "barpoly/operators.hpp"
#include "barpoly/shapes.hpp"

namespace barpoly {

struct AuditFailure {
  std::string index;    // the offending composition(s)
  std::string witness;  // enough to reproduce the failing check in isolation
};

/// Outcome of one finite-range verification suite. Failures empty iff the
/// suite passed; reports are deterministic apart from the elapsed time.
struct AuditReport {
  std::string suite;
  int max_norm = 0;
  int n = 0;
  std::size_t checked = 0;
  std::vector<AuditFailure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }

  std::string to_text() const {
    std::ostringstream os;
    os << "suite=" << suite << " range=(max_norm=" << max_norm << ",n=" << n << ")"
       << " checked=" << checked << " failures=" << failures.size() << " result="
       << (passed() ? "pass" : "FAIL") << "\n";
    for (const auto& f : failures) os << "  failure index=" << f.index << " witness=" << f.witness << "\n";
    os << "elapsed_ms=" << elapsed_ms << "\n";
    return os.str();
  }
};

namespace detail {

class AuditTimer {
 public:
  explicit AuditTimer(AuditReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~AuditTimer() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  AuditReport& report_;
  std::chrono::steady_clock::time_point start_;
};

/// c is a polynomial in N[r] of degree <= bound (exponent window [0, bound],
/// nonnegative integer coefficients).
inline bool in_N_of_r(const RLaurent& c, int bound) {
  if (c.is_zero()) return true;
  return c.min_exp() >= 0 && c.max_exp() <= bound && c.all_coeffs_integer() && c.all_coeffs_nonneg();
}

/// Positivity in alpha = 1/r with the degree window of the inhomogeneous
/// expansions: c * r^{-bound} must lie in N[1/r], i.e. c has exponent window
/// (-inf, bound] and nonnegative integer coefficients.
inline bool in_N_of_alpha_window(const RLaurent& c, int bound) {
  if (c.is_zero()) return true;
  return c.max_exp() <= bound && c.all_coeffs_integer() && c.all_coeffs_nonneg();
}

}  // namespace detail

/// Theorem-C audit: every monomial coefficient c_{eta,gamma}(r) of a bar
/// monomial lies in N[r] with degree <= |eta| - |gamma|.
inline AuditReport audit_theorem_C(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "theoremC";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  BarmonCache cache;
  for (const auto& eta : compositions_up_to(n, max_norm)) {
    const MPoly& bm = barmon_transition(eta, cache);
    for (const auto& [e, c] : bm.terms()) {
      ++rep.checked;
      int gap = eta.norm() - std::accumulate(e.begin(), e.end(), 0);
      if (!detail::in_N_of_r(c, gap)) {
        rep.failures.push_back({"eta=" + eta.to_string() + ";gamma=" + Composition(e).to_string(),
                                "coefficient " + c.to_string() + " outside N[r] degree<=" +
                                    std::to_string(gap)});
      }
    }
  }
  return rep;
}

/// Vanishing audit: x-underline(eta) has top term x^eta plus lower degree,
/// and vanishes at -gammabar for every |gamma| < |eta|.
inline AuditReport audit_vanishing(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "vanishing";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  BarmonCache cache;
  auto all = compositions_up_to(n, max_norm);
  for (const auto& eta : all) {
    const MPoly& bm = barmon_transition(eta, cache);
    ++rep.checked;
    MPoly low = bm - MPoly::monomial(n, eta.parts());
    if (!bm.coeff(eta.parts()).is_one() || low.total_degree() >= eta.norm()) {
      rep.failures.push_back({"eta=" + eta.to_string(), "top term is not monic x^eta plus lower degree"});
      continue;
    }
    for (const auto& gamma : all) {
      if (gamma.norm() >= eta.norm()) continue;
      ++rep.checked;
      RLaurent v = eval_at_neg_bar(bm, gamma);
      if (!v.is_zero()) {
        rep.failures.push_back({"eta=" + eta.to_string() + ";gamma=" + gamma.to_string(),
                                "value " + v.to_string() + " at -gammabar"});
      }
    }
  }
  return rep;
}

/// Cross-method audit: the game sum, the transition recursion, and the
/// operator recursion produce identical bar monomials. Game enumeration is
/// skipped (pairwise) past the guard.
inline AuditReport audit_cross_methods(int max_norm, int n,
                                       std::size_t guard = kDefaultGameGuard) {
  AuditReport rep;
  rep.suite = "cross";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  BarmonCache cache;
  for (const auto& eta : compositions_up_to(n, max_norm)) {
    ++rep.checked;
    const MPoly& trans = barmon_transition(eta, cache);
    MPoly rec = barmon_recursion(eta);
    if (rec != trans) {
      rep.failures.push_back({"eta=" + eta.to_string(), "transition != operator recursion"});
      continue;
    }
    try {
      MPoly games = barmon_games(eta, guard);
      if (games != trans)
        rep.failures.push_back({"eta=" + eta.to_string(), "game sum != transition"});
    } catch (const GuardExceeded&) {
      // infeasible subset: compared transition vs recursion only
    }
  }
  return rep;
}

/// The A/B/C recursion audit. With A_eta the sum of bar monomials over
/// P[eta], B_eta = w_eta * x-underline(eta*), C = B + rA:
///   sigma+_i(A) - A' and sigma+_i(B) - B' vanish for eta_i > eta_{i+1}
///   except exactly when i = k[eta] and eta_i - 1 > eta_{i+1}, where the
///   differences are +x-underline(eta*) and -r x-underline(eta*) and cancel
///   in C; C and both summands are Phi+ equivariant, and sigma+_i(C) = C'
///   whenever eta_i != eta_{i+1}.
inline AuditReport audit_lemma_exceptions(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "lemmas";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  BarmonCache cache;
  auto A = [&](const Composition& eta) {
    MPoly sum(n);
    for (const auto& gamma : covers_P(eta)) sum += barmon_transition(gamma, cache);
    return sum;
  };
  auto B = [&](const Composition& eta) {
    return shape_weight(eta) * barmon_transition(eta_star(eta), cache);
  };
  const RLaurent r = RLaurent::r();
  for (const auto& eta : compositions_up_to(n, max_norm)) {
    if (eta.is_zero()) continue;
    MPoly a = A(eta), b = B(eta);
    MPoly c = b + a * r;

    // Phi+ equivariance
    ++rep.checked;
    Composition phi_eta = eta.phi();
    if (phi_plus(a) != A(phi_eta) || phi_plus(b) != B(phi_eta))
      rep.failures.push_back({"eta=" + eta.to_string(), "Phi+ equivariance fails for A or B"});

    CriticalBox cb = critical_box(eta);
    for (int i = 1; i < n; ++i) {
      if (eta[i] == eta[i + 1]) continue;
      Composition seta = eta.s(i);
      ++rep.checked;
      if (sigma_plus(c, i) != B(seta) + A(seta) * r) {
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "sigma+ C recursion fails"});
        continue;
      }
      if (eta[i] < eta[i + 1]) continue;
      MPoly delta_a = sigma_plus(a, i) - A(seta);
      MPoly delta_b = sigma_plus(b, i) - B(seta);
      bool exceptional = (i == cb.k) && (eta[i] - 1 > eta[i + 1]);
      MPoly star = barmon_transition(eta_star(eta), cache);
      bool ok = exceptional ? (delta_a == star && delta_b == -(star * r))
                            : (delta_a.is_zero() && delta_b.is_zero());
      if (!ok) {
        rep.failures.push_back({"eta=" + eta.to_string() + ";i=" + std::to_string(i),
                                std::string("A/B exception pattern wrong (expected ") +
                                    (exceptional ? "exceptional" : "plain") + ")"});
      }
    }
  }
  return rep;
}

/// Theorem-A audit: the m_mu coefficients of J^{r delta}_lambda, rescaled by
/// r^{|mu|-|lambda|}, lie in N[alpha].
inline AuditReport audit_theorem_A(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "theoremA";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  JackFamilies fam(n);
  for (const auto& lambda : compositions_up_to(n, max_norm)) {
    if (!lambda.is_partition()) continue;
    MPoly j = fam.J_rdelta(lambda);
    for (int i = 1; i < n; ++i) {
      ++rep.checked;
      if (apply_si(j, i) != j)
        rep.failures.push_back({"lambda=" + lambda.to_string() + ";i=" + std::to_string(i),
                                "symmetric entry is not s_i-invariant"});
    }
    for (const auto& [mu, c] : expansion_coeffs(j, Basis::SymmetricMonomials, fam.barmons())) {
      ++rep.checked;
      int gap = lambda.norm() - mu.norm();
      if (!detail::in_N_of_alpha_window(c, gap)) {
        rep.failures.push_back({"lambda=" + lambda.to_string() + ";mu=" + mu.to_string(),
                                "coefficient " + c.to_string() + " not alpha-positive in window " +
                                    std::to_string(gap)});
      }
    }
  }
  return rep;
}

/// Theorem-B audit: the monomial coefficients of F^{r delta}_eta are
/// alpha-positive in the same window, and F^{r delta} agrees with the
/// dehomogenized F^(alpha) (the bar-monomial reconstruction).
inline AuditReport audit_theorem_B(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "theoremB";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  JackFamilies fam(n);
  for (const auto& eta : compositions_up_to(n, max_norm)) {
    MPoly f = fam.F_rdelta(eta);
    ++rep.checked;
    if (fam.xi(fam.F_alpha(eta)) != f)
      rep.failures.push_back({"eta=" + eta.to_string(), "F_rdelta != Xi(F_alpha)"});
    for (const auto& [e, c] : f.terms()) {
      ++rep.checked;
      int gap = eta.norm() - std::accumulate(e.begin(), e.end(), 0);
      if (!detail::in_N_of_alpha_window(c, gap)) {
        rep.failures.push_back({"eta=" + eta.to_string() + ";gamma=" + Composition(e).to_string(),
                                "coefficient " + c.to_string() + " not alpha-positive in window " +
                                    std::to_string(gap)});
      }
    }
  }
  return rep;
}

/// Uniqueness certificates for the interpolation polynomials: E^{r delta}_eta
/// is monic in x^eta of degree |eta| and vanishes at gammabar for every
/// |gamma| <= |eta|, gamma != eta; its top part is E^(alpha)_eta.
inline AuditReport audit_certificates(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "certificates";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  JackFamilies fam(n);
  auto all = compositions_up_to(n, max_norm);
  for (const auto& eta : all) {
    const ScaledPoly& e = fam.E_rdelta(eta);
    ++rep.checked;
    if (e.num().coeff(eta.parts()) != e.den() || e.num().total_degree() != eta.norm()) {
      rep.failures.push_back({"eta=" + eta.to_string(), "not monic of degree |eta| in x^eta"});
      continue;
    }
    ScaledPoly top = e - fam.E_alpha(eta);
    if (top.num().total_degree() >= eta.norm())
      rep.failures.push_back({"eta=" + eta.to_string(), "top degree part is not E_alpha"});
    for (const auto& gamma : all) {
      if (gamma.norm() > eta.norm() || gamma == eta) continue;
      ++rep.checked;
      RLaurent v = e.num().eval(rho_point(gamma));
      if (!v.is_zero()) {
        rep.failures.push_back({"eta=" + eta.to_string() + ";gamma=" + gamma.to_string(),
                                "nonzero value " + v.to_string() + " at gammabar"});
      }
    }
  }
  // symmetric counterpart: P^{r delta} is symmetric, monic in m_lambda, and
  // vanishes at the negated shifted partitions below and beside it
  for (const auto& lambda : all) {
    if (!lambda.is_partition()) continue;
    ScaledPoly p = fam.P_rdelta(lambda);
    ++rep.checked;
    bool sym = true;
    for (int i = 1; i < n; ++i)
      if (apply_si(p.num(), i) != p.num()) sym = false;
    if (!sym || p.num().coeff(lambda.parts()) != p.den()) {
      rep.failures.push_back(
          {"lambda=" + lambda.to_string(), "not symmetric and monic in the leading orbit sum"});
      continue;
    }
    for (const auto& mu : all) {
      if (!mu.is_partition() || mu.norm() > lambda.norm() || mu == lambda) continue;
      ++rep.checked;
      RLaurent v = p.num().eval(negated_point(rho_point(mu)));
      if (!v.is_zero()) {
        rep.failures.push_back({"lambda=" + lambda.to_string() + ";mu=" + mu.to_string(),
                                "nonzero value " + v.to_string() + " at the negated shifted point"});
      }
    }
  }
  return rep;
}

/// Structural audit: critical-box, leg, and P[eta] equivariance under s_i
/// and Phi with exactly the tabulated exceptions, deletion equivariance,
/// involutivity of sigma+/sigma-, intertwining of Xi on monomials, and
/// injectivity of the rho-shifted points.
inline AuditReport audit_structural(int max_norm, int n) {
  AuditReport rep;
  rep.suite = "structural";
  rep.max_norm = max_norm;
  rep.n = n;
  detail::AuditTimer timer(rep);
  BarmonCache cache;
  auto oracle = barmon_oracle(cache);
  auto all = compositions_up_to(n, max_norm);

  std::map<std::vector<RLaurent>, Composition> seen_points;
  for (const auto& eta : all) {
    auto pt = rho_point(eta);
    auto [it, fresh] = seen_points.emplace(pt, eta);
    ++rep.checked;
    if (!fresh)
      rep.failures.push_back({"eta=" + eta.to_string() + ";other=" + it->second.to_string(),
                              "rho-shifted points collide"});
  }

  auto apply_s_set = [&](const std::set<Composition>& s, int i) {
    std::set<Composition> out;
    for (const auto& g : s) out.insert(g.s(i));
    return out;
  };
  auto apply_phi_set = [&](const std::set<Composition>& s) {
    std::set<Composition> out;
    for (const auto& g : s) out.insert(g.phi());
    return out;
  };

  for (const auto& eta : all) {
    // intertwining on monomials: Xi(Phi x^eta) = Phi+ Xi(x^eta),
    //                            Xi(s_i x^eta) = sigma+_i Xi(x^eta)
    MPoly mono = MPoly::monomial(n, eta.parts());
    MPoly bm = dehomogenize_xi(mono, oracle);
    ++rep.checked;
    if (dehomogenize_xi(phi(mono), oracle) != phi_plus(bm))
      rep.failures.push_back({"eta=" + eta.to_string(), "Xi Phi != Phi+ Xi on x^eta"});
    for (int i = 1; i < n; ++i) {
      ++rep.checked;
      if (dehomogenize_xi(apply_si(mono, i), oracle) != sigma_plus(bm, i))
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "Xi s_i != sigma+_i Xi on x^eta"});
      ++rep.checked;
      if (sigma_plus(sigma_plus(bm, i), i) != bm || sigma_minus(sigma_minus(bm, i), i) != bm)
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "sigma involutivity fails"});
    }

    if (eta.is_zero()) continue;
    CriticalBox cb = critical_box(eta);
    Composition phi_eta = eta.phi();
    CriticalBox cb_phi = critical_box(phi_eta);

    ++rep.checked;
    bool phi_box_ok = (cb.k > 1) ? (cb_phi.k == cb.k - 1 && cb_phi.m == cb.m)
                                 : (cb_phi.k == n && cb_phi.m == cb.m + 1);
    if (!phi_box_ok || cb_phi.l != cb.l)
      rep.failures.push_back({"eta=" + eta.to_string(), "critical box/leg of Phi eta mismatch"});

    ++rep.checked;
    if (eta_star(phi_eta) != eta_star(eta).phi())
      rep.failures.push_back({"eta=" + eta.to_string(), "(Phi eta)* != Phi(eta*)"});

    ++rep.checked;
    if (covers_P(phi_eta) != apply_phi_set(covers_P(eta)))
      rep.failures.push_back({"eta=" + eta.to_string(), "P[Phi eta] != Phi(P[eta])"});

    for (int i = 1; i < n; ++i) {
      Composition seta = eta.s(i);
      if (seta == eta) continue;
      CriticalBox cb_s = critical_box(seta);
      int expect_k = (cb.k == i) ? i + 1 : (cb.k == i + 1 ? i : cb.k);
      ++rep.checked;
      if (cb_s.k != expect_k || cb_s.m != cb.m)
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "critical box of s_i eta mismatch"});

      int expect_l = cb.l;
      if (cb.k == i && eta[i + 1] == eta[i] - 1) expect_l = cb.l + 1;
      if (cb.k == i + 1 && eta[i] == eta[i + 1] - 1) expect_l = cb.l - 1;
      ++rep.checked;
      if (cb_s.l != expect_l)
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "critical leg of s_i eta mismatch"});

      ++rep.checked;
      if (eta_star(seta) != eta_star(eta).s(i))
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "(s_i eta)* != s_i(eta*)"});

      std::set<Composition> expect = apply_s_set(covers_P(eta), i);
      bool genuine = true;
      if (i == cb.k - 1 && eta[i + 1] - eta[i] > 1) {
        genuine = expect.insert(eta_star(eta)).second;
      } else if (i == cb.k && eta[i + 1] - eta[i] < -1) {
        genuine = expect.erase(eta_star(eta)) == 1;
      }
      ++rep.checked;
      if (covers_P(seta) != expect || !genuine)
        rep.failures.push_back(
            {"eta=" + eta.to_string() + ";i=" + std::to_string(i), "P[s_i eta] exception table mismatch"});
    }
  }
  return rep;
}

/// Each game's weight evaluated at a point; their sum must reproduce the bar
/// monomial's value there.
inline std::vector<std::pair<std::size_t, RLaurent>> per_game_contributions(
    const Composition& eta, const std::vector<RLaurent>& point,
    std::size_t guard = kDefaultGameGuard) {
  std::vector<std::pair<std::size_t, RLaurent>> out;
  RLaurent sum;
  std::size_t id = 0;
  for_each_game(
      eta,
      [&](const BarGame& g) {
        RLaurent v = game_weight(g, eta.length()).eval(point);
        sum += v;
        out.emplace_back(id++, v);
        return true;
      },
      guard);
  RLaurent direct = barmon(eta).eval(point);
  if (sum != direct)
    throw InternalInvariantError("per_game_contributions: game sum disagrees with bar monomial");
  return out;
}

}  // namespace barpoly
