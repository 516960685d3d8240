#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "barpoly/composition.hpp"
#include "barpoly/rlaurent.hpp"

namespace barpoly {

/// The last box of the highest row of maximal length: row k (least index
/// attaining the maximal part m), together with the critical leg l.
struct CriticalBox {
  int k;  // 1-based row
  int m;  // length of that row (the max part)
  int l;  // critical leg
};

/// Arm of box (i,j) in a composition diagram: eta_i - j.
inline int arm(const Composition& eta, int i, int j) { return eta[i] - j; }

/// Two-sided leg of box (i,j) in a composition diagram:
///   #{k>i : j <= eta_k <= eta_i} + #{k<i : j <= eta_k+1 <= eta_i}.
inline int leg(const Composition& eta, int i, int j) {
  if (i < 1 || i > eta.length() || j < 1 || j > eta[i])
    throw std::invalid_argument("leg: box outside diagram");
  int count = 0;
  for (int k = i + 1; k <= eta.length(); ++k)
    if (j <= eta[k] && eta[k] <= eta[i]) ++count;
  for (int k = 1; k < i; ++k)
    if (j <= eta[k] + 1 && eta[k] + 1 <= eta[i]) ++count;
  return count;
}

/// Partition leg: #{k>i : lambda_k >= j}.
inline int partition_leg(const Composition& lambda, int i, int j) {
  int count = 0;
  for (int k = i + 1; k <= lambda.length(); ++k)
    if (lambda[k] >= j) ++count;
  return count;
}

inline CriticalBox critical_box(const Composition& eta) {
  if (eta.is_zero()) throw std::invalid_argument("critical_box: eta = 0 has no critical box");
  int k = 1;
  for (int i = 2; i <= eta.length(); ++i)
    if (eta[i] > eta[k]) k = i;
  int m = eta[k];
  return CriticalBox{k, m, leg(eta, k, m)};
}

/// eta with the critical box deleted.
inline Composition eta_star(const Composition& eta) {
  CriticalBox cb = critical_box(eta);
  Composition out = eta;
  out[cb.k] -= 1;
  return out;
}

/// The delta-entry each coordinate receives from the shortest sorting
/// permutation: s_i = #{j : gamma_j < gamma_i} + #{j > i : gamma_j = gamma_i}.
inline std::vector<int> delta_assignment(const Composition& gamma) {
  int n = gamma.length();
  std::vector<int> s(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (gamma[j] < gamma[i]) ++s[i - 1];
      else if (j > i && gamma[j] == gamma[i]) ++s[i - 1];
    }
  }
  return s;
}

/// Each coordinate an integer plus an integer multiple of r.
using RhoShiftedPoint = std::vector<RLaurent>;

/// The rho-shifted evaluation point gammabar = gamma + w_gamma(r delta) with
/// delta = (n-1, ..., 1, 0); coordinate i is gamma_i + r*s_i.
inline RhoShiftedPoint rho_point(const Composition& gamma) {
  std::vector<int> s = delta_assignment(gamma);
  std::vector<RLaurent> out;
  out.reserve(gamma.length());
  for (int i = 1; i <= gamma.length(); ++i) {
    RLaurent c(gamma[i]);
    c.add_term(s[i - 1], 1);
    out.push_back(c);
  }
  return out;
}

inline std::vector<RLaurent> negated_point(const std::vector<RLaurent>& p) {
  std::vector<RLaurent> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(-c);
  return out;
}

inline void require_partition(const Composition& lambda, const char* who) {
  if (!lambda.is_partition())
    throw std::invalid_argument(std::string(who) + ": index is not a partition");
}

/// c_lambda = prod over boxes of (alpha * arm + leg + 1), with alpha = 1/r
/// materialized as r^-1.
inline RLaurent c_lambda(const Composition& lambda) {
  require_partition(lambda, "c_lambda");
  RLaurent out(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) {
      RLaurent factor(partition_leg(lambda, i, j) + 1);
      factor.add_term(arm(lambda, i, j), -1);
      out *= factor;
    }
  }
  return out;
}

/// d_eta = prod over boxes of (alpha * (arm + 1) + leg + 1), with the
/// two-sided composition leg.
inline RLaurent d_eta(const Composition& eta) {
  RLaurent out(1);
  for (int i = 1; i <= eta.length(); ++i) {
    for (int j = 1; j <= eta[i]; ++j) {
      RLaurent factor(leg(eta, i, j) + 1);
      factor.add_term(arm(eta, i, j) + 1, -1);
      out *= factor;
    }
  }
  return out;
}

/// All distinct permutations of lambda's parts, lexicographically descending
/// (so the partition itself comes first).
inline std::vector<Composition> rearrangements(const Composition& lambda) {
  require_partition(lambda, "rearrangements");
  std::vector<int> v = lambda.parts();
  std::vector<Composition> out;
  do {
    out.emplace_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace barpoly
