#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "barpoly/composition.hpp"
#include "barpoly/mpoly.hpp"
#include "barpoly/operators.hpp"
#include "barpoly/shapes.hpp"

namespace barpoly {

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultGameGuard = 1000000;

/// One glissade: delete the critical box of `source`, then move l >= 0 boxes
/// from the critical row k to row j (j is 0 for the trivial move l = 0).
/// The weight depends only on the source shape: w_source for the trivial
/// move, r for every box-moving one.
struct GlissadeMove {
  Composition source;
  Composition target;
  int k = 0;
  int m = 0;
  int l = 0;
  int j = 0;
  MPoly weight{0};
};

/// w_eta = x_k + (m - 1) + r(n - 1 - l[eta]).
inline MPoly shape_weight(const Composition& eta) {
  CriticalBox cb = critical_box(eta);
  const int n = eta.length();
  MPoly w = MPoly::var(n, cb.k);
  RLaurent c(cb.m - 1);
  c.add_term(n - 1 - cb.l, 1);
  w += MPoly::constant(n, c);
  return w;
}

/// All glissades on eta, the trivial move first and the box-moving ones in
/// ascending (j, l) order. A move of l > 0 boxes from row k to row j is
/// legal iff eps = eta_k - eta_j - l - 1 is > 0 for j < k and >= 0 for j > k.
inline std::vector<GlissadeMove> glissades(const Composition& eta) {
  if (eta.is_zero()) throw std::invalid_argument("glissades: eta = 0");
  CriticalBox cb = critical_box(eta);
  const int n = eta.length();
  std::vector<GlissadeMove> out;

  GlissadeMove triv;
  triv.source = eta;
  triv.target = eta_star(eta);
  triv.k = cb.k;
  triv.m = cb.m;
  triv.weight = shape_weight(eta);
  out.push_back(std::move(triv));

  MPoly rweight = MPoly::constant(n, RLaurent::r());
  for (int j = 1; j <= n; ++j) {
    if (j == cb.k) continue;
    for (int l = 1; l <= eta[cb.k] - 1; ++l) {
      int eps = eta[cb.k] - eta[j] - l - 1;
      bool ok = (j < cb.k) ? (eps > 0) : (eps >= 0);
      if (!ok) continue;
      GlissadeMove mv;
      mv.source = eta;
      mv.target = eta;
      mv.target[cb.k] -= 1 + l;
      mv.target[j] += l;
      mv.k = cb.k;
      mv.m = cb.m;
      mv.l = l;
      mv.j = j;
      mv.weight = rweight;
      out.push_back(std::move(mv));
    }
  }
  return out;
}

/// P[eta]: the box-moving glissade targets only.
inline std::set<Composition> covers_P(const Composition& eta) {
  std::set<Composition> out;
  auto moves = glissades(eta);
  for (std::size_t t = 1; t < moves.size(); ++t) out.insert(moves[t].target);
  return out;
}

/// A maximal glissade chain eta = eta^(0) > ... > eta^(|eta|) = 0.
struct BarGame {
  std::vector<GlissadeMove> moves;
};

inline MPoly game_weight(const BarGame& g, int n) {
  MPoly w = MPoly::one(n);
  for (const auto& mv : g.moves) w *= mv.weight;
  return w;
}

/// Depth-first stream over all bar games on eta, children in glissades()
/// order; the first emitted game is the all-trivial one.
class GameEnumerator {
 public:
  explicit GameEnumerator(Composition eta) : root_(std::move(eta)) {}

  std::optional<BarGame> next() {
    if (done_) return std::nullopt;
    if (fresh_) {
      fresh_ = false;
      descend(root_);
      return BarGame{path_};
    }
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      ++f.idx;
      if (f.idx < f.options.size()) {
        path_.back() = f.options[f.idx];
        descend(path_.back().target);
        return BarGame{path_};
      }
      frames_.pop_back();
      path_.pop_back();
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  struct Frame {
    std::vector<GlissadeMove> options;
    std::size_t idx = 0;
  };

  void descend(Composition cur) {
    while (!cur.is_zero()) {
      Frame f{glissades(cur), 0};
      path_.push_back(f.options[0]);
      cur = f.options[0].target;
      frames_.push_back(std::move(f));
    }
  }

  Composition root_;
  std::vector<Frame> frames_;
  std::vector<GlissadeMove> path_;
  bool fresh_ = true;
  bool done_ = false;
};

/// Visit every game; stops early when fn returns false. Returns the number
/// of games visited. Throws GuardExceeded past `guard` games (0 = no guard).
inline std::size_t for_each_game(const Composition& eta,
                                 const std::function<bool(const BarGame&)>& fn,
                                 std::size_t guard = kDefaultGameGuard) {
  GameEnumerator en(eta);
  std::size_t count = 0;
  while (auto g = en.next()) {
    ++count;
    if (guard && count > guard)
      throw GuardExceeded("game enumeration on " + eta.to_string() + " exceeded guard of " +
                          std::to_string(guard) + "; use the transition method");
    if (!fn(*g)) break;
  }
  return count;
}

inline std::size_t count_games(const Composition& eta, std::size_t guard = kDefaultGameGuard) {
  return for_each_game(eta, [](const BarGame&) { return true; }, guard);
}

/// Theorem-D route: the weighted sum over all bar games.
inline MPoly barmon_games(const Composition& eta, std::size_t guard = kDefaultGameGuard) {
  MPoly sum(eta.length());
  for_each_game(
      eta,
      [&](const BarGame& g) {
        sum += game_weight(g, eta.length());
        return true;
      },
      guard);
  return sum;
}

/// Memo for bar monomials, keyed on whole compositions in a fixed ambient n.
/// Confine one cache to one execution context.
class BarmonCache {
 public:
  using Map = std::unordered_map<Composition, MPoly, CompositionHash>;
  Map& map() { return map_; }

 private:
  Map map_;
};

/// Transition route: x-underline(eta) = w_eta * x-underline(eta*)
///                   + r * sum over gamma in P[eta] of x-underline(gamma).
inline const MPoly& barmon_transition(const Composition& eta, BarmonCache& cache) {
  auto it = cache.map().find(eta);
  if (it != cache.map().end()) return it->second;
  MPoly result(eta.length());
  if (eta.is_zero()) {
    result = MPoly::one(eta.length());
  } else {
    auto moves = glissades(eta);
    for (const auto& mv : moves)
      result += mv.weight * barmon_transition(mv.target, cache);
  }
  return cache.map().emplace(eta, std::move(result)).first->second;
}

/// Convenience owner-cache spelling of the transition route.
inline MPoly barmon(const Composition& eta) {
  BarmonCache cache;
  return barmon_transition(eta, cache);
}

/// Operator route: from x-underline(0) = 1 by Phi+ when the last nonzero
/// index is n, else by sigma+ shifting the last nonzero entry right.
inline MPoly barmon_recursion(const Composition& eta) {
  const int n = eta.length();
  if (eta.is_zero()) return MPoly::one(n);
  int i = eta.last_nonzero();
  if (i == n) {
    std::vector<int> parts(n);
    parts[0] = eta[n] - 1;
    for (int j = 1; j < n; ++j) parts[j] = eta[j];
    return phi_plus(barmon_recursion(Composition(std::move(parts))));
  }
  return sigma_plus(barmon_recursion(eta.s(i)), i);
}

/// m-underline(lambda) = sum of bar monomials over rearrangements.
inline MPoly sym_barmon(const Composition& lambda, BarmonCache& cache) {
  require_partition(lambda, "sym_barmon");
  MPoly sum(lambda.length());
  for (const auto& eta : rearrangements(lambda)) sum += barmon_transition(eta, cache);
  return sum;
}

/// The canonical oracle handed to the dehomogenization operator.
inline BarMonomialOracle barmon_oracle(BarmonCache& cache) {
  return [&cache](const Composition& eta) { return barmon_transition(eta, cache); };
}

/// The bar order restricted to {gamma : |gamma| <= max_norm}, with the
/// covering relation as edges. Nodes are graded-lex ordered; rank is |gamma|.
struct BarOrderDag {
  std::vector<Composition> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (from, to) indices

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph barorder {\n";
    for (const auto& node : nodes) {
      os << "  \"" << node.to_string() << "\" [rank=" << node.norm() << "];\n";
    }
    for (const auto& [a, b] : edges) {
      os << "  \"" << nodes[a].to_string() << "\" -> \"" << nodes[b].to_string() << "\";\n";
    }
    os << "}\n";
    return os.str();
  }
};

inline BarOrderDag bar_order_dag(int max_norm, int n) {
  if (max_norm < 0) throw std::invalid_argument("bar_order_dag: negative max_norm");
  BarOrderDag dag;
  dag.nodes = compositions_up_to(n, max_norm);
  std::unordered_map<Composition, std::size_t, CompositionHash> index;
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) index.emplace(dag.nodes[i], i);
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    if (dag.nodes[i].is_zero()) continue;
    for (const auto& mv : glissades(dag.nodes[i]))
      dag.edges.emplace_back(i, index.at(mv.target));
  }
  return dag;
}

}  // namespace barpoly
