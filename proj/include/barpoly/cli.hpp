#pragma once

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "barpoly/games.hpp"
#include "barpoly/interp.hpp"
#include "barpoly/json_io.hpp"
#include "barpoly/parse.hpp"
#include "barpoly/verify.hpp"

namespace barpoly {

namespace detail {

inline Composition parse_comp_n(const std::string& text, int n, const char* flag) {
  Composition c = Composition::parse(text);
  if (c.length() != n)
    throw std::invalid_argument(std::string(flag) + " has length " + std::to_string(c.length()) +
                                " but --n is " + std::to_string(n));
  return c;
}

inline std::string render(const ScaledPoly& p, const std::string& format) {
  if (format == "json") return scaled_poly_to_json(p).dump();
  if (format == "latex") return p.to_latex();
  return p.to_string();
}

inline std::string render(const MPoly& p, const std::string& format) {
  return render(ScaledPoly(p), format);
}

inline std::string render(const RLaurent& v, const std::string& format) {
  if (format == "json") return rlaurent_to_json(v).dump();
  if (format == "latex") return v.to_latex();
  return v.to_string();
}

/// DOT rendering of the full DFS game tree; edge labels carry move weights.
inline std::string game_tree_dot(const Composition& eta, std::size_t guard) {
  std::ostringstream os;
  os << "digraph games {\n";
  std::size_t next_id = 0;
  std::size_t nodes = 1;
  std::function<void(const Composition&, std::size_t)> rec = [&](const Composition& cur,
                                                                 std::size_t id) {
    os << "  n" << id << " [label=\"" << cur.to_string() << "\"];\n";
    if (cur.is_zero()) return;
    for (const auto& mv : glissades(cur)) {
      std::size_t child = ++next_id;
      if (guard && ++nodes > guard)
        throw GuardExceeded("game tree on " + eta.to_string() + " exceeded guard of " +
                            std::to_string(guard));
      os << "  n" << id << " -> n" << child << " [label=\""
         << (mv.l > 0 ? std::string("r") : mv.weight.to_string()) << "\"];\n";
      rec(mv.target, child);
    }
  };
  rec(eta, 0);
  os << "}\n";
  return os.str();
}

}  // namespace detail

/// Drives the whole tool; returns the process exit code.
/// 0 = success, 1 = a check failed (audit failures, method disagreement,
/// guard hit, internal invariant), 2 = usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bar monomials, glissade games, and interpolation Jack polynomials"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "text";
  std::size_t guard = kDefaultGameGuard;
  app.add_option("--n", n, "ambient dimension (number of variables)")->required();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--guard", guard, "game-count guard for enumeration commands");

  int rc = 0;

  // compute
  auto* compute = app.add_subcommand("compute", "compute a bar monomial");
  compute->fallthrough();
  std::string eta_text, method = "transition";
  compute->add_option("--eta", eta_text, "composition, e.g. 1,0,4")->required();
  compute->add_option("--method", method, "games|transition|recursion|all")
      ->check(CLI::IsMember({"games", "transition", "recursion", "all"}));
  compute->callback([&] {
    Composition eta = detail::parse_comp_n(eta_text, n, "--eta");
    MPoly result(n);
    if (method == "games") {
      result = barmon_games(eta, guard);
    } else if (method == "recursion") {
      result = barmon_recursion(eta);
    } else if (method == "transition") {
      result = barmon(eta);
    } else {
      MPoly trans = barmon(eta);
      MPoly rec = barmon_recursion(eta);
      bool games_ok = true;
      MPoly games(n);
      try {
        games = barmon_games(eta, guard);
      } catch (const GuardExceeded&) {
        games_ok = false;
        err << "note: game count exceeds guard; comparing transition vs recursion only\n";
      }
      if (rec != trans || (games_ok && games != trans)) {
        err << "method disagreement on " << eta.to_string() << "\n"
            << "  transition: " << trans.to_string() << "\n"
            << "  recursion:  " << rec.to_string() << "\n";
        if (games_ok) err << "  games:      " << games.to_string() << "\n";
        rc = 1;
        return;
      }
      result = trans;
    }
    out << detail::render(result, format) << "\n";
  });

  // games
  auto* games_cmd = app.add_subcommand("games", "enumerate bar games");
  games_cmd->fallthrough();
  std::string games_action, games_eta, at_text;
  games_cmd->add_option("action", games_action, "count|list|dot|contrib")
      ->required()
      ->check(CLI::IsMember({"count", "list", "dot", "contrib"}));
  games_cmd->add_option("--eta", games_eta, "composition")->required();
  games_cmd->add_option("--at", at_text, "evaluation point for contrib, e.g. -1-r,-1");
  games_cmd->callback([&] {
    Composition eta = detail::parse_comp_n(games_eta, n, "--eta");
    if (games_action == "count") {
      out << count_games(eta, guard) << "\n";
    } else if (games_action == "list") {
      json arr = json::array();
      for_each_game(
          eta,
          [&](const BarGame& g) {
            arr.push_back(game_to_json(g));
            return true;
          },
          guard);
      out << arr.dump(2) << "\n";
    } else if (games_action == "dot") {
      out << detail::game_tree_dot(eta, guard);
    } else {
      if (at_text.empty()) throw std::invalid_argument("contrib needs --at");
      std::vector<RLaurent> point = parse_point(at_text);
      if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("--at has wrong number of coordinates");
      auto contribs = per_game_contributions(eta, point, guard);
      RLaurent sum;
      if (format == "json") {
        json arr = json::array();
        for (const auto& [id, v] : contribs) {
          arr.push_back(json{{"game", id}, {"value", v.to_string()}});
          sum += v;
        }
        out << json{{"contributions", arr}, {"sum", sum.to_string()}}.dump(2) << "\n";
      } else {
        for (const auto& [id, v] : contribs) {
          out << "game " << id << ": " << v.to_string() << "\n";
          sum += v;
        }
        out << "sum: " << sum.to_string() << "\n";
      }
    }
  });

  // interp
  auto* interp_cmd = app.add_subcommand("interp", "polynomial families");
  interp_cmd->fallthrough();
  std::string family_text, variant_text, index_text;
  interp_cmd->add_option("family", family_text, "E|F|J|P")
      ->required()
      ->check(CLI::IsMember({"E", "F", "J", "P"}));
  interp_cmd->add_option("variant", variant_text, "alpha|rdelta")
      ->required()
      ->check(CLI::IsMember({"alpha", "rdelta"}));
  interp_cmd->add_option("--index", index_text, "composition (partition for J/P)")->required();
  interp_cmd->callback([&] {
    Composition index = detail::parse_comp_n(index_text, n, "--index");
    bool rdelta = variant_text == "rdelta";
    Family fam;
    if (family_text == "E") fam = rdelta ? Family::E_rdelta : Family::E_alpha;
    else if (family_text == "F") fam = rdelta ? Family::F_rdelta : Family::F_alpha;
    else if (family_text == "J") fam = rdelta ? Family::J_rdelta : Family::J_alpha;
    else fam = rdelta ? Family::P_rdelta : Family::P_alpha;
    JackFamilies families(n);
    PolyFamilyEntry entry = families.entry(fam, index);
    out << detail::render(entry.value, format) << "\n";
  });

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "finite-range verification suites");
  audit_cmd->fallthrough();
  std::string suite;
  int max_norm = 0;
  audit_cmd
      ->add_option("suite", suite,
                   "cross|vanishing|theoremC|theoremA|theoremB|lemmas|certificates|structural|all")
      ->required()
      ->check(CLI::IsMember({"cross", "vanishing", "theoremC", "theoremA", "theoremB", "lemmas",
                             "certificates", "structural", "all"}));
  audit_cmd->add_option("--max-norm", max_norm, "inclusive bound on |eta|")->required();
  audit_cmd->callback([&] {
    std::vector<AuditReport> reports;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("cross")) reports.push_back(audit_cross_methods(max_norm, n, guard));
    if (want("vanishing")) reports.push_back(audit_vanishing(max_norm, n));
    if (want("theoremC")) reports.push_back(audit_theorem_C(max_norm, n));
    if (want("theoremA")) reports.push_back(audit_theorem_A(max_norm, n));
    if (want("theoremB")) reports.push_back(audit_theorem_B(max_norm, n));
    if (want("lemmas")) reports.push_back(audit_lemma_exceptions(max_norm, n));
    if (want("certificates")) reports.push_back(audit_certificates(max_norm, n));
    if (want("structural")) reports.push_back(audit_structural(max_norm, n));
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      out << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
    } else {
      for (const auto& r : reports) out << r.to_text();
    }
    for (const auto& r : reports)
      if (!r.passed()) rc = 1;
  });

  // binomial
  auto* binom_cmd = app.add_subcommand("binomial", "special values at rho-shifted points");
  binom_cmd->fallthrough();
  std::string lambda_text, mu_text, binom_family = "J";
  bool raw = false;
  binom_cmd->add_option("--lambda", lambda_text, "index of the evaluated polynomial")->required();
  binom_cmd->add_option("--mu", mu_text, "the point is -mubar")->required();
  binom_cmd->add_option("--family", binom_family, "J|F")->check(CLI::IsMember({"J", "F"}));
  binom_cmd->add_flag("--raw", raw, "skip the (-r)^|lambda| prefactor");
  binom_cmd->callback([&] {
    Composition lambda = detail::parse_comp_n(lambda_text, n, "--lambda");
    Composition mu = detail::parse_comp_n(mu_text, n, "--mu");
    JackFamilies families(n);
    RLaurent value;
    if (binom_family == "F") {
      if (!raw) throw std::invalid_argument("the scaled form is defined for family J; use --raw with F");
      value = eval_at_neg_bar(families.F_rdelta(lambda), mu);
    } else if (raw) {
      require_partition(lambda, "binomial");
      value = eval_at_neg_bar(families.J_rdelta(lambda), mu);
    } else {
      value = binomial_value(families, lambda, mu);
    }
    out << detail::render(value, format) << "\n";
  });

  // poset
  auto* poset_cmd = app.add_subcommand("poset", "bar-order DAG as DOT");
  poset_cmd->fallthrough();
  int poset_norm = 0;
  poset_cmd->add_option("--max-norm", poset_norm, "inclusive bound on |gamma|")->required();
  poset_cmd->callback([&] { out << bar_order_dag(poset_norm, n).to_dot(); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::Success&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalInvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace barpoly
