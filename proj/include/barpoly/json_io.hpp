#pragma once

#include <string>

#include <json.hpp>

#include "barpoly/games.hpp"
#include "barpoly/mpoly.hpp"
#include "barpoly/parse.hpp"
#include "barpoly/scaled_poly.hpp"
#include "barpoly/verify.hpp"

namespace barpoly {

using nlohmann::json;

inline json rlaurent_to_json(const RLaurent& c) {
  json arr = json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
    arr.push_back(json{{"r", it->first}, {"q", rational_to_string(it->second)}});
  return arr;
}

inline RLaurent rlaurent_from_json(const json& arr) {
  RLaurent out;
  for (const auto& t : arr) out.add_term(parse_rational(t.at("q").get<std::string>()), t.at("r").get<int>());
  return out;
}

inline json mpoly_to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"x", e}, {"c", rlaurent_to_json(c)}});
  return json{{"n", p.n()}, {"terms", terms}};
}

inline MPoly mpoly_from_json(const json& j) {
  MPoly out(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    out.add_term(t.at("x").get<std::vector<int>>(), rlaurent_from_json(t.at("c")));
  return out;
}

inline json move_to_json(const GlissadeMove& mv) {
  json j{{"from", mv.source.parts()},
         {"to", mv.target.parts()},
         {"k", mv.k},
         {"m", mv.m},
         {"l", mv.l},
         {"weight", mv.weight.to_string()}};
  if (mv.l > 0) j["j"] = mv.j;
  return j;
}

inline json game_to_json(const BarGame& g) {
  json arr = json::array();
  for (const auto& mv : g.moves) arr.push_back(move_to_json(mv));
  return arr;
}

inline json scaled_poly_to_json(const ScaledPoly& p) {
  if (p.is_plain()) return mpoly_to_json(p.num());
  return json{{"num", mpoly_to_json(p.num())}, {"den", rlaurent_to_json(p.den())}};
}

inline json report_to_json(const AuditReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"index", f.index}, {"witness", f.witness}});
  return json{{"suite", r.suite},     {"max_norm", r.max_norm},
              {"n", r.n},             {"checked", r.checked},
              {"failures", failures}, {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace barpoly
