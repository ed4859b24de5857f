#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "bchtrees/bch.hpp"
#include "bchtrees/rational.hpp"
#include "bchtrees/series.hpp"

namespace bchtrees {

/// All JSON emission uses ordered maps and the canonical term order, so
/// output is byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& q) {
  return Json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

inline Json series_to_json(const NCSeries& s) {
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms()) {
    Json word = Json::array();
    for (char idx : w) word.push_back(s.alphabet().at(static_cast<size_t>(idx)));
    terms.push_back(Json{{"word", word}, {"coeff", rational_to_json(c)}});
  }
  return Json{{"alphabet", s.alphabet()}, {"max_degree", s.max_degree()}, {"terms", terms}};
}

inline Json ledger_to_json(const std::vector<LedgerEntry>& ledger) {
  Json out = Json::array();
  for (const auto& e : ledger)
    out.push_back(Json{{"tree", e.tree},
                       {"coefficient", rational_to_json(e.coefficient)},
                       {"bracket", e.bracket}});
  return out;
}

inline Json result_to_json(const BchResult& res, const BchRequest& req) {
  Json out{{"engine", engine_name(req.engine)},
           {"letters", req.letters},
           {"max_degree", req.max_degree},
           {"series", series_to_json(res.series)}};
  Json components = Json::array();
  for (const auto& c : res.components) components.push_back(series_to_json(c));
  out["components"] = components;
  if (res.has_ledger) out["ledger"] = ledger_to_json(res.ledger);
  return out;
}

}  // namespace bchtrees
