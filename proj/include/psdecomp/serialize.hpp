#pragma once

// JSON forms of the library records.  Rationals are strings ("-1/2"), weights
// arrays of such strings, Weyl elements generator words ("w134", "e").

#include <string>
#include <vector>

#include <json.hpp>
#include "psdecomp/decomp.hpp"
#include "psdecomp/intertwine.hpp"
#include "psdecomp/lemmas.hpp"
#include "psdecomp/multi.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/weyl.hpp"

namespace psdecomp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "psdecomp/1";

namespace json_detail {

inline Json rat(const Rat& r) { return to_string(r); }
inline Rat rat(const Json& j) { return parse_rat(j.get<std::string>()); }

inline Json weight(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) a.push_back(rat(c));
  return a;
}
inline Weight weight(const Json& j) {
  Weight w;
  for (const auto& c : j) w.coords.push_back(rat(c));
  return w;
}

inline Json ints(const IntVec& v) {
  Json a = Json::array();
  for (Int x : v) a.push_back(x);
  return a;
}

inline Json nodes(const std::vector<int>& v) { return Json(v); }
inline std::vector<int> nodes(const Json& j) { return j.get<std::vector<int>>(); }

inline Json word(const Word& w) { return word_to_string(w); }
inline Word word(const Json& j) { return parse_word(j.get<std::string>()); }

inline Json line(const AffineLine& l) { return Json{{"base", weight(l.base)}, {"direction", weight(l.direction)}}; }
inline AffineLine line(const Json& j) { return AffineLine(weight(j.at("base")), weight(j.at("direction"))); }

inline Json strings(const std::vector<std::string>& v) { return Json(v); }
inline std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace json_detail

inline Json to_json(const RootDatum& d) {
  Json cartan = Json::array();
  for (int i = 0; i < d.rank(); ++i) cartan.push_back(json_detail::ints(d.cartan().row(i)));
  Json roots = Json::array();
  for (const auto& r : d.positive_roots()) roots.push_back(json_detail::ints(r.coords));
  return Json{{"family", std::string(1, family_letter(d.family()))},
              {"rank", d.rank()},
              {"cartan", cartan},
              {"positive_roots", roots}};
}

/// Rebuilds the datum from family and rank and checks the stored tables agree.
inline RootDatum root_datum_from_json(const Json& j) {
  const std::string fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw ValidationError("invalid family '" + fam + "'");
  RootDatum d = build_root_datum(parse_family(fam[0]), j.at("rank").get<int>());
  if (j.contains("cartan") && j.at("cartan") != to_json(d).at("cartan"))
    throw ValidationError("stored Cartan matrix does not match " + d.name());
  if (j.contains("positive_roots") && j.at("positive_roots") != to_json(d).at("positive_roots"))
    throw ValidationError("stored positive roots do not match " + d.name());
  return d;
}

inline Json to_json(const AffineLine& l) { return json_detail::line(l); }

inline Json to_json(const ExponentProfile& p, const WeylElement& w, const Weight& lambda0) {
  Json entries = Json::array();
  const auto classes = normalized_critical_roots(w, lambda0);
  for (std::size_t k = 0; k < p.entries.size(); ++k) {
    const auto& e = p.entries[k];
    entries.push_back(Json{{"root", json_detail::ints(e.root.coords)},
                           {"value", json_detail::rat(e.value)},
                           {"slope", json_detail::rat(e.slope)},
                           {"class", to_string(classes[k].second)}});
  }
  return entries;
}

inline ExponentProfile exponent_profile_from_json(const Json& j) {
  ExponentProfile p;
  for (const auto& e : j) {
    RootVec r{e.at("root").get<IntVec>(), false};
    p.entries.push_back({r, json_detail::rat(e.at("value")), json_detail::rat(e.at("slope"))});
  }
  return p;
}

inline Json to_json(const Certificate& c) {
  Json verdicts = Json::object();
  for (const auto& id : assumption_ids()) {
    auto it = c.verdicts.find(id);
    if (it == c.verdicts.end()) continue;
    auto reason = c.reasons.find(id);
    verdicts[id] = Json{{"verdict", to_string(it->second)},
                        {"reason", reason == c.reasons.end() ? std::string() : reason->second}};
  }
  Json eig = Json::array();
  for (const auto& e : c.eigenvalues) eig.push_back(json_detail::rat(e));
  return Json{{"schema", kSchemaVersion},
              {"datum", c.datum},
              {"lambda0", json_detail::weight(c.lambda0)},
              {"alpha", c.alpha},
              {"w0", json_detail::word(c.w0)},
              {"line", c.line ? json_detail::line(*c.line) : Json(nullptr)},
              {"verdicts", verdicts},
              {"kappa1", c.kappa1 ? json_detail::rat(*c.kappa1) : Json(nullptr)},
              {"eigenvalues", eig},
              {"chi0", json_detail::weight(c.chi0)},
              {"S", json_detail::nodes(c.S)},
              {"levi", json_detail::nodes(c.levi)},
              {"summands", json_detail::strings(c.summands)},
              {"field", to_string(c.field)},
              {"decomposition_holds", c.decomposition_holds},
              {"socle_length_two", c.socle_length_two},
              {"notes", json_detail::strings(c.notes)}};
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.datum = j.at("datum").get<std::string>();
  c.lambda0 = json_detail::weight(j.at("lambda0"));
  c.alpha = j.at("alpha").get<int>();
  c.w0 = json_detail::word(j.at("w0"));
  if (!j.at("line").is_null()) c.line = json_detail::line(j.at("line"));
  for (const auto& [id, v] : j.at("verdicts").items()) {
    c.verdicts[id] = parse_verdict(v.at("verdict").get<std::string>());
    c.reasons[id] = v.at("reason").get<std::string>();
  }
  if (!j.at("kappa1").is_null()) c.kappa1 = json_detail::rat(j.at("kappa1"));
  for (const auto& e : j.at("eigenvalues")) c.eigenvalues.push_back(json_detail::rat(e));
  c.chi0 = json_detail::weight(j.at("chi0"));
  c.S = json_detail::nodes(j.at("S"));
  c.levi = json_detail::nodes(j.at("levi"));
  c.summands = json_detail::strings(j.at("summands"));
  c.field = parse_field(j.at("field").get<std::string>());
  c.decomposition_holds = j.at("decomposition_holds").get<bool>();
  c.socle_length_two = j.at("socle_length_two").get<bool>();
  c.notes = json_detail::strings(j.at("notes"));
  return c;
}

inline Json to_json(const MultiConfig& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back(Json{{"alpha", e.alpha},
                           {"S", json_detail::nodes(e.S)},
                           {"w0", json_detail::word(e.w0)},
                           {"u", json_detail::word(e.u)}});
  return Json{{"theta", json_detail::nodes(c.theta)},
              {"entries", entries},
              {"lambda0", c.lambda0 ? json_detail::weight(*c.lambda0) : Json(nullptr)},
              {"commuting", c.commuting},
              {"certified", c.certified},
              {"heuristic", c.heuristic}};
}

inline MultiConfig multi_config_from_json(const Json& j) {
  MultiConfig c;
  c.theta = json_detail::nodes(j.at("theta"));
  for (const auto& e : j.at("entries"))
    c.entries.push_back({e.at("alpha").get<int>(), json_detail::nodes(e.at("S")), json_detail::word(e.at("w0")),
                         json_detail::word(e.at("u"))});
  if (!j.at("lambda0").is_null()) c.lambda0 = json_detail::weight(j.at("lambda0"));
  c.commuting = j.at("commuting").get<bool>();
  c.certified = j.at("certified").get<bool>();
  c.heuristic = j.at("heuristic").get<bool>();
  return c;
}

inline Json to_json(const LemmaReport& r) {
  Json lemmas = Json::array();
  for (const auto& l : r.lemmas)
    lemmas.push_back(Json{{"name", l.name},
                          {"cases", l.cases},
                          {"counterexamples", l.counterexamples},
                          {"examples", json_detail::strings(l.examples)},
                          {"passed", l.passed()}});
  return Json{{"schema", kSchemaVersion},
              {"datum", r.datum},
              {"exhaustive", r.exhaustive},
              {"seed", r.seed},
              {"lemmas", lemmas},
              {"passed", r.passed()}};
}

inline LemmaReport lemma_report_from_json(const Json& j) {
  LemmaReport r;
  r.datum = j.at("datum").get<std::string>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& l : j.at("lemmas"))
    r.lemmas.push_back({l.at("name").get<std::string>(), l.at("cases").get<long>(),
                        l.at("counterexamples").get<long>(), json_detail::strings(l.at("examples"))});
  return r;
}

inline Json to_json(const SystemSuiteReport& r) {
  return Json{{"schema", kSchemaVersion},
              {"datum", r.datum},
              {"sampled", r.sampled},
              {"guarded", r.guarded},
              {"certified", r.certified},
              {"iii5_checked", r.iii5_checked},
              {"i_ii_checked", r.i_ii_checked},
              {"ii_iv_checked", r.ii_iv_checked},
              {"violations", json_detail::strings(r.violations)},
              {"passed", r.passed()}};
}

inline SystemSuiteReport system_suite_report_from_json(const Json& j) {
  SystemSuiteReport r;
  r.datum = j.at("datum").get<std::string>();
  r.sampled = j.at("sampled").get<int>();
  r.guarded = j.at("guarded").get<int>();
  r.certified = j.at("certified").get<int>();
  r.iii5_checked = j.at("iii5_checked").get<int>();
  r.i_ii_checked = j.at("i_ii_checked").get<int>();
  r.ii_iv_checked = j.at("ii_iv_checked").get<int>();
  r.violations = json_detail::strings(j.at("violations"));
  return r;
}

}  // namespace psdecomp
