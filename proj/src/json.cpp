#include "termrw/json.hpp"

#include <variant>

namespace termrw {

namespace {

template <class V>
Json canonical_term(const Term<std::string, V>& t) {
  if (t.is_var()) return {{"var", t.variable()}};
  Json args = Json::array();
  for (const auto& a : t.args()) args.push_back(canonical_term(a));
  return {{"fun", t.symbol()}, {"args", std::move(args)}};
}

}  // namespace

Json as_json(const TrsTerm& t) { return canonical_term(t); }

Json as_json(const Position& p) { return Json(p.indices()); }

Json as_json(const GeneralizedSubstitution<std::string, std::string>& s) {
  Json out = Json::object();
  for (const auto& [v, t] : s) out[v] = as_json(t);
  return out;
}

Json as_json(const TrsRule& r) {
  return {{"lhs", as_json(r.lhs)}, {"rhs", as_json(r.rhs)},
          {"text", to_string(r)}};
}

Json as_json(const Reduct<std::string, std::string>& r) {
  return {{"result", as_json(r.result)},
          {"pos", as_json(r.pos)},
          {"ruleIndex", r.rule_index},
          {"rule", to_string(r.rule)},
          {"subst", as_json(r.subst)}};
}

Json as_json(const TrsCriticalPair& cp) {
  const auto named = canonical_names(cp);
  return {{"top", canonical_term(named.top)},
          {"left", canonical_term(named.left)},
          {"right", canonical_term(named.right)},
          {"leftRule", as_json(cp.left_rule)},
          {"rightRule", as_json(cp.right_rule)},
          {"leftRuleIndex", cp.left_rule_index},
          {"rightRuleIndex", cp.right_rule_index},
          {"leftPos", as_json(cp.left_pos)},
          {"outer", cp.is_outer()}};
}

Json as_json(const RulesProperties& p) {
  return {{"valid", p.valid},           {"leftLinear", p.left_linear},
          {"rightLinear", p.right_linear}, {"linear", p.linear},
          {"duplicating", p.duplicating}, {"collapsing", p.collapsing},
          {"erasing", p.erasing},         {"ground", p.ground}};
}

Json as_json(const Problem& p) {
  auto rules = [](const std::vector<TrsRule>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(as_json(r));
    return out;
  };
  Json sections = Json::array();
  for (const auto& s : p.preserved_sections) {
    sections.push_back({{"key", s.key}, {"body", s.body}});
  }
  return {{"variables", p.variables},
          {"strictRules", rules(p.strict_rules)},
          {"weakRules", rules(p.weak_rules)},
          {"strategy", p.strategy ? Json(to_string(*p.strategy)) : Json()},
          {"comment", p.comment ? Json(*p.comment) : Json()},
          {"preservedSections", std::move(sections)},
          {"theory", p.has_theory()}};
}

Json as_json(const NormalizationResult<std::string, std::string>& r) {
  return {{"term", as_json(r.final_term)},
          {"text", to_string(r.final_term)},
          {"steps", r.steps},
          {"normalForm", r.reached_normal_form}};
}

Json as_json(const TrsVerdict& v) {
  return std::visit(
      [](const auto& verdict) -> Json {
        using T = std::decay_t<decltype(verdict)>;
        if constexpr (std::is_same_v<T, LocallyConfluent>) {
          return {{"status", "YES"}, {"verdict", "LocallyConfluent"}};
        } else if constexpr (std::is_same_v<T, Unknown>) {
          return {{"status", "MAYBE"},
                  {"verdict", "Unknown"},
                  {"unresolved", verdict.unresolved}};
        } else {
          CanonicalNamer<std::string> namer;
          canonical_names(verdict.witness, namer);
          const auto nf_left = namer(verdict.nf_left);
          const auto nf_right = namer(verdict.nf_right);
          return {{"status", "NO"},
                  {"verdict", "NotConfluent"},
                  {"witness", as_json(verdict.witness)},
                  {"nfLeft", canonical_term(nf_left)},
                  {"nfRight", canonical_term(nf_right)}};
        }
      },
      v);
}

TrsTerm term_from_json(const Json& j) {
  if (j.contains("var")) return TrsTerm::var(j.at("var").get<std::string>());
  std::vector<TrsTerm> args;
  for (const auto& a : j.value("args", Json::array())) {
    args.push_back(term_from_json(a));
  }
  return TrsTerm::fun(j.at("fun").get<std::string>(), std::move(args));
}

}  // namespace termrw
