#include "termrw/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "termrw/analysis.hpp"
#include "termrw/critical_pairs.hpp"
#include "termrw/json.hpp"
#include "termrw/problem.hpp"
#include "termrw/rewriting.hpp"

namespace termrw {

namespace {

constexpr std::size_t kDefaultMaxSteps = 1000;

// Input/usage failure; reported on stderr (and as JSON when requested).
struct CommandError {
  std::string message;
};

struct CommonOptions {
  std::string file;
  bool json = false;
  bool no_arity_check = false;
};

Problem load(const CommonOptions& opts) {
  std::ifstream in(opts.file, std::ios::binary);
  if (!in) throw CommandError{"cannot read " + opts.file};
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str(), ParseOptions{!opts.no_arity_check});
  } catch (const ParseError& e) {
    throw CommandError{opts.file + ":" + e.what()};
  }
}

TrsTerm load_term(const std::string& text, const Problem& p,
                  const CommonOptions& opts) {
  try {
    return parse_term(text, p.variables, ParseOptions{!opts.no_arity_check});
  } catch (const ParseError& e) {
    throw CommandError{"term:" + std::string(e.what())};
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_cp(std::ostream& out, const TrsCriticalPair& cp,
              CanonicalNamer<std::string>& namer) {
  const auto named = canonical_names(cp, namer);
  out << "peak: " << named.top << '\n'
      << "left: " << named.left << "  (rule " << cp.left_rule_index << " at "
      << cp.left_pos << ")\n"
      << "right: " << named.right << "  (rule " << cp.right_rule_index
      << " at root)\n";
}

int cmd_parse(const CommonOptions& opts, std::ostream& out) {
  const auto p = load(opts);
  if (opts.json) {
    out << as_json(p).dump(2) << '\n';
  } else {
    out << render_problem(p);
  }
  return kExitYes;
}

int cmd_props(const CommonOptions& opts, std::ostream& out) {
  const auto p = load(opts);
  std::vector<TrsRule> all = p.strict_rules;
  all.insert(all.end(), p.weak_rules.begin(), p.weak_rules.end());
  const auto props = list_properties(all);
  if (opts.json) {
    Json rules = Json::array();
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto rp = properties(all[i]);
      rules.push_back({{"index", i},
                       {"rule", to_string(all[i])},
                       {"weak", i >= p.strict_rules.size()},
                       {"valid", is_valid(all[i])},
                       {"leftLinear", rp.left_linear},
                       {"rightLinear", rp.right_linear},
                       {"duplicating", rp.duplicating},
                       {"erasing", rp.erasing},
                       {"collapsing", rp.collapsing},
                       {"ground", rp.ground}});
    }
    out << Json{{"status", props.valid ? "YES" : "NO"},
                {"properties", as_json(props)},
                {"rules", std::move(rules)}}
               .dump(2)
        << '\n';
  } else {
    out << "rules: " << p.strict_rules.size() << " strict, "
        << p.weak_rules.size() << " weak\n"
        << "valid: " << yes_no(props.valid) << '\n'
        << "left-linear: " << yes_no(props.left_linear) << '\n'
        << "right-linear: " << yes_no(props.right_linear) << '\n'
        << "linear: " << yes_no(props.linear) << '\n'
        << "duplicating: " << yes_no(props.duplicating) << '\n'
        << "collapsing: " << yes_no(props.collapsing) << '\n'
        << "erasing: " << yes_no(props.erasing) << '\n'
        << "ground: " << yes_no(props.ground) << '\n';
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!is_valid(all[i])) {
        out << "invalid rule " << i << ": " << all[i] << '\n';
      }
    }
  }
  return props.valid ? kExitYes : kExitNo;
}

int cmd_cps(const CommonOptions& opts, OverlapScope scope, std::ostream& out) {
  const auto p = load(opts);
  const auto cps = critical_pairs(p.strict_rules, scope);
  if (opts.json) {
    Json list = Json::array();
    for (const auto& cp : cps) list.push_back(as_json(cp));
    out << Json{{"status", "YES"},
                {"scope", to_string(scope)},
                {"count", cps.size()},
                {"criticalPairs", std::move(list)}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& cp : cps) {
      CanonicalNamer<std::string> namer;
      print_cp(out, cp, namer);
      out << '\n';
    }
    out << "critical pairs: " << cps.size() << '\n';
  }
  return kExitYes;
}

int cmd_rewrite(const CommonOptions& opts, const std::string& term_text,
                Strategy strategy, std::ostream& out) {
  const auto p = load(opts);
  const auto t = load_term(term_text, p, opts);
  const auto reducts = rewrite_step(p.strict_rules, t, strategy);
  if (opts.json) {
    Json list = Json::array();
    for (const auto& r : reducts) list.push_back(as_json(r));
    out << Json{{"status", "YES"},
                {"strategy", to_string(strategy)},
                {"count", reducts.size()},
                {"reducts", std::move(list)}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& r : reducts) out << r << '\n';
    out << "reducts: " << reducts.size() << '\n';
  }
  return kExitYes;
}

int cmd_normalize(const CommonOptions& opts, const std::string& term_text,
                  std::size_t max_steps, std::ostream& out) {
  const auto p = load(opts);
  const auto t = load_term(term_text, p, opts);
  const auto r = nf(p.strict_rules, t, max_steps);
  if (opts.json) {
    auto j = as_json(r);
    j["status"] = r.reached_normal_form ? "YES" : "MAYBE";
    out << j.dump(2) << '\n';
  } else {
    out << r.final_term << '\n'
        << "steps: " << r.steps << '\n'
        << (r.reached_normal_form ? "NORMAL FORM" : "STEP LIMIT") << '\n';
  }
  return r.reached_normal_form ? kExitYes : kExitMaybe;
}

int cmd_check_lc(const CommonOptions& opts, std::size_t max_steps,
                 std::ostream& out) {
  const auto p = load(opts);
  if (!p.weak_rules.empty()) {
    throw CommandError{"check-lc: weak rules (->=) are not supported"};
  }
  const auto verdict = check_local_confluence(p, max_steps);
  if (opts.json) out << as_json(verdict).dump(2) << '\n';
  if (std::holds_alternative<LocallyConfluent>(verdict)) {
    if (!opts.json) out << "YES\n";
    return kExitYes;
  }
  if (const auto* u = std::get_if<Unknown>(&verdict)) {
    if (!opts.json) {
      out << "MAYBE\n"
          << "unresolved critical pairs: " << u->unresolved << '\n';
    }
    return kExitMaybe;
  }
  const auto& no = std::get<NotConfluent<std::string, std::string>>(verdict);
  if (!opts.json) {
    CanonicalNamer<std::string> namer;
    out << "NO\n";
    print_cp(out, no.witness, namer);
    out << "normal forms: " << namer(no.nf_left) << " and "
        << namer(no.nf_right) << '\n';
  }
  return kExitNo;
}

template <class Body>
int guarded(const CommonOptions& opts, std::ostream& out, std::ostream& err,
            Body&& body) {
  std::string message;
  try {
    return body();
  } catch (const CommandError& e) {
    message = e.message;
  } catch (const InvalidRule& e) {
    message = e.what();
  } catch (const WeakRulesPresent& e) {
    message = e.what();
  }
  err << "error: " << message << '\n';
  if (opts.json) {
    out << Json{{"status", "ERROR"}, {"message", message}}.dump(2) << '\n';
  }
  return kExitMaybe;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"First-order term rewriting: parse, inspect and analyse WST "
               "(.trs) problems"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string term_text;
  std::string scope_name = "all";
  std::string strategy_name = "full";

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", opts.file, ".trs problem file")->required();
    sub->add_flag("--json", opts.json, "emit a single JSON document");
    sub->add_flag("--no-arity-check", opts.no_arity_check,
                  "allow a symbol to occur with several arities");
  };

  auto* parse = app.add_subcommand("parse", "parse and pretty-print a problem");
  common(parse);
  auto* props = app.add_subcommand("props", "report rule properties");
  common(props);
  auto* cps = app.add_subcommand("cps", "list critical pairs");
  common(cps);
  cps->add_option("--scope", scope_name, "all | inner | outer")
      ->check(CLI::IsMember({"all", "inner", "outer"}));
  auto* rewrite = app.add_subcommand("rewrite", "one rewrite step");
  common(rewrite);
  rewrite->add_option("--term", term_text, "term to rewrite")->required();
  rewrite->add_option("--strategy", strategy_name, "full | root | inner | outer")
      ->check(CLI::IsMember({"full", "root", "inner", "outer"}));
  auto* normalize = app.add_subcommand(
      "normalize", "rewrite leftmost-innermost to a normal form");
  common(normalize);
  normalize->add_option("--term", term_text, "term to normalize")->required();
  normalize->add_option("--max-steps", max_steps, "rewrite step limit");
  auto* check_lc = app.add_subcommand(
      "check-lc",
      "local confluence via critical pairs (with termination, the "
      "Knuth-Bendix criterion gives confluence)");
  common(check_lc);
  check_lc->add_option("--max-steps", max_steps,
                       "rewrite step limit per critical-pair side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kExitYes : kExitMaybe;
  }

  return guarded(opts, out, err, [&]() -> int {
    if (*parse) return cmd_parse(opts, out);
    if (*props) return cmd_props(opts, out);
    if (*cps) {
      const auto scope = scope_name == "inner"   ? OverlapScope::Inner
                         : scope_name == "outer" ? OverlapScope::Outer
                                                 : OverlapScope::All;
      return cmd_cps(opts, scope, out);
    }
    if (*rewrite) {
      return cmd_rewrite(opts, term_text, *parse_strategy(strategy_name), out);
    }
    if (*normalize) return cmd_normalize(opts, term_text, max_steps, out);
    return cmd_check_lc(opts, max_steps, out);
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv{"termrw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace termrw
