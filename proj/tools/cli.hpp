#pragma once

// Command-line front end.  run_cli is kept separate from main so tests can
// drive it in-process and capture both streams.
//
// Exit codes: 0 certified / success, 1 refuted or failed suite, 2 invalid
// input, 3 undecided (some verdict unknown), 4 internal consistency failure.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psdecomp/psdecomp.hpp"

namespace psdecomp::cli {

enum ExitCode { kOk = 0, kRefuted = 1, kInvalid = 2, kUnknown = 3, kInternal = 4 };

/// Test-only switches.
struct Hooks {
  LemmaFault lemma_fault = LemmaFault::none;
};

namespace detail {

inline std::vector<int> parse_nodes(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  if (!s.empty() && (s.front() == '{' || s.front() == '(')) s.erase(s.begin());
  if (!s.empty() && (s.back() == '}' || s.back() == ')')) s.pop_back();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("invalid node list '" + text + "'");
    out.push_back(std::stoi(tok));
  }
  return out;
}

inline std::string verdict_cell(const Certificate& c, const std::string& id) {
  auto it = c.verdicts.find(id);
  return it == c.verdicts.end() ? "-" : to_string(it->second);
}

inline void render_certificate(const RootDatum& d, const Certificate& c, std::ostream& out) {
  out << "datum        " << c.datum << "\n";
  out << "lambda0      " << to_string(c.lambda0) << "\n";
  out << "alpha        " << c.alpha << "\n";
  out << "w0           " << word_to_string(c.w0) << "\n";
  out << "field        " << to_string(c.field) << "\n";
  out << render_dynkin(d, marks_for(c.alpha, c.S));
  if (c.line)
    out << "line         " << to_string(c.line->base) << " + t " << to_string(c.line->direction) << "\n";
  out << "assumptions\n";
  for (const auto& id : assumption_ids()) {
    std::string name = id;
    name.resize(5, ' ');
    std::string v = verdict_cell(c, id);
    v.resize(31, ' ');
    auto r = c.reasons.find(id);
    out << "  " << name << v << (r == c.reasons.end() ? "" : r->second) << "\n";
  }
  if (c.kappa1) out << "kappa_1      " << to_string(*c.kappa1) << "\n";
  if (c.eigenvalues.size() == 2)
    out << "eigenvalues  " << to_string(c.eigenvalues[0]) << " on " << c.summands[1] << ", "
        << to_string(c.eigenvalues[1]) << " on " << c.summands[0] << "\n";
  out << "chi0         " << to_string(c.chi0) << "\n";
  out << "S            " << node_set(c.S) << "\n";
  out << "Levi L       " << node_set(c.levi) << "\n";
  out << "summands     " << c.summands[0] << " (+) " << c.summands[1] << "\n";
  out << "decomposition " << (c.decomposition_holds ? "holds" : "not certified") << "\n";
  out << "socle length two " << (c.socle_length_two ? "yes" : "not certified") << "\n";
  for (const auto& n : c.notes) out << "note: " << n << "\n";
}

inline int certificate_exit(const Certificate& c) {
  if (c.decomposition_holds) return kOk;
  if (c.any(Verdict::fails)) return kRefuted;
  return kUnknown;
}

inline void render_multi(const RootDatum& d, const std::vector<MultiConfig>& configs, MultiMode mode,
                         std::ostream& out) {
  out << "pairs for " << d.name() << " (" << to_string(mode) << (mode == MultiMode::graph_conditions ? ", heuristic" : "")
      << "): " << vertex_pairs_of(configs).size() << " vertex pairs, " << configs.size() << " configurations\n";
  for (const auto& c : configs) {
    out << "\nTheta = " << node_set(c.theta) << "\n";
    out << render_dynkin(d, marks_for(c));
    for (const auto& e : c.entries)
      out << "  alpha " << e.alpha << "  S " << node_set(e.S) << "  w0 " << word_to_string(e.w0) << "  u "
          << word_to_string(e.u) << "\n";
    if (c.lambda0) out << "  lambda0 " << to_string(*c.lambda0) << "\n";
    if (!c.entries.empty())
      out << "  commuting " << (c.commuting ? "yes" : "no") << "  certified " << (c.certified ? "yes" : "no") << "\n";
    else
      out << "  no certifying pieces found\n";
  }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {}) {
  CLI::App app{"principal series decomposition certificates"};
  app.name("psdecomp");
  app.require_subcommand(1);

  std::string type, lambda0_text, w0_text, direction_text, field_text = "p-adic", format = "text", mode_text = "direct",
                                                           levi_text, t_text = "1";
  int alpha = 0, samples = -1;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = default_thread_count();
  bool show_reference_tables = false, dot = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* roots = app.add_subcommand("roots", "root datum report");
  roots->add_option("--type", type, "type label, e.g. D4")->required();
  roots->add_flag("--dot", dot, "emit the Dynkin diagram as Graphviz");
  add_format(roots);

  auto* check = app.add_subcommand("check", "check the decomposition assumptions for (lambda0, alpha, w0)");
  check->add_option("--type", type)->required();
  check->add_option("--lambda0", lambda0_text, "weight in omega coordinates, e.g. -1,1,-1,-1")->required();
  check->add_option("--alpha", alpha, "simple root index")->required();
  check->add_option("--w0", w0_text, "word, e.g. 134 = w1 w3 w4")->required();
  check->add_option("--direction", direction_text, "line direction (default: first valid scan direction)");
  check->add_option("--field", field_text, "p-adic, archimedean-real or archimedean-complex");
  check->add_option("--levi", levi_text, "nodes of the Levi L for A7' (default {alpha} u supp(w0))");
  add_format(check);

  auto* key = app.add_subcommand("key", "certificates for lambda0 = -w_alpha omega_alpha");
  key->add_option("--type", type)->required();
  key->add_option("--alpha", alpha, "simple root index (default: all)");
  key->add_option("--field", field_text);
  add_format(key);

  auto* table = app.add_subcommand("table", "System IV configuration tables");
  table->add_option("--type", type);
  table->add_flag("--reference-tables,--paper-tables", show_reference_tables, "rank-two and SL4 reference tables");
  table->add_option("--t", t_text, "positive rational for the free parameters");
  add_format(table);

  auto* multi = app.add_subcommand("multi", "pairs of simple roots with commuting projections");
  multi->add_option("--type", type)->required();
  multi->add_option("--mode", mode_text, "direct-commutation or graph-conditions");
  multi->add_option("--t", t_text, "positive rational margin on free nodes");
  add_format(multi);

  auto* lemmas = app.add_subcommand("lemmas", "property suites for the Weyl group lemmas");
  lemmas->add_option("--type", type)->required();
  lemmas->add_option("--samples", samples, "random samples (default 1000)");
  lemmas->add_option("--seed", seed);
  add_format(lemmas);

  auto* systems = app.add_subcommand("systems", "System I-IV equivalence suite");
  systems->add_option("--type", type)->required();
  systems->add_option("--samples", samples, "sampled configurations (default 200)");
  systems->add_option("--seed", seed);
  add_format(systems);

  auto* gk = app.add_subcommand("gk", "Gindikin-Karpelevich exponent profile of w along a line");
  gk->add_option("--type", type)->required();
  gk->add_option("--w0", w0_text, "Weyl word")->required();
  gk->add_option("--lambda0", lambda0_text, "base point")->required();
  gk->add_option("--direction", direction_text, "line direction")->required();
  add_format(gk);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const bool json = format == "json";
  try {
    if (*roots) {
      const RootDatum d = build_root_datum(type);
      if (json) {
        out << to_json(d).dump(2) << "\n";
        return kOk;
      }
      if (dot) {
        out << dynkin_dot(d);
        return kOk;
      }
      out << "type " << d.name() << ", rank " << d.rank() << ", " << d.num_positive_roots() << " positive roots, |W| = "
          << weyl_group_order(d) << "\n";
      out << render_dynkin(d);
      out << "Cartan matrix C[i][j] = <alpha_j, alpha_i^vee>\n";
      for (int i = 0; i < d.rank(); ++i) {
        out << " ";
        for (int j = 0; j < d.rank(); ++j) {
          std::string cell = std::to_string(d.cartan()(i, j));
          out << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell;
        }
        out << "\n";
      }
      out << "positive roots (simple-root coordinates)\n";
      for (const auto& r : d.positive_roots()) out << "  " << to_string(r) << "\n";
      return kOk;
    }

    if (*check) {
      const RootDatum d = build_root_datum(type);
      CheckOptions opts;
      opts.field = parse_field(field_text);
      if (!direction_text.empty()) opts.direction = parse_weight(direction_text);
      if (!levi_text.empty()) opts.levi = detail::parse_nodes(levi_text);
      const Weight l0 = parse_weight(lambda0_text);
      d.check_weight(l0);
      const Certificate c = check_assumptions(l0, alpha, parse_weyl_element(d, w0_text), opts);
      if (c.kappa1) {
        // closed form and line-limit evaluation must agree
        const Rat oracle = kappa_oracle(l0, alpha, parse_weyl_element(d, w0_text), c.line->direction);
        if (oracle != *c.kappa1) throw ConsistencyError("kappa closed form and oracle disagree");
      }
      if (json)
        out << to_json(c).dump(2) << "\n";
      else
        detail::render_certificate(d, c, out);
      return detail::certificate_exit(c);
    }

    if (*key) {
      const RootDatum d = build_root_datum(type);
      CheckOptions opts;
      opts.field = parse_field(field_text);
      std::vector<int> alphas;
      if (alpha > 0) {
        alphas.push_back(alpha);
      } else {
        for (int a = 1; a <= d.rank(); ++a) alphas.push_back(a);
      }
      for (int a : alphas) d.check_node(a);
      const auto certs =
          parallel_map(alphas.size(), threads, [&](std::size_t i) { return key_example(d, alphas[i], opts); });
      int code = kOk;
      Json arr = Json::array();
      for (std::size_t i = 0; i < certs.size(); ++i) {
        if (json) {
          arr.push_back(to_json(certs[i]));
        } else {
          if (i) out << "\n";
          detail::render_certificate(d, certs[i], out);
        }
        code = std::max(code, detail::certificate_exit(certs[i]));
      }
      if (json) out << arr.dump(2) << "\n";
      return code;
    }

    if (*table) {
      const Rat t = parse_rat(t_text);
      if (t <= 0) throw ValidationError("--t must be positive");
      if (show_reference_tables) {
        if (json) throw ValidationError("--reference-tables renders text only");
        out << reference_tables();
        return kOk;
      }
      if (type.empty()) throw ValidationError("table needs --type or --reference-tables");
      const RootDatum d = build_root_datum(type);
      if (json) {
        Json arr = Json::array();
        for (const auto& c : search(d, t, {}, threads)) arr.push_back(to_json(c));
        out << arr.dump(2) << "\n";
      } else {
        out << search_table(d, std::nullopt, t, threads);
      }
      return kOk;
    }

    if (*multi) {
      const RootDatum d = build_root_datum(type);
      const MultiMode mode = parse_multi_mode(mode_text);
      const Rat t = parse_rat(t_text);
      const auto configs = enumerate_pairs(d, mode, threads, t);
      if (json) {
        Json arr = Json::array();
        for (const auto& c : configs) arr.push_back(to_json(c));
        out << Json{{"schema", kSchemaVersion}, {"datum", d.name()}, {"mode", to_string(mode)}, {"configs", arr}}.dump(2)
            << "\n";
      } else {
        detail::render_multi(d, configs, mode, out);
      }
      return kOk;
    }

    if (*lemmas) {
      const RootDatum d = build_root_datum(type);
      LemmaOptions opt;
      if (samples >= 0) opt.samples = samples;
      opt.seed = seed;
      opt.threads = threads;
      opt.fault = hooks.lemma_fault;
      const auto r = lemma_suite(d, opt);
      if (json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "lemma suite " << r.datum << " (" << (r.exhaustive ? "exhaustive over W" : "random words") << ", seed "
            << r.seed << ")\n";
        for (const auto& l : r.lemmas) {
          out << "  " << l.name << "  cases " << l.cases << "  counterexamples " << l.counterexamples << "  "
              << (l.passed() ? "pass" : "FAIL") << "\n";
          for (const auto& e : l.examples) out << "    " << e << "\n";
        }
        int passed = 0;
        for (const auto& l : r.lemmas) passed += l.passed();
        out << passed << "/" << r.lemmas.size() << " lemmas pass\n";
      }
      return r.passed() ? kOk : kRefuted;
    }

    if (*systems) {
      const RootDatum d = build_root_datum(type);
      const auto r = system_equivalence_suite(d, samples >= 0 ? samples : 200, seed, threads);
      if (json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "system equivalence suite " << r.datum << " (seed " << seed << ")\n";
        out << "  sampled " << r.sampled << "  guarded " << r.guarded << "  certified " << r.certified << "\n";
        out << "  III.5 checks " << r.iii5_checked << "  I<->II checks " << r.i_ii_checked << "  II<->IV checks "
            << r.ii_iv_checked << "\n";
        for (const auto& v : r.violations) out << "  violation: " << v << "\n";
        out << (r.passed() ? "pass" : "FAIL") << "\n";
      }
      return r.passed() ? kOk : kRefuted;
    }

    if (*gk) {
      const RootDatum d = build_root_datum(type);
      const WeylElement w = parse_weyl_element(d, w0_text);
      const AffineLine line(parse_weight(lambda0_text), parse_weight(direction_text));
      d.check_weight(line.base);
      d.check_weight(line.direction);
      const auto p = gk_exponents(w, line);
      std::optional<int> order;
      std::string degenerate;
      try {
        order = c_function_order_along(w, line);
      } catch (const PreconditionError& e) {
        degenerate = e.what();
      }
      if (json) {
        out << Json{{"schema", kSchemaVersion},
                    {"datum", d.name()},
                    {"w", to_string(w)},
                    {"line", to_json(line)},
                    {"entries", to_json(p, w, line.base)},
                    {"order", order ? Json(*order) : Json(nullptr)}}
                   .dump(2)
            << "\n";
      } else {
        out << "w = " << to_string(w) << " in " << d.name() << ", line " << to_string(line.base) << " + t "
            << to_string(line.direction) << "\n";
        const auto classes = normalized_critical_roots(w, line.base);
        for (std::size_t k = 0; k < p.entries.size(); ++k)
          out << "  " << to_string(p.entries[k].root) << "  value " << to_string(p.entries[k].value) << "  slope "
              << to_string(p.entries[k].slope) << "  " << to_string(classes[k].second) << "\n";
        if (order)
          out << "order at t = 0: " << *order << " (normalized " << -*order << ")\n";
        else
          out << "order undefined: " << degenerate << "\n";
      }
      return kOk;
    }
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: arithmetic overflow: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace psdecomp::cli
