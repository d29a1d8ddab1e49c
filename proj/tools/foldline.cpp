// foldline: command-line front end.

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "foldline/io.hpp"

using namespace foldline;

namespace {

struct Options {
  std::string datum, builtin_name, semifield = "rat", coords, from, to, word, label, id, level = "desk";
  std::string left, right, exec = "serial";
  std::uint64_t seed = 0;
  std::size_t trials = 0, cap = kDefaultWordCap;
  std::int64_t e = 1, bound = 3;
  bool json_out = false, dot = false, trace = false;
};

struct Output {
  json payload;
  json trace;
  std::string dot;
  bool ok = true;
};

LoadedDatum datum_of(const Options& o) {
  if (!o.builtin_name.empty()) {
    auto b = builtin(o.builtin_name);
    return {b.datum, b.sigma};
  }
  if (o.datum.empty()) throw Error(ErrorKind::usage, "--datum or --builtin is required");
  return load_datum(o.datum);
}

template <class Fn>
Output with_coords(const std::string& model, const std::string& text, Fn&& fn) {
  if (text.empty()) throw Error(ErrorKind::usage, "--coords is required");
  switch (parse_model(model)) {
    case Model::rat:
      return fn(parse_rat_coords(text));
    case Model::tropz:
      return fn(parse_tropz_coords(text));
    case Model::tropn:
      return fn(parse_tropn_coords(text));
    case Model::sym:
      return fn(parse_sym_coords(text));
  }
  throw Error(ErrorKind::internal, "unhandled model");
}

template <class K>
std::vector<json> values_json(const std::vector<K>& v) {
  std::vector<json> out;
  for (const auto& x : v) out.push_back(value_to_json(x));
  return out;
}

Output check_reports(const std::vector<CheckReport>& reports) {
  Output out;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back(check_report_to_json(r));
    out.ok = out.ok && r.ok();
  }
  out.payload = {{"checks", list}, {"ok", out.ok}};
  return out;
}

Output run_transition(const Options& o) {
  const auto d = datum_of(o);
  const Chamber chamber(d.datum);
  const Word from = parse_word(d.datum, o.from), to = parse_word(d.datum, o.to);
  return with_coords(o.semifield, o.coords, [&](auto coords) {
    using K = typename decltype(coords)::value_type;
    Trace<K> trace;
    const auto r = chamber.transition(DecoratedWord<K>{from, coords}, to, o.trace ? &trace : nullptr);
    Output out;
    out.payload = {{"word", word_to_json(d.datum, r.word)},
                   {"coords", values_json(r.coords)},
                   {"decorated", decorated_to_json(d.datum, r.word, r.coords)}};
    if (o.trace) out.trace = trace_to_json(d.datum, trace);
    return out;
  });
}

Output run_lambda_rho(const Options& o, bool lambda) {
  const auto d = datum_of(o);
  const Chamber chamber(d.datum);
  const Word w = parse_word(d.datum, o.word);
  const auto i = d.datum.index_of(o.label);
  return with_coords(o.semifield, o.coords, [&](auto coords) {
    using K = typename decltype(coords)::value_type;
    const auto cp = chamber.canonical(DecoratedWord<K>{w, coords});
    const K v = lambda ? chamber.lambda(cp, i) : chamber.rho(cp, i);
    Output out;
    out.payload = {{"i", o.label}, {lambda ? "lambda" : "rho", value_to_json(v)}};
    return out;
  });
}

Output run_folded_transition(const Options& o) {
  const auto d = datum_of(o);
  if (!d.sigma) throw Error(ErrorKind::usage, "folded transition needs a datum with a diagram automorphism");
  const Folding f(d.datum, *d.sigma);
  const auto& fd = f.folded().folded;
  const Word from = parse_word(fd, o.from), to = parse_word(fd, o.to);
  return with_coords(o.semifield, o.coords, [&](auto coords) {
    using K = typename decltype(coords)::value_type;
    const FoldedTransitionMap map(f, from, to);
    Trace<K> trace;
    const auto r = map.apply(coords, o.trace ? &trace : nullptr);
    Output out;
    out.payload = {{"word", word_to_json(fd, r.word)},
                   {"coords", values_json(r.coords)},
                   {"decorated", decorated_to_json(fd, r.word, r.coords)},
                   {"unfolded_from", word_to_json(d.datum, f.unfold_word(from))},
                   {"unfolded_to", word_to_json(d.datum, f.unfold_word(to))}};
    if (o.trace) out.trace = trace_to_json(d.datum, trace);
    return out;
  });
}

Output run_compare_models(const Options& o) {
  const B2Models m;
  return with_coords(o.semifield, o.coords, [&](auto coords) {
    if (coords.size() != 4) throw Error(ErrorKind::usage, "compare-models takes four coordinates (d,c,b,a)");
    const auto a3 = m.a3_map().apply(coords).coords;
    const auto a4 = m.a4_map().apply(coords).coords;
    const auto cf = b2_closed_form(coords[0], coords[1], coords[2], coords[3]);
    const std::vector closed(cf.begin(), cf.end());
    Output out;
    out.ok = coords_equal(a3, a4);
    out.payload = {{"from", "2 1 2 1"},
                   {"to", "1 2 1 2"},
                   {"via_a3", values_json(a3)},
                   {"via_a4", values_json(a4)},
                   {"closed_form", values_json(closed)},
                   {"models_agree", out.ok},
                   {"closed_form_agrees", coords_equal(a3, closed)}};
    return out;
  });
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_compound(const json& v) { return v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())); }

// Plain-text rendering of a JSON payload: "key: value" lines, nested blocks indented.
std::string render_text(const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  std::string out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      out += is_compound(v) ? pad + k + ":\n" + render_text(v, indent + 2) : pad + k + ": " + render_text(v);
    return out;
  }
  if (is_compound(j)) {
    for (const auto& v : j) out += pad + "-\n" + render_text(v, indent + 2);
    return out;
  }
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? " " : "") + scalar_text(j[k]);
    return out + "\n";
  }
  return scalar_text(j) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foldline: decorated words, foldings and verification"};
  app.require_subcommand(1);
  Options o;
  std::function<Output()> action;

  auto common = [&](CLI::App* c) {
    c->add_option("--datum", o.datum, "builtin name or datum JSON file");
    c->add_option("--builtin", o.builtin_name, "builtin datum name");
    c->add_flag("--json", o.json_out, "print the JSON result");
  };
  auto coords_opts = [&](CLI::App* c) {
    c->add_option("--semifield", o.semifield, "rat, tropz, tropn or sym")->check(CLI::IsMember({"rat", "tropz", "tropn", "sym"}));
    c->add_option("--coords", o.coords, "comma separated coordinates");
  };
  auto random_opts = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--trials", o.trials, "samples per randomized check (0 = defaults)");
    c->add_option("--exec", o.exec, "serial or parallel")->check(CLI::IsMember({"serial", "parallel"}));
  };

  auto* datum_cmd = app.add_subcommand("datum", "validate or fold a Cartan datum");
  datum_cmd->require_subcommand(1);
  auto* validate = datum_cmd->add_subcommand("validate", "validate a datum");
  common(validate);
  validate->callback([&] {
    action = [&] {
      const auto d = datum_of(o);
      return Output{datum_to_json(d.datum, d.sigma ? &*d.sigma : nullptr), {}, {}, true};
    };
  });
  auto fold_action = [&] {
    action = [&] {
      const auto d = datum_of(o);
      const auto sigma = d.sigma ? *d.sigma : DiagramAutomorphism::identity(d.datum);
      return Output{folded_to_json(d.datum, fold(d.datum, sigma)), {}, {}, true};
    };
  };
  auto* fold_cmd = datum_cmd->add_subcommand("fold", "fold a datum by its automorphism");
  common(fold_cmd);
  fold_cmd->callback(fold_action);
  auto* fold_top = app.add_subcommand("fold", "same as datum fold");
  common(fold_top);
  fold_top->callback(fold_action);

  auto* words = app.add_subcommand("words", "reduced words of w0");
  words->require_subcommand(1);
  auto* enumerate = words->add_subcommand("enumerate", "all reduced words of w0 and their braid graph");
  common(enumerate);
  enumerate->add_option("--cap", o.cap, "maximum number of words");
  enumerate->add_flag("--dot", o.dot, "print the graph as DOT");
  enumerate->callback([&] {
    action = [&] {
      const auto d = datum_of(o);
      const WeylGroup g(d.datum);
      const auto graph = enumerate_reduced_words(g, g.longest(), o.cap);
      return Output{graph_to_json(d.datum, graph), {}, o.dot ? to_dot(d.datum, graph) : "", true};
    };
  });
  auto* neighbors = words->add_subcommand("neighbors", "words one braid move away");
  common(neighbors);
  neighbors->add_option("--word", o.word, "reduced word")->required();
  neighbors->callback([&] {
    action = [&] {
      const auto d = datum_of(o);
      const Chamber c(d.datum);
      const Word w = parse_word(d.datum, o.word);
      c.require_reduced(w);
      json list = json::array();
      for (const auto& n : braid_neighbors(d.datum, w))
        list.push_back({{"word", word_to_string(d.datum, n.word, " ")}, {"k", n.move.position + 1}, {"r", n.move.r}});
      return Output{{{"word", word_to_string(d.datum, w, " ")}, {"neighbors", list}}, {}, {}, true};
    };
  });

  auto* transition = app.add_subcommand("transition", "transport coordinates between reduced words");
  common(transition);
  coords_opts(transition);
  transition->add_option("--from", o.from)->required();
  transition->add_option("--to", o.to)->required();
  transition->add_flag("--trace", o.trace, "include the braid-move trace");
  transition->callback([&] { action = [&] { return run_transition(o); }; });

  for (bool is_lambda : {true, false}) {
    auto* c = app.add_subcommand(is_lambda ? "lambda" : "rho",
                                 is_lambda ? "first coordinate on a word starting with i" : "last coordinate on a word ending with i");
    common(c);
    coords_opts(c);
    c->add_option("--word", o.word)->required();
    c->add_option("--i", o.label, "node label")->required();
    c->callback([&, is_lambda] { action = [&, is_lambda] { return run_lambda_rho(o, is_lambda); }; });
  }

  auto* verify = app.add_subcommand("verify", "certificates and property checks");
  verify->require_subcommand(1);
  auto* chain = verify->add_subcommand("chain", "check an embedded chain certificate");
  chain->add_option("--id", o.id, "b2-from-a3 or b2-from-a4")->required();
  chain->add_option("--exec", o.exec)->check(CLI::IsMember({"serial", "parallel"}));
  chain->add_flag("--json", o.json_out);
  chain->callback([&] {
    action = [&] {
      const auto r = verify_chain(embedded_chain(o.id), parse_execution(o.exec));
      return Output{chain_report_to_json(r), {}, {}, r.ok()};
    };
  });
  auto* pi = verify->add_subcommand("path-independence", "symbolic path independence over all reduced words");
  common(pi);
  pi->add_option("--exec", o.exec)->check(CLI::IsMember({"serial", "parallel"}));
  pi->callback([&] {
    action = [&] { return check_reports({check_path_independence(datum_of(o).datum, parse_execution(o.exec))}); };
  });
  auto* trop = verify->add_subcommand("tropical-b2", "B2 closed forms against both models");
  trop->add_flag("--json", o.json_out);
  random_opts(trop);
  trop->callback([&] {
    action = [&] {
      const B2Models m;
      const auto ex = parse_execution(o.exec);
      const auto n = o.trials ? o.trials : 1000;
      return check_reports({check_b2_tropical(m, o.seed, n, ex), check_b2_tropnat(m, o.seed, n, ex)});
    };
  });
  auto* mon = verify->add_subcommand("monoid", "monoid relations, associativity, word choice, string lengths");
  common(mon);
  random_opts(mon);
  mon->callback([&] {
    action = [&] {
      const Monoid m(datum_of(o).datum);
      const auto ex = parse_execution(o.exec);
      auto n = [&](std::size_t def) { return o.trials ? o.trials : def; };
      std::vector<CheckReport> r;
      for (auto c : {check_relation_idempotent(m, o.seed, n(200), ex), check_relation_commuting(m, o.seed, n(200), ex),
                     check_relation_braid(m, o.seed, n(200), ex), check_associativity(m, o.seed, n(200), ex),
                     check_left_mul_word_choice(m, o.seed, n(100), ex), check_string_lengths(m, o.seed, n(200), ex),
                     check_raise_lower(m, o.seed, n(100), ex)})
        if (c.cases) r.push_back(c);
      return check_reports(r);
    };
  });
  auto* frob = verify->add_subcommand("frobenius", "Frobenius endomorphism checks");
  common(frob);
  random_opts(frob);
  frob->callback([&] {
    action = [&] {
      const auto d = datum_of(o);
      const Monoid m(d.datum);
      const auto ex = parse_execution(o.exec);
      auto n = [&](std::size_t def) { return o.trials ? o.trials : def; };
      std::vector<CheckReport> r{check_frobenius_multiplicative(m, o.seed, n(500), ex),
                                 check_frobenius_composition(m, o.seed, n(100), ex)};
      if (d.sigma) r.push_back(check_frobenius_sigma(Folding(d.datum, *d.sigma), m, o.seed, n(100), ex));
      return check_reports(r);
    };
  });
  auto* all = verify->add_subcommand("all", "every desk-scale check");
  all->add_option("--level", o.level)->check(CLI::IsMember({"desk"}));
  all->add_flag("--json", o.json_out);
  random_opts(all);
  all->callback([&] { action = [&] { return check_reports(desk_suite(o.seed, o.trials, parse_execution(o.exec))); }; });

  auto* folded = app.add_subcommand("folded", "folded decorated words");
  folded->require_subcommand(1);
  auto* ft = folded->add_subcommand("transition", "transition between folded reduced words");
  common(ft);
  coords_opts(ft);
  ft->add_option("--from", o.from)->required();
  ft->add_option("--to", o.to)->required();
  ft->add_flag("--trace", o.trace, "include the unfolded braid-move trace");
  ft->callback([&] { action = [&] { return run_folded_transition(o); }; });
  auto* cm = folded->add_subcommand("compare-models", "B2 transition 2121 -> 1212 via A3 and via A4");
  cm->add_flag("--json", o.json_out);
  coords_opts(cm);
  cm->callback([&] { action = [&] { return run_compare_models(o); }; });

  auto* monoid = app.add_subcommand("monoid", "the monoid M0+ in the N-valued model");
  monoid->require_subcommand(1);
  auto* mmul = monoid->add_subcommand("mul", "product of two elements given by base coordinates");
  common(mmul);
  mmul->add_option("--left", o.left)->required();
  mmul->add_option("--right", o.right)->required();
  mmul->callback([&] {
    action = [&] {
      const Monoid m(datum_of(o).datum);
      const auto p = m.mul(m.element(parse_int_list(o.left)), m.element(parse_int_list(o.right)));
      return Output{monoid_element_to_json(m, p), {}, {}, true};
    };
  });
  auto* mfrob = monoid->add_subcommand("frobenius", "scale an element by e");
  common(mfrob);
  mfrob->add_option("--e", o.e)->required();
  mfrob->add_option("--coords", o.coords)->required();
  mfrob->callback([&] {
    action = [&] {
      const Monoid m(datum_of(o).datum);
      return Output{monoid_element_to_json(m, m.frobenius(o.e, m.element(parse_int_list(o.coords)))), {}, {}, true};
    };
  });
  auto* lstring = monoid->add_subcommand("lstring", "l_i and r_i by scan and by coordinate");
  common(lstring);
  lstring->add_option("--coords", o.coords)->required();
  lstring->add_option("--i", o.label, "node label (all nodes if omitted)");
  lstring->callback([&] {
    action = [&] {
      const Monoid m(datum_of(o).datum);
      const auto e = m.element(parse_int_list(o.coords));
      json list = json::array();
      bool ok = true;
      for (std::size_t i = 0; i < m.rank(); ++i) {
        if (!o.label.empty() && m.datum().labels()[i] != o.label) continue;
        const auto ls = m.l_scan(e, i), lc = m.l_coordinate(e, i), rs = m.r_scan(e, i), rc = m.r_coordinate(e, i);
        ok = ok && ls == lc && rs == rc;
        list.push_back({{"i", m.datum().labels()[i]}, {"l_scan", ls}, {"l_coordinate", lc}, {"r_scan", rs}, {"r_coordinate", rc}});
      }
      if (!o.label.empty()) m.datum().index_of(o.label);
      return Output{{{"element", monoid_element_to_json(m, e)}, {"strings", list}}, {}, {}, ok};
    };
  });
  auto* crystal = monoid->add_subcommand("crystal-graph", "raise edges among elements with coordinates <= bound");
  common(crystal);
  crystal->add_option("--bound", o.bound);
  crystal->add_flag("--dot", o.dot, "print DOT");
  crystal->callback([&] {
    action = [&] {
      const Monoid m(datum_of(o).datum);
      const auto dot = m.crystal_graph_dot(o.bound);
      return Output{{{"bound", o.bound}, {"word", word_to_json(m.datum(), m.base_word())}, {"dot", dot}}, {}, o.dot ? dot : "", true};
    };
  });

  json result;
  int code = 0;
  try {
    app.parse(argc, argv);
    const Output out = action();
    if (!out.dot.empty() && !o.json_out) {
      std::cout << out.dot;
      return out.ok ? 0 : 1;
    }
    result = {{"status", out.ok ? "ok" : "failed"}, {"payload", out.payload}};
    if (!out.trace.is_null()) result["trace"] = out.trace;
    code = out.ok ? 0 : 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    result = {{"status", "error"}, {"error", {{"kind", "usage"}, {"message", e.what()}}}};
    code = 2;
  } catch (const Error& e) {
    result = {{"status", "error"}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    code = e.kind() == ErrorKind::usage ? 2 : 1;
  }
  if (o.json_out)
    std::cout << result.dump(2) << "\n";
  else if (result["status"] == "error")
    std::cerr << "error (" << result["error"]["kind"].get<std::string>() << "): "
              << result["error"]["message"].get<std::string>() << "\n";
  else
    std::cout << "status: " << result["status"].get<std::string>() << "\n" << render_text(result["payload"])
              << (result.contains("trace") ? "trace:\n" + render_text(result["trace"], 2) : "");
  return code;
}
