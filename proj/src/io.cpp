#include "foldline/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "foldline/expression.hpp"

namespace foldline {

LoadedDatum parse_datum_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("datum JSON: ") + e.what());
  }
  std::vector<std::string> labels;
  Matrix pairing;
  try {
    labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& row : j.at("pairing"))
      for (const auto& x : row)
        if (!x.is_number_integer()) throw Error(ErrorKind::parse, "datum JSON: pairing entries must be integers");
    pairing = j.at("pairing").get<Matrix>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("datum JSON: ") + e.what());
  }
  LoadedDatum out{validate_datum(labels, pairing), std::nullopt};
  if (j.contains("sigma") && !j.at("sigma").is_null()) {
    std::vector<std::size_t> images(out.datum.rank());
    std::vector<bool> seen(out.datum.rank(), false);
    for (const auto& [from, to] : j.at("sigma").items()) {
      if (!to.is_string()) throw Error(ErrorKind::parse, "sigma images must be labels");
      const auto i = out.datum.index_of(from);
      images[i] = out.datum.index_of(to.get<std::string>());
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) images[i] = i;
    out.sigma = DiagramAutomorphism::from_images(out.datum, images);
  }
  return out;
}

LoadedDatum load_datum(const std::string& name_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    std::ifstream in(name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_datum_json(ss.str());
  }
  auto b = builtin(name_or_path);
  return {b.datum, b.sigma};
}

json datum_to_json(const CartanDatum& d, const DiagramAutomorphism* sigma) {
  json out{{"labels", d.labels()}, {"pairing", d.pairing()}};
  Matrix cartan(d.rank(), std::vector<std::int64_t>(d.rank()));
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) cartan[i][j] = d.cartan_integer(i, j);
  out["cartan"] = cartan;
  out["simply_laced"] = d.simply_laced();
  if (sigma) {
    json s = json::object();
    for (std::size_t i = 0; i < d.rank(); ++i) s[d.labels()[i]] = d.labels()[(*sigma)(i)];
    out["sigma"] = s;
    out["sigma_order"] = sigma->order();
  }
  return out;
}

json folded_to_json(const CartanDatum& source, const FoldedDatum& f) {
  json orbits = json::array();
  for (std::size_t k = 0; k < f.orbits.size(); ++k) {
    json members = json::array();
    for (auto i : f.orbits[k]) members.push_back(source.labels()[i]);
    orbits.push_back({{"label", f.folded.labels()[k]}, {"members", members}, {"delta_eta", f.delta_eta[k]}});
  }
  return {{"orbits", orbits}, {"delta", f.delta}, {"datum", datum_to_json(f.folded)}};
}

json word_to_json(const CartanDatum& d, const Word& w) {
  json out = json::array();
  for (auto i : w) out.push_back(d.labels()[i]);
  return out;
}

json graph_to_json(const CartanDatum& d, const WordGraph& g) {
  json vertices = json::array(), edges = json::array();
  for (const auto& w : g.vertices) vertices.push_back(word_to_string(d, w, " "));
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"k", e.move.position + 1}, {"r", e.move.r}});
  return {{"count", g.vertices.size()}, {"words", vertices}, {"edges", edges}};
}

json chain_report_to_json(const ChainReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json step{{"line", s.line}, {"positions", s.positions}, {"move_r", s.move_r}, {"ok", s.ok}};
    if (!s.message.empty()) step["message"] = s.message;
    steps.push_back(std::move(step));
  }
  return {{"id", r.id},
          {"steps", steps},
          {"verified_steps", r.verified_steps()},
          {"final", {{"ok", r.final_ok}, {"message", r.final_message}}},
          {"ok", r.ok()}};
}

json check_report_to_json(const CheckReport& r) {
  json out{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"ok", r.ok()}};
  if (!r.first_failure.empty()) out["first_failure"] = r.first_failure;
  return out;
}

json monoid_element_to_json(const Monoid& m, const MonoidElement& e) {
  return {{"word", word_to_json(m.datum(), m.base_word())}, {"coords", e.coords}};
}

std::vector<std::string> split_coords(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  for (const auto& s : out)
    if (s.empty()) throw Error(ErrorKind::parse, "empty coordinate in '" + text + "'");
  return out;
}

namespace {

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorKind::parse, "'" + s + "' is not an integer");
  return v;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : split_coords(text)) out.push_back(parse_int(s));
  return out;
}

std::vector<PosRational> parse_rat_coords(const std::string& text) {
  std::vector<PosRational> out;
  for (const auto& s : split_coords(text)) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::parse, "'" + s + "' is not a rational number");
    if (q.get_den() == 0) throw Error(ErrorKind::division_by_zero, "'" + s + "' has zero denominator");
    q.canonicalize();
    out.emplace_back(q);
  }
  return out;
}

std::vector<TropInt> parse_tropz_coords(const std::string& text) {
  std::vector<TropInt> out;
  for (auto v : parse_int_list(text)) out.push_back(TropInt{v});
  return out;
}

std::vector<TropNat> parse_tropn_coords(const std::string& text) {
  std::vector<TropNat> out;
  for (auto v : parse_int_list(text)) out.emplace_back(v);
  return out;
}

std::vector<SymRat> parse_sym_coords(const std::string& text) {
  std::vector<Expr> exprs;
  std::vector<std::string> names;
  for (const auto& s : split_coords(text)) {
    exprs.push_back(parse_expression(s));
    collect_identifiers(exprs.back(), names);
  }
  const auto vars = make_variables(names);
  std::vector<SymRat> out;
  for (const auto& e : exprs)
    out.push_back(evaluate<SymRat>(e, [&](const std::string& n) { return SymRat::variable(vars, n); },
                                   SymRat::constant(vars, 1)));
  return out;
}

}  // namespace foldline
