#include "foldline/chains.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include "json.hpp"

#include "foldline/expression.hpp"
#include "foldline/folding.hpp"

namespace foldline {

namespace detail {
extern const std::string_view kChainB2FromA3;
extern const std::string_view kChainB2FromA4;
}  // namespace detail

using nlohmann::json;

ChainData parse_chain(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("chain data: ") + e.what());
  }
  try {
    ChainData d;
    d.version = j.at("version").get<int>();
    if (d.version != 1) throw Error(ErrorKind::parse, "unsupported chain data version " + std::to_string(d.version));
    d.id = j.at("id").get<std::string>();
    d.datum = j.at("datum").get<std::string>();
    d.variables = j.at("variables").get<std::vector<std::string>>();
    if (j.contains("abbreviations"))
      for (const auto& [k, v] : j.at("abbreviations").items()) d.abbreviations.emplace_back(k, v.get<std::string>());
    d.lines = j.at("lines").get<std::vector<std::string>>();
    if (j.contains("notes")) d.notes = j.at("notes").get<std::vector<std::string>>();
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("chain data: ") + e.what());
  }
}

std::string chain_to_json(const ChainData& data) {
  json j;
  j["format"] = "foldline-chain";
  j["version"] = data.version;
  j["id"] = data.id;
  j["datum"] = data.datum;
  j["variables"] = data.variables;
  j["abbreviations"] = json::object();
  for (const auto& [k, v] : data.abbreviations) j["abbreviations"][k] = v;
  j["lines"] = data.lines;
  j["notes"] = data.notes;
  return j.dump(2);
}

namespace {

std::string normalize_id(std::string_view id) {
  std::string out;
  for (char ch : id) out.push_back(ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return out;
}

}  // namespace

std::vector<std::string> embedded_chain_ids() { return {"b2-from-a3", "b2-from-a4"}; }

std::string_view embedded_chain_text(std::string_view id) {
  const auto key = normalize_id(id);
  if (key == "b2-from-a3") return detail::kChainB2FromA3;
  if (key == "b2-from-a4") return detail::kChainB2FromA4;
  throw Error(ErrorKind::usage, "unknown chain id '" + std::string(id) + "' (expected b2-from-a3 or b2-from-a4)");
}

ChainData embedded_chain(std::string_view id) { return parse_chain(embedded_chain_text(id)); }

ChainContext::ChainContext(const ChainData& data)
    : datum_(builtin(data.datum).datum), vars_(make_variables(data.variables)) {
  for (std::size_t k = 0; k < data.variables.size(); ++k)
    names_.emplace_back(data.variables[k], SymRat::variable(vars_, k));
  for (const auto& [name, text] : data.abbreviations) {
    auto v = value(text);
    names_.emplace_back(name, std::move(v));
  }
}

SymRat ChainContext::value(std::string_view expression) const {
  const Expr e = parse_expression(expression);
  auto lookup = [&](const std::string& name) -> SymRat {
    for (const auto& [n, v] : names_)
      if (n == name) return v;
    throw Error(ErrorKind::parse, "unknown name '" + name + "' in '" + std::string(expression) + "'");
  };
  return evaluate<SymRat>(e, lookup, SymRat::constant(vars_, 1));
}

DecoratedWord<SymRat> ChainContext::parse_line(std::string_view line) const {
  DecoratedWord<SymRat> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  skip_space();
  while (pos < line.size()) {
    const auto caret = line.find('^', pos);
    if (caret == std::string_view::npos || caret == pos || caret + 1 >= line.size() || line[caret + 1] != '{')
      throw Error(ErrorKind::parse, "expected label^{exponent} at column " + std::to_string(pos + 1));
    const std::string label(line.substr(pos, caret - pos));
    std::size_t close = caret + 2;
    int depth = 1;
    for (; close < line.size(); ++close) {
      if (line[close] == '{') ++depth;
      if (line[close] == '}' && --depth == 0) break;
    }
    if (close >= line.size()) throw Error(ErrorKind::parse, "unbalanced braces after '" + label + "^'");
    out.word.push_back(datum_.index_of(label));
    out.coords.push_back(value(line.substr(caret + 2, close - caret - 2)));
    pos = close + 1;
    skip_space();
  }
  return out;
}

bool ChainReport::ok() const {
  return final_ok && std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.ok; });
}

std::size_t ChainReport::verified_steps() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const ChainStep& s) { return s.ok; }));
}

std::size_t ChainReport::first_failure() const {
  for (const auto& s : steps)
    if (!s.ok) return s.line;
  return 0;
}

namespace {

ChainStep check_step(const CartanDatum& datum, const DecoratedWord<SymRat>& a, const DecoratedWord<SymRat>& b,
                     std::size_t line) {
  ChainStep step;
  step.line = line;
  if (a.word.size() != b.word.size()) {
    step.message = "lines have different lengths";
    return step;
  }
  std::size_t lo = a.word.size(), hi = 0;
  for (std::size_t k = 0; k < a.word.size(); ++k)
    if (a.word[k] != b.word[k]) {
      lo = std::min(lo, k);
      hi = k;
    }
  if (lo == a.word.size()) {
    step.message = "words are equal; no move";
    return step;
  }
  for (std::size_t k = lo; k <= hi; ++k) step.positions.push_back(k + 1);
  step.move_r = static_cast<int>(hi - lo + 1);
  const BraidMove move{lo, step.move_r};
  if (!is_braid_segment(datum, a.word, lo, step.move_r) || apply_braid(datum, a.word, move) != b.word) {
    step.message = "positions " + std::to_string(lo + 1) + ".." + std::to_string(hi + 1) + " are not a braid move";
    return step;
  }
  if (step.move_r != 2 && step.move_r != 3) {
    step.message = "no elementary move for r = " + std::to_string(step.move_r);
    return step;
  }
  const auto moved = apply_move(datum, a, move);
  for (std::size_t k = 0; k < moved.coords.size(); ++k)
    if (!sym_equal(moved.coords[k], b.coords[k])) {
      step.message = "coordinate " + std::to_string(k + 1) + ": expected " + moved.coords[k].to_string() +
                     ", displayed " + b.coords[k].to_string();
      return step;
    }
  step.ok = true;
  return step;
}

}  // namespace

ChainReport verify_chain(const ChainData& data, Execution ex) {
  if (data.lines.size() < 2) throw Error(ErrorKind::parse, "a chain needs at least two lines");
  const ChainContext ctx(data);
  const Chamber chamber(ctx.datum());

  const auto lines = map_indices(data.lines.size(), ex, [&](std::size_t k) { return ctx.parse_line(data.lines[k]); });
  chamber.require_reduced(lines.front().word);

  ChainReport report;
  report.id = data.id;
  report.steps = map_indices(lines.size() - 1, ex,
                             [&](std::size_t k) { return check_step(ctx.datum(), lines[k], lines[k + 1], k + 1); });

  const auto b = builtin(data.datum);
  if (!b.sigma) throw Error(ErrorKind::usage, "chain datum '" + data.datum + "' has no diagram automorphism");
  const Folding folding(b.datum, *b.sigma);
  const auto& fd = folding.folded().folded;
  if (fd.rank() != 2 || fd.dot(0, 0) != 2 || fd.dot(1, 1) != 4) {
    report.final_message = "folded datum is not B2; no closed form to compare";
    return report;
  }
  try {
    const auto first = folding.read_blocks(lines.front()).folded;
    const auto last = folding.read_blocks(lines.back()).folded;
    const Word long_first{1, 0, 1, 0}, short_first{0, 1, 0, 1};
    const auto& c = first.coords;
    std::array<SymRat, 4> expected;
    Word expected_word;
    if (first.word == long_first) {
      expected = b2_closed_form(c[0], c[1], c[2], c[3]);
      expected_word = short_first;
    } else {
      expected = b2_closed_form_reversed(c[0], c[1], c[2], c[3]);
      expected_word = long_first;
    }
    if (last.word != expected_word) {
      report.final_message = "last line does not fold to the opposite B2 word";
      return report;
    }
    for (std::size_t k = 0; k < 4; ++k)
      if (!sym_equal(last.coords[k], expected[k])) {
        report.final_message = "folded coordinate " + std::to_string(k + 1) + " differs from the closed form";
        return report;
      }
    report.final_ok = true;
    report.final_message = "last line equals the closed form";
  } catch (const Error& e) {
    report.final_message = e.what();
  }
  return report;
}

}  // namespace foldline
