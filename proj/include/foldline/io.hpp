#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "foldline/chains.hpp"
#include "foldline/folding.hpp"
#include "foldline/monoid.hpp"
#include "foldline/verify.hpp"

namespace foldline {

using nlohmann::json;

struct LoadedDatum {
  CartanDatum datum;
  std::optional<DiagramAutomorphism> sigma;
};

/// {"labels": [...], "pairing": [[...]], "sigma": {"label": "label", ...}}; sigma optional.
LoadedDatum parse_datum_json(const std::string& text);
/// A builtin name, or else the path of a datum JSON file.
LoadedDatum load_datum(const std::string& name_or_path);

json datum_to_json(const CartanDatum& d, const DiagramAutomorphism* sigma = nullptr);
json folded_to_json(const CartanDatum& source, const FoldedDatum& f);
json word_to_json(const CartanDatum& d, const Word& w);
json graph_to_json(const CartanDatum& d, const WordGraph& g);
json chain_report_to_json(const ChainReport& r);
json check_report_to_json(const CheckReport& r);
json monoid_element_to_json(const Monoid& m, const MonoidElement& e);

inline json value_to_json(const TropInt& v) { return v.value; }
inline json value_to_json(const TropNat& v) { return v.value(); }
inline json value_to_json(const PosRational& v) { return to_string(v); }
inline json value_to_json(const SymRat& v) { return v.to_string(); }

/// [{"i": label, "c": value}, ...]
template <Semifield K>
json decorated_to_json(const CartanDatum& d, const Word& w, const std::vector<K>& coords) {
  json out = json::array();
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back({{"i", d.labels()[w[k]]}, {"c", value_to_json(coords[k])}});
  return out;
}

template <Semifield K>
json trace_to_json(const CartanDatum& d, const Trace<K>& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    json s{{"word", decorated_to_json(d, step.state.word, step.state.coords)}};
    if (step.move) s["move"] = {{"k", step.move->position + 1}, {"r", step.move->r}};
    out.push_back(std::move(s));
  }
  return out;
}

/// Comma separated coordinates. rat accepts p/q, tropz any integer, tropn
/// nonnegative integers; sym accepts subtraction-free expressions whose
/// identifiers become the variables (in order of first appearance).
std::vector<std::string> split_coords(const std::string& text);
std::vector<PosRational> parse_rat_coords(const std::string& text);
std::vector<TropInt> parse_tropz_coords(const std::string& text);
std::vector<TropNat> parse_tropn_coords(const std::string& text);
std::vector<SymRat> parse_sym_coords(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace foldline
