#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foldline/chamber.hpp"
#include "foldline/parallel.hpp"
#include "foldline/semifield.hpp"

namespace foldline {

/// A displayed sequence of decorated words, each joined to the next by one
/// elementary move. Lines read like "2^{d} 2'^{d} 1^{c}"; exponents are
/// subtraction-free expressions in `variables` and `abbreviations`.
struct ChainData {
  int version = 1;
  std::string id;
  std::string datum;  // builtin name
  std::vector<std::string> variables;
  std::vector<std::pair<std::string, std::string>> abbreviations;
  std::vector<std::string> lines;
  std::vector<std::string> notes;
};

ChainData parse_chain(std::string_view json_text);
std::string chain_to_json(const ChainData& data);

/// Ids of the chains compiled into the library: b2-from-a3, b2-from-a4.
/// Lookup also accepts B2_FROM_A3 style spellings.
std::vector<std::string> embedded_chain_ids();
std::string_view embedded_chain_text(std::string_view id);
ChainData embedded_chain(std::string_view id);

/// Symbolic environment of a chain: its variables and expanded abbreviations.
class ChainContext {
 public:
  explicit ChainContext(const ChainData& data);
  const CartanDatum& datum() const { return datum_; }
  const VariableSetPtr& variables() const { return vars_; }
  SymRat value(std::string_view expression) const;
  DecoratedWord<SymRat> parse_line(std::string_view line) const;

 private:
  CartanDatum datum_;
  VariableSetPtr vars_;
  std::vector<std::pair<std::string, SymRat>> names_;
};

struct ChainStep {
  std::size_t line = 0;                // 1-based index of the first line of the pair
  std::vector<std::size_t> positions;  // 1-based positions changed by the move
  int move_r = 0;
  bool ok = false;
  std::string message;
};

struct ChainReport {
  std::string id;
  std::vector<ChainStep> steps;
  bool final_ok = false;
  std::string final_message;

  bool ok() const;
  std::size_t verified_steps() const;
  /// 1-based line of the first failing step, 0 if none.
  std::size_t first_failure() const;
};

/// Checks each consecutive pair as an elementary move over the symbolic
/// semifield, then compares the folded reading of the last line with the B2
/// closed form applied to the first.
ChainReport verify_chain(const ChainData& data, Execution ex = Execution::serial);

}  // namespace foldline
