#include "foldline/chamber.hpp"

namespace foldline {

Chamber::Chamber(CartanDatum datum) : group_(std::move(datum)) {
  if (!group_.datum().simply_laced())
    throw Error(ErrorKind::not_simply_laced, "decorated-word moves need a simply laced datum");
  base_ = group_.lex_least_word(group_.longest());
}

void Chamber::require_reduced(const Word& w) const {
  if (!is_reduced(w))
    throw Error(ErrorKind::not_reduced, "'" + word_to_string(datum(), w, " ") + "' is not a reduced word for w0");
}

}  // namespace foldline
