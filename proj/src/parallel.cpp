#include "foldline/parallel.hpp"

#include <omp.h>

#include "foldline/error.hpp"

namespace foldline {

Execution parse_execution(std::string_view text) {
  if (text == "serial") return Execution::serial;
  if (text == "parallel") return Execution::parallel;
  throw Error(ErrorKind::usage, "execution must be serial or parallel, got '" + std::string(text) + "'");
}

std::string_view to_string(Execution e) { return e == Execution::serial ? "serial" : "parallel"; }

int available_threads() { return omp_get_max_threads(); }

}  // namespace foldline
