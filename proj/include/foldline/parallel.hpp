#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <string_view>
#include <vector>

namespace foldline {

/// Every kernel has a plain serial loop kept as the reference and an OpenMP
/// version; both must give identical results.
enum class Execution { serial, parallel };

Execution parse_execution(std::string_view text);
std::string_view to_string(Execution e);
int available_threads();

/// out[k] = fn(k) for k < n. Exceptions thrown by fn are rethrown on the
/// calling thread (the one with the smallest index wins).
template <class Fn>
auto map_indices(std::size_t n, Execution ex, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  if (ex == Execution::serial) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    try {
      out[k] = fn(static_cast<std::size_t>(k));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace foldline
