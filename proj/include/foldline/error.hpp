#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foldline {

enum class ErrorKind {
  usage,
  parse,
  // Cartan data
  not_square,
  duplicate_label,
  asymmetric,
  bad_diagonal,
  positive_off_diagonal,
  non_integral_cartan,
  not_positive_definite,
  same_node,
  unknown_label,
  unknown_builtin,
  invalid_size,
  // automorphisms and folding
  invalid_automorphism,
  not_simply_laced,
  reducible_delta_two,
  non_integral_folding,
  unsupported_orbit,
  incompatible_filling,
  pattern_violation,
  // words
  not_reduced,
  cap_exceeded,
  invalid_move,
  disconnected,
  // semifields
  model_mismatch,
  tropnat_underflow,
  nonpositive_rational,
  division_by_zero,
  // monoid
  negative_exponent,
  not_in_fiber,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace foldline
