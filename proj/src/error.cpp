#include "foldline/error.hpp"

namespace foldline {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::parse: return "parse";
    case ErrorKind::not_square: return "not_square";
    case ErrorKind::duplicate_label: return "duplicate_label";
    case ErrorKind::asymmetric: return "asymmetric";
    case ErrorKind::bad_diagonal: return "bad_diagonal";
    case ErrorKind::positive_off_diagonal: return "positive_off_diagonal";
    case ErrorKind::non_integral_cartan: return "non_integral_cartan";
    case ErrorKind::not_positive_definite: return "not_positive_definite";
    case ErrorKind::same_node: return "same_node";
    case ErrorKind::unknown_label: return "unknown_label";
    case ErrorKind::unknown_builtin: return "unknown_builtin";
    case ErrorKind::invalid_size: return "invalid_size";
    case ErrorKind::invalid_automorphism: return "invalid_automorphism";
    case ErrorKind::not_simply_laced: return "not_simply_laced";
    case ErrorKind::reducible_delta_two: return "reducible_delta_two";
    case ErrorKind::non_integral_folding: return "non_integral_folding";
    case ErrorKind::unsupported_orbit: return "unsupported_orbit";
    case ErrorKind::incompatible_filling: return "incompatible_filling";
    case ErrorKind::pattern_violation: return "pattern_violation";
    case ErrorKind::not_reduced: return "not_reduced";
    case ErrorKind::cap_exceeded: return "cap_exceeded";
    case ErrorKind::invalid_move: return "invalid_move";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::model_mismatch: return "model_mismatch";
    case ErrorKind::tropnat_underflow: return "tropnat_underflow";
    case ErrorKind::nonpositive_rational: return "nonpositive_rational";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::negative_exponent: return "negative_exponent";
    case ErrorKind::not_in_fiber: return "not_in_fiber";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

}  // namespace foldline
