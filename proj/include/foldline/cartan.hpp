#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foldline/error.hpp"

namespace foldline {

using Matrix = std::vector<std::vector<std::int64_t>>;

/// A finite index set with a symmetric positive definite integer pairing
/// i.j satisfying i.i in 2N_{>0} and 2(i.j)/(i.i) in -N for i != j.
///
/// Instances are only produced by validate_datum(), so every CartanDatum in
/// circulation satisfies those constraints. Nodes are addressed by their
/// position in labels(); labels themselves are opaque strings.
class CartanDatum {
 public:
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& pairing() const { return pairing_; }
  std::size_t rank() const { return labels_.size(); }

  std::int64_t dot(std::size_t i, std::size_t j) const { return pairing_[i][j]; }
  /// 2(i.j)/(i.i), the coefficient in s_i(alpha_j) = alpha_j - a_ij alpha_i.
  std::int64_t cartan_integer(std::size_t i, std::size_t j) const;

  bool simply_laced() const { return simply_laced_; }
  bool irreducible() const { return irreducible_; }

  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.labels_ == b.labels_ && a.pairing_ == b.pairing_;
  }

 private:
  friend CartanDatum validate_datum(std::vector<std::string> labels, Matrix pairing);

  std::vector<std::string> labels_;
  Matrix pairing_;
  bool simply_laced_ = false;
  bool irreducible_ = false;
};

CartanDatum validate_datum(std::vector<std::string> labels, Matrix pairing);

/// h(i,j) in {2,3,4,6}: the length of the braid relation between s_i and s_j.
int h_value(const CartanDatum& datum, std::size_t i, std::size_t j);

/// A pairing-preserving permutation of the nodes, stored as images of indices.
class DiagramAutomorphism {
 public:
  static DiagramAutomorphism identity(const CartanDatum& datum);
  static DiagramAutomorphism from_images(const CartanDatum& datum, std::vector<std::size_t> images);

  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  int order() const { return order_; }
  bool is_identity() const { return order_ == 1; }

 private:
  std::vector<std::size_t> images_;
  int order_ = 1;
};

/// The folded datum (orbits, delta_eta, delta, and the orbit pairing).
struct FoldedDatum {
  /// Orbits as sorted source indices; ordered by their minimum element.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<int> delta_eta;
  int delta = 1;
  /// Labels are the minimum source label of each orbit.
  CartanDatum folded;
  /// orbit_of[i] is the index of the orbit containing source node i.
  std::vector<std::size_t> orbit_of;
};

FoldedDatum fold(const CartanDatum& datum, const DiagramAutomorphism& sigma);

struct Builtin {
  CartanDatum datum;
  std::optional<DiagramAutomorphism> sigma;
};

/// Named data: "A<m>", "A<2n>+flip", "Dstyle:n=<n>", "B:n=<n>", "D4+triality".
Builtin builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace foldline
