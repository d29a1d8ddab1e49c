#include "foldline/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace foldline {

namespace {

bool positive_definite(const Matrix& m) {
  // Fraction-free Gaussian elimination; the k-th pivot is the k-th leading
  // principal minor.
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return true;
}

bool connected(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && m[i][j] != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::int64_t CartanDatum::cartan_integer(std::size_t i, std::size_t j) const {
  return 2 * pairing_[i][j] / pairing_[i][i];
}

std::optional<std::size_t> CartanDatum::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t CartanDatum::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::unknown_label, "unknown node label '" + label + "'");
}

CartanDatum validate_datum(std::vector<std::string> labels, Matrix pairing) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::not_square, "empty label list");
  if (pairing.size() != n)
    throw Error(ErrorKind::not_square, "pairing has " + std::to_string(pairing.size()) +
                                           " rows for " + std::to_string(n) + " labels");
  for (const auto& row : pairing)
    if (row.size() != n) throw Error(ErrorKind::not_square, "pairing is not square");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    throw Error(ErrorKind::duplicate_label, "labels are not distinct");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pairing[i][j] != pairing[j][i])
        throw Error(ErrorKind::asymmetric, "pairing(" + labels[i] + "," + labels[j] + ")=" +
                                               str(pairing[i][j]) + " but pairing(" + labels[j] +
                                               "," + labels[i] + ")=" + str(pairing[j][i]));
  for (std::size_t i = 0; i < n; ++i)
    if (pairing[i][i] <= 0 || pairing[i][i] % 2 != 0)
      throw Error(ErrorKind::bad_diagonal,
                  labels[i] + "." + labels[i] + "=" + str(pairing[i][i]) + " is not a positive even integer");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pairing[i][j] > 0)
        throw Error(ErrorKind::positive_off_diagonal,
                    labels[i] + "." + labels[j] + "=" + str(pairing[i][j]) + " is positive");
      if ((2 * pairing[i][j]) % pairing[i][i] != 0)
        throw Error(ErrorKind::non_integral_cartan,
                    "2(" + labels[i] + "." + labels[j] + ")/(" + labels[i] + "." + labels[i] +
                        ") is not an integer");
    }
  if (!positive_definite(pairing))
    throw Error(ErrorKind::not_positive_definite, "pairing is not positive definite");

  CartanDatum d;
  d.simply_laced_ = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && pairing[i][j] != 2) d.simply_laced_ = false;
      if (i != j && pairing[i][j] != 0 && pairing[i][j] != -1) d.simply_laced_ = false;
    }
  d.irreducible_ = connected(pairing);
  d.labels_ = std::move(labels);
  d.pairing_ = std::move(pairing);
  return d;
}

int h_value(const CartanDatum& datum, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorKind::same_node, "h(i,j) needs i != j");
  switch (datum.cartan_integer(i, j) * datum.cartan_integer(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: break;
  }
  // Positive definiteness bounds the product by 3.
  throw Error(ErrorKind::internal, "Cartan integer product out of range");
}

DiagramAutomorphism DiagramAutomorphism::identity(const CartanDatum& datum) {
  DiagramAutomorphism s;
  s.images_.resize(datum.rank());
  std::iota(s.images_.begin(), s.images_.end(), std::size_t{0});
  return s;
}

DiagramAutomorphism DiagramAutomorphism::from_images(const CartanDatum& datum,
                                                     std::vector<std::size_t> images) {
  const std::size_t n = datum.rank();
  if (images.size() != n)
    throw Error(ErrorKind::invalid_automorphism, "permutation size does not match the datum");
  std::vector<bool> hit(n, false);
  for (auto v : images) {
    if (v >= n || hit[v]) throw Error(ErrorKind::invalid_automorphism, "not a permutation");
    hit[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (datum.dot(images[i], images[j]) != datum.dot(i, j))
        throw Error(ErrorKind::invalid_automorphism,
                    "permutation does not preserve the pairing at (" + datum.labels()[i] + "," +
                        datum.labels()[j] + ")");
  DiagramAutomorphism s;
  s.images_ = std::move(images);
  // order = lcm of cycle lengths
  int order = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = s.images_[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  s.order_ = order;
  return s;
}

FoldedDatum fold(const CartanDatum& datum, const DiagramAutomorphism& sigma) {
  if (!datum.simply_laced())
    throw Error(ErrorKind::not_simply_laced, "folding needs a simply laced datum");
  // Re-check invariance; the automorphism may have been built for another datum.
  auto checked = DiagramAutomorphism::from_images(datum, sigma.images());

  const std::size_t n = datum.rank();
  FoldedDatum f;
  f.orbit_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.orbit_of[i] != n) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; f.orbit_of[j] == n; j = checked(j)) {
      f.orbit_of[j] = f.orbits.size();
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    f.orbits.push_back(std::move(orbit));
  }

  for (const auto& orbit : f.orbits) {
    int d = 1;
    for (auto i : orbit)
      for (auto j : orbit)
        if (i != j && datum.dot(i, j) != 0) d = 2;
    f.delta_eta.push_back(d);
    f.delta = std::max(f.delta, d);
  }
  if (f.delta == 2 && !datum.irreducible())
    throw Error(ErrorKind::reducible_delta_two,
                "an orbit contains joined nodes but the datum is reducible");

  const std::size_t m = f.orbits.size();
  Matrix folded(m, std::vector<std::int64_t>(m, 0));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(datum.labels()[f.orbits[a].front()]);
    for (std::size_t b = 0; b < m; ++b) {
      std::int64_t num;
      if (a == b) {
        num = 2 * f.delta_eta[a] * static_cast<std::int64_t>(f.orbits[a].size());
      } else {
        std::int64_t joined = 0;
        for (auto i : f.orbits[a])
          for (auto j : f.orbits[b])
            if (datum.dot(i, j) != 0) ++joined;
        num = -f.delta_eta[a] * f.delta_eta[b] * joined;
      }
      if (num % f.delta != 0)
        throw Error(ErrorKind::non_integral_folding,
                    "orbit pairing (" + std::to_string(a) + "," + std::to_string(b) + ") is not integral");
      folded[a][b] = num / f.delta;
    }
  }
  f.folded = validate_datum(std::move(labels), std::move(folded));
  return f;
}

namespace {

int parse_size(const std::string& text, const std::string& name) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::invalid_size, "bad size parameter in builtin '" + name + "'");
  return v;
}

Matrix path_matrix(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Builtin builtin(const std::string& name) {
  auto starts = [&](std::string_view p) { return name.rfind(p, 0) == 0; };
  auto ends = [&](std::string_view s) {
    return name.size() >= s.size() && name.compare(name.size() - s.size(), s.size(), s) == 0;
  };

  if (name == "D4+triality") {
    // 2 is the branch node; sigma cycles the leaves 1 -> 3 -> 4 -> 1.
    Matrix m = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    auto d = validate_datum(numbered(4), m);
    auto s = DiagramAutomorphism::from_images(d, {2, 1, 3, 0});
    return {d, s};
  }
  if (starts("Dstyle:n=")) {
    const int n = parse_size(name.substr(9), name);
    if (n < 1) throw Error(ErrorKind::invalid_size, "Dstyle needs n >= 1");
    // I = {1..n, n'}; n' is joined to n-1 only.
    auto labels = numbered(n);
    labels.push_back(std::to_string(n) + "'");
    Matrix m = path_matrix(n + 1);
    m[n - 1][n] = m[n][n - 1] = 0;
    if (n >= 2) m[n - 2][n] = m[n][n - 2] = -1;
    auto d = validate_datum(labels, m);
    std::vector<std::size_t> img(n + 1);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::swap(img[n - 1], img[n]);
    return {d, DiagramAutomorphism::from_images(d, img)};
  }
  if (starts("B:n=")) {
    const int n = parse_size(name.substr(4), name);
    if (n < 1) throw Error(ErrorKind::invalid_size, "B needs n >= 1");
    Matrix m = path_matrix(n);
    m[n - 1][n - 1] = 4;
    if (n >= 2) m[n - 2][n - 1] = m[n - 1][n - 2] = -2;
    return {validate_datum(numbered(n), m), std::nullopt};
  }
  if (starts("A") && ends("+flip")) {
    const int m = parse_size(name.substr(1, name.size() - 6), name);
    if (m < 2 || m % 2 != 0) throw Error(ErrorKind::invalid_size, "the flip needs A_{2n}, n >= 1");
    auto d = validate_datum(numbered(m), path_matrix(m));
    std::vector<std::size_t> img(m);
    for (int i = 0; i < m; ++i) img[i] = static_cast<std::size_t>(m - 1 - i);
    return {d, DiagramAutomorphism::from_images(d, img)};
  }
  if (starts("A")) {
    const int m = parse_size(name.substr(1), name);
    if (m < 1) throw Error(ErrorKind::invalid_size, "A needs m >= 1");
    return {validate_datum(numbered(m), path_matrix(m)), std::nullopt};
  }
  throw Error(ErrorKind::unknown_builtin, "unknown builtin datum '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"A<m>", "A<2n>+flip", "Dstyle:n=<n>", "B:n=<n>", "D4+triality"};
}

}  // namespace foldline
