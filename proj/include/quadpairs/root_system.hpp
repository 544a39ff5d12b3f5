#pragma once

// Root systems of the reduced irreducible types, weights in the
// fundamental-weight basis and Weyl orbits.
//
// Conventions:
//   * Nodes follow Bourbaki numbering; indices in the API are 0-based, labels
//     shown to users (w1, w2, ...) are 1-based.
//   * cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple root alpha_j
//     written in the fundamental-weight basis is column j.
//   * Positive roots are stored in the simple-root basis, coroots in the
//     simple-coroot basis, both sorted lexicographically on the root's
//     simple-root coordinates.

#include "quadpairs/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qp {

enum class Family { A, B, C, D, E6, E7, F4, G2 };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Validates rank bounds (A>=1, B,C>=2, D>=3, E/F/G fixed) and throws
  // InvalidTypeError otherwise. For E6/E7/F4/G2 pass rank 0 to take the
  // label's rank.
  static CartanType make(Family family, int rank = 0);

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

std::string family_name(Family family);
std::string to_string(const CartanType& type);
bool is_classical(Family family);

class CartanMatrix {
public:
  CartanMatrix() = default;
  CartanMatrix(int rank, std::vector<int> entries);

  int rank() const { return rank_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) +
                    static_cast<std::size_t>(j)];
  }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
  int rank_ = 0;
  std::vector<int> entries_;
};

CartanMatrix cartan_matrix(const CartanType& type);

enum class LengthClass { Long, Short };

const char* to_string(LengthClass c);

struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

  static Weight zero(int rank);
  // Fundamental weight w_j, j 1-based.
  static Weight fundamental(int rank, int j);

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](std::size_t i) const { return coords[i]; }
  bool is_dominant() const;
  bool is_antidominant() const;
  bool is_zero() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator-(const Weight& w);
std::string to_string(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// Simple reflection s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
Weight reflect(const CartanMatrix& cartan, const Weight& mu, int i);

class RootDatum {
public:
  explicit RootDatum(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }

  std::size_t num_positive_roots() const { return classes_.size(); }
  std::span<const std::int8_t> root(std::size_t i) const;
  std::span<const std::int8_t> coroot(std::size_t i) const;
  LengthClass length_class(std::size_t i) const { return classes_.at(i); }
  bool simply_laced() const { return simply_laced_; }
  bool has_class(LengthClass c) const;
  // First root of the class in the stored order.
  std::optional<std::size_t> representative(LengthClass c) const;
  std::size_t highest_root() const { return highest_; }
  std::optional<std::size_t> find_root(std::span<const int> simple_coords) const;

  // Squared length of alpha_j in units where the shortest simple root is 1.
  int simple_root_length(int j) const { return lengths_.at(static_cast<std::size_t>(j)); }
  // Root i written in the fundamental-weight basis.
  Weight root_as_weight(std::size_t i) const;
  // Coefficients of the sum of all positive coroots in the simple-coroot basis.
  std::span<const long> coroot_sum() const { return coroot_sum_; }

private:
  CartanType type_;
  CartanMatrix cartan_;
  std::vector<int> lengths_;
  std::vector<std::int8_t> roots_;
  std::vector<std::int8_t> coroots_;
  std::vector<LengthClass> classes_;
  std::vector<long> coroot_sum_;
  std::size_t highest_ = 0;
  bool simply_laced_ = true;
};

// Process-wide memo of root data keyed by type.
std::shared_ptr<const RootDatum> shared_root_datum(const CartanType& type);

// <w, alpha^vee> for the positive coroot with the given index.
int pairing(const RootDatum& datum, const Weight& w, std::size_t coroot_index);

// Orbit of a weight under the Weyl group, sorted lexicographically. Stores a
// column-major copy of the coordinates for the vectorised pairing kernels.
class WeightOrbit {
public:
  WeightOrbit() = default;
  WeightOrbit(int rank, std::vector<Weight> weights);

  int rank() const { return rank_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const Weight> weights() const { return weights_; }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index_of(const Weight& w) const;
  bool contains(const Weight& w) const { return index_of(w).has_value(); }

  // out[k] = <orbit[k], coroot> for a coroot in the simple-coroot basis.
  void pairings(std::span<const std::int8_t> coroot,
                std::vector<std::int32_t>& out) const;
  std::vector<std::int32_t> pairings(std::span<const std::int8_t> coroot) const;

private:
  int rank_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::int32_t> columns_;
};

// Breadth-first closure under simple reflections. `w` must be dominant.
WeightOrbit weyl_orbit(const CartanMatrix& cartan, const Weight& w);
WeightOrbit weyl_orbit(const RootDatum& datum, const Weight& w);

// -w0(w): negation of the antidominant element of the orbit of dominant w.
Weight dual_weight(const RootDatum& datum, const Weight& w);
Weight dual_weight(const WeightOrbit& orbit);

BigInt weyl_group_order(const CartanType& type);

// Dynkin diagram adjacency built once from a Cartan matrix so that
// subdiagram queries cost O(rank).
class DynkinDiagram {
public:
  explicit DynkinDiagram(const CartanMatrix& cartan);

  int rank() const { return static_cast<int>(adj_.size()); }

  // Types of the connected components of the subdiagram on the nodes with
  // keep[i] set.
  std::vector<CartanType> components(const std::vector<bool>& keep) const;

  // |W| of the whole diagram.
  const BigInt& weyl_order() const { return weyl_order_; }

  // |W . w| = |W| / |W_J| with J the nodes where the dominant weight w vanishes.
  BigInt orbit_size(const Weight& w) const;

private:
  struct Edge {
    int to;
    int out; // cartan(from, to)
    int in;  // cartan(to, from)
  };
  std::vector<std::vector<Edge>> adj_;
  BigInt weyl_order_;
};

std::vector<CartanType> identify_components(const CartanMatrix& cartan,
                                            const std::vector<bool>& keep);
BigInt weyl_orbit_size(const CartanMatrix& cartan, const Weight& w);

} // namespace qp
