#pragma once

// Finite-type root data: Cartan matrices, weights in the fundamental-weight
// basis, simple reflections, longest elements of parabolic subgroups, the
// diagram automorphisms theta_J, and connected subdiagrams.
//
// Nodes are numbered from 1 following Bourbaki (D_n forks at n-1, n; node 2
// of E_n hangs off node 4; node 2 of G_2 is the long root).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "vcactus/rational.hpp"

namespace vcactus {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  // Throws ConfigError unless (family, rank) is an admissible finite type.
  DynkinType(Family f, int r);
  DynkinType() = default;

  // "C2", "A5", "E6".
  static DynkinType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

bool is_admissible(Family f, int rank);

// Subset of the nodes 1..31, stored as a bitmask (bit k-1 <-> node k).
class NodeSet {
 public:
  static constexpr int kMaxNode = 31;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t mask) : mask_(mask) {}
  NodeSet(std::initializer_list<int> nodes);

  static NodeSet full(int rank);
  static NodeSet from_nodes(const std::vector<int>& nodes);

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int node) const;
  bool subset_of(NodeSet other) const { return (mask_ & ~other.mask_) == 0; }
  int min_node() const;
  int max_node() const;
  std::vector<int> nodes() const;

  NodeSet& insert(int node);
  NodeSet with(int node) const { NodeSet s = *this; return s.insert(node); }

  friend NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.mask_ | b.mask_); }
  friend NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.mask_ & b.mask_); }
  friend NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.mask_ & ~b.mask_); }
  friend bool operator==(NodeSet, NodeSet) = default;
  friend auto operator<=>(NodeSet a, NodeSet b) { return a.mask_ <=> b.mask_; }

  // "{1,3}"
  std::string str() const;

 private:
  std::uint32_t mask_ = 0;
};

// Integer weight in fundamental-weight coordinates: w[i-1] = <mu, alpha_i^vee>.
using WeightVec = std::vector<long>;

// A word in the simple reflections, read left to right as r_{w[0]} r_{w[1]} ...
using WeylWord = std::vector<int>;

// Bijection of a node set; image[k] for k in domain, 0 elsewhere.
struct NodePerm {
  NodeSet domain;
  std::vector<int> image;  // indexed by node, size rank+1

  int operator()(int node) const { return image.at(static_cast<std::size_t>(node)); }
  NodeSet apply(NodeSet s) const;
  bool is_identity() const;
};

// Square Cartan matrix with a(i, j) = <alpha_j, alpha_i^vee>, 1-based.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int rank) : rank_(rank), a_(static_cast<std::size_t>(rank * rank), 0) {}

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return a_[index(i, j)]; }
  int& operator()(int i, int j) { return a_[index(i, j)]; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }
  int rank_ = 0;
  std::vector<int> a_;
};

// A positive root alpha = sum_j coeffs[j-1] alpha_j together with its weight.
struct Root {
  std::vector<long> coeffs;
  WeightVec weight;
  long height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

// Immutable Cartan datum for one Dynkin type.  Cheap to build; every
// operation is a pure function of it.
class RootSystem {
 public:
  explicit RootSystem(DynkinType t);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }

  // Symmetrizer: d_i a(i,j) = d_j a(j,i), d_i in {1,2,3} (squared root length).
  int symmetrizer(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
  bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }
  NodeSet all_nodes() const { return NodeSet::full(rank()); }
  NodeSet neighbours(int i) const;

  WeightVec simple_root(int j) const;
  WeightVec fundamental_weight(int i) const;
  WeightVec rho() const;

  WeightVec reflect(const WeightVec& mu, int i) const;
  RatVec reflect(const RatVec& mu, int i) const;

  std::vector<Root> positive_roots(NodeSet J) const;
  WeylWord longest_word(NodeSet J) const;
  WeightVec w0J_apply(NodeSet J, const WeightVec& mu) const;
  NodePerm theta(NodeSet J) const;

  // {theta_I(j) : j in J} for J inside I.
  NodeSet theta_image(NodeSet I, NodeSet J) const;

  bool is_connected(NodeSet S) const;
  std::vector<NodeSet> connected_subdiagrams() const;
  std::vector<NodeSet> components(NodeSet S) const;

  // <mu, alpha^vee> for a positive root alpha, exact.
  Rat coroot_pairing(const Root& alpha, const WeightVec& mu) const;

  BigInt weyl_dim(const WeightVec& lambda) const;

 private:
  void check_node(int i) const;

  DynkinType type_;
  CartanMatrix cartan_;
  std::vector<int> d_;
};

// Free-function surface mirroring the RootSystem members.
CartanMatrix cartan_matrix(DynkinType t);
WeightVec simple_root(DynkinType t, int j);

bool is_dominant(const WeightVec& mu);
std::string weight_str(const WeightVec& mu);

}  // namespace vcactus
