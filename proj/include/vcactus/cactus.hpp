#pragma once

// Partial Schutzenberger-Lusztig involutions xi_J on crystal graphs and the
// cactus-group relations they satisfy.

#include <map>
#include <optional>
#include <vector>

#include "vcactus/cartan.hpp"
#include "vcactus/crystal.hpp"
#include "vcactus/report.hpp"

namespace vcactus {

class VertexPerm {
 public:
  VertexPerm() = default;
  explicit VertexPerm(std::vector<Vertex> image) : img_(std::move(image)) {}
  static VertexPerm identity(std::size_t n);

  std::size_t size() const { return img_.size(); }
  Vertex operator()(Vertex v) const { return img_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& image() const { return img_; }

  bool is_bijection() const;
  bool is_identity() const;
  // First vertex where the two maps differ.
  std::optional<Vertex> first_difference(const VertexPerm& other) const;

  // (a * b)(v) = a(b(v))
  friend VertexPerm operator*(const VertexPerm& a, const VertexPerm& b);
  friend bool operator==(const VertexPerm&, const VertexPerm&) = default;

 private:
  std::vector<Vertex> img_;
};

// A product s_{J_1} s_{J_2} ... s_{J_k} of cactus generators.
struct CactusWord {
  DynkinType type;
  std::vector<NodeSet> letters;

  // Throws DomainError unless every letter is a nonempty connected subdiagram.
  void validate() const;
};

// xi_J(b) = e_{theta(i_r)} ... e_{theta(i_1)}(lowest) where
// b = f_{i_r} ... f_{i_1}(highest) in b's J-component.  Throws
// ConsistencyError if an e-step is undefined.
Vertex xi(const LeviView& view, const NodePerm& theta, Vertex b, ColorOrder order = ColorOrder::ascending);
Vertex xi(const CrystalGraph& g, NodeSet J, Vertex b);

VertexPerm xi_perm(const CrystalGraph& g, NodeSet J);

// Generator permutations of one crystal, computed once.
class CactusAction {
 public:
  // Precomputes xi_J for every connected subdiagram of the crystal's type.
  explicit CactusAction(const CrystalGraph& g, unsigned threads = 1);
  CactusAction(const CrystalGraph& g, const std::vector<NodeSet>& generators, unsigned threads = 1);

  const CrystalGraph& graph() const { return *g_; }
  const VertexPerm& generator(NodeSet J) const;

  // Letters composed right to left: the last letter acts first.
  VertexPerm act(const CactusWord& w) const;

 private:
  const CrystalGraph* g_;
  std::map<NodeSet, VertexPerm> perms_;
};

VertexPerm act(const CrystalGraph& g, const CactusWord& w);

NodeSet theta_image(const RootSystem& rs, NodeSet I, NodeSet J);

// Relation 3 for one pair: compares xi_I xi_J with xi_target xi_I, returning
// a witness vertex where they differ.
std::optional<Vertex> check_relation3(const CactusAction& action, NodeSet I, NodeSet J, NodeSet target);

// Every relation of the cactus group over all pairs of connected subdiagrams:
// (1) xi_J^2 = 1, (2) xi_I xi_J = xi_J xi_I when I u J is disconnected,
// (3) xi_I xi_J = xi_{theta_I(J)} xi_I when J is inside I.
Report verify_cactus_relations(const CrystalGraph& g, unsigned threads = 1);
Report verify_cactus_relations(const CactusAction& action, unsigned threads = 1);

// Certifies each xi_J directly: involution, intertwining with f/e, weight
// twist by w_0^J, and agreement with a second word (descending-colour BFS).
Report verify_xi(const CrystalGraph& g, unsigned threads = 1);

}  // namespace vcactus
