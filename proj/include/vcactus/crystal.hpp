#pragma once

// Crystal graphs of Littelmann path models P(lambda): generation by operator
// closure, Levi restrictions, and the semi-normal axiom checker.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcactus/cartan.hpp"
#include "vcactus/paths.hpp"
#include "vcactus/report.hpp"

namespace vcactus {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

class CrystalGraph {
 public:
  // Raw assembly from operator tables; f_table[v * rank + (i-1)] is f_i(v)
  // or kNoVertex, likewise e_table.  No axioms are checked here.
  CrystalGraph(DynkinType type, WeightVec highest_weight, std::vector<PLPath> vertices,
               std::vector<Vertex> f_table, std::vector<Vertex> e_table);

  const RootSystem& root_system() const { return rs_; }
  const DynkinType& type() const { return rs_.type(); }
  int rank() const { return rs_.rank(); }
  const WeightVec& highest_weight() const { return lambda_; }

  std::size_t size() const { return vertices_.size(); }
  const PLPath& path(Vertex v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const WeightVec& weight(Vertex v) const { return weights_.at(static_cast<std::size_t>(v)); }

  Vertex f(Vertex v, int i) const { return f_[slot(v, i)]; }
  Vertex e(Vertex v, int i) const { return e_[slot(v, i)]; }

  // Iterated string lengths, read off the graph.
  long epsilon(Vertex v, int i) const;
  long phi(Vertex v, int i) const;

  // Vertex holding this exact path, if any.
  std::optional<Vertex> find(const PLPath& p) const;

  const std::vector<Vertex>& f_table() const { return f_; }
  const std::vector<Vertex>& e_table() const { return e_; }

 private:
  std::size_t slot(Vertex v, int i) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(i - 1);
  }

  RootSystem rs_;
  WeightVec lambda_;
  std::vector<PLPath> vertices_;
  std::vector<WeightVec> weights_;
  std::vector<Vertex> f_;
  std::vector<Vertex> e_;
  std::vector<std::pair<std::string, Vertex>> index_;  // sorted by key
};

// BFS closure of the straight path t -> t*lambda.  Vertex ids follow BFS
// order with colours ascending (f_i before e_i).  Throws ModelIntegrityError
// when the closure size differs from the Weyl dimension, and DomainError when
// the Weyl dimension exceeds max_size (0 = unbounded).
CrystalGraph generate(DynkinType type, const WeightVec& lambda, std::size_t max_size = 0);

// All semi-normal axioms on every (vertex, colour), plus agreement of the
// closed-form epsilon/phi of each path with the graph's string lengths.
Report verify_seminormal(const CrystalGraph& g);

enum class ColorOrder { ascending, descending };

// Restriction of a crystal graph to the colours in J.  Holds a reference to
// the graph, which must outlive the view.
class LeviView {
 public:
  // Throws ModelIntegrityError if some component lacks a unique J-highest or
  // J-lowest vertex.
  LeviView(const CrystalGraph& g, NodeSet J);

  const CrystalGraph& graph() const { return *g_; }
  NodeSet colors() const { return J_; }

  std::size_t component_count() const { return comps_.size(); }
  std::size_t component_index(Vertex b) const { return comp_of_[static_cast<std::size_t>(b)]; }
  const std::vector<Vertex>& component(std::size_t c) const { return comps_.at(c); }
  const std::vector<Vertex>& component_of(Vertex b) const { return comps_.at(component_index(b)); }

  Vertex highest(std::size_t c) const { return highest_.at(c); }
  Vertex lowest(std::size_t c) const { return lowest_.at(c); }

  // Colours (i_1, ..., i_r) with b = f_{i_r} ... f_{i_1}(highest), read off a
  // BFS tree from the component's highest vertex scanning colours in `order`.
  std::vector<int> f_word(Vertex b, ColorOrder order = ColorOrder::ascending) const;

  // Ascending-order BFS tree: parent (kNoVertex at the root) and the colour
  // with b = f_colour(parent).  bfs_order lists each component root-first.
  Vertex tree_parent(Vertex b) const { return parent_[static_cast<std::size_t>(b)]; }
  int tree_color(Vertex b) const { return parent_color_[static_cast<std::size_t>(b)]; }
  const std::vector<Vertex>& bfs_order() const { return bfs_order_; }

 private:
  void bfs(Vertex root, ColorOrder order, std::vector<Vertex>& parent, std::vector<int>& color,
           std::vector<Vertex>* visit) const;

  const CrystalGraph* g_;
  NodeSet J_;
  std::vector<std::vector<Vertex>> comps_;
  std::vector<std::size_t> comp_of_;
  std::vector<Vertex> highest_;
  std::vector<Vertex> lowest_;
  std::vector<Vertex> parent_;
  std::vector<int> parent_color_;
  std::vector<Vertex> bfs_order_;
};

LeviView levi(const CrystalGraph& g, NodeSet J);

// {"type", "highest_weight", "vertices": [{"id","weight","path"}], "edges": [{"from","to","color"}]}
nlohmann::ordered_json crystal_to_json(const CrystalGraph& g);

// Graphviz digraph, one edge per f-arrow labelled and coloured by i.
std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace vcactus
