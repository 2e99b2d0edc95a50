#include "vcactus/crystal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "vcactus/errors.hpp"

namespace vcactus {

CrystalGraph::CrystalGraph(DynkinType type, WeightVec highest_weight, std::vector<PLPath> vertices,
                           std::vector<Vertex> f_table, std::vector<Vertex> e_table)
    : rs_(type),
      lambda_(std::move(highest_weight)),
      vertices_(std::move(vertices)),
      f_(std::move(f_table)),
      e_(std::move(e_table)) {
  const std::size_t cells = vertices_.size() * static_cast<std::size_t>(rank());
  if (f_.size() != cells || e_.size() != cells) throw DomainError("operator table size mismatch");
  weights_.reserve(vertices_.size());
  index_.reserve(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    weights_.push_back(vcactus::weight(vertices_[v]));
    index_.emplace_back(path_key(vertices_[v]), static_cast<Vertex>(v));
  }
  std::sort(index_.begin(), index_.end());
}

long CrystalGraph::epsilon(Vertex v, int i) const {
  long n = 0;
  for (Vertex u = e(v, i); u != kNoVertex && n <= static_cast<long>(size()); u = e(u, i)) ++n;
  return n;
}

long CrystalGraph::phi(Vertex v, int i) const {
  long n = 0;
  for (Vertex u = f(v, i); u != kNoVertex && n <= static_cast<long>(size()); u = f(u, i)) ++n;
  return n;
}

std::optional<Vertex> CrystalGraph::find(const PLPath& p) const {
  if (!(p.type() == type())) return std::nullopt;
  const std::string key = path_key(p);
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& entry, const std::string& k) { return entry.first < k; });
  if (it == index_.end() || it->first != key) return std::nullopt;
  return it->second;
}

CrystalGraph generate(DynkinType type, const WeightVec& lambda, std::size_t max_size) {
  const RootSystem rs(type);
  const BigInt dim = rs.weyl_dim(lambda);
  if (max_size != 0 && dim > max_size) {
    throw DomainError("crystal of " + type.name() + " " + weight_str(lambda) + " has " + dim.get_str() +
                      " vertices, above the size limit " + std::to_string(max_size));
  }
  const auto expected = static_cast<std::size_t>(dim.get_ui());
  const auto rank = static_cast<std::size_t>(rs.rank());

  std::vector<PLPath> vertices{straight_path(rs, lambda)};
  std::unordered_map<std::string, Vertex> ids{{path_key(vertices.front()), 0}};
  std::vector<Vertex> f_table;
  std::vector<Vertex> e_table;

  auto intern = [&](const std::optional<PLPath>& p) -> Vertex {
    if (!p) return kNoVertex;
    auto [it, inserted] = ids.try_emplace(path_key(*p), static_cast<Vertex>(vertices.size()));
    if (inserted) vertices.push_back(*p);
    return it->second;
  };

  for (std::size_t v = 0; v < vertices.size(); ++v) {
    f_table.resize((v + 1) * rank, kNoVertex);
    e_table.resize((v + 1) * rank, kNoVertex);
    const PLPath current = vertices[v];
    for (int i = 1; i <= rs.rank(); ++i) {
      f_table[v * rank + static_cast<std::size_t>(i - 1)] = intern(root_f(rs, current, i));
      e_table[v * rank + static_cast<std::size_t>(i - 1)] = intern(root_e(rs, current, i));
    }
    if (vertices.size() > expected) break;
  }
  if (vertices.size() != expected) {
    throw ModelIntegrityError("generated " + std::to_string(vertices.size()) + " paths for " + type.name() + " " +
                              weight_str(lambda) + " but the Weyl dimension is " + dim.get_str());
  }
  return CrystalGraph(type, lambda, std::move(vertices), std::move(f_table), std::move(e_table));
}

Report verify_seminormal(const CrystalGraph& g) {
  Report report{"seminormal", {}};
  const RootSystem& rs = g.root_system();
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex b = 0; b < n; ++b) {
    const WeightVec& wt = g.weight(b);
    for (int i = 1; i <= g.rank(); ++i) {
      const WeightVec alpha = rs.simple_root(i);
      auto shifted = [&](long sign) {
        WeightVec w = wt;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += sign * alpha[k];
        return w;
      };
      if (Vertex u = g.f(b, i); u != kNoVertex) {
        if (g.e(u, i) != b) report.add({"mutual-inverse", 0, {}, {}, b, i, "e_i(f_i(b)) != b"});
        if (g.weight(u) != shifted(-1)) report.add({"weight", 0, {}, {}, b, i, "wt(f_i b) != wt(b) - alpha_i"});
      }
      if (Vertex u = g.e(b, i); u != kNoVertex) {
        if (g.f(u, i) != b) report.add({"mutual-inverse", 0, {}, {}, b, i, "f_i(e_i(b)) != b"});
        if (g.weight(u) != shifted(+1)) report.add({"weight", 0, {}, {}, b, i, "wt(e_i b) != wt(b) + alpha_i"});
      }
      const long eps = g.epsilon(b, i);
      const long ph = g.phi(b, i);
      if (ph - eps != wt[static_cast<std::size_t>(i - 1)]) {
        report.add({"string", 0, {}, {}, b, i, "phi - epsilon != <wt, alpha_i^vee>"});
      }
      if (eps != epsilon(g.path(b), i) || ph != phi(g.path(b), i)) {
        report.add({"closed-form", 0, {}, {}, b, i, "path epsilon/phi disagree with string lengths"});
      }
    }
  }
  return report;
}

// --- Levi views ------------------------------------------------------------

LeviView::LeviView(const CrystalGraph& g, NodeSet J) : g_(&g), J_(J) {
  const std::size_t n = g.size();
  const std::vector<int> colors = J.nodes();
  for (int j : colors) {
    if (j > g.rank()) throw ConfigError("colour " + std::to_string(j) + " is not a node of " + g.type().name());
  }
  comp_of_.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t start = 0; start < n; ++start) {
    if (comp_of_[start] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = comps_.size();
    std::vector<Vertex> members{static_cast<Vertex>(start)};
    comp_of_[start] = c;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int j : colors) {
        for (Vertex u : {g.f(members[k], j), g.e(members[k], j)}) {
          if (u == kNoVertex || comp_of_[static_cast<std::size_t>(u)] != static_cast<std::size_t>(-1)) continue;
          comp_of_[static_cast<std::size_t>(u)] = c;
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comps_.push_back(std::move(members));
  }

  for (std::size_t c = 0; c < comps_.size(); ++c) {
    Vertex hi = kNoVertex;
    Vertex lo = kNoVertex;
    for (Vertex b : comps_[c]) {
      const bool top = std::all_of(colors.begin(), colors.end(), [&](int j) { return g.e(b, j) == kNoVertex; });
      const bool bottom = std::all_of(colors.begin(), colors.end(), [&](int j) { return g.f(b, j) == kNoVertex; });
      if (top) {
        if (hi != kNoVertex) throw ModelIntegrityError("component has two " + J.str() + "-highest vertices");
        hi = b;
      }
      if (bottom) {
        if (lo != kNoVertex) throw ModelIntegrityError("component has two " + J.str() + "-lowest vertices");
        lo = b;
      }
    }
    if (hi == kNoVertex || lo == kNoVertex) {
      throw ModelIntegrityError("component without a " + J.str() + "-highest or lowest vertex");
    }
    highest_.push_back(hi);
    lowest_.push_back(lo);
  }

  parent_.assign(n, kNoVertex);
  parent_color_.assign(n, 0);
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    const std::size_t before = bfs_order_.size();
    bfs(highest_[c], ColorOrder::ascending, parent_, parent_color_, &bfs_order_);
    if (bfs_order_.size() - before != comps_[c].size()) {
      throw ModelIntegrityError("component is not generated by f-operators from its highest vertex");
    }
  }
}

void LeviView::bfs(Vertex root, ColorOrder order, std::vector<Vertex>& parent, std::vector<int>& color,
                   std::vector<Vertex>* visit) const {
  std::vector<int> colors = J_.nodes();
  if (order == ColorOrder::descending) std::reverse(colors.begin(), colors.end());
  std::vector<Vertex> queue{root};
  std::vector<char> seen(g_->size(), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Vertex b = queue[k];
    for (int j : colors) {
      const Vertex u = g_->f(b, j);
      if (u == kNoVertex || seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      parent[static_cast<std::size_t>(u)] = b;
      color[static_cast<std::size_t>(u)] = j;
      queue.push_back(u);
    }
  }
  if (visit) visit->insert(visit->end(), queue.begin(), queue.end());
}

std::vector<int> LeviView::f_word(Vertex b, ColorOrder order) const {
  const Vertex root = highest_[component_index(b)];
  std::vector<int> word;
  if (order == ColorOrder::ascending) {
    for (Vertex u = b; u != root; u = parent_[static_cast<std::size_t>(u)]) {
      word.push_back(parent_color_[static_cast<std::size_t>(u)]);
    }
  } else {
    std::vector<Vertex> parent(g_->size(), kNoVertex);
    std::vector<int> color(g_->size(), 0);
    bfs(root, order, parent, color, nullptr);
    for (Vertex u = b; u != root; u = parent[static_cast<std::size_t>(u)]) {
      word.push_back(color[static_cast<std::size_t>(u)]);
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

LeviView levi(const CrystalGraph& g, NodeSet J) { return LeviView(g, J); }

// --- export ----------------------------------------------------------------

nlohmann::ordered_json crystal_to_json(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["type"] = g.type().name();
  j["highest_weight"] = g.highest_weight();
  auto vertices = nlohmann::ordered_json::array();
  auto edges = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    nlohmann::ordered_json vj;
    vj["id"] = v;
    vj["weight"] = g.weight(v);
    vj["path"] = path_to_json(g.path(v));
    vertices.push_back(std::move(vj));
    for (int i = 1; i <= g.rank(); ++i) {
      if (Vertex u = g.f(v, i); u != kNoVertex) {
        nlohmann::ordered_json ej;
        ej["from"] = v;
        ej["to"] = u;
        ej["color"] = i;
        edges.push_back(std::move(ej));
      }
    }
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

std::string crystal_to_dot(const CrystalGraph& g) {
  static constexpr std::array<const char*, 8> palette = {"red",    "blue",  "darkgreen", "orange",
                                                         "purple", "brown", "magenta",   "cyan"};
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  label=\"" << g.type().name() << " " << weight_str(g.highest_weight()) << "\";\n";
  os << "  node [shape=box];\n";
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    os << "  " << v << " [label=\"" << v << ": " << weight_str(g.weight(v)) << "\"];\n";
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    for (int i = 1; i <= g.rank(); ++i) {
      if (Vertex u = g.f(v, i); u != kNoVertex) {
        os << "  " << v << " -> " << u << " [label=\"" << i << "\", color=\""
           << palette[static_cast<std::size_t>(i - 1) % palette.size()] << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace vcactus
