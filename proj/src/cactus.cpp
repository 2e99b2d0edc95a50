#include "vcactus/cactus.hpp"

#include <algorithm>

#include "vcactus/errors.hpp"
#include "vcactus/parallel.hpp"

namespace vcactus {

VertexPerm VertexPerm::identity(std::size_t n) {
  std::vector<Vertex> img(n);
  for (std::size_t v = 0; v < n; ++v) img[v] = static_cast<Vertex>(v);
  return VertexPerm(std::move(img));
}

bool VertexPerm::is_bijection() const {
  std::vector<char> hit(img_.size(), 0);
  for (Vertex v : img_) {
    if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool VertexPerm::is_identity() const {
  for (std::size_t v = 0; v < img_.size(); ++v)
    if (img_[v] != static_cast<Vertex>(v)) return false;
  return true;
}

std::optional<Vertex> VertexPerm::first_difference(const VertexPerm& other) const {
  for (std::size_t v = 0; v < img_.size(); ++v)
    if (img_[v] != other.img_.at(v)) return static_cast<Vertex>(v);
  return std::nullopt;
}

VertexPerm operator*(const VertexPerm& a, const VertexPerm& b) {
  std::vector<Vertex> img(b.size());
  for (std::size_t v = 0; v < img.size(); ++v) img[v] = a(b(static_cast<Vertex>(v)));
  return VertexPerm(std::move(img));
}

void CactusWord::validate() const {
  const RootSystem rs(type);
  for (NodeSet J : letters) {
    if (!J.subset_of(rs.all_nodes()) || !rs.is_connected(J)) {
      throw DomainError("cactus letter " + J.str() + " is not a connected subdiagram of " + type.name());
    }
  }
}

Vertex xi(const LeviView& view, const NodePerm& theta, Vertex b, ColorOrder order) {
  const CrystalGraph& g = view.graph();
  Vertex out = view.lowest(view.component_index(b));
  for (int i : view.f_word(b, order)) {
    out = g.e(out, theta(i));
    if (out == kNoVertex) {
      throw ConsistencyError("e_" + std::to_string(theta(i)) + " undefined while evaluating xi_" +
                             view.colors().str());
    }
  }
  return out;
}

Vertex xi(const CrystalGraph& g, NodeSet J, Vertex b) {
  const LeviView view(g, J);
  return xi(view, g.root_system().theta(J), b);
}

namespace {

VertexPerm xi_perm(const LeviView& view, const NodePerm& theta) {
  const CrystalGraph& g = view.graph();
  std::vector<Vertex> img(g.size(), kNoVertex);
  for (Vertex b : view.bfs_order()) {
    const Vertex parent = view.tree_parent(b);
    if (parent == kNoVertex) {
      img[static_cast<std::size_t>(b)] = view.lowest(view.component_index(b));
      continue;
    }
    const int colour = theta(view.tree_color(b));
    const Vertex v = g.e(img[static_cast<std::size_t>(parent)], colour);
    if (v == kNoVertex) {
      throw ConsistencyError("e_" + std::to_string(colour) + " undefined while evaluating xi_" + view.colors().str());
    }
    img[static_cast<std::size_t>(b)] = v;
  }
  return VertexPerm(std::move(img));
}

}  // namespace

VertexPerm xi_perm(const CrystalGraph& g, NodeSet J) {
  const LeviView view(g, J);
  return xi_perm(view, g.root_system().theta(J));
}

CactusAction::CactusAction(const CrystalGraph& g, unsigned threads)
    : CactusAction(g, g.root_system().connected_subdiagrams(), threads) {}

CactusAction::CactusAction(const CrystalGraph& g, const std::vector<NodeSet>& generators, unsigned threads)
    : g_(&g) {
  std::vector<VertexPerm> perms(generators.size());
  parallel_for(generators.size(), threads, [&](std::size_t k) { perms[k] = xi_perm(g, generators[k]); });
  for (std::size_t k = 0; k < generators.size(); ++k) perms_.emplace(generators[k], std::move(perms[k]));
}

const VertexPerm& CactusAction::generator(NodeSet J) const {
  auto it = perms_.find(J);
  if (it == perms_.end()) throw DomainError("no precomputed xi for " + J.str());
  return it->second;
}

VertexPerm CactusAction::act(const CactusWord& w) const {
  VertexPerm out = VertexPerm::identity(g_->size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = generator(*it) * out;
  return out;
}

VertexPerm act(const CrystalGraph& g, const CactusWord& w) {
  w.validate();
  VertexPerm out = VertexPerm::identity(g.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = xi_perm(g, *it) * out;
  return out;
}

NodeSet theta_image(const RootSystem& rs, NodeSet I, NodeSet J) { return rs.theta_image(I, J); }

std::optional<Vertex> check_relation3(const CactusAction& action, NodeSet I, NodeSet J, NodeSet target) {
  const VertexPerm& xi_I = action.generator(I);
  return (xi_I * action.generator(J)).first_difference(action.generator(target) * xi_I);
}

Report verify_cactus_relations(const CrystalGraph& g, unsigned threads) {
  return verify_cactus_relations(CactusAction(g, threads), threads);
}

Report verify_cactus_relations(const CactusAction& action, unsigned threads) {
  const RootSystem& rs = action.graph().root_system();
  const std::vector<NodeSet> subs = rs.connected_subdiagrams();
  std::vector<Report> parts(subs.size());
  parallel_for(subs.size(), threads, [&](std::size_t a) {
    const NodeSet I = subs[a];
    Report& r = parts[a];
    const VertexPerm& xi_I = action.generator(I);
    if (auto w = (xi_I * xi_I).first_difference(VertexPerm::identity(xi_I.size()))) {
      r.add({"cactus", 1, I, I, *w, 0, "xi_J^2 != 1"});
    }
    for (NodeSet J : subs) {
      const VertexPerm& xi_J = action.generator(J);
      if (!rs.is_connected(I | J)) {
        if (auto w = (xi_I * xi_J).first_difference(xi_J * xi_I)) {
          r.add({"cactus", 2, I, J, *w, 0, "generators of a disconnected union do not commute"});
        }
      }
      if (J.subset_of(I)) {
        const NodeSet target = rs.theta_image(I, J);
        if (auto w = check_relation3(action, I, J, target)) {
          r.add({"cactus", 3, I, J, *w, 0, "xi_I xi_J != xi_{theta_I(J)} xi_I"});
        }
      }
    }
  });
  Report report{"cactus", {}};
  for (const auto& p : parts) report.merge(p);
  return report;
}

Report verify_xi(const CrystalGraph& g, unsigned threads) {
  const RootSystem& rs = g.root_system();
  const std::vector<NodeSet> subs = rs.connected_subdiagrams();
  std::vector<Report> parts(subs.size());
  parallel_for(subs.size(), threads, [&](std::size_t a) {
    const NodeSet J = subs[a];
    Report& r = parts[a];
    const LeviView view(g, J);
    const NodePerm theta = rs.theta(J);
    const VertexPerm perm = xi_perm(view, theta);
    if (!perm.is_bijection()) r.add({"xi-bijection", 0, {}, J, -1, 0, "xi_J is not a bijection"});
    if (auto w = (perm * perm).first_difference(VertexPerm::identity(g.size()))) {
      r.add({"xi-involution", 0, {}, J, *w, 0, "xi_J(xi_J(b)) != b"});
    }
    for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
      const Vertex image = perm(b);
      if (g.weight(image) != rs.w0J_apply(J, g.weight(b))) {
        r.add({"xi-weight", 0, {}, J, b, 0, "wt(xi_J b) != w_0^J wt(b)"});
      }
      for (int j : J.nodes()) {
        if (Vertex u = g.f(b, j); u != kNoVertex && perm(u) != g.e(image, theta(j))) {
          r.add({"xi-intertwining", 0, {}, J, b, j, "xi_J f_j != e_theta(j) xi_J"});
        }
        if (Vertex u = g.e(b, j); u != kNoVertex && perm(u) != g.f(image, theta(j))) {
          r.add({"xi-intertwining", 0, {}, J, b, j, "xi_J e_j != f_theta(j) xi_J"});
        }
      }
      if (xi(view, theta, b, ColorOrder::descending) != image) {
        r.add({"xi-word-independence", 0, {}, J, b, 0, "second f-word gives a different xi_J(b)"});
      }
    }
  });
  Report report{"xi", {}};
  for (const auto& p : parts) report.merge(p);
  return report;
}

}  // namespace vcactus
