#include "vcactus/folding.hpp"

#include <algorithm>
#include <set>

#include "vcactus/errors.hpp"
#include "vcactus/parallel.hpp"

namespace vcactus {

namespace {

using RatMatrix = std::vector<RatVec>;

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rat lead = m[row][col];
    for (Rat& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rat factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

NodePerm make_perm(NodeSet domain, int rank, const std::vector<std::pair<int, int>>& moves) {
  NodePerm p{domain, std::vector<int>(static_cast<std::size_t>(rank + 1), 0)};
  for (int n : domain.nodes()) p.image[static_cast<std::size_t>(n)] = n;
  for (auto [from, to] : moves) p.image[static_cast<std::size_t>(from)] = to;
  return p;
}

// Unique (up to scale) positive gamma with psi(alpha_i) = gamma_i sum_{j in sigma(i)} alpha~_j.
std::vector<long> solve_gamma(const RootSystem& rx, const RootSystem& ry, const std::vector<NodeSet>& sigma) {
  const auto nx = static_cast<std::size_t>(rx.rank());
  RatMatrix m;
  for (int i = 1; i <= rx.rank(); ++i) {
    for (int k = 1; k <= ry.rank(); ++k) {
      RatVec row(nx, Rat(0));
      for (int l = 1; l <= rx.rank(); ++l) {
        if (sigma[static_cast<std::size_t>(l)].contains(k)) row[static_cast<std::size_t>(l - 1)] += rx.cartan()(l, i);
      }
      long rhs = 0;
      for (int j : sigma[static_cast<std::size_t>(i)].nodes()) rhs += ry.cartan()(k, j);
      row[static_cast<std::size_t>(i - 1)] -= rhs;
      m.push_back(std::move(row));
    }
  }
  const auto pivots = rref(m, nx);
  if (pivots.size() + 1 != nx) {
    throw ConsistencyError("root identity does not determine gamma up to scale");
  }
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  RatVec g(nx, Rat(0));
  g[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) g[pivots[r]] = -m[r][free_col];
  Rat smallest = *std::min_element(g.begin(), g.end());
  if (smallest <= 0) throw ConsistencyError("root identity has no positive solution for gamma");
  std::vector<long> gamma{0};
  for (Rat x : g) {
    x /= smallest;
    if (!is_integer(x)) throw ConsistencyError("gamma is not integral after normalization");
    gamma.push_back(x.get_num().get_si());
  }
  return gamma;
}

bool is_automorphism(const RootSystem& rs, const NodePerm& p) {
  for (int i = 1; i <= rs.rank(); ++i)
    for (int j = 1; j <= rs.rank(); ++j)
      if (rs.cartan()(i, j) != rs.cartan()(p(i), p(j))) return false;
  return true;
}

}  // namespace

// --- PsiMap ----------------------------------------------------------------

WeightVec PsiMap::apply(const WeightVec& mu) const {
  WeightVec out(static_cast<std::size_t>(rows_), 0);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c) out[static_cast<std::size_t>(r - 1)] += (*this)(r, c) * mu.at(static_cast<std::size_t>(c - 1));
  return out;
}

RatVec PsiMap::apply(const RatVec& mu) const {
  RatVec out(static_cast<std::size_t>(rows_), Rat(0));
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c) {
      if (const long v = (*this)(r, c); v != 0) out[static_cast<std::size_t>(r - 1)] += v * mu.at(static_cast<std::size_t>(c - 1));
    }
  return out;
}

// --- folding data ----------------------------------------------------------

NodeSet FoldingPair::sigma_of(NodeSet I) const {
  NodeSet out;
  for (int i : I.nodes()) out = out | sigma_of(i);
  return out;
}

bool is_foldable(DynkinType X) {
  return X.family == Family::B || X.family == Family::C || X.family == Family::G || X.family == Family::F;
}

FoldingPair folding_pair(DynkinType X) {
  if (!is_foldable(X)) throw ConfigError(X.name() + " is not a foldable type (expected B, C, F4 or G2)");
  const int n = X.rank;
  FoldingPair F{X, X, std::vector<NodeSet>(static_cast<std::size_t>(n + 1)), {}, {}, 0, {}, {}};
  auto set_sigma = [&](int i, NodeSet s) { F.sigma[static_cast<std::size_t>(i)] = s; };
  std::vector<std::pair<int, int>> aut_moves;
  switch (X.family) {
    case Family::C:
      F.Y = DynkinType(Family::A, 2 * n - 1);
      for (int i = 1; i < n; ++i) {
        set_sigma(i, NodeSet{i, 2 * n - i});
        aut_moves.emplace_back(i, 2 * n - i);
        aut_moves.emplace_back(2 * n - i, i);
      }
      set_sigma(n, NodeSet{n});
      F.branch = n;
      break;
    case Family::B:
      F.Y = DynkinType(Family::D, n + 1);
      for (int i = 1; i < n; ++i) set_sigma(i, NodeSet{i});
      set_sigma(n, NodeSet{n, n + 1});
      aut_moves = {{n, n + 1}, {n + 1, n}};
      F.branch = n - 1;
      break;
    case Family::G:
      F.Y = DynkinType(Family::D, 4);
      set_sigma(1, NodeSet{1, 3, 4});
      set_sigma(2, NodeSet{2});
      aut_moves = {{1, 3}, {3, 4}, {4, 1}};  // triality
      F.branch = 2;
      break;
    case Family::F:
      F.Y = DynkinType(Family::E, 6);
      set_sigma(1, NodeSet{2});
      set_sigma(2, NodeSet{4});
      set_sigma(3, NodeSet{3, 5});
      set_sigma(4, NodeSet{1, 6});
      aut_moves = {{1, 6}, {6, 1}, {3, 5}, {5, 3}};
      F.branch = 2;
      break;
    default: break;
  }
  const RootSystem rx(F.X);
  const RootSystem ry(F.Y);
  F.aut = make_perm(ry.all_nodes(), ry.rank(), aut_moves);
  F.theta_Y_full = ry.theta(ry.all_nodes());
  F.gamma = solve_gamma(rx, ry, F.sigma);
  F.psi = PsiMap(ry.rank(), rx.rank());
  for (int i = 1; i <= n; ++i)
    for (int j : F.sigma_of(i).nodes()) F.psi(j, i) = F.gamma_of(i);
  return F;
}

Report verify_folding_data(const FoldingPair& F) {
  Report report{"folding-data", {}};
  const RootSystem rx(F.X);
  const RootSystem ry(F.Y);

  NodeSet covered;
  for (int i = 1; i <= F.X.rank; ++i) {
    const NodeSet s = F.sigma_of(i);
    if (s.empty() || !(covered & s).empty()) report.add({"sigma-partition", 0, NodeSet{i}, s, -1, i, "overlap or empty class"});
    covered = covered | s;
    // Each class is a single aut-orbit.
    const NodeSet orbit_start{s.min_node()};
    NodeSet orbit = orbit_start;
    for (int k = 0; k < ry.rank(); ++k) orbit = orbit | F.aut.apply(orbit);
    if (orbit != s) report.add({"sigma-orbit", 0, NodeSet{i}, s, -1, i, "class is not an aut-orbit"});
  }
  if (covered != ry.all_nodes()) report.add({"sigma-partition", 0, {}, covered, -1, 0, "classes do not cover Y"});
  if (!is_automorphism(ry, F.aut)) report.add({"aut", 0, {}, {}, -1, 0, "aut is not a diagram automorphism"});

  for (int i = 1; i <= F.X.rank; ++i) {
    for (int j = i + 1; j <= F.X.rank; ++j) {
      bool joined = false;
      for (int a : F.sigma_of(i).nodes())
        for (int b : F.sigma_of(j).nodes()) joined = joined || ry.adjacent(a, b);
      if (joined != rx.adjacent(i, j)) {
        report.add({"sigma-edges", 0, NodeSet{i}, NodeSet{j}, -1, 0, "sigma does not preserve edges"});
      }
    }
  }

  for (int i = 1; i <= F.X.rank; ++i) {
    const WeightVec lhs = F.psi.apply(rx.simple_root(i));
    WeightVec rhs(static_cast<std::size_t>(ry.rank()), 0);
    for (int j : F.sigma_of(i).nodes()) {
      const WeightVec a = ry.simple_root(j);
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += F.gamma_of(i) * a[k];
    }
    if (lhs != rhs) {
      report.add({"root-identity", 0, NodeSet{i}, {}, -1, i, weight_str(lhs) + " != " + weight_str(rhs)});
    }
  }
  return report;
}

WeightVec psi_weight(const FoldingPair& F, const WeightVec& mu) {
  if (static_cast<int>(mu.size()) != F.X.rank) throw DomainError("weight length does not match " + F.X.name());
  return F.psi.apply(mu);
}

PLPath virtualize_path(const FoldingPair& F, const PLPath& path) {
  if (!(path.type() == F.X)) throw DomainError("path is not of type " + F.X.name());
  std::vector<Breakpoint> bps;
  bps.reserve(path.breakpoints().size());
  for (const auto& bp : path.breakpoints()) bps.push_back({bp.t, F.psi.apply(bp.point)});
  return PLPath(F.Y, std::move(bps));
}

PLPath devirtualize(const FoldingPair& F, const PLPath& path) {
  if (!(path.type() == F.Y)) throw DomainError("path is not of type " + F.Y.name());
  const auto cols = static_cast<std::size_t>(F.X.rank);
  std::vector<Breakpoint> bps;
  for (const auto& bp : path.breakpoints()) {
    RatMatrix m;
    for (int r = 1; r <= F.Y.rank; ++r) {
      RatVec row;
      for (int c = 1; c <= F.X.rank; ++c) row.emplace_back(F.psi(r, c));
      row.push_back(bp.point[static_cast<std::size_t>(r - 1)]);
      m.push_back(std::move(row));
    }
    const auto pivots = rref(m, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) {
      throw NotInImage("breakpoint at t=" + to_string(bp.t) + " is not in the image of psi");
    }
    if (pivots.size() != cols) throw NotInImage("psi preimage is not unique");
    RatVec x(cols);
    for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = m[r][cols];
    bps.push_back({bp.t, std::move(x)});
  }
  return PLPath(F.X, std::move(bps));
}

namespace {

template <class Op>
std::optional<PLPath> virtual_op(const FoldingPair& F, const PLPath& path, int i, ColorOrder order, Op op) {
  std::vector<int> colours = F.sigma_of(i).nodes();
  if (order == ColorOrder::descending) std::reverse(colours.begin(), colours.end());
  std::optional<PLPath> cur = path;
  for (int j : colours) {
    for (long k = 0; k < F.gamma_of(i); ++k) {
      cur = op(*cur, j);
      if (!cur) return std::nullopt;
    }
  }
  return cur;
}

}  // namespace

std::optional<PLPath> virtual_f(const FoldingPair& F, const RootSystem& rsY, const PLPath& path, int i,
                                ColorOrder order) {
  return virtual_op(F, path, i, order, [&](const PLPath& p, int j) { return root_f(rsY, p, j); });
}

std::optional<PLPath> virtual_e(const FoldingPair& F, const RootSystem& rsY, const PLPath& path, int i,
                                ColorOrder order) {
  return virtual_op(F, path, i, order, [&](const PLPath& p, int j) { return root_e(rsY, p, j); });
}

CactusWord s_tilde(const FoldingPair& F, NodeSet I) {
  const RootSystem rx(F.X);
  if (!I.subset_of(rx.all_nodes()) || !rx.is_connected(I)) {
    throw DomainError(I.str() + " is not a connected subdiagram of " + F.X.name());
  }
  return CactusWord{F.Y, RootSystem(F.Y).components(F.sigma_of(I))};
}

// --- virtual models --------------------------------------------------------

VirtualModel VirtualModel::build(const FoldingPair& F, const WeightVec& lambda, std::size_t max_size) {
  VirtualModel m{F, nullptr, nullptr, {}};
  auto x = std::make_shared<CrystalGraph>(generate(F.X, lambda, max_size));
  auto y = std::make_shared<CrystalGraph>(generate(F.Y, psi_weight(F, lambda), max_size));
  for (Vertex b = 0; b < static_cast<Vertex>(x->size()); ++b) {
    m.image.push_back(y->find(virtualize_path(F, x->path(b))).value_or(kNoVertex));
  }
  m.x = std::move(x);
  m.y = std::move(y);
  return m;
}

Report verify_virtualization(const VirtualModel& model) {
  Report report{"virtualization", {}};
  const FoldingPair& F = model.fold;
  const CrystalGraph& x = *model.x;
  const CrystalGraph& y = *model.y;
  const RootSystem& ry = y.root_system();

  std::set<Vertex> seen;
  for (Vertex b = 0; b < static_cast<Vertex>(x.size()); ++b) {
    const Vertex img = model.image[static_cast<std::size_t>(b)];
    if (img == kNoVertex) {
      report.add({"image-membership", 0, {}, {}, b, 0, "Psi(b) is not a path of P(psi(lambda))"});
    } else if (!seen.insert(img).second) {
      report.add({"injectivity", 0, {}, {}, b, 0, "Psi identifies two paths"});
    }
  }

  for (Vertex b = 0; b < static_cast<Vertex>(x.size()); ++b) {
    const PLPath vb = virtualize_path(F, x.path(b));
    for (int i = 1; i <= F.X.rank; ++i) {
      auto check = [&](Vertex target, const std::optional<PLPath>& virt, const std::optional<PLPath>& virt_rev,
                       const char* name) {
        if ((target == kNoVertex) != !virt.has_value()) {
          report.add({std::string(name) + "-definedness", 0, {}, {}, b, i, "definedness differs"});
          return;
        }
        if (virt_rev != virt) report.add({std::string(name) + "-order", 0, {}, {}, b, i, "factor order matters"});
        if (target != kNoVertex && !paths_equal(*virt, virtualize_path(F, x.path(target)))) {
          report.add({std::string(name) + "-intertwining", 0, {}, {}, b, i, "Psi does not intertwine"});
        }
      };
      check(x.f(b, i), virtual_f(F, ry, vb, i), virtual_f(F, ry, vb, i, ColorOrder::descending), "f");
      check(x.e(b, i), virtual_e(F, ry, vb, i), virtual_e(F, ry, vb, i, ColorOrder::descending), "e");

      const long g = F.gamma_of(i);
      for (int j : F.sigma_of(i).nodes()) {
        if (epsilon(vb, j) != g * x.epsilon(b, i) || phi(vb, j) != g * x.phi(b, i)) {
          report.add({"string-scaling", 0, {}, {}, b, i,
                      "epsilon~/phi~_" + std::to_string(j) + " != gamma_i * epsilon/phi_i"});
        }
      }
    }
  }
  return report;
}

Report verify_virtualization(const FoldingPair& F, const WeightVec& lambda) {
  return verify_virtualization(VirtualModel::build(F, lambda));
}

Report verify_component_identity(const FoldingPair& F) {
  Report report{"component-identity", {}};
  const RootSystem rx(F.X);
  const RootSystem ry(F.Y);
  const auto subs = rx.connected_subdiagrams();
  for (NodeSet I : subs) {
    const auto parts = ry.components(F.sigma_of(I));
    if (parts.size() < 2) continue;
    for (NodeSet J : subs) {
      if (!J.subset_of(I)) continue;
      const NodeSet lhs = F.sigma_of(rx.theta_image(I, J));
      const NodeSet sj = F.sigma_of(J);
      NodeSet rhs;
      bool disjoint = true;
      for (NodeSet part : parts) {
        const NodeSet piece = ry.theta_image(part, sj & part);
        disjoint = disjoint && (rhs & piece).empty();
        rhs = rhs | piece;
      }
      if (lhs != rhs || !disjoint) {
        report.add({"component-identity", 3, I, J, -1, 0, lhs.str() + " != " + rhs.str()});
      }
    }
  }
  return report;
}

Report verify_virtual_relations(const FoldingPair& F, const CrystalGraph& y, const VirtualWordFn& word_of,
                                unsigned threads) {
  const RootSystem rx(F.X);
  const auto subs = rx.connected_subdiagrams();
  std::vector<CactusWord> words;
  std::set<NodeSet> letters;
  for (NodeSet I : subs) {
    words.push_back(word_of(I));
    words.back().validate();
    letters.insert(words.back().letters.begin(), words.back().letters.end());
  }
  const CactusAction action(y, std::vector<NodeSet>(letters.begin(), letters.end()), threads);
  std::vector<VertexPerm> gens(subs.size());
  parallel_for(subs.size(), threads, [&](std::size_t k) { gens[k] = action.act(words[k]); });
  auto gen_of = [&](NodeSet I) -> const VertexPerm& {
    return gens[static_cast<std::size_t>(std::lower_bound(subs.begin(), subs.end(), I) - subs.begin())];
  };

  std::vector<Report> parts(subs.size());
  parallel_for(subs.size(), threads, [&](std::size_t a) {
    const NodeSet I = subs[a];
    const VertexPerm& sI = gens[a];
    Report& r = parts[a];
    if (auto w = (sI * sI).first_difference(VertexPerm::identity(y.size()))) {
      r.add({"virtual-cactus", 1, I, I, *w, 0, "s~_I^2 != 1"});
    }
    for (std::size_t b = 0; b < subs.size(); ++b) {
      const NodeSet J = subs[b];
      const VertexPerm& sJ = gens[b];
      if (!rx.is_connected(I | J)) {
        if (auto w = (sI * sJ).first_difference(sJ * sI)) {
          r.add({"virtual-cactus", 2, I, J, *w, 0, "s~_I s~_J != s~_J s~_I"});
        }
      }
      if (J.subset_of(I)) {
        const VertexPerm& sT = gen_of(rx.theta_image(I, J));
        if (auto w = (sI * sJ).first_difference(sT * sI)) {
          r.add({"virtual-cactus", 3, I, J, *w, 0, "s~_I s~_J != s~_{theta_I(J)} s~_I"});
        }
      }
    }
  });
  Report report{"virtual-relations", {}};
  for (const auto& p : parts) report.merge(p);
  return report;
}

Report verify_virtual_relations(const FoldingPair& F, const WeightVec& lambda, unsigned threads) {
  const CrystalGraph y = generate(F.Y, psi_weight(F, lambda));
  return verify_virtual_relations(F, y, [&](NodeSet I) { return s_tilde(F, I); }, threads);
}

Report verify_commutative_diagram(const VirtualModel& model, unsigned threads) {
  const FoldingPair& F = model.fold;
  const CrystalGraph& x = *model.x;
  const CrystalGraph& y = *model.y;
  const RootSystem& rx = x.root_system();
  const auto subs = rx.connected_subdiagrams();

  Report report{"diagram", {}};
  for (Vertex b = 0; b < static_cast<Vertex>(x.size()); ++b) {
    if (model.image[static_cast<std::size_t>(b)] == kNoVertex) {
      report.add({"image-membership", 0, {}, {}, b, 0, "Psi(b) is not a path of P(psi(lambda))"});
    }
    try {
      if (!paths_equal(devirtualize(F, virtualize_path(F, x.path(b))), x.path(b))) {
        report.add({"left-inverse", 0, {}, {}, b, 0, "Psi^-1(Psi(b)) != b"});
      }
    } catch (const NotInImage& err) {
      report.add({"left-inverse", 0, {}, {}, b, 0, err.what()});
    }
  }
  if (!report.pass()) return report;

  std::vector<CactusWord> words;
  std::set<NodeSet> letters;
  for (NodeSet I : subs) {
    words.push_back(s_tilde(F, I));
    letters.insert(words.back().letters.begin(), words.back().letters.end());
  }
  const CactusAction xa(x, subs, threads);
  const CactusAction ya(y, std::vector<NodeSet>(letters.begin(), letters.end()), threads);

  std::vector<char> in_image(y.size(), 0);
  for (Vertex v : model.image) in_image[static_cast<std::size_t>(v)] = 1;

  std::vector<Report> parts(subs.size());
  parallel_for(subs.size(), threads, [&](std::size_t a) {
    const NodeSet I = subs[a];
    Report& r = parts[a];
    const CactusWord& w = words[a];
    for (std::size_t p = 0; p < w.letters.size(); ++p) {
      for (std::size_t q = p + 1; q < w.letters.size(); ++q) {
        const VertexPerm& u = ya.generator(w.letters[p]);
        const VertexPerm& v = ya.generator(w.letters[q]);
        if (auto wit = (u * v).first_difference(v * u)) {
          r.add({"letters-commute", 0, I, {}, *wit, 0, "component letters of s~_I do not commute"});
        }
      }
    }
    const VertexPerm xi_virtual = ya.act(w);
    const VertexPerm& xi_x = xa.generator(I);
    for (Vertex b = 0; b < static_cast<Vertex>(x.size()); ++b) {
      const Vertex lhs_x = xi_x(b);
      const Vertex rhs_y = xi_virtual(model.image[static_cast<std::size_t>(b)]);
      const PLPath lhs = virtualize_path(F, x.path(lhs_x));
      if (!paths_equal(lhs, y.path(rhs_y))) {
        r.add({"diagram", 0, I, {}, b, 0, "Psi(xi_I b) != xi~_sigma(I)(Psi b)"});
        continue;
      }
      try {
        if (!paths_equal(devirtualize(F, y.path(rhs_y)), x.path(lhs_x))) {
          r.add({"left-inverse", 0, I, {}, b, 0, "Psi^-1 does not recover xi_I(b)"});
        }
      } catch (const NotInImage& err) {
        r.add({"left-inverse", 0, I, {}, b, 0, err.what()});
      }
    }
    for (Vertex v = 0; v < static_cast<Vertex>(y.size()); ++v) {
      if (in_image[static_cast<std::size_t>(v)] && !in_image[static_cast<std::size_t>(xi_virtual(v))]) {
        r.add({"image-stability", 0, I, {}, v, 0, "s~_I moves an image path outside the image"});
      }
    }
  });
  for (const auto& p : parts) report.merge(p);
  return report;
}

Report verify_commutative_diagram(const FoldingPair& F, const WeightVec& lambda, unsigned threads) {
  return verify_commutative_diagram(VirtualModel::build(F, lambda), threads);
}

nlohmann::ordered_json fold_info_json(const FoldingPair& F) {
  nlohmann::ordered_json j;
  j["X"] = F.X.name();
  j["Y"] = F.Y.name();
  nlohmann::ordered_json sigma;
  nlohmann::ordered_json gamma;
  for (int i = 1; i <= F.X.rank; ++i) {
    sigma[std::to_string(i)] = nodeset_json(F.sigma_of(i));
    gamma[std::to_string(i)] = F.gamma_of(i);
  }
  j["sigma"] = std::move(sigma);
  j["gamma"] = std::move(gamma);
  auto aut = nlohmann::ordered_json::array();
  for (int k = 1; k <= F.Y.rank; ++k) aut.push_back(F.aut(k));
  j["aut"] = std::move(aut);
  j["branch"] = F.branch;
  auto rows = nlohmann::ordered_json::array();
  for (int r = 1; r <= F.psi.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 1; c <= F.psi.cols(); ++c) row.push_back(F.psi(r, c));
    rows.push_back(std::move(row));
  }
  j["psi_matrix"] = std::move(rows);
  return j;
}

}  // namespace vcactus
