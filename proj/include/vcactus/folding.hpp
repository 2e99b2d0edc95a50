#pragma once

// Folding X -> Y of a non-simply-laced diagram into a simply-laced one, the
// induced weight map psi and path map Psi, virtual root operators, and the
// virtual cactus generators.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "vcactus/cactus.hpp"
#include "vcactus/cartan.hpp"
#include "vcactus/crystal.hpp"
#include "vcactus/paths.hpp"
#include "vcactus/report.hpp"

namespace vcactus {

// Integer matrix of shape rank(Y) x rank(X); column i is psi(Lambda_i^X).
class PsiMap {
 public:
  PsiMap() = default;
  PsiMap(int rows, int cols) : rows_(rows), cols_(cols), m_(static_cast<std::size_t>(rows * cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long operator()(int r, int c) const { return m_[index(r, c)]; }
  long& operator()(int r, int c) { return m_[index(r, c)]; }

  WeightVec apply(const WeightVec& mu) const;
  RatVec apply(const RatVec& mu) const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>((r - 1) * cols_ + (c - 1)); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long> m_;
};

struct FoldingPair {
  DynkinType X;
  DynkinType Y;
  std::vector<NodeSet> sigma;  // indexed by X node; sigma[0] unused
  NodePerm aut;
  std::vector<long> gamma;  // indexed by X node; gamma[0] unused
  int branch = 0;
  NodePerm theta_Y_full;
  PsiMap psi;

  NodeSet sigma_of(int i) const { return sigma.at(static_cast<std::size_t>(i)); }
  NodeSet sigma_of(NodeSet I) const;
  long gamma_of(int i) const { return gamma.at(static_cast<std::size_t>(i)); }
};

// Supported X: C_n (-> A_{2n-1}), B_n (-> D_{n+1}), G_2 (-> D_4), F_4 (-> E_6).
// gamma is solved from the root identity psi(alpha_i) = gamma_i sum alpha~_j
// and normalized to smallest value 1.  Throws ConfigError for other X.
FoldingPair folding_pair(DynkinType X);

bool is_foldable(DynkinType X);

// Checks: sigma partitions Y into aut-orbits, sigma is an edge-preserving
// bijection X -> Y/aut, aut is a diagram automorphism, and the root identity.
Report verify_folding_data(const FoldingPair& F);

WeightVec psi_weight(const FoldingPair& F, const WeightVec& mu);

PLPath virtualize_path(const FoldingPair& F, const PLPath& path);

// Left inverse of Psi, solving psi(x) = p for every breakpoint exactly.
// Throws NotInImage when some breakpoint is off the image or the solution is
// not unique.
PLPath devirtualize(const FoldingPair& F, const PLPath& path);

// prod_{j in sigma(i)} f~_j^{gamma_i}, factors applied in `order`.
std::optional<PLPath> virtual_f(const FoldingPair& F, const RootSystem& rsY, const PLPath& path, int i,
                                ColorOrder order = ColorOrder::ascending);
std::optional<PLPath> virtual_e(const FoldingPair& F, const RootSystem& rsY, const PLPath& path, int i,
                                ColorOrder order = ColorOrder::ascending);

// Connected components of sigma(I), ascending by smallest node.
CactusWord s_tilde(const FoldingPair& F, NodeSet I);

// P(lambda), P(psi(lambda)) and the image of every X-vertex.
struct VirtualModel {
  FoldingPair fold;
  std::shared_ptr<const CrystalGraph> x;
  std::shared_ptr<const CrystalGraph> y;
  std::vector<Vertex> image;  // Y-vertex of Psi(b), kNoVertex if Psi(b) is not in P(psi(lambda))

  static VirtualModel build(const FoldingPair& F, const WeightVec& lambda, std::size_t max_size = 0);
};

Report verify_virtualization(const VirtualModel& model);
Report verify_virtualization(const FoldingPair& F, const WeightVec& lambda);

// For every connected nested J in I with sigma(I) disconnected:
// sigma(theta_I(J)) = disjoint union over components I~_k of theta_{I~_k}(sigma(J) n I~_k).
Report verify_component_identity(const FoldingPair& F);

using VirtualWordFn = std::function<CactusWord(NodeSet)>;

// Images of the cactus relations of X under I -> s~_I, acting on P(psi(lambda)).
Report verify_virtual_relations(const FoldingPair& F, const CrystalGraph& y, const VirtualWordFn& word_of,
                                unsigned threads = 1);
Report verify_virtual_relations(const FoldingPair& F, const WeightVec& lambda, unsigned threads = 1);

// Psi xi^X_I = xi~_{sigma(I)} Psi on every vertex, image stability of every
// s~_I, and Psi^{-1} recovering both sides.
Report verify_commutative_diagram(const VirtualModel& model, unsigned threads = 1);
Report verify_commutative_diagram(const FoldingPair& F, const WeightVec& lambda, unsigned threads = 1);

// {"X","Y","sigma":{i:[j...]},"gamma":{i:g},"aut":[...],"branch":x0,"psi_matrix":[[..]]}
nlohmann::ordered_json fold_info_json(const FoldingPair& F);

}  // namespace vcactus
