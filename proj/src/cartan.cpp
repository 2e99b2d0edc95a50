#include "vcactus/cartan.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "vcactus/errors.hpp"

namespace vcactus {

bool is_admissible(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1 && rank <= NodeSet::kMaxNode;
    case Family::B:
    case Family::C: return rank >= 2 && rank <= NodeSet::kMaxNode;
    case Family::D: return rank >= 3 && rank <= NodeSet::kMaxNode;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

DynkinType::DynkinType(Family f, int r) : family(f), rank(r) {
  if (!is_admissible(f, r)) {
    throw ConfigError("inadmissible Dynkin type " + std::string(1, static_cast<char>(f)) +
                      std::to_string(r));
  }
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw ConfigError("cannot parse Dynkin type '" + std::string(text) + "'");
  const char c = text.front();
  if (std::string_view("ABCDEFG").find(c) == std::string_view::npos) {
    throw ConfigError("unknown Dynkin family in '" + std::string(text) + "'");
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ConfigError("cannot parse rank in '" + std::string(text) + "'");
  }
  return DynkinType(static_cast<Family>(c), rank);
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

// --- NodeSet ---------------------------------------------------------------

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int n : nodes) insert(n);
}

NodeSet NodeSet::full(int rank) {
  return NodeSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
}

NodeSet NodeSet::from_nodes(const std::vector<int>& nodes) {
  NodeSet s;
  for (int n : nodes) s.insert(n);
  return s;
}

int NodeSet::size() const { return std::popcount(mask_); }

bool NodeSet::contains(int node) const {
  return node >= 1 && node <= kMaxNode && ((mask_ >> (node - 1)) & 1u);
}

int NodeSet::min_node() const { return empty() ? 0 : std::countr_zero(mask_) + 1; }

int NodeSet::max_node() const { return empty() ? 0 : 32 - std::countl_zero(mask_); }

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

NodeSet& NodeSet::insert(int node) {
  if (node < 1 || node > kMaxNode) throw ConfigError("node index out of range: " + std::to_string(node));
  mask_ |= 1u << (node - 1);
  return *this;
}

std::string NodeSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int n : nodes()) {
    if (!first) s += ",";
    s += std::to_string(n);
    first = false;
  }
  return s + "}";
}

NodeSet NodePerm::apply(NodeSet s) const {
  NodeSet out;
  for (int n : s.nodes()) out.insert((*this)(n));
  return out;
}

bool NodePerm::is_identity() const {
  for (int n : domain.nodes())
    if ((*this)(n) != n) return false;
  return true;
}

long Root::height() const {
  long h = 0;
  for (long c : coeffs) h += c;
  return h;
}

// --- RootSystem ------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
  std::vector<std::pair<int, int>> edges;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

// Squared root lengths, short roots normalized to 1.
std::vector<int> root_lengths(const DynkinType& t) {
  const int n = t.rank;
  std::vector<int> len(static_cast<std::size_t>(n), 1);
  switch (t.family) {
    case Family::B:
      for (int i = 1; i < n; ++i) len[static_cast<std::size_t>(i - 1)] = 2;
      break;
    case Family::C: len[static_cast<std::size_t>(n - 1)] = 2; break;
    case Family::F: len = {2, 2, 1, 1}; break;
    case Family::G: len = {1, 3}; break;
    default: break;
  }
  return len;
}

}  // namespace

RootSystem::RootSystem(DynkinType t) : type_(t), cartan_(t.rank), d_(root_lengths(t)) {
  for (int i = 1; i <= t.rank; ++i) cartan_(i, i) = 2;
  for (auto [i, j] : diagram_edges(t)) {
    const int di = d_[static_cast<std::size_t>(i - 1)];
    const int dj = d_[static_cast<std::size_t>(j - 1)];
    const int m = std::max(di, dj);
    cartan_(i, j) = -m / di;
    cartan_(j, i) = -m / dj;
  }
}

void RootSystem::check_node(int i) const {
  if (i < 1 || i > rank()) {
    throw ConfigError("node " + std::to_string(i) + " is not a node of " + type_.name());
  }
}

NodeSet RootSystem::neighbours(int i) const {
  NodeSet s;
  for (int j = 1; j <= rank(); ++j)
    if (adjacent(i, j)) s.insert(j);
  return s;
}

WeightVec RootSystem::simple_root(int j) const {
  check_node(j);
  WeightVec a(static_cast<std::size_t>(rank()));
  for (int i = 1; i <= rank(); ++i) a[static_cast<std::size_t>(i - 1)] = cartan_(i, j);
  return a;
}

WeightVec RootSystem::fundamental_weight(int i) const {
  check_node(i);
  WeightVec w(static_cast<std::size_t>(rank()), 0);
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

WeightVec RootSystem::rho() const { return WeightVec(static_cast<std::size_t>(rank()), 1); }

WeightVec RootSystem::reflect(const WeightVec& mu, int i) const {
  check_node(i);
  WeightVec out = mu;
  const long c = mu[static_cast<std::size_t>(i - 1)];
  for (int k = 1; k <= rank(); ++k) out[static_cast<std::size_t>(k - 1)] -= c * cartan_(k, i);
  return out;
}

RatVec RootSystem::reflect(const RatVec& mu, int i) const {
  check_node(i);
  RatVec out = mu;
  const Rat c = mu[static_cast<std::size_t>(i - 1)];
  for (int k = 1; k <= rank(); ++k) out[static_cast<std::size_t>(k - 1)] -= c * cartan_(k, i);
  return out;
}

std::vector<Root> RootSystem::positive_roots(NodeSet J) const {
  const auto n = static_cast<std::size_t>(rank());
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (int j : J.nodes()) {
    check_node(j);
    std::vector<long> c(n, 0);
    c[static_cast<std::size_t>(j - 1)] = 1;
    if (seen.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int j : J.nodes()) {
      long pairing = 0;  // <beta, alpha_j^vee>
      for (int k = 1; k <= rank(); ++k) pairing += cartan_(j, k) * c[static_cast<std::size_t>(k - 1)];
      auto r = c;
      r[static_cast<std::size_t>(j - 1)] -= pairing;
      if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; })) continue;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<Root> roots;
  for (const auto& c : seen) {
    Root r{c, WeightVec(n, 0)};
    for (int i = 1; i <= rank(); ++i) {
      long w = 0;
      for (int k = 1; k <= rank(); ++k) w += cartan_(i, k) * c[static_cast<std::size_t>(k - 1)];
      r.weight[static_cast<std::size_t>(i - 1)] = w;
    }
    roots.push_back(std::move(r));
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Root& a, const Root& b) { return a.height() < b.height(); });
  return roots;
}

WeylWord RootSystem::longest_word(NodeSet J) const {
  WeightVec mu(static_cast<std::size_t>(rank()), 0);
  for (int j : J.nodes()) {
    check_node(j);
    mu[static_cast<std::size_t>(j - 1)] = 1;
  }
  WeylWord word;
  for (;;) {
    int next = 0;
    for (int j : J.nodes()) {
      if (mu[static_cast<std::size_t>(j - 1)] > 0) {
        next = j;
        break;
      }
    }
    if (next == 0) break;
    mu = reflect(mu, next);
    word.push_back(next);
  }
  return word;
}

WeightVec RootSystem::w0J_apply(NodeSet J, const WeightVec& mu) const {
  WeightVec out = mu;
  const WeylWord word = longest_word(J);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(out, *it);
  return out;
}

NodePerm RootSystem::theta(NodeSet J) const {
  if (J.empty() || !is_connected(J)) {
    throw DomainError("theta requires a nonempty connected node set, got " + J.str());
  }
  NodePerm perm{J, std::vector<int>(static_cast<std::size_t>(rank() + 1), 0)};
  for (int j : J.nodes()) {
    WeightVec v = w0J_apply(J, simple_root(j));
    for (long& x : v) x = -x;
    int match = 0;
    for (int k : J.nodes()) {
      if (simple_root(k) == v) {
        match = k;
        break;
      }
    }
    if (match == 0) {
      throw ConsistencyError("-w0^J alpha_" + std::to_string(j) + " is not a simple root of " + J.str());
    }
    perm.image[static_cast<std::size_t>(j)] = match;
  }
  return perm;
}

NodeSet RootSystem::theta_image(NodeSet I, NodeSet J) const {
  if (!J.subset_of(I)) throw DomainError("theta_image requires " + J.str() + " inside " + I.str());
  return theta(I).apply(J);
}

bool RootSystem::is_connected(NodeSet S) const {
  if (S.empty()) return false;
  NodeSet reached(1u << (S.min_node() - 1));
  for (;;) {
    NodeSet grown = reached;
    for (int n : reached.nodes()) grown = grown | (neighbours(n) & S);
    if (grown == reached) break;
    reached = grown;
  }
  return reached == S;
}

std::vector<NodeSet> RootSystem::connected_subdiagrams() const {
  // Grow connected sets one neighbouring node at a time.
  std::set<NodeSet> found;
  std::deque<NodeSet> queue;
  for (int i = 1; i <= rank(); ++i) {
    NodeSet s{i};
    found.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    NodeSet s = queue.front();
    queue.pop_front();
    NodeSet frontier;
    for (int n : s.nodes()) frontier = frontier | neighbours(n);
    frontier = frontier - s;
    for (int n : frontier.nodes()) {
      NodeSet t = s.with(n);
      if (found.insert(t).second) queue.push_back(t);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<NodeSet> RootSystem::components(NodeSet S) const {
  std::vector<NodeSet> parts;
  NodeSet rest = S;
  while (!rest.empty()) {
    NodeSet piece{rest.min_node()};
    for (;;) {
      NodeSet grown = piece;
      for (int n : piece.nodes()) grown = grown | (neighbours(n) & rest);
      if (grown == piece) break;
      piece = grown;
    }
    parts.push_back(piece);
    rest = rest - piece;
  }
  return parts;
}

Rat RootSystem::coroot_pairing(const Root& alpha, const WeightVec& mu) const {
  // (alpha, alpha)/2 with (alpha_i, alpha_j) = d_i a(i, j).
  Rat norm = 0;
  Rat num = 0;
  for (int i = 1; i <= rank(); ++i) {
    const long ci = alpha.coeffs[static_cast<std::size_t>(i - 1)];
    if (ci == 0) continue;
    num += Rat(ci * symmetrizer(i)) * Rat(mu[static_cast<std::size_t>(i - 1)]);
    for (int j = 1; j <= rank(); ++j) {
      const long cj = alpha.coeffs[static_cast<std::size_t>(j - 1)];
      norm += Rat(ci * cj * symmetrizer(i) * cartan_(i, j));
    }
  }
  norm /= 2;
  return num / norm;
}

BigInt RootSystem::weyl_dim(const WeightVec& lambda) const {
  if (static_cast<int>(lambda.size()) != rank() || !is_dominant(lambda)) {
    throw DomainError("weyl_dim needs a dominant weight of length " + std::to_string(rank()));
  }
  WeightVec shifted = lambda;
  for (long& x : shifted) x += 1;
  const WeightVec r = rho();
  Rat dim = 1;
  for (const Root& alpha : positive_roots(all_nodes())) {
    dim *= coroot_pairing(alpha, shifted) / coroot_pairing(alpha, r);
  }
  if (!is_integer(dim)) throw ConsistencyError("Weyl dimension is not an integer");
  return dim.get_num();
}

CartanMatrix cartan_matrix(DynkinType t) { return RootSystem(t).cartan(); }

WeightVec simple_root(DynkinType t, int j) { return RootSystem(t).simple_root(j); }

bool is_dominant(const WeightVec& mu) {
  return std::all_of(mu.begin(), mu.end(), [](long x) { return x >= 0; });
}

std::string weight_str(const WeightVec& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu[k];
  os << ")";
  return os.str();
}

}  // namespace vcactus
