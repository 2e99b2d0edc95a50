#include "oracles.hpp"

#include <deque>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>

#include "vcactus/paths.hpp"

namespace oracle {

using namespace vcactus;

std::vector<NodeSet> connected_subsets_scan(const CartanMatrix& a) {
  const int n = a.rank();
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) members.push_back(k + 1);
    std::set<int> seen{members.front()};
    std::function<void(int)> dfs = [&](int v) {
      for (int w : members)
        if (w != v && a(v, w) != 0 && seen.insert(w).second) dfs(w);
    };
    dfs(members.front());
    if (seen.size() == members.size()) out.emplace_back(mask);
  }
  return out;
}

std::size_t root_count(const CartanMatrix& a) {
  const int n = a.rank();
  auto reflect = [&](WeightVec mu, int i) {
    const long c = mu[static_cast<std::size_t>(i - 1)];
    for (int k = 1; k <= n; ++k) mu[static_cast<std::size_t>(k - 1)] -= c * a(k, i);
    return mu;
  };
  std::set<WeightVec> roots;
  std::deque<WeightVec> queue;
  for (int j = 1; j <= n; ++j) {
    WeightVec alpha(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) alpha[static_cast<std::size_t>(i - 1)] = a(i, j);
    if (roots.insert(alpha).second) queue.push_back(alpha);
  }
  while (!queue.empty()) {
    WeightVec r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      WeightVec s = reflect(r, i);
      if (roots.insert(s).second) queue.push_back(s);
    }
  }
  return roots.size();
}

WeightVec w0_largest_first(const CartanMatrix& a, NodeSet J, const WeightVec& mu) {
  const int n = a.rank();
  auto reflect = [&](WeightVec v, int i) {
    const long c = v[static_cast<std::size_t>(i - 1)];
    for (int k = 1; k <= n; ++k) v[static_cast<std::size_t>(k - 1)] -= c * a(k, i);
    return v;
  };
  WeightVec probe(static_cast<std::size_t>(n), 0);
  for (int j : J.nodes()) probe[static_cast<std::size_t>(j - 1)] = 1;
  std::vector<int> word;
  for (;;) {
    int next = 0;
    auto nodes = J.nodes();
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      if (probe[static_cast<std::size_t>(*it - 1)] > 0) {
        next = *it;
        break;
      }
    }
    if (next == 0) break;
    probe = reflect(probe, next);
    word.push_back(next);
  }
  WeightVec out = mu;
  for (int i : word) out = reflect(out, i);
  return out;
}

std::size_t f_closure_size(DynkinType t, const WeightVec& lambda) {
  const RootSystem rs(t);
  std::unordered_set<std::string> seen;
  std::deque<PLPath> queue{straight_path(rs, lambda)};
  seen.insert(path_key(queue.front()));
  while (!queue.empty()) {
    PLPath p = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      if (auto q = root_f(rs, p, i); q && seen.insert(path_key(*q)).second) queue.push_back(*q);
    }
  }
  return seen.size();
}

std::vector<long> gamma_search(const FoldingPair& F, long bound) {
  const RootSystem rx(F.X);
  const RootSystem ry(F.Y);
  const int n = rx.rank();
  std::vector<long> g(static_cast<std::size_t>(n + 1), 1);
  g[0] = 0;
  for (;;) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const WeightVec alpha = rx.simple_root(i);
      WeightVec lhs(static_cast<std::size_t>(ry.rank()), 0);
      for (int l = 1; l <= n; ++l)
        for (int j : F.sigma_of(l).nodes()) lhs[static_cast<std::size_t>(j - 1)] += alpha[static_cast<std::size_t>(l - 1)] * g[static_cast<std::size_t>(l)];
      WeightVec rhs(static_cast<std::size_t>(ry.rank()), 0);
      for (int j : F.sigma_of(i).nodes()) {
        const WeightVec aj = ry.simple_root(j);
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += g[static_cast<std::size_t>(i)] * aj[k];
      }
      ok = lhs == rhs;
    }
    if (ok) return g;
    int k = 1;
    while (k <= n && ++g[static_cast<std::size_t>(k)] > bound) g[static_cast<std::size_t>(k++)] = 1;
    if (k > n) return {};
  }
}

}  // namespace oracle
