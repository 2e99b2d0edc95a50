#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vcactus/cartan.hpp"
#include "vcactus/errors.hpp"

using namespace vcactus;

namespace {

std::vector<DynkinType> small_types() {
  std::vector<DynkinType> ts;
  for (int n = 1; n <= 6; ++n) ts.emplace_back(Family::A, n);
  for (int n = 2; n <= 6; ++n) {
    ts.emplace_back(Family::B, n);
    ts.emplace_back(Family::C, n);
  }
  for (int n = 3; n <= 6; ++n) ts.emplace_back(Family::D, n);
  ts.emplace_back(Family::E, 6);
  ts.emplace_back(Family::F, 4);
  ts.emplace_back(Family::G, 2);
  return ts;
}

WeightVec random_weight(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<long> d(-5, 5);
  WeightVec w(static_cast<std::size_t>(rank));
  for (auto& x : w) x = d(rng);
  return w;
}

}  // namespace

TEST_CASE("DynkinType parsing and admissibility") {
  CHECK(DynkinType::parse("C2") == DynkinType(Family::C, 2));
  CHECK(DynkinType::parse("E6").name() == "E6");
  CHECK_THROWS_AS(DynkinType::parse("Z9"), ConfigError);
  CHECK_THROWS_AS(DynkinType::parse("B1"), ConfigError);
  CHECK_THROWS_AS(DynkinType::parse("E9"), ConfigError);
  CHECK_THROWS_AS(DynkinType::parse("G3"), ConfigError);
  CHECK_THROWS_AS(DynkinType::parse("A"), ConfigError);
  CHECK_THROWS_AS(DynkinType::parse("A2x"), ConfigError);
}

TEST_CASE("cartan_matrix examples") {
  const CartanMatrix a1 = cartan_matrix(DynkinType(Family::A, 1));
  CHECK(a1.rank() == 1);
  CHECK(a1(1, 1) == 2);

  const CartanMatrix c2 = cartan_matrix(DynkinType(Family::C, 2));
  CHECK(c2(1, 1) == 2);
  CHECK(c2(1, 2) == -2);
  CHECK(c2(2, 1) == -1);
  CHECK(c2(2, 2) == 2);

  const RootSystem d4(DynkinType(Family::D, 4));
  CHECK(d4.neighbours(2) == NodeSet{1, 3, 4});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      CHECK(d4.cartan()(i, j) == d4.cartan()(j, i));
      if (i != j) CHECK((d4.cartan()(i, j) == 0 || d4.cartan()(i, j) == -1));
    }

  // E6: node 2 hangs off node 4.
  CHECK(RootSystem(DynkinType(Family::E, 6)).neighbours(4) == NodeSet{2, 3, 5});
}

TEST_CASE("cartan matrices satisfy the axioms and admit a symmetrizer in {1,2,3}") {
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    const auto& a = rs.cartan();
    for (int i = 1; i <= t.rank; ++i) {
      CHECK(a(i, i) == 2);
      CHECK(rs.symmetrizer(i) >= 1);
      CHECK(rs.symmetrizer(i) <= 3);
      for (int j = 1; j <= t.rank; ++j) {
        if (i == j) continue;
        CHECK(a(i, j) <= 0);
        CHECK((a(i, j) == 0) == (a(j, i) == 0));
        CHECK(rs.symmetrizer(i) * a(i, j) == rs.symmetrizer(j) * a(j, i));
      }
    }
  }
}

TEST_CASE("simple_root columns") {
  CHECK(simple_root(DynkinType(Family::A, 2), 1) == WeightVec{2, -1});
  CHECK(simple_root(DynkinType(Family::C, 2), 2) == WeightVec{-2, 2});
  CHECK(simple_root(DynkinType(Family::G, 2), 2) == WeightVec{-3, 2});
}

TEST_CASE("reflect") {
  const RootSystem a2(DynkinType(Family::A, 2));
  CHECK(a2.reflect(a2.fundamental_weight(2), 1) == a2.fundamental_weight(2));
  CHECK(a2.reflect(a2.fundamental_weight(1), 1) == WeightVec{-1, 1});

  std::mt19937 rng(7);
  for (const auto& t : small_types()) {
    const RootSystem rs(t);
    for (int trial = 0; trial < 20; ++trial) {
      const WeightVec mu = random_weight(rng, t.rank);
      for (int i = 1; i <= t.rank; ++i) CHECK(rs.reflect(rs.reflect(mu, i), i) == mu);
    }
  }
}

TEST_CASE("positive_roots agree with the root-orbit oracle") {
  CHECK(RootSystem(DynkinType(Family::A, 2)).positive_roots(NodeSet::full(2)).size() == 3);
  CHECK(RootSystem(DynkinType(Family::C, 2)).positive_roots(NodeSet::full(2)).size() == 4);
  CHECK(RootSystem(DynkinType(Family::A, 3)).positive_roots(NodeSet{}).empty());
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    CHECK(2 * rs.positive_roots(rs.all_nodes()).size() == oracle::root_count(rs.cartan()));
  }
  // Type A closed form n(n+1)/2.
  for (int n = 1; n <= 6; ++n) {
    CHECK(RootSystem(DynkinType(Family::A, n)).positive_roots(NodeSet::full(n)).size() ==
          static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST_CASE("longest_word lengths and w0 action") {
  const RootSystem a1(DynkinType(Family::A, 1));
  CHECK(a1.longest_word(NodeSet{1}) == WeylWord{1});
  CHECK(RootSystem(DynkinType(Family::A, 2)).longest_word(NodeSet{1, 2}).size() == 3);
  CHECK(RootSystem(DynkinType(Family::C, 2)).longest_word(NodeSet{1, 2}).size() == 4);

  CHECK(a1.w0J_apply(NodeSet{}, WeightVec{3}) == WeightVec{3});
  CHECK(a1.w0J_apply(NodeSet{1}, WeightVec{1}) == WeightVec{-1});

  std::mt19937 rng(11);
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    for (NodeSet J : rs.connected_subdiagrams()) {
      CAPTURE(J.str());
      CHECK(rs.longest_word(J).size() == rs.positive_roots(J).size());
      for (int trial = 0; trial < 3; ++trial) {
        const WeightVec mu = random_weight(rng, t.rank);
        const WeightVec once = rs.w0J_apply(J, mu);
        CHECK(rs.w0J_apply(J, once) == mu);
        CHECK(once == oracle::w0_largest_first(rs.cartan(), J, mu));
      }
      // J-dominant -> J-antidominant on J coordinates.
      WeightVec dom(static_cast<std::size_t>(t.rank), 0);
      for (int j : J.nodes()) dom[static_cast<std::size_t>(j - 1)] = j;
      const WeightVec low = rs.w0J_apply(J, dom);
      for (int j : J.nodes()) CHECK(low[static_cast<std::size_t>(j - 1)] <= 0);
    }
  }
}

TEST_CASE("theta on full diagrams matches the folding tables") {
  for (int n = 1; n <= 4; ++n) {
    const RootSystem a(DynkinType(Family::A, 2 * n - 1));
    const NodePerm th = a.theta(a.all_nodes());
    for (int i = 1; i <= 2 * n - 1; ++i) CHECK(th(i) == 2 * n - i);
  }
  for (int n = 2; n <= 5; ++n) {
    const RootSystem c(DynkinType(Family::C, n));
    CHECK(c.theta(c.all_nodes()).is_identity());
  }
  const RootSystem e6(DynkinType(Family::E, 6));
  const NodePerm th = e6.theta(e6.all_nodes());
  CHECK(th(1) == 6);
  CHECK(th(6) == 1);
  CHECK(th(3) == 5);
  CHECK(th(5) == 3);
  CHECK(th(2) == 2);
  CHECK(th(4) == 4);
  for (int n = 2; n <= 3; ++n) {
    const RootSystem d(DynkinType(Family::D, 2 * n + 1));
    const NodePerm t = d.theta(d.all_nodes());
    CHECK(t(2 * n) == 2 * n + 1);
    CHECK(t(2 * n + 1) == 2 * n);
    for (int i = 1; i < 2 * n; ++i) CHECK(t(i) == i);
  }
  for (int n = 2; n <= 3; ++n) {
    const RootSystem d(DynkinType(Family::D, 2 * n));
    CHECK(d.theta(d.all_nodes()).is_identity());
  }
  CHECK_THROWS_AS(e6.theta(NodeSet{1, 2}), DomainError);
}

TEST_CASE("theta is an involutive diagram automorphism of every connected J") {
  for (const auto& t : small_types()) {
    const RootSystem rs(t);
    for (NodeSet J : rs.connected_subdiagrams()) {
      CAPTURE(t.name());
      CAPTURE(J.str());
      const NodePerm th = rs.theta(J);
      CHECK(th.apply(J) == J);
      for (int i : J.nodes()) {
        CHECK(th(th(i)) == i);
        for (int j : J.nodes()) CHECK(rs.cartan()(i, j) == rs.cartan()(th(i), th(j)));
      }
    }
  }
}

TEST_CASE("connected_subdiagrams agree with an exhaustive subset scan") {
  const RootSystem a2(DynkinType(Family::A, 2));
  CHECK(a2.connected_subdiagrams() == std::vector<NodeSet>{NodeSet{1}, NodeSet{2}, NodeSet{1, 2}});
  for (int n = 1; n <= 8; ++n) {
    CHECK(RootSystem(DynkinType(Family::A, n)).connected_subdiagrams().size() ==
          static_cast<std::size_t>(n * (n + 1) / 2));
  }
  // D4: 4 singletons, 3 edges, 3 paths of length 2 through the centre, 3 triples
  // containing the centre, and the whole diagram: 11 (oracle scan below).
  CHECK(RootSystem(DynkinType(Family::D, 4)).connected_subdiagrams().size() == 11);
  for (const auto& t : small_types()) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    CHECK(rs.connected_subdiagrams() == oracle::connected_subsets_scan(rs.cartan()));
  }
}

TEST_CASE("components") {
  const RootSystem a3(DynkinType(Family::A, 3));
  CHECK(a3.components(NodeSet{1, 3}) == std::vector<NodeSet>{NodeSet{1}, NodeSet{3}});
  CHECK(a3.components(NodeSet{1, 2, 3}) == std::vector<NodeSet>{NodeSet{1, 2, 3}});
  const RootSystem a5(DynkinType(Family::A, 5));
  CHECK(a5.components(NodeSet{1, 5}) == std::vector<NodeSet>{NodeSet{1}, NodeSet{5}});
  CHECK(a5.components(NodeSet{}).empty());
}

TEST_CASE("weyl_dim") {
  for (const auto& t : small_types()) CHECK(RootSystem(t).weyl_dim(WeightVec(static_cast<std::size_t>(t.rank), 0)) == 1);
  CHECK(RootSystem(DynkinType(Family::A, 2)).weyl_dim({1, 0}) == 3);
  CHECK(RootSystem(DynkinType(Family::C, 2)).weyl_dim({1, 0}) == 4);
  CHECK(RootSystem(DynkinType(Family::G, 2)).weyl_dim({1, 0}) == 7);
  CHECK(RootSystem(DynkinType(Family::A, 3)).weyl_dim({1, 0, 1}) == 15);
  CHECK(RootSystem(DynkinType(Family::E, 6)).weyl_dim({1, 0, 0, 0, 0, 0}) == 27);
  CHECK(RootSystem(DynkinType(Family::F, 4)).weyl_dim({0, 0, 0, 1}) == 26);
  CHECK_THROWS_AS(RootSystem(DynkinType(Family::A, 2)).weyl_dim({-1, 0}), DomainError);
}

TEST_CASE("NodeSet basics") {
  NodeSet s{3, 1};
  CHECK(s.nodes() == std::vector<int>{1, 3});
  CHECK(s.size() == 2);
  CHECK(s.min_node() == 1);
  CHECK(s.max_node() == 3);
  CHECK(s.str() == "{1,3}");
  CHECK(NodeSet{1}.subset_of(s));
  CHECK_FALSE(NodeSet{2}.subset_of(s));
  CHECK_THROWS_AS(NodeSet{0}, ConfigError);
}
