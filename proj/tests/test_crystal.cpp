#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "vcactus/crystal.hpp"
#include "vcactus/errors.hpp"

using namespace vcactus;

namespace {

struct Case {
  const char* type;
  WeightVec lambda;
  std::size_t size;
};

const std::vector<Case>& sized_cases() {
  static const std::vector<Case> cases = {
      {"A1", {2}, 3},        {"A2", {1, 0}, 3},       {"A2", {1, 1}, 8},      {"C2", {1, 0}, 4},
      {"C2", {0, 1}, 5},     {"C2", {1, 1}, 16},      {"B2", {1, 0}, 5},      {"B2", {0, 1}, 4},
      {"G2", {1, 0}, 7},     {"G2", {0, 1}, 14},      {"A3", {1, 0, 1}, 15},  {"C3", {1, 0, 0}, 6},
      {"B3", {0, 0, 1}, 8},  {"D4", {1, 0, 0, 0}, 8}, {"A1", {0}, 1},
  };
  return cases;
}

}  // namespace

TEST_CASE("crystal sizes match the f-closure oracle and the Weyl dimension") {
  for (const auto& c : sized_cases()) {
    CAPTURE(c.type);
    const DynkinType t = DynkinType::parse(c.type);
    const CrystalGraph g = generate(t, c.lambda);
    CHECK(g.size() == c.size);
    CHECK(oracle::f_closure_size(t, c.lambda) == c.size);
    CHECK(RootSystem(t).weyl_dim(c.lambda) == c.size);
  }
}

TEST_CASE("generation limits and bad input") {
  const DynkinType c2(Family::C, 2);
  CHECK_THROWS_AS(generate(c2, {1, 1}, 10), DomainError);
  CHECK_NOTHROW(generate(c2, {1, 1}, 16));
  CHECK_THROWS_AS(generate(c2, {1, -1}), DomainError);
  CHECK_THROWS_AS(generate(c2, {1}), DomainError);
}

TEST_CASE("vertex 0 is the straight path and the only highest-weight vertex") {
  const CrystalGraph g = generate(DynkinType(Family::B, 3), {1, 0, 1});
  CHECK(g.path(0) == straight_path(g.root_system(), {1, 0, 1}));
  for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
    bool top = true;
    for (int i = 1; i <= g.rank(); ++i) top = top && g.e(b, i) == kNoVertex;
    CHECK(top == (b == 0));
    CHECK(g.find(g.path(b)) == b);
  }
}

TEST_CASE("semi-normal axioms hold") {
  for (const auto& c : sized_cases()) {
    CAPTURE(c.type);
    const Report r = verify_seminormal(generate(DynkinType::parse(c.type), c.lambda));
    CHECK(r.pass());
    CHECK(r.check == "seminormal");
  }
}

TEST_CASE("semi-normal checker catches a deleted edge") {
  const CrystalGraph g = generate(DynkinType(Family::C, 2), {1, 0});
  std::vector<PLPath> paths;
  for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) paths.push_back(g.path(b));
  auto f = g.f_table();
  auto e = g.e_table();
  const Vertex target = f[0];  // f_1 of the highest vertex
  REQUIRE(target != kNoVertex);
  f[0] = kNoVertex;
  const CrystalGraph broken(g.type(), g.highest_weight(), paths, f, e);
  const Report r = verify_seminormal(broken);
  CHECK_FALSE(r.pass());
  bool witnessed = false;
  for (const auto& v : r.violations) witnessed = witnessed || (v.vertex == 0 && v.color == 1);
  CHECK(witnessed);
}

TEST_CASE("characters are Weyl-group invariant") {
  for (const auto& c : sized_cases()) {
    CAPTURE(c.type);
    const CrystalGraph g = generate(DynkinType::parse(c.type), c.lambda);
    std::map<WeightVec, int> mult;
    for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) ++mult[g.weight(b)];
    for (const auto& [mu, m] : mult) {
      for (int i = 1; i <= g.rank(); ++i) {
        const auto it = mult.find(g.root_system().reflect(mu, i));
        REQUIRE(it != mult.end());
        CHECK(it->second == m);
      }
    }
  }
}

TEST_CASE("Levi restriction") {
  const CrystalGraph a2 = generate(DynkinType(Family::A, 2), {1, 0});
  const LeviView v1(a2, NodeSet{1});
  REQUIRE(v1.component_count() == 2);
  std::vector<std::size_t> sizes{v1.component(0).size(), v1.component(1).size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2});

  const LeviView full(a2, NodeSet::full(2));
  REQUIRE(full.component_count() == 1);
  CHECK(full.highest(0) == 0);
  CHECK(a2.weight(full.lowest(0)) == WeightVec{0, -1});

  const CrystalGraph c2 = generate(DynkinType(Family::C, 2), {1, 0});
  const LeviView cv(c2, NodeSet::full(2));
  CHECK(c2.weight(cv.lowest(0)) == WeightVec{-1, 0});

  const LeviView empty(c2, NodeSet{});
  CHECK(empty.component_count() == c2.size());
}

TEST_CASE("f_word reconstructs every vertex from its component's highest vertex") {
  const CrystalGraph g = generate(DynkinType(Family::G, 2), {0, 1});
  for (const NodeSet J : {NodeSet{1}, NodeSet{2}, NodeSet{1, 2}}) {
    const LeviView view(g, J);
    for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
      for (const ColorOrder order : {ColorOrder::ascending, ColorOrder::descending}) {
        Vertex v = view.highest(view.component_index(b));
        for (int c : view.f_word(b, order)) {
          CHECK(J.contains(c));
          v = g.f(v, c);
          REQUIRE(v != kNoVertex);
        }
        CHECK(v == b);
      }
      const Vertex p = view.tree_parent(b);
      if (p != kNoVertex) CHECK(g.f(p, view.tree_color(b)) == b);
    }
    CHECK(view.bfs_order().size() == g.size());
  }
}

TEST_CASE("graph string lengths") {
  const CrystalGraph g = generate(DynkinType(Family::A, 1), {3});
  CHECK(g.phi(0, 1) == 3);
  CHECK(g.epsilon(0, 1) == 0);
  const Vertex low = g.f(g.f(g.f(0, 1), 1), 1);
  REQUIRE(low != kNoVertex);
  CHECK(g.epsilon(low, 1) == 3);
  CHECK(g.f(low, 1) == kNoVertex);
}

TEST_CASE("generation and export are deterministic") {
  const DynkinType t(Family::C, 2);
  const auto a = crystal_to_json(generate(t, {1, 1})).dump();
  const auto b = crystal_to_json(generate(t, {1, 1})).dump();
  CHECK(a == b);
  CHECK(crystal_to_dot(generate(t, {1, 1})) == crystal_to_dot(generate(t, {1, 1})));

  const auto j = nlohmann::json::parse(a);
  CHECK(j["type"] == "C2");
  CHECK(j["vertices"].size() == 16);
  std::size_t edges = 0;
  const CrystalGraph g = generate(t, {1, 1});
  for (Vertex v : g.f_table()) edges += v != kNoVertex;
  CHECK(j["edges"].size() == edges);
}
