#include <doctest.h>

#include "vcactus/cactus.hpp"
#include "vcactus/errors.hpp"

using namespace vcactus;

TEST_CASE("xi on a single string reverses it") {
  const CrystalGraph g = generate(DynkinType(Family::A, 1), {2});
  CHECK(xi_perm(g, NodeSet{1}).image() == std::vector<Vertex>{2, 1, 0});

  const CrystalGraph c2 = generate(DynkinType(Family::C, 2), {1, 1});
  for (int i = 1; i <= 2; ++i) {
    const VertexPerm x = xi_perm(c2, NodeSet{i});
    for (Vertex b = 0; b < static_cast<Vertex>(c2.size()); ++b) {
      CHECK(c2.epsilon(x(b), i) == c2.phi(b, i));
      CHECK(c2.weight(x(b))[static_cast<std::size_t>(i - 1)] == -c2.weight(b)[static_cast<std::size_t>(i - 1)]);
    }
  }
}

TEST_CASE("xi on the full diagram swaps highest and lowest") {
  const CrystalGraph g = generate(DynkinType(Family::A, 2), {1, 0});
  const VertexPerm x = xi_perm(g, NodeSet::full(2));
  const LeviView view(g, NodeSet::full(2));
  CHECK(x(view.highest(0)) == view.lowest(0));
  CHECK(x(view.lowest(0)) == view.highest(0));
  // Weights are twisted by w_0, which fixes the middle weight of the standard representation.
  CHECK(x(g.f(0, 1)) == g.f(0, 1));
  CHECK((x * x).is_identity());
  CHECK(xi(g, NodeSet::full(2), 0) == view.lowest(0));
}

TEST_CASE("xi agrees with the descending-colour word") {
  const CrystalGraph g = generate(DynkinType(Family::B, 3), {0, 1, 0});
  const RootSystem& rs = g.root_system();
  for (const NodeSet J : rs.connected_subdiagrams()) {
    const LeviView view(g, J);
    const NodePerm th = rs.theta(J);
    for (Vertex b = 0; b < static_cast<Vertex>(g.size()); ++b) {
      CHECK(xi(view, th, b, ColorOrder::ascending) == xi(view, th, b, ColorOrder::descending));
    }
  }
}

TEST_CASE("VertexPerm basics") {
  const VertexPerm a(std::vector<Vertex>{1, 2, 0});
  const VertexPerm b(std::vector<Vertex>{0, 2, 1});
  CHECK(a.is_bijection());
  CHECK_FALSE(VertexPerm(std::vector<Vertex>{0, 0}).is_bijection());
  CHECK((a * b).image() == std::vector<Vertex>{1, 0, 2});
  CHECK((b * a).image() == std::vector<Vertex>{2, 1, 0});
  CHECK(VertexPerm::identity(3).is_identity());
  CHECK((a * a * a).is_identity());
  CHECK(a.first_difference(b) == 0);
  CHECK_FALSE(a.first_difference(a).has_value());
}

TEST_CASE("acting by words") {
  const CrystalGraph g = generate(DynkinType(Family::A, 3), {0, 1, 0});
  const CactusAction action(g);
  const DynkinType t = g.type();
  CHECK(action.act(CactusWord{t, {}}).is_identity());
  CHECK(action.act(CactusWord{t, {NodeSet{1, 2}, NodeSet{1, 2}}}).is_identity());
  const VertexPerm s1 = action.generator(NodeSet{1});
  const VertexPerm s12 = action.generator(NodeSet{1, 2});
  // The last letter acts first.
  CHECK(action.act(CactusWord{t, {NodeSet{1, 2}, NodeSet{1}}}) == s12 * s1);
  CHECK(act(g, CactusWord{t, {NodeSet{1, 2}, NodeSet{1}}}) == s12 * s1);
  CHECK_THROWS_AS(CactusWord({t, {NodeSet{1, 3}}}).validate(), DomainError);
  CHECK_THROWS_AS(CactusWord({t, {NodeSet{}}}).validate(), DomainError);
  CHECK_THROWS_AS(CactusWord({t, {NodeSet{5}}}).validate(), DomainError);
}

TEST_CASE("theta_image") {
  const RootSystem a3(DynkinType(Family::A, 3));
  CHECK(theta_image(a3, NodeSet{1, 2, 3}, NodeSet{1}) == NodeSet{3});
  CHECK(theta_image(a3, NodeSet{1, 2, 3}, NodeSet{1, 2}) == NodeSet{2, 3});
  CHECK(theta_image(a3, NodeSet{1, 2}, NodeSet{2}) == NodeSet{1});
  CHECK(theta_image(a3, NodeSet{1, 2, 3}, NodeSet{2}) == NodeSet{2});
  const RootSystem c3(DynkinType(Family::C, 3));
  CHECK(theta_image(c3, NodeSet{1, 2, 3}, NodeSet{1}) == NodeSet{1});
  CHECK(theta_image(c3, NodeSet{1, 2}, NodeSet{1}) == NodeSet{2});
  const RootSystem d5(DynkinType(Family::D, 5));
  CHECK(theta_image(d5, NodeSet::full(5), NodeSet{4}) == NodeSet{5});
}

TEST_CASE("cactus relations hold") {
  const std::vector<std::pair<const char*, WeightVec>> cases = {
      {"A3", {0, 1, 0}}, {"C2", {1, 1}}, {"G2", {1, 0}}, {"D4", {1, 0, 0, 0}}, {"B3", {1, 0, 0}}, {"A2", {2, 1}}};
  for (const auto& [name, lambda] : cases) {
    CAPTURE(std::string(name));
    const CrystalGraph g = generate(DynkinType::parse(name), lambda);
    const Report r = verify_cactus_relations(g, 2);
    CHECK(r.pass());
    CHECK(verify_xi(g).pass());
  }
}

TEST_CASE("negative control: the wrong target breaks relation 3") {
  // In A2, theta_{12} swaps 1 and 2, so xi_{12} xi_1 != xi_1 xi_{12}.
  const CrystalGraph g = generate(DynkinType(Family::A, 2), {1, 0});
  const CactusAction action(g);
  const NodeSet I = NodeSet::full(2);
  CHECK_FALSE(check_relation3(action, I, NodeSet{1}, NodeSet{2}).has_value());
  const auto witness = check_relation3(action, I, NodeSet{1}, NodeSet{1});
  REQUIRE(witness.has_value());
  CHECK(action.act(CactusWord{g.type(), {I, NodeSet{1}}})(*witness) !=
        action.act(CactusWord{g.type(), {NodeSet{1}, I}})(*witness));
}

TEST_CASE("the trivial crystal") {
  const CrystalGraph triv = generate(DynkinType(Family::A, 2), {0, 0});
  CHECK(triv.size() == 1);
  CHECK(verify_cactus_relations(triv).pass());
  CHECK(xi_perm(triv, NodeSet::full(2)).is_identity());
}

TEST_CASE("parallel verification matches serial") {
  const CrystalGraph g = generate(DynkinType(Family::C, 3), {0, 1, 0});
  const Report a = verify_cactus_relations(g, 1);
  const Report b = verify_cactus_relations(g, 4);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.pass());
}
