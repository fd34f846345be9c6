#include "doctest.h"
#include <algorithm>
#include <numeric>

#include "hopfalg/constructions.hpp"
#include "hopfalg/groupoid.hpp"

using namespace hopfalg;
using Q = Rational;

TEST_CASE("generators have the expected sizes") {
  CHECK(pair_groupoid(2).n_objects() == 2);
  CHECK(pair_groupoid(2).n_arrows() == 4);
  CHECK(cyclic_groupoid(2).n_objects() == 1);
  CHECK(cyclic_groupoid(2).n_arrows() == 2);
  for (const auto& g : {point_groupoid(), discrete_groupoid(3), pair_groupoid(3), cyclic_groupoid(3),
                        symmetric3_groupoid()})
    CHECK(verify_groupoid(g).ok());
}

TEST_CASE("duals pass the Hopf algebroid axioms") {
  Field q;
  for (const auto& g : {point_groupoid(), discrete_groupoid(2), pair_groupoid(2), cyclic_groupoid(2)}) {
    auto h = dualize<Q>(g, q);
    Report r = verify_hopf_algebroid(*h);
    INFO(g.name);
    if (!r.ok()) INFO(r.first_failure()->name);
    CHECK(r.ok());
  }
}

namespace {

// Brute-force isomorphism of small groupoids: bijections on objects and arrows preserving
// source, target and composition.
bool isomorphic(const FinGroupoid& a, const FinGroupoid& b) {
  if (a.n_objects() != b.n_objects() || a.n_arrows() != b.n_arrows()) return false;
  std::vector<int> op(a.n_objects()), ap(a.n_arrows());
  std::iota(op.begin(), op.end(), 0);
  do {
    std::iota(ap.begin(), ap.end(), 0);
    do {
      bool ok = true;
      for (int x = 0; x < a.n_arrows() && ok; ++x)
        ok = b.src[ap[x]] == op[a.src[x]] && b.tgt[ap[x]] == op[a.tgt[x]];
      for (const auto& [xy, z] : a.comp) {
        if (!ok) break;
        auto it = b.comp.find({ap[xy.first], ap[xy.second]});
        ok = it != b.comp.end() && it->second == ap[z];
      }
      if (ok) return true;
    } while (std::next_permutation(ap.begin(), ap.end()));
  } while (std::next_permutation(op.begin(), op.end()));
  return false;
}

GroupoidAction swap_action(const FinGroupoid& z2) {
  GroupoidAction a;
  a.groupoid = &z2;
  a.points = {"p", "q"};
  a.anchor = {0, 0};
  a.act = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}};
  return a;
}

}  // namespace

TEST_CASE("action groupoid of the swap is the pair groupoid") {
  auto g = action_groupoid({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}, "Z2 swap");
  CHECK(verify_groupoid(g).ok());
  CHECK(g.n_objects() == 2);
  CHECK(g.n_arrows() == 4);
  CHECK(isomorphic(g, pair_groupoid(2)));
  CHECK_FALSE(isomorphic(discrete_groupoid(2), pair_groupoid(2)));
  auto z2 = cyclic_groupoid(2);
  CHECK(isomorphic(translation_groupoid(swap_action(z2)), pair_groupoid(2)));
}

TEST_CASE("malformed tables are rejected") {
  // Not a group: the second row repeats an element.
  CHECK_THROWS_AS(group_groupoid({{0, 1}, {1, 1}}, {"e", "g"}, "bad"), std::invalid_argument);
  FinGroupoid g = pair_groupoid(2);
  g.inv[1] = 1;  // (1,2) is not its own inverse
  CHECK_FALSE(verify_groupoid(g).ok());
  CHECK_THROWS_AS(require_groupoid(g), std::invalid_argument);
  auto z2 = cyclic_groupoid(2);
  auto bad = swap_action(z2);
  bad.act[{1, 1}] = 1;  // g(g p) != p
  CHECK_FALSE(verify_action(bad).ok());
}

TEST_CASE("dual comultiplication sums over factorizations") {
  Field q;
  auto g = pair_groupoid(2);
  auto h = dualize<Q>(g, q);
  const int n = g.n_arrows();
  for (int a = 0; a < n; ++a) {
    // Oracle: sum of d_x (x) d_y over composable x then y with x;y = a.
    Tensor<Q> expect({n, n});
    for (const auto& [xy, z] : g.comp)
      if (z == a) expect.add({xy.first, xy.second}, Q(1));
    CHECK(same_matrix(Vec<Q>(h->comult.col(a)), h->hh->project_vec(expect)));
  }
  auto c2 = dualize<Q>(cyclic_groupoid(2), q);
  CHECK(c2->dimA() == 1);
  CHECK(c2->dimH() == 2);
  CHECK(same_matrix(c2->antipode, identity<Q>(2)));  // every element of Z/2 is its own inverse
  CHECK(verify_hopf_algebroid(*c2).ok());
}

TEST_CASE("orbits") {
  CHECK(orbits(pair_groupoid(2)).size() == 1);
  CHECK(orbits(discrete_groupoid(2)).size() == 2);
  CHECK(orbits(point_groupoid()).size() == 1);
  auto z2 = cyclic_groupoid(2);
  auto act = swap_action(z2);
  CHECK(verify_action(act).ok());
  CHECK(action_orbits(act).size() == 1);
  Field q;
  auto r = action_to_comodule_algebra<Q>(act, dualize<Q>(z2, q), q);
  CHECK(coinvariants(r.comodule()).cols() == 1);
  // Trivial action of Z/2 on two points: two orbits, and the translation algebroid is C2 (x) k^2.
  GroupoidAction triv = act;
  triv.act = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 0}, {{1, 1}, 1}};
  CHECK(verify_action(triv).ok());
  CHECK(action_orbits(triv).size() == 2);
  auto rt = action_to_comodule_algebra<Q>(triv, dualize<Q>(z2, q), q);
  CHECK(coinvariants(rt.comodule()).cols() == 2);
  auto lt = left_translation(rt);
  CHECK(lt.total->dimH() == 4);
  CHECK(verify_hopf_algebroid(*lt.total).ok());
}

TEST_CASE("orbit count equals coinvariant dimension across the corpus") {
  Field q;
  for (const auto& g : {point_groupoid(), discrete_groupoid(2), discrete_groupoid(3), pair_groupoid(2),
                        pair_groupoid(3), cyclic_groupoid(2), cyclic_groupoid(3), symmetric3_groupoid()}) {
    auto h = dualize<Q>(g, q);
    CHECK_MESSAGE(coinvariants(identity_comodule(h)).cols() == static_cast<long>(orbits(g).size()), g.name);
  }
}
