#ifndef HOPFALG_GROUPOID_HPP
#define HOPFALG_GROUPOID_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfalg/comodule.hpp"

namespace hopfalg {

// Finite groupoid. comp[{a, b}] is "a followed by b", defined when tgt(a) = src(b).
struct FinGroupoid {
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> src, tgt, inv;
  std::vector<int> id;  // per object
  std::map<std::pair<int, int>, int> comp;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  int compose(int a, int b) const;  // throws when not composable
};

Report verify_groupoid(const FinGroupoid& g);
// Throws std::invalid_argument with the failed axiom when g is not a groupoid.
void require_groupoid(const FinGroupoid& g);

FinGroupoid point_groupoid();
FinGroupoid discrete_groupoid(int n);
FinGroupoid pair_groupoid(int n);
// table[a][b] = a*b; the element order gives the arrow order.
FinGroupoid group_groupoid(const std::vector<std::vector<int>>& table, std::vector<std::string> names,
                           std::string name);
FinGroupoid cyclic_groupoid(int n);
FinGroupoid symmetric3_groupoid();
// Action groupoid of a group acting on a finite set; act[g][x] = g.x.
FinGroupoid action_groupoid(const std::vector<std::vector<int>>& table, const std::vector<std::vector<int>>& act,
                            std::string name);

struct GroupoidFunctor {
  const FinGroupoid* src = nullptr;
  const FinGroupoid* dst = nullptr;
  std::vector<int> obj, arr;
};

Report verify_functor(const GroupoidFunctor& f);

// Left action of a groupoid on a set over the anchor map: act.at({g, n}) = g.n for src(g) = anchor(n).
struct GroupoidAction {
  const FinGroupoid* groupoid = nullptr;
  std::vector<std::string> points;
  std::vector<int> anchor;
  std::map<std::pair<int, int>, int> act;
};

Report verify_action(const GroupoidAction& a);
// Groupoid acting on its objects through the arrows.
GroupoidAction objects_action(const FinGroupoid& g);
// Groupoid acting on its arrows by post-composition: g.x = x followed by g.
GroupoidAction arrows_action(const FinGroupoid& g);
// Translation groupoid: objects are the points, arrows (g, n): n -> g.n.
FinGroupoid translation_groupoid(const GroupoidAction& a);

std::vector<std::vector<int>> orbits(const FinGroupoid& g);
std::vector<std::vector<int>> action_orbits(const GroupoidAction& a);

// Functions on objects and arrows with the dual structure maps.
template <class S> HopfPtr<S> dualize(const FinGroupoid& g, const Field& f);
// A functor F: G -> G' dualizes to a morphism dual(G') -> dual(G).
template <class S>
HopfMorphism<S> dualize_functor(const GroupoidFunctor& fun, const HopfPtr<S>& dual_src, const HopfPtr<S>& dual_dst,
                                const Field& f);
template <class S>
LeftComoduleAlgebra<S> action_to_comodule_algebra(const GroupoidAction& a, const HopfPtr<S>& dual, const Field& f);

}  // namespace hopfalg

#endif  // HOPFALG_GROUPOID_HPP
