#include "doctest.h"
#include "hopfalg/constructions.hpp"
#include "hopfalg/groupoid.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

std::string why(const Report& r) { return r.ok() ? "" : r.first_failure()->name + " " + r.first_failure()->witness; }

// Dual of a functor between two generated groupoids.
HopfMorphism<Q> dual_of(const FinGroupoid& a, const FinGroupoid& b, std::vector<int> obj, std::vector<int> arr) {
  GroupoidFunctor f{&a, &b, std::move(obj), std::move(arr)};
  return dualize_functor<Q>(f, dualize<Q>(a, q), dualize<Q>(b, q), q);
}

Mat<Q> row(std::initializer_list<int> v) {
  Mat<Q> m(1, static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (int x : v) m(0, i++) = Q(x);
  return m;
}

}  // namespace

TEST_CASE("scalar extensions") {
  auto pt = dualize<Q>(point_groupoid(), q);
  auto e = scalar_extension<Q>(pt, AlgMorphism<Q>::identity(pt->A));
  CHECK(e.ext->dimH() == 1);
  CHECK(e.flat);
  CHECK(verify_hopf_algebroid(*e.ext).ok());

  auto pr2 = dualize<Q>(pair_groupoid(2), q);
  auto k = share(FinAlgebra<Q>::diagonal(1, "k"));
  auto ev = scalar_extension<Q>(pr2, AlgMorphism<Q>{pr2->A, k, row({0, 1})});
  CHECK(ev.ext->dimH() == 1);
  CHECK_MESSAGE(verify_hopf_algebroid(*ev.ext).ok(), why(verify_hopf_algebroid(*ev.ext)));
  CHECK(verify_hopf_morphism(ev.mor).ok());

  auto c2 = dualize<Q>(cyclic_groupoid(2), q);
  auto sq = share(FinAlgebra<Q>::quadratic(Q(2), "Q(sqrt2)"));
  Mat<Q> unit = sq->one();
  auto x = scalar_extension<Q>(c2, AlgMorphism<Q>{c2->A, sq, unit});
  CHECK(x.ext->dimH() == 8);
  CHECK_MESSAGE(verify_hopf_algebroid(*x.ext).ok(), why(verify_hopf_algebroid(*x.ext)));
  CHECK_MESSAGE(verify_hopf_morphism(x.mor).ok(), why(verify_hopf_morphism(x.mor)));
}

TEST_CASE("canonical factor reproduces the morphism") {
  auto pt = point_groupoid(), p2 = pair_groupoid(2), d1 = discrete_groupoid(1), d2 = discrete_groupoid(2);
  auto c2 = cyclic_groupoid(2);
  struct Case {
    HopfMorphism<Q> f;
    int dom, rank;
  };
  std::vector<Case> cases = {
      {dual_of(pt, p2, {0}, {0}), 1, 1},
      {dual_of(d2, d1, {0, 0}, {0, 0}), 4, 2},
      {dual_of(c2, c2, {0}, {0, 1}), 2, 2},
  };
  for (const auto& c : cases) {
    auto cf = canonical_factor(c.f);
    CHECK_MESSAGE(verify_hopf_morphism(cf.factor).ok(), why(verify_hopf_morphism(cf.factor)));
    CHECK(verify_hopf_algebroid(*cf.ext.ext).ok());
    CHECK(cf.factor.phi1.matrix.cols() == c.dom);
    CHECK(rank<Q>(cf.factor.phi1.matrix) == c.rank);
    auto back = compose(cf.factor, cf.ext.mor);
    CHECK(same_matrix(back.phi1.matrix, c.f.phi1.matrix));
    CHECK(same_matrix(back.phi0.matrix, c.f.phi0.matrix));
  }
}

TEST_CASE("left translation of groupoid actions") {
  auto pr2 = dualize<Q>(pair_groupoid(2), q);
  auto base = left_translation(base_comodule_algebra(pr2));
  CHECK(base.total->dimH() == pr2->dimH());
  CHECK(verify_hopf_algebroid(*base.total).ok());
  CHECK(verify_hopf_morphism(base.mor).ok());
  CHECK(is_bijective(base.mor.phi1.matrix));

  auto g = pair_groupoid(2);
  for (const auto& act : {objects_action(g), arrows_action(g)}) {
    auto r = action_to_comodule_algebra<Q>(act, pr2, q);
    auto lt = left_translation(r);
    CHECK(lt.total->dimH() == (act.points.size() == 2 ? 4 : 8));
    CHECK_MESSAGE(verify_hopf_algebroid(*lt.total).ok(), why(verify_hopf_algebroid(*lt.total)));
    CHECK_MESSAGE(verify_hopf_morphism(lt.mor).ok(), why(verify_hopf_morphism(lt.mor)));

    // delta_(g, n) |-> delta_g (x) delta_(g.n) identifies the dual of the translation groupoid.
    auto tg = translation_groupoid(act);
    auto dual = dualize<Q>(tg, q);
    const int np = static_cast<int>(act.points.size());
    Mat<Q> phi1 = Mat<Q>::Zero(lt.total->dimH(), tg.n_arrows());
    int k = 0;
    for (const auto& [gn, m] : act.act) {
      Tensor<Q> t({g.n_arrows(), np});
      t.add({gn.first, m}, Q(1));
      phi1.col(k++) = lt.space->project_vec(t);
    }
    auto iso = make_morphism<Q>(dual, lt.total, identity<Q>(np), phi1);
    CHECK_MESSAGE(verify_hopf_morphism(iso).ok(), why(verify_hopf_morphism(iso)));
    CHECK(is_bijective(phi1));
  }
}

TEST_CASE("left translation refuses a broken comodule algebra") {
  auto pr2 = dualize<Q>(pair_groupoid(2), q);
  auto r = base_comodule_algebra(pr2);
  auto bad = make_left_comodule_algebra<Q>("bad", pr2, r.R, r.sigma.matrix, Mat<Q>(r.coaction * Q(3)));
  CHECK_THROWS_AS(left_translation(bad), PreconditionError);
}
