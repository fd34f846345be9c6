#include "doctest.h"
#include "hopfalg/corpus.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

std::string why(const Report& r) { return r.ok() ? "" : r.first_failure()->name + " " + r.first_failure()->witness; }

const Check* find_check(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

std::vector<FinGroupoid> corpus_groupoids() {
  return {point_groupoid(), discrete_groupoid(2), discrete_groupoid(3), pair_groupoid(2),
          pair_groupoid(3), cyclic_groupoid(2),   cyclic_groupoid(3),   symmetric3_groupoid()};
}

}  // namespace

TEST_CASE("corpus duals satisfy the axioms") {
  for (const auto& g : corpus_groupoids()) {
    auto h = dualize<Q>(g, q);
    auto r = verify_hopf_algebroid(*h);
    CHECK_MESSAGE(r.ok(), g.name << ": " << why(r));
    // Independent matrix checks of the simplest laws.
    CHECK(same_matrix(Mat<Q>(h->antipode * h->antipode), identity<Q>(h->dimH())));
    CHECK(same_matrix(Mat<Q>(h->antipode * h->s.matrix), h->t.matrix));
    CHECK(same_matrix(Mat<Q>(h->counit * h->s.matrix), identity<Q>(h->dimA())));
    CHECK(same_matrix(Mat<Q>(h->counit * h->t.matrix), identity<Q>(h->dimA())));
    CHECK(h->s_flat);
    CHECK(h->t_flat);
  }
}

TEST_CASE("the point is the ground field") {
  auto pt = corpus_point<Q>(q);
  CHECK(pt->dimA() == 1);
  CHECK(pt->dimH() == 1);
  CHECK(same_matrix(pt->antipode, identity<Q>(1)));
  CHECK(verify_hopf_algebroid(*pt).ok());
}

TEST_CASE("pair groupoid dual with the identity as antipode") {
  auto h = corpus_pair<Q>(q);
  auto bad = with_antipode(*h, identity<Q>(4));
  auto r = verify_hopf_algebroid(*bad);
  REQUIRE_FALSE(r.ok());
  const Check* c = find_check(r, "antipode: S(u1) u2 = t(counit(u))");
  REQUIRE(c != nullptr);
  CHECK(c->status == Status::fail);
  // Direct recheck: with S = id, S(u1) u2 = sum_x d(i,x) d(x,j) is d(i,i) when i = j and 0 otherwise,
  // while t(counit(d(i,j))) is the sum of the arrows into i when i = j. So exactly the identity
  // arrows fail, and the first of them is reported.
  std::vector<std::string> failing;
  for (int u = 0; u < 4; ++u) {
    Tensor<Q> x = h->delta(Tensor<Q>::basis(4, u), 0);
    Vec<Q> lhs = x.merge(0, 1, h->H->product_sparse()).vec();
    Vec<Q> rhs = h->t.matrix * h->counit.col(u);
    if (!same_matrix(lhs, rhs)) failing.push_back(h->label(u));
  }
  CHECK(failing == std::vector<std::string>{"(1,1)", "(2,2)"});
  CHECK(c->witness == "at (1,1)");
}

TEST_CASE("corrupted comultiplication is reported") {
  auto h = corpus_cyclic2<Q>(q);
  auto bad = with_comult(*h, Mat<Q>(Q(2) * h->comult));
  CHECK_FALSE(verify_hopf_algebroid(*bad).ok());
}

TEST_CASE("non-flat source is refused") {
  auto k = share(FinAlgebra<Q>::diagonal(1));
  auto a = share(FinAlgebra<Q>::diagonal(2));
  Mat<Q> s(1, 2), e(2, 1);
  s << Q(1), Q(0);
  e << Q(1), Q(0);
  CHECK_THROWS_AS(make_hopf<Q>("x", a, k, s, s, identity<Q>(1), e, identity<Q>(1)), PreconditionError);
}

TEST_CASE("morphisms") {
  auto c2 = corpus_cyclic2<Q>(q);
  CHECK(verify_hopf_morphism(identity_morphism(c2)).ok());
  auto incl = corpus_inclusion<Q>(q);
  CHECK_MESSAGE(verify_hopf_morphism(incl).ok(), why(verify_hopf_morphism(incl)));
  // Evaluating at the arrow (1,2) instead of the loop at 1 is an algebra map but not a morphism.
  Mat<Q> off = Mat<Q>::Zero(1, 4);
  off(0, 1) = Q(1);
  auto bad = make_morphism<Q>(incl.src, incl.dst, incl.phi0.matrix, off);
  auto r = verify_hopf_morphism(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.first_failure()->witness != "");
  auto comp = compose(identity_morphism(incl.dst), compose(incl, identity_morphism(incl.src)));
  CHECK(same_matrix(comp.phi1.matrix, incl.phi1.matrix));
  CHECK(same_matrix(comp.phi0.matrix, incl.phi0.matrix));
}

TEST_CASE("dualization is contravariantly functorial") {
  auto d1 = discrete_groupoid(1), d2 = discrete_groupoid(2), p2 = pair_groupoid(2);
  auto hd1 = dualize<Q>(d1, q), hd2 = dualize<Q>(d2, q), hp2 = dualize<Q>(p2, q);
  // d1 -> d2 (object 0) -> p2 (identity on objects).
  GroupoidFunctor f{&d1, &d2, {0}, {0}};
  GroupoidFunctor g{&d2, &p2, {0, 1}, {p2.id[0], p2.id[1]}};
  GroupoidFunctor gf{&d1, &p2, {0}, {p2.id[0]}};
  CHECK(verify_functor(f).ok());
  CHECK(verify_functor(g).ok());
  auto df = dualize_functor<Q>(f, hd1, hd2, q);
  auto dg = dualize_functor<Q>(g, hd2, hp2, q);
  auto dgf = dualize_functor<Q>(gf, hd1, hp2, q);
  for (const auto* m : {&df, &dg, &dgf}) CHECK_MESSAGE(verify_hopf_morphism(*m).ok(), why(verify_hopf_morphism(*m)));
  auto c = compose(df, dg);
  CHECK(same_matrix(c.phi1.matrix, dgf.phi1.matrix));
  CHECK(same_matrix(c.phi0.matrix, dgf.phi0.matrix));
}

TEST_CASE("prime field duals") {
  Field f5{5};
  for (const auto& g : {pair_groupoid(2), cyclic_groupoid(3)}) {
    auto h = dualize<Fp>(g, f5);
    CHECK_MESSAGE(verify_hopf_algebroid(*h).ok(), g.name);
  }
}
