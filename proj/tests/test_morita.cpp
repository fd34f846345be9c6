#include "doctest.h"
#include "hopfalg/corpus.hpp"
#include "hopfalg/morita.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

std::string why(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + " " + c->witness : "";
}

BundlePtr<Q> triv_incl() { return require_principal(trivial_bundle(corpus_inclusion<Q>(q))->p, Chirality::both); }
BundlePtr<Q> sqrt2() { return require_principal(corpus_graded_quadratic<Q>(2, q), Chirality::both); }
BundlePtr<Q> unit_c2() { return unit_bundle(corpus_cyclic2<Q>(q)); }

void check_iso(const BundleMorphism<Q>& m, const std::string& tag) {
  auto r = verify_bundle_morphism(m);
  CHECK_MESSAGE(r.ok(), tag << ": " << why(r));
  CHECK_MESSAGE(is_bijective(m.f), tag);
}

}  // namespace

TEST_CASE("unitors are bundle isomorphisms") {
  for (const auto& p : {unit_c2(), triv_incl(), sqrt2()}) {
    check_iso(left_unitor(p), "left unitor " + p->p.name);
    check_iso(right_unitor(p), "right unitor " + p->p.name);
  }
}

TEST_CASE("associator on a triple") {
  auto s = sqrt2();
  auto a = associator(s, s, s);
  // Degrees must match across each cotensor, so one copy of each degree survives.
  CHECK(a.src->dim() == 2);
  check_iso(a, "associator");
  auto t = triv_incl();
  auto op = opposite_bundle(*t);
  check_iso(associator(t, op, t), "associator incl");
}

TEST_CASE("composite of the inclusion bundle with its opposite") {
  auto t = triv_incl();
  auto op = opposite_bundle(*t);
  auto qp = compose_bundles(*op, *t);
  CHECK(qp->dim() == 1);
  auto iso = solve_bundle_iso(qp, unit_bundle(corpus_point<Q>(q)), q);
  REQUIRE(iso.has_value());
  check_iso(*iso, "P^co [] P = U(PT)");
  auto pq = compose_bundles(*t, *op);
  CHECK(pq->dim() == 4);
  CHECK(solve_bundle_iso(pq, unit_bundle(corpus_pair<Q>(q)), q).has_value());
}

TEST_CASE("bundle morphism search") {
  auto s = sqrt2();
  auto ms = solve_bundle_morphisms(s, s, q);
  // Colinear maps fix 1 and scale x; x^2 = 2 forces the scale to be +-1.
  REQUIRE(ms.size() == 2);
  Mat<Q> neg = identity<Q>(2);
  neg(1, 1) = Q(-1);
  const bool a = same_matrix(ms[0].f, identity<Q>(2)) && same_matrix(ms[1].f, neg);
  const bool b = same_matrix(ms[1].f, identity<Q>(2)) && same_matrix(ms[0].f, neg);
  CHECK((a || b));
  auto split = require_principal(corpus_graded_quadratic<Q>(1, q), Chirality::both);
  CHECK_FALSE(solve_bundle_iso(s, split, q).has_value());
}

TEST_CASE("invertibility witnesses") {
  for (const auto& p : {unit_c2(), triv_incl(), sqrt2()}) {
    auto w = invertibility_witness(p);
    CHECK_MESSAGE(w.report.ok(), p->p.name << ": " << why(w.report));
    CHECK(w.chi_iso);
    CHECK(w.zeta_iso);
    CHECK(w.triangle);
  }
  auto left_only = trivial_bundle(corpus_discrete_collapse<Q>(q));
  CHECK_THROWS_AS(invertibility_witness(left_only), PreconditionError);
}

TEST_CASE("bibundle from an invertible 1-cell") {
  auto p = sqrt2();
  auto w = invertibility_witness(p);
  auto up = bibundle_from_invertible(p, w.q, w.chi, w.zeta, q);
  CHECK_MESSAGE(up.report.ok(), why(up.report));
  REQUIRE(up.bibundle);
  CHECK(up.bibundle->right);
  CHECK(is_bijective(up.iso.f));
  // Doubling zeta keeps it colinear up to scale but breaks the triangle.
  CHECK_FALSE(triangle_holds(p, w.q, w.chi, Mat<Q>(Q(2) * w.zeta)));
  CHECK_THROWS_AS(bibundle_from_invertible(p, w.q, w.chi, Mat<Q>(Q(2) * w.zeta), q), PreconditionError);
}

TEST_CASE("weak equivalence verdicts") {
  auto c2 = corpus_cyclic2<Q>(q);
  auto id = weak_equivalence_test(identity_morphism(c2));
  CHECK(id.verdict.weak);
  CHECK(id.verdict.coherent);
  auto incl = weak_equivalence_test(corpus_inclusion<Q>(q));
  CHECK_MESSAGE(incl.verdict.weak, why(incl.verdict.report));
  CHECK(incl.verdict.coherent);
  CHECK(same_matrix(Mat<Q>(incl.factor.factor.phi1.matrix * incl.lambda),
                    identity<Q>(incl.factor.factor.phi1.matrix.rows())));
  auto col = weak_equivalence_test(corpus_discrete_collapse<Q>(q));
  CHECK_FALSE(col.verdict.weak);
  CHECK_FALSE(col.verdict.bibundle);
  CHECK_FALSE(col.verdict.adjunction);
  CHECK(col.verdict.coherent);
  CHECK(col.verdict.phi_rank == 1);
  CHECK(col.verdict.phi_domain_rank == 2);
  CHECK(col.verdict.report.ok());
}

TEST_CASE("translation legs of bibundles are weak equivalences") {
  for (const auto& p : {unit_c2(), triv_incl(), sqrt2()}) {
    auto legs = translation_weak_equivalences(*p);
    REQUIRE(legs.alpha);
    REQUIRE(legs.beta);
    CHECK_MESSAGE(legs.alpha->weak, p->p.name << ": " << why(legs.alpha->report));
    CHECK_MESSAGE(legs.beta->weak, p->p.name << ": " << why(legs.beta->report));
  }
}

TEST_CASE("bundle isomorphisms induce isomorphic translation algebroids") {
  auto p = triv_incl();
  auto m = identity_bundle_morphism(p);
  auto f = translation_iso(m);
  CHECK_MESSAGE(verify_hopf_morphism(f).ok(), why(verify_hopf_morphism(f)));
  CHECK(is_bijective(f.phi1.matrix));
}

TEST_CASE("2-cells") {
  auto incl = corpus_inclusion<Q>(q);
  auto idc = identity_two_cell(incl);
  CHECK_MESSAGE(verify_two_cell(idc).ok(), why(verify_two_cell(idc)));
  auto [c, cb] = translation_two_cells(incl);
  CHECK_MESSAGE(verify_two_cell(c).ok(), why(verify_two_cell(c)));
  CHECK_MESSAGE(verify_two_cell(cb).ok(), why(verify_two_cell(cb)));
  CHECK(same_matrix(vertical_compose(c, cb).c, identity_two_cell(c.src).c));
  // A cell from a morphism to itself gives a bundle endomorphism of its trivial bundle.
  auto m = two_cell_bundle_map(idc);
  CHECK_MESSAGE(verify_bundle_morphism(m).ok(), why(verify_bundle_morphism(m)));
  // Corrupting c breaks the algebra-map check.
  TwoCell<Q> bad = idc;
  bad.c(0, 0) += Q(1);
  CHECK_FALSE(verify_two_cell(bad).ok());
}

TEST_CASE("trivial bundles are functorial") {
  auto incl = corpus_inclusion<Q>(q);
  auto pt = corpus_point<Q>(q);
  auto r = verify_trivial_functoriality(incl, identity_morphism(pt), q);
  CHECK_MESSAGE(r.ok(), why(r));
  auto c2 = corpus_cyclic2<Q>(q);
  r = verify_trivial_functoriality(identity_morphism(c2), identity_morphism(c2), q);
  CHECK_MESSAGE(r.ok(), why(r));
}

TEST_CASE("zig-zag completion") {
  auto incl = corpus_inclusion<Q>(q);
  auto z = zigzag_complete(incl, incl);
  CHECK_MESSAGE(z.report.ok(), why(z.report));
  CHECK(z.zeta1_test.verdict.weak);
  CHECK(z.zeta2_test.verdict.weak);
  auto c2 = identity_morphism(corpus_cyclic2<Q>(q));
  auto zc = zigzag_complete(c2, c2);
  CHECK_MESSAGE(zc.report.ok(), why(zc.report));
  CHECK_THROWS_AS(zigzag_complete(corpus_discrete_collapse<Q>(q), corpus_discrete_collapse<Q>(q)), PreconditionError);
}

TEST_CASE("Morita witness") {
  for (const auto& p : {unit_c2(), triv_incl(), sqrt2()}) {
    auto r = morita_witness(p);
    CHECK_MESSAGE(r.ok(), p->p.name << ": " << why(r));
  }
  auto left_only = trivial_bundle(corpus_discrete_collapse<Q>(q));
  CHECK_FALSE(morita_witness(left_only).ok());
}

TEST_CASE("monoidal comparison") {
  auto p = sqrt2();
  auto c2 = corpus_cyclic2<Q>(q);
  auto mc = monoidal_comparison(regular_comodule(c2), regular_comodule(c2), p->p);
  CHECK(mc.dom.dim() == 4);
  CHECK(mc.bijective);
  CHECK(mc.colinear);
  CHECK(mc.symmetric);
}

TEST_CASE("reconstruction of a bundle from its equivalence") {
  for (const auto& p : {unit_c2(), triv_incl(), sqrt2()}) {
    auto rec = reconstruct_bundle(p->p, q);
    CHECK_MESSAGE(rec.report.ok(), p->p.name << ": " << why(rec.report));
    CHECK(rec.iso.has_value());
  }
  CHECK_THROWS_AS(reconstruct_bundle(trivial_bundle(corpus_discrete_collapse<Q>(q))->p, q), PreconditionError);
}

TEST_CASE("prime field agrees") {
  Field f7{7};
  auto p = require_principal(corpus_graded_quadratic<Fp>(2, f7), Chirality::both);
  auto r = morita_witness(p);
  CHECK_MESSAGE(r.ok(), why(r));
  auto w = weak_equivalence_test(corpus_discrete_collapse<Fp>(f7));
  CHECK_FALSE(w.verdict.weak);
  CHECK(w.verdict.coherent);
}
