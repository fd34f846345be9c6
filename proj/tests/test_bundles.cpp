#include "doctest.h"
#include "hopfalg/corpus.hpp"
#include "hopfalg/morita.hpp"
#include "hopfalg/suites.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

std::string why(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + " " + c->witness : "";
}

BundlePtr<Q> triv_incl() { return trivial_bundle(corpus_inclusion<Q>(q)); }
BundlePtr<Q> sqrt2() { return require_principal(corpus_graded_quadratic<Q>(2, q), Chirality::both); }

bool same_bundle_data(const BicomoduleAlgebra<Q>& a, const BicomoduleAlgebra<Q>& b) {
  return same_matrix(a.lambda, b.lambda) && same_matrix(a.rho, b.rho) && same_matrix(a.alpha.matrix, b.alpha.matrix) &&
         same_matrix(a.beta.matrix, b.beta.matrix);
}

}  // namespace

TEST_CASE("unit bundles are principal on both sides") {
  for (const auto& h : {corpus_point<Q>(q), corpus_cyclic2<Q>(q), corpus_pair<Q>(q)}) {
    auto b = unit_bundle(h);
    CHECK(b->left);
    CHECK(b->right);
    CHECK(b->dim() == h->dimH());
    auto r = verify_translation_identities(*b);
    CHECK_MESSAGE(r.ok(), h->name << ": " << why(r));
    // Closed form u (x) v |-> u(1) (x) S(u(2)) v of the inverse canonical map.
    CHECK(same_matrix(b->can_l_inv, unit_can_inverse_closed_form(h)));
  }
}

TEST_CASE("trivial bundle of the inclusion") {
  auto b = triv_incl();
  CHECK(b->left);
  CHECK(b->dim() == 2);
  CHECK_MESSAGE(verify_translation_identities(*b).ok(), why(verify_translation_identities(*b)));
  auto both = verify_principal(b->p, Chirality::both);
  CHECK(both.report.ok() == (both.bundle != nullptr));
}

TEST_CASE("principality needs a faithfully flat base map") {
  auto pt = corpus_point<Q>(q);
  auto d2 = dualize<Q>(discrete_groupoid(2), q);
  auto k = share(FinAlgebra<Q>::diagonal(1, "k"));
  Mat<Q> one = Mat<Q>::Ones(1, 1), beta(1, 2), rho(2, 1);
  beta << Q(1), Q(0);
  rho << Q(1), Q(1);
  auto p = make_bicomodule_algebra_plain<Q>("half", pt, d2, k, one, beta, one, rho);
  CHECK(verify_bicomodule_algebra(p).ok());
  auto c = verify_principal(p, Chirality::left);
  CHECK(c.bundle == nullptr);
  CHECK(c.report.first_failure()->witness == "beta not faithfully flat");
  CHECK_THROWS_AS(require_principal(p, Chirality::left), PreconditionError);
}

TEST_CASE("graded square root of two") {
  auto b = sqrt2();
  CHECK(b->left);
  CHECK(b->right);
  CHECK(b->can_l.dom->dim() == 4);
  CHECK(is_bijective(b->can_l.matrix));
  // tau(g) = 1/2 x (x) x for the sign character g.
  Vec<Q> g = Vec<Q>::Zero(2);
  g << Q(1), Q(-1);
  Tensor<Q> xx({2, 2});
  xx.add({1, 1}, Q(1, 2));
  CHECK(same_matrix(Vec<Q>(b->tau * g), b->can_l.dom->project_vec(xx)));
  auto r = verify_translation_identities(*b);
  CHECK_MESSAGE(r.ok(), why(r));
}

TEST_CASE("translation identities on the corpus") {
  std::vector<BundlePtr<Q>> bs = {unit_bundle(corpus_cyclic2<Q>(q)), unit_bundle(corpus_pair<Q>(q)), triv_incl(),
                                  sqrt2(), require_principal(corpus_graded_quadratic<Q>(1, q), Chirality::both)};
  for (const auto& b : bs) {
    auto r = verify_translation_identities(*b);
    CHECK_MESSAGE(r.ok(), b->p.name << ": " << why(r));
    CHECK(r.checks.size() >= (b->right ? 20u : 10u));
  }
}

TEST_CASE("a corrupted translation cache is detected") {
  auto b = unit_bundle(corpus_pair<Q>(q));
  const int n = b->dim();
  Mat<Q> plain = b->can_l.dom->step(1).sect * b->tau;
  Mat<Q> swap = Mat<Q>::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) swap(j * n + i, i * n + j) = Q(1);
  auto bad = with_translation(*b, Mat<Q>(swap * plain));
  auto r = verify_translation_identities(*bad);
  CHECK_FALSE(r.ok());
  // P is commutative, so u+ u- = alpha(eps(u)) survives the swap.
  bool product_ok = false;
  for (const auto& c : r.checks)
    if (c.name == "left: u+ u- = alpha(eps(u))") product_ok = c.status == Status::pass;
  CHECK(product_ok);
}

TEST_CASE("pull-back and restriction") {
  auto b = triv_incl();
  auto k2 = share(FinAlgebra<Q>::diagonal(2, "k2"));
  Mat<Q> unit = k2->one();
  auto rb = restricted_bundle(*b, AlgMorphism<Q>{b->p.K->A, k2, unit});
  CHECK(rb.bundle->dim() == 4);
  CHECK(coinvariants(rb.bundle->p.left_comodule()).cols() == 2);
  CHECK_MESSAGE(verify_translation_identities(*rb.bundle).ok(), why(verify_translation_identities(*rb.bundle)));

  auto psi = corpus_discrete_collapse<Q>(q);
  auto r = verify_restriction_pullback(*b, psi);
  CHECK_MESSAGE(r.ok(), why(r));

  // Pulling back along the identity changes nothing but the carrier.
  auto same = pullback_bundle(identity_morphism(b->p.K), *b);
  CHECK(same->dim() == b->dim());
}

TEST_CASE("trivialization round trip") {
  auto incl = corpus_inclusion<Q>(q);
  auto b = triv_incl();
  auto c2 = corpus_cyclic2<Q>(q);
  auto u = unit_bundle(c2);
  struct Case {
    BundlePtr<Q> p;
    Mat<Q> gamma;
  };
  for (const auto& c : {Case{b, collapse_splitting(incl)}, Case{u, c2->counit}}) {
    auto t = trivialize(c.p, c.gamma);
    CHECK_MESSAGE(verify_bundle_morphism(t.f).ok(), why(verify_bundle_morphism(t.f)));
    CHECK_MESSAGE(verify_bundle_morphism(t.g).ok(), why(verify_bundle_morphism(t.g)));
    CHECK(same_matrix(Mat<Q>(t.f.f * t.g.f), identity<Q>(c.p->dim())));
    CHECK(same_matrix(Mat<Q>(t.g.f * t.f.f), identity<Q>(c.p->dim())));
    CHECK(verify_hopf_morphism(t.phi).ok());
    auto inv = invert_bundle_morphism(t.f);
    CHECK(same_matrix(inv.f, t.g.f));
    CHECK(same_matrix(compose(t.g, t.f).f, identity_bundle_morphism(t.triv).f));
  }
  CHECK_THROWS_AS(trivialize(u, Mat<Q>(Mat<Q>::Zero(1, 2))), PreconditionError);
  BundleMorphism<Q> zero{u, u, Mat<Q>::Zero(2, 2)};
  CHECK_THROWS_AS(invert_bundle_morphism(zero), std::logic_error);
  CHECK_FALSE(verify_bundle_morphism(zero).ok());
}

TEST_CASE("splitting search") {
  auto incl = corpus_inclusion<Q>(q);
  auto b = triv_incl();
  auto found = find_splittings(*b, q);
  // P is functions on the two arrows into the base object; each evaluation splits beta.
  REQUIRE(found.size() == 2);
  Mat<Q> gamma = collapse_splitting(incl);
  CHECK((same_matrix(found[0], gamma) || same_matrix(found[1], gamma)));
  CHECK(find_splittings(*sqrt2(), q).empty());
  auto split = require_principal(corpus_graded_quadratic<Q>(1, q), Chirality::left);
  auto two = find_splittings(*split, q);
  CHECK(two.size() == 2);
  for (const auto& g : two) CHECK(verify_bundle_morphism(trivialize(split, g).f).ok());

  CHECK(characters(FinAlgebra<Q>::quadratic(Q(2)), q).empty());
  CHECK(characters(FinAlgebra<Q>::quadratic(Q(4)), q).size() == 2);
  CHECK(characters(FinAlgebra<Q>::diagonal(3), q).size() == 3);
}

TEST_CASE("characters over a prime field") {
  Field f7{7};
  auto a = FinAlgebra<Fp>::quadratic(Fp(2, 7));  // 2 = 3^2 mod 7
  CHECK(characters(a, f7).size() == 2);
  auto b = FinAlgebra<Fp>::quadratic(Fp(3, 7));
  CHECK(characters(b, f7).empty());
}

TEST_CASE("zeta and eta") {
  for (const auto& b : {triv_incl(), unit_bundle(corpus_pair<Q>(q)), sqrt2()}) {
    for (const auto& m : {identity_comodule(b->p.H), regular_comodule(b->p.H)}) {
      auto z = zeta_iso(m, *b);
      CHECK_MESSAGE(z.mutually_inverse, b->p.name << " / " << m.name);
      CHECK(z.colinear);
      auto e = eta_map(m, *b);
      CHECK(e.bijective);
      CHECK(e.rank == m.dim());
      CHECK(e.colinear);
    }
  }
}

TEST_CASE("coinvariant quotient of a product comodule algebra") {
  auto c2 = corpus_cyclic2<Q>(q);
  auto phi = identity_morphism(c2);
  auto triv = trivial_bundle(phi);
  auto pl = triv->p.left_algebra();
  auto reg = regular_comodule_algebra(c2);
  auto qa = comodule_algebra_product(pl, reg);
  REQUIRE(qa.R->dim() == 4);
  auto sp = Space<Q>::chain({Space<Q>::atom(2), Space<Q>::atom(2)},
                            {Link<Q>{actions_via(*pl.R, pl.sigma.matrix), actions_via(*reg.R, reg.sigma.matrix)}});
  Mat<Q> f = tabulate(*Space<Q>::atom(2), *sp, [&](const Tensor<Q>& x) { return x.insert(1, reg.R->one()); });
  auto cq = coinvariant_quotient(qa, f, phi);
  CHECK_MESSAGE(cq.report.ok(), why(cq.report));
  CHECK(cq.T->dim() == 2);
  CHECK(cq.split);
  CHECK(cq.lands_in_coinvariants);
  CHECK(cq.algebra_iso);
  REQUIRE(cq.bundle);
  CHECK(cq.bundle->left);

  auto cc = coinvariant_canonical(qa, f, *triv);
  CHECK(cc.mutually_inverse);

  // Diagonal idempotents are coinvariant, so this algebra map is not colinear.
  Tensor<Q> d0({2, 2}), d1({2, 2});
  d0.add({0, 0}, Q(1));
  d0.add({1, 1}, Q(1));
  d1.add({0, 1}, Q(1));
  d1.add({1, 0}, Q(1));
  Mat<Q> bad(4, 2);
  bad.col(0) = sp->project_vec(d0);
  bad.col(1) = sp->project_vec(d1);
  CHECK_THROWS_AS(coinvariant_quotient(qa, bad, phi), PreconditionError);
}

TEST_CASE("opposite bundle is an involution") {
  for (const auto& b : {sqrt2(), unit_bundle(corpus_pair<Q>(q))}) {
    auto o = opposite_bundle(*b);
    CHECK(o->left);
    CHECK(o->right);
    CHECK(verify_translation_identities(*o).ok());
    CHECK(same_bundle_data(opposite_algebra(o->p), b->p));
  }
}

TEST_CASE("two-sided translation algebroids on the corpus") {
  struct Case {
    BicomoduleAlgebra<Q> p;
    int base, total;
  };
  // Total = H (x)_A P (x)_B K counted fibrewise: arrows out of each object times the fibre of P.
  std::vector<Case> cases = {{unit_bundle(corpus_point<Q>(q))->p, 1, 1},
                             {unit_bundle(corpus_cyclic2<Q>(q))->p, 2, 8},
                             {unit_bundle(corpus_pair<Q>(q))->p, 4, 16},
                             {triv_incl()->p, 2, 4},
                             {sqrt2()->p, 2, 8}};
  for (const auto& c : cases) {
    auto ts = two_sided_translation(c.p);
    CHECK(ts.total->dimA() == c.base);
    CHECK_MESSAGE(ts.total->dimH() == c.total, c.p.name);
    auto r = verify_hopf_algebroid(*ts.total);
    CHECK_MESSAGE(r.ok(), c.p.name << ": " << why(r));
    CHECK_MESSAGE(verify_hopf_morphism(ts.alpha).ok(), c.p.name << ": " << why(verify_hopf_morphism(ts.alpha)));
    CHECK_MESSAGE(verify_hopf_morphism(ts.beta).ok(), c.p.name << ": " << why(verify_hopf_morphism(ts.beta)));
  }
  // Over the point the construction returns the point itself.
  auto pt = two_sided_translation(unit_bundle(corpus_point<Q>(q))->p);
  auto point = corpus_point<Q>(q);
  CHECK(pt.total->H->same_structure(*point->H));
  CHECK(same_matrix(pt.total->counit, point->counit));
  CHECK(same_matrix(pt.total->antipode, point->antipode));
}

TEST_CASE("cotensor dimension matches the kernel-rank oracle on composable corpus pairs") {
  std::vector<BundlePtr<Q>> bs;
  for (const auto& n : corpus_bundle_names()) {
    try {
      auto b = require_principal(corpus_bundle<Q>(n, q), Chirality::left);
      bs.push_back(b);
      bs.push_back(opposite_bundle(*b));
    } catch (const PreconditionError&) {
    }
  }
  int composed = 0;
  for (const auto& a : bs)
    for (const auto& b : bs) {
      if (a->K().name != b->H().name) continue;
      BundlePtr<Q> c;
      try {
        c = compose_bundles(*a, *b);
      } catch (const PreconditionError&) {
        continue;
      }
      ++composed;
      CAPTURE(a->p.name);
      CAPTURE(b->p.name);
      CHECK(c->dim() == cotensor_dim_oracle(a->p.right_comodule(), b->p.left_comodule()));
    }
  CHECK(composed >= 10);
}
