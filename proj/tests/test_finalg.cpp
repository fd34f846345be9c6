#include "doctest.h"
#include "hopfalg/corpus.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

AlgPtr<Q> field_alg() { return share(FinAlgebra<Q>::diagonal(1, "k")); }

// dim (M (x) N) minus the rank of the balancing relations, computed from scratch.
int quotient_rank(const FinModule<Q>& m, const FinModule<Q>& n) {
  const int plain = m.dim * n.dim;
  std::vector<Vec<Q>> rel;
  for (std::size_t a = 0; a < m.act.size(); ++a)
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < n.dim; ++j) {
        Vec<Q> v = Vec<Q>::Zero(plain);
        for (int x = 0; x < m.dim; ++x) v(x * n.dim + j) += m.act[a](x, i);
        for (int y = 0; y < n.dim; ++y) v(i * n.dim + y) -= n.act[a](y, j);
        rel.push_back(v);
      }
  Mat<Q> r(plain, static_cast<Eigen::Index>(rel.size()));
  for (std::size_t c = 0; c < rel.size(); ++c) r.col(static_cast<Eigen::Index>(c)) = rel[c];
  return plain - rank<Q>(r);
}

void check_balanced(const FinModule<Q>& m, const FinModule<Q>& n) {
  auto bt = tensor_over(m, n, *m.over);
  CHECK(bt.dim == quotient_rank(m, n));
  CHECK(same_matrix(Mat<Q>(bt.proj * bt.sect), identity<Q>(bt.dim)));
  // The projection kills every relation ma (x) n - m (x) an.
  for (std::size_t a = 0; a < m.act.size(); ++a) {
    Mat<Q> lhs = Mat<Q>::Zero(m.dim * n.dim, m.dim * n.dim);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < n.dim; ++j) {
        for (int x = 0; x < m.dim; ++x) lhs(x * n.dim + j, i * n.dim + j) += m.act[a](x, i);
        for (int y = 0; y < n.dim; ++y) lhs(i * n.dim + y, i * n.dim + j) -= n.act[a](y, j);
      }
    CHECK(is_zero_matrix(Mat<Q>(bt.proj * lhs)));
  }
}

Mat<Q> kron(const Mat<Q>& a, const Mat<Q>& b) {
  Mat<Q> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("algebra axioms") {
  CHECK(verify_algebra(*field_alg()).ok());
  CHECK(verify_algebra(FinAlgebra<Q>::diagonal(4)).ok());
  CHECK(verify_algebra(FinAlgebra<Q>::quadratic(Q(2))).ok());
  // k^2 with e0 e1 = e0 added: no longer commutative.
  std::vector<std::tuple<int, int, int, Q>> c = {{0, 0, 0, Q(1)}, {1, 1, 1, Q(1)}, {0, 1, 0, Q(1)}};
  Vec<Q> u(2);
  u << Q(1), Q(1);
  auto bad = FinAlgebra<Q>::from_constants(2, c, u);
  Report r = verify_algebra(bad);
  REQUIRE_FALSE(r.ok());
  const std::string n = r.first_failure()->name;
  CHECK((n.find("commutativ") != std::string::npos || n.find("associativ") != std::string::npos ||
         n.find("unit") != std::string::npos));
}

TEST_CASE("algebra morphisms") {
  auto k2 = share(FinAlgebra<Q>::diagonal(2));
  auto k = field_alg();
  Mat<Q> ev(1, 2), diag(2, 1), sum(1, 2);
  ev << Q(0), Q(1);
  diag << Q(1), Q(1);
  sum << Q(1), Q(1);
  CHECK(verify_alg_morphism(AlgMorphism<Q>{k2, k, ev}).ok());
  CHECK(verify_alg_morphism(AlgMorphism<Q>{k, k2, diag}).ok());
  CHECK_FALSE(verify_alg_morphism(AlgMorphism<Q>{k2, k, sum}).ok());  // not multiplicative
  auto comp = compose(AlgMorphism<Q>{k2, k, ev}, AlgMorphism<Q>{k, k2, diag});
  CHECK(same_matrix(comp.matrix, identity<Q>(1)));
}

TEST_CASE("balanced tensors") {
  auto incl = corpus_inclusion<Q>(q);
  const auto& h = *incl.src;
  auto a = h.A;
  check_balanced(FinModule<Q>::regular(a), FinModule<Q>::regular(a));
  CHECK(tensor_over(FinModule<Q>::regular(a), FinModule<Q>::regular(a), *a).dim == a->dim());

  auto ht = FinModule<Q>::via(h.t);
  auto hs = FinModule<Q>::via(h.s);
  auto b = FinModule<Q>::via(incl.phi0);
  check_balanced(ht, b);
  CHECK(tensor_over(ht, b, *a).dim == 2);
  // B (x)_A H (x)_A B, iterated.
  auto bh = tensor_over(b, hs, *a);
  FinModule<Q> bh_mod{a, bh.dim, {}};
  for (const auto& m : ht.act) bh_mod.act.push_back(Mat<Q>(bh.proj * kron(identity<Q>(b.dim), m) * bh.sect));
  CHECK(verify_module(bh_mod).ok());
  check_balanced(bh_mod, b);
  CHECK(tensor_over(bh_mod, b, *a).dim == 1);

  auto k = field_alg();
  CHECK_THROWS_AS(tensor_over(FinModule<Q>::regular(k), b, *a), std::invalid_argument);
}

TEST_CASE("module maps descend to the balanced tensor and compose") {
  auto pr2 = corpus_pair<Q>(q);
  auto a = pr2->A;
  auto m = FinModule<Q>::via(pr2->t);
  auto n = FinModule<Q>::via(pr2->s);
  auto bt = tensor_over(m, n, *a);
  // Multiplication by fixed elements of H are A-linear.
  Mat<Q> f1 = pr2->H->mult_by(pr2->H->basis(1) + pr2->H->basis(2));
  Mat<Q> f2 = pr2->H->mult_by(Vec<Q>(pr2->H->one() + pr2->H->basis(3)));
  Mat<Q> g1 = pr2->H->mult_by(pr2->H->basis(0));
  Mat<Q> g2 = pr2->H->mult_by(Vec<Q>(Q(2) * pr2->H->one()));
  auto descend = [&](const Mat<Q>& f, const Mat<Q>& g) {
    Mat<Q> plain = kron(f, g);
    // Well defined: the image of a relation is a relation.
    CHECK(same_matrix(Mat<Q>(bt.proj * plain), Mat<Q>(bt.proj * plain * bt.sect * bt.proj)));
    return Mat<Q>(bt.proj * plain * bt.sect);
  };
  CHECK(same_matrix(descend(Mat<Q>(f2 * f1), Mat<Q>(g2 * g1)), Mat<Q>(descend(f2, g2) * descend(f1, g1))));
}

TEST_CASE("projectivity") {
  auto k = field_alg();
  auto free = is_projective(FinModule<Q>::regular(k));
  CHECK(free.projective);
  CHECK(same_matrix(free.section, identity<Q>(1)));

  auto k2 = share(FinAlgebra<Q>::diagonal(2));
  auto reg = is_projective(FinModule<Q>::regular(k2));
  REQUIRE(reg.projective);
  CHECK(same_matrix(Mat<Q>(reg.cover * reg.section), identity<Q>(2)));

  // k over k[x]/(x^2) with x acting as 0.
  auto dual = share(FinAlgebra<Q>::quadratic(Q(0), "k[x]/(x^2)"));
  FinModule<Q> kk{dual, 1, {identity<Q>(1), Mat<Q>::Zero(1, 1)}};
  CHECK(verify_module(kk).ok());
  CHECK_FALSE(is_projective(kk).projective);

  auto triv = trivial_bundle(corpus_inclusion<Q>(q));
  CHECK(is_projective(FinModule<Q>::via(triv->p.beta)).projective);
}

TEST_CASE("faithful flatness") {
  auto k = field_alg();
  auto k2 = share(FinAlgebra<Q>::diagonal(2));
  CHECK(is_faithfully_flat(AlgMorphism<Q>::identity(k2)));
  Mat<Q> diag(2, 1), ev(1, 2);
  diag << Q(1), Q(1);
  ev << Q(1), Q(0);
  CHECK(is_faithfully_flat(AlgMorphism<Q>{k, k2, diag}));
  AlgMorphism<Q> proj{k2, k, ev};
  CHECK_FALSE(is_faithfully_flat(proj));
  Mat<Q> ann = annihilator(FinModule<Q>::via(proj));
  REQUIRE(ann.cols() == 1);
  CHECK(ann(0, 0) == Q(0));  // the killed idempotent e1
}

TEST_CASE("faithfully flat maps do not kill nonzero quotients") {
  // Probe family: A / I for every ideal I spanned by basis vectors.
  auto check = [](const AlgMorphism<Q>& beta) {
    auto a = beta.src;
    const int n = a->dim();
    auto p = FinModule<Q>::via(beta);
    for (int mask = 1; mask + 1 < (1 << n); ++mask) {
      Mat<Q> ideal(n, 0);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) {
          ideal.conservativeResize(n, ideal.cols() + 1);
          ideal.col(ideal.cols() - 1) = a->basis(i);
        }
      bool is_ideal = true;
      for (int i = 0; i < n && is_ideal; ++i) is_ideal = columns_in_span<Q>(ideal, Mat<Q>(a->lmul(i) * ideal));
      if (!is_ideal) continue;
      // Quotient module on the complement coordinates.
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if (!(mask >> i & 1)) keep.push_back(i);
      FinModule<Q> quo{a, static_cast<int>(keep.size()), {}};
      for (int e = 0; e < n; ++e) {
        Mat<Q> act(quo.dim, quo.dim);
        for (int r = 0; r < quo.dim; ++r)
          for (int c = 0; c < quo.dim; ++c) act(r, c) = a->lmul(e)(keep[r], keep[c]);
        quo.act.push_back(act);
      }
      CHECK(tensor_over(quo, p, *a).dim > 0);
    }
  };
  for (const auto& b : {unit_bundle(corpus_pair<Q>(q)), trivial_bundle(corpus_inclusion<Q>(q))}) {
    REQUIRE(is_faithfully_flat(b->p.alpha));
    check(b->p.alpha);
  }
  auto pr2 = corpus_pair<Q>(q);
  check(pr2->s);
  check(pr2->t);
}
