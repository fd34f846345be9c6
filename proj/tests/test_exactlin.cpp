#include <random>

#include "doctest.h"
#include "hopfalg/corpus.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

template <class S> Mat<S> random_matrix(std::mt19937& g, int rows, int cols, int rank_cap, const Field& f) {
  // Product of two random factors caps the rank, so deficient matrices show up often.
  std::uniform_int_distribution<int> d(-3, 3);
  Mat<S> a(rows, rank_cap), b(rank_cap, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rank_cap; ++j) a(i, j) = ScalarIO<S>::from_int(d(g), f);
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = ScalarIO<S>::from_int(d(g), f);
  return a * b;
}

template <class S> void kernel_properties(const Field& f) {
  std::mt19937 g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(g() % 6), cols = 1 + static_cast<int>(g() % 6);
    const int cap = 1 + static_cast<int>(g() % 6);
    Mat<S> m = random_matrix<S>(g, rows, cols, cap, f);
    Mat<S> k = kernel_basis<S>(m);
    CHECK(is_zero_matrix(Mat<S>(m * k)));
    CHECK(rank<S>(m) + k.cols() == cols);
    CHECK(rank<S>(k) == k.cols());
    if (rows == cols) {
      auto inv = inverse<S>(m);
      CHECK(inv.has_value() == (rank<S>(m) == rows));
      if (inv) {
        CHECK(same_matrix(Mat<S>(m * *inv), identity<S>(rows)));
        CHECK(same_matrix(Mat<S>(*inv * m), identity<S>(rows)));
      }
    }
    // A right-hand side in the image is always solvable and the particular solution works.
    Mat<S> x = random_matrix<S>(g, cols, 1, 1, f);
    Mat<S> b = m * x;
    auto sol = solve<S>(m, b);
    REQUIRE(sol.consistent);
    CHECK(same_matrix(Mat<S>(m * sol.particular), b));
    CHECK(sol.kernel.cols() == k.cols());
  }
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  Q a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(Q::parse(" 10/4 ") == Q(5, 2));
  CHECK(Q::parse("-7") == Q(-7));
  CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
  CHECK_THROWS(Q::parse("1/0"));
  CHECK_THROWS(Q::parse("x"));
  CHECK_THROWS(Q(1) / Q(0));
}

TEST_CASE("prime field residues") {
  Fp a(9, 7), b(-1, 7);
  CHECK(a.residue() == 2);
  CHECK(b.residue() == 6);
  CHECK((a * a.inverse()).residue() == 1);
  CHECK(Fp::parse("3/2", 7).residue() == 5);  // 2 * 5 = 10 = 3 mod 7
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), FieldMismatch);
  CHECK(Field::parse("fp:7").p == 7);
  CHECK(Field::parse("q").rational());
  CHECK_THROWS(Field::parse("fp:6"));
  CHECK_THROWS(Field::parse("reals"));
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(1000001));
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis<Q>(identity<Q>(2)).cols() == 0);
  Mat<Q> m(1, 2);
  m << Q(1), Q(1);
  Mat<Q> k = kernel_basis<Q>(m);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK_FALSE(k(0, 0) == Q(0));
}

TEST_CASE("solve examples") {
  Mat<Q> b(3, 1);
  b << Q(1), Q(-2), Q(1, 3);
  auto s = solve<Q>(identity<Q>(3), b);
  REQUIRE(s.consistent);
  CHECK(same_matrix(s.particular, b));
  CHECK(s.kernel.cols() == 0);

  Mat<Q> a(1, 2), z = Mat<Q>::Zero(1, 1);
  a << Q(1), Q(1);
  auto t = solve<Q>(a, z);
  REQUIRE(t.consistent);
  CHECK(is_zero_matrix(t.particular));
  REQUIRE(t.kernel.cols() == 1);
  CHECK(t.kernel(0, 0) == -t.kernel(1, 0));

  Mat<Q> sing(2, 2), rhs(2, 1);
  sing << Q(1), Q(2), Q(2), Q(4);
  rhs << Q(1), Q(3);
  CHECK_FALSE(solve<Q>(sing, rhs).consistent);
  CHECK_FALSE(inverse<Q>(sing).has_value());
}

TEST_CASE("kernel, rank and inverse properties over the rationals") { kernel_properties<Q>(q); }
TEST_CASE("kernel, rank and inverse properties over F_7") { kernel_properties<Fp>(Field{7}); }

TEST_CASE("pivot order is deterministic") {
  Mat<Q> m(2, 3);
  m << Q(0), Q(2), Q(4), Q(0), Q(1), Q(2);
  auto e = rref<Q>(m);
  REQUIRE(e.rank() == 1);
  CHECK(e.pivots[0] == 1);
  CHECK(e.r(0, 1) == Q(1));
  CHECK(e.r(0, 2) == Q(2));
}

TEST_CASE("coassociativity defect of the pair groupoid dual vanishes") {
  auto h = corpus_pair<Q>(q);
  auto ha = Space<Q>::atom(h->dimH());
  Mat<Q> defect = tabulate(*ha, *h->hhh, [&](const Tensor<Q>& x) {
    Tensor<Q> d = h->delta(x, 0);
    return h->delta(d, 0) - h->delta(d, 1);
  });
  CHECK(is_zero_matrix(defect));
  CHECK(kernel_basis<Q>(defect).cols() == h->dimH());
  CHECK(h->hhh->dim() == 16);  // composable triples: any four objects in a row
}

TEST_CASE("solving the canonical map of U(C2) gives the closed form") {
  auto h = corpus_cyclic2<Q>(q);
  auto b = unit_bundle(h);
  Mat<Q> closed = unit_can_inverse_closed_form(h);
  const auto& cod = *b->can_l.cod;
  for (int u = 0; u < h->dimH(); ++u) {
    // u (x) 1 in H (x)_A H.
    Tensor<Q> t = Tensor<Q>::basis(h->dimH(), u).insert(1, h->H->one());
    Mat<Q> rhs = cod.project_vec(t);
    auto sol = solve<Q>(b->can_l.matrix, rhs);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.cols() == 0);
    CHECK(same_matrix(sol.particular, Mat<Q>(closed * rhs)));
  }
}
