#include <filesystem>

#include "doctest.h"
#include "hopfalg/io.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

Field q;

bool same_hopf(const HopfAlgebroid<Q>& a, const HopfAlgebroid<Q>& b) {
  return a.A->same_structure(*b.A) && a.H->same_structure(*b.H) && same_matrix(a.s.matrix, b.s.matrix) &&
         same_matrix(a.t.matrix, b.t.matrix) && same_matrix(a.comult, b.comult) && same_matrix(a.counit, b.counit) &&
         same_matrix(a.antipode, b.antipode) && a.labels == b.labels;
}

template <class F> ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("groupoids round trip") {
  Loader<Q> ld(q);
  for (const auto& name : corpus_groupoid_names()) {
    auto g = corpus_groupoid(name);
    const std::string text = write_groupoid(g);
    auto back = ld.groupoid_text(text);
    CHECK(back.objects == g.objects);
    CHECK(back.arrows == g.arrows);
    CHECK(back.comp == g.comp);
    CHECK(back.id == g.id);
    CHECK(back.inv == g.inv);
    CHECK(write_groupoid(back) == text);
  }
}

TEST_CASE("identities and inverses are deduced") {
  Loader<Q> ld(q);
  auto g = ld.groupoid_text(
      "groupoid Z2  # two arrows\n"
      "objects *\n"
      "arrow e * *\narrow g * *\n"
      "comp e e e\ncomp e g g\ncomp g e g\ncomp g g e\n");
  CHECK(g.id == std::vector<int>{0});
  CHECK(g.inv == std::vector<int>{0, 1});
}

TEST_CASE("algebroids, morphisms and bundles round trip") {
  Loader<Q> ld(q);
  for (const auto& name : corpus_groupoid_names()) {
    auto h = corpus_hopf<Q>(name, q);
    const std::string text = write_hopf(*h);
    auto back = ld.hopf_text(text);
    CHECK_MESSAGE(same_hopf(*h, *back), name);
    CHECK(write_hopf(*back) == text);
  }
  for (const auto& name : corpus_morphism_names()) {
    auto m = corpus_morphism<Q>(name, q);
    const std::string text = write_morphism(m);
    auto back = ld.morphism_text(text);
    CHECK(same_hopf(*m.src, *back.src));
    CHECK(same_matrix(m.phi0.matrix, back.phi0.matrix));
    CHECK(same_matrix(m.phi1.matrix, back.phi1.matrix));
    CHECK(write_morphism(back) == text);
  }
  for (const auto& name : corpus_bundle_names()) {
    auto p = corpus_bundle<Q>(name, q);
    const std::string text = write_bundle(p);
    auto back = ld.bundle_text(text);
    CHECK(back.P->same_structure(*p.P));
    CHECK(same_matrix(back.lambda, p.lambda));
    CHECK(same_matrix(back.rho, p.rho));
    CHECK(same_matrix(back.alpha.matrix, p.alpha.matrix));
    CHECK(same_matrix(back.beta.matrix, p.beta.matrix));
    CHECK_MESSAGE(write_bundle(back) == text, name);
  }
  auto c = regular_comodule(corpus_hopf<Q>("PR2", q));
  auto back = ld.comodule_text(write_comodule(c, "corpus:PR2"));
  CHECK(same_matrix(back.coaction, c.coaction));
  CHECK(verify_comodule(back).ok());
}

TEST_CASE("prime field round trip") {
  Field f7{7};
  Loader<Fp> ld(f7);
  auto p = corpus_bundle<Fp>("SQRT2", f7);
  const std::string text = write_bundle(p, "corpus:C2", "corpus:C2");
  auto back = ld.bundle_text(text);
  CHECK(back.H == back.K);  // the same reference is loaded once
  CHECK(write_bundle(back, "corpus:C2", "corpus:C2") == text);
  CHECK(verify_bicomodule_algebra(back).ok());
}

TEST_CASE("references resolve relative to the referring file") {
  auto dir = std::filesystem::temp_directory_path() / "hopfalg_io_test";
  std::filesystem::create_directories(dir / "sub");
  auto c2 = corpus_hopf<Q>("C2", q);
  write_file((dir / "sub" / "c2.halg").string(), write_hopf(*c2));
  write_file((dir / "sqrt2.bnd").string(), write_bundle(corpus_bundle<Q>("SQRT2", q), "sub/c2.halg", "sub/c2.halg"));
  Loader<Q> ld(q);
  auto p = ld.bundle((dir / "sqrt2.bnd").string());
  CHECK(p.H == p.K);
  CHECK(same_hopf(*p.H, *c2));
  std::filesystem::remove_all(dir);
}

TEST_CASE("errors carry line and column") {
  Loader<Q> ld(q);
  auto e = parse_error([&] { ld.algebra_text("algebra k\ndim 1\nc 0 0 0 1/0\nunit 1\n", "k.alg"); });
  CHECK(e.file == "k.alg");
  CHECK(e.line == 3);
  CHECK(e.column == 9);

  e = parse_error([&] { ld.algebra_text("algebra k\ndim 1\nc 0 0 3 1\nunit 1\n"); });
  CHECK(e.line == 3);
  CHECK(e.column == 7);

  e = parse_error([&] { ld.algebra_text("algebra k\n  dim 1\n  bogus\n"); });
  CHECK(e.line == 3);
  CHECK(e.column == 3);

  e = parse_error([&] { ld.groupoid_text("groupoid g\nobjects a\narrow e a b\n"); });
  CHECK(e.line == 3);
  CHECK(e.column == 11);

  // The matrix is 2 x 2 but s must be dim H x dim A = 2 x 1.
  auto text = write_hopf(*corpus_hopf<Q>("C2", q));
  const std::string s_block = "matrix s 2 1\n1\n1\n";
  auto at = text.find(s_block);
  REQUIRE(at != std::string::npos);
  text.replace(at, s_block.size(), "matrix s 2 2\n1 0\n1 0\n");
  e = parse_error([&] { ld.hopf_text(text); });
  CHECK(std::string(e.what()).find("matrix s must be 2 x 1") != std::string::npos);

  e = parse_error([&] { ld.hopf_text("hopf x\nbase\nalgebra k\ndim 1\nunit 1\n"); });
  CHECK(std::string(e.what()).find("unexpected end of input") != std::string::npos);
}

TEST_CASE("structural failures name the entity") {
  Loader<Q> ld(q);
  // A partial composition table fails the groupoid check; a bundle over mismatched bases fails assembly.
  CHECK_THROWS(ld.groupoid_text("groupoid g\nobjects a\narrow e a a\narrow f a a\ncomp e e e\ncomp e f f\n"));
  auto bad = corpus_bundle<Q>("SQRT2", q);
  std::string text = write_bundle(bad, "corpus:C2", "corpus:PT");
  CHECK_THROWS(ld.bundle_text(text));
}
