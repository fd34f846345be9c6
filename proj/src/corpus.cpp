#include "hopfalg/corpus.hpp"

namespace hopfalg {

template <class S> HopfPtr<S> corpus_point(const Field& f) { return dualize<S>(corpus_groupoid("PT"), f); }
template <class S> HopfPtr<S> corpus_pair(const Field& f) { return dualize<S>(corpus_groupoid("PR2"), f); }
template <class S> HopfPtr<S> corpus_cyclic2(const Field& f) { return dualize<S>(corpus_groupoid("C2"), f); }

template <class S> HopfMorphism<S> corpus_inclusion(const Field& f) {
  FinGroupoid pt = corpus_groupoid("PT"), p2 = corpus_groupoid("PR2");
  GroupoidFunctor fun{&pt, &p2, {0}, {p2.id[0]}};
  return dualize_functor<S>(fun, dualize<S>(pt, f), dualize<S>(p2, f), f);
}

template <class S> HopfMorphism<S> corpus_discrete_collapse(const Field& f) {
  // discrete(1) is the point.
  FinGroupoid d2 = corpus_groupoid("D2"), d1 = corpus_groupoid("PT");
  GroupoidFunctor fun{&d2, &d1, {0, 0}, {0, 0}};
  return dualize_functor<S>(fun, dualize<S>(d2, f), dualize<S>(d1, f), f);
}

template <class S> BicomoduleAlgebra<S> corpus_graded_quadratic(long c, const Field& f) {
  auto h = corpus_cyclic2<S>(f);
  const std::string name = c == 2 ? "SQRT2" : "k[x]/(x^2-" + std::to_string(c) + ")";
  auto p = share(FinAlgebra<S>::quadratic(ScalarIO<S>::from_int(c, f), name));
  const S one = ScalarIO<S>::from_int(1, f);
  // Arrow 0 is the identity of C2; g = delta_e - delta_g is the sign character.
  Mat<S> lam = Mat<S>::Zero(4, 2), rho = Mat<S>::Zero(4, 2);
  lam(0 * 2 + 0, 0) = one;  // 1 |-> (de + dg) (x) 1
  lam(1 * 2 + 0, 0) = one;
  lam(0 * 2 + 1, 1) = one;  // x |-> (de - dg) (x) x
  lam(1 * 2 + 1, 1) = -one;
  rho(0 * 2 + 0, 0) = one;  // 1 |-> 1 (x) (de + dg)
  rho(0 * 2 + 1, 0) = one;
  rho(1 * 2 + 0, 1) = one;  // x |-> x (x) (de - dg)
  rho(1 * 2 + 1, 1) = -one;
  Mat<S> unit = p->one();
  return make_bicomodule_algebra_plain<S>(name, h, h, p, unit, unit, lam, rho);
}

std::vector<std::string> corpus_groupoid_names() { return {"PT", "D2", "D3", "PR2", "PR3", "C2", "C3", "S3", "SWAP"}; }
std::vector<std::string> corpus_morphism_names() { return {"INCL", "COLLAPSE"}; }

std::vector<std::string> corpus_bundle_names() {
  std::vector<std::string> out;
  for (const auto& g : corpus_groupoid_names()) out.push_back("U(" + g + ")");
  for (const char* n : {"TRIV(INCL)", "TRIV(COLLAPSE)", "SQRT2", "SPLIT"}) out.emplace_back(n);
  return out;
}

FinGroupoid corpus_groupoid(const std::string& name) {
  FinGroupoid g;
  if (name == "PT") g = point_groupoid();
  else if (name == "D2") g = discrete_groupoid(2);
  else if (name == "D3") g = discrete_groupoid(3);
  else if (name == "PR2") g = pair_groupoid(2);
  else if (name == "PR3") g = pair_groupoid(3);
  else if (name == "C2") g = cyclic_groupoid(2);
  else if (name == "C3") g = cyclic_groupoid(3);
  else if (name == "S3") g = symmetric3_groupoid();
  else if (name == "SWAP") g = action_groupoid({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}, "SWAP");
  else throw std::invalid_argument("unknown corpus groupoid " + name);
  g.name = name;
  return g;
}

template <class S> HopfPtr<S> corpus_hopf(const std::string& name, const Field& f) {
  return dualize<S>(corpus_groupoid(name), f);
}

template <class S> HopfMorphism<S> corpus_morphism(const std::string& name, const Field& f) {
  if (name == "INCL") return corpus_inclusion<S>(f);
  if (name == "COLLAPSE") return corpus_discrete_collapse<S>(f);
  throw std::invalid_argument("unknown corpus morphism " + name);
}

template <class S> BicomoduleAlgebra<S> corpus_bundle(const std::string& name, const Field& f) {
  if (name == "SQRT2") return corpus_graded_quadratic<S>(2, f);
  if (name == "SPLIT") return corpus_graded_quadratic<S>(1, f);
  if (name.size() > 6 && name.rfind("TRIV(", 0) == 0 && name.back() == ')')
    return trivial_bundle(corpus_morphism<S>(name.substr(5, name.size() - 6), f))->p;
  if (name.size() > 3 && name.rfind("U(", 0) == 0 && name.back() == ')')
    return unit_bundle(corpus_hopf<S>(name.substr(2, name.size() - 3), f))->p;
  throw std::invalid_argument("unknown corpus bicomodule algebra " + name);
}

#define HOPFALG_INSTANTIATE(S)                                                      \
  template HopfPtr<S> corpus_point<S>(const Field&);                                \
  template HopfPtr<S> corpus_pair<S>(const Field&);                                 \
  template HopfPtr<S> corpus_cyclic2<S>(const Field&);                              \
  template HopfMorphism<S> corpus_inclusion<S>(const Field&);                       \
  template HopfMorphism<S> corpus_discrete_collapse<S>(const Field&);               \
  template BicomoduleAlgebra<S> corpus_graded_quadratic<S>(long, const Field&);      \
  template HopfPtr<S> corpus_hopf<S>(const std::string&, const Field&);             \
  template HopfMorphism<S> corpus_morphism<S>(const std::string&, const Field&);    \
  template BicomoduleAlgebra<S> corpus_bundle<S>(const std::string&, const Field&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
