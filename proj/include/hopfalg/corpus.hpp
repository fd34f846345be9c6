#ifndef HOPFALG_CORPUS_HPP
#define HOPFALG_CORPUS_HPP

#include "hopfalg/bundle.hpp"
#include "hopfalg/groupoid.hpp"

namespace hopfalg {

// Named examples used by the tests, the acceptance run and the CLI.
template <class S> HopfPtr<S> corpus_point(const Field& f);       // PT
template <class S> HopfPtr<S> corpus_pair(const Field& f);        // PR2, the pair groupoid on two objects
template <class S> HopfPtr<S> corpus_cyclic2(const Field& f);     // C2
// INCL: PR2 -> PT, dual of the inclusion of the point at object 0.
template <class S> HopfMorphism<S> corpus_inclusion(const Field& f);
// Dual of discrete(2) -> discrete(1).
template <class S> HopfMorphism<S> corpus_discrete_collapse(const Field& f);
// k[x]/(x^2 - c) as a (C2, C2)-bicomodule algebra graded by x |-> g (x) x, x (x) g.
// c = 2 is SQRT2; c = 1 is the split variant.
template <class S> BicomoduleAlgebra<S> corpus_graded_quadratic(long c, const Field& f);

// Registry used for "corpus:NAME" references and by the CLI. Groupoids and their duals share
// names: PT, D2, D3, PR2, PR3, C2, C3, S3, SWAP (C2 acting on two points). Morphisms: INCL,
// COLLAPSE. Bicomodule algebras: U(<groupoid>), TRIV(INCL), TRIV(COLLAPSE), SQRT2, SPLIT.
// Unknown names throw std::invalid_argument.
std::vector<std::string> corpus_groupoid_names();
std::vector<std::string> corpus_morphism_names();
std::vector<std::string> corpus_bundle_names();
FinGroupoid corpus_groupoid(const std::string& name);
template <class S> HopfPtr<S> corpus_hopf(const std::string& name, const Field& f);
template <class S> HopfMorphism<S> corpus_morphism(const std::string& name, const Field& f);
template <class S> BicomoduleAlgebra<S> corpus_bundle(const std::string& name, const Field& f);

}  // namespace hopfalg

#endif  // HOPFALG_CORPUS_HPP
