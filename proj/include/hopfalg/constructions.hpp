#ifndef HOPFALG_CONSTRUCTIONS_HPP
#define HOPFALG_CONSTRUCTIONS_HPP

#include "hopfalg/comodule.hpp"

namespace hopfalg {

// Commutative algebra on the carrier of a chain of algebras, multiplied leafwise.
template <class S> struct ChainAlgebra {
  AlgPtr<S> alg;
  RealPtr<S> real;  // the chain itself, with leaf products
};

template <class S>
ChainAlgebra<S> chain_algebra(const SpacePtr<S>& sp, const std::vector<AlgPtr<S>>& leaves, std::string name);

// (B, B (x)_A H (x)_A B) and the morphism (phi0, u |-> 1 (x) u (x) 1).
template <class S> struct ScalarExtension {
  HopfPtr<S> ext;
  HopfMorphism<S> mor;
  SpacePtr<S> space;  // B (x) H (x) B carrying the total algebra
  bool flat = false;
};

template <class S> ScalarExtension<S> scalar_extension(const HopfPtr<S>& h, const AlgMorphism<S>& phi0);

// b (x) u (x) b' |-> s(b) f1(u) t(b'), from the scalar extension of f's source along f0.
template <class S> struct CanonicalFactor {
  ScalarExtension<S> ext;
  HopfMorphism<S> factor;
};

template <class S> CanonicalFactor<S> canonical_factor(const HopfMorphism<S>& f);

// (R, H (x)_A R) for a left comodule algebra R, with the morphism (sigma, u |-> u (x) 1).
template <class S> struct LeftTranslation {
  HopfPtr<S> total;
  HopfMorphism<S> mor;
  SpacePtr<S> space;
};

template <class S> LeftTranslation<S> left_translation(const LeftComoduleAlgebra<S>& r);

// (P, H (x)_A P (x)_B K) for a bicomodule algebra, with the morphisms out of (A, H) and (B, K).
template <class S> struct TwoSidedTranslation {
  HopfPtr<S> total;
  HopfMorphism<S> alpha, beta;
  SpacePtr<S> space;
};

template <class S> TwoSidedTranslation<S> two_sided_translation(const BicomoduleAlgebra<S>& p);

}  // namespace hopfalg

#endif  // HOPFALG_CONSTRUCTIONS_HPP
