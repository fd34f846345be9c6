#ifndef HOPFALG_MORITA_HPP
#define HOPFALG_MORITA_HPP

#include "hopfalg/bundle.hpp"

namespace hopfalg {

// P []_K Q with leafwise multiplication, alpha = alpha_P (x) 1, beta = 1 (x) beta_Q and the
// outer coactions. No principality is assumed.
template <class S> BicomoduleAlgebra<S> cotensor_algebra(const BicomoduleAlgebra<S>& p, const BicomoduleAlgebra<S>& q);
// Left principal (H, J)-bundle P []_K Q; throws PreconditionError when it is not principal.
template <class S> BundlePtr<S> compose_bundles(const PrincipalBundle<S>& p, const PrincipalBundle<S>& q);

// U(H) [] P -> P, u (x) p |-> alpha(eps(u)) p and P [] U(K) -> P, p (x) v |-> p beta(eps(v)).
template <class S> BundleMorphism<S> left_unitor(const BundlePtr<S>& p);
template <class S> BundleMorphism<S> right_unitor(const BundlePtr<S>& p);
// (P [] Q) [] R -> P [] (Q [] R), the identity on P (x) Q (x) R.
template <class S> BundleMorphism<S> associator(const BundlePtr<S>& p, const BundlePtr<S>& q, const BundlePtr<S>& r);

// Every bundle morphism p -> q, found from the linear conditions and, when those leave
// freedom, the multiplicativity equations. Throws PreconditionError when more than one
// free parameter survives the elimination.
template <class S> std::vector<BundleMorphism<S>> solve_bundle_morphisms(const BundlePtr<S>& p, const BundlePtr<S>& q,
                                                                         const Field& f);
template <class S> std::optional<BundleMorphism<S>> solve_bundle_iso(const BundlePtr<S>& p, const BundlePtr<S>& q,
                                                                     const Field& f);

template <class S> struct EquivalenceWitness {
  BundlePtr<S> p, q;    // q = P^co
  BundlePtr<S> pq, qp;  // P [] P^co and P^co [] P
  Mat<S> chi;           // H -> P [] P^co, u |-> u+ (x) u-
  Mat<S> zeta;          // K -> P^co [] P, v |-> v- (x) v+
  bool chi_iso = false, zeta_iso = false, triangle = false;
  Report report;
};

// Throws PreconditionError unless p is principal on both sides.
template <class S> EquivalenceWitness<S> invertibility_witness(const BundlePtr<S>& p);

// p (x) chi(p(-1)) (x) p(0) = p(0) (x) zeta(p(1)) as maps P -> P (x) Q (x) P.
template <class S>
bool triangle_holds(const BundlePtr<S>& p, const BundlePtr<S>& q, const Mat<S>& chi, const Mat<S>& zeta);

template <class S> struct Upgrade {
  BundlePtr<S> bibundle;
  BundleMorphism<S> iso;  // q -> P^co
  Report report;
};

// Left bundles p: (H, K) and q: (K, H) with chi: H -> P [] Q and zeta: K -> Q [] P. Throws
// PreconditionError when the triangle fails or chi, zeta are not bundle isomorphisms.
template <class S>
Upgrade<S> bibundle_from_invertible(const BundlePtr<S>& p, const BundlePtr<S>& q, const Mat<S>& chi,
                                    const Mat<S>& zeta, const Field& f);

struct Verdict {
  bool weak = false;
  bool phi_bijective = false;
  bool alpha_flat = false;
  bool bibundle = false;
  bool adjunction = false;  // unit and counit bijective on the probes
  bool coherent = false;    // all criteria agree
  int phi_rank = 0, phi_domain_rank = 0;      // over B
  int phi_rank_k = 0, phi_domain_rank_k = 0;  // over the field
  Report report;
};

template <class S> struct WeakEquivalence {
  Verdict verdict;
  CanonicalFactor<S> factor;
  Mat<S> lambda;  // inverse of Phi when it exists
};

template <class S> WeakEquivalence<S> weak_equivalence_test(const HopfMorphism<S>& f);

template <class S> struct TranslationLegs {
  TwoSidedTranslation<S> total;
  std::optional<Verdict> alpha, beta;  // beta for a left bundle, alpha for a right one
};

template <class S> TranslationLegs<S> translation_weak_equivalences(const PrincipalBundle<S>& p);
// u (x) p (x) w |-> u (x) f(p) (x) w between the two-sided translation algebroids.
template <class S> HopfMorphism<S> translation_iso(const BundleMorphism<S>& m);

// An algebra map c: H -> B relating two morphisms src, dst: (A, H) -> (B, K).
template <class S> struct TwoCell {
  HopfMorphism<S> src, dst;
  Mat<S> c;
};

template <class S> Report verify_two_cell(const TwoCell<S>& c);
// u |-> c(u(1)) c'(u(2)), for c: src => dst and c': dst => dst'.
template <class S> TwoCell<S> vertical_compose(const TwoCell<S>& c, const TwoCell<S>& cp);
template <class S> TwoCell<S> identity_two_cell(const HopfMorphism<S>& f);
// For c: phi => psi, the bundle morphism TRIV(psi) -> TRIV(phi), u (x) b |-> u(1) (x) c(u(2)) b.
template <class S> BundleMorphism<S> two_cell_bundle_map(const TwoCell<S>& c);
// TRIV(g f) against TRIV(f) [] TRIV(g).
template <class S> Report verify_trivial_functoriality(const HopfMorphism<S>& f, const HopfMorphism<S>& g,
                                                       const Field& fld);
// For P = TRIV(phi): u |-> u (x) 1 and u |-> S(u) (x) 1 between alpha and beta o phi.
template <class S> std::pair<TwoCell<S>, TwoCell<S>> translation_two_cells(const HopfMorphism<S>& phi);

template <class S> struct Zigzag {
  BundlePtr<S> apex_bundle;  // P1^co [] P2
  TwoSidedTranslation<S> apex;
  HopfMorphism<S> zeta1, zeta2;
  WeakEquivalence<S> zeta1_test, zeta2_test;
  TwoCell<S> cell, cell_inverse;  // zeta1 t1 => zeta2 t2 and back
  Report report;
};

// Throws PreconditionError unless t1 and t2 are weak equivalences.
template <class S> Zigzag<S> zigzag_complete(const HopfMorphism<S>& t1, const HopfMorphism<S>& t2);

// Probes default to A and H as right H-comodules.
template <class S> Report morita_witness(const BundlePtr<S>& p, std::vector<Comodule<S>> probes = {});

// delta: (M [] P) (x)_B (N [] P) -> (M (x)_A N) [] P.
template <class S> struct MonoidalComparison {
  Comodule<S> dom, cod;
  Mat<S> map;
  bool bijective = false, colinear = false, symmetric = false;
};

template <class S>
MonoidalComparison<S> monoidal_comparison(const Comodule<S>& m, const Comodule<S>& n, const BicomoduleAlgebra<S>& p);

template <class S> struct Reconstruction {
  BundlePtr<S> bundle;  // H [] Q with the induced structure
  std::optional<BundleMorphism<S>> iso;  // to Q
  Report report;
};

// Throws PreconditionError when q is not principal on both sides.
template <class S> Reconstruction<S> reconstruct_bundle(const BicomoduleAlgebra<S>& q, const Field& f);

}  // namespace hopfalg

#endif  // HOPFALG_MORITA_HPP
