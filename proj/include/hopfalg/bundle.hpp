#ifndef HOPFALG_BUNDLE_HPP
#define HOPFALG_BUNDLE_HPP

#include <optional>

#include "hopfalg/constructions.hpp"

namespace hopfalg {

enum class Chirality { left, right, both };

inline bool wants_left(Chirality c) { return c != Chirality::right; }
inline bool wants_right(Chirality c) { return c != Chirality::left; }

// Left: P (x)_B P -> H (x)_A P, p (x) p' |-> p(-1) (x) p(0) p'.
// Right: P (x)_A P -> P (x)_B K, p' (x) p |-> p' p(0) (x) p(1).
template <class S> struct CanonicalMap {
  SpacePtr<S> dom, cod;
  Mat<S> matrix;
};

template <class S> CanonicalMap<S> canonical_map(const BicomoduleAlgebra<S>& p, Side side);

template <class S> struct PrincipalBundle {
  BicomoduleAlgebra<S> p;
  bool left = false, right = false;
  CanonicalMap<S> can_l, can_r;
  Mat<S> can_l_inv, can_r_inv;
  Mat<S> tau;  // H -> P (x)_B P, u |-> u+ (x) u-
  Mat<S> nu;   // K -> P (x)_A P, v |-> v- (x) v+
  SparseCols<S> tau_sp, nu_sp;  // the same on the plain P (x) P

  const HopfAlgebroid<S>& H() const { return *p.H; }
  const HopfAlgebroid<S>& K() const { return *p.K; }
  int dim() const { return p.dim(); }
  Tensor<S> tr(const Tensor<S>& x, int k) const { return x.expand(k, tau_sp, {dim(), dim()}); }
  Tensor<S> tr_r(const Tensor<S>& x, int k) const { return x.expand(k, nu_sp, {dim(), dim()}); }
};

template <class S> using BundlePtr = std::shared_ptr<const PrincipalBundle<S>>;

template <class S> struct PrincipalCheck {
  BundlePtr<S> bundle;  // null unless every requested side is principal
  Report report;
};

template <class S> PrincipalCheck<S> verify_principal(const BicomoduleAlgebra<S>& p, Chirality side);
// Throws PreconditionError naming the first failed condition.
template <class S> BundlePtr<S> require_principal(const BicomoduleAlgebra<S>& p, Chirality side);

// Every translation-map identity for the principal sides of the bundle, per basis element.
template <class S> Report verify_translation_identities(const PrincipalBundle<S>& b);
// Copy with the left translation cache replaced (plain P (x) P columns); for negative tests.
template <class S> BundlePtr<S> with_translation(const PrincipalBundle<S>& b, const Mat<S>& tau_plain);

// u (x) v |-> u(1) (x) S(u(2)) v on the carriers of H (x)_A H and H (x)_A H (target links).
template <class S> Mat<S> unit_can_inverse_closed_form(const HopfPtr<S>& h);

template <class S> BundlePtr<S> unit_bundle(const HopfPtr<S>& h);
// P (x)_B C over (H, J) for psi: (B, K) -> (C, J).
template <class S> BundlePtr<S> pullback_bundle(const HopfMorphism<S>& psi, const PrincipalBundle<S>& p);
// H (x)_phi B, the pull-back of the unit bundle.
template <class S> BundlePtr<S> trivial_bundle(const HopfMorphism<S>& phi);
// u (x) b |-> phi0(eps(u)) b on the carrier of trivial_bundle(phi).
template <class S> Mat<S> collapse_splitting(const HopfMorphism<S>& phi);

template <class S> struct RestrictedBundle {
  ScalarExtension<S> ext;
  BundlePtr<S> bundle;
};

template <class S> RestrictedBundle<S> restricted_bundle(const PrincipalBundle<S>& p, const AlgMorphism<S>& tau);
// psi*(P) against Psi*(P_C), Psi the canonical factor of psi, via (p (x) c) (x) c' |-> p (x) cc'.
template <class S> Report verify_restriction_pullback(const PrincipalBundle<S>& p, const HopfMorphism<S>& psi);

// (K, H)-bicomodule algebra on P with lambda(p) = S(p(1)) (x) p(0), rho(p) = p(0) (x) S(p(-1)).
template <class S> BicomoduleAlgebra<S> opposite_algebra(const BicomoduleAlgebra<S>& p);
template <class S> BundlePtr<S> opposite_bundle(const PrincipalBundle<S>& p);

template <class S> struct BundleMorphism {
  BundlePtr<S> src, dst;
  Mat<S> f;
};

template <class S> Report verify_bundle_morphism(const BundleMorphism<S>& m);
// Exact inverse; a non-invertible bundle morphism is an internal error (std::logic_error).
template <class S> BundleMorphism<S> invert_bundle_morphism(const BundleMorphism<S>& m);
template <class S> BundleMorphism<S> compose(const BundleMorphism<S>& g, const BundleMorphism<S>& f);
template <class S> BundleMorphism<S> identity_bundle_morphism(const BundlePtr<S>& p);

template <class S> struct Trivialization {
  HopfMorphism<S> phi;
  BundlePtr<S> triv;
  BundleMorphism<S> f;  // triv -> P, u (x) b |-> u+ beta(gamma(u-)) beta(b)
  BundleMorphism<S> g;  // P -> triv, p |-> p(-1) (x) gamma(p(0))
};

// gamma: P -> B (dim B x dim P) an algebra map with gamma beta = id.
template <class S> Trivialization<S> trivialize(const BundlePtr<S>& p, const Mat<S>& gamma);

// Roots in the field of a polynomial given lowest coefficient first.
template <class S> std::vector<S> roots_in_field(const std::vector<S>& coeffs, const Field& f);
// Algebra maps P -> k, as rows of values on the basis. Throws PreconditionError when
// the eigenvalue search is unsupported for the field.
template <class S> std::vector<Vec<S>> characters(const FinAlgebra<S>& a, const Field& f);
// All algebra maps gamma: P -> B with gamma beta = id; B must be split semisimple.
template <class S> std::vector<Mat<S>> find_splittings(const PrincipalBundle<S>& p, const Field& f);

// (M []_H P) (x)_B P -> M (x)_A P and its stated inverse.
template <class S> struct ZetaIso {
  Comodule<S> cotensor;  // M []_H P as a right K-comodule
  Mat<S> forward, inverse;
  bool mutually_inverse = false;
  bool colinear = false;
};

template <class S> ZetaIso<S> zeta_iso(const Comodule<S>& m, const PrincipalBundle<S>& p);

template <class S> struct EtaMap {
  Comodule<S> target;  // (M []_H P) []_K P^co
  Mat<S> map;
  int rank = 0;
  bool bijective = false;
  bool colinear = false;
};

template <class S> EtaMap<S> eta_map(const Comodule<S>& m, const PrincipalBundle<S>& p);

// S (x)_A R with the diagonal coaction.
template <class S>
LeftComoduleAlgebra<S> comodule_algebra_product(const LeftComoduleAlgebra<S>& s, const LeftComoduleAlgebra<S>& r);
// (T, T) with identity structure maps.
template <class S> HopfPtr<S> trivial_algebroid(const AlgPtr<S>& t);

template <class S> struct CoinvariantQuotient {
  SpacePtr<S> qpb;     // Q (x)_P B
  Mat<S> coinv;        // basis of Q^coinv in Q
  AlgPtr<S> T;         // Q^coinv on that basis
  Mat<S> omega;        // Q (x)_P B -> Q
  Mat<S> kappa;        // Q -> Q (x)_P B
  bool split = false;  // kappa omega = id
  bool lands_in_coinvariants = false;
  bool algebra_iso = false;  // omega corestricts to an algebra isomorphism onto T
  BundlePtr<S> bundle;       // (Q, sigma, T -> Q) over (H, (T, T)); null when not principal
  Report report;
};

// f: P -> Q colinear injective A-ring map (dim Q x dim P); p = trivial_bundle(phi).
template <class S>
CoinvariantQuotient<S> coinvariant_quotient(const LeftComoduleAlgebra<S>& q, const Mat<S>& f,
                                            const HopfMorphism<S>& phi);

template <class S> struct CoinvariantCanonical {
  SpacePtr<S> dom, cod;  // Q (x)_T Q and H (x)_A Q
  Mat<S> can, inverse;
  bool mutually_inverse = false;
};

// can over T = Q^coinv and the inverse u (x) q |-> F(u+) (x) F(u-) q built from a left bundle P.
template <class S>
CoinvariantCanonical<S> coinvariant_canonical(const LeftComoduleAlgebra<S>& q, const Mat<S>& f,
                                              const PrincipalBundle<S>& p);

}  // namespace hopfalg

#endif  // HOPFALG_BUNDLE_HPP
