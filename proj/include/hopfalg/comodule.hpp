#ifndef HOPFALG_COMODULE_HPP
#define HOPFALG_COMODULE_HPP

#include "hopfalg/hopf.hpp"

namespace hopfalg {

enum class Side { left, right };

// Comodule over a Hopf algebroid. Right: M (x)_A _sH with (m (x) u).a = m (x) u t(a).
// Left: H_t (x)_A M. Objects built as subspaces carry a realization over base atoms.
template <class S> struct Comodule {
  std::string name;
  HopfPtr<S> h;
  Side side = Side::right;
  FinModule<S> carrier;
  Mat<S> coaction;
  SpacePtr<S> target;
  SparseCols<S> coact_sp;
  RealPtr<S> level;  // inside the tensor of atoms it was cut out of
  RealPtr<S> deep;   // over base atoms
  std::vector<Mat<S>> deep_act;

  int dim() const { return carrier.dim; }
  // Right: slot k -> (m0, m1). Left: slot k -> (m-1, m0).
  Tensor<S> coact(const Tensor<S>& x, int k) const;
  Part<S> part() const { return Part<S>{dim(), deep}; }
  const std::vector<Mat<S>>& flat_act() const { return deep ? deep_act : carrier.act; }
  int leaves() const { return deep ? deep->space->slots() : 1; }
  // Slot k in carrier coordinates -> the leaves of the deep realization.
  Tensor<S> to_deep(const Tensor<S>& t, int k) const;
  // Leaves group at k acted on by the base algebra element in slot j > k; j disappears.
  Tensor<S> act_leaves(const Tensor<S>& t, int k, int j) const;
};

// Frame of an object on its own basis with the realization as flat space.
template <class S> Frame<S> deep_frame(int dim, const RealPtr<S>& deep);
template <class S> Frame<S> deep_frame(const Comodule<S>& m) { return deep_frame<S>(m.dim(), m.deep); }

template <class S> SpacePtr<S> coaction_target(const HopfAlgebroid<S>& h, Side side, const FinModule<S>& m);
template <class S>
Comodule<S> make_comodule(std::string name, HopfPtr<S> h, Side side, FinModule<S> carrier, Mat<S> coaction);
template <class S>
Comodule<S> make_comodule_plain(std::string name, HopfPtr<S> h, Side side, FinModule<S> carrier,
                                const Mat<S>& coaction_plain);
template <class S> Report verify_comodule(const Comodule<S>& m);

// (A, t) as a right comodule and (A, s) as a left comodule.
template <class S> Comodule<S> identity_comodule(const HopfPtr<S>& h, Side side = Side::right);
// H with the comultiplication as coaction.
template <class S> Comodule<S> regular_comodule(const HopfPtr<S>& h, Side side = Side::right);

template <class S> Mat<S> coinvariants(const Comodule<S>& m);

// f: M -> N (dim N x dim M) commutes with the coactions.
template <class S> bool is_comodule_map(const Comodule<S>& m, const Comodule<S>& n, const Mat<S>& f);
template <class S> bool is_module_map(const FinModule<S>& m, const FinModule<S>& n, const Mat<S>& f);

// Left comodule over H (A-module) and right comodule over K (B-module) on one space.
template <class S> struct Bicomodule {
  Comodule<S> left, right;
  int dim() const { return left.dim(); }
};

template <class S> Report verify_bicomodule(const Bicomodule<S>& b);

// Equaliser of rho (x) N and M (x) lambda inside M (x)_A N.
template <class S> struct Cotensor {
  SpacePtr<S> ambient;  // M (x)_A N over the two atoms
  Mat<S> incl;          // ambient->dim() x dim
  RealPtr<S> level;     // one-level realization inside ambient
  RealPtr<S> deep;      // realization over base atoms
  Frame<S> frame;       // M (x)_A N over the deep realizations of M and N
  int dim() const { return static_cast<int>(incl.cols()); }
};

template <class S> Cotensor<S> cotensor(const Comodule<S>& m, const Comodule<S>& n);
// M [] N as a right K-comodule (N an (H, K)-bicomodule) or left J-comodule (M a (J, H)-bicomodule).
template <class S> Comodule<S> cotensor_right(const Comodule<S>& m, const Bicomodule<S>& n);
template <class S> Comodule<S> cotensor_left(const Bicomodule<S>& m, const Comodule<S>& n);
template <class S> Bicomodule<S> cotensor_bi(const Bicomodule<S>& m, const Bicomodule<S>& n);

// (M [] N) [] N' and M [] (N [] N') compared as subspaces of M (x) N (x) N'.
template <class S>
Report verify_cotensor_associativity(const Comodule<S>& m, const Bicomodule<S>& n, const Comodule<S>& np);

template <class S> Comodule<S> opposite_comodule(const Comodule<S>& m);
// Codiagonal coaction on M (x)_A N for right comodules.
template <class S> Comodule<S> codiagonal_tensor(const Comodule<S>& m, const Comodule<S>& n);
// Flip from the carrier of codiagonal_tensor(m, n) to that of codiagonal_tensor(n, m).
template <class S> Mat<S> flip_map(const Comodule<S>& m, const Comodule<S>& n);

// Induction M -> M (x)_phi B and coinduction N -> N []_K (B (x)_phi H).
template <class S> Comodule<S> induction(const HopfMorphism<S>& f, const Comodule<S>& m);
template <class S> Bicomodule<S> induction_kernel(const HopfMorphism<S>& f);  // B (x)_phi H
template <class S> Comodule<S> coinduction(const HopfMorphism<S>& f, const Comodule<S>& n);
// Unit M -> coind(ind M) and counit ind(coind N) -> N of the adjunction.
template <class S> Mat<S> adjunction_unit(const HopfMorphism<S>& f, const Comodule<S>& m);
template <class S> Mat<S> adjunction_counit(const HopfMorphism<S>& f, const Comodule<S>& n);
// Both triangle identities plus colinearity of the unit and counit.
template <class S> Report verify_adjunction(const HopfMorphism<S>& f, const Comodule<S>& m, const Comodule<S>& n);
// Canonical map ind(M) (x) ind(N) -> ind(M (x) N) for the codiagonal structures.
template <class S> Report verify_induction_monoidal(const HopfMorphism<S>& f, const Comodule<S>& m, const Comodule<S>& n);

template <class S> struct LeftComoduleAlgebra {
  std::string name;
  HopfPtr<S> h;
  AlgPtr<S> R;
  AlgMorphism<S> sigma;  // A -> R
  Mat<S> coaction;       // into H_t (x)_A R
  SpacePtr<S> target;
  SparseCols<S> coact_sp;
  RealPtr<S> deep;

  Comodule<S> comodule() const;
  Tensor<S> coact(const Tensor<S>& x, int k) const { return x.expand(k, coact_sp, {h->dimH(), R->dim()}); }
};

template <class S>
LeftComoduleAlgebra<S> make_left_comodule_algebra(std::string name, HopfPtr<S> h, AlgPtr<S> R, Mat<S> sigma,
                                                  Mat<S> coaction);
template <class S>
LeftComoduleAlgebra<S> make_left_comodule_algebra_plain(std::string name, HopfPtr<S> h, AlgPtr<S> R, Mat<S> sigma,
                                                        const Mat<S>& coaction_plain);
template <class S> Report verify_left_comodule_algebra(const LeftComoduleAlgebra<S>& r);
// Throws PreconditionError naming the first failed law.
template <class S> void require_left_comodule_algebra(const LeftComoduleAlgebra<S>& r);
// (A, id) with a |-> s(a) (x) 1, and (H, s) with the comultiplication.
template <class S> LeftComoduleAlgebra<S> base_comodule_algebra(const HopfPtr<S>& h);
template <class S> LeftComoduleAlgebra<S> regular_comodule_algebra(const HopfPtr<S>& h);

// (H, K)-bicomodule algebra (P, alpha, beta): left H-coaction into H_t (x)_A P and
// right K-coaction into P (x)_B _sK.
template <class S> struct BicomoduleAlgebra {
  std::string name;
  HopfPtr<S> H, K;
  AlgPtr<S> P;
  AlgMorphism<S> alpha, beta;
  Mat<S> lambda, rho;
  SpacePtr<S> ltarget, rtarget;
  SparseCols<S> lambda_sp, rho_sp;
  RealPtr<S> deep;    // algebra realization over base atoms, null for a base object
  SpacePtr<S> chain;  // set when P is the leafwise algebra on this chain of algebras

  int dim() const { return P->dim(); }
  Tensor<S> lam(const Tensor<S>& x, int k) const { return x.expand(k, lambda_sp, {H->dimH(), dim()}); }
  Tensor<S> rh(const Tensor<S>& x, int k) const { return x.expand(k, rho_sp, {dim(), K->dimH()}); }
  Tensor<S> mul(const Tensor<S>& x, int i, int j) const { return x.merge(i, j, P->product_sparse()); }
  Comodule<S> left_comodule() const;
  Comodule<S> right_comodule() const;
  Bicomodule<S> bicomodule() const { return Bicomodule<S>{left_comodule(), right_comodule()}; }
  LeftComoduleAlgebra<S> left_algebra() const;
  Part<S> part() const { return Part<S>{dim(), deep ? deep : atomic_realization<S>(*P)}; }
};

// H_t (x)_A P and P (x)_B _sK.
template <class S> SpacePtr<S> left_target(const HopfAlgebroid<S>& h, const FinAlgebra<S>& p, const Mat<S>& alpha);
template <class S> SpacePtr<S> right_target(const HopfAlgebroid<S>& k, const FinAlgebra<S>& p, const Mat<S>& beta);

template <class S>
BicomoduleAlgebra<S> make_bicomodule_algebra(std::string name, HopfPtr<S> H, HopfPtr<S> K, AlgPtr<S> P, Mat<S> alpha,
                                             Mat<S> beta, Mat<S> lambda, Mat<S> rho);
// Coactions given on the plain tensors H (x) P and P (x) K.
template <class S>
BicomoduleAlgebra<S> make_bicomodule_algebra_plain(std::string name, HopfPtr<S> H, HopfPtr<S> K, AlgPtr<S> P,
                                                   Mat<S> alpha, Mat<S> beta, const Mat<S>& lambda_plain,
                                                   const Mat<S>& rho_plain);
template <class S> Report verify_bicomodule_algebra(const BicomoduleAlgebra<S>& p);
template <class S> void require_bicomodule_algebra(const BicomoduleAlgebra<S>& p);

// (S (x)_A R)^coinv and S^o []_H R as subspaces of S (x)_A R, and the identification.
template <class S> struct ProductCoinvariants {
  Mat<S> coinv;     // basis of (S (x)_A R)^coinv
  Mat<S> cotensor;  // basis of S^o []_H R
  Mat<S> iso;       // coinv = cotensor * iso
  bool bijective = false;
};

template <class S>
ProductCoinvariants<S> coinvariants_of_product(const LeftComoduleAlgebra<S>& s, const LeftComoduleAlgebra<S>& r);

// Action of a module on the slot pair (module, algebra) or (algebra, module).
template <class S> SparseCols<S> action_table(const std::vector<Mat<S>>& act, bool module_first);

}  // namespace hopfalg

#endif  // HOPFALG_COMODULE_HPP
