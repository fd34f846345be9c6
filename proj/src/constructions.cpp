#include "hopfalg/constructions.hpp"

namespace hopfalg {

template <class S>
ChainAlgebra<S> chain_algebra(const SpacePtr<S>& sp, const std::vector<AlgPtr<S>>& leaves, std::string name) {
  require_dims(static_cast<int>(leaves.size()) == sp->slots(), "chain algebra: one algebra per leaf");
  auto r = std::make_shared<Realization<S>>();
  r->space = sp;
  r->embed = identity<S>(sp->dim());
  r->retract = r->embed;
  r->trivial = false;
  Tensor<S> one;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    require_dims(leaves[i]->dim() == sp->leaf_dims()[i], "chain algebra: leaf dimension mismatch");
    r->leaf_mul.push_back(leaves[i]->product_sparse());
    r->leaf_one.push_back(leaves[i]->one());
    Tensor<S> o = Tensor<S>::from_vec(leaves[i]->one());
    one = i == 0 ? o : one.outer(o);
  }
  std::vector<Mat<S>> lm;
  for (int i = 0; i < sp->dim(); ++i) lm.push_back(realized_mult_by(*r, unit_vector<S>(sp->dim(), i)));
  Vec<S> unit = sp->project_vec(one);
  ChainAlgebra<S> out;
  out.alg = share(FinAlgebra<S>(std::move(lm), std::move(unit), std::move(name)));
  out.real = r;
  return out;
}

namespace {

// The carrier of T_t (x)_R _sT over the chain realization of T, for tabulate_flat.
template <class S> Frame<S> total_square(const ChainAlgebra<S>& t, const Mat<S>& src, const Mat<S>& tgt) {
  Link<S> l{actions_via(*t.alg, tgt), actions_via(*t.alg, src)};
  Part<S> p{t.alg->dim(), t.real};
  return make_frame<S>({p, p}, {LinkPair<S>{l, l}});
}

template <class S> Frame<S> own_frame(const ChainAlgebra<S>& t) { return deep_frame<S>(t.alg->dim(), t.real); }

}  // namespace

template <class S> ScalarExtension<S> scalar_extension(const HopfPtr<S>& hp, const AlgMorphism<S>& phi0) {
  const auto& h = *hp;
  require_same_algebra(phi0.src, h.A, "scalar extension");
  const auto& B = *phi0.dst;
  auto ba = Space<S>::atom(B.dim());
  auto ha = Space<S>::atom(h.dimH());
  auto sp = Space<S>::chain({ba, ha, ba}, {Link<S>{actions_via(B, phi0.matrix), actions_via(*h.H, h.s.matrix)},
                                           Link<S>{actions_via(*h.H, h.t.matrix), actions_via(B, phi0.matrix)}});
  const std::string name = h.name + "[" + (B.name().empty() ? "B" : B.name()) + "]";
  ChainAlgebra<S> T = chain_algebra<S>(sp, {phi0.dst, h.H, phi0.dst}, name);
  const Vec<S>& oh = h.H->one();
  const Vec<S>& ob = B.one();
  Mat<S> s = tabulate(*ba, *sp, [&](const Tensor<S>& x) { return x.insert(1, oh).insert(2, ob); });
  Mat<S> t = tabulate(*ba, *sp, [&](const Tensor<S>& x) { return x.insert(0, ob).insert(1, oh); });
  Mat<S> comult = tabulate_flat(own_frame(T), total_square(T, s, t), [&](const Tensor<S>& x) {
    return h.delta(x, 1).insert(2, ob).insert(2, ob);
  });
  SparseCols<S> f0(phi0.matrix);
  Mat<S> counit = tabulate(*sp, *ba, [&](const Tensor<S>& x) {
    Tensor<S> y = h.eps(x, 1).apply(1, f0);
    return y.merge(0, 1, B.product_sparse()).merge(0, 1, B.product_sparse());
  });
  Mat<S> anti = tabulate(*sp, *sp, [&](const Tensor<S>& x) { return h.anti(x, 1).permute({2, 1, 0}); });
  ScalarExtension<S> out;
  out.ext = make_hopf<S>(name, phi0.dst, T.alg, s, t, comult, counit, anti, {}, false);
  out.flat = out.ext->s_flat && out.ext->t_flat;
  out.space = sp;
  Mat<S> u = tabulate(*ha, *sp, [&](const Tensor<S>& x) { return x.insert(0, ob).insert(2, ob); });
  out.mor = make_morphism<S>(hp, out.ext, phi0.matrix, u);
  return out;
}

template <class S> CanonicalFactor<S> canonical_factor(const HopfMorphism<S>& f) {
  CanonicalFactor<S> out;
  out.ext = scalar_extension<S>(f.src, f.phi0);
  const auto& K = *f.dst;
  SparseCols<S> f1(f.phi1.matrix);
  Mat<S> phi = tabulate(*out.ext.space, *Space<S>::atom(K.dimH()), [&](const Tensor<S>& x) {
    Tensor<S> y = K.tgt(K.src(x.apply(1, f1), 0), 2);
    return K.mul(K.mul(y, 0, 1), 0, 1);
  });
  out.factor = make_morphism<S>(out.ext.ext, f.dst, identity<S>(K.dimA()), phi);
  return out;
}

template <class S> LeftTranslation<S> left_translation(const LeftComoduleAlgebra<S>& r) {
  require_left_comodule_algebra(r);
  const auto& h = *r.h;
  const auto& R = *r.R;
  auto ha = Space<S>::atom(h.dimH());
  auto ra = Space<S>::atom(R.dim());
  auto sp = Space<S>::chain({ha, ra}, {Link<S>{actions_via(*h.H, h.t.matrix), actions_via(R, r.sigma.matrix)}});
  const std::string name = h.name + "|" + r.name;
  ChainAlgebra<S> T = chain_algebra<S>(sp, {h.H, r.R}, name);
  Mat<S> s = tabulate(*ra, *sp, [&](const Tensor<S>& x) { return r.coact(x, 0); });
  Mat<S> t = tabulate(*ra, *sp, [&](const Tensor<S>& x) { return x.insert(0, h.H->one()); });
  Mat<S> comult = tabulate_flat(own_frame(T), total_square(T, s, t),
                                [&](const Tensor<S>& x) { return h.delta(x, 0).insert(1, R.one()); });
  SparseCols<S> sg(r.sigma.matrix);
  Mat<S> counit = tabulate(*sp, *ra, [&](const Tensor<S>& x) {
    return h.eps(x, 0).apply(0, sg).merge(0, 1, R.product_sparse());
  });
  Mat<S> anti = tabulate(*sp, *sp, [&](const Tensor<S>& x) { return h.mul(h.anti(r.coact(x, 1), 0), 0, 1); });
  LeftTranslation<S> out;
  out.total = make_hopf<S>(name, r.R, T.alg, s, t, comult, counit, anti, {}, false);
  out.space = sp;
  Mat<S> u = tabulate(*ha, *sp, [&](const Tensor<S>& x) { return x.insert(1, R.one()); });
  out.mor = make_morphism<S>(r.h, out.total, r.sigma.matrix, u);
  return out;
}

template <class S> TwoSidedTranslation<S> two_sided_translation(const BicomoduleAlgebra<S>& p) {
  require_bicomodule_algebra(p);
  const auto& H = *p.H;
  const auto& K = *p.K;
  const auto& P = *p.P;
  auto ha = Space<S>::atom(H.dimH());
  auto pa = Space<S>::atom(P.dim());
  auto ka = Space<S>::atom(K.dimH());
  auto sp = Space<S>::chain({ha, pa, ka}, {Link<S>{actions_via(*H.H, H.s.matrix), actions_via(P, p.alpha.matrix)},
                                           Link<S>{actions_via(P, p.beta.matrix), actions_via(*K.H, K.s.matrix)}});
  const std::string name = H.name + "|" + p.name + "|" + K.name;
  ChainAlgebra<S> T = chain_algebra<S>(sp, {p.H->H, p.P, p.K->H}, name);
  Mat<S> s = tabulate(*pa, *sp, [&](const Tensor<S>& x) { return x.insert(0, H.H->one()).insert(2, K.H->one()); });
  Mat<S> t = tabulate(*pa, *sp, [&](const Tensor<S>& x) { return H.anti(p.rh(p.lam(x, 0), 1), 0); });
  Mat<S> comult = tabulate_flat(own_frame(T), total_square(T, s, t), [&](const Tensor<S>& x) {
    return K.delta(H.delta(x, 0), 3).permute({0, 2, 3, 1, 4}).insert(4, P.one());
  });
  SparseCols<S> al(p.alpha.matrix), be(p.beta.matrix);
  Mat<S> counit = tabulate(*sp, *pa, [&](const Tensor<S>& x) {
    Tensor<S> y = K.eps(H.eps(x, 0).apply(0, al), 2).apply(2, be);
    return p.mul(p.mul(y, 0, 1), 0, 1);
  });
  Mat<S> anti = tabulate(*sp, *sp, [&](const Tensor<S>& x) {
    Tensor<S> y = H.mul(p.rh(p.lam(x, 1), 2), 0, 1);
    return K.mul(K.anti(H.anti(y, 0), 3), 2, 3);
  });
  TwoSidedTranslation<S> out;
  out.total = make_hopf<S>(name, p.P, T.alg, s, t, comult, counit, anti, {}, false);
  out.space = sp;
  Mat<S> ua = tabulate(*ha, *sp, [&](const Tensor<S>& x) { return x.insert(1, P.one()).insert(2, K.H->one()); });
  Mat<S> ub = tabulate(*ka, *sp, [&](const Tensor<S>& x) { return x.insert(0, H.H->one()).insert(1, P.one()); });
  out.alpha = make_morphism<S>(p.H, out.total, p.alpha.matrix, ua);
  out.beta = make_morphism<S>(p.K, out.total, p.beta.matrix, ub);
  return out;
}

#define HOPFALG_INSTANTIATE(S)                                                                                   \
  template ChainAlgebra<S> chain_algebra<S>(const SpacePtr<S>&, const std::vector<AlgPtr<S>>&, std::string);     \
  template ScalarExtension<S> scalar_extension<S>(const HopfPtr<S>&, const AlgMorphism<S>&);                     \
  template CanonicalFactor<S> canonical_factor<S>(const HopfMorphism<S>&);                                       \
  template LeftTranslation<S> left_translation<S>(const LeftComoduleAlgebra<S>&);                                \
  template TwoSidedTranslation<S> two_sided_translation<S>(const BicomoduleAlgebra<S>&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
