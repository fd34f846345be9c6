#include "hopfalg/bundle.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>

namespace hopfalg {

namespace {

// P (x)_X P balanced over X acting through f on both factors.
template <class S> SpacePtr<S> pair_space(const FinAlgebra<S>& p, const Mat<S>& f) {
  auto a = Space<S>::atom(p.dim());
  auto acts = actions_via(p, f);
  return Space<S>::chain({a, a}, {Link<S>{acts, acts}});
}

template <class S> SpacePtr<S> chain3(const SpacePtr<S>& a, const SpacePtr<S>& b, const SpacePtr<S>& c,
                                      const Link<S>& l1, const Link<S>& l2) {
  return Space<S>::chain({a, b, c}, {l1, l2});
}

template <class S> std::string pair_label(const HopfAlgebroid<S>& h, int i, int j) {
  return "at (" + h.label(i) + ", " + h.label(j) + ")";
}

template <class S> std::string pair_label(int i, int j) {
  return "at (" + basis_name<S>(i) + ", " + basis_name<S>(j) + ")";
}

template <class S> RealPtr<S> part_real(const BicomoduleAlgebra<S>& p) { return p.part().real; }

template <class S> int group_size(const RealPtr<S>& r) { return r && !r->trivial ? r->space->slots() : 1; }

// Slot k of carrier coordinates -> leaves of the realization.
template <class S> Tensor<S> lift_group(const RealPtr<S>& r, const Tensor<S>& t, int k) {
  if (!r || r->trivial) return t;
  return r->space->lift(t.apply(k, r->embed), k);
}

template <class S> std::vector<Mat<S>> part_actions(const RealPtr<S>& r, const FinAlgebra<S>& p, const Mat<S>& f) {
  if (!r || r->trivial) return actions_via(p, f);
  return realized_actions_via(*r, f);
}

template <class S> RealPtr<S> identity_realization(const SpacePtr<S>& sp) {
  auto r = std::make_shared<Realization<S>>();
  r->space = sp;
  r->embed = identity<S>(sp->dim());
  r->retract = r->embed;
  r->trivial = false;
  return r;
}

// Like tabulate_flat, but the domain is read on its own leaves.
template <class S, class F> Mat<S> tabulate_into(const Space<S>& dom, const Frame<S>& cod, F&& f) {
  Mat<S> out = Mat<S>::Zero(cod.dim(), dom.dim());
  for (int j = 0; j < dom.dim(); ++j) {
    Tensor<S> y = f(dom.lift(Tensor<S>::basis(dom.dim(), j), 0));
    require_dims(y.slots() == cod.flat->slots(), "tabulate: formula produced the wrong number of slots");
    Vec<S> v = cod.flat->project(y, 0).vec();
    Vec<S> c = cod.retract * v;
    if (!same_matrix(Vec<S>(cod.embed * c), v))
      throw LandingError("value of basis vector " + std::to_string(j) + " lies outside the target subspace");
    out.col(j) = c;
  }
  return out;
}

template <class S, class FL, class FR>
BicomoduleAlgebra<S> from_chain(std::string name, HopfPtr<S> H, HopfPtr<S> K, const ChainAlgebra<S>& T, Mat<S> alpha,
                                Mat<S> beta, FL&& fl, FR&& fr) {
  const int d = T.alg->dim();
  Part<S> pp{d, T.real};
  Link<S> la{actions_via(*H->H, H->t.matrix), actions_via(*T.alg, alpha)};
  Link<S> lb{actions_via(*T.alg, beta), actions_via(*K->H, K->s.matrix)};
  Frame<S> lf = make_frame<S>({Part<S>{H->dimH(), nullptr}, pp}, {LinkPair<S>{la, la}});
  Frame<S> rf = make_frame<S>({pp, Part<S>{K->dimH(), nullptr}}, {LinkPair<S>{lb, lb}});
  Frame<S> own = deep_frame<S>(d, T.real);
  Mat<S> lam = tabulate_flat(own, lf, fl);
  Mat<S> rho = tabulate_flat(own, rf, fr);
  auto b = make_bicomodule_algebra<S>(std::move(name), std::move(H), std::move(K), T.alg, std::move(alpha),
                                      std::move(beta), std::move(lam), std::move(rho));
  b.chain = T.real->space;
  return b;
}

template <class S> void require_left(const PrincipalBundle<S>& p, const std::string& what) {
  if (!p.left) throw PreconditionError(what + ": " + p.p.name + " is not left principal");
}

}  // namespace

template <class S> CanonicalMap<S> canonical_map(const BicomoduleAlgebra<S>& p, Side side) {
  CanonicalMap<S> c;
  if (side == Side::left) {
    c.dom = pair_space(*p.P, p.beta.matrix);
    c.cod = p.ltarget;
    c.matrix = tabulate(*c.dom, *c.cod, [&](const Tensor<S>& x) { return p.mul(p.lam(x, 0), 1, 2); });
  } else {
    c.dom = pair_space(*p.P, p.alpha.matrix);
    c.cod = p.rtarget;
    c.matrix = tabulate(*c.dom, *c.cod, [&](const Tensor<S>& x) { return p.mul(p.rh(x, 1), 0, 1); });
  }
  return c;
}

template <class S> PrincipalCheck<S> verify_principal(const BicomoduleAlgebra<S>& p, Chirality side) {
  PrincipalCheck<S> out;
  Report& r = out.report;
  r.suite = "principal bundle " + p.name;
  r.absorb(verify_bicomodule_algebra(p), "bicomodule algebra");
  if (!r.ok()) return out;
  auto b = std::make_shared<PrincipalBundle<S>>();
  b->p = p;
  const auto& P = *p.P;
  auto side_check = [&](bool left) {
    const std::string tag = left ? "left: " : "right: ";
    const AlgMorphism<S>& base = left ? p.beta : p.alpha;
    bool ff = is_faithfully_flat(base);
    r.add(tag + (left ? "beta" : "alpha") + " is faithfully flat", ff,
          std::string(left ? "beta" : "alpha") + " not faithfully flat");
    CanonicalMap<S> c = canonical_map(p, left ? Side::left : Side::right);
    const int rk = rank<S>(c.matrix);
    bool bij = is_bijective(c.matrix);
    r.add(tag + "canonical map is bijective", bij,
          "rank " + std::to_string(rk) + " on " + std::to_string(c.matrix.cols()) + " -> " +
              std::to_string(c.matrix.rows()));
    (left ? b->can_l : b->can_r) = c;
    if (!ff || !bij) return false;
    Mat<S> inv = *inverse<S>(c.matrix);
    r.add(tag + "can o can^-1 = id", same_matrix(Mat<S>(c.matrix * inv), identity<S>(c.matrix.rows())));
    r.add(tag + "can^-1 o can = id", same_matrix(Mat<S>(inv * c.matrix), identity<S>(c.matrix.cols())));
    if (left) {
      auto ha = Space<S>::atom(p.H->dimH());
      Mat<S> u1 = tabulate(*ha, *c.cod, [&](const Tensor<S>& x) { return x.insert(1, P.one()); });
      b->can_l_inv = inv;
      b->tau = inv * u1;
      b->tau_sp = SparseCols<S>(Mat<S>(c.dom->step(1).sect * b->tau));
      b->left = true;
    } else {
      auto ka = Space<S>::atom(p.K->dimH());
      Mat<S> v1 = tabulate(*ka, *c.cod, [&](const Tensor<S>& x) { return x.insert(0, P.one()); });
      b->can_r_inv = inv;
      b->nu = inv * v1;
      b->nu_sp = SparseCols<S>(Mat<S>(c.dom->step(1).sect * b->nu));
      b->right = true;
    }
    return true;
  };
  bool ok = true;
  if (wants_left(side)) ok = side_check(true) && ok;
  if (wants_right(side)) ok = side_check(false) && ok;
  if (ok && r.ok()) out.bundle = b;
  return out;
}

template <class S> BundlePtr<S> require_principal(const BicomoduleAlgebra<S>& p, Chirality side) {
  PrincipalCheck<S> c = verify_principal(p, side);
  if (!c.bundle) {
    const Check* f = c.report.first_failure();
    throw PreconditionError(p.name + " is not a principal bundle: " + (f ? f->name + " (" + f->witness + ")" : ""));
  }
  return c.bundle;
}

template <class S> BundlePtr<S> with_translation(const PrincipalBundle<S>& b, const Mat<S>& tau_plain) {
  auto c = std::make_shared<PrincipalBundle<S>>(b);
  c->tau = b.can_l.dom->step(1).proj * tau_plain;
  c->tau_sp = SparseCols<S>(tau_plain);
  return c;
}

template <class S> Report verify_translation_identities(const PrincipalBundle<S>& b) {
  Report r("translation identities " + b.p.name);
  const auto& p = b.p;
  const auto& H = *p.H;
  const auto& K = *p.K;
  const auto& P = *p.P;
  const int dp = P.dim();
  auto pa = Space<S>::atom(dp);
  auto ha = Space<S>::atom(H.dimH());
  auto ka = Space<S>::atom(K.dimH());
  const auto al = actions_via(P, p.alpha.matrix);
  const auto be = actions_via(P, p.beta.matrix);
  const Link<S> l_tH_al{actions_via(*H.H, H.t.matrix), al};
  const Link<S> l_be_be{be, be}, l_al_al{al, al};
  const Link<S> l_be_sK{be, actions_via(*K.H, K.s.matrix)};
  using Fn = std::function<Tensor<S>(const Tensor<S>&)>;
  auto ident = [&](const std::string& name, const Space<S>& dom, const Space<S>& cod, const Fn& lhs, const Fn& rhs,
                   const std::vector<std::string>& labels) {
    check_equal<S>(r, name, tabulate(dom, cod, lhs), tabulate(dom, cod, rhs), labels);
  };
  Tensor<S> one_p = Tensor<S>::from_vec(P.one());

  if (b.left) {
    const auto& L = H.labels;
    const Space<S>& pbp = *b.can_l.dom;
    std::string w;
    for (int i = 0; i < H.dimH() && w.empty(); ++i)
      for (int j = i; j < H.dimH() && w.empty(); ++j) {
        Vec<S> lhs = pbp.project_vec(b.tr(Tensor<S>::from_vec(H.H->lmul(i).col(j)), 0));
        Tensor<S> t = b.tr(Tensor<S>::basis(H.dimH(), i), 0).outer(b.tr(Tensor<S>::basis(H.dimH(), j), 0));
        if (!same_matrix(lhs, pbp.project_vec(p.mul(p.mul(t, 0, 2), 1, 2)))) w = pair_label(H, i, j);
      }
    r.add("left: (uv)+ (x) (uv)- = u+v+ (x) v-u-", w.empty(), w);

    auto hpp = chain3<S>(ha, pa, pa, l_tH_al, l_be_be);
    ident("left: u+(-1) (x) u+(0) (x) u- = u(1) (x) u(2)+ (x) u(2)-", *ha, *hpp,
          [&](const Tensor<S>& x) { return p.lam(b.tr(x, 0), 0); },
          [&](const Tensor<S>& x) { return b.tr(H.delta(x, 0), 1); }, L);
    SparseCols<S> alsp(p.alpha.matrix);
    ident("left: u+ u- = alpha(eps(u))", *ha, *pa, [&](const Tensor<S>& x) { return p.mul(b.tr(x, 0), 0, 1); },
          [&](const Tensor<S>& x) { return H.eps(x, 0).apply(0, alsp); }, L);
    ident("left: p(-1)+ (x) p(-1)- p(0) = p (x) 1", *pa, pbp,
          [&](const Tensor<S>& x) { return p.mul(b.tr(p.lam(x, 0), 0), 1, 2); },
          [&](const Tensor<S>& x) { return x.insert(1, P.one()); }, {});
    ident("left: u+(-1) (x) u+(0) u- = u (x) 1", *ha, *p.ltarget,
          [&](const Tensor<S>& x) { return p.mul(p.lam(b.tr(x, 0), 0), 1, 2); },
          [&](const Tensor<S>& x) { return x.insert(1, P.one()); }, L);

    w.clear();
    for (int a = 0; a < H.dimA() && w.empty(); ++a)
      for (int c = 0; c < H.dimA() && w.empty(); ++c) {
        Vec<S> st = H.H->mul(H.s.matrix.col(a), H.t.matrix.col(c));
        Vec<S> lhs = pbp.project_vec(b.tr(Tensor<S>::from_vec(st), 0));
        Tensor<S> rhs = Tensor<S>::from_vec(p.alpha.matrix.col(a)).outer(Tensor<S>::from_vec(p.alpha.matrix.col(c)));
        if (!same_matrix(lhs, pbp.project_vec(rhs))) w = pair_label<S>(a, c);
      }
    r.add("left: (s(a)t(a'))+ (x) (s(a)t(a'))- = alpha(a) (x) alpha(a')", w.empty(), w);

    auto ppk = chain3<S>(pa, pa, ka, l_be_be, l_be_sK);
    ident("left: u+(0) (x) u-(0) (x) u+(1) u-(1) = u+ (x) u- (x) 1", *ha, *ppk,
          [&](const Tensor<S>& x) { return K.mul(p.rh(p.rh(b.tr(x, 0), 0), 2).permute({0, 2, 1, 3}), 2, 3); },
          [&](const Tensor<S>& x) { return b.tr(x, 0).insert(2, K.H->one()); }, L);
    ident("left: S(u) (x) 1 = u-(-1) (x) u-(0) u+", *ha, *p.ltarget,
          [&](const Tensor<S>& x) { return H.anti(x, 0).insert(1, P.one()); },
          [&](const Tensor<S>& x) { return p.mul(p.lam(b.tr(x, 0), 1).permute({1, 2, 0}), 1, 2); }, L);
    ident("left: S(u)+ (x) S(u)- = u- (x) u+", *ha, pbp, [&](const Tensor<S>& x) { return b.tr(H.anti(x, 0), 0); },
          [&](const Tensor<S>& x) { return b.tr(x, 0).permute({1, 0}); }, L);
    auto pph = chain3<S>(pa, pa, ha, l_be_be, Link<S>{al, actions_via(*H.H, H.t.matrix)});
    ident("left: u(1)+ (x) u(1)- (x) S(u(2)) = u+ (x) u-(0) (x) u-(-1)", *ha, *pph,
          [&](const Tensor<S>& x) { return H.anti(b.tr(H.delta(x, 0), 0), 2); },
          [&](const Tensor<S>& x) { return p.lam(b.tr(x, 0), 1).permute({0, 2, 1}); }, L);
  }

  if (b.right) {
    const auto& L = K.labels;
    const Space<S>& pap = *b.can_r.dom;
    std::string w;
    for (int i = 0; i < K.dimH() && w.empty(); ++i)
      for (int j = i; j < K.dimH() && w.empty(); ++j) {
        Vec<S> lhs = pap.project_vec(b.tr_r(Tensor<S>::from_vec(K.H->lmul(i).col(j)), 0));
        Tensor<S> t = b.tr_r(Tensor<S>::basis(K.dimH(), i), 0).outer(b.tr_r(Tensor<S>::basis(K.dimH(), j), 0));
        if (!same_matrix(lhs, pap.project_vec(p.mul(p.mul(t, 0, 2), 1, 2)))) w = pair_label(K, i, j);
      }
    r.add("right: (vw)- (x) (vw)+ = v-w- (x) v+w+", w.empty(), w);
    SparseCols<S> besp(p.beta.matrix);
    ident("right: v- v+ = beta(eps(v))", *ka, *pa, [&](const Tensor<S>& x) { return p.mul(b.tr_r(x, 0), 0, 1); },
          [&](const Tensor<S>& x) { return K.eps(x, 0).apply(0, besp); }, L);
    ident("right: p(0) p(1)- (x) p(1)+ = 1 (x) p", *pa, pap,
          [&](const Tensor<S>& x) { return p.mul(b.tr_r(p.rh(x, 0), 1), 0, 1); },
          [&](const Tensor<S>& x) { return x.insert(0, P.one()); }, {});
    ident("right: v- v+(0) (x) v+(1) = 1 (x) v", *ka, *p.rtarget,
          [&](const Tensor<S>& x) { return p.mul(p.rh(b.tr_r(x, 0), 1), 0, 1); },
          [&](const Tensor<S>& x) { return x.insert(0, P.one()); }, L);
    auto ppk = chain3<S>(pa, pa, ka, l_al_al, l_be_sK);
    ident("right: v- (x) v+(0) (x) v+(1) = v(1)- (x) v(1)+ (x) v(2)", *ka, *ppk,
          [&](const Tensor<S>& x) { return p.rh(b.tr_r(x, 0), 1); },
          [&](const Tensor<S>& x) { return b.tr_r(K.delta(x, 0), 0); }, L);

    w.clear();
    for (int a = 0; a < K.dimA() && w.empty(); ++a)
      for (int c = 0; c < K.dimA() && w.empty(); ++c) {
        Vec<S> st = K.H->mul(K.s.matrix.col(a), K.t.matrix.col(c));
        Vec<S> lhs = pap.project_vec(b.tr_r(Tensor<S>::from_vec(st), 0));
        Tensor<S> rhs = Tensor<S>::from_vec(p.beta.matrix.col(a)).outer(Tensor<S>::from_vec(p.beta.matrix.col(c)));
        if (!same_matrix(lhs, pap.project_vec(rhs))) w = pair_label<S>(a, c);
      }
    r.add("right: (s(b)t(b'))- (x) (s(b)t(b'))+ = beta(b) (x) beta(b')", w.empty(), w);

    auto hpp = chain3<S>(ha, pa, pa, l_tH_al, l_al_al);
    ident("right: v-(-1) v+(-1) (x) v-(0) (x) v+(0) = 1 (x) v- (x) v+", *ka, *hpp,
          [&](const Tensor<S>& x) { return H.mul(p.lam(p.lam(b.tr_r(x, 0), 0), 2).permute({0, 2, 1, 3}), 0, 1); },
          [&](const Tensor<S>& x) { return b.tr_r(x, 0).insert(0, H.H->one()); }, L);
    ident("right: S(v)- (x) S(v)+ = v+ (x) v-", *ka, pap, [&](const Tensor<S>& x) { return b.tr_r(K.anti(x, 0), 0); },
          [&](const Tensor<S>& x) { return b.tr_r(x, 0).permute({1, 0}); }, L);
    auto kpp = chain3<S>(ka, pa, pa, Link<S>{actions_via(*K.H, K.s.matrix), be}, l_al_al);
    ident("right: S(v(1)) (x) v(2)- (x) v(2)+ = v-(1) (x) v-(0) (x) v+", *ka, *kpp,
          [&](const Tensor<S>& x) { return K.anti(b.tr_r(K.delta(x, 0), 1), 0); },
          [&](const Tensor<S>& x) { return p.rh(b.tr_r(x, 0), 0).permute({1, 0, 2}); }, L);
    ident("right: 1 (x) S(v) = v+ v-(0) (x) v-(1)", *ka, *p.rtarget,
          [&](const Tensor<S>& x) { return K.anti(x, 0).insert(0, P.one()); },
          [&](const Tensor<S>& x) { return p.mul(p.rh(b.tr_r(x, 0), 0).permute({0, 2, 1}), 0, 1); }, L);
  }
  if (!b.left && !b.right) r.skip("identities", "bundle is not principal on either side");
  (void)one_p;
  return r;
}

template <class S> Mat<S> unit_can_inverse_closed_form(const HopfPtr<S>& h) {
  auto cod = pair_space(*h->H, h->t.matrix);
  return tabulate(*h->hh, *cod, [&](const Tensor<S>& x) { return h->mul(h->anti(h->delta(x, 0), 1), 1, 2); });
}

template <class S> BundlePtr<S> unit_bundle(const HopfPtr<S>& h) {
  auto b = make_bicomodule_algebra<S>("U(" + h->name + ")", h, h, h->H, h->s.matrix, h->t.matrix, h->comult,
                                      h->comult);
  return require_principal(b, Chirality::both);
}

template <class S> BundlePtr<S> pullback_bundle(const HopfMorphism<S>& psi, const PrincipalBundle<S>& pb) {
  require_left(pb, "pull-back");
  const auto& p = pb.p;
  require_same_algebra(psi.src->H, p.K->H, "pull-back: morphism source");
  const auto& J = *psi.dst;
  const auto& C = *psi.dst->A;
  auto sp = Space<S>::chain({Space<S>::atom(p.dim()), Space<S>::atom(C.dim())},
                            {Link<S>{actions_via(*p.P, p.beta.matrix), actions_via(C, psi.phi0.matrix)}});
  const std::string name = p.name + "*" + J.name;
  ChainAlgebra<S> T = chain_algebra<S>(sp, {p.P, psi.dst->A}, name);
  SparseCols<S> al(p.alpha.matrix), f1(psi.phi1.matrix);
  Mat<S> alpha = tabulate(*Space<S>::atom(p.H->dimA()), *sp,
                          [&](const Tensor<S>& x) { return x.apply(0, al).insert(1, C.one()); });
  Mat<S> beta = tabulate(*Space<S>::atom(C.dim()), *sp, [&](const Tensor<S>& x) { return x.insert(0, p.P->one()); });
  auto b = from_chain<S>(
      name, p.H, psi.dst, T, alpha, beta, [&](const Tensor<S>& x) { return p.lam(x, 0); },
      [&](const Tensor<S>& x) { return J.mul(J.tgt(p.rh(x, 0).apply(1, f1), 2), 1, 2).insert(1, C.one()); });
  return require_principal(b, Chirality::left);
}

template <class S> BundlePtr<S> trivial_bundle(const HopfMorphism<S>& phi) {
  return pullback_bundle(phi, *unit_bundle(phi.src));
}

template <class S> Mat<S> collapse_splitting(const HopfMorphism<S>& phi) {
  const auto& H = *phi.src;
  const auto& B = *phi.dst->A;
  auto sp = Space<S>::chain({Space<S>::atom(H.dimH()), Space<S>::atom(B.dim())},
                            {Link<S>{actions_via(*H.H, H.t.matrix), actions_via(B, phi.phi0.matrix)}});
  SparseCols<S> f0(phi.phi0.matrix);
  return tabulate(*sp, *Space<S>::atom(B.dim()), [&](const Tensor<S>& x) {
    return H.eps(x, 0).apply(0, f0).merge(0, 1, B.product_sparse());
  });
}

template <class S> RestrictedBundle<S> restricted_bundle(const PrincipalBundle<S>& p, const AlgMorphism<S>& tau) {
  RestrictedBundle<S> out;
  out.ext = scalar_extension<S>(p.p.K, tau);
  out.bundle = pullback_bundle(out.ext.mor, p);
  return out;
}

template <class S> Report verify_restriction_pullback(const PrincipalBundle<S>& p, const HopfMorphism<S>& psi) {
  Report r("restriction against pull-back " + p.p.name);
  auto direct = pullback_bundle(psi, p);
  auto restricted = restricted_bundle(p, psi.phi0);
  auto cf = canonical_factor(psi);
  auto via = pullback_bundle(cf.factor, *restricted.bundle);
  const auto& pc = restricted.bundle->p;
  r.add("restricted and direct carriers agree", pc.dim() == direct->dim(),
        std::to_string(pc.dim()) + " vs " + std::to_string(direct->dim()));
  if (!r.ok()) return r;
  SparseCols<S> be(pc.beta.matrix);
  Mat<S> f = tabulate(*via->p.chain, *Space<S>::atom(pc.dim()),
                      [&](const Tensor<S>& x) { return pc.mul(x.apply(1, be), 0, 1); });
  BundleMorphism<S> m{via, direct, f};
  r.absorb(verify_bundle_morphism(m), "comparison map");
  r.add("comparison map is bijective", is_bijective(f), "rank " + std::to_string(rank<S>(f)));
  return r;
}

template <class S> BicomoduleAlgebra<S> opposite_algebra(const BicomoduleAlgebra<S>& p) {
  const auto& H = *p.H;
  const auto& K = *p.K;
  auto pa = Space<S>::atom(p.dim());
  auto lt = left_target(K, *p.P, p.beta.matrix);
  auto rt = right_target(H, *p.P, p.alpha.matrix);
  Mat<S> lam = tabulate(*pa, *lt, [&](const Tensor<S>& x) { return K.anti(p.rh(x, 0), 1).permute({1, 0}); });
  Mat<S> rho = tabulate(*pa, *rt, [&](const Tensor<S>& x) { return H.anti(p.lam(x, 0), 0).permute({1, 0}); });
  const std::string name = p.name.size() > 3 && p.name.substr(p.name.size() - 3) == "^co"
                               ? p.name.substr(0, p.name.size() - 3)
                               : p.name + "^co";
  auto o = make_bicomodule_algebra<S>(name, p.K, p.H, p.P, p.beta.matrix, p.alpha.matrix, lam, rho);
  o.deep = p.deep;
  o.chain = p.chain;
  return o;
}

template <class S> BundlePtr<S> opposite_bundle(const PrincipalBundle<S>& p) {
  Chirality c = p.left && p.right ? Chirality::both : p.left ? Chirality::right : Chirality::left;
  return require_principal(opposite_algebra(p.p), c);
}

template <class S> Report verify_bundle_morphism(const BundleMorphism<S>& m) {
  const auto& a = m.src->p;
  const auto& b = m.dst->p;
  Report r("bundle morphism " + a.name + " -> " + b.name);
  r.add("shape", m.f.rows() == b.dim() && m.f.cols() == a.dim(), "wrong matrix shape");
  r.add("same algebroids", a.H->dimH() == b.H->dimH() && a.K->dimH() == b.K->dimH(), "different algebroids");
  if (!r.ok()) return r;
  r.absorb(verify_alg_morphism(AlgMorphism<S>{a.P, b.P, m.f}), "algebra map");
  check_equal<S>(r, "f alpha = alpha'", Mat<S>(m.f * a.alpha.matrix), b.alpha.matrix);
  check_equal<S>(r, "f beta = beta'", Mat<S>(m.f * a.beta.matrix), b.beta.matrix);
  SparseCols<S> fs(m.f);
  auto pa = Space<S>::atom(a.dim());
  check_equal<S>(r, "left colinear",
                 tabulate(*pa, *b.ltarget, [&](const Tensor<S>& x) { return b.lam(x.apply(0, fs), 0); }),
                 tabulate(*pa, *b.ltarget, [&](const Tensor<S>& x) { return a.lam(x, 0).apply(1, fs); }));
  check_equal<S>(r, "right colinear",
                 tabulate(*pa, *b.rtarget, [&](const Tensor<S>& x) { return b.rh(x.apply(0, fs), 0); }),
                 tabulate(*pa, *b.rtarget, [&](const Tensor<S>& x) { return a.rh(x, 0).apply(0, fs); }));
  if (m.src->left && m.dst->left) {
    auto ha = Space<S>::atom(a.H->dimH());
    const Space<S>& pbp = *m.dst->can_l.dom;
    check_equal<S>(r, "(f (x) f) tau = tau'",
                   tabulate(*ha, pbp, [&](const Tensor<S>& x) { return m.src->tr(x, 0).apply(0, fs).apply(1, fs); }),
                   tabulate(*ha, pbp, [&](const Tensor<S>& x) { return m.dst->tr(x, 0); }), a.H->labels);
  }
  if (m.src->right && m.dst->right) {
    auto ka = Space<S>::atom(a.K->dimH());
    const Space<S>& pap = *m.dst->can_r.dom;
    check_equal<S>(r, "(f (x) f) nu = nu'",
                   tabulate(*ka, pap, [&](const Tensor<S>& x) { return m.src->tr_r(x, 0).apply(0, fs).apply(1, fs); }),
                   tabulate(*ka, pap, [&](const Tensor<S>& x) { return m.dst->tr_r(x, 0); }), a.K->labels);
  }
  return r;
}

template <class S> BundleMorphism<S> invert_bundle_morphism(const BundleMorphism<S>& m) {
  auto inv = inverse<S>(m.f);
  if (!inv) throw std::logic_error("bundle morphism " + m.src->p.name + " -> " + m.dst->p.name + " is not invertible");
  return BundleMorphism<S>{m.dst, m.src, *inv};
}

template <class S> BundleMorphism<S> compose(const BundleMorphism<S>& g, const BundleMorphism<S>& f) {
  require_dims(g.f.cols() == f.f.rows(), "compose: bundle morphisms are not composable");
  return BundleMorphism<S>{f.src, g.dst, g.f * f.f};
}

template <class S> BundleMorphism<S> identity_bundle_morphism(const BundlePtr<S>& p) {
  return BundleMorphism<S>{p, p, identity<S>(p->dim())};
}

template <class S> Trivialization<S> trivialize(const BundlePtr<S>& pb, const Mat<S>& gamma) {
  require_left(*pb, "trivialize");
  const auto& p = pb->p;
  const auto& H = *p.H;
  const auto& K = *p.K;
  if (gamma.rows() != K.dimA() || gamma.cols() != p.dim()) throw PreconditionError("gamma is not a splitting: shape");
  Report g = verify_alg_morphism(AlgMorphism<S>{p.P, K.A, gamma});
  if (!g.ok()) throw PreconditionError("gamma is not a splitting: " + g.first_failure()->name);
  if (!same_matrix(Mat<S>(gamma * p.beta.matrix), identity<S>(K.dimA())))
    throw PreconditionError("gamma is not a splitting: gamma beta != id");
  SparseCols<S> gs(gamma), bs(p.beta.matrix);
  Mat<S> phi1 = tabulate(*Space<S>::atom(H.dimH()), *Space<S>::atom(K.dimH()), [&](const Tensor<S>& x) {
    Tensor<S> y = K.src(p.rh(pb->tr(x, 0), 0).apply(0, gs), 0);
    y = K.tgt(y.apply(2, gs), 2);
    return K.mul(K.mul(y, 0, 1), 0, 1);
  });
  Trivialization<S> out;
  out.phi = make_morphism<S>(p.H, p.K, Mat<S>(gamma * p.alpha.matrix), phi1);
  out.triv = trivial_bundle(out.phi);
  const Space<S>& tc = *out.triv->p.chain;
  auto pa = Space<S>::atom(p.dim());
  Mat<S> f = tabulate(tc, *pa, [&](const Tensor<S>& x) {
    Tensor<S> y = pb->tr(x, 0).apply(1, gs).apply(1, bs).apply(2, bs);
    return p.mul(p.mul(y, 1, 2), 0, 1);
  });
  Mat<S> gm = tabulate(*pa, tc, [&](const Tensor<S>& x) { return p.lam(x, 0).apply(1, gs); });
  out.f = BundleMorphism<S>{out.triv, pb, f};
  out.g = BundleMorphism<S>{pb, out.triv, gm};
  return out;
}

namespace {

// Monic minimal polynomial of m, lowest coefficient first.
template <class S> std::vector<S> minimal_polynomial(const Mat<S>& m) {
  const Eigen::Index n = m.rows();
  std::vector<Mat<S>> pw{identity<S>(n)};
  auto flat = [&](int k) {
    Mat<S> c(n * n, k);
    for (int i = 0; i < k; ++i) c.col(i) = Eigen::Map<const Vec<S>>(pw[i].data(), n * n);
    return c;
  };
  for (;;) {
    pw.push_back(Mat<S>(pw.back() * m));
    const int k = static_cast<int>(pw.size());
    Mat<S> prev = flat(k - 1);
    Vec<S> last = Eigen::Map<const Vec<S>>(pw.back().data(), n * n);
    auto sol = solve<S>(prev, Mat<S>(last));
    if (sol.consistent) {
      std::vector<S> c;
      for (int i = 0; i < k - 1; ++i) c.push_back(-sol.particular(i, 0));
      c.push_back(S(1));
      return c;
    }
  }
}

template <class S> S evaluate(const std::vector<S>& c, const S& x) {
  S v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

const mpz_class root_search_cap("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > root_search_cap) throw PreconditionError("search class unsupported: coefficient too large for root search");
  std::vector<mpz_class> d;
  for (mpz_class i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

std::vector<Rational> rational_roots(std::vector<Rational> c) {
  std::vector<Rational> roots;
  while (c.size() > 1 && c.front().is_zero()) {
    c.erase(c.begin());
    if (roots.empty()) roots.push_back(Rational(0));
  }
  if (c.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, mpz_class(x.value().get_den()));
  std::vector<mpz_class> a;
  for (const auto& x : c) a.push_back(mpz_class(x.value() * l));
  for (const auto& p : positive_divisors(a.front()))
    for (const auto& q : positive_divisors(a.back()))
      for (int sg : {1, -1}) {
        Rational r(mpq_class(p * sg, q));
        if (evaluate(c, r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Fp> prime_field_roots(const std::vector<Fp>& c, const Field& f) {
  if (f.p > (1u << 20)) throw PreconditionError("search class unsupported: prime too large for exhaustive root search");
  std::vector<Fp> roots;
  for (std::uint64_t v = 0; v < f.p; ++v) {
    Fp x(static_cast<std::int64_t>(v), f.p);
    if (evaluate(c, x).is_zero()) roots.push_back(x);
  }
  return roots;
}

}  // namespace

template <class S> std::vector<S> roots_in_field(const std::vector<S>& c, const Field& f) {
  if constexpr (std::is_same_v<S, Rational>) {
    (void)f;
    return rational_roots(c);
  } else {
    return prime_field_roots(c, f);
  }
}

template <class S> std::vector<Vec<S>> characters(const FinAlgebra<S>& a, const Field& f) {
  const int n = a.dim();
  std::vector<Mat<S>> spaces{identity<S>(n)};
  for (int i = 0; i < n && !spaces.empty(); ++i) {
    Mat<S> m = a.lmul(i).transpose();
    std::vector<Mat<S>> next;
    for (const auto& w : spaces) {
      // m restricted to the invariant subspace spanned by w.
      Mat<S> r = preimage<S>(w, Mat<S>(m * w), "common eigenspace");
      for (const auto& l : roots_in_field(minimal_polynomial<S>(r), f)) {
        Mat<S> k = kernel_basis<S>(Mat<S>(r - l * identity<S>(r.rows())));
        if (k.cols() > 0) next.push_back(Mat<S>(w * k));
      }
    }
    spaces = std::move(next);
  }
  std::vector<Vec<S>> out;
  for (const auto& w : spaces) {
    Vec<S> chi(n);
    Vec<S> v = w.col(0);
    for (int i = 0; i < n; ++i) {
      Vec<S> mv = a.lmul(i).transpose() * v;
      Eigen::Index k = 0;
      while (is_zero(v(k))) ++k;
      chi(i) = mv(k) / v(k);
    }
    bool ok = is_zero(S(chi.dot(a.one()) - S(1)));
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = is_zero(S(chi.dot(a.lmul(i).col(j)) - chi(i) * chi(j)));
    if (!ok) throw std::logic_error("character search produced a non-multiplicative functional");
    out.push_back(chi);
  }
  return out;
}

template <class S> std::vector<Mat<S>> find_splittings(const PrincipalBundle<S>& pb, const Field& f) {
  const auto& p = pb.p;
  const auto& B = *p.K->A;
  const int nb = B.dim();
  auto cb = characters(B, f);
  if (static_cast<int>(cb.size()) != nb)
    throw PreconditionError("search class unsupported: base algebra is not split semisimple");
  Mat<S> x(nb, nb);
  for (int i = 0; i < nb; ++i) x.row(i) = cb[i].transpose();
  Mat<S> idem = *inverse<S>(x);
  auto cp = characters(*p.P, f);
  std::vector<std::vector<int>> cand(nb);
  for (int j = 0; j < nb; ++j)
    for (int c = 0; c < static_cast<int>(cp.size()); ++c)
      if (same_matrix(Vec<S>(p.beta.matrix.transpose() * cp[c]), cb[j])) cand[j].push_back(c);
  std::vector<Mat<S>> out;
  std::vector<int> pick(nb, 0);
  for (const auto& c : cand)
    if (c.empty()) return out;
  for (;;) {
    Mat<S> g = Mat<S>::Zero(nb, p.dim());
    for (int j = 0; j < nb; ++j) g += idem.col(j) * cp[cand[j][pick[j]]].transpose();
    out.push_back(g);
    int j = nb - 1;
    while (j >= 0 && ++pick[j] == static_cast<int>(cand[j].size())) pick[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

template <class S> ZetaIso<S> zeta_iso(const Comodule<S>& m, const PrincipalBundle<S>& pb) {
  require_left(pb, "zeta");
  const auto& p = pb.p;
  const auto& P = *p.P;
  ZetaIso<S> out;
  out.cotensor = cotensor_right(m, p.bicomodule());
  const Comodule<S>& v = out.cotensor;
  RealPtr<S> pr = part_real(p);
  const int gm = m.leaves(), gv = v.leaves(), gp = group_size(pr);
  Frame<S> dom = make_frame<S>({v.part(), p.part()},
                               {LinkPair<S>{Link<S>{v.carrier.act, actions_via(P, p.beta.matrix)},
                                            Link<S>{v.flat_act(), part_actions(pr, P, p.beta.matrix)}}});
  Frame<S> cod = make_frame<S>({m.part(), p.part()},
                               {LinkPair<S>{Link<S>{m.carrier.act, actions_via(P, p.alpha.matrix)},
                                            Link<S>{m.flat_act(), part_actions(pr, P, p.alpha.matrix)}}});
  out.forward = tabulate_flat(dom, cod, [&](const Tensor<S>& x) { return leaf_multiply(*pr, x, gm, gv); });
  out.inverse = tabulate_into(*cod.space, dom, [&](const Tensor<S>& x) {
    Tensor<S> y = p.mul(pb.tr(m.coact(x, 0), 1), 2, 3);
    y = lift_group(pr, lift_group(pr, m.to_deep(y, 0), gm), gm + gp);
    return y;
  });
  out.mutually_inverse = same_matrix(Mat<S>(out.forward * out.inverse), identity<S>(cod.dim())) &&
                         same_matrix(Mat<S>(out.inverse * out.forward), identity<S>(dom.dim()));

  // Right K-coactions: codiagonal on the domain, through P on M (x)_A P.
  Comodule<S> dc = codiagonal_tensor(v, p.right_comodule());
  const auto& K = *p.K;
  FinModule<S> cc;
  cc.over = K.A;
  cc.dim = cod.dim();
  for (const auto& a : actions_via(P, p.beta.matrix)) cc.act.push_back(cod.space->factor_action(1, a));
  auto tgt = coaction_target(K, Side::right, cc);
  auto cr = identity_realization<S>(cod.space);
  Link<S> lk{cc.act, actions_via(*K.H, K.s.matrix)};
  Frame<S> tf = make_frame<S>({Part<S>{cc.dim, cr}, Part<S>{K.dimH(), nullptr}}, {LinkPair<S>{lk, lk}});
  Mat<S> co = tabulate_into(*cod.space, tf, [&](const Tensor<S>& x) { return p.rh(x, 1); });
  Comodule<S> cm = make_comodule<S>("M (x)_A P", p.K, Side::right, cc, co);
  out.colinear = dc.dim() == dom.dim() && is_comodule_map(dc, cm, out.forward);
  return out;
}

template <class S> EtaMap<S> eta_map(const Comodule<S>& m, const PrincipalBundle<S>& pb) {
  require_left(pb, "eta");
  const auto& p = pb.p;
  Comodule<S> v = cotensor_right(m, p.bicomodule());
  BicomoduleAlgebra<S> co = opposite_algebra(p);
  EtaMap<S> out;
  out.target = cotensor_right(v, co.bicomodule());
  RealPtr<S> pr = part_real(p);
  const int gm = m.leaves(), gp = group_size(pr);
  out.map = tabulate_into(*Space<S>::atom(m.dim()), deep_frame(out.target), [&](const Tensor<S>& x) {
    Tensor<S> y = pb.tr(m.coact(x, 0), 1);
    return lift_group(pr, lift_group(pr, m.to_deep(y, 0), gm), gm + gp);
  });
  out.rank = rank<S>(out.map);
  out.bijective = is_bijective(out.map);
  out.colinear = is_comodule_map(m, out.target, out.map);
  return out;
}

template <class S>
LeftComoduleAlgebra<S> comodule_algebra_product(const LeftComoduleAlgebra<S>& s, const LeftComoduleAlgebra<S>& r) {
  const auto& H = *s.h;
  auto sp = Space<S>::chain({Space<S>::atom(s.R->dim()), Space<S>::atom(r.R->dim())},
                            {Link<S>{actions_via(*s.R, s.sigma.matrix), actions_via(*r.R, r.sigma.matrix)}});
  const std::string name = s.name + " (x) " + r.name;
  ChainAlgebra<S> T = chain_algebra<S>(sp, {s.R, r.R}, name);
  SparseCols<S> ss(s.sigma.matrix);
  Mat<S> sigma = tabulate(*Space<S>::atom(H.dimA()), *sp,
                          [&](const Tensor<S>& x) { return x.apply(0, ss).insert(1, r.R->one()); });
  Link<S> l{actions_via(*H.H, H.t.matrix), actions_via(*T.alg, sigma)};
  Frame<S> lf = make_frame<S>({Part<S>{H.dimH(), nullptr}, Part<S>{T.alg->dim(), T.real}}, {LinkPair<S>{l, l}});
  Mat<S> lam = tabulate_flat(deep_frame<S>(T.alg->dim(), T.real), lf, [&](const Tensor<S>& x) {
    return H.mul(r.coact(s.coact(x, 0), 2).permute({0, 2, 1, 3}), 0, 1);
  });
  return make_left_comodule_algebra<S>(name, s.h, T.alg, sigma, lam);
}

template <class S> HopfPtr<S> trivial_algebroid(const AlgPtr<S>& t) {
  const int n = t->dim();
  Mat<S> plain = Mat<S>::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) plain(static_cast<Eigen::Index>(i) * n + k, i) = t->one()(k);
  Mat<S> id = identity<S>(n);
  return make_hopf_plain<S>("(" + t->name() + ")", t, t, id, id, plain, id, id);
}

template <class S>
CoinvariantQuotient<S> coinvariant_quotient(const LeftComoduleAlgebra<S>& q, const Mat<S>& f,
                                            const HopfMorphism<S>& phi) {
  auto pb = trivial_bundle(phi);
  const auto& p = pb->p;
  const auto& H = *q.h;
  const auto& Q = *q.R;
  const auto& B = *phi.dst->A;
  auto reject = [&](const std::string& why) { throw PreconditionError("F not colinear/injective: " + why); };
  if (f.rows() != Q.dim() || f.cols() != p.dim()) reject("wrong shape");
  if (!verify_alg_morphism(AlgMorphism<S>{p.P, q.R, f}).ok()) reject("not an algebra map");
  if (!same_matrix(Mat<S>(f * p.alpha.matrix), q.sigma.matrix)) reject("F alpha != sigma");
  if (!is_injective(f)) reject("not injective");
  SparseCols<S> fs(f);
  auto pa = Space<S>::atom(p.dim());
  Mat<S> c1 = tabulate(*pa, *q.target, [&](const Tensor<S>& x) { return q.coact(x.apply(0, fs), 0); });
  Mat<S> c2 = tabulate(*pa, *q.target, [&](const Tensor<S>& x) { return p.lam(x, 0).apply(1, fs); });
  if (!same_matrix(c1, c2)) reject("not colinear");

  CoinvariantQuotient<S> out;
  Report& r = out.report;
  r.suite = "coinvariant quotient " + q.name;
  Mat<S> gamma = collapse_splitting(phi);
  out.qpb = Space<S>::chain({Space<S>::atom(Q.dim()), Space<S>::atom(B.dim())},
                            {Link<S>{actions_via(Q, f), actions_via(B, gamma)}});
  auto qa = Space<S>::atom(Q.dim());
  SparseCols<S> f0(phi.phi0.matrix);
  out.omega = tabulate(*out.qpb, *qa, [&](const Tensor<S>& x) {
    Tensor<S> y = H.anti(q.coact(x, 0), 0).permute({1, 0, 2});
    y = p.chain->project(y, 1).apply(1, fs);
    return y.merge(0, 1, Q.product_sparse());
  });
  out.kappa = tabulate(*qa, *out.qpb, [&](const Tensor<S>& x) {
    return H.eps(q.coact(x, 0), 0).apply(0, f0).permute({1, 0});
  });
  out.split = same_matrix(Mat<S>(out.kappa * out.omega), identity<S>(out.qpb->dim()));
  r.add("kappa o omega = id", out.split);
  out.coinv = coinvariants(q.comodule());
  out.lands_in_coinvariants = columns_in_span<S>(out.coinv, out.omega);
  r.add("omega lands in the coinvariants", out.lands_in_coinvariants);
  const Mat<S>& C = out.coinv;
  std::vector<Mat<S>> lm;
  for (Eigen::Index i = 0; i < C.cols(); ++i)
    lm.push_back(preimage<S>(C, Mat<S>(Q.mult_by(C.col(i)) * C), "coinvariant subalgebra"));
  Vec<S> unit = preimage<S>(C, Mat<S>(Q.one()), "coinvariant subalgebra").col(0);
  out.T = share(FinAlgebra<S>(std::move(lm), std::move(unit), "T"));
  if (out.lands_in_coinvariants) {
    Mat<S> om = preimage<S>(C, out.omega, "omega");
    auto qb = chain_algebra<S>(out.qpb, {q.R, phi.dst->A}, "Q (x)_P B");
    out.algebra_iso = is_bijective(om) && verify_alg_morphism(AlgMorphism<S>{qb.alg, out.T, om}).ok();
  }
  r.add("omega is an algebra isomorphism onto the coinvariants", out.algebra_iso);
  auto kt = trivial_algebroid(out.T);
  auto rt = right_target(*kt, Q, C);
  Mat<S> rho = tabulate(*qa, *rt, [&](const Tensor<S>& x) { return x.insert(1, out.T->one()); });
  auto b = make_bicomodule_algebra<S>(q.name + " over T", q.h, kt, q.R, q.sigma.matrix, C, q.coaction, rho);
  PrincipalCheck<S> pc = verify_principal(b, Chirality::left);
  r.absorb(pc.report, "bundle");
  out.bundle = pc.bundle;
  return out;
}

template <class S>
CoinvariantCanonical<S> coinvariant_canonical(const LeftComoduleAlgebra<S>& q, const Mat<S>& f,
                                              const PrincipalBundle<S>& pb) {
  require_left(pb, "coinvariant canonical map");
  const auto& Q = *q.R;
  Mat<S> C = coinvariants(q.comodule());
  auto acts = actions_via(Q, C);
  auto qa = Space<S>::atom(Q.dim());
  CoinvariantCanonical<S> out;
  out.dom = Space<S>::chain({qa, qa}, {Link<S>{acts, acts}});
  out.cod = q.target;
  SparseCols<S> fs(f);
  out.can = tabulate(*out.dom, *out.cod, [&](const Tensor<S>& x) { return q.coact(x, 0).merge(1, 2, Q.product_sparse()); });
  out.inverse = tabulate(*out.cod, *out.dom, [&](const Tensor<S>& x) {
    return pb.tr(x, 0).apply(0, fs).apply(1, fs).merge(1, 2, Q.product_sparse());
  });
  out.mutually_inverse = out.dom->dim() == out.cod->dim() &&
                         same_matrix(Mat<S>(out.can * out.inverse), identity<S>(out.cod->dim())) &&
                         same_matrix(Mat<S>(out.inverse * out.can), identity<S>(out.dom->dim()));
  return out;
}

#define HOPFALG_INSTANTIATE(S)                                                                                    \
  template struct PrincipalBundle<S>;                                                                             \
  template CanonicalMap<S> canonical_map<S>(const BicomoduleAlgebra<S>&, Side);                                   \
  template PrincipalCheck<S> verify_principal<S>(const BicomoduleAlgebra<S>&, Chirality);                         \
  template BundlePtr<S> require_principal<S>(const BicomoduleAlgebra<S>&, Chirality);                             \
  template Report verify_translation_identities<S>(const PrincipalBundle<S>&);                                    \
  template BundlePtr<S> with_translation<S>(const PrincipalBundle<S>&, const Mat<S>&);                            \
  template Mat<S> unit_can_inverse_closed_form<S>(const HopfPtr<S>&);                                             \
  template BundlePtr<S> unit_bundle<S>(const HopfPtr<S>&);                                                        \
  template BundlePtr<S> pullback_bundle<S>(const HopfMorphism<S>&, const PrincipalBundle<S>&);                    \
  template BundlePtr<S> trivial_bundle<S>(const HopfMorphism<S>&);                                                \
  template Mat<S> collapse_splitting<S>(const HopfMorphism<S>&);                                                 \
  template RestrictedBundle<S> restricted_bundle<S>(const PrincipalBundle<S>&, const AlgMorphism<S>&);            \
  template Report verify_restriction_pullback<S>(const PrincipalBundle<S>&, const HopfMorphism<S>&);              \
  template BicomoduleAlgebra<S> opposite_algebra<S>(const BicomoduleAlgebra<S>&);                                 \
  template BundlePtr<S> opposite_bundle<S>(const PrincipalBundle<S>&);                                            \
  template Report verify_bundle_morphism<S>(const BundleMorphism<S>&);                                            \
  template BundleMorphism<S> invert_bundle_morphism<S>(const BundleMorphism<S>&);                                 \
  template BundleMorphism<S> compose<S>(const BundleMorphism<S>&, const BundleMorphism<S>&);                      \
  template BundleMorphism<S> identity_bundle_morphism<S>(const BundlePtr<S>&);                                    \
  template Trivialization<S> trivialize<S>(const BundlePtr<S>&, const Mat<S>&);                                   \
  template std::vector<S> roots_in_field<S>(const std::vector<S>&, const Field&);                                 \
  template std::vector<Vec<S>> characters<S>(const FinAlgebra<S>&, const Field&);                                 \
  template std::vector<Mat<S>> find_splittings<S>(const PrincipalBundle<S>&, const Field&);                       \
  template ZetaIso<S> zeta_iso<S>(const Comodule<S>&, const PrincipalBundle<S>&);                                 \
  template EtaMap<S> eta_map<S>(const Comodule<S>&, const PrincipalBundle<S>&);                                   \
  template LeftComoduleAlgebra<S> comodule_algebra_product<S>(const LeftComoduleAlgebra<S>&,                      \
                                                              const LeftComoduleAlgebra<S>&);                     \
  template HopfPtr<S> trivial_algebroid<S>(const AlgPtr<S>&);                                                     \
  template CoinvariantQuotient<S> coinvariant_quotient<S>(const LeftComoduleAlgebra<S>&, const Mat<S>&,           \
                                                          const HopfMorphism<S>&);                                \
  template CoinvariantCanonical<S> coinvariant_canonical<S>(const LeftComoduleAlgebra<S>&, const Mat<S>&,         \
                                                            const PrincipalBundle<S>&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
