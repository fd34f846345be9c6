#include "hopfalg/hopf.hpp"

namespace hopfalg {

template <class S> std::string HopfAlgebroid<S>::label(int i) const {
  return i < static_cast<int>(labels.size()) ? labels[i] : basis_name<S>(i);
}

namespace {

template <class S>
HopfPtr<S> assemble(std::string name, AlgPtr<S> A, AlgPtr<S> H, Mat<S> s, Mat<S> t, const Mat<S>* comult,
                    const Mat<S>* comult_plain, Mat<S> counit, Mat<S> antipode, std::vector<std::string> labels,
                    bool require_flat) {
  auto h = std::make_shared<HopfAlgebroid<S>>();
  const int a = A->dim(), n = H->dim();
  require_dims(s.rows() == n && s.cols() == a, "hopf algebroid: source has wrong shape");
  require_dims(t.rows() == n && t.cols() == a, "hopf algebroid: target has wrong shape");
  require_dims(counit.rows() == a && counit.cols() == n, "hopf algebroid: counit has wrong shape");
  require_dims(antipode.rows() == n && antipode.cols() == n, "hopf algebroid: antipode has wrong shape");
  require_dims(labels.empty() || static_cast<int>(labels.size()) == n, "hopf algebroid: label count");
  h->name = std::move(name);
  h->A = A;
  h->H = H;
  h->s = AlgMorphism<S>{A, H, std::move(s)};
  h->t = AlgMorphism<S>{A, H, std::move(t)};
  h->counit = std::move(counit);
  h->antipode = std::move(antipode);
  h->labels = std::move(labels);
  auto atom = Space<S>::atom(n);
  Link<S> l = h->ts_link();
  h->hh = Space<S>::chain({atom, atom}, {l});
  h->hhh = Space<S>::chain({atom, atom, atom}, {l, l});
  if (comult_plain) {
    require_dims(comult_plain->rows() == n * n && comult_plain->cols() == n,
                 "hopf algebroid: plain comultiplication has wrong shape");
    h->comult = h->hh->step(1).proj * *comult_plain;
  } else {
    require_dims(comult->rows() == h->hh->dim() && comult->cols() == n,
                 "hopf algebroid: comultiplication has wrong shape");
    h->comult = *comult;
  }
  h->delta_sp = SparseCols<S>(Mat<S>(h->hh->step(1).sect * h->comult));
  h->eps_sp = SparseCols<S>(h->counit);
  h->anti_sp = SparseCols<S>(h->antipode);
  h->s_sp = SparseCols<S>(h->s.matrix);
  h->t_sp = SparseCols<S>(h->t.matrix);
  h->s_flat = is_faithfully_flat(h->s);
  h->t_flat = is_faithfully_flat(h->t);
  if (require_flat && !(h->s_flat && h->t_flat))
    throw PreconditionError("hopf algebroid " + h->name + ": " + (h->s_flat ? "target" : "source") +
                            " is not faithfully flat");
  return h;
}

}  // namespace

template <class S>
HopfPtr<S> make_hopf(std::string name, AlgPtr<S> A, AlgPtr<S> H, Mat<S> s, Mat<S> t, Mat<S> comult, Mat<S> counit,
                     Mat<S> antipode, std::vector<std::string> labels, bool require_flat) {
  return assemble<S>(std::move(name), A, H, std::move(s), std::move(t), &comult, nullptr, std::move(counit),
                     std::move(antipode), std::move(labels), require_flat);
}

template <class S>
HopfPtr<S> make_hopf_plain(std::string name, AlgPtr<S> A, AlgPtr<S> H, Mat<S> s, Mat<S> t, const Mat<S>& comult_plain,
                           Mat<S> counit, Mat<S> antipode, std::vector<std::string> labels, bool require_flat) {
  return assemble<S>(std::move(name), A, H, std::move(s), std::move(t), nullptr, &comult_plain, std::move(counit),
                     std::move(antipode), std::move(labels), require_flat);
}

template <class S> HopfPtr<S> with_antipode(const HopfAlgebroid<S>& h, const Mat<S>& antipode) {
  auto c = std::make_shared<HopfAlgebroid<S>>(h);
  c->antipode = antipode;
  c->anti_sp = SparseCols<S>(antipode);
  return c;
}

template <class S> HopfPtr<S> with_comult(const HopfAlgebroid<S>& h, const Mat<S>& comult) {
  auto c = std::make_shared<HopfAlgebroid<S>>(h);
  c->comult = comult;
  c->delta_sp = SparseCols<S>(Mat<S>(h.hh->step(1).sect * comult));
  return c;
}

template <class S> Report verify_hopf_algebroid(const HopfAlgebroid<S>& h) {
  Report r("hopf algebroid " + h.name);
  r.absorb(verify_algebra(*h.A), "base");
  r.absorb(verify_algebra(*h.H), "total");
  r.absorb(verify_alg_morphism(h.s), "source");
  r.absorb(verify_alg_morphism(h.t), "target");
  const int a = h.dimA(), n = h.dimH();
  const auto& L = h.labels;
  auto hs = Space<S>::atom(n);
  const Space<S>& H1 = *hs;

  check_equal<S>(r, "counit after source is the identity", Mat<S>(h.counit * h.s.matrix), identity<S>(a));
  check_equal<S>(r, "counit after target is the identity", Mat<S>(h.counit * h.t.matrix), identity<S>(a));

  Tensor<S> one = Tensor<S>::from_vec(h.H->one());
  Vec<S> d1 = h.hh->project_vec(h.delta(one, 0));
  Vec<S> oo = h.hh->project_vec(one.outer(one));
  r.add("comultiplication is unital", same_matrix(d1, oo), "comult(1) != 1 (x) 1");
  r.add("counit is unital", same_matrix(Vec<S>(h.counit * h.H->one()), h.A->one()), "counit(1) != 1");

  std::string wd, we;
  for (int i = 0; i < n && wd.empty(); ++i) {
    Tensor<S> di = h.delta(Tensor<S>::basis(n, i), 0);
    for (int j = i; j < n && wd.empty(); ++j) {
      Tensor<S> dj = h.delta(Tensor<S>::basis(n, j), 0);
      Tensor<S> prod = h.mul(h.mul(di.outer(dj), 0, 2), 1, 2);
      Vec<S> lhs = h.hh->project_vec(h.delta(Tensor<S>::from_vec(h.H->lmul(i).col(j)), 0));
      if (!same_matrix(lhs, h.hh->project_vec(prod))) wd = "at (" + h.label(i) + ", " + h.label(j) + ")";
    }
  }
  for (int i = 0; i < n && we.empty(); ++i)
    for (int j = i; j < n && we.empty(); ++j) {
      Vec<S> lhs = h.counit * h.H->lmul(i).col(j);
      Vec<S> rhs = h.A->mul(h.counit.col(i), h.counit.col(j));
      if (!same_matrix(lhs, rhs)) we = "at (" + h.label(i) + ", " + h.label(j) + ")";
    }
  r.add("comultiplication is multiplicative", wd.empty(), wd);
  r.add("counit is multiplicative", we.empty(), we);

  Mat<S> sl = tabulate(H1, H1, [&](const Tensor<S>& x) { return h.mul(h.anti(h.delta(x, 0), 0), 0, 1); });
  Mat<S> sr = tabulate(H1, H1, [&](const Tensor<S>& x) { return h.mul(h.anti(h.delta(x, 0), 1), 0, 1); });
  check_equal<S>(r, "antipode: S(u1) u2 = t(counit(u))", sl, Mat<S>(h.t.matrix * h.counit), L);
  check_equal<S>(r, "antipode: u1 S(u2) = s(counit(u))", sr, Mat<S>(h.s.matrix * h.counit), L);

  std::string wa;
  for (int i = 0; i < n && wa.empty(); ++i)
    for (int j = i; j < n && wa.empty(); ++j)
      if (!same_matrix(Vec<S>(h.antipode * h.H->lmul(i).col(j)),
                       h.H->mul(h.antipode.col(i), h.antipode.col(j))))
        wa = "at (" + h.label(i) + ", " + h.label(j) + ")";
  r.add("antipode is multiplicative", wa.empty(), wa);
  r.add("antipode is unital", same_matrix(Vec<S>(h.antipode * h.H->one()), h.H->one()), "S(1) != 1");
  check_equal<S>(r, "antipode after source is target", Mat<S>(h.antipode * h.s.matrix), h.t.matrix);
  check_equal<S>(r, "antipode after target is source", Mat<S>(h.antipode * h.t.matrix), h.s.matrix);
  check_equal<S>(r, "antipode is involutive", Mat<S>(h.antipode * h.antipode), identity<S>(n), L);

  Mat<S> c1 = tabulate(H1, *h.hhh, [&](const Tensor<S>& x) { return h.delta(h.delta(x, 0), 0); });
  Mat<S> c2 = tabulate(H1, *h.hhh, [&](const Tensor<S>& x) { return h.delta(h.delta(x, 0), 1); });
  check_equal<S>(r, "coassociativity", c1, c2, L);
  Mat<S> lc = tabulate(H1, H1, [&](const Tensor<S>& x) { return h.mul(h.src(h.eps(h.delta(x, 0), 0), 0), 0, 1); });
  Mat<S> rc = tabulate(H1, H1, [&](const Tensor<S>& x) { return h.mul(h.tgt(h.eps(h.delta(x, 0), 1), 1), 0, 1); });
  check_equal<S>(r, "left counitality", lc, identity<S>(n), L);
  check_equal<S>(r, "right counitality", rc, identity<S>(n), L);

  auto as = Space<S>::atom(a);
  Vec<S> oneH = h.H->one();
  Mat<S> ds = tabulate(*as, *h.hh, [&](const Tensor<S>& x) { return h.delta(h.src(x, 0), 0); });
  Mat<S> ds2 = tabulate(*as, *h.hh, [&](const Tensor<S>& x) { return h.src(x, 0).insert(1, oneH); });
  Mat<S> dt = tabulate(*as, *h.hh, [&](const Tensor<S>& x) { return h.delta(h.tgt(x, 0), 0); });
  Mat<S> dt2 = tabulate(*as, *h.hh, [&](const Tensor<S>& x) { return h.tgt(x, 0).insert(0, oneH); });
  check_equal<S>(r, "comult(s(a)) = s(a) (x) 1", ds, ds2);
  check_equal<S>(r, "comult(t(a)) = 1 (x) t(a)", dt, dt2);

  r.add("source is faithfully flat", h.s_flat, "projective with zero annihilator fails");
  r.add("target is faithfully flat", h.t_flat, "projective with zero annihilator fails");
  return r;
}

template <class S> HopfMorphism<S> make_morphism(HopfPtr<S> src, HopfPtr<S> dst, Mat<S> phi0, Mat<S> phi1) {
  require_dims(phi0.rows() == dst->dimA() && phi0.cols() == src->dimA(), "hopf morphism: base map has wrong shape");
  require_dims(phi1.rows() == dst->dimH() && phi1.cols() == src->dimH(), "hopf morphism: total map has wrong shape");
  HopfMorphism<S> f;
  f.phi0 = AlgMorphism<S>{src->A, dst->A, std::move(phi0)};
  f.phi1 = AlgMorphism<S>{src->H, dst->H, std::move(phi1)};
  f.src = std::move(src);
  f.dst = std::move(dst);
  return f;
}

template <class S> HopfMorphism<S> identity_morphism(const HopfPtr<S>& h) {
  return make_morphism<S>(h, h, identity<S>(h->dimA()), identity<S>(h->dimH()));
}

template <class S> HopfMorphism<S> compose(const HopfMorphism<S>& g, const HopfMorphism<S>& f) {
  if (f.dst != g.src && !(f.dst->A->same_structure(*g.src->A) && f.dst->H->same_structure(*g.src->H)))
    throw std::invalid_argument("compose: morphisms are not composable");
  return make_morphism<S>(f.src, g.dst, g.phi0.matrix * f.phi0.matrix, g.phi1.matrix * f.phi1.matrix);
}

template <class S> Report verify_hopf_morphism(const HopfMorphism<S>& f) {
  Report r("hopf morphism " + f.src->name + " -> " + f.dst->name);
  r.absorb(verify_alg_morphism(f.phi0), "base map");
  r.absorb(verify_alg_morphism(f.phi1), "total map");
  const auto& H = *f.src;
  const auto& K = *f.dst;
  const Mat<S>& p0 = f.phi0.matrix;
  const Mat<S>& p1 = f.phi1.matrix;
  check_equal<S>(r, "compatible with source", Mat<S>(p1 * H.s.matrix), Mat<S>(K.s.matrix * p0));
  check_equal<S>(r, "compatible with target", Mat<S>(p1 * H.t.matrix), Mat<S>(K.t.matrix * p0));
  auto hs = Space<S>::atom(H.dimH());
  SparseCols<S> sp1(p1);
  Mat<S> dl = tabulate(*hs, *K.hh, [&](const Tensor<S>& x) { return K.delta(x.apply(0, sp1), 0); });
  Mat<S> dr = tabulate(*hs, *K.hh, [&](const Tensor<S>& x) { return H.delta(x, 0).apply(0, sp1).apply(1, sp1); });
  check_equal<S>(r, "compatible with comultiplication", dl, dr, H.labels);
  check_equal<S>(r, "compatible with counit", Mat<S>(K.counit * p1), Mat<S>(p0 * H.counit), H.labels);
  check_equal<S>(r, "compatible with antipode", Mat<S>(K.antipode * p1), Mat<S>(p1 * H.antipode), H.labels);
  return r;
}

#define HOPFALG_INSTANTIATE(S)                                                                                 \
  template struct HopfAlgebroid<S>;                                                                            \
  template HopfPtr<S> make_hopf<S>(std::string, AlgPtr<S>, AlgPtr<S>, Mat<S>, Mat<S>, Mat<S>, Mat<S>, Mat<S>,  \
                                   std::vector<std::string>, bool);                                            \
  template HopfPtr<S> make_hopf_plain<S>(std::string, AlgPtr<S>, AlgPtr<S>, Mat<S>, Mat<S>, const Mat<S>&,     \
                                         Mat<S>, Mat<S>, std::vector<std::string>, bool);                      \
  template HopfPtr<S> with_antipode<S>(const HopfAlgebroid<S>&, const Mat<S>&);                                \
  template HopfPtr<S> with_comult<S>(const HopfAlgebroid<S>&, const Mat<S>&);                                  \
  template Report verify_hopf_algebroid<S>(const HopfAlgebroid<S>&);                                           \
  template HopfMorphism<S> make_morphism<S>(HopfPtr<S>, HopfPtr<S>, Mat<S>, Mat<S>);                           \
  template HopfMorphism<S> identity_morphism<S>(const HopfPtr<S>&);                                            \
  template HopfMorphism<S> compose<S>(const HopfMorphism<S>&, const HopfMorphism<S>&);                         \
  template Report verify_hopf_morphism<S>(const HopfMorphism<S>&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
