#include "hopfalg/comodule.hpp"

namespace hopfalg {

namespace {

template <class S> Vec<S> kron(const Vec<S>& u, const Vec<S>& v) {
  Vec<S> out = Vec<S>::Zero(u.size() * v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i)
    for (Eigen::Index j = 0; j < v.size(); ++j) out(i * v.size() + j) = u(i) * v(j);
  return out;
}

template <class S> void require_same_hopf(const HopfPtr<S>& a, const HopfPtr<S>& b, const std::string& what) {
  if (a == b) return;
  if (a->A->same_structure(*b->A) && a->H->same_structure(*b->H) && same_matrix(a->comult, b->comult) &&
      same_matrix(a->s.matrix, b->s.matrix) && same_matrix(a->t.matrix, b->t.matrix))
    return;
  throw std::invalid_argument(what + ": comodules over different Hopf algebroids");
}

template <class S> RealPtr<S> chain_realization(const SpacePtr<S>& sp, const Mat<S>& incl) {
  auto r = std::make_shared<Realization<S>>();
  r->space = sp;
  r->embed = incl;
  r->retract = left_inverse<S>(incl);
  r->trivial = false;
  return r;
}

// Realization of a subspace of a tensor of parts over the parts' own realizations.
template <class S> RealPtr<S> deep_of(const Frame<S>& fr, const Mat<S>& incl) {
  return chain_realization<S>(fr.flat, Mat<S>(fr.embed * incl));
}

// retract * m * incl, checking that incl spans an m-stable subspace.
template <class S> Mat<S> restrict_to(const Mat<S>& m, const Mat<S>& incl, const Mat<S>& retract) {
  Mat<S> img = m * incl;
  Mat<S> out = retract * img;
  if (!same_matrix(Mat<S>(incl * out), img)) throw LandingError("subspace is not stable under the action");
  return out;
}

template <class S> std::vector<Mat<S>> restrict_all(const std::vector<Mat<S>>& ms, const Mat<S>& incl,
                                                    const Mat<S>& retract) {
  std::vector<Mat<S>> out;
  for (const auto& m : ms) out.push_back(restrict_to<S>(m, incl, retract));
  return out;
}

template <class S> std::vector<Mat<S>> factor_actions(const Space<S>& sp, int i, const std::vector<Mat<S>>& act) {
  std::vector<Mat<S>> out;
  for (const auto& a : act) out.push_back(sp.factor_action(i, a));
  return out;
}

template <class S> Frame<S> sub_frame(const SpacePtr<S>& ambient, const Mat<S>& incl) {
  Frame<S> f;
  f.space = Space<S>::atom(static_cast<int>(incl.cols()));
  f.flat = ambient;
  f.embed = incl;
  f.retract = left_inverse<S>(incl);
  f.trivial = false;
  return f;
}

template <class S> std::vector<Mat<S>> via_actions(const FinAlgebra<S>& x, const AlgMorphism<S>& f) {
  return actions_via(x, f.matrix);
}

}  // namespace

template <class S> Frame<S> deep_frame(int dim, const RealPtr<S>& deep) {
  if (!deep || deep->trivial) return frame_of<S>(Space<S>::atom(dim));
  Frame<S> f;
  f.space = Space<S>::atom(dim);
  f.flat = deep->space;
  f.embed = deep->embed;
  f.retract = deep->retract;
  f.trivial = false;
  return f;
}

template <class S> SparseCols<S> action_table(const std::vector<Mat<S>>& act, bool module_first) {
  const int na = static_cast<int>(act.size());
  const int nm = na ? static_cast<int>(act[0].rows()) : 0;
  Mat<S> t = Mat<S>::Zero(nm, nm * na);
  for (int a = 0; a < na; ++a)
    for (int m = 0; m < nm; ++m) t.col(module_first ? m * na + a : a * nm + m) = act[a].col(m);
  return SparseCols<S>(t);
}

template <class S> Tensor<S> Comodule<S>::coact(const Tensor<S>& x, int k) const {
  if (side == Side::right) return x.expand(k, coact_sp, {dim(), h->dimH()});
  return x.expand(k, coact_sp, {h->dimH(), dim()});
}

template <class S> Tensor<S> Comodule<S>::to_deep(const Tensor<S>& t, int k) const {
  if (!deep || deep->trivial) return t;
  return deep->space->lift(t.apply(k, deep->embed), k);
}

template <class S> Tensor<S> Comodule<S>::act_leaves(const Tensor<S>& t, int k, int j) const {
  const int g = leaves();
  require_dims(j >= k + g, "act_leaves: algebra slot overlaps the module");
  if (!deep || deep->trivial) return t.merge(k, j, action_table(carrier.act, true));
  Tensor<S> x = deep->space->project(t, k);
  x = x.merge(k, j - g + 1, action_table(deep_act, true));
  return deep->space->lift(x, k);
}

template <class S> SpacePtr<S> coaction_target(const HopfAlgebroid<S>& h, Side side, const FinModule<S>& m) {
  auto ma = Space<S>::atom(m.dim);
  auto ha = Space<S>::atom(h.dimH());
  if (side == Side::right) return Space<S>::chain({ma, ha}, {Link<S>{m.act, via_actions(*h.H, h.s)}});
  return Space<S>::chain({ha, ma}, {Link<S>{via_actions(*h.H, h.t), m.act}});
}

template <class S>
Comodule<S> make_comodule(std::string name, HopfPtr<S> h, Side side, FinModule<S> carrier, Mat<S> coaction) {
  if (carrier.over != h->A) require_same_algebra(carrier.over, h->A, "comodule " + name);
  Comodule<S> m;
  m.name = std::move(name);
  m.side = side;
  m.target = coaction_target(*h, side, carrier);
  require_dims(coaction.rows() == m.target->dim() && coaction.cols() == carrier.dim,
               "comodule " + m.name + ": coaction has wrong shape");
  m.coact_sp = SparseCols<S>(Mat<S>(m.target->step(1).sect * coaction));
  m.h = std::move(h);
  m.carrier = std::move(carrier);
  m.coaction = std::move(coaction);
  return m;
}

template <class S>
Comodule<S> make_comodule_plain(std::string name, HopfPtr<S> h, Side side, FinModule<S> carrier,
                                const Mat<S>& plain) {
  auto tgt = coaction_target(*h, side, carrier);
  require_dims(plain.rows() == static_cast<Eigen::Index>(carrier.dim) * h->dimH() && plain.cols() == carrier.dim,
               "comodule " + name + ": plain coaction has wrong shape");
  return make_comodule<S>(std::move(name), std::move(h), side, std::move(carrier), Mat<S>(tgt->step(1).proj * plain));
}

template <class S> Report verify_comodule(const Comodule<S>& m) {
  Report r((m.side == Side::right ? "right comodule " : "left comodule ") + m.name);
  r.absorb(verify_module(m.carrier), "carrier");
  const auto& h = *m.h;
  auto ma = Space<S>::atom(m.dim());
  auto ha = Space<S>::atom(h.dimH());
  const bool right = m.side == Side::right;

  std::string wl;
  for (int a = 0; a < h.dimA() && wl.empty(); ++a) {
    SparseCols<S> act(m.carrier.act[a]);
    Mat<S> tw = h.H->mult_by(Vec<S>((right ? h.t.matrix : h.s.matrix).col(a)));
    Mat<S> lhs = tabulate(*ma, *m.target, [&](const Tensor<S>& x) { return m.coact(x.apply(0, act), 0); });
    Mat<S> rhs = tabulate(*ma, *m.target, [&](const Tensor<S>& x) { return m.coact(x, 0).apply(right ? 1 : 0, tw); });
    int k = first_difference(lhs, rhs);
    if (k >= 0) wl = "at (" + basis_name<S>(k) + ", " + h.A->name() + "[" + std::to_string(a) + "])";
  }
  r.add(right ? "coaction: rho(m a) = m0 (x) m1 t(a)" : "coaction: lambda(a m) = s(a) m-1 (x) m0", wl.empty(), wl);

  Link<S> mh{m.carrier.act, via_actions(*h.H, h.s)};
  Link<S> hm{via_actions(*h.H, h.t), m.carrier.act};
  Link<S> hh = h.ts_link();
  if (right) {
    auto mhh = Space<S>::chain({ma, ha, ha}, {mh, hh});
    Mat<S> c1 = tabulate(*ma, *mhh, [&](const Tensor<S>& x) { return m.coact(m.coact(x, 0), 0); });
    Mat<S> c2 = tabulate(*ma, *mhh, [&](const Tensor<S>& x) { return h.delta(m.coact(x, 0), 1); });
    check_equal<S>(r, "coassociativity", c1, c2);
    Mat<S> cu = tabulate(*ma, *ma, [&](const Tensor<S>& x) {
      return h.eps(m.coact(x, 0), 1).merge(0, 1, action_table(m.carrier.act, true));
    });
    check_equal<S>(r, "counitality", cu, identity<S>(m.dim()));
  } else {
    auto hhm = Space<S>::chain({ha, ha, ma}, {hh, hm});
    Mat<S> c1 = tabulate(*ma, *hhm, [&](const Tensor<S>& x) { return m.coact(m.coact(x, 0), 1); });
    Mat<S> c2 = tabulate(*ma, *hhm, [&](const Tensor<S>& x) { return h.delta(m.coact(x, 0), 0); });
    check_equal<S>(r, "coassociativity", c1, c2);
    Mat<S> cu = tabulate(*ma, *ma, [&](const Tensor<S>& x) {
      return h.eps(m.coact(x, 0), 0).merge(0, 1, action_table(m.carrier.act, false));
    });
    check_equal<S>(r, "counitality", cu, identity<S>(m.dim()));
  }
  return r;
}

template <class S> Comodule<S> identity_comodule(const HopfPtr<S>& h, Side side) {
  const int a = h->dimA();
  Mat<S> plain = Mat<S>::Zero(static_cast<Eigen::Index>(a) * h->dimH(), a);
  for (int i = 0; i < a; ++i) {
    if (side == Side::right)
      plain.col(i) = kron<S>(h->A->one(), Vec<S>(h->t.matrix.col(i)));
    else
      plain.col(i) = kron<S>(Vec<S>(h->s.matrix.col(i)), h->A->one());
  }
  return make_comodule_plain<S>(h->name + ".base", h, side, FinModule<S>::regular(h->A), plain);
}

template <class S> Comodule<S> regular_comodule(const HopfPtr<S>& h, Side side) {
  FinModule<S> c = FinModule<S>::via(side == Side::right ? h->t : h->s);
  return make_comodule<S>(h->name + ".regular", h, side, std::move(c), h->comult);
}

template <class S> Mat<S> coinvariants(const Comodule<S>& m) {
  auto ma = Space<S>::atom(m.dim());
  const Vec<S>& one = m.h->H->one();
  const int k = m.side == Side::right ? 1 : 0;
  Mat<S> triv = tabulate(*ma, *m.target, [&](const Tensor<S>& x) { return x.insert(k, one); });
  return kernel_basis<S>(Mat<S>(m.coaction - triv));
}

template <class S> bool is_module_map(const FinModule<S>& m, const FinModule<S>& n, const Mat<S>& f) {
  if (f.rows() != n.dim || f.cols() != m.dim || m.act.size() != n.act.size()) return false;
  for (std::size_t a = 0; a < m.act.size(); ++a)
    if (!same_matrix(Mat<S>(f * m.act[a]), Mat<S>(n.act[a] * f))) return false;
  return true;
}

template <class S> bool is_comodule_map(const Comodule<S>& m, const Comodule<S>& n, const Mat<S>& f) {
  if (m.side != n.side || !is_module_map(m.carrier, n.carrier, f)) return false;
  auto ma = Space<S>::atom(m.dim());
  SparseCols<S> fs(f);
  const int k = m.side == Side::right ? 0 : 1;
  Mat<S> lhs = tabulate(*ma, *n.target, [&](const Tensor<S>& x) { return n.coact(x.apply(0, fs), 0); });
  Mat<S> rhs = tabulate(*ma, *n.target, [&](const Tensor<S>& x) { return m.coact(x, 0).apply(k, fs); });
  return same_matrix(lhs, rhs);
}

template <class S> Report verify_bicomodule(const Bicomodule<S>& b) {
  Report r("bicomodule " + b.left.name);
  r.add("sides", b.left.side == Side::left && b.right.side == Side::right, "expected a left and a right coaction");
  r.add("dimensions agree", b.left.dim() == b.right.dim(), "left and right carriers differ");
  if (!r.ok()) return r;
  r.absorb(verify_comodule(b.left), "left");
  r.absorb(verify_comodule(b.right), "right");
  const auto& H = *b.left.h;
  const auto& K = *b.right.h;
  auto ma = Space<S>::atom(b.dim());
  std::string wb, wa;
  for (int j = 0; j < K.dimA() && wb.empty(); ++j) {
    SparseCols<S> act(b.right.carrier.act[j]);
    Mat<S> l1 = tabulate(*ma, *b.left.target, [&](const Tensor<S>& x) { return b.left.coact(x.apply(0, act), 0); });
    Mat<S> l2 = tabulate(*ma, *b.left.target, [&](const Tensor<S>& x) { return b.left.coact(x, 0).apply(1, act); });
    if (!same_matrix(l1, l2)) wb = "at " + K.A->name() + "[" + std::to_string(j) + "]";
  }
  for (int i = 0; i < H.dimA() && wa.empty(); ++i) {
    SparseCols<S> act(b.left.carrier.act[i]);
    Mat<S> r1 = tabulate(*ma, *b.right.target, [&](const Tensor<S>& x) { return b.right.coact(x.apply(0, act), 0); });
    Mat<S> r2 = tabulate(*ma, *b.right.target, [&](const Tensor<S>& x) { return b.right.coact(x, 0).apply(0, act); });
    if (!same_matrix(r1, r2)) wa = "at " + H.A->name() + "[" + std::to_string(i) + "]";
  }
  r.add("left coaction is right linear", wb.empty(), wb);
  r.add("right coaction is left linear", wa.empty(), wa);
  if (!wb.empty() || !wa.empty()) return r;
  auto hmk = Space<S>::chain({Space<S>::atom(H.dimH()), ma, Space<S>::atom(K.dimH())},
                             {Link<S>{via_actions(*H.H, H.t), b.left.carrier.act},
                              Link<S>{b.right.carrier.act, via_actions(*K.H, K.s)}});
  Mat<S> c1 = tabulate(*ma, *hmk, [&](const Tensor<S>& x) { return b.right.coact(b.left.coact(x, 0), 1); });
  Mat<S> c2 = tabulate(*ma, *hmk, [&](const Tensor<S>& x) { return b.left.coact(b.right.coact(x, 0), 0); });
  check_equal<S>(r, "coactions commute", c1, c2);
  return r;
}

template <class S> Cotensor<S> cotensor(const Comodule<S>& m, const Comodule<S>& n) {
  if (m.side != Side::right || n.side != Side::left)
    throw std::invalid_argument("cotensor: needs a right and a left comodule");
  require_same_hopf(m.h, n.h, "cotensor");
  const auto& h = *m.h;
  Cotensor<S> c;
  auto ma = Space<S>::atom(m.dim());
  auto na = Space<S>::atom(n.dim());
  c.ambient = Space<S>::chain({ma, na}, {Link<S>{m.carrier.act, n.carrier.act}});
  auto mhn = Space<S>::chain({ma, Space<S>::atom(h.dimH()), na},
                             {Link<S>{m.carrier.act, via_actions(*h.H, h.s)}, Link<S>{via_actions(*h.H, h.t), n.carrier.act}});
  Mat<S> d = tabulate(*c.ambient, *mhn, [&](const Tensor<S>& x) { return m.coact(x, 0) - n.coact(x, 1); });
  c.incl = kernel_basis<S>(d);
  c.level = chain_realization<S>(c.ambient, c.incl);
  c.frame = make_frame<S>({m.part(), n.part()}, {LinkPair<S>{Link<S>{m.carrier.act, n.carrier.act},
                                                             Link<S>{m.flat_act(), n.flat_act()}}});
  c.deep = deep_of<S>(c.frame, c.incl);
  return c;
}

namespace {

// M [] N as a right comodule through the right coaction of N.
template <class S> Comodule<S> induced_right(const Cotensor<S>& c, const Comodule<S>& nr, std::string name) {
  const auto& K = *nr.h;
  auto s_acts = via_actions(*K.H, K.s);
  std::vector<Mat<S>> amb = factor_actions(*c.ambient, 1, nr.carrier.act);
  FinModule<S> carrier{K.A, c.dim(), restrict_all<S>(amb, c.incl, c.level->retract)};
  Frame<S> dom = sub_frame<S>(c.ambient, c.incl);
  Frame<S> cod = make_frame<S>({Part<S>{c.dim(), c.level}, Part<S>{K.dimH(), nullptr}},
                               {LinkPair<S>{Link<S>{carrier.act, s_acts}, Link<S>{amb, s_acts}}});
  Mat<S> co = tabulate_flat(dom, cod, [&](const Tensor<S>& x) { return nr.coact(x, 1); });
  Comodule<S> out = make_comodule<S>(std::move(name), nr.h, Side::right, std::move(carrier), std::move(co));
  out.level = c.level;
  out.deep = c.deep;
  out.deep_act = factor_actions(*c.frame.flat, 1, nr.flat_act());
  return out;
}

template <class S> Comodule<S> induced_left(const Cotensor<S>& c, const Comodule<S>& ml, std::string name) {
  const auto& J = *ml.h;
  auto t_acts = via_actions(*J.H, J.t);
  std::vector<Mat<S>> amb = factor_actions(*c.ambient, 0, ml.carrier.act);
  FinModule<S> carrier{J.A, c.dim(), restrict_all<S>(amb, c.incl, c.level->retract)};
  Frame<S> dom = sub_frame<S>(c.ambient, c.incl);
  Frame<S> cod = make_frame<S>({Part<S>{J.dimH(), nullptr}, Part<S>{c.dim(), c.level}},
                               {LinkPair<S>{Link<S>{t_acts, carrier.act}, Link<S>{t_acts, amb}}});
  Mat<S> co = tabulate_flat(dom, cod, [&](const Tensor<S>& x) { return ml.coact(x, 0); });
  Comodule<S> out = make_comodule<S>(std::move(name), ml.h, Side::left, std::move(carrier), std::move(co));
  out.level = c.level;
  out.deep = c.deep;
  out.deep_act = factor_actions(*c.frame.flat, 0, ml.flat_act());
  return out;
}

}  // namespace

template <class S> Comodule<S> cotensor_right(const Comodule<S>& m, const Bicomodule<S>& n) {
  Cotensor<S> c = cotensor(m, n.left);
  return induced_right(c, n.right, m.name + "[]" + n.left.name);
}

template <class S> Comodule<S> cotensor_left(const Bicomodule<S>& m, const Comodule<S>& n) {
  Cotensor<S> c = cotensor(m.right, n);
  return induced_left(c, m.left, m.right.name + "[]" + n.name);
}

template <class S> Bicomodule<S> cotensor_bi(const Bicomodule<S>& m, const Bicomodule<S>& n) {
  Cotensor<S> c = cotensor(m.right, n.left);
  std::string name = m.right.name + "[]" + n.left.name;
  return Bicomodule<S>{induced_left(c, m.left, name), induced_right(c, n.right, name)};
}

template <class S>
Report verify_cotensor_associativity(const Comodule<S>& m, const Bicomodule<S>& n, const Comodule<S>& np) {
  Report r("cotensor associativity");
  auto flat = [](const Comodule<S>& c) { return c.deep ? c.deep->space : Space<S>::atom(c.dim()); };
  auto triple = Space<S>::chain({flat(m), flat(n.left), flat(np)}, {Link<S>{m.flat_act(), n.left.flat_act()},
                                                                   Link<S>{n.right.flat_act(), np.flat_act()}});
  Comodule<S> mn = cotensor_right(m, n);
  Cotensor<S> c1 = cotensor(mn, np);
  Comodule<S> nnp = cotensor_left(n, np);
  Cotensor<S> c2 = cotensor(m, nnp);
  auto same_leaves = [](const Tensor<S>& x) { return x; };
  Mat<S> s1 = tabulate(*c1.deep->space, *triple, same_leaves) * c1.deep->embed;
  Mat<S> s2 = tabulate(*c2.deep->space, *triple, same_leaves) * c2.deep->embed;
  r.note("dimension", std::to_string(s1.cols()) + " and " + std::to_string(s2.cols()));
  r.add("same subspace of the triple tensor", s1.cols() == s2.cols() && same_span<S>(s1, s2),
        "dimensions " + std::to_string(rank<S>(s1)) + " and " + std::to_string(rank<S>(s2)));
  return r;
}

template <class S> Comodule<S> opposite_comodule(const Comodule<S>& m) {
  const auto& h = *m.h;
  auto ma = Space<S>::atom(m.dim());
  Side side = m.side == Side::right ? Side::left : Side::right;
  auto tgt = coaction_target(h, side, m.carrier);
  Mat<S> co = tabulate(*ma, *tgt, [&](const Tensor<S>& x) {
    Tensor<S> y = m.coact(x, 0);
    return h.anti(y, m.side == Side::right ? 1 : 0).permute({1, 0});
  });
  Comodule<S> out = make_comodule<S>(m.name + "^op", m.h, side, m.carrier, std::move(co));
  out.level = m.level;
  out.deep = m.deep;
  out.deep_act = m.deep_act;
  return out;
}

template <class S> Comodule<S> codiagonal_tensor(const Comodule<S>& m, const Comodule<S>& n) {
  if (m.side != Side::right || n.side != Side::right)
    throw std::invalid_argument("codiagonal tensor: needs right comodules");
  require_same_hopf(m.h, n.h, "codiagonal tensor");
  const auto& h = *m.h;
  auto mn = Space<S>::chain({Space<S>::atom(m.dim()), Space<S>::atom(n.dim())},
                            {Link<S>{m.carrier.act, n.carrier.act}});
  FinModule<S> carrier{h.A, mn->dim(), factor_actions(*mn, 0, m.carrier.act)};
  auto level = chain_realization<S>(mn, identity<S>(mn->dim()));
  auto s_acts = via_actions(*h.H, h.s);
  Frame<S> dom = sub_frame<S>(mn, identity<S>(mn->dim()));
  Frame<S> cod = make_frame<S>({Part<S>{mn->dim(), level}, Part<S>{h.dimH(), nullptr}},
                               {LinkPair<S>{Link<S>{carrier.act, s_acts}, Link<S>{carrier.act, s_acts}}});
  Mat<S> co = tabulate_flat(dom, cod, [&](const Tensor<S>& x) {
    return h.mul(n.coact(m.coact(x, 0), 2), 1, 3).permute({0, 2, 1});
  });
  Comodule<S> out = make_comodule<S>(m.name + "(x)" + n.name, m.h, Side::right, std::move(carrier), std::move(co));
  Frame<S> fr = make_frame<S>({m.part(), n.part()}, {LinkPair<S>{Link<S>{m.carrier.act, n.carrier.act},
                                                                 Link<S>{m.flat_act(), n.flat_act()}}});
  out.level = level;
  out.deep = deep_of<S>(fr, identity<S>(mn->dim()));
  out.deep_act = factor_actions(*fr.flat, 0, m.flat_act());
  return out;
}

template <class S> Mat<S> flip_map(const Comodule<S>& m, const Comodule<S>& n) {
  auto ma = Space<S>::atom(m.dim());
  auto na = Space<S>::atom(n.dim());
  auto mn = Space<S>::chain({ma, na}, {Link<S>{m.carrier.act, n.carrier.act}});
  auto nm = Space<S>::chain({na, ma}, {Link<S>{n.carrier.act, m.carrier.act}});
  return tabulate(*mn, *nm, [](const Tensor<S>& x) { return x.permute({1, 0}); });
}

namespace {

template <class S> SpacePtr<S> induced_space(const HopfMorphism<S>& f, const Comodule<S>& m) {
  const auto& B = *f.dst->A;
  return Space<S>::chain({Space<S>::atom(m.dim()), Space<S>::atom(B.dim())},
                         {Link<S>{m.carrier.act, actions_via(B, f.phi0.matrix)}});
}

}  // namespace

template <class S> Comodule<S> induction(const HopfMorphism<S>& f, const Comodule<S>& m) {
  if (m.side != Side::right) throw std::invalid_argument("induction: needs a right comodule");
  require_same_hopf(m.h, f.src, "induction");
  const auto& K = *f.dst;
  const auto& B = *K.A;
  auto mb = induced_space(f, m);
  FinModule<S> carrier{K.A, mb->dim(), factor_actions(*mb, 1, B.lmuls())};
  auto level = chain_realization<S>(mb, identity<S>(mb->dim()));
  auto s_acts = via_actions(*K.H, K.s);
  Frame<S> dom = sub_frame<S>(mb, identity<S>(mb->dim()));
  Frame<S> cod = make_frame<S>({Part<S>{mb->dim(), level}, Part<S>{K.dimH(), nullptr}},
                               {LinkPair<S>{Link<S>{carrier.act, s_acts}, Link<S>{carrier.act, s_acts}}});
  SparseCols<S> p1(f.phi1.matrix);
  Mat<S> co = tabulate_flat(dom, cod, [&](const Tensor<S>& x) {
    Tensor<S> y = m.coact(x, 0).insert(1, B.one()).apply(2, p1);
    return K.mul(K.tgt(y, 3), 2, 3);
  });
  Comodule<S> out = make_comodule<S>("ind(" + m.name + ")", f.dst, Side::right, std::move(carrier), std::move(co));
  Frame<S> fr = make_frame<S>({m.part(), Part<S>{B.dim(), nullptr}},
                              {LinkPair<S>{Link<S>{m.carrier.act, actions_via(B, f.phi0.matrix)},
                                           Link<S>{m.flat_act(), actions_via(B, f.phi0.matrix)}}});
  out.level = level;
  out.deep = deep_of<S>(fr, identity<S>(mb->dim()));
  out.deep_act = factor_actions(*fr.flat, 1, B.lmuls());
  return out;
}

template <class S> Bicomodule<S> induction_kernel(const HopfMorphism<S>& f) {
  const auto& H = *f.src;
  const auto& K = *f.dst;
  const auto& B = *K.A;
  auto bh = Space<S>::chain({Space<S>::atom(B.dim()), Space<S>::atom(H.dimH())},
                            {Link<S>{actions_via(B, f.phi0.matrix), via_actions(*H.H, H.s)}});
  const Mat<S> I = identity<S>(bh->dim());
  auto level = chain_realization<S>(bh, I);
  Frame<S> dom = sub_frame<S>(bh, I);
  SparseCols<S> p1(f.phi1.matrix);

  FinModule<S> lc{K.A, bh->dim(), factor_actions(*bh, 0, B.lmuls())};
  auto t_k = via_actions(*K.H, K.t);
  Frame<S> lcod = make_frame<S>({Part<S>{K.dimH(), nullptr}, Part<S>{bh->dim(), level}},
                                {LinkPair<S>{Link<S>{t_k, lc.act}, Link<S>{t_k, lc.act}}});
  Mat<S> lco = tabulate_flat(dom, lcod, [&](const Tensor<S>& x) {
    Tensor<S> y = H.delta(x, 1).apply(1, p1);
    return K.mul(K.src(y, 0), 0, 1).insert(1, B.one());
  });

  std::vector<Mat<S>> ta;
  for (int a = 0; a < H.dimA(); ++a) ta.push_back(bh->factor_action(1, H.H->mult_by(Vec<S>(H.t.matrix.col(a)))));
  FinModule<S> rc{H.A, bh->dim(), ta};
  auto s_h = via_actions(*H.H, H.s);
  Frame<S> rcod = make_frame<S>({Part<S>{bh->dim(), level}, Part<S>{H.dimH(), nullptr}},
                                {LinkPair<S>{Link<S>{ta, s_h}, Link<S>{ta, s_h}}});
  Mat<S> rco = tabulate_flat(dom, rcod, [&](const Tensor<S>& x) { return H.delta(x, 1); });

  std::string name = B.name() + "(x)" + H.name;
  Bicomodule<S> out{make_comodule<S>(name, f.dst, Side::left, lc, std::move(lco)),
                    make_comodule<S>(name, f.src, Side::right, rc, std::move(rco))};
  out.left.level = out.right.level = out.left.deep = out.right.deep = level;
  out.left.deep_act = lc.act;
  out.right.deep_act = ta;
  return out;
}

template <class S> Comodule<S> coinduction(const HopfMorphism<S>& f, const Comodule<S>& n) {
  if (n.side != Side::right) throw std::invalid_argument("coinduction: needs a right comodule");
  require_same_hopf(n.h, f.dst, "coinduction");
  Comodule<S> out = cotensor_right(n, induction_kernel(f));
  out.name = "coind(" + n.name + ")";
  return out;
}

template <class S> Mat<S> adjunction_unit(const HopfMorphism<S>& f, const Comodule<S>& m) {
  const auto& B = *f.dst->A;
  Comodule<S> im = induction(f, m);
  Comodule<S> v = coinduction(f, im);
  auto ma = Space<S>::atom(m.dim());
  return tabulate_flat(frame_of<S>(ma), deep_frame(v), [&](const Tensor<S>& x) {
    Tensor<S> y = m.coact(x, 0).insert(1, B.one()).insert(2, B.one());
    return m.to_deep(y, 0);
  });
}

template <class S> Mat<S> adjunction_counit(const HopfMorphism<S>& f, const Comodule<S>& n) {
  const auto& H = *f.src;
  const auto& B = *f.dst->A;
  Comodule<S> c = coinduction(f, n);
  Comodule<S> w = induction(f, c);
  const int g = n.leaves();
  SparseCols<S> p0(f.phi0.matrix);
  // Leaves of w: n..., b, u, b'.
  return tabulate_flat(deep_frame(w), deep_frame(n), [&](const Tensor<S>& x) {
    Tensor<S> y = H.eps(x, g + 1).apply(g + 1, p0);
    y = y.merge(g, g + 1, B.product_sparse()).merge(g, g + 1, B.product_sparse());
    return n.act_leaves(y, 0, g);
  });
}

template <class S> Report verify_adjunction(const HopfMorphism<S>& f, const Comodule<S>& m, const Comodule<S>& n) {
  Report r("induction/coinduction adjunction");
  Comodule<S> im = induction(f, m);
  Comodule<S> cim = coinduction(f, im);
  Mat<S> unit = adjunction_unit(f, m);
  r.add("unit is a comodule map", is_comodule_map(m, cim, unit), m.name);

  Comodule<S> cn = coinduction(f, n);
  Comodule<S> icn = induction(f, cn);
  Mat<S> counit = adjunction_counit(f, n);
  r.add("counit is a comodule map", is_comodule_map(icn, n, counit), n.name);

  // counit at ind(M) after ind(unit) is the identity of ind(M).
  SparseCols<S> us(unit);
  Mat<S> ind_unit = tabulate(*induced_space(f, m), *induced_space(f, cim),
                             [&](const Tensor<S>& x) { return x.apply(0, us); });
  Mat<S> t1 = adjunction_counit(f, im) * ind_unit;
  check_equal<S>(r, "triangle at induction", t1, identity<S>(im.dim()));

  // coind(counit) after the unit at coind(N) is the identity of coind(N).
  Mat<S> unit_c = adjunction_unit(f, cn);
  Comodule<S> cicn = coinduction(f, icn);
  SparseCols<S> cs(counit);
  Mat<S> amb = tabulate(*cicn.level->space, *cn.level->space, [&](const Tensor<S>& x) { return x.apply(0, cs); });
  Mat<S> img = amb * cicn.level->embed;
  Mat<S> cc = cn.level->retract * img;
  r.add("coinduced counit lands in the cotensor", same_matrix(Mat<S>(cn.level->embed * cc), img), n.name);
  check_equal<S>(r, "triangle at coinduction", Mat<S>(cc * unit_c), identity<S>(cn.dim()));
  return r;
}

template <class S>
Report verify_induction_monoidal(const HopfMorphism<S>& f, const Comodule<S>& m, const Comodule<S>& n) {
  Report r("induction is monoidal");
  const auto& B = *f.dst->A;
  Comodule<S> im = induction(f, m), in = induction(f, n);
  Comodule<S> lhs = codiagonal_tensor(im, in);
  Comodule<S> rhs = induction(f, codiagonal_tensor(m, n));
  const int gm = m.leaves(), gn = n.leaves();
  // Leaves m..., b, n..., b' -> m..., n..., b b'.
  std::vector<int> perm;
  for (int i = 0; i < gm; ++i) perm.push_back(i);
  for (int i = 0; i < gn; ++i) perm.push_back(gm + 1 + i);
  perm.push_back(gm);
  perm.push_back(gm + gn + 1);
  Mat<S> phi = tabulate_flat(deep_frame(lhs), deep_frame(rhs), [&](const Tensor<S>& x) {
    return x.permute(perm).merge(gm + gn, gm + gn + 1, B.product_sparse());
  });
  r.add("canonical map is bijective", is_bijective(phi), "rank " + std::to_string(rank<S>(phi)));
  r.add("canonical map is a comodule map", is_comodule_map(lhs, rhs, phi), "");
  return r;
}

template <class S> Comodule<S> LeftComoduleAlgebra<S>::comodule() const {
  Comodule<S> m = make_comodule<S>(name, h, Side::left, FinModule<S>::via(sigma), coaction);
  if (deep && !deep->trivial) {
    m.deep = deep;
    m.deep_act = realized_actions_via(*deep, sigma.matrix);
  }
  return m;
}

template <class S>
LeftComoduleAlgebra<S> make_left_comodule_algebra(std::string name, HopfPtr<S> h, AlgPtr<S> R, Mat<S> sigma,
                                                  Mat<S> coaction) {
  require_dims(sigma.rows() == R->dim() && sigma.cols() == h->dimA(), "comodule algebra: sigma has wrong shape");
  LeftComoduleAlgebra<S> r;
  r.name = std::move(name);
  r.sigma = AlgMorphism<S>{h->A, R, std::move(sigma)};
  r.target = Space<S>::chain({Space<S>::atom(h->dimH()), Space<S>::atom(R->dim())},
                             {Link<S>{via_actions(*h->H, h->t), actions_via(*R, r.sigma.matrix)}});
  require_dims(coaction.rows() == r.target->dim() && coaction.cols() == R->dim(),
               "comodule algebra " + r.name + ": coaction has wrong shape");
  r.coact_sp = SparseCols<S>(Mat<S>(r.target->step(1).sect * coaction));
  r.coaction = std::move(coaction);
  r.h = std::move(h);
  r.R = std::move(R);
  return r;
}

template <class S>
LeftComoduleAlgebra<S> make_left_comodule_algebra_plain(std::string name, HopfPtr<S> h, AlgPtr<S> R, Mat<S> sigma,
                                                        const Mat<S>& plain) {
  auto tgt = Space<S>::chain({Space<S>::atom(h->dimH()), Space<S>::atom(R->dim())},
                             {Link<S>{via_actions(*h->H, h->t), actions_via(*R, sigma)}});
  require_dims(plain.rows() == static_cast<Eigen::Index>(h->dimH()) * R->dim() && plain.cols() == R->dim(),
               "comodule algebra " + name + ": plain coaction has wrong shape");
  Mat<S> co = tgt->step(1).proj * plain;
  return make_left_comodule_algebra<S>(std::move(name), std::move(h), std::move(R), std::move(sigma), std::move(co));
}

template <class S> Report verify_left_comodule_algebra(const LeftComoduleAlgebra<S>& c) {
  Report r("left comodule algebra " + c.name);
  r.absorb(verify_algebra(*c.R), "algebra");
  r.absorb(verify_alg_morphism(c.sigma), "base map");
  if (!r.ok()) return r;
  r.absorb(verify_comodule(c.comodule()), "comodule");
  const auto& h = *c.h;
  const auto& R = *c.R;
  std::string wm;
  for (int i = 0; i < R.dim() && wm.empty(); ++i)
    for (int j = i; j < R.dim() && wm.empty(); ++j) {
      Vec<S> lhs = c.target->project_vec(c.coact(Tensor<S>::from_vec(R.lmul(i).col(j)), 0));
      Tensor<S> p = c.coact(Tensor<S>::basis(R.dim(), i), 0).outer(c.coact(Tensor<S>::basis(R.dim(), j), 0));
      p = h.mul(p, 0, 2).merge(1, 2, R.product_sparse());
      if (!same_matrix(lhs, c.target->project_vec(p)))
        wm = "at (" + basis_name<S>(i) + ", " + basis_name<S>(j) + ")";
    }
  r.add("coaction is multiplicative", wm.empty(), wm);
  Vec<S> l1 = c.target->project_vec(c.coact(Tensor<S>::from_vec(R.one()), 0));
  Vec<S> oo = c.target->project_vec(Tensor<S>::from_vec(h.H->one()).outer(Tensor<S>::from_vec(R.one())));
  r.add("coaction is unital", same_matrix(l1, oo), "lambda(1) != 1 (x) 1");
  auto aa = Space<S>::atom(h.dimA());
  SparseCols<S> sg(c.sigma.matrix);
  Mat<S> ls = tabulate(*aa, *c.target, [&](const Tensor<S>& x) { return c.coact(x.apply(0, sg), 0); });
  Mat<S> ss = tabulate(*aa, *c.target, [&](const Tensor<S>& x) { return h.src(x, 0).insert(1, R.one()); });
  check_equal<S>(r, "lambda(sigma(a)) = s(a) (x) 1", ls, ss);
  return r;
}

template <class S> void require_left_comodule_algebra(const LeftComoduleAlgebra<S>& c) {
  Report r = verify_left_comodule_algebra(c);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw PreconditionError(c.name + " is not a left comodule algebra: " + f->name +
                            (f->witness.empty() ? "" : " (" + f->witness + ")"));
  }
}

template <class S> LeftComoduleAlgebra<S> base_comodule_algebra(const HopfPtr<S>& h) {
  const int a = h->dimA();
  Mat<S> plain = Mat<S>::Zero(static_cast<Eigen::Index>(h->dimH()) * a, a);
  for (int i = 0; i < a; ++i) plain.col(i) = kron<S>(Vec<S>(h->s.matrix.col(i)), h->A->one());
  return make_left_comodule_algebra_plain<S>(h->name + ".base", h, h->A, identity<S>(a), plain);
}

template <class S> LeftComoduleAlgebra<S> regular_comodule_algebra(const HopfPtr<S>& h) {
  return make_left_comodule_algebra<S>(h->name + ".regular", h, h->H, h->s.matrix, h->comult);
}

template <class S> SpacePtr<S> left_target(const HopfAlgebroid<S>& h, const FinAlgebra<S>& p, const Mat<S>& alpha) {
  return Space<S>::chain({Space<S>::atom(h.dimH()), Space<S>::atom(p.dim())},
                         {Link<S>{via_actions(*h.H, h.t), actions_via(p, alpha)}});
}

template <class S> SpacePtr<S> right_target(const HopfAlgebroid<S>& k, const FinAlgebra<S>& p, const Mat<S>& beta) {
  return Space<S>::chain({Space<S>::atom(p.dim()), Space<S>::atom(k.dimH())},
                         {Link<S>{actions_via(p, beta), via_actions(*k.H, k.s)}});
}

template <class S> Comodule<S> BicomoduleAlgebra<S>::left_comodule() const {
  Comodule<S> m = make_comodule<S>(name, H, Side::left, FinModule<S>::via(alpha), lambda);
  if (deep && !deep->trivial) {
    m.deep = deep;
    m.deep_act = realized_actions_via(*deep, alpha.matrix);
  }
  return m;
}

template <class S> Comodule<S> BicomoduleAlgebra<S>::right_comodule() const {
  Comodule<S> m = make_comodule<S>(name, K, Side::right, FinModule<S>::via(beta), rho);
  if (deep && !deep->trivial) {
    m.deep = deep;
    m.deep_act = realized_actions_via(*deep, beta.matrix);
  }
  return m;
}

template <class S> LeftComoduleAlgebra<S> BicomoduleAlgebra<S>::left_algebra() const {
  LeftComoduleAlgebra<S> r = make_left_comodule_algebra<S>(name, H, P, alpha.matrix, lambda);
  r.deep = deep;
  return r;
}

template <class S>
BicomoduleAlgebra<S> make_bicomodule_algebra(std::string name, HopfPtr<S> H, HopfPtr<S> K, AlgPtr<S> P, Mat<S> alpha,
                                             Mat<S> beta, Mat<S> lambda, Mat<S> rho) {
  require_dims(alpha.rows() == P->dim() && alpha.cols() == H->dimA(), "bicomodule algebra: alpha has wrong shape");
  require_dims(beta.rows() == P->dim() && beta.cols() == K->dimA(), "bicomodule algebra: beta has wrong shape");
  BicomoduleAlgebra<S> b;
  b.name = std::move(name);
  b.ltarget = left_target(*H, *P, alpha);
  b.rtarget = right_target(*K, *P, beta);
  require_dims(lambda.rows() == b.ltarget->dim() && lambda.cols() == P->dim(),
               "bicomodule algebra " + b.name + ": left coaction has wrong shape");
  require_dims(rho.rows() == b.rtarget->dim() && rho.cols() == P->dim(),
               "bicomodule algebra " + b.name + ": right coaction has wrong shape");
  b.lambda_sp = SparseCols<S>(Mat<S>(b.ltarget->step(1).sect * lambda));
  b.rho_sp = SparseCols<S>(Mat<S>(b.rtarget->step(1).sect * rho));
  b.alpha = AlgMorphism<S>{H->A, P, std::move(alpha)};
  b.beta = AlgMorphism<S>{K->A, P, std::move(beta)};
  b.lambda = std::move(lambda);
  b.rho = std::move(rho);
  b.H = std::move(H);
  b.K = std::move(K);
  b.P = std::move(P);
  return b;
}

template <class S>
BicomoduleAlgebra<S> make_bicomodule_algebra_plain(std::string name, HopfPtr<S> H, HopfPtr<S> K, AlgPtr<S> P,
                                                   Mat<S> alpha, Mat<S> beta, const Mat<S>& lambda_plain,
                                                   const Mat<S>& rho_plain) {
  auto lt = left_target(*H, *P, alpha);
  auto rt = right_target(*K, *P, beta);
  require_dims(lambda_plain.rows() == lt->step(1).sect.rows() && lambda_plain.cols() == P->dim(),
               "bicomodule algebra " + name + ": plain left coaction has wrong shape");
  require_dims(rho_plain.rows() == rt->step(1).sect.rows() && rho_plain.cols() == P->dim(),
               "bicomodule algebra " + name + ": plain right coaction has wrong shape");
  Mat<S> l = lt->step(1).proj * lambda_plain;
  Mat<S> r = rt->step(1).proj * rho_plain;
  return make_bicomodule_algebra<S>(std::move(name), std::move(H), std::move(K), std::move(P), std::move(alpha),
                                    std::move(beta), std::move(l), std::move(r));
}

template <class S> Report verify_bicomodule_algebra(const BicomoduleAlgebra<S>& b) {
  Report r("bicomodule algebra " + b.name);
  r.absorb(verify_left_comodule_algebra(b.left_algebra()), "left");
  r.absorb(verify_alg_morphism(b.beta), "beta");
  if (!r.ok()) return r;
  r.absorb(verify_comodule(b.right_comodule()), "right comodule");
  const auto& K = *b.K;
  const auto& H = *b.H;
  const auto& P = *b.P;
  std::string wm;
  for (int i = 0; i < P.dim() && wm.empty(); ++i)
    for (int j = i; j < P.dim() && wm.empty(); ++j) {
      Vec<S> lhs = b.rtarget->project_vec(b.rh(Tensor<S>::from_vec(P.lmul(i).col(j)), 0));
      Tensor<S> p = b.rh(Tensor<S>::basis(P.dim(), i), 0).outer(b.rh(Tensor<S>::basis(P.dim(), j), 0));
      p = K.mul(b.mul(p, 0, 2), 1, 2);
      if (!same_matrix(lhs, b.rtarget->project_vec(p))) wm = "at (" + basis_name<S>(i) + ", " + basis_name<S>(j) + ")";
    }
  r.add("right coaction is multiplicative", wm.empty(), wm);
  Vec<S> r1 = b.rtarget->project_vec(b.rh(Tensor<S>::from_vec(P.one()), 0));
  Vec<S> oo = b.rtarget->project_vec(Tensor<S>::from_vec(P.one()).outer(Tensor<S>::from_vec(K.H->one())));
  r.add("right coaction is unital", same_matrix(r1, oo), "rho(1) != 1 (x) 1");
  SparseCols<S> al(b.alpha.matrix), be(b.beta.matrix);
  auto ba = Space<S>::atom(K.dimA());
  auto aa = Space<S>::atom(H.dimA());
  Mat<S> rb = tabulate(*ba, *b.rtarget, [&](const Tensor<S>& x) { return b.rh(x.apply(0, be), 0); });
  Mat<S> tb = tabulate(*ba, *b.rtarget, [&](const Tensor<S>& x) { return K.tgt(x, 0).insert(0, P.one()); });
  check_equal<S>(r, "rho(beta(b)) = 1 (x) t(b)", rb, tb);
  Mat<S> lb = tabulate(*ba, *b.ltarget, [&](const Tensor<S>& x) { return b.lam(x.apply(0, be), 0); });
  Mat<S> ob = tabulate(*ba, *b.ltarget, [&](const Tensor<S>& x) { return x.apply(0, be).insert(0, H.H->one()); });
  check_equal<S>(r, "lambda(beta(b)) = 1 (x) beta(b)", lb, ob);
  Mat<S> ra = tabulate(*aa, *b.rtarget, [&](const Tensor<S>& x) { return b.rh(x.apply(0, al), 0); });
  Mat<S> oa = tabulate(*aa, *b.rtarget, [&](const Tensor<S>& x) { return x.apply(0, al).insert(1, K.H->one()); });
  check_equal<S>(r, "rho(alpha(a)) = alpha(a) (x) 1", ra, oa);
  if (r.ok()) r.absorb(verify_bicomodule(b.bicomodule()), "bicomodule");
  return r;
}

template <class S> void require_bicomodule_algebra(const BicomoduleAlgebra<S>& b) {
  Report r = verify_bicomodule_algebra(b);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw PreconditionError(b.name + " is not a bicomodule algebra: " + f->name +
                            (f->witness.empty() ? "" : " (" + f->witness + ")"));
  }
}

template <class S>
ProductCoinvariants<S> coinvariants_of_product(const LeftComoduleAlgebra<S>& s, const LeftComoduleAlgebra<S>& r) {
  require_same_hopf(s.h, r.h, "coinvariants of product");
  const auto& h = *s.h;
  Comodule<S> sc = s.comodule(), rc = r.comodule();
  Cotensor<S> c = cotensor(opposite_comodule(sc), rc);
  auto ha = Space<S>::atom(h.dimH());
  auto hsr = Space<S>::chain({ha, Space<S>::atom(sc.dim()), Space<S>::atom(rc.dim())},
                             {Link<S>{via_actions(*h.H, h.t), sc.carrier.act}, Link<S>{sc.carrier.act, rc.carrier.act}});
  Mat<S> d = tabulate(*c.ambient, *hsr, [&](const Tensor<S>& x) {
    return h.mul(rc.coact(sc.coact(x, 0), 2), 0, 2) - x.insert(0, h.H->one());
  });
  ProductCoinvariants<S> out;
  out.coinv = kernel_basis<S>(d);
  out.cotensor = c.incl;
  out.bijective = out.coinv.cols() == out.cotensor.cols() && same_span<S>(out.coinv, out.cotensor);
  if (out.bijective) out.iso = preimage<S>(out.cotensor, out.coinv, "coinvariants of product");
  return out;
}

#define HOPFALG_INSTANTIATE(S)                                                                                     \
  template struct Comodule<S>;                                                                                     \
  template struct LeftComoduleAlgebra<S>;                                                                          \
  template struct BicomoduleAlgebra<S>;                                                                            \
  template SpacePtr<S> left_target<S>(const HopfAlgebroid<S>&, const FinAlgebra<S>&, const Mat<S>&);              \
  template SpacePtr<S> right_target<S>(const HopfAlgebroid<S>&, const FinAlgebra<S>&, const Mat<S>&);             \
  template BicomoduleAlgebra<S> make_bicomodule_algebra<S>(std::string, HopfPtr<S>, HopfPtr<S>, AlgPtr<S>, Mat<S>, Mat<S>, Mat<S>, Mat<S>); \
  template BicomoduleAlgebra<S> make_bicomodule_algebra_plain<S>(std::string, HopfPtr<S>, HopfPtr<S>, AlgPtr<S>, Mat<S>, Mat<S>, const Mat<S>&, const Mat<S>&); \
  template Report verify_bicomodule_algebra<S>(const BicomoduleAlgebra<S>&);                                       \
  template void require_bicomodule_algebra<S>(const BicomoduleAlgebra<S>&);                                        \
  template Frame<S> deep_frame<S>(int, const RealPtr<S>&);                                                         \
  template SparseCols<S> action_table<S>(const std::vector<Mat<S>>&, bool);                                        \
  template SpacePtr<S> coaction_target<S>(const HopfAlgebroid<S>&, Side, const FinModule<S>&);                     \
  template Comodule<S> make_comodule<S>(std::string, HopfPtr<S>, Side, FinModule<S>, Mat<S>);                      \
  template Comodule<S> make_comodule_plain<S>(std::string, HopfPtr<S>, Side, FinModule<S>, const Mat<S>&);         \
  template Report verify_comodule<S>(const Comodule<S>&);                                                          \
  template Comodule<S> identity_comodule<S>(const HopfPtr<S>&, Side);                                              \
  template Comodule<S> regular_comodule<S>(const HopfPtr<S>&, Side);                                               \
  template Mat<S> coinvariants<S>(const Comodule<S>&);                                                             \
  template bool is_comodule_map<S>(const Comodule<S>&, const Comodule<S>&, const Mat<S>&);                         \
  template bool is_module_map<S>(const FinModule<S>&, const FinModule<S>&, const Mat<S>&);                         \
  template Report verify_bicomodule<S>(const Bicomodule<S>&);                                                      \
  template Cotensor<S> cotensor<S>(const Comodule<S>&, const Comodule<S>&);                                        \
  template Comodule<S> cotensor_right<S>(const Comodule<S>&, const Bicomodule<S>&);                                \
  template Comodule<S> cotensor_left<S>(const Bicomodule<S>&, const Comodule<S>&);                                 \
  template Bicomodule<S> cotensor_bi<S>(const Bicomodule<S>&, const Bicomodule<S>&);                               \
  template Report verify_cotensor_associativity<S>(const Comodule<S>&, const Bicomodule<S>&, const Comodule<S>&); \
  template Comodule<S> opposite_comodule<S>(const Comodule<S>&);                                                   \
  template Comodule<S> codiagonal_tensor<S>(const Comodule<S>&, const Comodule<S>&);                               \
  template Mat<S> flip_map<S>(const Comodule<S>&, const Comodule<S>&);                                             \
  template Comodule<S> induction<S>(const HopfMorphism<S>&, const Comodule<S>&);                                   \
  template Bicomodule<S> induction_kernel<S>(const HopfMorphism<S>&);                                              \
  template Comodule<S> coinduction<S>(const HopfMorphism<S>&, const Comodule<S>&);                                 \
  template Mat<S> adjunction_unit<S>(const HopfMorphism<S>&, const Comodule<S>&);                                  \
  template Mat<S> adjunction_counit<S>(const HopfMorphism<S>&, const Comodule<S>&);                                \
  template Report verify_adjunction<S>(const HopfMorphism<S>&, const Comodule<S>&, const Comodule<S>&);            \
  template Report verify_induction_monoidal<S>(const HopfMorphism<S>&, const Comodule<S>&, const Comodule<S>&);    \
  template LeftComoduleAlgebra<S> make_left_comodule_algebra<S>(std::string, HopfPtr<S>, AlgPtr<S>, Mat<S>,        \
                                                                Mat<S>);                                           \
  template LeftComoduleAlgebra<S> make_left_comodule_algebra_plain<S>(std::string, HopfPtr<S>, AlgPtr<S>, Mat<S>,  \
                                                                      const Mat<S>&);                              \
  template Report verify_left_comodule_algebra<S>(const LeftComoduleAlgebra<S>&);                                  \
  template void require_left_comodule_algebra<S>(const LeftComoduleAlgebra<S>&);                                   \
  template LeftComoduleAlgebra<S> base_comodule_algebra<S>(const HopfPtr<S>&);                                     \
  template LeftComoduleAlgebra<S> regular_comodule_algebra<S>(const HopfPtr<S>&);                                  \
  template ProductCoinvariants<S> coinvariants_of_product<S>(const LeftComoduleAlgebra<S>&,                        \
                                                             const LeftComoduleAlgebra<S>&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
