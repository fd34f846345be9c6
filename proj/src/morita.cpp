#include "hopfalg/morita.hpp"

#include <numeric>

namespace hopfalg {

namespace {

template <class S> RealPtr<S> real_of(const BicomoduleAlgebra<S>& p) { return p.part().real; }
template <class S> int slots_of(const RealPtr<S>& r) { return r->space->slots(); }

template <class S> Tensor<S> lift_group(const RealPtr<S>& r, const Tensor<S>& t, int k) {
  return r->space->lift(t.apply(k, r->embed), k);
}

template <class S> Tensor<S> ones_of(const Realization<S>& r) {
  Tensor<S> one;
  for (std::size_t i = 0; i < r.leaf_one.size(); ++i) {
    Tensor<S> o = Tensor<S>::from_vec(r.leaf_one[i]);
    one = i == 0 ? o : one.outer(o);
  }
  return one;
}

template <class S> Frame<S> own_frame(const BicomoduleAlgebra<S>& p) { return deep_frame<S>(p.dim(), real_of(p)); }

template <class S> std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

template <class S> BicomoduleAlgebra<S> cotensor_algebra(const BicomoduleAlgebra<S>& p, const BicomoduleAlgebra<S>& q) {
  require_same_algebra(p.K->H, q.H->H, "cotensor of bundles");
  Bicomodule<S> bic = cotensor_bi(p.bicomodule(), q.bicomodule());
  const int d = bic.dim();
  RealPtr<S> rp = real_of(p), rq = real_of(q);
  auto r = std::make_shared<Realization<S>>(*bic.left.deep);
  r->leaf_mul = rp->leaf_mul;
  r->leaf_mul.insert(r->leaf_mul.end(), rq->leaf_mul.begin(), rq->leaf_mul.end());
  r->leaf_one = rp->leaf_one;
  r->leaf_one.insert(r->leaf_one.end(), rq->leaf_one.begin(), rq->leaf_one.end());
  r->trivial = false;
  require_dims(static_cast<int>(r->leaf_mul.size()) == r->space->slots(), "cotensor of bundles: leaf mismatch");
  std::vector<Mat<S>> lm;
  for (int i = 0; i < d; ++i) lm.push_back(Mat<S>(r->retract * realized_mult_by(*r, Vec<S>(r->embed.col(i))) * r->embed));
  Vec<S> unit = preimage<S>(r->embed, Mat<S>(r->space->project_vec(ones_of(*r))), "unit of the cotensor").col(0);
  const std::string name = p.name + "[]" + q.name;
  auto alg = share(FinAlgebra<S>(std::move(lm), std::move(unit), name));
  Frame<S> own = deep_frame<S>(d, r);
  Tensor<S> op = ones_of(*rp), oq = ones_of(*rq);
  Mat<S> alpha = tabulate_flat(frame_of(Space<S>::atom(p.H->dimA())), own, [&](const Tensor<S>& x) {
    return lift_group(rp, x.apply(0, p.alpha.matrix), 0).outer(oq);
  });
  Mat<S> beta = tabulate_flat(frame_of(Space<S>::atom(q.K->dimA())), own, [&](const Tensor<S>& x) {
    return op.outer(lift_group(rq, x.apply(0, q.beta.matrix), 0));
  });
  const auto la = actions_via(*alg, alpha), lb = actions_via(*alg, beta);
  for (std::size_t i = 0; i < la.size(); ++i)
    if (!same_matrix(la[i], bic.left.carrier.act[i])) throw std::logic_error("cotensor of bundles: alpha action");
  for (std::size_t i = 0; i < lb.size(); ++i)
    if (!same_matrix(lb[i], bic.right.carrier.act[i])) throw std::logic_error("cotensor of bundles: beta action");
  auto b = make_bicomodule_algebra<S>(name, p.H, q.K, alg, alpha, beta, bic.left.coaction, bic.right.coaction);
  b.deep = r;
  return b;
}

template <class S> BundlePtr<S> compose_bundles(const PrincipalBundle<S>& p, const PrincipalBundle<S>& q) {
  if (!p.left || !q.left) throw PreconditionError("compose: both bundles must be left principal");
  return require_principal(cotensor_algebra(p.p, q.p), Chirality::left);
}

template <class S> BundleMorphism<S> left_unitor(const BundlePtr<S>& p) {
  const auto& H = *p->p.H;
  auto c = compose_bundles(*unit_bundle(p->p.H), *p);
  RealPtr<S> rp = real_of(p->p);
  const int g = slots_of(rp);
  Mat<S> f = tabulate_flat(own_frame(c->p), own_frame(p->p), [&](const Tensor<S>& x) {
    Tensor<S> y = lift_group(rp, H.eps(x, 0).apply(0, p->p.alpha.matrix), 0);
    return leaf_multiply(*rp, y, 0, g);
  });
  return BundleMorphism<S>{c, p, f};
}

template <class S> BundleMorphism<S> right_unitor(const BundlePtr<S>& p) {
  const auto& K = *p->p.K;
  auto c = compose_bundles(*p, *unit_bundle(p->p.K));
  RealPtr<S> rp = real_of(p->p);
  const int g = slots_of(rp);
  Mat<S> f = tabulate_flat(own_frame(c->p), own_frame(p->p), [&](const Tensor<S>& x) {
    Tensor<S> y = lift_group(rp, K.eps(x, g).apply(g, p->p.beta.matrix), g);
    return leaf_multiply(*rp, y, 0, g);
  });
  return BundleMorphism<S>{c, p, f};
}

template <class S> BundleMorphism<S> associator(const BundlePtr<S>& p, const BundlePtr<S>& q, const BundlePtr<S>& r) {
  auto l = compose_bundles(*compose_bundles(*p, *q), *r);
  auto rr = compose_bundles(*p, *compose_bundles(*q, *r));
  Mat<S> f = tabulate_flat(own_frame(l->p), own_frame(rr->p), [](const Tensor<S>& x) { return x; });
  return BundleMorphism<S>{l, rr, f};
}

namespace {

// Affine family F0 + sum t_k K_k of matrices.
template <class S> struct Family {
  Mat<S> base;
  std::vector<Mat<S>> dirs;
};

template <class S> Mat<S> reshape(const Vec<S>& v, Eigen::Index rows, Eigen::Index cols) {
  Mat<S> m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = v(r + c * rows);
  return m;
}

template <class S> Family<S> restrict_family(const Family<S>& fam, const Vec<S>& t0, const Mat<S>& ker) {
  Family<S> out{fam.base, {}};
  for (std::size_t k = 0; k < fam.dirs.size(); ++k) out.base += t0(k) * fam.dirs[k];
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    Mat<S> d = Mat<S>::Zero(fam.base.rows(), fam.base.cols());
    for (std::size_t k = 0; k < fam.dirs.size(); ++k) d += ker(k, j) * fam.dirs[k];
    out.dirs.push_back(d);
  }
  return out;
}

// Algebra maps P -> Q inside an affine family.
template <class S>
std::vector<Mat<S>> multiplicative_members(Family<S> fam, const FinAlgebra<S>& P, const FinAlgebra<S>& Q,
                                           const Field& fld) {
  const int dp = P.dim();
  for (;;) {
    const int m = static_cast<int>(fam.dirs.size());
    const int nq = m * (m + 1) / 2;
    const int cols = nq + m + 1;
    std::vector<Vec<S>> rows;
    for (int i = 0; i < dp; ++i)
      for (int j = i; j < dp; ++j) {
        Vec<S> cij = P.lmul(i).col(j);
        std::vector<Vec<S>> coef(cols, Vec<S>::Zero(Q.dim()));
        Vec<S> ai = fam.base.col(i), aj = fam.base.col(j);
        coef[cols - 1] = Q.mul(ai, aj) - fam.base * cij;
        for (int k = 0; k < m; ++k) {
          const Mat<S>& dk = fam.dirs[k];
          coef[nq + k] = Q.mul(ai, dk.col(j)) + Q.mul(dk.col(i), aj) - dk * cij;
        }
        int idx = 0;
        for (int k = 0; k < m; ++k)
          for (int l = k; l < m; ++l, ++idx) {
            const Mat<S>& dk = fam.dirs[k];
            const Mat<S>& dl = fam.dirs[l];
            coef[idx] = k == l ? Q.mul(dk.col(i), dk.col(j)) : Vec<S>(Q.mul(dk.col(i), dl.col(j)) + Q.mul(dl.col(i), dk.col(j)));
          }
        for (int r = 0; r < Q.dim(); ++r) {
          Vec<S> row(cols);
          for (int c = 0; c < cols; ++c) row(c) = coef[c](r);
          rows.push_back(row);
        }
      }
    Mat<S> e(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) e.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
    if (m == 0) {
      if (!is_zero_matrix(e)) return {};
      return {fam.base};
    }
    Rref<S> red = rref<S>(e);
    std::vector<Vec<S>> lin;
    for (int r = 0; r < red.rank(); ++r) {
      const int pc = red.pivots[r];
      if (pc < nq) continue;
      if (pc == cols - 1) return {};  // 0 = nonzero constant
      lin.push_back(red.r.row(r).transpose());
    }
    if (!lin.empty()) {
      Mat<S> a(static_cast<Eigen::Index>(lin.size()), m);
      Mat<S> b(static_cast<Eigen::Index>(lin.size()), 1);
      for (std::size_t r = 0; r < lin.size(); ++r) {
        a.row(static_cast<Eigen::Index>(r)) = lin[r].segment(nq, m).transpose();
        b(static_cast<Eigen::Index>(r), 0) = -lin[r](cols - 1);
      }
      auto sol = solve<S>(a, b);
      if (!sol.consistent) return {};
      fam = restrict_family(fam, Vec<S>(sol.particular.col(0)), sol.kernel);
      continue;
    }
    if (m > 1 || red.rank() == 0)
      throw PreconditionError("search class unsupported: bundle morphisms form a positive-dimensional family");
    // One parameter, only genuinely quadratic rows: a t^2 + b t + c.
    std::vector<S> poly{red.r(0, 2), red.r(0, 1), red.r(0, 0)};
    std::vector<Mat<S>> out;
    for (const S& t : roots_in_field(poly, fld)) {
      bool ok = true;
      for (int r = 0; r < red.rank() && ok; ++r) ok = is_zero(S(red.r(r, 0) * t * t + red.r(r, 1) * t + red.r(r, 2)));
      if (ok) out.push_back(Mat<S>(fam.base + t * fam.dirs[0]));
    }
    return out;
  }
}

}  // namespace

template <class S>
std::vector<BundleMorphism<S>> solve_bundle_morphisms(const BundlePtr<S>& p, const BundlePtr<S>& q, const Field& fld) {
  const auto& a = p->p;
  const auto& b = q->p;
  require_same_algebra(a.H->H, b.H->H, "bundle morphism search");
  require_same_algebra(a.K->H, b.K->H, "bundle morphism search");
  const Eigen::Index dp = a.dim(), dq = b.dim(), n = dp * dq;
  std::vector<Mat<S>> blocks, rhs;
  // f alpha = alpha', f beta = beta', f(1) = 1.
  auto fixed = [&](const Mat<S>& src, const Mat<S>& dst) {
    Mat<S> c = Mat<S>::Zero(dq * src.cols(), n), r(dq * src.cols(), 1);
    for (Eigen::Index k = 0; k < src.cols(); ++k)
      for (Eigen::Index i = 0; i < dq; ++i) {
        for (Eigen::Index j = 0; j < dp; ++j) c(k * dq + i, i + j * dq) = src(j, k);
        r(k * dq + i, 0) = dst(i, k);
      }
    blocks.push_back(c);
    rhs.push_back(r);
  };
  fixed(a.alpha.matrix, b.alpha.matrix);
  fixed(a.beta.matrix, b.beta.matrix);
  fixed(Mat<S>(a.P->one()), Mat<S>(b.P->one()));
  // Colinearity on both sides is linear in f.
  auto pa = Space<S>::atom(static_cast<int>(dp));
  Mat<S> lc(b.ltarget->dim() * dp, n), rc(b.rtarget->dim() * dp, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Mat<S> e = Mat<S>::Zero(dq, dp);
    e(k % dq, k / dq) = S(1);
    SparseCols<S> es(e);
    Mat<S> l = b.lambda * e - tabulate(*pa, *b.ltarget, [&](const Tensor<S>& x) { return a.lam(x, 0).apply(1, es); });
    Mat<S> r = b.rho * e - tabulate(*pa, *b.rtarget, [&](const Tensor<S>& x) { return a.rh(x, 0).apply(0, es); });
    lc.col(k) = Eigen::Map<const Vec<S>>(l.data(), l.size());
    rc.col(k) = Eigen::Map<const Vec<S>>(r.data(), r.size());
  }
  blocks.push_back(lc);
  rhs.push_back(Mat<S>::Zero(lc.rows(), 1));
  blocks.push_back(rc);
  rhs.push_back(Mat<S>::Zero(rc.rows(), 1));
  auto sol = solve<S>(vstack<S>(blocks, n), vstack<S>(rhs, 1));
  std::vector<BundleMorphism<S>> out;
  if (!sol.consistent) return out;
  Family<S> fam{reshape<S>(Vec<S>(sol.particular.col(0)), dq, dp), {}};
  for (Eigen::Index j = 0; j < sol.kernel.cols(); ++j) fam.dirs.push_back(reshape<S>(Vec<S>(sol.kernel.col(j)), dq, dp));
  for (const auto& f : multiplicative_members(fam, *a.P, *b.P, fld)) {
    BundleMorphism<S> m{p, q, f};
    if (verify_bundle_morphism(m).ok()) out.push_back(m);
  }
  return out;
}

template <class S>
std::optional<BundleMorphism<S>> solve_bundle_iso(const BundlePtr<S>& p, const BundlePtr<S>& q, const Field& fld) {
  if (p->dim() != q->dim()) return std::nullopt;
  for (const auto& m : solve_bundle_morphisms(p, q, fld))
    if (is_bijective(m.f)) return m;
  return std::nullopt;
}

template <class S>
bool triangle_holds(const BundlePtr<S>& p, const BundlePtr<S>& q, const Mat<S>& chi, const Mat<S>& zeta) {
  const auto& P = p->p;
  const auto& Q = q->p;
  auto pq = cotensor_algebra(P, Q);
  auto qp = cotensor_algebra(Q, P);
  if (chi.rows() != pq.dim() || chi.cols() != P.H->dimH() || zeta.rows() != qp.dim() || zeta.cols() != P.K->dimH())
    return false;
  RealPtr<S> rp = real_of(P), rq = real_of(Q);
  const Link<S> l1{realized_actions_via(*rp, P.beta.matrix), realized_actions_via(*rq, Q.alpha.matrix)};
  const Link<S> l2{realized_actions_via(*rq, Q.beta.matrix), realized_actions_via(*rp, P.alpha.matrix)};
  auto triple = Space<S>::chain({rp->space, rq->space, rp->space}, {l1, l2});
  auto pa = Space<S>::atom(P.dim());
  const int gpq = slots_of(pq.deep);
  Mat<S> m1 = tabulate(*pa, *triple, [&](const Tensor<S>& x) {
    Tensor<S> y = lift_group(pq.deep, P.lam(x, 0).apply(0, chi), 0);
    return lift_group(rp, y, gpq);
  });
  Mat<S> m2 = tabulate(*pa, *triple, [&](const Tensor<S>& x) {
    Tensor<S> y = lift_group(qp.deep, P.rh(x, 0).apply(1, zeta), 1);
    return lift_group(rp, y, 0);
  });
  return same_matrix(m1, m2);
}

template <class S> EquivalenceWitness<S> invertibility_witness(const BundlePtr<S>& p) {
  if (!p->left || !p->right) throw PreconditionError("invertibility: " + p->p.name + " is not a bibundle");
  EquivalenceWitness<S> w;
  Report& r = w.report;
  r.suite = "invertibility " + p->p.name;
  w.p = p;
  w.q = opposite_bundle(*p);
  w.pq = compose_bundles(*p, *w.q);
  w.qp = compose_bundles(*w.q, *p);
  RealPtr<S> rp = real_of(p->p);
  const int g = slots_of(rp);
  w.chi = tabulate_flat(frame_of(Space<S>::atom(p->p.H->dimH())), own_frame(w.pq->p), [&](const Tensor<S>& x) {
    return lift_group(rp, lift_group(rp, p->tr(x, 0), 0), g);
  });
  w.zeta = tabulate_flat(frame_of(Space<S>::atom(p->p.K->dimH())), own_frame(w.qp->p), [&](const Tensor<S>& x) {
    return lift_group(rp, lift_group(rp, p->tr_r(x, 0), 0), g);
  });
  BundleMorphism<S> cm{unit_bundle(p->p.H), w.pq, w.chi};
  BundleMorphism<S> zm{unit_bundle(p->p.K), w.qp, w.zeta};
  Report rc = verify_bundle_morphism(cm), rz = verify_bundle_morphism(zm);
  r.absorb(rc, "chi");
  r.absorb(rz, "zeta");
  w.chi_iso = rc.ok() && is_bijective(w.chi);
  w.zeta_iso = rz.ok() && is_bijective(w.zeta);
  r.add("chi: H -> P [] P^co is bijective", is_bijective(w.chi), "rank " + std::to_string(rank<S>(w.chi)));
  r.add("zeta: K -> P^co [] P is bijective", is_bijective(w.zeta), "rank " + std::to_string(rank<S>(w.zeta)));
  w.triangle = triangle_holds(p, w.q, w.chi, w.zeta);
  r.add("p(0) (x) p(1)- (x) p(1)+ = p(-1)+ (x) p(-1)- (x) p(0)", w.triangle);
  return w;
}

template <class S>
Upgrade<S> bibundle_from_invertible(const BundlePtr<S>& p, const BundlePtr<S>& q, const Mat<S>& chi,
                                    const Mat<S>& zeta, const Field& f) {
  Upgrade<S> out;
  Report& r = out.report;
  r.suite = "bibundle from invertible 1-cell " + p->p.name;
  if (!triangle_holds(p, q, chi, zeta)) throw PreconditionError("triangles fail for " + p->p.name);
  r.add("triangle", true);
  auto pq = compose_bundles(*p, *q);
  auto qp = compose_bundles(*q, *p);
  BundleMorphism<S> cm{unit_bundle(p->p.H), pq, chi};
  BundleMorphism<S> zm{unit_bundle(p->p.K), qp, zeta};
  if (!verify_bundle_morphism(cm).ok() || !is_bijective(chi))
    throw PreconditionError("chi is not a bundle isomorphism H -> P [] Q");
  if (!verify_bundle_morphism(zm).ok() || !is_bijective(zeta))
    throw PreconditionError("zeta is not a bundle isomorphism K -> Q [] P");
  r.add("chi is a bundle isomorphism", true);
  r.add("zeta is a bundle isomorphism", true);
  PrincipalCheck<S> both = verify_principal(p->p, Chirality::both);
  r.absorb(both.report, "both sides");
  if (!both.bundle) throw std::logic_error("invertible 1-cell " + p->p.name + " is not right principal");
  out.bibundle = both.bundle;
  auto iso = solve_bundle_iso(q, opposite_bundle(*out.bibundle), f);
  r.add("Q = P^co as bundles", iso.has_value(), "no equivariant algebra isomorphism");
  if (iso) out.iso = *iso;
  return out;
}

template <class S> WeakEquivalence<S> weak_equivalence_test(const HopfMorphism<S>& f) {
  WeakEquivalence<S> out;
  Verdict& v = out.verdict;
  Report& r = v.report;
  r.suite = "weak equivalence " + f.src->name + " -> " + f.dst->name;
  out.factor = canonical_factor(f);
  const Mat<S>& phi = out.factor.factor.phi1.matrix;
  const int db = f.dst->dimA();
  v.phi_rank_k = rank<S>(phi);
  v.phi_domain_rank_k = static_cast<int>(phi.cols());
  v.phi_rank = v.phi_rank_k / db;
  v.phi_domain_rank = v.phi_domain_rank_k / db;
  v.phi_bijective = is_bijective(phi);
  std::string pw;
  if (v.phi_rank_k < v.phi_domain_rank_k)
    pw = "Phi rank " + std::to_string(v.phi_rank) + " < " + std::to_string(v.phi_domain_rank);
  else if (!v.phi_bijective)
    pw = "Phi not surjective: rank " + std::to_string(v.phi_rank) + " < " + std::to_string(phi.rows() / db);
  r.note("Phi bijective", v.phi_bijective ? "yes" : "no (" + pw + ")");
  auto triv = trivial_bundle(f);
  v.alpha_flat = is_faithfully_flat(triv->p.alpha);
  r.note("alpha: A -> H (x)_phi B faithfully flat", yes_no(v.alpha_flat));
  v.bibundle = verify_principal(triv->p, Chirality::right).bundle != nullptr;
  r.note("trivial bundle is a bibundle", yes_no(v.bibundle));
  bool adj = true;
  for (const auto& m : {identity_comodule(f.src), regular_comodule(f.src)}) {
    bool b = is_bijective(adjunction_unit(f, m));
    r.note("induction unit at " + m.name + " bijective", yes_no(b));
    adj = adj && b;
  }
  for (const auto& n : {identity_comodule(f.dst), regular_comodule(f.dst)}) {
    bool b = is_bijective(adjunction_counit(f, n));
    r.note("induction counit at " + n.name + " bijective", yes_no(b));
    adj = adj && b;
  }
  v.adjunction = adj;
  v.weak = v.phi_bijective && v.alpha_flat;
  v.coherent = v.weak == v.bibundle && v.weak == v.adjunction;
  r.note("verdict", v.weak ? "weak_equivalence" : "not_weak_equivalence");
  r.add("criteria agree", v.coherent,
        "Phi/alpha " + yes_no(v.weak) + ", bibundle " + yes_no(v.bibundle) + ", adjunction " + yes_no(v.adjunction));
  if (v.weak) {
    out.lambda = *inverse<S>(phi);
    r.add("Phi o Lambda = id", same_matrix(Mat<S>(phi * out.lambda), identity<S>(phi.rows())));
  }
  return out;
}

template <class S> TranslationLegs<S> translation_weak_equivalences(const PrincipalBundle<S>& p) {
  TranslationLegs<S> out;
  out.total = two_sided_translation(p.p);
  if (p.left) out.beta = weak_equivalence_test(out.total.beta).verdict;
  if (p.right) out.alpha = weak_equivalence_test(out.total.alpha).verdict;
  return out;
}

template <class S> HopfMorphism<S> translation_iso(const BundleMorphism<S>& m) {
  auto t1 = two_sided_translation(m.src->p);
  auto t2 = two_sided_translation(m.dst->p);
  SparseCols<S> fs(m.f);
  Mat<S> phi1 = tabulate(*t1.space, *t2.space, [&](const Tensor<S>& x) { return x.apply(1, fs); });
  return make_morphism<S>(t1.total, t2.total, m.f, phi1);
}

template <class S> Report verify_two_cell(const TwoCell<S>& c) {
  Report r("2-cell");
  const auto& H = *c.src.src;
  const auto& K = *c.src.dst;
  r.add("parallel morphisms",
        c.src.src->H->same_structure(*c.dst.src->H) && c.src.dst->H->same_structure(*c.dst.dst->H),
        "source or target algebroids differ");
  r.add("shape", c.c.rows() == K.dimA() && c.c.cols() == H.dimH(), "c must map H to B");
  if (!r.ok()) return r;
  r.absorb(verify_alg_morphism(AlgMorphism<S>{H.H, K.A, c.c}), "c");
  check_equal<S>(r, "c s = source phi0", Mat<S>(c.c * H.s.matrix), c.src.phi0.matrix);
  check_equal<S>(r, "c t = target phi0", Mat<S>(c.c * H.t.matrix), c.dst.phi0.matrix);
  auto ha = Space<S>::atom(H.dimH());
  auto ka = Space<S>::atom(K.dimH());
  SparseCols<S> cs(c.c), z1(c.src.phi1.matrix), t1(c.dst.phi1.matrix);
  Mat<S> lhs = tabulate(*ha, *ka, [&](const Tensor<S>& x) {
    return K.mul(K.src(H.delta(x, 0).apply(0, cs), 0).apply(1, t1), 0, 1);
  });
  Mat<S> rhs = tabulate(*ha, *ka, [&](const Tensor<S>& x) {
    return K.mul(K.tgt(H.delta(x, 0).apply(1, cs), 1).apply(0, z1), 0, 1);
  });
  check_equal<S>(r, "s(c(u1)) target(u2) = source(u1) t(c(u2))", lhs, rhs, H.labels);
  return r;
}

template <class S> TwoCell<S> vertical_compose(const TwoCell<S>& c, const TwoCell<S>& cp) {
  if (!same_matrix(c.dst.phi1.matrix, cp.src.phi1.matrix) || !same_matrix(c.dst.phi0.matrix, cp.src.phi0.matrix))
    throw PreconditionError("vertical composition: 2-cells are not composable");
  const auto& H = *c.src.src;
  const auto& K = *c.src.dst;
  SparseCols<S> a(c.c), b(cp.c);
  Mat<S> m = tabulate(*Space<S>::atom(H.dimH()), *Space<S>::atom(K.dimA()), [&](const Tensor<S>& x) {
    return K.mulA(H.delta(x, 0).apply(0, a).apply(1, b), 0, 1);
  });
  return TwoCell<S>{c.src, cp.dst, m};
}

template <class S> TwoCell<S> identity_two_cell(const HopfMorphism<S>& f) {
  return TwoCell<S>{f, f, Mat<S>(f.phi0.matrix * f.src->counit)};
}

template <class S> BundleMorphism<S> two_cell_bundle_map(const TwoCell<S>& c) {
  auto tphi = trivial_bundle(c.src);
  auto tpsi = trivial_bundle(c.dst);
  const auto& H = *c.src.src;
  const auto& B = *c.src.dst->A;
  SparseCols<S> cs(c.c);
  Mat<S> f = tabulate(*tpsi->p.chain, *tphi->p.chain, [&](const Tensor<S>& x) {
    return H.delta(x, 0).apply(1, cs).merge(1, 2, B.product_sparse());
  });
  return BundleMorphism<S>{tpsi, tphi, f};
}

template <class S>
Report verify_trivial_functoriality(const HopfMorphism<S>& f, const HopfMorphism<S>& g, const Field& fld) {
  Report r("TRIV(g f) against TRIV(f) [] TRIV(g)");
  auto whole = trivial_bundle(compose(g, f));
  auto parts = compose_bundles(*trivial_bundle(f), *trivial_bundle(g));
  r.add("dimensions agree", whole->dim() == parts->dim(),
        std::to_string(whole->dim()) + " vs " + std::to_string(parts->dim()));
  auto iso = solve_bundle_iso(parts, whole, fld);
  r.add("bundle isomorphism found", iso.has_value(), "no equivariant algebra isomorphism");
  return r;
}

template <class S> std::pair<TwoCell<S>, TwoCell<S>> translation_two_cells(const HopfMorphism<S>& phi) {
  auto p = trivial_bundle(phi);
  auto ts = two_sided_translation(p->p);
  const auto& H = *phi.src;
  const auto& B = *phi.dst->A;
  HopfMorphism<S> a = ts.alpha;
  HopfMorphism<S> bphi = compose(ts.beta, phi);
  Mat<S> c = tabulate(*Space<S>::atom(H.dimH()), *p->p.chain, [&](const Tensor<S>& x) { return x.insert(1, B.one()); });
  return {TwoCell<S>{a, bphi, c}, TwoCell<S>{bphi, a, Mat<S>(c * H.antipode)}};
}

template <class S> Zigzag<S> zigzag_complete(const HopfMorphism<S>& t1, const HopfMorphism<S>& t2) {
  require_same_algebra(t1.src->H, t2.src->H, "zig-zag");
  auto w1 = weak_equivalence_test(t1), w2 = weak_equivalence_test(t2);
  if (!w1.verdict.weak || !w2.verdict.weak) throw PreconditionError("zig-zag: inputs not weak equivalences");
  Zigzag<S> z;
  Report& r = z.report;
  r.suite = "zig-zag completion";
  auto p1 = require_principal(trivial_bundle(t1)->p, Chirality::both);
  auto p2 = trivial_bundle(t2);
  z.apex_bundle = compose_bundles(*opposite_bundle(*p1), *p2);
  z.apex = two_sided_translation(z.apex_bundle->p);
  z.zeta1 = z.apex.alpha;
  z.zeta2 = z.apex.beta;
  r.note("apex", z.apex.total->name + ", dim " + std::to_string(z.apex.total->dimH()));
  r.absorb(verify_hopf_algebroid(*z.apex.total), "apex");
  z.zeta1_test = weak_equivalence_test(z.zeta1);
  z.zeta2_test = weak_equivalence_test(z.zeta2);
  r.add("zeta1 is a weak equivalence", z.zeta1_test.verdict.weak);
  r.add("zeta2 is a weak equivalence", z.zeta2_test.verdict.weak);

  // u |-> (S(u(1)) (x) 1) (x) (u(2) (x) 1) in P1^co [] P2.
  const auto& H = *t1.src;
  const auto& P1 = p1->p;
  const auto& P2 = p2->p;
  Mat<S> c = tabulate_flat(frame_of(Space<S>::atom(H.dimH())), own_frame(z.apex_bundle->p), [&](const Tensor<S>& x) {
    Tensor<S> y = H.anti(H.delta(x, 0), 0).insert(1, t1.dst->A->one());
    y = P1.chain->project(y, 0).insert(2, t2.dst->A->one());
    return P2.chain->project(y, 1);
  });
  HopfMorphism<S> top = compose(z.zeta1, t1), bottom = compose(z.zeta2, t2);
  z.cell = TwoCell<S>{top, bottom, c};
  z.cell_inverse = TwoCell<S>{bottom, top, Mat<S>(c * H.antipode)};
  r.absorb(verify_two_cell(z.cell), "cell");
  r.absorb(verify_two_cell(z.cell_inverse), "inverse cell");
  check_equal<S>(r, "cell then inverse = identity", vertical_compose(z.cell, z.cell_inverse).c,
                 identity_two_cell(top).c);
  check_equal<S>(r, "inverse then cell = identity", vertical_compose(z.cell_inverse, z.cell).c,
                 identity_two_cell(bottom).c);
  return z;
}

namespace {

template <class S> Mat<S> comparison_map(const Comodule<S>& m, const Comodule<S>& n, const BicomoduleAlgebra<S>& p,
                                         Comodule<S>* dom_out, Comodule<S>* cod_out) {
  auto pb = p.bicomodule();
  Comodule<S> v = cotensor_right(m, pb), w = cotensor_right(n, pb);
  Comodule<S> dom = codiagonal_tensor(v, w);
  Comodule<S> cod = cotensor_right(codiagonal_tensor(m, n), pb);
  RealPtr<S> rp = real_of(p);
  const int gp = slots_of(rp), gm = m.leaves(), gn = n.leaves();
  std::vector<int> perm;
  for (int i = 0; i < gm; ++i) perm.push_back(i);
  for (int i = 0; i < gn; ++i) perm.push_back(gm + gp + i);
  for (int i = 0; i < gp; ++i) perm.push_back(gm + i);
  for (int i = 0; i < gp; ++i) perm.push_back(gm + gp + gn + i);
  Mat<S> map = tabulate_flat(deep_frame(dom), deep_frame(cod), [&](const Tensor<S>& x) {
    return leaf_multiply(*rp, x.permute(perm), gm + gn, gm + gn + gp);
  });
  if (dom_out) *dom_out = dom;
  if (cod_out) *cod_out = cod;
  return map;
}

}  // namespace

template <class S>
MonoidalComparison<S> monoidal_comparison(const Comodule<S>& m, const Comodule<S>& n, const BicomoduleAlgebra<S>& p) {
  MonoidalComparison<S> out;
  out.map = comparison_map(m, n, p, &out.dom, &out.cod);
  out.bijective = is_bijective(out.map);
  out.colinear = is_comodule_map(out.dom, out.cod, out.map);
  Comodule<S> cod_nm;
  Mat<S> swapped = comparison_map<S>(n, m, p, nullptr, &cod_nm);
  auto pb = p.bicomodule();
  Mat<S> flip_vw = flip_map(cotensor_right(m, pb), cotensor_right(n, pb));
  const int gm = m.leaves(), gn = n.leaves(), gp = slots_of(real_of(p));
  std::vector<int> perm;
  for (int i = 0; i < gn; ++i) perm.push_back(gm + i);
  for (int i = 0; i < gm; ++i) perm.push_back(i);
  for (int i = 0; i < gp; ++i) perm.push_back(gm + gn + i);
  Mat<S> flip_mn = tabulate_flat(deep_frame(out.cod), deep_frame(cod_nm), [&](const Tensor<S>& x) { return x.permute(perm); });
  out.symmetric = same_matrix(Mat<S>(swapped * flip_vw), Mat<S>(flip_mn * out.map));
  return out;
}

template <class S> Report morita_witness(const BundlePtr<S>& p, std::vector<Comodule<S>> probes) {
  Report r("Morita witness " + p->p.name);
  r.add("bibundle", p->left && p->right, "not principal on both sides");
  if (!r.ok()) return r;
  const auto& P = p->p;
  if (probes.empty()) probes = {identity_comodule(P.H), regular_comodule(P.H)};
  std::vector<std::string> names;
  for (const auto& m : probes) names.push_back(m.name);
  r.note("probes", join<S>(names));
  for (const auto& m : probes) {
    auto e = eta_map(m, *p);
    r.add("eta at " + m.name + " is bijective", e.bijective, "rank " + std::to_string(e.rank) + " of " + std::to_string(m.dim()));
    r.add("eta at " + m.name + " is colinear", e.colinear);
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i; j < probes.size(); ++j) {
      auto mc = monoidal_comparison(probes[i], probes[j], P);
      const std::string tag = "delta at (" + probes[i].name + ", " + probes[j].name + ")";
      r.add(tag + " is bijective", mc.bijective, "rank " + std::to_string(rank<S>(mc.map)));
      r.add(tag + " is colinear", mc.colinear);
      r.add(tag + " is symmetric", mc.symmetric);
    }
  // A []_H P inside P against beta(B).
  Comodule<S> unit = cotensor_right(identity_comodule(P.H), P.bicomodule());
  RealPtr<S> rp = real_of(P);
  const int g = slots_of(rp);
  Mat<S> incl = tabulate_flat(deep_frame(unit), own_frame(P), [&](const Tensor<S>& x) {
    return leaf_multiply(*rp, lift_group(rp, x.apply(0, P.alpha.matrix), 0), 0, g);
  });
  const bool unit_ok = unit.dim() == P.K->dimA() && is_injective(incl) && same_span<S>(incl, P.beta.matrix);
  r.add("A [] P = B as algebras", unit_ok,
        "dim " + std::to_string(unit.dim()) + " against dim B " + std::to_string(P.K->dimA()));
  auto q = opposite_bundle(*p);
  for (const auto& n : {identity_comodule(P.K), regular_comodule(P.K)}) {
    auto e = eta_map(n, *q);
    r.add("inverse eta at " + n.name + " is bijective", e.bijective, "rank " + std::to_string(e.rank));
  }
  auto legs = translation_weak_equivalences(*p);
  r.add("both translation legs are weak equivalences", legs.alpha && legs.beta && legs.alpha->weak && legs.beta->weak);
  return r;
}

template <class S> Reconstruction<S> reconstruct_bundle(const BicomoduleAlgebra<S>& q, const Field& f) {
  PrincipalCheck<S> qc = verify_principal(q, Chirality::both);
  if (!qc.bundle) {
    const Check* c = qc.report.first_failure();
    throw PreconditionError("equivalence hypothesis unverifiable for " + q.name + (c ? ": " + c->name : ""));
  }
  Reconstruction<S> out;
  Report& r = out.report;
  r.suite = "reconstruction from " + q.name;
  auto fh = cotensor_algebra(unit_bundle(q.H)->p, q);
  fh.name = "F(" + q.H->name + ")";
  PrincipalCheck<S> pc = verify_principal(fh, Chirality::left);
  r.absorb(pc.report, "F(H)");
  out.bundle = pc.bundle;
  if (!out.bundle) return out;
  out.iso = solve_bundle_iso(out.bundle, qc.bundle, f);
  r.add("F(H) = Q as bundles", out.iso.has_value(), "no equivariant algebra isomorphism");
  return out;
}

#define HOPFALG_INSTANTIATE(S)                                                                                      \
  template BicomoduleAlgebra<S> cotensor_algebra<S>(const BicomoduleAlgebra<S>&, const BicomoduleAlgebra<S>&);      \
  template BundlePtr<S> compose_bundles<S>(const PrincipalBundle<S>&, const PrincipalBundle<S>&);                   \
  template BundleMorphism<S> left_unitor<S>(const BundlePtr<S>&);                                                   \
  template BundleMorphism<S> right_unitor<S>(const BundlePtr<S>&);                                                  \
  template BundleMorphism<S> associator<S>(const BundlePtr<S>&, const BundlePtr<S>&, const BundlePtr<S>&);          \
  template std::vector<BundleMorphism<S>> solve_bundle_morphisms<S>(const BundlePtr<S>&, const BundlePtr<S>&,       \
                                                                    const Field&);                                  \
  template std::optional<BundleMorphism<S>> solve_bundle_iso<S>(const BundlePtr<S>&, const BundlePtr<S>&,           \
                                                                const Field&);                                      \
  template bool triangle_holds<S>(const BundlePtr<S>&, const BundlePtr<S>&, const Mat<S>&, const Mat<S>&);          \
  template EquivalenceWitness<S> invertibility_witness<S>(const BundlePtr<S>&);                                     \
  template Upgrade<S> bibundle_from_invertible<S>(const BundlePtr<S>&, const BundlePtr<S>&, const Mat<S>&,          \
                                                  const Mat<S>&, const Field&);                                     \
  template WeakEquivalence<S> weak_equivalence_test<S>(const HopfMorphism<S>&);                                     \
  template TranslationLegs<S> translation_weak_equivalences<S>(const PrincipalBundle<S>&);                          \
  template HopfMorphism<S> translation_iso<S>(const BundleMorphism<S>&);                                            \
  template Report verify_two_cell<S>(const TwoCell<S>&);                                                            \
  template TwoCell<S> vertical_compose<S>(const TwoCell<S>&, const TwoCell<S>&);                                    \
  template TwoCell<S> identity_two_cell<S>(const HopfMorphism<S>&);                                                 \
  template BundleMorphism<S> two_cell_bundle_map<S>(const TwoCell<S>&);                                             \
  template Report verify_trivial_functoriality<S>(const HopfMorphism<S>&, const HopfMorphism<S>&, const Field&);    \
  template std::pair<TwoCell<S>, TwoCell<S>> translation_two_cells<S>(const HopfMorphism<S>&);                      \
  template Zigzag<S> zigzag_complete<S>(const HopfMorphism<S>&, const HopfMorphism<S>&);                            \
  template MonoidalComparison<S> monoidal_comparison<S>(const Comodule<S>&, const Comodule<S>&,                     \
                                                        const BicomoduleAlgebra<S>&);                               \
  template Report morita_witness<S>(const BundlePtr<S>&, std::vector<Comodule<S>>);                                 \
  template Reconstruction<S> reconstruct_bundle<S>(const BicomoduleAlgebra<S>&, const Field&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
