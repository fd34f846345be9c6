#include "hopfalg/tensor.hpp"

#include <numeric>

namespace hopfalg {

template <class S> Tensor<S>::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {}

template <class S> Tensor<S> Tensor<S>::from_vec(const Vec<S>& v) {
  Tensor t({static_cast<int>(v.size())});
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!hopfalg::is_zero(v(i))) t.data_.emplace(static_cast<long>(i), v(i));
  return t;
}

template <class S> Tensor<S> Tensor<S>::basis(int dim, int k) {
  Tensor t({dim});
  t.data_.emplace(static_cast<long>(k), S(1));
  return t;
}

template <class S> void Tensor<S>::add(long f, const S& v) {
  if (hopfalg::is_zero(v)) return;
  auto [it, fresh] = data_.try_emplace(f, v);
  if (!fresh) {
    it->second += v;
    if (hopfalg::is_zero(it->second)) data_.erase(it);
  }
}

template <class S> long Tensor<S>::flat(const std::vector<int>& idx) const {
  long f = 0;
  for (std::size_t k = 0; k < shape_.size(); ++k) f = f * shape_[k] + idx[k];
  return f;
}

template <class S> std::vector<int> Tensor<S>::index(long f) const {
  std::vector<int> idx(shape_.size());
  for (std::size_t k = shape_.size(); k-- > 0;) {
    idx[k] = static_cast<int>(f % shape_[k]);
    f /= shape_[k];
  }
  return idx;
}

template <class S> void Tensor<S>::prune() {
  for (auto it = data_.begin(); it != data_.end();)
    it = hopfalg::is_zero(it->second) ? data_.erase(it) : std::next(it);
}

template <class S> Tensor<S> Tensor<S>::apply(int k, const SparseCols<S>& m) const {
  require_dims(k >= 0 && k < slots() && m.ncols() == shape_[k], "tensor apply: slot dimension mismatch");
  std::vector<int> sh = shape_;
  sh[k] = m.rows;
  Tensor out(sh);
  for (const auto& [f, v] : data_) {
    auto idx = index(f);
    for (const auto& [r, c] : m.cols[idx[k]]) {
      idx[k] = r;
      auto [it, fresh] = out.data_.try_emplace(out.flat(idx), v * c);
      if (!fresh) it->second += v * c;
    }
  }
  out.prune();
  return out;
}

template <class S>
Tensor<S> Tensor<S>::expand(int k, const SparseCols<S>& m, const std::vector<int>& dims) const {
  long total = 1;
  for (int d : dims) total *= d;
  require_dims(k >= 0 && k < slots() && m.ncols() == shape_[k] && m.rows == total,
               "tensor expand: slot dimension mismatch");
  std::vector<int> sh(shape_.begin(), shape_.begin() + k);
  sh.insert(sh.end(), dims.begin(), dims.end());
  sh.insert(sh.end(), shape_.begin() + k + 1, shape_.end());
  Tensor out(sh);
  const int nd = static_cast<int>(dims.size());
  std::vector<int> nidx(sh.size());
  for (const auto& [f, v] : data_) {
    auto idx = index(f);
    for (int a = 0; a < k; ++a) nidx[a] = idx[a];
    for (int a = k + 1; a < slots(); ++a) nidx[a + nd - 1] = idx[a];
    for (const auto& [r, c] : m.cols[idx[k]]) {
      int rr = r;
      for (int a = nd; a-- > 0;) {
        nidx[k + a] = rr % dims[a];
        rr /= dims[a];
      }
      auto [it, fresh] = out.data_.try_emplace(out.flat(nidx), v * c);
      if (!fresh) it->second += v * c;
    }
  }
  out.prune();
  return out;
}

template <class S> Tensor<S> Tensor<S>::merge(int i, int j, const SparseCols<S>& b) const {
  require_dims(0 <= i && i < j && j < slots() && b.ncols() == shape_[i] * shape_[j],
               "tensor merge: slot dimension mismatch");
  std::vector<int> sh = shape_;
  sh[i] = b.rows;
  sh.erase(sh.begin() + j);
  Tensor out(sh);
  std::vector<int> nidx(sh.size());
  for (const auto& [f, v] : data_) {
    auto idx = index(f);
    const int col = idx[i] * shape_[j] + idx[j];
    for (int a = 0, o = 0; a < slots(); ++a)
      if (a != j) nidx[o++] = idx[a];
    for (const auto& [r, c] : b.cols[col]) {
      nidx[i] = r;
      auto [it, fresh] = out.data_.try_emplace(out.flat(nidx), v * c);
      if (!fresh) it->second += v * c;
    }
  }
  out.prune();
  return out;
}

template <class S> Tensor<S> Tensor<S>::permute(const std::vector<int>& perm) const {
  require_dims(static_cast<int>(perm.size()) == slots(), "tensor permute: wrong permutation length");
  std::vector<int> sh(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) sh[k] = shape_[perm[k]];
  Tensor out(sh);
  std::vector<int> nidx(sh.size());
  for (const auto& [f, v] : data_) {
    auto idx = index(f);
    for (std::size_t k = 0; k < perm.size(); ++k) nidx[k] = idx[perm[k]];
    out.data_.emplace(out.flat(nidx), v);
  }
  return out;
}

template <class S> Tensor<S> Tensor<S>::insert(int k, const Vec<S>& v) const {
  require_dims(k >= 0 && k <= slots(), "tensor insert: bad position");
  std::vector<int> sh = shape_;
  sh.insert(sh.begin() + k, static_cast<int>(v.size()));
  Tensor out(sh);
  std::vector<int> nidx(sh.size());
  for (const auto& [f, x] : data_) {
    auto idx = index(f);
    for (int a = 0; a < k; ++a) nidx[a] = idx[a];
    for (int a = k; a < slots(); ++a) nidx[a + 1] = idx[a];
    for (Eigen::Index r = 0; r < v.size(); ++r) {
      if (hopfalg::is_zero(v(r))) continue;
      nidx[k] = static_cast<int>(r);
      out.data_.emplace(out.flat(nidx), x * v(r));
    }
  }
  return out;
}

template <class S> Tensor<S> Tensor<S>::outer(const Tensor& o) const {
  std::vector<int> sh = shape_;
  sh.insert(sh.end(), o.shape_.begin(), o.shape_.end());
  Tensor out(sh);
  long osize = 1;
  for (int d : o.shape_) osize *= d;
  for (const auto& [f, x] : data_)
    for (const auto& [g, y] : o.data_) out.data_.emplace(f * osize + g, x * y);
  return out;
}

template <class S> Tensor<S>& Tensor<S>::operator+=(const Tensor& o) {
  if (data_.empty() && shape_.empty()) shape_ = o.shape_;
  require_dims(shape_ == o.shape_, "tensor add: shape mismatch");
  for (const auto& [f, v] : o.data_) add(f, v);
  return *this;
}

template <class S> Tensor<S>& Tensor<S>::operator-=(const Tensor& o) {
  if (data_.empty() && shape_.empty()) shape_ = o.shape_;
  require_dims(shape_ == o.shape_, "tensor subtract: shape mismatch");
  for (const auto& [f, v] : o.data_) add(f, -v);
  return *this;
}

template <class S> Tensor<S> Tensor<S>::scaled(const S& c) const {
  Tensor out(shape_);
  if (hopfalg::is_zero(c)) return out;
  for (const auto& [f, v] : data_) out.data_.emplace(f, v * c);
  return out;
}

template <class S> Vec<S> Tensor<S>::vec() const {
  require_dims(slots() == 1, "tensor vec: expected a single slot");
  Vec<S> v = Vec<S>::Zero(shape_[0]);
  for (const auto& [f, x] : data_) v(f) = x;
  return v;
}

template <class S>
BalancedTensor<S> balance(int l, int r, const std::vector<Mat<S>>& ra, const std::vector<Mat<S>>& la) {
  require_dims(ra.size() == la.size(), "balance: action lists differ in length");
  const int n = l * r;
  std::vector<std::vector<std::pair<int, S>>> rows;
  for (std::size_t a = 0; a < ra.size(); ++a) {
    require_dims(ra[a].rows() == l && ra[a].cols() == l && la[a].rows() == r && la[a].cols() == r,
                 "balance: action has wrong size");
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < r; ++j) {
        std::map<int, S> row;
        for (int x = 0; x < l; ++x)
          if (!is_zero(ra[a](x, i))) row[x * r + j] += ra[a](x, i);
        for (int y = 0; y < r; ++y)
          if (!is_zero(la[a](y, j))) row[i * r + y] -= la[a](y, j);
        std::vector<std::pair<int, S>> sparse;
        for (auto& [c, v] : row)
          if (!is_zero(v)) sparse.emplace_back(c, v);
        if (!sparse.empty()) rows.push_back(std::move(sparse));
      }
  }
  Mat<S> rel = Mat<S>::Zero(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const auto& [c, v] : rows[k]) rel(static_cast<Eigen::Index>(k), c) = v;
  Rref<S> e = rref<S>(rel);
  BalancedTensor<S> bt;
  bt.left_dim = l;
  bt.right_dim = r;
  std::vector<int> pivot_row(n, -1);
  for (int k = 0; k < e.rank(); ++k) pivot_row[e.pivots[k]] = k;
  std::vector<int> pos(n, -1);
  for (int c = 0; c < n; ++c)
    if (pivot_row[c] < 0) {
      pos[c] = static_cast<int>(bt.basis.size());
      bt.basis.push_back(c);
    }
  bt.dim = static_cast<int>(bt.basis.size());
  bt.proj = Mat<S>::Zero(bt.dim, n);
  bt.sect = Mat<S>::Zero(n, bt.dim);
  for (int q = 0; q < bt.dim; ++q) {
    bt.proj(q, bt.basis[q]) = S(1);
    bt.sect(bt.basis[q], q) = S(1);
  }
  for (int c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) continue;
    for (int q = 0; q < bt.dim; ++q) {
      const S& v = e.r(pivot_row[c], bt.basis[q]);
      if (!is_zero(v)) bt.proj(q, c) = -v;
    }
  }
  bt.proj_sp = SparseCols<S>(bt.proj);
  bt.sect_sp = SparseCols<S>(bt.sect);
  return bt;
}

template <class S>
BalancedTensor<S> tensor_over(const FinModule<S>& m, const FinModule<S>& n, const FinAlgebra<S>& a) {
  if (m.over->dim() != a.dim() || n.over->dim() != a.dim() || !m.over->same_structure(a) ||
      !n.over->same_structure(a))
    throw std::invalid_argument("tensor_over: modules are not over the given algebra");
  return balance<S>(m.dim, n.dim, m.act, n.act);
}

template <class S> SpacePtr<S> Space<S>::atom(int dim) {
  auto sp = std::shared_ptr<Space>(new Space());
  sp->dim_ = dim;
  sp->leaf_dims_ = {dim};
  return sp;
}

template <class S> SpacePtr<S> Space<S>::chain(std::vector<SpacePtr<S>> factors, std::vector<Link<S>> links) {
  require_dims(!factors.empty() && links.size() + 1 == factors.size(), "chain: need one link between factors");
  if (factors.size() == 1) return factors[0];
  auto sp = std::shared_ptr<Space>(new Space());
  sp->factors_ = std::move(factors);
  for (const auto& f : sp->factors_)
    sp->leaf_dims_.insert(sp->leaf_dims_.end(), f->leaf_dims_.begin(), f->leaf_dims_.end());
  int partial = sp->factors_[0]->dim();
  for (std::size_t i = 1; i < sp->factors_.size(); ++i) {
    std::vector<Mat<S>> right;
    if (i == 1) {
      right = links[0].right;
    } else {
      const BalancedTensor<S>& prev = sp->steps_.back();
      for (const auto& act : links[i - 1].right) {
        require_dims(act.rows() == prev.right_dim && act.cols() == prev.right_dim, "chain: link action has wrong size");
        Mat<S> lifted(prev.dim, prev.dim);
        SparseCols<S> a(act);
        for (int q = 0; q < prev.dim; ++q) {
          Tensor<S> t = Tensor<S>::basis(prev.dim, q).expand(0, prev.sect_sp, {prev.left_dim, prev.right_dim});
          t = t.apply(1, a).merge(0, 1, prev.proj_sp);
          lifted.col(q) = t.vec();
        }
        right.push_back(std::move(lifted));
      }
    }
    sp->steps_.push_back(balance<S>(partial, sp->factors_[i]->dim(), right, links[i - 1].left));
    partial = sp->steps_.back().dim;
  }
  sp->dim_ = partial;
  return sp;
}

template <class S> Tensor<S> Space<S>::lift_factors(const Tensor<S>& t, int k) const {
  if (is_atom()) return t;
  Tensor<S> x = t;
  for (std::size_t i = steps_.size(); i-- > 0;) {
    const auto& st = steps_[i];
    x = x.expand(k, st.sect_sp, {st.left_dim, st.right_dim});
  }
  return x;
}

template <class S> Tensor<S> Space<S>::lift(const Tensor<S>& t, int k) const {
  if (is_atom()) return t;
  Tensor<S> x = lift_factors(t, k);
  // Lift the factors from the last one so earlier slot positions stay valid.
  for (std::size_t i = factors_.size(); i-- > 0;) x = factors_[i]->lift(x, k + static_cast<int>(i));
  return x;
}

template <class S> Tensor<S> Space<S>::project_factors(const Tensor<S>& t, int k) const {
  if (is_atom()) return t;
  Tensor<S> x = t;
  for (const auto& st : steps_) x = x.merge(k, k + 1, st.proj_sp);
  return x;
}

template <class S> Tensor<S> Space<S>::project(const Tensor<S>& t, int k) const {
  if (is_atom()) return t;
  Tensor<S> x = t;
  for (std::size_t i = 0; i < factors_.size(); ++i) x = factors_[i]->project(x, k + static_cast<int>(i));
  return project_factors(x, k);
}

template <class S> Mat<S> Space<S>::factor_action(int i, const Mat<S>& act) const {
  if (is_atom()) return act;
  SparseCols<S> a(act);
  Mat<S> out(dim_, dim_);
  for (int q = 0; q < dim_; ++q) {
    Tensor<S> t = lift_factors(Tensor<S>::basis(dim_, q), 0).apply(i, a);
    out.col(q) = project_factors(t, 0).vec();
  }
  return out;
}

template <class S> Mat<S> left_inverse(const Mat<S>& incl) {
  if (incl.cols() == 0) return Mat<S>::Zero(0, incl.rows());
  Mat<S> tr = incl.transpose();
  Rref<S> e = rref<S>(tr);
  if (e.rank() != incl.cols()) throw std::logic_error("embedding is not injective");
  Mat<S> block(incl.cols(), incl.cols());
  for (int k = 0; k < e.rank(); ++k) block.row(k) = incl.row(e.pivots[k]);
  auto inv = inverse<S>(block);
  Mat<S> out = Mat<S>::Zero(incl.cols(), incl.rows());
  for (int k = 0; k < e.rank(); ++k) out.col(e.pivots[k]) = inv->col(k);
  return out;
}

template <class S> RealPtr<S> atomic_realization(int dim) {
  auto r = std::make_shared<Realization<S>>();
  r->space = Space<S>::atom(dim);
  r->embed = identity<S>(dim);
  r->retract = r->embed;
  r->trivial = true;
  return r;
}

template <class S> RealPtr<S> atomic_realization(const FinAlgebra<S>& a) {
  auto r = std::make_shared<Realization<S>>();
  r->space = Space<S>::atom(a.dim());
  r->embed = identity<S>(a.dim());
  r->retract = r->embed;
  r->leaf_mul = {a.product_sparse()};
  r->leaf_one = {a.one()};
  r->trivial = true;
  return r;
}

template <class S> RealPtr<S> sub_realization(const RealPtr<S>& amb, const Mat<S>& incl) {
  auto r = std::make_shared<Realization<S>>(*amb);
  r->embed = amb->embed * incl;
  r->retract = left_inverse<S>(r->embed);
  r->trivial = false;
  return r;
}

template <class S> Tensor<S> leaf_multiply(const Realization<S>& r, const Tensor<S>& t, int i, int j) {
  const int n = r.space->slots();
  require_dims(static_cast<int>(r.leaf_mul.size()) == n, "leaf multiply: realization has no product");
  require_dims(i + n <= j, "leaf multiply: overlapping groups");
  Tensor<S> x = t;
  for (int l = 0; l < n; ++l) x = x.merge(i + l, j, r.leaf_mul[l]);
  return x;
}

template <class S> Mat<S> realized_mult_by(const Realization<S>& r, const Vec<S>& xs) {
  const Space<S>& sp = *r.space;
  Tensor<S> lx = sp.lift_vec(xs);
  return tabulate(sp, sp, [&](const Tensor<S>& t) { return leaf_multiply(r, t.outer(lx), 0, sp.slots()); });
}

template <class S> Frame<S> frame_of(const SpacePtr<S>& sp) {
  Frame<S> f;
  f.space = sp;
  f.flat = sp;
  f.embed = identity<S>(sp->dim());
  f.retract = f.embed;
  f.trivial = true;
  return f;
}

template <class S> Frame<S> make_frame(const std::vector<Part<S>>& parts, const std::vector<LinkPair<S>>& links) {
  std::vector<SpacePtr<S>> atoms, flats;
  std::vector<Link<S>> la, lf;
  bool trivial = true;
  for (const auto& p : parts) {
    atoms.push_back(Space<S>::atom(p.dim));
    bool t = !p.real || p.real->trivial;
    trivial = trivial && t;
    flats.push_back(t ? atoms.back() : p.real->space);
  }
  for (const auto& l : links) {
    la.push_back(l.atom);
    lf.push_back(l.flat);
  }
  Frame<S> f;
  f.space = Space<S>::chain(atoms, la);
  f.trivial = trivial;
  if (trivial) {
    f.flat = f.space;
    f.embed = identity<S>(f.space->dim());
    f.retract = f.embed;
    return f;
  }
  f.flat = Space<S>::chain(flats, lf);
  f.embed = Mat<S>(f.flat->dim(), f.space->dim());
  for (int j = 0; j < f.space->dim(); ++j) {
    Tensor<S> t = f.space->lift(Tensor<S>::basis(f.space->dim(), j), 0);
    for (std::size_t k = parts.size(); k-- > 0;) {
      const auto& p = parts[k];
      if (!p.real || p.real->trivial) continue;
      t = t.apply(static_cast<int>(k), p.real->embed);
      t = p.real->space->lift(t, static_cast<int>(k));
    }
    f.embed.col(j) = f.flat->project(t, 0).vec();
  }
  f.retract = left_inverse<S>(f.embed);
  return f;
}

#define HOPFALG_INSTANTIATE(S)                                                                          \
  template class Tensor<S>;                                                                             \
  template class Space<S>;                                                                              \
  template BalancedTensor<S> balance<S>(int, int, const std::vector<Mat<S>>&, const std::vector<Mat<S>>&); \
  template BalancedTensor<S> tensor_over<S>(const FinModule<S>&, const FinModule<S>&, const FinAlgebra<S>&); \
  template Mat<S> left_inverse<S>(const Mat<S>&);                                                       \
  template RealPtr<S> atomic_realization<S>(int);                                                       \
  template RealPtr<S> atomic_realization<S>(const FinAlgebra<S>&);                                      \
  template RealPtr<S> sub_realization<S>(const RealPtr<S>&, const Mat<S>&);                             \
  template Tensor<S> leaf_multiply<S>(const Realization<S>&, const Tensor<S>&, int, int);               \
  template Mat<S> realized_mult_by<S>(const Realization<S>&, const Vec<S>&);                            \
  template Frame<S> frame_of<S>(const SpacePtr<S>&);                                                    \
  template Frame<S> make_frame<S>(const std::vector<Part<S>>&, const std::vector<LinkPair<S>>&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
