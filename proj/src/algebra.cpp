#include "hopfalg/algebra.hpp"

#include <sstream>

namespace hopfalg {

template <class S> SparseCols<S>::SparseCols(const Mat<S>& m) : rows(static_cast<int>(m.rows())) {
  cols.resize(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) cols[j].emplace_back(static_cast<int>(i), m(i, j));
}

template <class S>
FinAlgebra<S>::FinAlgebra(std::vector<Mat<S>> left_mult, Vec<S> unit, std::string name)
    : dim_(static_cast<int>(left_mult.size())), lmul_(std::move(left_mult)), unit_(std::move(unit)),
      name_(std::move(name)) {
  require_dims(unit_.size() == dim_, "algebra: unit has wrong length");
  product_ = Mat<S>::Zero(dim_, dim_ * dim_);
  for (int i = 0; i < dim_; ++i) {
    require_dims(lmul_[i].rows() == dim_ && lmul_[i].cols() == dim_, "algebra: bad multiplication block");
    for (int j = 0; j < dim_; ++j) product_.col(i * dim_ + j) = lmul_[i].col(j);
  }
  product_sp_ = SparseCols<S>(product_);
}

template <class S>
FinAlgebra<S> FinAlgebra<S>::from_constants(int dim, const std::vector<std::tuple<int, int, int, S>>& c,
                                            Vec<S> unit, std::string name) {
  std::vector<Mat<S>> l(dim, Mat<S>::Zero(dim, dim));
  for (const auto& [i, j, k, v] : c) {
    require_dims(i >= 0 && i < dim && j >= 0 && j < dim && k >= 0 && k < dim,
                 "structure constant index out of range");
    l[i](k, j) += v;
  }
  return FinAlgebra(std::move(l), std::move(unit), std::move(name));
}

template <class S> FinAlgebra<S> FinAlgebra<S>::diagonal(int n, std::string name) {
  std::vector<Mat<S>> l(n, Mat<S>::Zero(n, n));
  Vec<S> u(n);
  for (int i = 0; i < n; ++i) {
    l[i](i, i) = S(1);
    u(i) = S(1);
  }
  return FinAlgebra(std::move(l), std::move(u), std::move(name));
}

template <class S> FinAlgebra<S> FinAlgebra<S>::quadratic(const S& c, std::string name) {
  std::vector<Mat<S>> l(2, Mat<S>::Zero(2, 2));
  l[0](0, 0) = S(1);
  l[0](1, 1) = S(1);
  l[1](1, 0) = S(1);
  l[1](0, 1) = c;
  Vec<S> u = Vec<S>::Zero(2);
  u(0) = S(1);
  return FinAlgebra(std::move(l), std::move(u), std::move(name));
}

template <class S> Mat<S> FinAlgebra<S>::mult_by(const Vec<S>& x) const {
  Mat<S> m = Mat<S>::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (!is_zero(x(i))) m += x(i) * lmul_[i];
  return m;
}

template <class S> Vec<S> FinAlgebra<S>::mul(const Vec<S>& x, const Vec<S>& y) const {
  return mult_by(x) * y;
}

template <class S> bool FinAlgebra<S>::same_structure(const FinAlgebra& o) const {
  if (dim_ != o.dim_ || !same_matrix(unit_, o.unit_)) return false;
  return same_matrix(product_, o.product_);
}

template <class S> Report verify_algebra(const FinAlgebra<S>& a) {
  Report r("algebra");
  const int n = a.dim();
  std::string wc, wa, wu;
  for (int i = 0; i < n && wc.empty(); ++i)
    for (int j = i + 1; j < n && wc.empty(); ++j)
      if (!same_matrix(a.lmul(i).col(j), a.lmul(j).col(i)))
        wc = "e" + std::to_string(i) + "*e" + std::to_string(j);
  for (int i = 0; i < n && wa.empty(); ++i)
    for (int j = 0; j < n && wa.empty(); ++j) {
      Vec<S> eij = a.lmul(i).col(j);
      Mat<S> lhs = a.mult_by(eij);               // (e_i e_j) e_k for all k
      Mat<S> rhs = a.lmul(i) * a.lmul(j);        // e_i (e_j e_k)
      if (!same_matrix(lhs, rhs)) {
        for (int k = 0; k < n; ++k)
          if (!same_matrix(lhs.col(k), rhs.col(k))) {
            wa = "(e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(k) + ")";
            break;
          }
      }
    }
  Mat<S> u = a.mult_by(a.one());
  for (int i = 0; i < n && wu.empty(); ++i)
    if (!same_matrix(u.col(i), a.basis(i))) wu = "e" + std::to_string(i);
  r.add("commutativity", wc.empty(), wc);
  r.add("associativity", wa.empty(), wa);
  r.add("unit", wu.empty(), wu);
  return r;
}

template <class S> AlgMorphism<S> AlgMorphism<S>::identity(const AlgPtr<S>& a) {
  return AlgMorphism{a, a, hopfalg::identity<S>(a->dim())};
}

template <class S> Report verify_alg_morphism(const AlgMorphism<S>& f) {
  Report r("algebra morphism");
  const auto& A = *f.src;
  const auto& B = *f.dst;
  bool shape = f.matrix.rows() == B.dim() && f.matrix.cols() == A.dim();
  r.add("shape", shape, "matrix is " + std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()));
  if (!shape) return r;
  std::string wm;
  for (int i = 0; i < A.dim() && wm.empty(); ++i)
    for (int j = i; j < A.dim() && wm.empty(); ++j) {
      Vec<S> lhs = f.matrix * A.lmul(i).col(j);
      Vec<S> rhs = B.mul(f.matrix.col(i), f.matrix.col(j));
      if (!same_matrix(lhs, rhs)) wm = "e" + std::to_string(i) + "*e" + std::to_string(j);
    }
  r.add("multiplicative", wm.empty(), wm);
  r.add("unital", same_matrix(Vec<S>(f.matrix * A.one()), B.one()), "f(1) != 1");
  return r;
}

template <class S> AlgMorphism<S> compose(const AlgMorphism<S>& g, const AlgMorphism<S>& f) {
  require_same_algebra<S>(f.dst, g.src, "compose");
  return AlgMorphism<S>{f.src, g.dst, g.matrix * f.matrix};
}

template <class S> void require_same_algebra(const AlgPtr<S>& a, const AlgPtr<S>& b, const std::string& what) {
  if (a == b) return;
  if (a && b && a->same_structure(*b)) return;
  throw std::invalid_argument(what + ": algebra mismatch (" + (a ? a->name() : "?") + " vs " +
                              (b ? b->name() : "?") + ")");
}

template <class S> Mat<S> FinModule<S>::action(const Vec<S>& a) const {
  Mat<S> m = Mat<S>::Zero(dim, dim);
  for (int i = 0; i < static_cast<int>(act.size()); ++i)
    if (!is_zero(a(i))) m += a(i) * act[i];
  return m;
}

template <class S> FinModule<S> FinModule<S>::regular(const AlgPtr<S>& a) {
  return FinModule{a, a->dim(), a->lmuls()};
}

template <class S> FinModule<S> FinModule<S>::via(const AlgMorphism<S>& f) {
  FinModule m{f.src, f.dst->dim(), {}};
  for (int i = 0; i < f.src->dim(); ++i) m.act.push_back(f.dst->mult_by(f.matrix.col(i)));
  return m;
}

template <class S> FinModule<S> FinModule<S>::restrict(const FinModule& m, const AlgMorphism<S>& f) {
  require_same_algebra<S>(m.over, f.dst, "restrict module");
  FinModule out{f.src, m.dim, {}};
  for (int i = 0; i < f.src->dim(); ++i) out.act.push_back(m.action(f.matrix.col(i)));
  return out;
}

template <class S> Report verify_module(const FinModule<S>& m) {
  Report r("module");
  const auto& A = *m.over;
  r.add("unital", same_matrix(m.action(A.one()), identity<S>(m.dim)), "1 does not act as identity");
  std::string w;
  for (int i = 0; i < A.dim() && w.empty(); ++i)
    for (int j = 0; j < A.dim() && w.empty(); ++j)
      if (!same_matrix(Mat<S>(m.act[i] * m.act[j]), m.action(A.lmul(i).col(j))))
        w = "e" + std::to_string(i) + ",e" + std::to_string(j);
  r.add("associative action", w.empty(), w);
  return r;
}

namespace {

// Stack the vectors act_i * v for all i into the columns of a matrix.
template <class S> Mat<S> orbit_span(const FinModule<S>& m, const Vec<S>& v) {
  Mat<S> out(m.dim, m.act.size());
  for (std::size_t i = 0; i < m.act.size(); ++i) out.col(i) = m.act[i] * v;
  return out;
}

}  // namespace

template <class S> ProjectivityResult<S> is_projective(const FinModule<S>& m) {
  ProjectivityResult<S> out;
  const int a = m.over->dim(), d = m.dim;
  // Greedy generating set: add basis vectors not yet in the A-span.
  std::vector<Vec<S>> gens;
  Mat<S> span(d, 0);
  for (int j = 0; j < d && rank<S>(span) < d; ++j) {
    Vec<S> e = unit_vector<S>(d, j);
    if (span.cols() > 0 && columns_in_span<S>(span, e)) continue;
    gens.push_back(e);
    Mat<S> add = orbit_span(m, e);
    Mat<S> grown(d, span.cols() + add.cols());
    grown << span, add;
    span = column_basis<S>(grown);
  }
  const int r = static_cast<int>(gens.size());
  out.generators = Mat<S>(d, r);
  for (int l = 0; l < r; ++l) out.generators.col(l) = gens[l];
  out.cover = Mat<S>(d, a * r);
  for (int l = 0; l < r; ++l)
    for (int i = 0; i < a; ++i) out.cover.col(l * a + i) = m.act[i] * gens[l];
  if (d == 0) {
    out.projective = true;
    out.section = Mat<S>(0, 0);
    return out;
  }
  // Hom_A(M, A): h (a x d) with h * act_M(e_i) = lmul_A(e_i) * h.
  const auto& A = *m.over;
  Mat<S> eq = Mat<S>::Zero(a * a * d, a * d);
  for (int i = 0; i < a; ++i)
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < d; ++y) {
        int row = (i * a + x) * d + y;
        for (int z = 0; z < d; ++z)
          if (!is_zero(m.act[i](z, y))) eq(row, x * d + z) += m.act[i](z, y);
        for (int z = 0; z < a; ++z)
          if (!is_zero(A.lmul(i)(x, z))) eq(row, z * d + y) -= A.lmul(i)(x, z);
      }
  Mat<S> hom = kernel_basis<S>(eq);
  const int q = static_cast<int>(hom.cols());
  auto hom_mat = [&](int l) {
    Mat<S> h(a, d);
    for (int x = 0; x < a; ++x)
      for (int z = 0; z < d; ++z) h(x, z) = hom(x * d + z, l);
    return h;
  };
  std::vector<Mat<S>> hs;
  for (int l = 0; l < q; ++l) hs.push_back(hom_mat(l));
  // Section sigma = (sum_m x_{l,m} h_m)_l with sum_l sigma_l(v) . g_l = v.
  Mat<S> sys = Mat<S>::Zero(d * d, r * q);
  for (int l = 0; l < r; ++l)
    for (int mm = 0; mm < q; ++mm) {
      Mat<S> img = hs[mm];  // a x d: h_m(e_v) as columns
      for (int v = 0; v < d; ++v) {
        Vec<S> w = m.action(img.col(v)) * gens[l];
        sys.block(v * d, l * q + mm, d, 1) = w;
      }
    }
  Mat<S> rhs(d * d, 1);
  Mat<S> I = identity<S>(d);
  for (int v = 0; v < d; ++v) rhs.block(v * d, 0, d, 1) = I.col(v);
  auto sol = solve<S>(sys, rhs);
  if (!sol.consistent) return out;
  out.projective = true;
  out.section = Mat<S>::Zero(a * r, d);
  for (int l = 0; l < r; ++l)
    for (int mm = 0; mm < q; ++mm) {
      S x = sol.particular(l * q + mm, 0);
      if (!is_zero(x)) out.section.block(l * a, 0, a, d) += x * hs[mm];
    }
  return out;
}

template <class S> Mat<S> annihilator(const FinModule<S>& m) {
  const int a = m.over->dim(), d = m.dim;
  Mat<S> flat(d * d, a);
  for (int i = 0; i < a; ++i)
    for (int c = 0; c < d; ++c) flat.block(c * d, i, d, 1) = m.act[i].col(c);
  return kernel_basis<S>(flat);
}

template <class S> bool is_faithfully_flat_module(const FinModule<S>& m) {
  return annihilator(m).cols() == 0 && is_projective(m).projective;
}

template <class S> bool is_faithfully_flat(const AlgMorphism<S>& beta) {
  return is_faithfully_flat_module(FinModule<S>::via(beta));
}

#define HOPFALG_INSTANTIATE(S)                                                                   \
  template struct SparseCols<S>;                                                                 \
  template class FinAlgebra<S>;                                                                  \
  template struct AlgMorphism<S>;                                                                \
  template struct FinModule<S>;                                                                  \
  template Report verify_algebra<S>(const FinAlgebra<S>&);                                       \
  template Report verify_alg_morphism<S>(const AlgMorphism<S>&);                                 \
  template AlgMorphism<S> compose<S>(const AlgMorphism<S>&, const AlgMorphism<S>&);              \
  template void require_same_algebra<S>(const AlgPtr<S>&, const AlgPtr<S>&, const std::string&); \
  template Report verify_module<S>(const FinModule<S>&);                                         \
  template ProjectivityResult<S> is_projective<S>(const FinModule<S>&);                          \
  template Mat<S> annihilator<S>(const FinModule<S>&);                                           \
  template bool is_faithfully_flat_module<S>(const FinModule<S>&);                               \
  template bool is_faithfully_flat<S>(const AlgMorphism<S>&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
