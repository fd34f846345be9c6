#ifndef HOPFALG_HOPF_HPP
#define HOPFALG_HOPF_HPP

#include "hopfalg/tensor.hpp"

namespace hopfalg {

// Actions of the basis of C on X through an algebra map f: C -> X (dim X x dim C).
template <class S> std::vector<Mat<S>> actions_via(const FinAlgebra<S>& x, const Mat<S>& f) {
  std::vector<Mat<S>> out;
  for (Eigen::Index c = 0; c < f.cols(); ++c) out.push_back(x.mult_by(f.col(c)));
  return out;
}

// Same, on the realization of X.
template <class S> std::vector<Mat<S>> realized_actions_via(const Realization<S>& r, const Mat<S>& f) {
  std::vector<Mat<S>> out;
  for (Eigen::Index c = 0; c < f.cols(); ++c) out.push_back(realized_mult_by(r, Vec<S>(r.embed * f.col(c))));
  return out;
}

template <class S> Link<S> link_via(const FinAlgebra<S>& left, const Mat<S>& f, const FinAlgebra<S>& right, const Mat<S>& g) {
  return Link<S>{actions_via(left, f), actions_via(right, g)};
}

// A commutative Hopf algebroid (A, H). The comultiplication lands in H_t (x)_A _sH.
template <class S> struct HopfAlgebroid {
  std::string name;
  AlgPtr<S> A, H;
  AlgMorphism<S> s, t;
  Mat<S> comult;    // hh->dim() x dim H
  Mat<S> counit;    // dim A x dim H
  Mat<S> antipode;  // dim H x dim H
  std::vector<std::string> labels;

  SpacePtr<S> hh, hhh;
  SparseCols<S> delta_sp, eps_sp, anti_sp, s_sp, t_sp;
  bool s_flat = false, t_flat = false;

  int dimA() const { return A->dim(); }
  int dimH() const { return H->dim(); }
  std::string label(int i) const;
  Link<S> ts_link() const { return link_via(*H, t.matrix, *H, s.matrix); }

  Tensor<S> delta(const Tensor<S>& x, int k) const { return x.expand(k, delta_sp, {dimH(), dimH()}); }
  Tensor<S> eps(const Tensor<S>& x, int k) const { return x.apply(k, eps_sp); }
  Tensor<S> anti(const Tensor<S>& x, int k) const { return x.apply(k, anti_sp); }
  Tensor<S> src(const Tensor<S>& x, int k) const { return x.apply(k, s_sp); }
  Tensor<S> tgt(const Tensor<S>& x, int k) const { return x.apply(k, t_sp); }
  Tensor<S> mul(const Tensor<S>& x, int i, int j) const { return x.merge(i, j, H->product_sparse()); }
  Tensor<S> mulA(const Tensor<S>& x, int i, int j) const { return x.merge(i, j, A->product_sparse()); }
};

template <class S> using HopfPtr = std::shared_ptr<const HopfAlgebroid<S>>;

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// comult is given on the carrier of H_t (x)_A _sH. Throws PreconditionError when
// require_flat is set and s or t is not faithfully flat.
template <class S>
HopfPtr<S> make_hopf(std::string name, AlgPtr<S> A, AlgPtr<S> H, Mat<S> s, Mat<S> t, Mat<S> comult, Mat<S> counit,
                     Mat<S> antipode, std::vector<std::string> labels = {}, bool require_flat = true);

// Same, with the comultiplication given on the plain tensor H (x) H (projected here).
template <class S>
HopfPtr<S> make_hopf_plain(std::string name, AlgPtr<S> A, AlgPtr<S> H, Mat<S> s, Mat<S> t, const Mat<S>& comult_plain,
                           Mat<S> counit, Mat<S> antipode, std::vector<std::string> labels = {},
                           bool require_flat = true);

// Copy with some structure maps replaced; used for negative tests.
template <class S> HopfPtr<S> with_antipode(const HopfAlgebroid<S>& h, const Mat<S>& antipode);
template <class S> HopfPtr<S> with_comult(const HopfAlgebroid<S>& h, const Mat<S>& comult);

template <class S> Report verify_hopf_algebroid(const HopfAlgebroid<S>& h);

template <class S> struct HopfMorphism {
  HopfPtr<S> src, dst;
  AlgMorphism<S> phi0;  // A -> B
  AlgMorphism<S> phi1;  // H -> K
};

template <class S> HopfMorphism<S> make_morphism(HopfPtr<S> src, HopfPtr<S> dst, Mat<S> phi0, Mat<S> phi1);
template <class S> HopfMorphism<S> identity_morphism(const HopfPtr<S>& h);
template <class S> HopfMorphism<S> compose(const HopfMorphism<S>& g, const HopfMorphism<S>& f);
template <class S> Report verify_hopf_morphism(const HopfMorphism<S>& f);

// Index of the first column where the matrices differ, or -1.
template <class S> int first_difference(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (!same_matrix(a.col(j), b.col(j))) return static_cast<int>(j);
  return -1;
}

template <class S> std::string basis_name(int i) { return "e" + std::to_string(i); }

// Adds a check comparing two maps column by column; the witness names the first bad basis element.
template <class S>
void check_equal(Report& r, const std::string& name, const Mat<S>& lhs, const Mat<S>& rhs,
                 const std::vector<std::string>& labels = {}) {
  int k = first_difference(lhs, rhs);
  std::string w;
  if (k >= 0) w = "at " + (k < static_cast<int>(labels.size()) ? labels[k] : basis_name<S>(k));
  r.add(name, k < 0, w);
}

}  // namespace hopfalg

#endif  // HOPFALG_HOPF_HPP
