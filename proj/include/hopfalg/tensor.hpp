#ifndef HOPFALG_TENSOR_HPP
#define HOPFALG_TENSOR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfalg/algebra.hpp"

namespace hopfalg {

// Sparse element of a plain tensor product V_0 (x) ... (x) V_{n-1}, keyed by the
// row-major flat index.
template <class S> class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  static Tensor from_vec(const Vec<S>& v);
  static Tensor basis(int dim, int k);

  const std::vector<int>& shape() const { return shape_; }
  int slots() const { return static_cast<int>(shape_.size()); }
  const std::map<long, S>& entries() const { return data_; }
  bool is_zero() const { return data_.empty(); }

  void add(long flat, const S& v);
  void add(const std::vector<int>& idx, const S& v) { add(flat(idx), v); }
  long flat(const std::vector<int>& idx) const;
  std::vector<int> index(long flat) const;

  // Slot k -> m * slot k.
  Tensor apply(int k, const SparseCols<S>& m) const;
  Tensor apply(int k, const Mat<S>& m) const { return apply(k, SparseCols<S>(m)); }
  // Slot k -> several slots of the given dims, m has prod(dims) rows.
  Tensor expand(int k, const SparseCols<S>& m, const std::vector<int>& dims) const;
  // Slots i < j -> one slot at i holding b(x_i * dim_j + x_j).
  Tensor merge(int i, int j, const SparseCols<S>& b) const;
  // New slot k is old slot perm[k].
  Tensor permute(const std::vector<int>& perm) const;
  // New slot at position k holding the fixed vector v.
  Tensor insert(int k, const Vec<S>& v) const;
  Tensor outer(const Tensor& o) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor scaled(const S& c) const;
  Vec<S> vec() const;  // single slot only

 private:
  void prune();
  std::vector<int> shape_;
  std::map<long, S> data_;
};

template <class S> Tensor<S> operator+(Tensor<S> a, const Tensor<S>& b) { return a += b; }
template <class S> Tensor<S> operator-(Tensor<S> a, const Tensor<S>& b) { return a -= b; }

// (M (x) N) / span{ma (x) n - m (x) an}. proj keeps the non-pivot plain
// coordinates of the reduced relation matrix; sect is the coordinate inclusion.
template <class S> struct BalancedTensor {
  int left_dim = 0, right_dim = 0, dim = 0;
  Mat<S> proj;  // dim x (left_dim * right_dim)
  Mat<S> sect;  // (left_dim * right_dim) x dim
  SparseCols<S> proj_sp, sect_sp;
  std::vector<int> basis;  // plain index i * right_dim + j of each carrier coordinate
};

// right_on_left[c] is the action of the c-th balancing element on M, left_on_right[c] on N.
template <class S>
BalancedTensor<S> balance(int left_dim, int right_dim, const std::vector<Mat<S>>& right_on_left,
                          const std::vector<Mat<S>>& left_on_right);

template <class S>
BalancedTensor<S> tensor_over(const FinModule<S>& m, const FinModule<S>& n, const FinAlgebra<S>& a);

template <class S> struct Link {
  std::vector<Mat<S>> right;  // on the carrier of the factor before the link
  std::vector<Mat<S>> left;   // on the carrier of the factor after it
};

template <class S> class Space;
template <class S> using SpacePtr = std::shared_ptr<const Space<S>>;

// Left-nested iterated balanced tensor product; an atom is a single factor.
template <class S> class Space {
 public:
  static SpacePtr<S> atom(int dim);
  static SpacePtr<S> chain(std::vector<SpacePtr<S>> factors, std::vector<Link<S>> links);

  int dim() const { return dim_; }
  int slots() const { return static_cast<int>(leaf_dims_.size()); }
  const std::vector<int>& leaf_dims() const { return leaf_dims_; }
  bool is_atom() const { return factors_.empty(); }
  const std::vector<SpacePtr<S>>& factors() const { return factors_; }
  const BalancedTensor<S>& step(int i) const { return steps_[i - 1]; }

  // Slot k (carrier coordinates) -> the factor carriers, or all the way down to leaves.
  Tensor<S> lift_factors(const Tensor<S>& t, int k) const;
  Tensor<S> lift(const Tensor<S>& t, int k) const;
  Tensor<S> project_factors(const Tensor<S>& t, int k) const;
  Tensor<S> project(const Tensor<S>& t, int k) const;

  Vec<S> project_vec(const Tensor<S>& leaves) const { return project(leaves, 0).vec(); }
  Tensor<S> lift_vec(const Vec<S>& v) const { return lift(Tensor<S>::from_vec(v), 0); }

  // Action on factor i transported to the carrier.
  Mat<S> factor_action(int i, const Mat<S>& act) const;

 private:
  Space() = default;
  int dim_ = 0;
  std::vector<int> leaf_dims_;
  std::vector<SpacePtr<S>> factors_;
  std::vector<BalancedTensor<S>> steps_;
};

// Matrix of the linear map dom -> cod whose value on a carrier basis vector is obtained
// by lifting to leaves, applying f, and projecting.
template <class S, class F> Mat<S> tabulate(const Space<S>& dom, const Space<S>& cod, F&& f) {
  Mat<S> out = Mat<S>::Zero(cod.dim(), dom.dim());
  for (int j = 0; j < dom.dim(); ++j) {
    Tensor<S> x = dom.lift(Tensor<S>::basis(dom.dim(), j), 0);
    Tensor<S> y = f(x);
    require_dims(y.slots() == cod.slots(), "tabulate: formula produced the wrong number of slots");
    out.col(j) = cod.project(y, 0).vec();
  }
  return out;
}

// Realization of an object as a subspace of a space built from simpler objects. Base
// objects realize themselves as an atom.
template <class S> struct Realization {
  SpacePtr<S> space;
  Mat<S> embed;    // space->dim() x object dim, injective
  Mat<S> retract;  // retract * embed = I
  std::vector<SparseCols<S>> leaf_mul;  // leafwise products when the object is an algebra
  std::vector<Vec<S>> leaf_one;
  bool trivial = true;
};

template <class S> using RealPtr = std::shared_ptr<const Realization<S>>;

template <class S> RealPtr<S> atomic_realization(const FinAlgebra<S>& a);
template <class S> RealPtr<S> atomic_realization(int dim);
// Subspace realization: incl has the subspace basis as columns.
template <class S> RealPtr<S> sub_realization(const RealPtr<S>& ambient, const Mat<S>& incl);
template <class S> Mat<S> left_inverse(const Mat<S>& incl);

struct LandingError : std::logic_error {
  using std::logic_error::logic_error;
};

// Leaves-level multiplication in an algebra realization: groups of r.space->slots() leaves
// starting at i and j (i < j) multiply into the group at i.
template <class S> Tensor<S> leaf_multiply(const Realization<S>& r, const Tensor<S>& t, int i, int j);
// Carrier-level multiplication-by-x in a realization, x given in realization coordinates.
template <class S> Mat<S> realized_mult_by(const Realization<S>& r, const Vec<S>& x_space);

// An algebra or module carrier taking part in a chain, with its realization.
template <class S> struct Part {
  int dim = 0;
  RealPtr<S> real;  // may be null for a base atom
};

// A link described on both levels: on the objects and on their realizations.
template <class S> struct LinkPair {
  Link<S> atom, flat;
};

// A balanced tensor of objects together with its realization over the parts' realizations.
template <class S> struct Frame {
  SpacePtr<S> space;  // chain of atoms of the part dims
  SpacePtr<S> flat;   // chain of the parts' realization spaces
  Mat<S> embed, retract;
  bool trivial = true;

  int dim() const { return space->dim(); }
};

template <class S> Frame<S> make_frame(const std::vector<Part<S>>& parts, const std::vector<LinkPair<S>>& links);
template <class S> Frame<S> frame_of(const SpacePtr<S>& sp);

// Like tabulate, but f works on the leaves of the realizations; the result is pulled back
// through the codomain embedding and must land in it.
template <class S, class F> Mat<S> tabulate_flat(const Frame<S>& dom, const Frame<S>& cod, F&& f) {
  Mat<S> out = Mat<S>::Zero(cod.dim(), dom.dim());
  for (int j = 0; j < dom.dim(); ++j) {
    Tensor<S> x = dom.flat->lift(Tensor<S>::from_vec(dom.embed.col(j)), 0);
    Tensor<S> y = f(x);
    require_dims(y.slots() == cod.flat->slots(), "tabulate: formula produced the wrong number of slots");
    Vec<S> v = cod.flat->project(y, 0).vec();
    Vec<S> c = cod.retract * v;
    if (!same_matrix(Vec<S>(cod.embed * c), v))
      throw LandingError("value of basis vector " + std::to_string(j) + " lies outside the target subspace");
    out.col(j) = c;
  }
  return out;
}

}  // namespace hopfalg

#endif  // HOPFALG_TENSOR_HPP
