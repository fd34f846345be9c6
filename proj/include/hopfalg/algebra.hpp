#ifndef HOPFALG_ALGEBRA_HPP
#define HOPFALG_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfalg/linalg.hpp"
#include "hopfalg/report.hpp"

namespace hopfalg {

// Column-sparse copy of a matrix, used by the tensor kernels.
template <class S> struct SparseCols {
  int rows = 0;
  std::vector<std::vector<std::pair<int, S>>> cols;

  SparseCols() = default;
  explicit SparseCols(const Mat<S>& m);
  int ncols() const { return static_cast<int>(cols.size()); }
};

// Finite-dimensional commutative unital algebra given by structure constants:
// e_i e_j = sum_k c(i, j, k) e_k.
template <class S> class FinAlgebra {
 public:
  FinAlgebra(std::vector<Mat<S>> left_mult, Vec<S> unit, std::string name = "");

  static FinAlgebra from_constants(int dim, const std::vector<std::tuple<int, int, int, S>>& c,
                                   Vec<S> unit, std::string name = "");
  // k^n with pointwise product on the standard idempotents.
  static FinAlgebra diagonal(int n, std::string name = "");
  // k[x]/(x^2 - c), basis (1, x).
  static FinAlgebra quadratic(const S& c, std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Mat<S>& lmul(int i) const { return lmul_[i]; }
  const std::vector<Mat<S>>& lmuls() const { return lmul_; }
  S c(int i, int j, int k) const { return lmul_[i](k, j); }
  const Vec<S>& one() const { return unit_; }
  // dim x dim^2 matrix of the product; column i*dim+j is e_i e_j.
  const Mat<S>& product() const { return product_; }
  const SparseCols<S>& product_sparse() const { return product_sp_; }

  Mat<S> mult_by(const Vec<S>& x) const;
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const;
  Vec<S> basis(int i) const { return unit_vector<S>(dim_, i); }

  bool same_structure(const FinAlgebra& o) const;

 private:
  int dim_;
  std::vector<Mat<S>> lmul_;
  Vec<S> unit_;
  Mat<S> product_;
  SparseCols<S> product_sp_;
  std::string name_;
};

template <class S> using AlgPtr = std::shared_ptr<const FinAlgebra<S>>;

template <class S> AlgPtr<S> share(FinAlgebra<S> a) {
  return std::make_shared<const FinAlgebra<S>>(std::move(a));
}

template <class S> Report verify_algebra(const FinAlgebra<S>& a);

// Algebra map src -> dst, stored as a dim(dst) x dim(src) matrix.
template <class S> struct AlgMorphism {
  AlgPtr<S> src, dst;
  Mat<S> matrix;

  Vec<S> operator()(const Vec<S>& x) const { return matrix * x; }
  static AlgMorphism identity(const AlgPtr<S>& a);
};

template <class S> Report verify_alg_morphism(const AlgMorphism<S>& f);
template <class S> AlgMorphism<S> compose(const AlgMorphism<S>& g, const AlgMorphism<S>& f);

// Throws unless the two algebras are the same object or structurally equal.
template <class S> void require_same_algebra(const AlgPtr<S>& a, const AlgPtr<S>& b, const std::string& what);

// Module over a commutative algebra: act[i] is the action of the basis element e_i.
template <class S> struct FinModule {
  AlgPtr<S> over;
  int dim = 0;
  std::vector<Mat<S>> act;

  Mat<S> action(const Vec<S>& a) const;
  static FinModule regular(const AlgPtr<S>& a);
  // dst regarded as a src-module through f.
  static FinModule via(const AlgMorphism<S>& f);
  // A-action on a dst-module pulled back along f: A -> dst algebra.
  static FinModule restrict(const FinModule& m, const AlgMorphism<S>& f);
};

template <class S> Report verify_module(const FinModule<S>& m);

template <class S> struct ProjectivityResult {
  bool projective = false;
  Mat<S> generators;  // columns generate the module
  Mat<S> cover;       // free cover A^r -> M, dim x (dim A * r)
  Mat<S> section;     // A-linear right inverse of the cover when projective
};

template <class S> ProjectivityResult<S> is_projective(const FinModule<S>& m);
template <class S> Mat<S> annihilator(const FinModule<S>& m);
template <class S> bool is_faithfully_flat_module(const FinModule<S>& m);
template <class S> bool is_faithfully_flat(const AlgMorphism<S>& beta);

template <class S> bool is_injective(const Mat<S>& m) { return rank<S>(m) == m.cols(); }
template <class S> bool is_bijective(const Mat<S>& m) { return m.rows() == m.cols() && rank<S>(m) == m.cols(); }

}  // namespace hopfalg

#endif  // HOPFALG_ALGEBRA_HPP
