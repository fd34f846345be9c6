#ifndef HOPFALG_LINALG_HPP
#define HOPFALG_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hopfalg/scalar.hpp"

namespace hopfalg {

template <class S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

template <class S> bool is_zero(const S& x) { return x == S(0); }

template <class Derived> bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == S(0))) return false;
  return true;
}

template <class A, class B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S> Mat<S> identity(Eigen::Index n) {
  Mat<S> m = Mat<S>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S> Vec<S> unit_vector(Eigen::Index n, Eigen::Index k) {
  Vec<S> v = Vec<S>::Zero(n);
  v(k) = S(1);
  return v;
}

// Reduced row echelon form. The pivot in each column is the earliest nonzero
// entry at or below the current row, so the result depends only on the input.
template <class S> struct Rref {
  Mat<S> r;
  Mat<S> rhs;  // the same row operations applied to an optional right-hand side
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class S> Rref<S> rref(Mat<S> m, Mat<S> rhs = Mat<S>()) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const bool with_rhs = rhs.size() > 0 || rhs.rows() == rows;
  if (with_rhs) require_dims(rhs.rows() == rows, "rref: right-hand side row mismatch");
  Rref<S> out;
  Eigen::Index r = 0;
  std::vector<Eigen::Index> nz;
  std::vector<Eigen::Index> nz_rhs;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) {
      m.row(piv).swap(m.row(r));
      if (with_rhs) rhs.row(piv).swap(rhs.row(r));
    }
    S inv = S(1) / m(r, c);
    nz.clear();
    for (Eigen::Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) { m(r, j) *= inv; nz.push_back(j); }
    nz_rhs.clear();
    if (with_rhs)
      for (Eigen::Index j = 0; j < rhs.cols(); ++j)
        if (!is_zero(rhs(r, j))) { rhs(r, j) *= inv; nz_rhs.push_back(j); }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j : nz) m(i, j) -= f * m(r, j);
      for (Eigen::Index j : nz_rhs) rhs(i, j) -= f * rhs(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.r = std::move(m);
  out.rhs = std::move(rhs);
  return out;
}

template <class S> int rank(const Mat<S>& m) { return rref<S>(m).rank(); }

template <class S> Mat<S> kernel_from_rref(const Rref<S>& e, Eigen::Index cols) {
  std::vector<bool> is_piv(cols, false);
  for (int c : e.pivots) is_piv[c] = true;
  Mat<S> k = Mat<S>::Zero(cols, cols - e.rank());
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    k(f, col) = S(1);
    for (int row = 0; row < e.rank(); ++row)
      if (!is_zero(e.r(row, f))) k(e.pivots[row], col) = -e.r(row, f);
    ++col;
  }
  return k;
}

// Columns form a basis of {x : m x = 0}.
template <class S> Mat<S> kernel_basis(const Mat<S>& m) {
  return kernel_from_rref(rref<S>(m), m.cols());
}

template <class S> struct SolutionSet {
  bool consistent = false;
  Mat<S> particular;  // cols(a) x cols(b)
  Mat<S> kernel;      // basis of the homogeneous solutions
};

// All solutions of a x = b (b may have several columns, solved simultaneously).
template <class S> SolutionSet<S> solve(const Mat<S>& a, const Mat<S>& b) {
  require_dims(a.rows() == b.rows(), "solve: row mismatch");
  Rref<S> e = rref<S>(a, b);
  SolutionSet<S> out;
  for (Eigen::Index i = e.rank(); i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (!is_zero(e.rhs(i, j))) return out;
  out.consistent = true;
  out.particular = Mat<S>::Zero(a.cols(), b.cols());
  for (int row = 0; row < e.rank(); ++row) out.particular.row(e.pivots[row]) = e.rhs.row(row);
  out.kernel = kernel_from_rref(e, a.cols());
  return out;
}

template <class S> std::optional<Mat<S>> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto sol = solve<S>(m, identity<S>(m.rows()));
  if (!sol.consistent || sol.kernel.cols() != 0) return std::nullopt;
  return sol.particular;
}

// Basis of the column space, taken from the pivot columns of m itself.
template <class S> Mat<S> column_basis(const Mat<S>& m) {
  Rref<S> e = rref<S>(m);
  Mat<S> out(m.rows(), e.rank());
  for (int k = 0; k < e.rank(); ++k) out.col(k) = m.col(e.pivots[k]);
  return out;
}

template <class S> bool columns_in_span(const Mat<S>& basis, const Mat<S>& vs) {
  if (vs.cols() == 0) return true;
  if (basis.cols() == 0) return is_zero_matrix(vs);
  return solve<S>(basis, vs).consistent;
}

template <class S> bool same_span(const Mat<S>& u, const Mat<S>& v) {
  return columns_in_span<S>(u, v) && columns_in_span<S>(v, u);
}

// Unique x with incl x = y, for injective incl; throws if y is outside the image.
template <class S> Mat<S> preimage(const Mat<S>& incl, const Mat<S>& y, const std::string& what) {
  auto sol = solve<S>(incl, y);
  if (!sol.consistent) throw std::logic_error(what + ": vector outside the subspace");
  if (sol.kernel.cols() != 0) throw std::logic_error(what + ": inclusion is not injective");
  return sol.particular;
}

template <class S> Mat<S> hstack(const std::vector<Mat<S>>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat<S> out(rows, cols);
  Eigen::Index c = 0;
  for (const auto& b : blocks) {
    require_dims(b.rows() == rows, "hstack: row mismatch");
    out.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return out;
}

template <class S> Mat<S> vstack(const std::vector<Mat<S>>& blocks, Eigen::Index cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Mat<S> out(rows, cols);
  Eigen::Index r = 0;
  for (const auto& b : blocks) {
    require_dims(b.cols() == cols, "vstack: column mismatch");
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

}  // namespace hopfalg

#endif  // HOPFALG_LINALG_HPP
