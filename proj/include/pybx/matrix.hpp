#ifndef PYBX_MATRIX_HPP
#define PYBX_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "pybx/scalar.hpp"

namespace pybx {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over the rationals.  Linear maps are stored in the
/// standard convention: column j holds the image of the j-th basis vector,
/// so (M v)_i = sum_j M(i,j) v_j.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Scalar& c, const Matrix& x);
Matrix operator-(const Matrix& x);
Vec operator*(const Matrix& m, const Vec& v);

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& c, const Vec& x);
bool vec_is_zero(const Vec& x);
Vec basis_vec(std::size_t n, std::size_t i);

}  // namespace pybx

#endif
