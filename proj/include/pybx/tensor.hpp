#ifndef PYBX_TENSOR_HPP
#define PYBX_TENSOR_HPP

#include "pybx/matrix.hpp"

namespace pybx {

/// Cubical array of structure constants.  For a binary operation the reading
/// is op(e_i, e_j) = sum_k at(i,j,k) e_k; for a cooperation stored in the
/// same shape the first index is the input basis element.
class Tensor3 {
 public:
  Tensor3() : n_(0) {}
  explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return a_[(i * n_ + j) * n_ + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * n_ + j) * n_ + k];
  }

  bool is_zero() const;
  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

 private:
  std::size_t n_;
  std::vector<Scalar> a_;
};

Tensor3 tensor3_add(const Tensor3& x, const Tensor3& y);
Tensor3 tensor3_sub(const Tensor3& x, const Tensor3& y);

/// Element of A (x) A: coeffs(i,j) is the coefficient of e_i (x) e_j.  The
/// matrix holds plain coefficients, not a linear map.
struct TwoTensor {
  Matrix coeffs;

  TwoTensor() = default;
  explicit TwoTensor(std::size_t n) : coeffs(n, n) {}
  explicit TwoTensor(Matrix m) : coeffs(std::move(m)) {}

  std::size_t dim() const { return coeffs.rows(); }
  Scalar& at(std::size_t i, std::size_t j) { return coeffs.at(i, j); }
  const Scalar& at(std::size_t i, std::size_t j) const { return coeffs.at(i, j); }

  /// Flip a (x) b -> b (x) a.
  TwoTensor tau() const { return TwoTensor(coeffs.transpose()); }

  friend bool operator==(const TwoTensor& x, const TwoTensor& y) {
    return x.coeffs == y.coeffs;
  }
};

struct SymSplit {
  TwoTensor sym;   // (t + tau(t)) / 2
  TwoTensor alt;   // (t - tau(t)) / 2
};

/// result_k = sum_{i,j} u_i v_j t(i,j,k); throws DimMismatch.
Vec contract_bilinear(const Tensor3& t, const Vec& u, const Vec& v);

SymSplit split_two_tensor(const TwoTensor& t);

}  // namespace pybx

#endif
