#include "pybx/linalg.hpp"

#include <utility>

namespace pybx {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

static void require_same_shape(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(Errc::DimMismatch, "matrix shape mismatch");
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  Matrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  Matrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw Error(Errc::DimMismatch, "matrix product shape mismatch");
  Matrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Scalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& x) {
  Matrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = c * x.at(i, j);
  return r;
}

Matrix operator-(const Matrix& x) { return Scalar(-1) * x; }

Vec operator*(const Matrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw Error(Errc::DimMismatch, "matrix/vector shape mismatch");
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec vec_add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw Error(Errc::DimMismatch, "vector shape mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw Error(Errc::DimMismatch, "vector shape mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

bool vec_is_zero(const Vec& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec r(n);
  r[i] = Scalar(1);
  return r;
}

bool Tensor3::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Tensor3 tensor3_add(const Tensor3& x, const Tensor3& y) {
  if (x.dim() != y.dim()) throw Error(Errc::DimMismatch, "tensor shape mismatch");
  Tensor3 r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      for (std::size_t k = 0; k < x.dim(); ++k)
        r.at(i, j, k) = x.at(i, j, k) + y.at(i, j, k);
  return r;
}

Tensor3 tensor3_sub(const Tensor3& x, const Tensor3& y) {
  if (x.dim() != y.dim()) throw Error(Errc::DimMismatch, "tensor shape mismatch");
  Tensor3 r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      for (std::size_t k = 0; k < x.dim(); ++k)
        r.at(i, j, k) = x.at(i, j, k) - y.at(i, j, k);
  return r;
}

Vec contract_bilinear(const Tensor3& t, const Vec& u, const Vec& v) {
  if (t.dim() != u.size() || t.dim() != v.size())
    throw Error(Errc::DimMismatch, "contract_bilinear shape mismatch");
  const std::size_t n = t.dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!t.at(i, j, k).is_zero()) r[k] += uv * t.at(i, j, k);
    }
  }
  return r;
}

SymSplit split_two_tensor(const TwoTensor& t) {
  const std::size_t n = t.dim();
  SymSplit s{TwoTensor(n), TwoTensor(n)};
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.sym.at(i, j) = half * (t.at(i, j) + t.at(j, i));
      s.alt.at(i, j) = half * (t.at(i, j) - t.at(j, i));
    }
  return s;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.
//
// Rational input is integerized row by row (each row scaled by the lcm of its
// denominators), then reduced by the Bareiss single-step scheme
//   a[i][j] <- (a[r][c]*a[i][j] - a[i][c]*a[r][j]) / prev
// where prev is the previous pivot and every division is exact.  Row scaling
// leaves rank and solvability untouched; solves divide the scaling back out.
// ---------------------------------------------------------------------------

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

// Scales row i of m by the lcm of its denominators.  Returns the scaled
// integer matrix; mult[i] holds the multiplier applied to row i.
ZMat integerize_rows(const Matrix& m, std::vector<mpz_class>& mult) {
  ZMat z(m.rows(), std::vector<mpz_class>(m.cols()));
  mult.assign(m.rows(), mpz_class(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    mult[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class q = l / m.at(i, j).den();
      z[i][j] = m.at(i, j).num() * q;
    }
  }
  return z;
}

// In-place Bareiss forward elimination on the first lead columns of z.
// Returns the pivot count; perm records row order for solvers.
std::size_t bareiss_forward(ZMat& z, std::size_t lead) {
  if (z.empty()) return 0;
  const std::size_t rows = z.size(), cols = z[0].size();
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < lead && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(z[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(z[p], z[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

// Solves M X = B for square M via Bareiss forward + rational back
// substitution.  Throws SingularMatrix when rank < n.
Matrix solve_block(const Matrix& m, const Matrix& b) {
  if (m.rows() != m.cols()) throw Error(Errc::DimMismatch, "solve needs a square matrix");
  if (m.rows() != b.rows()) throw Error(Errc::DimMismatch, "solve shape mismatch");
  const std::size_t n = m.rows(), w = b.cols();
  // Augment [M | B] before integerizing so one row multiplier covers both.
  Matrix aug(n, n + w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < w; ++j) aug.at(i, n + j) = b.at(i, j);
  }
  std::vector<mpz_class> mult;
  ZMat z = integerize_rows(aug, mult);
  if (bareiss_forward(z, n) != n) throw Error(Errc::SingularMatrix, "singular matrix");
  Matrix x(n, w);
  for (std::size_t col = 0; col < w; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Scalar acc{mpq_class(z[ii][n + col])};
      for (std::size_t k = ii + 1; k < n; ++k)
        acc -= Scalar(mpq_class(z[ii][k])) * x.at(k, col);
      x.at(ii, col) = acc / Scalar(mpq_class(z[ii][ii]));
    }
  }
  return x;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  std::vector<mpz_class> mult;
  ZMat z = integerize_rows(m, mult);
  return bareiss_forward(z, m.cols());
}

Matrix matrix_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimMismatch, "inverse needs a square matrix");
  return solve_block(m, Matrix::identity(m.rows()));
}

Vec solve(const Matrix& m, const Vec& b) {
  Matrix col(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) col.at(i, 0) = b[i];
  Matrix x = solve_block(m, col);
  Vec r(m.cols());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.at(i, 0);
  return r;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimMismatch, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<mpz_class> mult;
  ZMat z = integerize_rows(m, mult);
  // Track swap parity; a rank-deficient forward pass means det = 0.
  mpz_class prev(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(z[p][c]) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(z[p], z[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_class t = z[c][c] * z[i][j] - z[i][c] * z[c][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[c][c];
  }
  mpz_class denom(1);
  for (const auto& s : mult) denom *= s;
  mpq_class d(z[n - 1][n - 1] * sign, denom);
  d.canonicalize();
  return Scalar(d);
}

}  // namespace pybx
