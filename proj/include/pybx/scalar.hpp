#ifndef PYBX_SCALAR_HPP
#define PYBX_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pybx {

/// Error kinds shared across the library.  Every thrown error carries one of
/// these so callers (and the CLI) can react without parsing messages.
enum class Errc {
  SingularMatrix,
  DimMismatch,
  IndexOutOfRange,
  ParseError,
  DuplicateKey,
  InvalidAlgebra,
  InvalidRepresentation,
  InvalidBialgebra,
  NotInvariant,
  NotFactorizable,
  NotRotaBaxter,
  NotQuadraticRB,
  MissingForm,
  MissingInput,
  ZeroWeight,
  VipViolated,
  NotCommutative,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

const char* errc_name(Errc c);

/// Exact rational scalar.  Invariants: always in lowest terms, denominator
/// strictly positive.  Arithmetic is exact; there is no floating point
/// anywhere in the library.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with arbitrary-precision components.
  static Scalar parse(const std::string& text);

  std::string str() const;
  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

inline Scalar inverse(const Scalar& s) { return Scalar(1) / s; }

}  // namespace pybx

#endif
