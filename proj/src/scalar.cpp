#include "pybx/scalar.hpp"

namespace pybx {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::InvalidAlgebra: return "InvalidAlgebra";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::InvalidBialgebra: return "InvalidBialgebra";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotFactorizable: return "NotFactorizable";
    case Errc::NotRotaBaxter: return "NotRotaBaxter";
    case Errc::NotQuadraticRB: return "NotQuadraticRB";
    case Errc::MissingForm: return "MissingForm";
    case Errc::MissingInput: return "MissingInput";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::VipViolated: return "VipViolated";
    case Errc::NotCommutative: return "NotCommutative";
  }
  return "Unknown";
}

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) throw Error(Errc::ParseError, "rational with zero denominator");
  v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(Errc::SingularMatrix, "division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty rational literal");
  // mpq_set_str accepts "p/q" but tolerates whitespace and leading '+' forms
  // we do not want; validate the shape first.
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '-') {
      if (i != 0 && (slash == std::string::npos || i != slash + 1))
        throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
    } else if (ch == '/') {
      if (slash != std::string::npos || i == 0 || i + 1 == text.size())
        throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
      slash = i;
    } else if (ch < '0' || ch > '9') {
      throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
    }
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
  if (sgn(q.get_den()) == 0)
    throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace pybx
