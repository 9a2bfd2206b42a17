#include "curvelab/rational.hpp"

#include <cctype>

#include "curvelab/error.hpp"

namespace curvelab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ExtensionLimit: return "ExtensionLimit";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::Unresolved: return "Unresolved";
    case ErrorCode::NonReducedModel: return "NonReducedModel";
    case ErrorCode::NonIsolatedCriticalPoint: return "NonIsolatedCriticalPoint";
    case ErrorCode::DuplicateSlope: return "DuplicateSlope";
    case ErrorCode::ParameterClash: return "ParameterClash";
    case ErrorCode::NonReducedResult: return "NonReducedResult";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SingularSurfacePoint: return "SingularSurfacePoint";
    case ErrorCode::NonReducedSection: return "NonReducedSection";
    case ErrorCode::EliminationTooLarge: return "EliminationTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace curvelab
