#include "curvelab/parse.hpp"

#include <algorithm>
#include <cctype>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : src_(normalize(text)), vars_(vars) {}

  MPoly parse() {
    skip_space();
    if (at_end()) throw SyntaxError(offset(), "expression");
    MPoly p = expression();
    skip_space();
    if (!at_end()) throw SyntaxError(offset(), "operator or end of input");
    if (!unknown_.empty()) fail(ErrorCode::UnknownVariable, unknown_);
    return p;
  }

 private:
  // Source with U+2212 replaced by '-'; offsets map back to the original bytes.
  struct Normalized {
    std::string text;
    std::vector<std::size_t> origin;
  };

  static Normalized normalize(std::string_view in) {
    Normalized n;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in.compare(i, 3, "\xE2\x88\x92") == 0) {
        n.text.push_back('-');
        n.origin.push_back(i);
        i += 2;
        continue;
      }
      n.text.push_back(in[i]);
      n.origin.push_back(i);
    }
    n.origin.push_back(in.size());
    return n;
  }

  std::size_t offset() const { return src_.origin[pos_]; }
  bool at_end() const { return pos_ >= src_.text.size(); }
  char peek() const { return at_end() ? '\0' : src_.text[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  MPoly expression() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = offset();
        MPoly d = unary();
        if (!d.is_constant()) throw SyntaxError(at, "constant divisor");
        if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
        acc = acc * d.coeff(Exponent(vars_.size(), 0)).inverse();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (accept('^')) {
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(offset(), "non-negative integer exponent");
      const std::size_t at = offset();
      std::string digits = read_digits();
      if (digits.size() > 4) throw SyntaxError(at, "exponent below 10000");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(src_.text[pos_++]);
    return d;
  }

  MPoly primary() {
    skip_space();
    if (at_end()) throw SyntaxError(offset(), "number, variable or '('");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      if (!accept(')')) throw SyntaxError(offset(), "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MPoly::constant(vars_, FieldElement(Rational(Integer(read_digits(), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = offset();
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name.push_back(src_.text[pos_++]);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        if (unknown_.empty()) unknown_ = "unknown variable '" + name + "' at position " + std::to_string(at);
        return MPoly(vars_);
      }
      return MPoly::variable(vars_, static_cast<int>(it - vars_.begin()));
    }
    throw SyntaxError(offset(), "number, variable or '('");
  }

  Normalized src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
  std::string unknown_;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    std::string_view piece = text.substr(start, colon == std::string_view::npos ? text.npos : colon - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    out.push_back(Rational::parse(piece));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (out.size() < 2) fail(ErrorCode::InvalidArgument, "point '" + std::string(text) + "' needs colon-separated coordinates");
  return out;
}

}  // namespace curvelab
