#include "dring/parser.hpp"

#include <cctype>

#include "dring/error.hpp"

namespace dring {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& src)
      : ring_(ring), src_(src) {}

  RationalFunction run() {
    RationalFunction v = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  RingPtr ring_;
  const std::string& src_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  RationalFunction expr() {
    bool neg = eat('-');
    RationalFunction v = term();
    if (neg) v = RationalFunction(ring_) - v;
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (peek() == '/') {
        size_t at = pos_;
        ++pos_;
        RationalFunction d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction v = base();
    if (eat('^')) {
      size_t at = pos_;
      skip_ws();
      if (pos_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected a natural number exponent", at);
      long n = natural();
      v = v.pow(n);
    }
    return v;
  }

  RationalFunction base() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      size_t at = pos_;
      ++pos_;
      RationalFunction v = expr();
      if (!eat(')')) throw ParseError("missing closing parenthesis", at);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  long natural() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    std::string digits = src_.substr(start, pos_ - start);
    if (digits.size() > 9)
      throw ParseError("exponent is too large", start);
    return std::stol(digits);
  }

  RationalFunction number() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    Rational q(src_.substr(start, pos_ - start));
    return RationalFunction::of(
        MultiPoly::constant(ring_, FieldElement::from_rational(ring_->field, q)));
  }

  RationalFunction name() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      ++pos_;
    std::string id = src_.substr(start, pos_ - start);
    int idx = ring_->var_index(id);
    if (idx >= 0) return RationalFunction::variable(ring_, idx);
    if (ring_->field->kind() == Field::Kind::NumberField &&
        id == ring_->field->generator_name())
      return RationalFunction::of(
          MultiPoly::constant(ring_, FieldElement::generator(ring_->field)));
    throw ParseError("unknown symbol '" + id + "'", start);
  }
};

}  // namespace

RationalFunction parse_expression(const RingPtr& ring, const std::string& src) {
  return Parser(ring, src).run();
}

MultiPoly parse_polynomial(const RingPtr& ring, const std::string& src) {
  RationalFunction v = parse_expression(ring, src);
  if (!v.is_polynomial())
    throw InputError("expected a polynomial, got a proper rational function: " +
                     src);
  return v.as_polynomial();
}

}  // namespace dring
