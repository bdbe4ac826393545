#include "stopgame/rational.hpp"

#include <stdexcept>

namespace stopgame {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  const Integer q(den);
  if (q <= 0) {
    throw std::invalid_argument("denominator must be positive: '" + text + "'");
  }
  return Rational(Integer(num), q);
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExtRational ExtRational::infinity() {
  ExtRational e;
  e.finite_.reset();
  return e;
}

const Rational& ExtRational::finite() const {
  if (!finite_.has_value()) {
    throw std::logic_error("attempt to read +infinity as a finite rational");
  }
  return *finite_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.finite_ == *b.finite_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (b.is_infinite()) return !a.is_infinite();
  if (a.is_infinite()) return false;
  return *a.finite_ < *b.finite_;
}

std::string to_string(const ExtRational& value) {
  if (value.is_infinite()) return "inf";
  return to_string(value.finite());
}

}  // namespace stopgame
