#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace stopgame {

using Integer = boost::multiprecision::cpp_int;

// Exact rational arithmetic, always stored normalized (gcd 1, positive
// denominator). Every payoff, probability and envelope value in this library
// is a Rational; no floating point appears anywhere, so equality of values
// (which drives all stopping rules) is decidable and exact.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer string. The denominator must be positive.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Formats as "p/q", or as "p" when the denominator is 1.
std::string to_string(const Rational& value);

// A rational extended with a single +infinity. +infinity compares strictly
// greater than every rational and equals only itself; it marks entries of a
// value process whose conditioning event has zero mass, so the stopping
// trigger "value == payoff" can never fire there.
class ExtRational {
 public:
  ExtRational() : finite_(Rational(0)) {}
  ExtRational(Rational value) : finite_(std::move(value)) {}  // NOLINT: implicit by design
  ExtRational(int value) : finite_(Rational(value)) {}        // NOLINT

  static ExtRational infinity();

  bool is_infinite() const { return !finite_.has_value(); }
  // The finite value; throws std::logic_error when infinite.
  const Rational& finite() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<(const ExtRational& a, const ExtRational& b);

 private:
  std::optional<Rational> finite_;
};

bool operator==(const ExtRational& a, const ExtRational& b);
inline bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
bool operator<(const ExtRational& a, const ExtRational& b);
inline bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
inline bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
inline bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

inline bool operator==(const ExtRational& a, const Rational& b) {
  return !a.is_infinite() && a.finite() == b;
}
inline bool operator==(const Rational& a, const ExtRational& b) { return b == a; }

std::string to_string(const ExtRational& value);

}  // namespace stopgame
