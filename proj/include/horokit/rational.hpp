#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace horokit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

/// True for 0, -1, -2, ...: the poles of the Gamma function.
inline bool is_nonpositive_integer(const Rational& q) { return q <= 0 && is_integer(q); }

inline BigInt rat_floor(const Rational& q) {
  BigInt n = rat_num(q), d = rat_den(q);
  BigInt t = n / d;
  if (n < 0 && n % d != 0) --t;
  return t;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p", "-p" or "p/q" with arbitrary-precision parts. Throws std::invalid_argument.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> void { throw std::invalid_argument("not a rational literal: '" + s + "'"); };
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
  };
  check_int(ns);
  check_int(ds);
  BigInt den{ds};
  if (den == 0) bad();
  return Rational(BigInt{ns}, den);
}

/// "p/q", or plain "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) { return q.str(); }

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline Rational rat_pow(Rational base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    base = Rational(1) / base;
    e = -e;
  }
  Rational r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace horokit
