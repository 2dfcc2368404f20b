#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tropjac/error.hpp"

namespace tropjac {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

// Nearest integer, halves rounded up.
inline BigInt round_nearest(const Rational& r) { return floor(r + Rational(1, 2)); }

/// Canonical text form: "p" for integers, "p/q" with q > 0 otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

namespace detail {

inline bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    value = value * 10 + (s[i] - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "p" or "p/q" (q > 0). Throws InvalidInput otherwise.
inline Rational parse_rational(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(s, num))
      throw Error(ErrorCode::InvalidInput, "not a rational: '" + std::string(text) + "'");
  } else {
    const auto denom_text = s.substr(slash + 1);
    if (!detail::parse_integer(s.substr(0, slash), num) || denom_text.empty() ||
        denom_text.front() == '-' || denom_text.front() == '+' ||
        !detail::parse_integer(denom_text, den) || den <= 0)
      throw Error(ErrorCode::InvalidInput, "not a rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

/// Comma separated list of rationals, e.g. "1/2,0,-3".
inline RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tropjac
