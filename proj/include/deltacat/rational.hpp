#pragma once

// Exact rational arithmetic carrier and literal formats ("a/b", "a").

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "deltacat/simplex.hpp"

namespace deltacat {

using Integer = boost::multiprecision::cpp_int;

// Always in lowest terms with positive denominator (maintained by the type).
using ExactRational = boost::multiprecision::cpp_rational;

[[nodiscard]] inline std::string format_rational(const ExactRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

[[nodiscard]] inline Integer parse_integer(std::string_view text) {
  bool negative = !text.empty() && text.front() == '-';
  std::string_view digits = negative ? text.substr(1) : text;
  Natural magnitude = parse_natural(digits);
  return negative ? -magnitude : magnitude;
}

[[nodiscard]] inline ExactRational parse_rational(std::string_view text) {
  std::vector<std::string_view> parts = split_literal(text, '/');
  if (parts.size() > 2) raise(Errc::bad_literal, "bad rational literal '" + std::string(text) + "'");
  Integer num = parse_integer(parts[0]);
  if (parts.size() == 1) return ExactRational(num);
  Integer den = parse_integer(parts[1]);
  if (den <= 0)
    raise(Errc::bad_literal, "rational literal '" + std::string(text) +
                                 "' must have a positive denominator");
  return ExactRational(num, den);
}

[[nodiscard]] inline std::string format_rationals(const std::vector<ExactRational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_rational(values[i]);
  }
  return out;
}

[[nodiscard]] inline std::vector<ExactRational> parse_rationals(std::string_view text) {
  std::vector<ExactRational> out;
  for (std::string_view part : split_literal(text, ',')) out.push_back(parse_rational(part));
  return out;
}

}  // namespace deltacat
