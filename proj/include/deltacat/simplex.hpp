#pragma once

// Exact combinatorics of the simplex category: ordinals [n] = {0 < ... < n},
// nondecreasing maps stored as full value tables, composition, enumeration.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deltacat {

using Natural = boost::multiprecision::cpp_int;

enum class Errc {
  length_mismatch,
  out_of_range,
  not_monotone,
  source_target_mismatch,
  source_mismatch,
  target_mismatch,
  level_mismatch,
  index_out_of_range,
  not_in_cell,
  parameter_out_of_range,
  bad_literal,
};

[[nodiscard]] inline std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::source_target_mismatch: return "SourceTargetMismatch";
    case Errc::source_mismatch: return "SourceMismatch";
    case Errc::target_mismatch: return "TargetMismatch";
    case Errc::level_mismatch: return "LevelMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_in_cell: return "NotInCell";
    case Errc::parameter_out_of_range: return "ParameterOutOfRange";
    case Errc::bad_literal: return "BadLiteral";
  }
  return "UnknownError";
}

class DomainError : public std::runtime_error {
 public:
  static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

  DomainError(Errc code, const std::string& what, std::size_t index = no_index)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what +
                           (index == no_index ? std::string()
                                              : " (index " + std::to_string(index) + ")")),
        code_(code),
        index_(index) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }
  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  Errc code_;
  std::size_t index_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what,
                               std::size_t index = DomainError::no_index) {
  throw DomainError(code, what, index);
}

[[nodiscard]] inline std::size_t to_index(const Natural& n) {
  if (n < 0 || n > std::numeric_limits<std::size_t>::max())
    raise(Errc::index_out_of_range, "value does not fit an array index: " + n.str());
  return static_cast<std::size_t>(n);
}

// The finite ordinal [n] = {0 < 1 < ... < n}.
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(unsigned long long n) : n_(n) {}
  explicit Ordinal(Natural n) : n_(std::move(n)) {
    if (n_ < 0) raise(Errc::out_of_range, "ordinal must be nonnegative, got " + n_.str());
  }

  [[nodiscard]] const Natural& value() const noexcept { return n_; }
  [[nodiscard]] Natural points() const { return n_ + 1; }
  [[nodiscard]] std::size_t table_size() const { return to_index(n_ + 1); }

  friend bool operator==(const Ordinal& a, const Ordinal& b) { return a.n_ == b.n_; }
  friend bool operator!=(const Ordinal& a, const Ordinal& b) { return a.n_ != b.n_; }
  friend bool operator<(const Ordinal& a, const Ordinal& b) { return a.n_ < b.n_; }
  friend bool operator<=(const Ordinal& a, const Ordinal& b) { return a.n_ <= b.n_; }

 private:
  Natural n_ = 0;
};

[[nodiscard]] inline std::string format_ordinal(const Ordinal& n) { return n.value().str(); }

// A nondecreasing map [m] -> [n], stored as its full value table
// (values[i] = image of i). The validating constructor is the only way in.
class MonotoneMap {
 public:
  MonotoneMap(Ordinal source, Ordinal target, std::vector<Natural> values)
      : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    const std::size_t want = source_.table_size();
    if (values_.size() != want)
      raise(Errc::length_mismatch, "expected " + std::to_string(want) + " values, got " +
                                       std::to_string(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 0 || values_[i] > target_.value())
        raise(Errc::out_of_range,
              "value " + values_[i].str() + " outside [0," + target_.value().str() + "]", i);
      if (i > 0 && values_[i] < values_[i - 1])
        raise(Errc::not_monotone,
              "value " + values_[i].str() + " after " + values_[i - 1].str(), i);
    }
  }

  [[nodiscard]] const Ordinal& source() const noexcept { return source_; }
  [[nodiscard]] const Ordinal& target() const noexcept { return target_; }
  [[nodiscard]] const std::vector<Natural>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t arity() const noexcept { return values_.size(); }
  [[nodiscard]] const Natural& operator()(std::size_t i) const { return values_.at(i); }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.values_ == b.values_;
  }
  friend bool operator!=(const MonotoneMap& a, const MonotoneMap& b) { return !(a == b); }
  friend bool operator<(const MonotoneMap& a, const MonotoneMap& b) {
    if (a.source_ != b.source_) return a.source_ < b.source_;
    if (a.target_ != b.target_) return a.target_ < b.target_;
    return a.values_ < b.values_;
  }

 private:
  Ordinal source_;
  Ordinal target_;
  std::vector<Natural> values_;
};

[[nodiscard]] inline MonotoneMap make_map(Ordinal m, Ordinal n, std::vector<Natural> values) {
  return MonotoneMap(std::move(m), std::move(n), std::move(values));
}

[[nodiscard]] inline MonotoneMap identity(const Ordinal& n) {
  std::vector<Natural> values(n.table_size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = i;
  return MonotoneMap(n, n, std::move(values));
}

[[nodiscard]] inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target() != g.source())
    raise(Errc::source_target_mismatch, "compose: f targets [" + format_ordinal(f.target()) +
                                            "] but g starts at [" + format_ordinal(g.source()) +
                                            "]");
  std::vector<Natural> values;
  values.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) values.push_back(g(to_index(f(i))));
  return MonotoneMap(f.source(), g.target(), std::move(values));
}

// All nondecreasing value tables of length m+1 into [0..n], lexicographic.
[[nodiscard]] inline std::vector<MonotoneMap> enumerate_maps(const Ordinal& m, const Ordinal& n) {
  std::vector<MonotoneMap> out;
  std::vector<Natural> table(m.table_size(), Natural(0));
  for (;;) {
    out.emplace_back(m, n, table);
    std::size_t i = table.size();
    while (i > 0 && table[i - 1] == n.value()) --i;
    if (i == 0) break;
    ++table[i - 1];
    for (std::size_t j = i; j < table.size(); ++j) table[j] = table[i - 1];
  }
  return out;
}

[[nodiscard]] inline Natural binomial(const Natural& n, const Natural& k) {
  if (k < 0 || k > n) return 0;
  Natural kk = k;
  if (n - k < kk) kk = n - k;
  Natural result = 1;
  for (Natural i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

[[nodiscard]] inline Natural count_maps(const Ordinal& m, const Ordinal& n) {
  return binomial(m.value() + n.value() + 1, m.value() + 1);
}

[[nodiscard]] inline MonotoneMap constant_map(const Ordinal& m, const Ordinal& n,
                                              const Natural& c) {
  if (c < 0 || c > n.value())
    raise(Errc::out_of_range, "constant " + c.str() + " outside [0," + n.value().str() + "]");
  return MonotoneMap(m, n, std::vector<Natural>(m.table_size(), c));
}

[[nodiscard]] inline MonotoneMap terminal_map(const Ordinal& m) {
  return constant_map(m, 0, 0);
}

// kappa^eps : [0] -> [1] picking the vertex eps.
[[nodiscard]] inline MonotoneMap vertex_map(const Natural& eps) {
  return MonotoneMap(0, 1, {eps});
}

// Literal format: comma-separated values, e.g. "0,1,1,3".
[[nodiscard]] inline std::string format_values(const std::vector<Natural>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].str();
  }
  return out;
}

[[nodiscard]] inline std::string format_map(const MonotoneMap& f) {
  return format_values(f.values());
}

[[nodiscard]] inline Natural parse_natural(std::string_view text) {
  if (text.empty()) raise(Errc::bad_literal, "empty natural literal");
  for (char c : text)
    if (c < '0' || c > '9')
      raise(Errc::bad_literal, "bad natural literal '" + std::string(text) + "'");
  return Natural(std::string(text));
}

[[nodiscard]] inline std::vector<std::string_view> split_literal(std::string_view text,
                                                                 char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

[[nodiscard]] inline std::vector<Natural> parse_naturals(std::string_view text) {
  std::vector<Natural> out;
  for (std::string_view part : split_literal(text, ',')) out.push_back(parse_natural(part));
  return out;
}

// Source is deduced from the literal's length; target must be supplied.
[[nodiscard]] inline MonotoneMap parse_map(std::string_view text, const Ordinal& target) {
  std::vector<Natural> values = parse_naturals(text);
  if (values.empty()) raise(Errc::bad_literal, "empty map literal");
  Ordinal source{Natural(values.size() - 1)};
  return MonotoneMap(source, target, std::move(values));
}

}  // namespace deltacat
