#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twb {

using BigInt = boost::multiprecision::cpp_int;

BigInt parse_bigint(const std::string& text);
std::string to_string(const BigInt& value);

/// Either a nonnegative integer or infinity. Infinite is an ordinary result,
/// never an error.
class ReidemeisterValue {
 public:
  ReidemeisterValue() = default;  // infinite
  ReidemeisterValue(BigInt value) : value_(std::move(value)) {}  // NOLINT(implicit)
  ReidemeisterValue(long long value) : value_(BigInt(value)) {}  // NOLINT(implicit)

  static ReidemeisterValue infinite() { return {}; }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_infinite() const noexcept { return !value_.has_value(); }
  const BigInt& value() const { return value_.value(); }

  /// Decimal digits, or "infinite".
  std::string to_string() const;

  friend bool operator==(const ReidemeisterValue&, const ReidemeisterValue&) = default;

 private:
  std::optional<BigInt> value_;
};

std::ostream& operator<<(std::ostream& os, const ReidemeisterValue& value);

}  // namespace twb
