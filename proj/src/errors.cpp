#include "twb/errors.hpp"

#include "twb/bigint.hpp"

namespace twb {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::InfiniteClasses: return "InfiniteClasses";
    case ErrorCode::IncompatibleTwist: return "IncompatibleTwist";
    case ErrorCode::InfiniteEntry: return "InfiniteEntry";
    case ErrorCode::InternalDefect: return "InternalDefect";
  }
  return "Unknown";
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorCode::InvalidInput, "not an integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw Error(ErrorCode::InvalidInput, "not an integer: '" + text + "'");
  }
  BigInt value(text.substr(i));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string ReidemeisterValue::to_string() const {
  return value_ ? value_->str() : std::string("infinite");
}

std::ostream& operator<<(std::ostream& os, const ReidemeisterValue& value) {
  return os << value.to_string();
}

}  // namespace twb
