#pragma once

#include <compare>
#include <optional>
#include <string>

#include "mbc/errors.hpp"
#include "mbc/numeric.hpp"

namespace mbc {

/// A budget ratio, or the Unwinnable sentinel which orders above every
/// finite value.
template <ContestNumber Num>
class Ratio {
 public:
  Ratio(Num value) : value_(std::move(value)) {}  // NOLINT: implicit by design of the value type

  static Ratio unwinnable() { return Ratio(); }

  bool is_unwinnable() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  const Num& value() const {
    if (!value_) throw UnwinnableError("ratio is unwinnable (+inf)");
    return *value_;
  }

  std::string to_string() const {
    return value_ ? format_number(*value_) : std::string("inf");
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    if (a.is_unwinnable() || b.is_unwinnable())
      return a.is_unwinnable() && b.is_unwinnable();
    return *a.value_ == *b.value_;
  }

  friend std::weak_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.is_unwinnable() || b.is_unwinnable()) {
      if (a.is_unwinnable() && b.is_unwinnable()) return std::weak_ordering::equivalent;
      return a.is_unwinnable() ? std::weak_ordering::greater : std::weak_ordering::less;
    }
    if (*a.value_ < *b.value_) return std::weak_ordering::less;
    if (*b.value_ < *a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  Ratio() = default;
  std::optional<Num> value_;
};

}  // namespace mbc
