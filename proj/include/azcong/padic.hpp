#pragma once

#include <compare>
#include <optional>
#include <string>

#include "azcong/numbers.hpp"

namespace azcong {

/// A p-adic valuation: either a nonnegative integer or infinite (v_p(0)).
/// The infinite state is explicit, never a sentinel, so that exact-zero
/// differences cannot poison max-exponent statistics.
class Valuation {
public:
  static Valuation finite(unsigned long v) { return Valuation(v); }
  static Valuation infinite() { return Valuation(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }

  /// Finite value; throws if infinite.
  unsigned long value() const;

  /// observed >= claimed, with infinite >= everything.
  bool at_least(unsigned long t) const { return is_infinite() || *value_ >= t; }

  bool operator==(const Valuation& other) const = default;
  std::strong_ordering operator<=>(const Valuation& other) const;

  /// "inf" or the decimal value.
  std::string to_string() const;

private:
  explicit Valuation(std::optional<unsigned long> v) : value_(v) {}
  std::optional<unsigned long> value_;
};

/// x = unit * p^valuation with p not dividing unit; x = 0 gives
/// (infinite, 0).
struct PAdicSplit {
  Valuation valuation = Valuation::infinite();
  Integer unit = 0;
};

/// Splits x by the prime p (any p >= 2 works arithmetically).
PAdicSplit padic_split(const Integer& x, const Integer& p);

}  // namespace azcong
