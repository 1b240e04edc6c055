#pragma once

#include "azcong/numbers.hpp"

namespace azcong {

/// A residue paired with its modulus. The representative is always the
/// canonical one in [0, modulus); mixing moduli throws ModulusMismatch.
class ModValue {
public:
  ModValue(const Integer& value, const Integer& modulus);

  const Integer& residue() const { return residue_; }
  const Integer& modulus() const { return modulus_; }
  bool is_zero() const { return sgn(residue_) == 0; }

  ModValue operator+(const ModValue& other) const;
  ModValue operator-(const ModValue& other) const;
  ModValue operator*(const ModValue& other) const;
  ModValue operator+(const Integer& other) const;
  ModValue operator-(const Integer& other) const;
  ModValue operator*(const Integer& other) const;

  /// Throws NotInvertible (naming the residue and modulus) unless
  /// gcd(residue, modulus) = 1.
  ModValue inverse() const;

  /// Square-and-multiply; negative exponents go through inverse().
  ModValue pow(const Integer& exp) const;

  bool operator==(const ModValue& other) const = default;

  /// "r (mod m)"
  std::string to_string() const;

private:
  Integer residue_;
  Integer modulus_;

  void check_same_modulus(const ModValue& other) const;
};

/// Canonical residue of x, correct for negative x. Throws InvalidModulus
/// when m < 2.
ModValue mod_value(const Integer& x, const Integer& m);

/// y with x*y = 1 (mod m). Throws NotInvertible when gcd(x, m) != 1.
ModValue mod_inverse(const Integer& x, const Integer& m);

/// base^exp (mod m); exp may be negative when base is invertible.
ModValue mod_pow(const Integer& base, const Integer& exp, const Integer& m);

}  // namespace azcong
