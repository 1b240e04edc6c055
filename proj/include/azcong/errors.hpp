#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace azcong {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Modulus smaller than 2 (or otherwise unusable).
class InvalidModulus : public Error {
public:
  using Error::Error;
};

/// Arithmetic attempted between residues of different moduli.
class ModulusMismatch : public Error {
public:
  using Error::Error;
};

/// gcd(x, m) != 1 where an inverse mod m was required.
class NotInvertible : public Error {
public:
  using Error::Error;
};

/// p divides a quantity that must be coprime to p.
class NotCoprime : public Error {
public:
  using Error::Error;
};

/// p < 5 (or composite) passed to a check whose statement assumes a prime >= 5.
class UnsupportedPrime : public Error {
public:
  using Error::Error;
};

/// Sample point hits a pole of the identity being verified.
class PoleAtSample : public Error {
public:
  using Error::Error;
};

/// Cache file unreadable or malformed; carries the 1-based offending line.
class CacheError : public Error {
public:
  CacheError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace azcong
