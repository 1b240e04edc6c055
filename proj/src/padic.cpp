#include "azcong/padic.hpp"

#include "azcong/errors.hpp"

namespace azcong {

unsigned long Valuation::value() const {
  if (!value_.has_value()) throw Error("infinite valuation has no finite value");
  return *value_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& other) const {
  if (is_infinite() && other.is_infinite()) return std::strong_ordering::equal;
  if (is_infinite()) return std::strong_ordering::greater;
  if (other.is_infinite()) return std::strong_ordering::less;
  return *value_ <=> *other.value_;
}

std::string Valuation::to_string() const {
  return is_infinite() ? "inf" : std::to_string(*value_);
}

PAdicSplit padic_split(const Integer& x, const Integer& p) {
  if (p < 2) throw InvalidModulus("padic_split: p must be >= 2");
  if (sgn(x) == 0) return PAdicSplit{Valuation::infinite(), 0};
  PAdicSplit split;
  Integer unit;
  mp_bitcnt_t count = mpz_remove(unit.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  split.valuation = Valuation::finite(static_cast<unsigned long>(count));
  split.unit = unit;
  return split;
}

}  // namespace azcong
