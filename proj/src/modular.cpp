#include "azcong/modular.hpp"

#include "azcong/errors.hpp"

namespace azcong {

ModValue::ModValue(const Integer& value, const Integer& modulus)
    : residue_(value), modulus_(modulus) {
  if (modulus_ < 2) {
    throw InvalidModulus("modulus must be >= 2, got " + render_integer(modulus_));
  }
  mpz_fdiv_r(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
}

void ModValue::check_same_modulus(const ModValue& other) const {
  if (modulus_ != other.modulus_) {
    throw ModulusMismatch("mixed moduli " + render_integer(modulus_) + " and " +
                          render_integer(other.modulus_));
  }
}

ModValue ModValue::operator+(const ModValue& other) const {
  check_same_modulus(other);
  return ModValue(residue_ + other.residue_, modulus_);
}

ModValue ModValue::operator-(const ModValue& other) const {
  check_same_modulus(other);
  return ModValue(residue_ - other.residue_, modulus_);
}

ModValue ModValue::operator*(const ModValue& other) const {
  check_same_modulus(other);
  return ModValue(residue_ * other.residue_, modulus_);
}

ModValue ModValue::operator+(const Integer& other) const {
  return ModValue(residue_ + other, modulus_);
}

ModValue ModValue::operator-(const Integer& other) const {
  return ModValue(residue_ - other, modulus_);
}

ModValue ModValue::operator*(const Integer& other) const {
  return ModValue(residue_ * other, modulus_);
}

ModValue ModValue::inverse() const {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
    throw NotInvertible(render_integer(residue_) + " is not invertible mod " +
                        render_integer(modulus_) + " (gcd " + render_integer(g) + ")");
  }
  return ModValue(inv, modulus_);
}

ModValue ModValue::pow(const Integer& exp) const {
  if (sgn(exp) < 0) return inverse().pow(-exp);
  Integer r;
  mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), exp.get_mpz_t(), modulus_.get_mpz_t());
  return ModValue(r, modulus_);
}

std::string ModValue::to_string() const {
  return render_integer(residue_) + " (mod " + render_integer(modulus_) + ")";
}

ModValue mod_value(const Integer& x, const Integer& m) { return ModValue(x, m); }

ModValue mod_inverse(const Integer& x, const Integer& m) { return ModValue(x, m).inverse(); }

ModValue mod_pow(const Integer& base, const Integer& exp, const Integer& m) {
  return ModValue(base, m).pow(exp);
}

}  // namespace azcong
