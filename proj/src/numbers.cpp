#include "azcong/numbers.hpp"

#include <cctype>

#include "azcong/errors.hpp"

namespace azcong {

std::string render_integer(const Integer& x) { return x.get_str(); }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size()) throw Error("not a decimal integer: \"" + std::string(text) + "\"");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error("not a decimal integer: \"" + std::string(text) + "\"");
    }
  }
  // mpz accepts the validated form directly; drop an explicit '+'.
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::string render_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow3(unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, exp);
  return r;
}

}  // namespace azcong
