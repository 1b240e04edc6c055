#include "azcong/identities.hpp"

#include <algorithm>
#include <functional>

#include "azcong/binomial.hpp"
#include "azcong/errors.hpp"
#include "azcong/modular.hpp"
#include "azcong/parallel.hpp"
#include "azcong/primes.hpp"
#include "azcong/sequences.hpp"

namespace azcong {

namespace {

void require_large_prime(unsigned long p) {
  if (!is_prime(p)) {
    throw UnsupportedPrime("p = " + std::to_string(p) + " is not prime");
  }
  if (p < 5) {
    throw UnsupportedPrime("p = " + std::to_string(p) +
                           ": identity checks require p >= 5");
  }
}

/// inverse() with the failing quantity named; every inverse in this file
/// goes through here so a violated coprimality precondition says which
/// factor broke it.
ModValue named_inverse(const Integer& x, const Integer& m,
                       const std::string& label) {
  try {
    return mod_inverse(x, m);
  } catch (const NotInvertible& e) {
    throw NotInvertible(label + ": " + e.what());
  }
}

std::string param(unsigned long v) { return std::to_string(v); }

IdentityResult make_result(
    IdentityId id, std::vector<std::pair<std::string, std::string>> params,
    std::string lhs, std::string rhs) {
  IdentityResult r;
  r.id = id;
  r.parameters = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = r.lhs == r.rhs;
  return r;
}

/// Advances c1 = C(n, k-1) -> C(n, k) and c2 = C(n+k-1, k-1) -> C(n+k, k).
/// Both steps are exact: k * C(n,k) = (n-k+1) * C(n,k-1) and
/// k * C(n+k,k) = (n+k) * C(n+k-1,k-1).
void step_binomial_pair(Integer& c1, Integer& c2, unsigned long n,
                        unsigned long k) {
  c1 *= (n - k + 1);
  mpz_divexact_ui(c1.get_mpz_t(), c1.get_mpz_t(), k);
  c2 *= (n + k);
  mpz_divexact_ui(c2.get_mpz_t(), c2.get_mpz_t(), k);
}

std::string joined_residues(const std::vector<Integer>& values,
                            const Integer& modulus) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_integer(values[i]);
  }
  out += "] (mod " + render_integer(modulus) + ")";
  return out;
}

}  // namespace

std::string_view identity_tag(IdentityId id) {
  switch (id) {
    case IdentityId::Vandermonde: return "vandermonde";
    case IdentityId::FPartialSum: return "f-partial-sum";
    case IdentityId::GPartialSum: return "g-partial-sum";
    case IdentityId::FSumModP: return "f-sum-mod-p";
    case IdentityId::GSumModP: return "g-sum-mod-p";
    case IdentityId::Lehmer: return "lehmer";
    case IdentityId::HarmonicFermat: return "harmonic-fermat";
    case IdentityId::HarmonicAlternating: return "harmonic-alternating";
    case IdentityId::Mortenson: return "mortenson";
    case IdentityId::MultinomialTermwise: return "multinomial-termwise";
    case IdentityId::MultinomialPowerSum: return "multinomial-power-sum";
  }
  throw Error("invalid IdentityId");
}

IdentityResult verify_vandermonde(unsigned long b, unsigned long c) {
  Integer lhs = 0;
  const unsigned long top = std::min(b, c);
  for (unsigned long j = 0; j <= top; ++j) {
    lhs += binomial(b, j) * binomial(c, j);
  }
  Integer rhs = binomial(Integer(b) + c, c);
  return make_result(IdentityId::Vandermonde,
                     {{"b", param(b)}, {"c", param(c)}}, render_integer(lhs),
                     render_integer(rhs));
}

IdentityResult verify_f_partial_sum(unsigned long m) {
  Rational lhs(0);
  for (unsigned long k = 0; k <= m; ++k) lhs += summand_f(k);
  Rational rhs = Rational(9) * Rational(binomial(Integer(m) + 2, 2));
  rhs *= summand_f(m + 1);
  return make_result(IdentityId::FPartialSum, {{"m", param(m)}},
                     render_rational(lhs), render_rational(rhs));
}

IdentityResult verify_g_partial_sum(unsigned long m) {
  Rational lhs(0);
  for (unsigned long k = 0; k <= m; ++k) lhs += summand_g(k);
  Rational rhs = make_rational(Integer(9) * (Integer(m) + 1) * (Integer(m) + 3),
                               8);
  rhs *= summand_g(m + 1);
  return make_result(IdentityId::GPartialSum, {{"m", param(m)}},
                     render_rational(lhs), render_rational(rhs));
}

IdentityResult verify_f_sum_mod_p(unsigned long p) {
  require_large_prime(p);
  const Integer P(p);
  const ModValue inv27 = named_inverse(27, P, "3^3");
  ModValue sum = mod_value(0, P);
  ModValue power = mod_value(1, P);
  for (unsigned long k = 0; k <= (p - 1) / 3; ++k) {
    if (k > 0) power = power * inv27;
    sum = sum + mod_value(multinomial_3(k, 0), P) * power *
                    named_inverse(k + 1, P, "k+1");
  }
  return make_result(IdentityId::FSumModP, {{"p", param(p)}}, sum.to_string(),
                     mod_value(0, P).to_string());
}

IdentityResult verify_g_sum_mod_p(unsigned long p) {
  require_large_prime(p);
  const Integer P(p);
  const ModValue inv27 = named_inverse(27, P, "3^3");
  ModValue sum = mod_value(0, P);
  ModValue power = mod_value(1, P);
  for (unsigned long k = 0; k <= (p - 2) / 3; ++k) {
    if (k > 0) power = power * inv27;
    sum = sum + mod_value(multinomial_3(k, 1), P) * power *
                    named_inverse(k + 2, P, "k+2");
  }
  return make_result(IdentityId::GSumModP, {{"p", param(p)}}, sum.to_string(),
                     mod_value(0, P).to_string());
}

IdentityResult verify_lehmer(unsigned long p) {
  require_large_prime(p);
  const Integer p2 = Integer(p) * p;
  const ModValue q = mod_value(fermat_quotient(p, 3), p2);
  ModValue lhs = q * named_inverse(2, p2, "2") -
                 mod_value(p, p2) * q * q * named_inverse(4, p2, "4");
  ModValue rhs = mod_value(0, p2);
  for (unsigned long r = 1; r <= p / 3; ++r) {
    rhs = rhs + named_inverse(p - 3 * r, p2, "p-3r");
  }
  return make_result(IdentityId::Lehmer, {{"p", param(p)}}, lhs.to_string(),
                     rhs.to_string());
}

IdentityResult verify_harmonic_fermat(unsigned long p, unsigned long n) {
  require_large_prime(p);
  if (n == 0) throw Error("n must be positive");
  const Integer P(p);
  ModValue lhs = mod_value(Integer(3) * fermat_quotient(p, pow3(n)), P);
  ModValue h = mod_value(0, P);
  for (unsigned long j = 1; j <= p / 3; ++j) {
    h = h + named_inverse(j, P, "j");
  }
  ModValue rhs = mod_value(Integer(-2) * Integer(n), P) * h;
  return make_result(IdentityId::HarmonicFermat,
                     {{"p", param(p)}, {"n", param(n)}}, lhs.to_string(),
                     rhs.to_string());
}

IdentityResult verify_harmonic_alternating(unsigned long n) {
  if (n == 0) throw Error("n must be positive");
  Rational lhs(0);
  Integer c1 = 1;
  Integer c2 = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    step_binomial_pair(c1, c2, n, k);
    Rational term = make_rational(c1 * c2, k);
    if (k % 2 == 1) term = -term;
    lhs += term;
  }
  Rational rhs = Rational(-2) * harmonic(n);
  return make_result(IdentityId::HarmonicAlternating, {{"n", param(n)}},
                     render_rational(lhs), render_rational(rhs));
}

IdentityResult verify_mortenson(unsigned long n, const Rational& y) {
  if (n == 0) throw Error("n must be positive");
  if (y.get_den() == 1) {
    const Integer& num = y.get_num();
    if (num <= 0 && num >= -Integer(n)) {
      throw PoleAtSample("y = " + render_rational(y) +
                         " is a pole for n = " + std::to_string(n));
    }
  }
  Rational lhs(0);
  Integer c1 = 1;
  Integer c2 = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    if (k > 0) step_binomial_pair(c1, c2, n, k);
    Rational term(c1 * c2);
    term /= y + Rational(k);
    if (k % 2 == 1) term = -term;
    lhs += term;
  }
  Rational rhs(n % 2 == 1 ? -1 : 1);
  rhs /= y;
  for (unsigned long j = 1; j <= n; ++j) {
    rhs *= (y - Rational(j)) / (y + Rational(j));
  }
  return make_result(IdentityId::Mortenson,
                     {{"n", param(n)}, {"y", render_rational(y)}},
                     render_rational(lhs), render_rational(rhs));
}

std::vector<IdentityResult> certify_mortenson(unsigned long n) {
  std::vector<IdentityResult> results;
  results.reserve(n + 2);
  for (unsigned long t = 1; t <= n + 2; ++t) {
    results.push_back(verify_mortenson(n, make_rational(2 * Integer(t) - 1, 2)));
  }
  return results;
}

IdentityResult verify_multinomial_termwise(unsigned long p) {
  require_large_prime(p);
  const Integer P(p);
  const unsigned long m = p / 3;
  const ModValue inv27 = named_inverse(27, P, "3^3");
  ModValue power = mod_value(1, P);
  Integer c1 = 1;
  Integer c2 = 1;
  std::vector<Integer> lhs_terms;
  std::vector<Integer> rhs_terms;
  for (unsigned long k = 1; k <= m; ++k) {
    step_binomial_pair(c1, c2, m, k);
    power = power * inv27;
    const ModValue inv_k = named_inverse(k, P, "k");
    Integer signed_product = c1 * c2;
    if (k % 2 == 1) signed_product = -signed_product;
    lhs_terms.push_back((mod_value(signed_product, P) * inv_k).residue());
    rhs_terms.push_back(
        (mod_value(multinomial_3(k, 0), P) * power * inv_k).residue());
  }
  return make_result(IdentityId::MultinomialTermwise, {{"p", param(p)}},
                     joined_residues(lhs_terms, P), joined_residues(rhs_terms, P));
}

IdentityResult verify_multinomial_power_sum(unsigned long p, unsigned long n) {
  require_large_prime(p);
  if (n == 0) throw Error("n must be positive");
  const Integer p2 = Integer(p) * p;
  const ModValue inv27 = named_inverse(27, p2, "3^3");
  ModValue sum = mod_value(0, p2);
  ModValue power = mod_value(1, p2);
  for (unsigned long k = 1; k <= p / 3; ++k) {
    power = power * inv27;
    sum = sum + mod_value(multinomial_3(k, 0), p2) * power *
                    named_inverse(k, p2, "k");
  }
  ModValue lhs = mod_value(Integer(p) * n, p2) * sum;
  ModValue rhs = (mod_pow(3, Integer(p - 1) * n, p2) - Integer(1)) * Integer(3);
  return make_result(IdentityId::MultinomialPowerSum,
                     {{"p", param(p)}, {"n", param(n)}}, lhs.to_string(),
                     rhs.to_string());
}

std::vector<IdentityResult> run_all_identities(const IdentityGrid& grid,
                                               unsigned jobs) {
  std::vector<std::function<IdentityResult()>> tasks;
  const std::vector<unsigned long> primes =
      primes_in_range(std::max<unsigned long>(5, grid.p_min), grid.p_max);

  if (grid.vandermonde_max > 0) {
    for (unsigned long b = 0; b <= grid.vandermonde_max; ++b) {
      for (unsigned long c = 0; c <= grid.vandermonde_max; ++c) {
        tasks.push_back([b, c] { return verify_vandermonde(b, c); });
      }
    }
  }
  if (grid.m_max > 0) {
    for (unsigned long m = 0; m <= grid.m_max; ++m) {
      tasks.push_back([m] { return verify_f_partial_sum(m); });
    }
    for (unsigned long m = 0; m <= grid.m_max; ++m) {
      tasks.push_back([m] { return verify_g_partial_sum(m); });
    }
  }
  for (unsigned long p : primes) {
    tasks.push_back([p] { return verify_f_sum_mod_p(p); });
  }
  for (unsigned long p : primes) {
    tasks.push_back([p] { return verify_g_sum_mod_p(p); });
  }
  for (unsigned long p : primes) {
    tasks.push_back([p] { return verify_lehmer(p); });
  }
  for (unsigned long p : primes) {
    for (unsigned long n = 1; n <= grid.n_max; ++n) {
      tasks.push_back([p, n] { return verify_harmonic_fermat(p, n); });
    }
  }
  for (unsigned long n = 1; n <= grid.harmonic_alternating_max; ++n) {
    tasks.push_back([n] { return verify_harmonic_alternating(n); });
  }
  for (unsigned long n = 1; n <= grid.mortenson_max; ++n) {
    for (unsigned long t = 1; t <= n + 2; ++t) {
      tasks.push_back([n, t] {
        return verify_mortenson(n, make_rational(2 * Integer(t) - 1, 2));
      });
    }
  }
  for (unsigned long p : primes) {
    tasks.push_back([p] { return verify_multinomial_termwise(p); });
  }
  for (unsigned long p : primes) {
    for (unsigned long n = 1; n <= grid.n_max; ++n) {
      tasks.push_back([p, n] { return verify_multinomial_power_sum(p, n); });
    }
  }

  std::vector<IdentityResult> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t idx) {
    results[idx] = tasks[idx]();
  });
  return results;
}

}  // namespace azcong
