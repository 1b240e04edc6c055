#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "azcong/numbers.hpp"

namespace azcong {

/// The checks in the suite, in sweep order.  f(k) and g(k) below are
/// summand_f / summand_g from sequences.hpp.
enum class IdentityId {
  Vandermonde,          // sum_j C(b,j) C(c,j)           = C(b+c, c)
  FPartialSum,          // sum_{k=0..m} f(k)             = 9 C(m+2,2) f(m+1)
  GPartialSum,          // sum_{k=0..m} g(k)             = (9/8)(m+1)(m+3) g(m+1)
  FSumModP,             // sum_{k=0..floor((p-1)/3)} f(k) = 0  in Z/p
  GSumModP,             // sum_{k=0..floor((p-2)/3)} g(k) = 0  in Z/p
  Lehmer,               // q/2 - p q^2/4 = sum_{r} 1/(p-3r)    in Z/p^2, q = fermat_quotient(p, 3)
  HarmonicFermat,       // 3 fermat_quotient(p, 3^n) = -2n H(floor(p/3))  in Z/p
  HarmonicAlternating,  // sum_{k=1..n} (-1)^k C(n,k) C(n+k,k) / k = -2 H(n)
  Mortenson,            // sum_{k=0..n} (-1)^k C(n,k) C(n+k,k) / (k+y)
                        //   = ((-1)^n / y) prod_{j=1..n} (y-j)/(y+j)
  MultinomialTermwise,  // (-1)^k C(m,k) C(m+k,k) / k = (3k)!/(k!)^3 3^{-3k} / k
                        //   in Z/p for every k = 1..m, m = floor(p/3)
  MultinomialPowerSum,  // pn sum_{k=1..floor(p/3)} (3k)!/(k!)^3 3^{-3k} / k
                        //   = 3 (3^{(p-1)n} - 1)  in Z/p^2
};

/// Stable kebab-case name used in reports and the CLI.
std::string_view identity_tag(IdentityId id);

/// One verified instance of one identity.  parameters holds (name,
/// rendered value) pairs in declaration order; lhs/rhs are the two sides
/// rendered in their ambient structure (exact integer, exact rational, or
/// residue with modulus), so pass == (lhs == rhs) textually as well.
struct IdentityResult {
  IdentityId id = IdentityId::Vandermonde;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

/// sum_j C(b,j) C(c,j) ?= C(b+c, c), exact.
IdentityResult verify_vandermonde(unsigned long b, unsigned long c);

/// sum_{k=0..m} f(k) ?= 9 C(m+2,2) f(m+1), exact rational.
IdentityResult verify_f_partial_sum(unsigned long m);

/// sum_{k=0..m} g(k) ?= (9/8)(m+1)(m+3) g(m+1), exact rational.
IdentityResult verify_g_partial_sum(unsigned long m);

/// sum_{k=0..floor((p-1)/3)} f(k) ?= 0 in Z/p, with 3^{-3k} and (k+1)^{-1}
/// realized as inverses mod p.  Requires prime p >= 5 (UnsupportedPrime).
IdentityResult verify_f_sum_mod_p(unsigned long p);

/// Companion sum over g with bound floor((p-2)/3), same conventions.
IdentityResult verify_g_sum_mod_p(unsigned long p);

/// q/2 - p q^2 / 4 ?= sum_{r=1..floor(p/3)} (p-3r)^{-1} in Z/p^2, where
/// q = fermat_quotient(p, 3).  Every p-3r lies in (0, p), so the inverses
/// exist mod p^2.
IdentityResult verify_lehmer(unsigned long p);

/// 3 * fermat_quotient(p, 3^n) ?= -2n H(floor(p/3)) in Z/p, the harmonic
/// number taken as a sum of inverses mod p.
IdentityResult verify_harmonic_fermat(unsigned long p, unsigned long n);

/// sum_{k=1..n} (-1)^k C(n,k) C(n+k,k) / k ?= -2 H(n), exact rational.
IdentityResult verify_harmonic_alternating(unsigned long n);

/// sum_{k=0..n} (-1)^k C(n,k) C(n+k,k) / (k+y)
///   ?= ((-1)^n / y) prod_{j=1..n} (y-j)/(y+j), exact rational at the
/// sample point y.  Throws PoleAtSample for y in {0, -1, ..., -n}.
IdentityResult verify_mortenson(unsigned long n, const Rational& y);

/// Certifies the Mortenson identity as an equality of rational functions
/// of y for this n: after clearing the common denominator
/// prod_{j=0..n} (y+j), both sides are polynomials of degree <= n, so
/// agreement at n+1 distinct non-pole points forces equality.  Samples the
/// n+2 half-integers y = t - 1/2, t = 1..n+2 (one more than needed, and
/// never a pole).
std::vector<IdentityResult> certify_mortenson(unsigned long n);

/// Termwise check, m = floor(p/3): for every k = 1..m,
/// (-1)^k C(m,k) C(m+k,k) k^{-1} ?= (3k)!/(k!)^3 3^{-3k} k^{-1} in Z/p.
/// lhs/rhs render the full residue lists, so pass == (lhs == rhs).
IdentityResult verify_multinomial_termwise(unsigned long p);

/// pn * sum_{k=1..floor(p/3)} (3k)!/(k!)^3 3^{-3k} k^{-1} ?= 3(3^{(p-1)n}-1)
/// in Z/p^2.  The sum alone is only determined mod p; its inverses are
/// lifted to Z/p^2, and the leading factor pn makes the product
/// independent of the chosen lifts (changing an inverse by a multiple of p
/// changes the product by a multiple of p^2).
IdentityResult verify_multinomial_power_sum(unsigned long p, unsigned long n);

/// Sweep bounds.  A bound of zero disables the families it governs; prime
/// families run over primes in [max(5, p_min), p_max].
struct IdentityGrid {
  unsigned long p_min = 5;                    // raised to 5 when set lower
  unsigned long p_max = 199;                  // FSumModP .. Lehmer, Multinomial*
  unsigned long m_max = 200;                  // FPartialSum, GPartialSum
  unsigned long n_max = 10;                   // HarmonicFermat, MultinomialPowerSum
  unsigned long vandermonde_max = 40;         // b, c <= bound
  unsigned long harmonic_alternating_max = 500;
  unsigned long mortenson_max = 50;           // certify_mortenson n <= bound
};

/// Runs every verifier over its grid, in IdentityId order with parameters
/// ascending.  Deterministic output for any jobs value; failures are
/// results, never exceptions.
std::vector<IdentityResult> run_all_identities(const IdentityGrid& grid,
                                               unsigned jobs = 1);

}  // namespace azcong
