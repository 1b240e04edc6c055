#pragma once

#include <string>
#include <vector>

#include "azcong/numbers.hpp"
#include "azcong/padic.hpp"
#include "azcong/sequences.hpp"

namespace azcong {

/// Outcome of measuring one supercongruence claim a_seq(p*n) ?= rhs mod p^t,
/// where rhs is a0(n) for the A0 family and 0 for A1/A2.
///
/// observed_exponent is the exact p-adic valuation of lhs - rhs (infinite
/// when they are equal), so pass == observed_exponent >= claimed_exponent
/// holds by construction for every report.  judged is false only for
/// exploratory entries at p in {2, 3}, where the claims carry no verdict:
/// the valuation is still reported, but unjudged entries never affect exit
/// codes and render their pass field as null ("na" in CSV).
struct CongruenceReport {
  SequenceId seq = SequenceId::A0;
  unsigned long p = 0;
  unsigned long n = 0;
  unsigned long claimed_exponent = 0;
  Valuation observed_exponent = Valuation::infinite();
  bool judged = true;
  bool pass = false;
  Integer lhs;
  Integer rhs;
};

/// True iff p^t divides lhs - rhs.
bool check_congruence(const Integer& lhs, const Integer& rhs, unsigned long p,
                      unsigned long t);

/// v_p(a0(pn) - a0(n)) for A0, v_p(a_i(pn)) for A1/A2.
/// Throws UnsupportedPrime when p is composite, or when p < 5 and
/// allow_small is false (the supercongruences are stated for p >= 5; small
/// primes are exploration only).
Valuation observed_exponent(SequenceId seq, unsigned long p, unsigned long n,
                            bool allow_small = false);

/// a1(pn) ?= 0 mod p^2 for primes p >= 5, n >= 1.
CongruenceReport verify_theorem_a1(unsigned long p, unsigned long n);

/// a2(pn) ?= 0 mod p^2 for primes p >= 5, n >= 1.
CongruenceReport verify_theorem_a2(unsigned long p, unsigned long n);

/// a0(pn) ?= a0(n) mod p^2 for primes p >= 5, n >= 1.
CongruenceReport verify_theorem_a0(unsigned long p, unsigned long n);

/// Reports plus human-readable notes about grid points that were excluded
/// or included without judgment (small primes).
struct ScanOutcome {
  std::vector<CongruenceReport> reports;
  std::vector<std::string> warnings;
};

/// Measures v_p(a0(pn) - a0(n)) against the claimed exponent 3 for every
/// prime in [p_min, p_max] and every n in [1, n_max].  Composite values in
/// the range are skipped silently.  p in {2, 3}: excluded with a warning,
/// unless allow_small is set, in which case they appear as unjudged reports.
/// Reports are ordered by (p, n) regardless of jobs.
ScanOutcome scan_conjecture(unsigned long p_min, unsigned long p_max,
                            unsigned long n_max, unsigned jobs = 1,
                            bool allow_small = false);

/// Runs verify_theorem_a0/a1/a2 over the same grid, ordered by (p, n, seq).
/// Small-prime handling matches scan_conjecture.
ScanOutcome verify_theorems_grid(unsigned long p_min, unsigned long p_max,
                                 unsigned long n_max, unsigned jobs = 1,
                                 bool allow_small = false);

/// C(pb+c, pd+e) ?= C(b,d) * C(c,e) mod p, for digits c, e in [0, p).
/// Throws Error when c or e is out of digit range or p is not prime.
bool lucas_check(unsigned long p, unsigned long b, unsigned long c,
                 unsigned long d, unsigned long e);

/// i * C(p,i) ?= (-1)^(i-1) * p mod p^2, for 0 < i < p.  This form holds
/// for every prime p >= 5.
bool gessel_first_form(unsigned long p, unsigned long i);

/// C(p-1, i) ?= (-1)^i mod p^2, for 0 < i < p.  As stated this holds only
/// mod p in general; the mod p^2 check fails for most (p, i) (already at
/// p = 5, i = 2: C(4,2) - 1 = 5).  Implemented literally so the failures
/// are measurable rather than hidden.
bool gessel_second_form(unsigned long p, unsigned long i);

/// Conjunction of both Gessel forms; see gessel_second_form for why this is
/// usually false.
bool gessel_check(unsigned long p, unsigned long i);

/// C(pb, pc) ?= C(b, c) mod p^3 for primes p >= 5.  Throws UnsupportedPrime
/// for p < 5 or composite p.
bool wolstenholme_check(unsigned long p, unsigned long b, unsigned long c);

}  // namespace azcong
