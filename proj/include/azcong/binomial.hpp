#pragma once

#include "azcong/numbers.hpp"

namespace azcong {

/// C(n, k) for n >= 0; returns 0 when k < 0 or k > n (out-of-range terms
/// appear routinely when congruence sums are re-indexed).
Integer binomial(const Integer& n, const Integer& k);

/// extra = 0: (3k)!/(k!)^3.  extra = 1: (3k+1)!/(k! k! (k+1)!).
Integer multinomial_3(unsigned long k, unsigned extra);

/// Optional factorial table n! for n <= bound; speeds up batch runs.
/// Initialize once before any parallel section (readers are lock-free).
void init_factorial_cache(unsigned long bound = 2000);

/// Drops the table; binomial falls back to the multiplicative formula.
/// Only call while no other thread is inside binomial().
void reset_factorial_cache();

}  // namespace azcong
