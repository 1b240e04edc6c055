#pragma once

#include <vector>

namespace azcong {

/// Deterministic sieve of Eratosthenes; ascending primes <= limit.
std::vector<unsigned long> primes_up_to(unsigned long limit);

/// Ascending primes in [lo, hi]; empty when the range holds none.
std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi);

/// Deterministic trial division; intended for desk-scale n.
bool is_prime(unsigned long n);

}  // namespace azcong
