#include "azcong/primes.hpp"

#include <algorithm>

namespace azcong {

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (unsigned long i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  for (unsigned long i = 2; i <= limit; ++i) {
    if (!composite[i]) primes.push_back(i);
  }
  return primes;
}

std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi) {
  if (hi < lo) return {};
  auto all = primes_up_to(hi);
  auto first = std::lower_bound(all.begin(), all.end(), lo);
  return std::vector<unsigned long>(first, all.end());
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long i = 3; i * i <= n; i += 2) {
    if (n % i == 0) return false;
  }
  return true;
}

}  // namespace azcong
