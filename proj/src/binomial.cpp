#include "azcong/binomial.hpp"

#include <atomic>
#include <mutex>
#include <vector>

#include "azcong/errors.hpp"

namespace azcong {

namespace {

std::mutex factorial_mutex;
std::vector<Integer> factorial_storage;
std::atomic<const std::vector<Integer>*> factorial_table{nullptr};

unsigned long to_ulong_index(const Integer& x, const char* what) {
  if (!x.fits_ulong_p()) throw Error(std::string(what) + " too large for this build");
  return x.get_ui();
}

}  // namespace

void init_factorial_cache(unsigned long bound) {
  std::lock_guard<std::mutex> lock(factorial_mutex);
  factorial_table.store(nullptr, std::memory_order_release);
  std::vector<Integer> table(bound + 1);
  table[0] = 1;
  for (unsigned long i = 1; i <= bound; ++i) table[i] = table[i - 1] * i;
  factorial_storage = std::move(table);
  factorial_table.store(&factorial_storage, std::memory_order_release);
}

void reset_factorial_cache() {
  std::lock_guard<std::mutex> lock(factorial_mutex);
  factorial_table.store(nullptr, std::memory_order_release);
  factorial_storage.clear();
}

Integer binomial(const Integer& n, const Integer& k) {
  if (sgn(n) < 0) throw Error("binomial: n must be nonnegative");
  if (sgn(k) < 0 || k > n) return 0;

  Integer other = n - k;
  const Integer& small = k <= other ? k : other;
  unsigned long m = to_ulong_index(small, "binomial: min(k, n-k)");

  if (const auto* table = factorial_table.load(std::memory_order_acquire)) {
    if (n < table->size()) {
      unsigned long nn = n.get_ui();
      unsigned long kk = to_ulong_index(k, "binomial: k");
      Integer r = (*table)[nn];
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), (*table)[kk].get_mpz_t());
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), (*table)[nn - kk].get_mpz_t());
      return r;
    }
  }

  // Multiplicative formula; after step i the accumulator equals
  // C(n - m + i, i), so every division is exact.
  Integer base = n - static_cast<unsigned long>(m);
  Integer r = 1;
  for (unsigned long i = 1; i <= m; ++i) {
    r *= base + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

Integer multinomial_3(unsigned long k, unsigned extra) {
  if (extra > 1) throw Error("multinomial_3: extra must be 0 or 1");
  // (3k+extra)! / (k! k! (k+extra)!), by exact factorial division. The
  // binomial-product factorizations C(3k,k)C(2k,k) and C(3k+1,k)C(2k+1,k)
  // are asserted equal to this in the tests.
  Integer num, dk, de;
  mpz_fac_ui(num.get_mpz_t(), 3 * k + extra);
  mpz_fac_ui(dk.get_mpz_t(), k);
  mpz_fac_ui(de.get_mpz_t(), k + extra);
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), dk.get_mpz_t());
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), dk.get_mpz_t());
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), de.get_mpz_t());
  return num;
}

}  // namespace azcong
