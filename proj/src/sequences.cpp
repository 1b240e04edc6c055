#include "azcong/sequences.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "azcong/binomial.hpp"
#include "azcong/errors.hpp"
#include "azcong/primes.hpp"

namespace azcong {

namespace {

struct AzMemo {
  std::mutex mutex;
  // Append-only per process; concurrent duplicate computation is fine,
  // torn reads are not, hence the copy in and out under the lock.
  std::map<std::pair<unsigned, unsigned long>, Integer> values;
};

AzMemo& memo() {
  static AzMemo m;
  return m;
}

Integer compute_az(SequenceId id, unsigned long n) {
  const unsigned long i = sequence_index(id);
  if (n < i) return 0;
  const unsigned long top = (n - i) / 3;
  Integer sum = 0;
  for (unsigned long k = 0; k <= top; ++k) {
    Integer term = binomial(3 * k + i, k);
    term *= binomial(2 * k + i, k);
    term *= binomial(n, 3 * k + i);
    term *= binomial(n + k, k);
    term *= pow3(n - 3 * k - i);
    if ((n - k) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

std::string_view sequence_tag(SequenceId id) {
  switch (id) {
    case SequenceId::A0: return "a0";
    case SequenceId::A1: return "a1";
    case SequenceId::A2: return "a2";
  }
  throw Error("invalid SequenceId");
}

std::optional<SequenceId> parse_sequence_tag(std::string_view tag) {
  if (tag == "a0") return SequenceId::A0;
  if (tag == "a1") return SequenceId::A1;
  if (tag == "a2") return SequenceId::A2;
  return std::nullopt;
}

Integer az(SequenceId id, unsigned long n) {
  const auto key = std::make_pair(sequence_index(id), n);
  {
    std::lock_guard<std::mutex> lock(memo().mutex);
    auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }
  Integer value = compute_az(id, n);
  {
    std::lock_guard<std::mutex> lock(memo().mutex);
    memo().values.emplace(key, value);
  }
  return value;
}

Rational harmonic(unsigned long n) {
  Rational sum(0);
  for (unsigned long j = 1; j <= n; ++j) sum += Rational(1, j);
  return sum;
}

Integer fermat_quotient(unsigned long p, const Integer& x) {
  if (!is_prime(p)) throw Error("fermat_quotient: p must be prime");
  if (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    throw NotCoprime(render_integer(x) + " is divisible by " + std::to_string(p));
  }
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), p - 1);
  power -= 1;
  Integer q, r;
  mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), power.get_mpz_t(), p);
  if (sgn(r) != 0) throw Error("fermat_quotient: division not exact (p composite?)");
  return q;
}

Rational summand_f(unsigned long k) {
  return make_rational(multinomial_3(k, 0), pow3(3 * k) * (k + 1));
}

Rational summand_g(unsigned long k) {
  return make_rational(multinomial_3(k, 1), pow3(3 * k) * (k + 2));
}

void seed_az_value(SequenceId id, unsigned long n, const Integer& value) {
  std::lock_guard<std::mutex> lock(memo().mutex);
  memo().values.emplace(std::make_pair(sequence_index(id), n), value);
}

std::vector<std::tuple<SequenceId, unsigned long, Integer>> az_cache_snapshot() {
  std::vector<std::tuple<SequenceId, unsigned long, Integer>> out;
  std::lock_guard<std::mutex> lock(memo().mutex);
  out.reserve(memo().values.size());
  for (const auto& [key, value] : memo().values) {
    out.emplace_back(static_cast<SequenceId>(key.first), key.second, value);
  }
  return out;
}

}  // namespace azcong
