#pragma once

#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "azcong/numbers.hpp"

namespace azcong {

/// Which of the three Almkvist-Zudilin-type sequences an operation targets.
enum class SequenceId { A0, A1, A2 };

constexpr unsigned sequence_index(SequenceId id) { return static_cast<unsigned>(id); }
std::string_view sequence_tag(SequenceId id);  // "a0", "a1", "a2"
std::optional<SequenceId> parse_sequence_tag(std::string_view tag);

/// a_i(n) = sum over 0 <= k <= floor((n-i)/3) of
///   (-1)^(n-k) C(3k+i,k) C(2k+i,k) C(n,3k+i) C(n+k,k) 3^(n-3k-i).
/// An empty summation range (n < i) gives 0; a_0(0) = 1 by the same
/// convention (the k = 0 term). Values are memoized per (i, n).
Integer az(SequenceId id, unsigned long n);

/// H(n) = 1 + 1/2 + ... + 1/n as an exact rational; H(0) = 0.
Rational harmonic(unsigned long n);

/// b_p(x) = (x^(p-1) - 1) / p, an exact integer for prime p with p
/// not dividing x. Throws NotCoprime when p | x.
Integer fermat_quotient(unsigned long p, const Integer& x);

/// f(k) = C(3k; k,k,k) 3^(-3k) / (k+1): the summand whose partial sums
/// telescope to 9 C(m+2, 2) f(m+1).
Rational summand_f(unsigned long k);

/// g(k) = C(3k+1; k,k,k+1) 3^(-3k) / (k+2): the companion summand with
/// partial sums 9(m+1)(m+3)/8 g(m+1).
Rational summand_g(unsigned long k);

/// Cache plumbing for the CLI's persistent value store.
void seed_az_value(SequenceId id, unsigned long n, const Integer& value);
std::vector<std::tuple<SequenceId, unsigned long, Integer>> az_cache_snapshot();

}  // namespace azcong
