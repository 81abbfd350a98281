#ifndef SL2AB_NUMTHEORY_HPP_
#define SL2AB_NUMTHEORY_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sl2ab {

// (prime, exponent) pairs in increasing prime order; trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

bool is_prime(std::uint64_t n);
bool is_squarefree(std::int64_t d);

// p if q = p^r for some r >= 1, nullopt otherwise
std::optional<std::uint64_t> prime_power_base(std::uint64_t q);

// p^k with overflow check (throws invalid_input)
std::uint64_t checked_pow(std::uint64_t p, unsigned k);

// exponent of p in n (n > 0)
unsigned valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);

/* Least f >= 1 with p^f = 1 mod s (1 when s = 1).
 * Throws invalid_input when gcd(p, s) != 1. */
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t s);

// positive divisors in increasing order
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace sl2ab

#endif /* SL2AB_NUMTHEORY_HPP_ */
