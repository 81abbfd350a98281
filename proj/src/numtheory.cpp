#include "sl2ab/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sl2ab/error.hpp"

namespace sl2ab {

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k)
            out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p <= n / p; ++p)
        if (n % p == 0)
            return false;
    return true;
}

bool is_squarefree(std::int64_t d)
{
    if (d == 0)
        return false;
    std::uint64_t const n = d < 0 ? std::uint64_t(-(d + 1)) + 1 : std::uint64_t(d);
    for (auto const& [p, k] : factor_integer(n))
        if (k > 1)
            return false;
    return true;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t q)
{
    auto const f = factor_integer(q);
    if (f.size() != 1)
        return std::nullopt;
    return f.front().first;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p)
            fail(error_kind::invalid_input, "integer overflow in " + std::to_string(p) + "^" + std::to_string(k));
        r *= p;
    }
    return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p)
{
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        fail(error_kind::invalid_input, "euler_phi: N must be positive");
    std::uint64_t r = n;
    for (auto const& [p, k] : factor_integer(n))
        r = r / p * (p - 1);
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t s)
{
    if (s == 0 || std::gcd(p, s) != 1)
        fail(error_kind::invalid_input,
             "multiplicative_order: gcd(" + std::to_string(p) + ", " + std::to_string(s) + ") != 1");
    if (s == 1)
        return 1;
    unsigned __int128 const base = p % s;
    unsigned __int128 x = base;
    std::uint64_t f = 1;
    while (x != 1) {
        x = x * base % s;
        ++f;
    }
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (auto const& [p, k] : factor_integer(n)) {
        std::size_t const m = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sl2ab
