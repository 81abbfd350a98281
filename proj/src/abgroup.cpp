#include "sl2ab/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sl2ab/error.hpp"
#include "sl2ab/numtheory.hpp"

namespace sl2ab {

abelian_group abelian_group::canonicalize(std::span<const std::uint64_t> factors, unsigned free_rank)
{
    // p -> prime powers of p occurring in the factors
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
    for (std::uint64_t d : factors) {
        if (d <= 1)
            fail(error_kind::invalid_input,
                 "abelian group factor must be >= 2, got " + std::to_string(d));
        for (auto const& [p, k] : factor_integer(d))
            by_prime[p].push_back(checked_pow(p, k));
    }

    std::size_t len = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        len = std::max(len, powers.size());
    }

    // the i-th largest invariant factor takes the i-th largest power of each prime
    std::vector<std::uint64_t> torsion(len, 1);
    for (auto const& [p, powers] : by_prime)
        for (std::size_t i = 0; i < powers.size(); ++i)
            torsion[i] *= powers[i];
    std::reverse(torsion.begin(), torsion.end());

    abelian_group g;
    g.free_rank_ = free_rank;
    g.torsion_ = std::move(torsion);
    return g;
}

std::optional<std::uint64_t> abelian_group::exponent() const
{
    if (free_rank_ > 0)
        return std::nullopt;
    return torsion_.empty() ? 1 : torsion_.back();
}

std::uint64_t abelian_group::torsion_order() const
{
    std::uint64_t n = 1;
    for (auto d : torsion_)
        n *= d;
    return n;
}

std::map<std::uint64_t, std::vector<std::uint64_t>> abelian_group::primary_parts() const
{
    std::map<std::uint64_t, std::vector<std::uint64_t>> out;
    for (auto it = torsion_.rbegin(); it != torsion_.rend(); ++it)
        for (auto const& [p, k] : factor_integer(*it))
            out[p].push_back(checked_pow(p, k));
    return out;
}

std::string abelian_group::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    char const* sep = "";
    for (auto d : torsion_) {
        os << sep << "Z/" << d;
        sep = " + ";
    }
    if (free_rank_ == 1)
        os << sep << "Z";
    else if (free_rank_ > 1)
        os << sep << "Z^" << free_rank_;
    return os.str();
}

std::string abelian_group::primary_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    char const* sep = "";
    for (auto const& [p, powers] : primary_parts()) {
        // powers are descending; print ascending runs
        for (auto it = powers.rbegin(); it != powers.rend();) {
            auto run_end = std::find_if(it, powers.rend(), [&](auto q) { return q != *it; });
            auto const n = std::distance(it, run_end);
            os << sep;
            if (n == 1)
                os << "Z/" << *it;
            else
                os << "(Z/" << *it << ")^" << n;
            sep = " + ";
            it = run_end;
        }
    }
    if (free_rank_ == 1)
        os << sep << "Z";
    else if (free_rank_ > 1)
        os << sep << "Z^" << free_rank_;
    return os.str();
}

abelian_group direct_sum(abelian_group const& a, abelian_group const& b)
{
    std::vector<std::uint64_t> f = a.invariant_factors();
    f.insert(f.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return abelian_group::canonicalize(f, a.free_rank() + b.free_rank());
}

abelian_group power(abelian_group const& g, unsigned n)
{
    std::vector<std::uint64_t> f;
    for (unsigned i = 0; i < n; ++i)
        f.insert(f.end(), g.invariant_factors().begin(), g.invariant_factors().end());
    return abelian_group::canonicalize(f, g.free_rank() * n);
}

std::map<std::uint64_t, std::uint64_t> order_statistics(abelian_group const& g)
{
    if (!g.is_finite())
        fail(error_kind::invalid_input, "order statistics of an infinite group");
    std::map<std::uint64_t, std::uint64_t> exact;
    for (std::uint64_t m : divisors(*g.exponent())) {
        std::uint64_t killed = 1;
        for (auto d : g.invariant_factors())
            killed *= std::gcd(m, d);
        for (auto const& [d, c] : exact)
            if (m % d == 0)
                killed -= c;
        if (killed)
            exact[m] = killed;
    }
    return exact;
}

abelian_group from_order_statistics(std::map<std::uint64_t, std::uint64_t> const& counts)
{
    auto bad = [](std::string const& why) { fail(error_kind::invalid_profile, "inconsistent order profile: " + why); };

    std::map<std::uint64_t, std::uint64_t> profile;
    std::uint64_t n = 0;
    for (auto const& [ord, c] : counts) {
        if (ord == 0)
            bad("element order 0");
        if (c == 0)
            continue;
        profile[ord] = c;
        n += c;
    }
    if (profile.find(1) == profile.end() || profile.at(1) != 1)
        bad("exactly one element of order 1 is required");

    std::vector<std::uint64_t> factors;
    for (auto const& [p, v] : factor_integer(n)) {
        // conj[k-1] = #{i : lambda_i >= k}
        std::vector<unsigned> conj;
        unsigned prev = 0;
        std::uint64_t pk = 1;
        for (unsigned k = 1; prev < v; ++k) {
            if (k > v)
                bad("p-part does not reach the group order");
            pk *= p;
            std::uint64_t killed = 0;
            for (auto const& [ord, c] : profile)
                if (pk % ord == 0)
                    killed += c;
            unsigned s = 0;
            std::uint64_t t = killed;
            while (t % p == 0) {
                t /= p;
                ++s;
            }
            if (t != 1)
                bad("count of elements killed by " + std::to_string(pk) + " is not a power of " + std::to_string(p));
            if (s <= prev || (!conj.empty() && s - prev > conj.back()))
                bad("p-rank sequence not a partition");
            conj.push_back(s - prev);
            prev = s;
        }
        if (prev != v)
            bad("p-part overshoots the group order");
        for (unsigned i = 1; i <= conj.front(); ++i) {
            unsigned lambda = 0;
            for (auto c : conj)
                if (c >= i)
                    ++lambda;
            factors.push_back(checked_pow(p, lambda));
        }
    }

    auto g = abelian_group::canonicalize(factors);
    if (order_statistics(g) != profile)
        bad("no abelian group has this profile");
    return g;
}

void to_json(nlohmann::json& j, abelian_group const& g)
{
    j = nlohmann::json{{"free_rank", g.free_rank()}, {"invariant_factors", g.invariant_factors()}};
}

void from_json(nlohmann::json const& j, abelian_group& g)
{
    auto const factors = j.at("invariant_factors").get<std::vector<std::uint64_t>>();
    g = abelian_group::canonicalize(factors, j.at("free_rank").get<unsigned>());
}

}  // namespace sl2ab
