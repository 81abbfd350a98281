#ifndef SL2AB_ABGROUP_HPP_
#define SL2AB_ABGROUP_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sl2ab {

/* A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk, always held
 * in invariant-factor form: every d_i >= 2 and d_i | d_{i+1}.  Two groups
 * are isomorphic iff their representations compare equal.
 */
class abelian_group {
  public:
    abelian_group() = default;  // the trivial group

    /* Unique invariant-factor form of (+)_i Z/factors[i] (+) Z^free_rank.
     * Throws error_kind::invalid_input when some factor is <= 1. */
    static abelian_group canonicalize(std::span<const std::uint64_t> factors,
                                      unsigned free_rank = 0);
    static abelian_group canonicalize(std::initializer_list<std::uint64_t> factors,
                                      unsigned free_rank = 0)
    {
        return canonicalize(std::span<const std::uint64_t>(factors.begin(), factors.size()),
                            free_rank);
    }
    static abelian_group cyclic(std::uint64_t n) { return n <= 1 ? abelian_group() : canonicalize({n}); }

    unsigned free_rank() const { return free_rank_; }
    std::vector<std::uint64_t> const& invariant_factors() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    // lcm of the torsion factors, 1 for the trivial group; nullopt if infinite
    std::optional<std::uint64_t> exponent() const;
    std::uint64_t torsion_order() const;

    // p -> prime powers p^a (descending) of the primary decomposition
    std::map<std::uint64_t, std::vector<std::uint64_t>> primary_parts() const;

    std::string to_string() const;          // "Z/2 + Z/6 + Z^2", "0" if trivial
    std::string primary_string() const;     // "(Z/2)^2 + Z/3 + Z^2"

    friend bool operator==(abelian_group const&, abelian_group const&) = default;

  private:
    unsigned free_rank_ = 0;
    std::vector<std::uint64_t> torsion_;
};

abelian_group direct_sum(abelian_group const& a, abelian_group const& b);

// n copies of g
abelian_group power(abelian_group const& g, unsigned n);

/* Recover a finite abelian group from the number of its elements of each
 * order.  For each prime p, the number of elements killed by p^k is
 * p^(sum_i min(k, lambda_i)), which determines the partition lambda of the
 * p-part.  The candidate is then re-profiled and compared against the
 * input, so any inconsistent profile is rejected (error_kind::invalid_profile).
 */
abelian_group from_order_statistics(std::map<std::uint64_t, std::uint64_t> const& counts);

/* Order profile of a finite abelian group, computed from its invariant
 * factors (number of elements killed by m is prod_i gcd(m, d_i)). */
std::map<std::uint64_t, std::uint64_t> order_statistics(abelian_group const& g);

void to_json(nlohmann::json& j, abelian_group const& g);
void from_json(nlohmann::json const& j, abelian_group& g);

}  // namespace sl2ab

#endif /* SL2AB_ABGROUP_HPP_ */
