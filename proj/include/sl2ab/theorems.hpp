#ifndef SL2AB_THEOREMS_HPP_
#define SL2AB_THEOREMS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2ab/abgroup.hpp"
#include "sl2ab/splitting.hpp"

namespace sl2ab {

/* The finite part of S, as far as SL_2(O_{K,S})^ab can see it: which of
 * the computed primes above 2 and 3 are in S (indices into the splitting
 * data), and how many other finite primes S contains.  The infinite primes
 * are always in S. */
struct s_set {
    std::set<std::size_t> removed_above_2;
    std::set<std::size_t> removed_above_3;
    unsigned other_finite_primes = 0;

    std::size_t finite_count() const
    {
        return removed_above_2.size() + removed_above_3.size() + other_finite_primes;
    }
};

struct arithmetic_ring_spec {
    field_spec field;
    s_set s;
};

/* beta = 1 when the prime is NOT in S, 0 when it is; one entry per prime
 * of quadratic_split(d, 2) and quadratic_split(d, 3), in that order. */
struct beta_flags {
    std::vector<int> above_2;
    std::vector<int> above_3;
};

enum class route { main, main2, quadratic, galois, cyclotomic, known_case };
std::string to_string(route r);

// what one prime above 2 or 3 contributes
struct prime_contribution {
    prime_above prime;
    bool in_s = false;
    abelian_group summand;

    std::string summand_string() const;  // "Z/4", "(Z/2)^2", "Z/3" or "0"
};

struct sl2ab_result {
    abelian_group group;
    route taken = route::main;
    std::vector<prime_contribution> contributions;  // every prime above 2, 3 (or above t - a)
    std::vector<splitting_data> splittings;
    std::optional<signature> sig;
    std::size_t s_size = 0;  // |S| including the infinite primes
};

// |S| >= 2 with the infinite primes counted: (r1 + r2) + finite part
bool units_infinite(signature const& sig, s_set const& s);
bool units_infinite_charp(unsigned infinite_places, s_set const& s);

/* Summand per prime above 2 and 3, for primes not in S:
 *   above 2, f = 1, e = 1  ->  Z/4
 *   above 2, f = 1, e > 1  ->  Z/2 + Z/2
 *   above 3, f = 1         ->  Z/3
 *   f >= 2                 ->  0
 * No precondition check; see sl2ab_char0. */
std::vector<prime_contribution> char0_contributions(splitting_data const& split2, splitting_data const& split3,
                                                    s_set const& s);

/* SL_2(O_{K,S})^ab for a number field.  Throws error_kind::precondition
 * when the units are finite, invalid_input on out-of-range S indices. */
abelian_group sl2ab_char0(signature const& sig, splitting_data const& split2, splitting_data const& split3,
                          s_set const& s);

/* Positive characteristic: for q = 2 each surviving prime of residue
 * degree 1 above some t - a gives Z/2 + Z/2; for q = 3 it gives Z/3;
 * q >= 4 gives 0.  S indices refer to removed_above_2 (q = 2) or
 * removed_above_3 (q = 3). */
std::vector<prime_contribution> charp_contributions(std::uint64_t q, std::vector<prime_above> const& primes,
                                                    s_set const& s);
abelian_group sl2ab_charp(std::uint64_t q, std::vector<prime_above> const& primes, s_set const& s,
                          unsigned infinite_places = 1);

// O_d for squarefree d > 1
abelian_group sl2ab_quadratic_positive(std::int64_t d);

// O_{d,S} for squarefree d < 0; extra_s counts primes of S not above 2, 3
abelian_group sl2ab_quadratic_negative(std::int64_t d, beta_flags const& flags, unsigned extra_s);

/* O_K for K/Q Galois of degree n >= 3: every prime above p has the same
 * (e_p, f_p), and there are n / (e_p f_p) of them. */
sl2ab_result galois_result(unsigned n, unsigned e2, unsigned f2, unsigned e3, unsigned f3);
abelian_group sl2ab_galois(unsigned n, unsigned e2, unsigned f2, unsigned e3, unsigned f3);

// Z[zeta_N]
abelian_group sl2ab_cyclotomic(std::uint64_t n);

/* Recorded values for rings with finitely many units: Z -> Z/12,
 * O_{-1} -> (Z/2)^2, O_{-3} -> Z/3, O_{-15} -> Z/12 + Z^2.  nullopt for
 * anything else, or when S has a finite prime. */
std::optional<abelian_group> known_small_cases(field_spec const& spec, s_set const& s);

/* Full dispatch: computes the splittings, checks the unit-rank gate,
 * and applies the matching structure result. */
sl2ab_result compute(arithmetic_ring_spec const& spec);

// {"group": ..., "contributions": [{"prime": ..., "summand": ...}], "route": ...}
void to_json(nlohmann::json& j, sl2ab_result const& r);

}  // namespace sl2ab

#endif /* SL2AB_THEOREMS_HPP_ */
