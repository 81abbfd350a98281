#ifndef SL2AB_SPLITTING_HPP_
#define SL2AB_SPLITTING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sl2ab/polyarith.hpp"

namespace sl2ab {

/* A prime ideal above a rational prime p (or, for function fields, above
 * some t - a; p is then the characteristic). */
struct prime_above {
    unsigned p = 0;
    unsigned e = 1;  // ramification index
    unsigned f = 1;  // inertia degree
    std::string label;

    friend bool operator==(prime_above const&, prime_above const&) = default;
};

struct splitting_data {
    unsigned p = 0;
    unsigned degree = 0;
    std::vector<prime_above> primes;

    // sum e_i f_i == degree; throws invalid_input otherwise
    void check_fundamental_identity() const;

    // (e, f) pairs sorted; label-free comparison
    std::vector<std::pair<unsigned, unsigned>> ef_multiset() const;
};

struct signature {
    unsigned r1 = 0;
    unsigned r2 = 0;
    unsigned degree() const { return r1 + 2 * r2; }
    unsigned infinite_primes() const { return r1 + r2; }
    friend bool operator==(signature const&, signature const&) = default;
};

namespace field {

struct rational {};

struct quadratic {
    std::int64_t d;  // squarefree, not 0 or 1
};

struct cyclotomic {
    std::uint64_t n;
};

// Q(theta), f(theta) = 0; irreducibility is the caller's assertion
struct general_poly {
    int_poly f;
};

// K = F_q(t), ring of integers F_q[t]
struct rational_function {
    std::uint64_t q;
};

/* Splitting supplied by hand.  Number field: degree, signature, and the
 * splittings at 2 and 3.  Function field: q, the number of infinite places,
 * and the primes above the t - a. */
struct user_supplied {
    unsigned degree = 0;
    std::optional<signature> sig;
    std::optional<splitting_data> split2;
    std::optional<splitting_data> split3;
    std::optional<std::uint64_t> q;
    unsigned infinite_places = 1;
    std::vector<prime_above> function_field_primes;

    bool is_function_field() const { return q.has_value(); }
};

}  // namespace field

using field_spec = std::variant<field::rational, field::quadratic, field::cyclotomic,
                                field::general_poly, field::rational_function, field::user_supplied>;

// validates the per-kind invariants (squarefree d, N >= 1, monic f, ...)
void validate(field_spec const& spec);
std::string describe(field_spec const& spec);
bool is_function_field(field_spec const& spec);

/* Dedekind's criterion.  Factor f mod p as prod g_i^e_i, set g = prod g_i,
 * h = lift of f/g mod p, F = (g h - f) / p.  Z[theta] is p-maximal iff
 * gcd(F, g, h) mod p is 1, in which case the primes above p are (p, g_i(theta))
 * with e = e_i and f = deg g_i.  Otherwise throws error_kind::not_p_maximal. */
splitting_data dedekind_split(int_poly const& f, unsigned p);

// true iff Dedekind's test passes for f at p
bool is_p_maximal(int_poly const& f, unsigned p);

/* Closed-form splitting of p in Q(sqrt d): for p = 2 inert iff d = 5 (8),
 * split iff d = 1 (8); for p = 3 inert iff d = 2 (3), split iff d = 1 (3);
 * ramified otherwise. */
splitting_data quadratic_split(std::int64_t d, unsigned p);

// minimal polynomial of the standard generator w of O_K for Q(sqrt d)
int_poly quadratic_min_poly(std::int64_t d);

/* Q(zeta_N), N = p^n s with p not dividing s: e = phi(p^n),
 * f = ord_s(p), phi(N)/(e f) primes.  N = 2 mod 4 is replaced by N/2. */
splitting_data cyclotomic_split(std::uint64_t n, unsigned p);

// N with N = 2 (mod 4) replaced by N / 2
std::uint64_t normalize_cyclotomic(std::uint64_t n);

/* Primes t - a of F_q[t] that lie in the relevant sets: one per a in F_q
 * for q in {2, 3}, each with e = f = 1; empty for q >= 4.
 * Throws invalid_input when q is not a prime power. */
std::vector<splitting_data> rational_function_split(std::uint64_t q);

signature field_signature(field_spec const& spec);

// degree of K over Q, or over F_q(t)
unsigned field_degree(field_spec const& spec);

// splitting of p in K for number fields; dispatches on the spec kind
splitting_data split_at(field_spec const& spec, unsigned p);

void to_json(nlohmann::json& j, prime_above const& pa);
void to_json(nlohmann::json& j, splitting_data const& sd);
void to_json(nlohmann::json& j, signature const& s);
void to_json(nlohmann::json& j, field_spec const& spec);

/* FieldSpec JSON: {"kind": "rational" | "quadratic" | "cyclotomic" | "poly"
 * | "function_field" | "user", ...}.  Throws error_kind::parse. */
field_spec field_spec_from_json(nlohmann::json const& j);
splitting_data splitting_from_json(nlohmann::json const& j, unsigned p, unsigned degree);

}  // namespace sl2ab

#endif /* SL2AB_SPLITTING_HPP_ */
