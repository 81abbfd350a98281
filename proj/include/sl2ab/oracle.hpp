#ifndef SL2AB_ORACLE_HPP_
#define SL2AB_ORACLE_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sl2ab/abgroup.hpp"
#include "sl2ab/polyarith.hpp"

namespace sl2ab {

/* Brute-force side: small finite commutative rings, SL_2 over them, and
 * abelianizations computed from the group law alone. */

struct zmod_pk {
    std::uint32_t p;
    unsigned k;
};

// F_p[x]/(h), h monic of degree >= 1
struct poly_quot {
    std::uint32_t p;
    mod_poly h;
};

using local_factor = std::variant<zmod_pk, poly_quot>;

struct finite_ring_spec {
    std::vector<local_factor> factors;

    // CRT decomposition of Z/n into Z/p^k factors
    static finite_ring_spec zmod(std::uint64_t n);

    std::uint64_t order() const;
    std::string describe() const;
};

void to_json(nlohmann::json& j, finite_ring_spec const& r);
// {"factors": [{"kind": "zmodpk", "p": 2, "k": 2} | {"kind": "polyquot", "p": 2, "h": [0, 0, 1]}]} or {"zmod": n}
finite_ring_spec ring_spec_from_json(nlohmann::json const& j);

struct ring_element {
    std::uint32_t index = 0;
    auto operator<=>(ring_element const&) const = default;
};

/* The ring with all operations tabulated.  Elements are indexed in
 * mixed radix over the factors; within a factor, Z/p^k residues are their
 * own index and F_p[x]/(h) residues are their base-p coefficient vectors. */
class finite_ring {
  public:
    static constexpr std::uint64_t max_tabulated_order = 256;

    explicit finite_ring(finite_ring_spec spec);

    std::uint32_t size() const { return n_; }
    finite_ring_spec const& spec() const { return spec_; }

    ring_element zero() const { return {0}; }
    ring_element one() const { return one_; }
    ring_element add(ring_element a, ring_element b) const { return {add_[a.index * n_ + b.index]}; }
    ring_element mul(ring_element a, ring_element b) const { return {mul_[a.index * n_ + b.index]}; }
    ring_element neg(ring_element a) const { return {neg_[a.index]}; }
    ring_element sub(ring_element a, ring_element b) const { return add(a, neg(b)); }
    bool is_unit(ring_element a) const { return unit_[a.index]; }

    // residue code of each factor
    std::vector<std::uint32_t> components(ring_element a) const;
    std::string to_string(ring_element a) const;

  private:
    finite_ring_spec spec_;
    std::uint32_t n_ = 1;
    ring_element one_{0};
    std::vector<std::uint32_t> sizes_;
    std::vector<std::uint32_t> add_, mul_, neg_;
    std::vector<char> unit_;
};

struct mat2 {
    ring_element a, b, c, d;
    auto operator<=>(mat2 const&) const = default;
};

mat2 identity(finite_ring const& r);
mat2 elementary_12(finite_ring const& r, ring_element x);  // [[1, x], [0, 1]]
mat2 elementary_21(finite_ring const& r, ring_element x);  // [[1, 0], [x, 1]]
mat2 mul(finite_ring const& r, mat2 const& x, mat2 const& y);
mat2 inverse(finite_ring const& r, mat2 const& x);  // det 1 assumed
ring_element det(finite_ring const& r, mat2 const& x);
std::uint64_t code(finite_ring const& r, mat2 const& x);

struct oracle_budget {
    std::uint64_t max_ring_order = 16;
};

/* All determinant-one matrices, by scanning the |R|^4 entries; sorted.
 * Throws error_kind::resource when |R| exceeds the budget. */
std::vector<mat2> enumerate_sl2_direct(finite_ring const& r, oracle_budget const& budget = {});

/* Closure of {E12(a), E21(a) : a in R} under multiplication; sorted.
 * Equal to enumerate_sl2_direct exactly when R is a GE_2-ring. */
std::vector<mat2> generate_from_elementary(finite_ring const& r, oracle_budget const& budget = {});

/* Subgroup generated by all g h g^-1 h^-1; sorted.  group must be a
 * subgroup (closed under products and inverses). */
std::vector<mat2> commutator_subgroup(finite_ring const& r, std::span<const mat2> group);

// group / [group, group], identified from the element-order profile of the quotient
abelian_group abelianization(finite_ring const& r, std::span<const mat2> group);

// non-units form an additive subgroup
bool is_local(finite_ring const& r);

/* For a local ring A with maximal ideal m (the non-units):
 * A/m^2 as an additive group if |A/m| = 2, Z/3 if |A/m| = 3, 0 otherwise.
 * Throws invalid_input when A is not local. */
abelian_group local_ring_formula(finite_ring const& r);

}  // namespace sl2ab

#endif /* SL2AB_ORACLE_HPP_ */
