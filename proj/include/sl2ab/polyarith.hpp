#ifndef SL2AB_POLYARITH_HPP_
#define SL2AB_POLYARITH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sl2ab/numtheory.hpp"

namespace sl2ab {

/* Polynomial over Z, coefficients lowest degree first, no trailing zeros
 * (the zero polynomial has no coefficients). */
class int_poly {
  public:
    int_poly() = default;
    explicit int_poly(std::vector<mpz_class> coeffs);
    int_poly(std::initializer_list<long> coeffs);

    static int_poly monomial(unsigned deg, mpz_class c = 1);

    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    mpz_class const& lead() const { return c_.back(); }
    mpz_class coeff(unsigned i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    std::vector<mpz_class> const& coeffs() const { return c_; }

    int_poly derivative() const;

    std::string to_string(std::string_view var = "x") const;

    friend int_poly operator+(int_poly const& a, int_poly const& b);
    friend int_poly operator-(int_poly const& a, int_poly const& b);
    friend int_poly operator*(int_poly const& a, int_poly const& b);
    friend bool operator==(int_poly const&, int_poly const&) = default;

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

/* a = q*b + r with b monic; exact over Z. */
std::pair<int_poly, int_poly> divmod_monic(int_poly const& a, int_poly const& b);

/* Polynomial over F_p for a small prime p. */
class mod_poly {
  public:
    mod_poly() = default;
    mod_poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);  // coeffs reduced mod p
    static mod_poly reduce(int_poly const& f, std::uint32_t p);
    static mod_poly one(std::uint32_t p) { return mod_poly(p, {1}); }
    static mod_poly x(std::uint32_t p) { return mod_poly(p, {0, 1}); }

    std::uint32_t modulus() const { return p_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint32_t lead() const { return c_.back(); }
    std::uint32_t coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    std::vector<std::uint32_t> const& coeffs() const { return c_; }

    mod_poly derivative() const;
    mod_poly monic() const;
    std::uint32_t eval(std::uint32_t x) const;
    int_poly lift() const;  // coefficients in [0, p)

    std::string to_string(std::string_view var = "x") const;

    friend mod_poly operator+(mod_poly const& a, mod_poly const& b);
    friend mod_poly operator-(mod_poly const& a, mod_poly const& b);
    friend mod_poly operator*(mod_poly const& a, mod_poly const& b);
    friend bool operator==(mod_poly const&, mod_poly const&) = default;
    // degree first, then coefficients from the top
    friend bool operator<(mod_poly const& a, mod_poly const& b);

  private:
    void normalize();
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> c_;
};

std::pair<mod_poly, mod_poly> divmod(mod_poly const& a, mod_poly const& b);
inline mod_poly operator%(mod_poly const& a, mod_poly const& b) { return divmod(a, b).second; }
inline mod_poly operator/(mod_poly const& a, mod_poly const& b) { return divmod(a, b).first; }
mod_poly gcd(mod_poly a, mod_poly b);  // monic, or zero
mod_poly pow_mod(mod_poly base, std::uint64_t e, mod_poly const& m);

using mod_factorization = std::vector<std::pair<mod_poly, unsigned>>;

/* Complete factorization of a monic f over F_p into monic irreducibles
 * with multiplicities, sorted by (degree, coefficients).  Squarefree
 * decomposition first (including the f' = 0 case in characteristic p),
 * then trial division of each squarefree part by monic polynomials of
 * increasing degree.  Supports p <= 7; throws invalid_input on constant or
 * non-monic input. */
mod_factorization factor_mod_p(mod_poly const& f);

/* Rabin's test; works for any prime p that fits. */
bool is_irreducible_mod_p(mod_poly const& f);

/* Number of distinct real roots of f (Sturm chain on the squarefree part,
 * exact rational arithmetic).  Throws invalid_input on the zero polynomial. */
unsigned sturm_real_roots(int_poly const& f);

/* Phi_N by exact division of x^N - 1 by Phi_d for the proper divisors d. */
int_poly cyclotomic_polynomial(std::uint64_t n);

/* For monic f: does f have an integer root?  nullopt when |f(0)| is too
 * large to enumerate its divisors. */
std::optional<bool> has_integer_root(int_poly const& f);

/* "c0,c1,...,cn", constant term first; accepts ASCII '-' and U+2212. */
int_poly parse_int_poly(std::string_view text);

}  // namespace sl2ab

#endif /* SL2AB_POLYARITH_HPP_ */
