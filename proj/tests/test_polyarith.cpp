#include <doctest.h>

#include "gen.hpp"
#include "sl2ab/error.hpp"
#include "sl2ab/polyarith.hpp"

using namespace sl2ab;

namespace {

mod_poly random_monic(gen::source& src, std::uint32_t p, unsigned deg)
{
    std::vector<std::uint32_t> c(deg + 1);
    for (unsigned i = 0; i < deg; ++i)
        c[i] = std::uint32_t(src.range(0, p - 1));
    c[deg] = 1;
    return mod_poly(p, c);
}

mod_poly product(mod_factorization const& fac, std::uint32_t p)
{
    auto acc = mod_poly::one(p);
    for (auto const& [g, m] : fac)
        for (unsigned i = 0; i < m; ++i)
            acc = acc * g;
    return acc;
}

}  // namespace

TEST_CASE("integer polynomial arithmetic")
{
    int_poly const a{1, 1};     // x + 1
    int_poly const b{1, 1, 1};  // x^2 + x + 1
    CHECK(a * b == int_poly{1, 2, 2, 1});
    CHECK((a * b).to_string() == "x^3+2x^2+2x+1");
    CHECK(int_poly{-5, 0, 0, 1}.to_string() == "x^3-5");
    CHECK((a - a).is_zero());
    CHECK(int_poly{3, 0, 1}.derivative() == int_poly{0, 2});

    auto const [q, r] = divmod_monic(int_poly{1, 2, 2, 1}, b);
    CHECK(q == a);
    CHECK(r.is_zero());
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == int_poly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == int_poly{1, 1});
    CHECK(cyclotomic_polynomial(4) == int_poly{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == int_poly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9) == int_poly{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_polynomial(15).degree() == 8);
    // x^n - 1 is the product over divisors
    auto acc = int_poly{1};
    for (auto d : divisors(30))
        acc = acc * cyclotomic_polynomial(d);
    CHECK(acc == int_poly::monomial(30) - int_poly{1});
}

TEST_CASE("number theory helpers")
{
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(3, 4) == 2);
    CHECK(multiplicative_order(2, 1) == 1);
    CHECK_THROWS_AS(multiplicative_order(3, 9), error);
    CHECK(euler_phi(60) == 16);
    CHECK(is_squarefree(-15));
    CHECK_FALSE(is_squarefree(12));
    CHECK(prime_power_base(9) == 3);
    CHECK_FALSE(prime_power_base(12).has_value());
    CHECK(valuation(48, 2) == 4);
}

TEST_CASE("arithmetic mod p")
{
    mod_poly const f(2, {1, 1, 1});  // x^2 + x + 1
    CHECK((f * f) == mod_poly(2, {1, 0, 1, 0, 1}));
    CHECK(gcd(f * mod_poly(2, {1, 1}), f * mod_poly(2, {0, 1})) == f);
    CHECK(mod_poly(3, {2, 0, 2}).monic() == mod_poly(3, {1, 0, 1}));
    CHECK(mod_poly::reduce(int_poly{-5, 0, 0, 1}, 3) == mod_poly(3, {1, 0, 0, 1}));
    CHECK(pow_mod(mod_poly::x(2), 4, f) == mod_poly::x(2));
}

TEST_CASE("factorization mod p")
{
    // x^3 - 5 mod 2 = (x + 1)(x^2 + x + 1)
    auto const f2 = factor_mod_p(mod_poly::reduce(int_poly{-5, 0, 0, 1}, 2));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].first == mod_poly(2, {1, 1}));
    CHECK(f2[1].first == mod_poly(2, {1, 1, 1}));

    // x^3 - 5 mod 3 = (x + 1)^3
    auto const f3 = factor_mod_p(mod_poly::reduce(int_poly{-5, 0, 0, 1}, 3));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == mod_poly(3, {1, 1}));
    CHECK(f3[0].second == 3);

    // f' = 0: x^4 + 1 = (x + 1)^4 mod 2
    auto const f4 = factor_mod_p(mod_poly(2, {1, 0, 0, 0, 1}));
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].second == 4);

    CHECK_THROWS_AS(factor_mod_p(mod_poly(11, {1, 1})), error);
}

TEST_CASE("irreducibility tests")
{
    CHECK(is_irreducible_mod_p(mod_poly(2, {1, 1, 0, 1})));
    CHECK_FALSE(is_irreducible_mod_p(mod_poly(2, {1, 0, 1})));
    CHECK(is_irreducible_mod_p(mod_poly(3, {1, 0, 1})));
    CHECK(is_irreducible_mod_p(mod_poly(13, {2, 0, 1})));  // -2 is not a square mod 13
}

TEST_CASE("Sturm root counts")
{
    CHECK(sturm_real_roots(int_poly{-5, 0, 0, 1}) == 1);
    CHECK(sturm_real_roots(int_poly{-2, 0, 1}) == 2);
    CHECK(sturm_real_roots(int_poly{1, 0, 1}) == 0);
    CHECK(sturm_real_roots(int_poly{1, 0, -1, 0, 1}) == 0);
    CHECK(sturm_real_roots(int_poly{0, -1, 0, 1}) == 3);
    CHECK(sturm_real_roots(int_poly{1, -2, 1}) == 1);  // (x - 1)^2
}

TEST_CASE("integer root test")
{
    CHECK(has_integer_root(int_poly{-1, 0, 0, 0, 1}) == true);
    CHECK(has_integer_root(int_poly{-5, 0, 0, 1}) == false);
    CHECK(has_integer_root(int_poly{0, 1, 1}) == true);
}

TEST_CASE("parsing")
{
    CHECK(parse_int_poly("-5,0,0,1") == int_poly{-5, 0, 0, 1});
    CHECK(parse_int_poly(" 1, +2 ,1") == int_poly{1, 2, 1});
    CHECK(parse_int_poly("\xe2\x88\x92" "3,0,1") == int_poly{-3, 0, 1});
    CHECK(parse_int_poly("123456789012345678901234567890,1").coeff(0) ==
          mpz_class("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int_poly(""), error);
    CHECK_THROWS_AS(parse_int_poly("1,,2"), error);
    CHECK_THROWS_AS(parse_int_poly("1,x"), error);
}

TEST_CASE("property: factorization multiplies back, factors are irreducible")
{
    gen::source src(0x5eed0002);
    for (int iter = 0; iter < 300; ++iter) {
        std::uint32_t const p = std::uint32_t(src.pick(std::vector<int>{2, 3, 5, 7}));
        unsigned const deg = unsigned(src.range(1, 8));
        auto f = random_monic(src, p, deg);
        if (src.coin())
            f = f * random_monic(src, p, unsigned(src.range(1, 3)));  // force some repeated structure
        auto const fac = factor_mod_p(f);
        REQUIRE(product(fac, p) == f);
        for (std::size_t i = 0; i < fac.size(); ++i) {
            REQUIRE(fac[i].first.is_monic());
            REQUIRE(is_irreducible_mod_p(fac[i].first));
            if (i > 0)
                REQUIRE(fac[i - 1].first < fac[i].first);
        }
    }
}

TEST_CASE("property: Sturm count has the parity of the degree for squarefree f")
{
    gen::source src(0x5eed0003);
    int checked = 0;
    for (int iter = 0; iter < 300; ++iter) {
        unsigned const deg = unsigned(src.range(1, 7));
        std::vector<mpz_class> c(deg + 1);
        for (unsigned i = 0; i < deg; ++i)
            c[i] = mpz_class(long(src.range(-20, 20)));
        c[deg] = 1;
        int_poly const f(c);
        auto const n = sturm_real_roots(f);
        REQUIRE(n <= deg);
        // squarefree over F_p for some p implies squarefree over Q
        if (gcd(mod_poly::reduce(f, 7), mod_poly::reduce(f, 7).derivative()).is_one()) {
            REQUIRE(n % 2 == deg % 2);
            ++checked;
        }
    }
    CHECK(checked > 100);
}
