#include "sl2ab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sl2ab/error.hpp"
#include "sl2ab/oracle.hpp"
#include "sl2ab/theorems.hpp"

namespace sl2ab {

std::size_t suite_report::failures() const
{
    return std::size_t(std::count_if(cases.begin(), cases.end(), [](auto const& c) { return !c.pass; }));
}

namespace {

abelian_group grp(std::initializer_list<std::uint64_t> f)
{
    return abelian_group::canonicalize(f);
}

case_result compare(std::string label, abelian_group const& got, abelian_group const& want)
{
    return {std::move(label), got == want, "got " + got.to_string() + ", expected " + want.to_string()};
}

// SL_2(O_d)^ab for real quadratic fields, by d mod 24
abelian_group real_quadratic_table(std::int64_t d)
{
    switch (d % 24) {
    case 5: return {};
    case 1: return grp({4, 4, 3, 3});
    case 9: return grp({4, 4, 3});
    case 13: return grp({3, 3});
    case 21: return grp({3});
    case 17: return grp({4, 4});
    case 2: case 11: case 14: case 20: case 23: return grp({2, 2});
    case 4: case 7: case 10: case 19: case 22: return grp({2, 2, 3, 3});
    default: return grp({2, 2, 3});
    }
}

abelian_group cyclotomic_table(std::uint64_t n)
{
    unsigned const k = valuation(n, 2);
    unsigned const m = valuation(n, 3);
    std::uint64_t const rest = n / checked_pow(2, k) / checked_pow(3, m);
    if (n == 1 || n == 2)
        return grp({12});
    if (rest == 1 && m == 0 && k >= 2)
        return grp({2, 2});
    if (rest == 1 && k <= 1 && m > 0)
        return grp({3});
    return {};
}

abelian_group z_inv_n_table(std::uint64_t n)
{
    bool const two = n % 2 == 0, three = n % 3 == 0;
    if (two && three)
        return {};
    if (two)
        return grp({3});
    if (three)
        return grp({4});
    return grp({12});
}

suite_report quadratic_suite()
{
    suite_report rep{"quadratic-table", {}};
    for (std::int64_t d = 2; d <= 500; ++d) {
        if (!is_squarefree(d))
            continue;
        auto const live = sl2ab_quadratic_positive(d);
        auto const table = real_quadratic_table(d);
        int_poly const minpoly = quadratic_min_poly(d);
        auto const via_dedekind =
            sl2ab_char0(signature{2, 0}, dedekind_split(minpoly, 2), dedekind_split(minpoly, 3), s_set{});
        bool const ok = live == table && via_dedekind == table;
        rep.cases.push_back({"d=" + std::to_string(d) + " (" + std::to_string(d % 24) + " mod 24)", ok,
                             "live " + live.to_string() + ", Dedekind " + via_dedekind.to_string() + ", table " +
                                 table.to_string()});
    }
    return rep;
}

suite_report cyclotomic_suite()
{
    suite_report rep{"cyclotomic-table", {}};
    for (std::uint64_t n = 1; n <= 60; ++n) {
        rep.cases.push_back(compare("N=" + std::to_string(n), sl2ab_cyclotomic(n), cyclotomic_table(n)));
        if (euler_phi(n) > 16)
            continue;
        int_poly const phi = cyclotomic_polynomial(n);
        for (unsigned p : {2u, 3u}) {
            auto const a = dedekind_split(phi, p).ef_multiset();
            auto const b = cyclotomic_split(n, p).ef_multiset();
            rep.cases.push_back({"N=" + std::to_string(n) + " p=" + std::to_string(p) + " Dedekind vs closed form",
                                 a == b, a == b ? "agree" : "splitting types differ"});
        }
    }
    return rep;
}

suite_report z_inv_n_suite()
{
    suite_report rep{"z-inv-n", {}};
    for (std::uint64_t n : {2, 3, 5, 6, 7, 10, 11, 12, 30}) {
        s_set s;
        for (auto const& [p, k] : factor_integer(n)) {
            if (p == 2)
                s.removed_above_2.insert(0);
            else if (p == 3)
                s.removed_above_3.insert(0);
            else
                ++s.other_finite_primes;
        }
        auto const r = compute({field::rational{}, s});
        rep.cases.push_back(compare("Z[1/" + std::to_string(n) + "]", r.group, z_inv_n_table(n)));
    }
    return rep;
}

struct named_ring {
    std::string name;
    finite_ring_spec spec;
};

finite_ring_spec pq(std::uint32_t p, std::vector<std::uint32_t> h)
{
    return {{poly_quot{p, mod_poly(p, std::move(h))}}};
}

std::vector<named_ring> local_rings()
{
    return {
        {"F_2", finite_ring_spec::zmod(2)},
        {"F_3", finite_ring_spec::zmod(3)},
        {"Z/4", finite_ring_spec::zmod(4)},
        {"F_4", pq(2, {1, 1, 1})},
        {"F_2[x]/(x^2)", pq(2, {0, 0, 1})},
        {"Z/8", finite_ring_spec::zmod(8)},
        {"F_8", pq(2, {1, 1, 0, 1})},
        {"F_2[x]/(x^3)", pq(2, {0, 0, 0, 1})},
        {"Z/9", finite_ring_spec::zmod(9)},
        {"F_9", pq(3, {1, 0, 1})},
        {"F_3[x]/(x^2)", pq(3, {0, 0, 1})},
    };
}

suite_report oracle_local_suite()
{
    suite_report rep{"oracle-local", {}};
    for (auto const& [name, spec] : local_rings()) {
        finite_ring const r(spec);
        auto const g = enumerate_sl2_direct(r);
        rep.cases.push_back(compare("SL2(" + name + ")^ab", abelianization(r, g), local_ring_formula(r)));
    }
    return rep;
}

suite_report ge2_suite()
{
    suite_report rep{"ge2", {}};
    auto rings = local_rings();
    rings.push_back({"Z/6", finite_ring_spec::zmod(6)});
    rings.push_back({"Z/12", finite_ring_spec::zmod(12)});
    for (auto const& [name, spec] : rings) {
        finite_ring const r(spec);
        auto const direct = enumerate_sl2_direct(r);
        auto const gen = generate_from_elementary(r);
        rep.cases.push_back({"E_2(" + name + ") = SL_2(" + name + ")", direct == gen,
                             std::to_string(gen.size()) + " generated, " + std::to_string(direct.size()) +
                                 " with det 1"});
    }
    return rep;
}

// n^3 prod_{p | n} (1 - p^-2)
std::uint64_t sl2_zmod_order(std::uint64_t n)
{
    std::uint64_t r = n * n * n;
    for (auto const& [p, k] : factor_integer(n))
        r = r / (p * p) * (p * p - 1);
    return r;
}

suite_report product_suite()
{
    suite_report rep{"product-lemma", {}};
    auto ab = [](finite_ring_spec const& spec) {
        finite_ring const r(spec);
        return abelianization(r, enumerate_sl2_direct(r));
    };

    auto const z12 = ab(finite_ring_spec::zmod(12));
    rep.cases.push_back(compare("SL2(Z/12)^ab", z12, grp({12})));
    rep.cases.push_back(compare("SL2(Z/12)^ab = SL2(Z/4)^ab + SL2(Z/3)^ab", z12,
                                direct_sum(ab(finite_ring_spec::zmod(4)), ab(finite_ring_spec::zmod(3)))));

    // R x S for all pairs of small local rings with |R| |S| <= 12
    std::vector<named_ring> const small = {
        {"F_2", finite_ring_spec::zmod(2)},  {"F_3", finite_ring_spec::zmod(3)},
        {"Z/4", finite_ring_spec::zmod(4)},  {"F_4", pq(2, {1, 1, 1})},
        {"F_2[x]/(x^2)", pq(2, {0, 0, 1})}, {"F_5", finite_ring_spec::zmod(5)},
    };
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); ++j) {
            if (small[i].spec.order() * small[j].spec.order() > 12)
                continue;
            finite_ring_spec prod = small[i].spec;
            prod.factors.insert(prod.factors.end(), small[j].spec.factors.begin(), small[j].spec.factors.end());
            rep.cases.push_back(compare("SL2(" + small[i].name + " x " + small[j].name + ")^ab", ab(prod),
                                        direct_sum(ab(small[i].spec), ab(small[j].spec))));
        }

    for (std::uint64_t n = 2; n <= 12; ++n) {
        finite_ring const r(finite_ring_spec::zmod(n));
        auto const got = enumerate_sl2_direct(r).size();
        auto const want = sl2_zmod_order(n);
        rep.cases.push_back({"|SL2(Z/" + std::to_string(n) + ")|", got == want,
                             std::to_string(got) + " vs " + std::to_string(want)});
    }
    return rep;
}

std::map<std::string, std::function<suite_report()>> const& registry()
{
    static std::map<std::string, std::function<suite_report()>> const r = {
        {"quadratic-table", quadratic_suite}, {"cyclotomic-table", cyclotomic_suite},
        {"z-inv-n", z_inv_n_suite},           {"oracle-local", oracle_local_suite},
        {"ge2", ge2_suite},                   {"product-lemma", product_suite},
    };
    return r;
}

}  // namespace

std::vector<std::string> const& suite_names()
{
    static std::vector<std::string> const names = {"quadratic-table", "cyclotomic-table", "z-inv-n",
                                                    "oracle-local",    "ge2",              "product-lemma"};
    return names;
}

suite_report run_suite(std::string const& name)
{
    auto const& r = registry();
    auto it = r.find(name);
    if (it == r.end())
        fail(error_kind::invalid_input, "unknown verification suite \"" + name + "\"");
    return it->second();
}

}  // namespace sl2ab
