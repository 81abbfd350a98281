// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
// The reference tables below are written out independently of src/verify.cpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gen.hpp"
#include "sl2ab/cli.hpp"
#include "sl2ab/error.hpp"
#include "sl2ab/oracle.hpp"
#include "sl2ab/theorems.hpp"

using namespace sl2ab;

namespace {

using factors = std::vector<std::uint64_t>;

abelian_group grp(factors const& f)
{
    return abelian_group::canonicalize(f);
}

// a failed check records why, the criterion keeps going
struct checker {
    std::vector<std::string> failures;

    void expect(bool ok, std::string const& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    void same(abelian_group const& got, abelian_group const& want, std::string const& what)
    {
        expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
    }
};

struct criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(checker&)> body;
};

/* 1. Z[1/n] */

void z_inv_n(checker& c)
{
    struct row {
        std::uint64_t n;
        std::string invert;
        factors want;
    };
    std::vector<row> const rows = {
        {2, "2", {3}},       {3, "3", {4}},        {5, "5", {12}},     {6, "2,3", {}},          {7, "7", {12}},
        {10, "2,5", {3}},    {11, "11", {12}},     {12, "2,3", {}},    {30, "2,3,5", {}},
    };
    for (auto const& r : rows) {
        std::ostringstream out, err;
        int const code = cli::run({"compute", "--rational", "--invert", r.invert, "--json"}, out, err);
        c.expect(code == 0, "Z[1/" + std::to_string(r.n) + "] exit " + std::to_string(code));
        if (code != 0)
            continue;
        auto const got = nlohmann::json::parse(out.str()).at("group").get<abelian_group>();
        c.same(got, grp(r.want), "Z[1/" + std::to_string(r.n) + "]");
    }
}

/* 2. real quadratic fields */

factors real_quadratic_reference(std::int64_t d)
{
    switch (d % 24) {
    case 5: return {};
    case 1: return {4, 4, 3, 3};
    case 9: return {4, 4, 3};
    case 13: return {3, 3};
    case 21: return {3};
    case 17: return {4, 4};
    case 2: case 11: case 14: case 20: case 23: return {2, 2};
    case 4: case 7: case 10: case 19: case 22: return {2, 2, 3, 3};
    default: return {2, 2, 3};  // 3, 6, 15, 18
    }
}

int_poly minimal_polynomial(std::int64_t d)
{
    // x^2 - x + (1 - d)/4 when d = 1 mod 4, else x^2 - d
    if (((d % 4) + 4) % 4 == 1)
        return int_poly{(1 - d) / 4, -1, 1};
    return int_poly{-d, 0, 1};
}

void quadratic_table(checker& c)
{
    int rows = 0;
    for (std::int64_t d = 2; d <= 500; ++d) {
        if (!is_squarefree(d))
            continue;
        ++rows;
        auto const want = grp(real_quadratic_reference(d));
        signature const sig{2, 0};
        c.same(sl2ab_char0(sig, quadratic_split(d, 2), quadratic_split(d, 3), {}), want,
               "d=" + std::to_string(d) + " closed form");
        auto const f = minimal_polynomial(d);
        c.same(sl2ab_char0(sig, dedekind_split(f, 2), dedekind_split(f, 3), {}), want,
               "d=" + std::to_string(d) + " Dedekind");
    }
    c.expect(rows == 305, "expected 305 squarefree d, saw " + std::to_string(rows));
}

/* 3. cyclotomic fields */

factors cyclotomic_reference(std::uint64_t n)
{
    unsigned k = 0, m = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++k;
    }
    while (n % 3 == 0) {
        n /= 3;
        ++m;
    }
    if (n == 1 && m == 0 && k <= 1)
        return {12};
    if (n == 1 && m == 0)
        return {2, 2};
    if (n == 1 && k <= 1)
        return {3};
    return {};
}

void cyclotomic_table(checker& c)
{
    for (std::uint64_t n = 1; n <= 60; ++n) {
        c.same(sl2ab_cyclotomic(n), grp(cyclotomic_reference(n)), "N=" + std::to_string(n));
        if (euler_phi(n) > 16)
            continue;
        for (unsigned p : {2u, 3u})
            c.expect(dedekind_split(cyclotomic_polynomial(n), p).ef_multiset() == cyclotomic_split(n, p).ef_multiset(),
                     "N=" + std::to_string(n) + " p=" + std::to_string(p) + " splitting");
    }
}

/* 4. named examples */

void named_examples(checker& c)
{
    auto const cube = compute({field::general_poly{int_poly{-5, 0, 0, 1}}, {}});
    c.same(cube.group, grp({12}), "Z[cbrt 5]");
    c.same(sl2ab_galois(4, 4, 1, 2, 1), grp({6, 6}), "Q(sqrt -2, sqrt 3)");

    // beta = (1, 0) above 2 and 1 above 3: the second prime above 2 is in S
    c.same(sl2ab_quadratic_negative(-15, {{1, 0}, {1}}, 0), grp({4, 3}), "O_-15, S = {inf, p2}");
    s_set s;
    s.removed_above_2.insert(1);
    c.same(compute({field::quadratic{-15}, s}).group, grp({4, 3}), "O_-15 via compute");
}

/* 5-7. finite rings */

struct ring_case {
    std::string name;
    finite_ring_spec spec;
    factors ab;          // frozen abelianization
    std::uint64_t order;  // frozen |SL_2|
};

finite_ring_spec pq(std::uint32_t p, std::vector<std::uint32_t> h)
{
    return {{poly_quot{p, mod_poly(p, std::move(h))}}};
}

std::vector<ring_case> local_cases()
{
    return {
        {"F_2", finite_ring_spec::zmod(2), {2}, 6},
        {"F_3", finite_ring_spec::zmod(3), {3}, 24},
        {"Z/4", finite_ring_spec::zmod(4), {4}, 48},
        {"F_4", pq(2, {1, 1, 1}), {}, 60},
        {"F_2[x]/(x^2)", pq(2, {0, 0, 1}), {2, 2}, 48},
        {"Z/8", finite_ring_spec::zmod(8), {4}, 384},
        {"F_8", pq(2, {1, 1, 0, 1}), {}, 504},
        {"F_2[x]/(x^3)", pq(2, {0, 0, 0, 1}), {2, 2}, 384},
        {"Z/9", finite_ring_spec::zmod(9), {3}, 648},
        {"F_9", pq(3, {1, 0, 1}), {}, 720},
        {"F_3[x]/(x^2)", pq(3, {0, 0, 1}), {3}, 648},
    };
}

void oracle_local(checker& c)
{
    for (auto const& rc : local_cases()) {
        finite_ring const r(rc.spec);
        auto const g = enumerate_sl2_direct(r);
        c.expect(g.size() == rc.order, rc.name + " |SL_2| = " + std::to_string(g.size()));
        auto const ab = abelianization(r, g);
        c.same(ab, local_ring_formula(r), rc.name + " oracle vs formula");
        c.same(ab, grp(rc.ab), rc.name + " frozen value");
    }
}

void ge2(checker& c)
{
    auto cases = local_cases();
    cases.push_back({"Z/6", finite_ring_spec::zmod(6), {6}, 144});
    cases.push_back({"Z/12", finite_ring_spec::zmod(12), {12}, 1152});
    for (auto const& rc : cases) {
        finite_ring const r(rc.spec);
        c.expect(generate_from_elementary(r) == enumerate_sl2_direct(r), rc.name + " not generated by E_2");
    }
}

void product_lemma(checker& c)
{
    auto ab = [](std::uint64_t n) {
        finite_ring const r(finite_ring_spec::zmod(n));
        return abelianization(r, enumerate_sl2_direct(r));
    };
    auto const z12 = ab(12);
    c.same(z12, grp({12}), "SL_2(Z/12)^ab");
    c.same(z12, direct_sum(ab(4), ab(3)), "Z/12 vs Z/4 + Z/3");

    for (std::uint64_t n = 2; n <= 12; ++n) {
        // n^3 prod (1 - p^-2), in integers
        std::uint64_t want = n * n * n;
        for (std::uint64_t p = 2; p <= n; ++p) {
            bool prime = true;
            for (std::uint64_t q = 2; q * q <= p; ++q)
                prime = prime && p % q != 0;
            if (prime && n % p == 0)
                want = want / (p * p) * (p * p - 1);
        }
        auto const got = enumerate_sl2_direct(finite_ring(finite_ring_spec::zmod(n))).size();
        c.expect(got == want, "|SL_2(Z/" + std::to_string(n) + ")| = " + std::to_string(got) + ", want " +
                                  std::to_string(want));
    }
}

/* 8. properties */

void partitions(unsigned n, unsigned cap, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned k = std::min(n, cap); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

void properties(checker& c)
{
    gen::source src(0xacce5501);

    // exponent | 12 in characteristic 0
    int applied = 0;
    for (int i = 0; i < 1000; ++i) {
        unsigned const n = unsigned(src.range(1, 16));
        auto const sig = src.signature(n);
        auto const s2 = src.splitting(2, n);
        auto const s3 = src.splitting(3, n);
        s_set s;
        for (std::size_t k = 0; k < s2.primes.size(); ++k)
            if (src.range(0, 2) == 0)
                s.removed_above_2.insert(k);
        for (std::size_t k = 0; k < s3.primes.size(); ++k)
            if (src.range(0, 2) == 0)
                s.removed_above_3.insert(k);
        s.other_finite_primes = unsigned(src.range(0, 3));
        if (!units_infinite(sig, s))
            s.other_finite_primes += 2;  // keep every sample in range of the theorem
        auto const g = sl2ab_char0(sig, s2, s3, s);
        c.expect(g.is_finite() && 12 % *g.exponent() == 0, "char 0 sample " + std::to_string(i) + ": " + g.to_string());
        ++applied;
    }
    c.expect(applied == 1000, "char 0 samples");

    // exponent | 6 in characteristic p
    std::vector<std::uint64_t> const qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 27, 32};
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t const q = src.pick(qs);
        std::vector<prime_above> primes;
        for (auto k = src.range(0, 8); k > 0; --k)
            primes.push_back({unsigned(*prime_power_base(q)), 1, unsigned(src.range(1, 2)), "t"});
        s_set s;
        s.other_finite_primes = unsigned(src.range(1, 3));
        auto const g = sl2ab_charp(q, primes, s, 1);
        c.expect(6 % *g.exponent() == 0, "char p sample " + std::to_string(i));
    }

    // canonicalize is idempotent
    for (int i = 0; i < 1000; ++i) {
        factors f;
        for (auto k = src.range(0, 6); k > 0; --k)
            f.push_back(std::uint64_t(src.range(2, 60)));
        auto const g = abelian_group::canonicalize(f, unsigned(src.range(0, 2)));
        c.expect(abelian_group::canonicalize(g.invariant_factors(), g.free_rank()) == g, "canonicalize idempotence");
    }

    // fundamental identity on every computed splitting
    auto identity_holds = [](splitting_data const& sd) {
        try {
            sd.check_fundamental_identity();
            return true;
        } catch (error const&) {
            return false;
        }
    };
    for (std::int64_t d = -500; d <= 500; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d))
            continue;
        for (unsigned p : {2u, 3u}) {
            c.expect(identity_holds(quadratic_split(d, p)), "identity d=" + std::to_string(d));
            c.expect(identity_holds(dedekind_split(minimal_polynomial(d), p)), "identity Dedekind d=" + std::to_string(d));
        }
    }
    for (std::uint64_t n = 1; n <= 200; ++n)
        for (unsigned p : {2u, 3u})
            c.expect(identity_holds(cyclotomic_split(n, p)), "identity N=" + std::to_string(n));
    for (int i = 0; i < 200; ++i) {
        unsigned const n = unsigned(src.range(1, 7));
        std::vector<mpz_class> coef(n + 1);
        for (unsigned k = 0; k < n; ++k)
            coef[k] = mpz_class(long(src.range(-30, 30)));
        coef[n] = 1;
        int_poly const f(coef);
        for (unsigned p : {2u, 3u}) {
            if (!is_p_maximal(f, p))
                continue;
            c.expect(identity_holds(dedekind_split(f, p)), "identity " + f.to_string());
        }
    }

    // from_order_statistics inverts enumeration, all groups of order <= 200
    std::size_t groups = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::vector<factors> acc{{}};
        for (auto const& [p, a] : factor_integer(n)) {
            std::vector<std::vector<unsigned>> parts;
            std::vector<unsigned> cur;
            partitions(a, a, cur, parts);
            std::vector<factors> next;
            for (auto const& base : acc)
                for (auto const& lam : parts) {
                    auto g = base;
                    for (unsigned l : lam)
                        g.push_back(checked_pow(p, l));
                    next.push_back(g);
                }
            acc = std::move(next);
        }
        for (auto const& cyc : acc) {
            std::map<std::uint64_t, std::uint64_t> counts;
            std::vector<std::uint64_t> x(cyc.size(), 0);
            for (;;) {
                std::uint64_t ord = 1;
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    ord = std::lcm(ord, cyc[i] / std::gcd(cyc[i], x[i]));
                ++counts[ord];
                std::size_t i = 0;
                while (i < cyc.size() && ++x[i] == cyc[i])
                    x[i++] = 0;
                if (i == cyc.size())
                    break;
            }
            c.same(from_order_statistics(counts), grp(cyc), "order statistics, order " + std::to_string(n));
            ++groups;
        }
    }
    c.expect(groups == 389, "abelian groups of order <= 200: " + std::to_string(groups));
}

}  // namespace

int main()
{
    std::vector<criterion> const criteria = {
        {1, "Z[1/n] table via the CLI", 1, z_inv_n},
        {2, "real quadratic table, squarefree 1 < d <= 500", 5, quadratic_table},
        {3, "cyclotomic table, N <= 60", 10, cyclotomic_table},
        {4, "named examples", 1, named_examples},
        {5, "oracle vs local-ring formula, local rings of order <= 9", 60, oracle_local},
        {6, "elementary generation, local rings plus Z/6, Z/12", 60, ge2},
        {7, "product lemma and |SL_2(Z/n)|, n <= 12", 60, product_lemma},
        {8, "property suites", 30, properties},
    };

    int failed = 0;
    for (auto const& cr : criteria) {
        checker c;
        auto const t0 = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (std::exception const& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.limit_seconds)
            c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
        bool const ok = c.failures.empty();
        failed += !ok;
        std::printf("%s  [%d] %s  (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs,
                    cr.limit_seconds);
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i)
            std::printf("      %s\n", c.failures[i].c_str());
        if (c.failures.size() > 10)
            std::printf("      ... %zu more\n", c.failures.size() - 10);
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
