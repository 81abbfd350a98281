#include "sl2ab/theorems.hpp"

#include <variant>

#include "sl2ab/error.hpp"

namespace sl2ab {

std::string to_string(route r)
{
    switch (r) {
    case route::main: return "Main";
    case route::main2: return "main2";
    case route::quadratic: return "quadratic";
    case route::galois: return "Galois";
    case route::cyclotomic: return "cyclotomic";
    case route::known_case: return "known-case";
    }
    return "?";
}

std::string prime_contribution::summand_string() const
{
    if (summand.is_trivial())
        return "0";
    if (summand == abelian_group::canonicalize({2, 2}))
        return "(Z/2)^2";
    return summand.to_string();
}

bool units_infinite(signature const& sig, s_set const& s)
{
    return sig.infinite_primes() + s.finite_count() >= 2;
}

bool units_infinite_charp(unsigned infinite_places, s_set const& s)
{
    return infinite_places + s.finite_count() >= 2;
}

namespace {

void check_indices(std::set<std::size_t> const& removed, std::size_t n, unsigned p)
{
    for (auto i : removed)
        if (i >= n)
            fail(error_kind::invalid_input, "S index " + std::to_string(i) + " out of range: there are " +
                                                std::to_string(n) + " primes above " + std::to_string(p));
}

abelian_group sum_of(std::vector<prime_contribution> const& cs)
{
    abelian_group g;
    for (auto const& c : cs)
        g = direct_sum(g, c.summand);
    return g;
}

[[noreturn]] void finite_units(std::size_t s_size)
{
    fail(error_kind::precondition,
         "the ring has finitely many units: |S| = " + std::to_string(s_size) +
             " but the structure results need |S| >= 2 (S containing all infinite primes)");
}

}  // namespace

std::vector<prime_contribution> char0_contributions(splitting_data const& split2, splitting_data const& split3,
                                                    s_set const& s)
{
    check_indices(s.removed_above_2, split2.primes.size(), 2);
    check_indices(s.removed_above_3, split3.primes.size(), 3);

    std::vector<prime_contribution> out;
    for (std::size_t i = 0; i < split2.primes.size(); ++i) {
        auto const& q = split2.primes[i];
        prime_contribution c{q, s.removed_above_2.count(i) > 0, {}};
        if (!c.in_s && q.f == 1)
            c.summand = q.e == 1 ? abelian_group::cyclic(4) : abelian_group::canonicalize({2, 2});
        out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < split3.primes.size(); ++i) {
        auto const& q = split3.primes[i];
        prime_contribution c{q, s.removed_above_3.count(i) > 0, {}};
        if (!c.in_s && q.f == 1)
            c.summand = abelian_group::cyclic(3);
        out.push_back(std::move(c));
    }
    return out;
}

abelian_group sl2ab_char0(signature const& sig, splitting_data const& split2, splitting_data const& split3,
                          s_set const& s)
{
    if (!units_infinite(sig, s))
        finite_units(sig.infinite_primes() + s.finite_count());
    return sum_of(char0_contributions(split2, split3, s));
}

std::vector<prime_contribution> charp_contributions(std::uint64_t q, std::vector<prime_above> const& primes,
                                                    s_set const& s)
{
    if (!prime_power_base(q))
        fail(error_kind::invalid_input, "q must be a prime power, got " + std::to_string(q));
    auto const& removed = q == 3 ? s.removed_above_3 : s.removed_above_2;
    check_indices(removed, primes.size(), q == 3 ? 3 : 2);

    std::vector<prime_contribution> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        prime_contribution c{primes[i], removed.count(i) > 0, {}};
        if (!c.in_s && primes[i].f == 1) {
            if (q == 2)
                c.summand = abelian_group::canonicalize({2, 2});
            else if (q == 3)
                c.summand = abelian_group::cyclic(3);
        }
        out.push_back(std::move(c));
    }
    return out;
}

abelian_group sl2ab_charp(std::uint64_t q, std::vector<prime_above> const& primes, s_set const& s,
                          unsigned infinite_places)
{
    if (!prime_power_base(q))
        fail(error_kind::invalid_input, "q must be a prime power, got " + std::to_string(q));
    if (!units_infinite_charp(infinite_places, s))
        finite_units(infinite_places + s.finite_count());
    return sum_of(charp_contributions(q, primes, s));
}

abelian_group sl2ab_quadratic_positive(std::int64_t d)
{
    if (d <= 1 || !is_squarefree(d))
        fail(error_kind::invalid_input, "need squarefree d > 1, got " + std::to_string(d));
    return sl2ab_char0(signature{2, 0}, quadratic_split(d, 2), quadratic_split(d, 3), s_set{});
}

abelian_group sl2ab_quadratic_negative(std::int64_t d, beta_flags const& flags, unsigned extra_s)
{
    if (d >= 0 || !is_squarefree(d))
        fail(error_kind::invalid_input, "need squarefree d < 0, got " + std::to_string(d));
    auto const s2 = quadratic_split(d, 2);
    auto const s3 = quadratic_split(d, 3);
    if (flags.above_2.size() != s2.primes.size() || flags.above_3.size() != s3.primes.size())
        fail(error_kind::invalid_input, "beta flags must have one entry per prime above 2 and above 3 (" +
                                            std::to_string(s2.primes.size()) + " and " +
                                            std::to_string(s3.primes.size()) + " here)");
    s_set s;
    s.other_finite_primes = extra_s;
    for (std::size_t i = 0; i < flags.above_2.size(); ++i) {
        if (flags.above_2[i] != 0 && flags.above_2[i] != 1)
            fail(error_kind::invalid_input, "beta flags are 0 or 1");
        if (flags.above_2[i] == 0)
            s.removed_above_2.insert(i);
    }
    for (std::size_t i = 0; i < flags.above_3.size(); ++i) {
        if (flags.above_3[i] != 0 && flags.above_3[i] != 1)
            fail(error_kind::invalid_input, "beta flags are 0 or 1");
        if (flags.above_3[i] == 0)
            s.removed_above_3.insert(i);
    }
    return sl2ab_char0(signature{0, 1}, s2, s3, s);
}

sl2ab_result galois_result(unsigned n, unsigned e2, unsigned f2, unsigned e3, unsigned f3)
{
    if (n < 3)
        fail(error_kind::invalid_input, "the Galois formula needs degree n >= 3");
    if (e2 < 1 || f2 < 1 || e3 < 1 || f3 < 1)
        fail(error_kind::invalid_input, "e and f must be positive");
    if (n % (e2 * f2) || n % (e3 * f3))
        fail(error_kind::invalid_input, "e_p * f_p must divide n");

    auto make = [n](unsigned p, unsigned e, unsigned f) {
        splitting_data sd{p, n, {}};
        for (unsigned i = 1; i <= n / (e * f); ++i)
            sd.primes.push_back({p, e, f, "P" + std::to_string(p) + "_" + std::to_string(i)});
        return sd;
    };
    sl2ab_result r;
    r.splittings = {make(2, e2, f2), make(3, e3, f3)};
    // degree >= 3 forces r1 + r2 >= 2, so no gate here
    r.contributions = char0_contributions(r.splittings[0], r.splittings[1], s_set{});
    r.group = sum_of(r.contributions);
    r.taken = route::galois;
    return r;
}

abelian_group sl2ab_galois(unsigned n, unsigned e2, unsigned f2, unsigned e3, unsigned f3)
{
    return galois_result(n, e2, f2, e3, f3).group;
}

abelian_group sl2ab_cyclotomic(std::uint64_t n)
{
    field_spec const spec = field::cyclotomic{n};
    std::uint64_t const m = normalize_cyclotomic(n);
    if (m == 1 || m == 3 || m == 4)
        return *known_small_cases(spec, s_set{});
    return sl2ab_char0(field_signature(spec), cyclotomic_split(m, 2), cyclotomic_split(m, 3), s_set{});
}

std::optional<abelian_group> known_small_cases(field_spec const& spec, s_set const& s)
{
    if (s.finite_count() != 0)
        return std::nullopt;
    auto const z12 = abelian_group::cyclic(12);
    auto const v4 = abelian_group::canonicalize({2, 2});
    auto const z3 = abelian_group::cyclic(3);
    if (std::holds_alternative<field::rational>(spec))
        return z12;
    if (auto const* g = std::get_if<field::general_poly>(&spec); g && g->f.degree() == 1)
        return z12;
    if (auto const* q = std::get_if<field::quadratic>(&spec)) {
        if (q->d == -1)
            return v4;
        if (q->d == -3)
            return z3;
        if (q->d == -15)
            return abelian_group::canonicalize({12}, 2);
    }
    if (auto const* c = std::get_if<field::cyclotomic>(&spec)) {
        switch (normalize_cyclotomic(c->n)) {
        case 1: return z12;
        case 3: return z3;
        case 4: return v4;
        default: break;
        }
    }
    return std::nullopt;
}

sl2ab_result compute(arithmetic_ring_spec const& spec)
{
    validate(spec.field);
    sl2ab_result r;

    if (is_function_field(spec.field)) {
        std::uint64_t q;
        unsigned places = 1;
        std::vector<prime_above> primes;
        if (auto const* rf = std::get_if<field::rational_function>(&spec.field)) {
            q = rf->q;
            for (auto& sd : rational_function_split(q)) {
                for (auto& pa : sd.primes)
                    primes.push_back(pa);
                r.splittings.push_back(std::move(sd));
            }
        } else {
            auto const& u = std::get<field::user_supplied>(spec.field);
            q = *u.q;
            places = u.infinite_places;
            primes = u.function_field_primes;
            r.splittings.push_back({unsigned(*prime_power_base(q)), u.degree, primes});
        }
        r.s_size = places + spec.s.finite_count();
        r.contributions = charp_contributions(q, primes, spec.s);
        if (!units_infinite_charp(places, spec.s))
            finite_units(r.s_size);
        r.group = sum_of(r.contributions);
        r.taken = route::main2;
        return r;
    }

    r.sig = field_signature(spec.field);
    r.s_size = r.sig->infinite_primes() + spec.s.finite_count();
    auto s2 = split_at(spec.field, 2);
    auto s3 = split_at(spec.field, 3);
    s2.check_fundamental_identity();
    s3.check_fundamental_identity();
    r.contributions = char0_contributions(s2, s3, spec.s);
    r.splittings = {std::move(s2), std::move(s3)};

    if (!units_infinite(*r.sig, spec.s)) {
        auto known = known_small_cases(spec.field, spec.s);
        if (!known)
            fail(error_kind::not_covered,
                 "theorem not applicable: the ring has finitely many units (|S| = " + std::to_string(r.s_size) +
                     ", |S| >= 2 required) and no value is recorded for " + describe(spec.field));
        r.group = *known;
        r.taken = route::known_case;
        r.contributions.clear();
        return r;
    }

    r.group = sum_of(r.contributions);
    if (std::holds_alternative<field::quadratic>(spec.field))
        r.taken = route::quadratic;
    else if (std::holds_alternative<field::cyclotomic>(spec.field))
        r.taken = route::cyclotomic;
    else
        r.taken = route::main;
    return r;
}

void to_json(nlohmann::json& j, sl2ab_result const& r)
{
    auto contributions = nlohmann::json::array();
    for (auto const& c : r.contributions)
        if (!c.summand.is_trivial())
            contributions.push_back({{"prime", c.prime.label}, {"summand", c.summand_string()}});
    j = nlohmann::json{{"group", r.group}, {"contributions", contributions}, {"route", to_string(r.taken)}};
}

}  // namespace sl2ab
