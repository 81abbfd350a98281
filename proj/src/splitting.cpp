#include "sl2ab/splitting.hpp"

#include <algorithm>
#include <sstream>

#include "sl2ab/error.hpp"

namespace sl2ab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string prime_label(unsigned p, std::string const& gen)
{
    return "(" + std::to_string(p) + ", " + gen + ")";
}

void require_small_prime(unsigned p)
{
    if (p != 2 && p != 3)
        fail(error_kind::invalid_input, "splitting is only computed at p = 2 and p = 3, got " + std::to_string(p));
}

}  // namespace

void splitting_data::check_fundamental_identity() const
{
    unsigned sum = 0;
    for (auto const& q : primes) {
        if (q.e < 1 || q.f < 1)
            fail(error_kind::invalid_input, "prime " + q.label + " has e or f < 1");
        sum += q.e * q.f;
    }
    if (sum != degree)
        fail(error_kind::invalid_input, "splitting at " + std::to_string(p) + ": sum of e*f is " +
                                            std::to_string(sum) + ", field degree is " + std::to_string(degree));
}

std::vector<std::pair<unsigned, unsigned>> splitting_data::ef_multiset() const
{
    std::vector<std::pair<unsigned, unsigned>> v;
    for (auto const& q : primes)
        v.emplace_back(q.e, q.f);
    std::sort(v.begin(), v.end());
    return v;
}

/* Dedekind's criterion */

namespace {

struct dedekind_result {
    mod_factorization factors;
    bool maximal;
};

dedekind_result dedekind_test(int_poly const& f, unsigned p)
{
    if (f.degree() < 1 || !f.is_monic())
        fail(error_kind::invalid_input, "defining polynomial must be monic of degree >= 1, got " + f.to_string());
    require_small_prime(p);

    mod_poly const fbar = mod_poly::reduce(f, p);
    auto factors = factor_mod_p(fbar);

    mod_poly gbar = mod_poly::one(p), hbar = mod_poly::one(p);
    for (auto const& [g, e] : factors) {
        gbar = gbar * g;
        for (unsigned i = 1; i < e; ++i)
            hbar = hbar * g;
    }

    int_poly const diff = gbar.lift() * hbar.lift() - f;
    std::vector<mpz_class> t;
    for (auto const& c : diff.coeffs()) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), p))
            fail(error_kind::invalid_input, "internal: g*h - f not divisible by p");
        t.push_back(c / mpz_class(p));
    }
    mod_poly const tbar = mod_poly::reduce(int_poly(std::move(t)), p);
    mod_poly const z = gcd(gcd(tbar, gbar), hbar);
    return {std::move(factors), z.degree() == 0};
}

}  // namespace

bool is_p_maximal(int_poly const& f, unsigned p)
{
    return dedekind_test(f, p).maximal;
}

splitting_data dedekind_split(int_poly const& f, unsigned p)
{
    auto const res = dedekind_test(f, p);
    if (!res.maximal)
        fail(error_kind::not_p_maximal,
             "Z[x]/(" + f.to_string() + ") is not " + std::to_string(p) +
                 "-maximal (Dedekind's test fails); supply the splitting at " + std::to_string(p) +
                 " explicitly or use a quadratic/cyclotomic field kind");
    splitting_data sd{p, unsigned(f.degree()), {}};
    for (auto const& [g, e] : res.factors)
        sd.primes.push_back({p, e, unsigned(g.degree()), prime_label(p, g.to_string())});
    sd.check_fundamental_identity();
    return sd;
}

/* quadratic fields */

int_poly quadratic_min_poly(std::int64_t d)
{
    std::int64_t const r4 = ((d % 4) + 4) % 4;
    if (r4 == 1)
        return int_poly{(1 - d) / 4, -1, 1};
    return int_poly{-d, 0, 1};
}

splitting_data quadratic_split(std::int64_t d, unsigned p)
{
    require_small_prime(p);
    if (d == 0 || d == 1 || !is_squarefree(d))
        fail(error_kind::invalid_input, "quadratic field needs squarefree d not in {0, 1}, got " + std::to_string(d));

    enum { inert, split, ramified } kind;
    std::int64_t const r = ((d % std::int64_t(p == 2 ? 8 : 3)) + (p == 2 ? 8 : 3)) % (p == 2 ? 8 : 3);
    if (p == 2)
        kind = r == 5 ? inert : r == 1 ? split : ramified;
    else
        kind = r == 2 ? inert : r == 1 ? split : ramified;

    splitting_data sd{p, 2, {}};
    if (kind == inert) {
        sd.primes.push_back({p, 1, 2, "(" + std::to_string(p) + ")"});
        return sd;
    }
    // the primes are (p, w - a) for the roots a of the minimal polynomial of w mod p
    mod_poly const m = mod_poly::reduce(quadratic_min_poly(d), p);
    std::vector<unsigned> roots;
    for (unsigned a = 0; a < p; ++a)
        if (m.eval(a) == 0)
            roots.push_back(a);
    auto label = [&](unsigned a) { return prime_label(p, mod_poly(p, {p - a, 1}).to_string("w")); };
    if (kind == split) {
        if (roots.size() != 2)
            fail(error_kind::invalid_input, "internal: split prime without two roots");
        sd.primes.push_back({p, 1, 1, label(roots[0])});
        sd.primes.push_back({p, 1, 1, label(roots[1])});
    } else {
        if (roots.size() != 1)
            fail(error_kind::invalid_input, "internal: ramified prime without a double root");
        sd.primes.push_back({p, 2, 1, label(roots[0])});
    }
    return sd;
}

/* cyclotomic fields */

std::uint64_t normalize_cyclotomic(std::uint64_t n)
{
    if (n == 0)
        fail(error_kind::invalid_input, "cyclotomic field needs N >= 1");
    return n % 4 == 2 ? n / 2 : n;
}

splitting_data cyclotomic_split(std::uint64_t n, unsigned p)
{
    require_small_prime(p);
    n = normalize_cyclotomic(n);
    unsigned const k = valuation(n, p);
    std::uint64_t const pk = checked_pow(p, k);
    std::uint64_t const s = n / pk;
    unsigned const e = unsigned(euler_phi(pk));
    unsigned const f = unsigned(multiplicative_order(p, s));
    unsigned const degree = unsigned(euler_phi(n));
    unsigned const m = degree / (e * f);

    splitting_data sd{p, degree, {}};
    for (unsigned i = 1; i <= m; ++i)
        sd.primes.push_back({p, e, f, "P" + std::to_string(p) + "_" + std::to_string(i)});
    sd.check_fundamental_identity();
    return sd;
}

/* function fields */

std::vector<splitting_data> rational_function_split(std::uint64_t q)
{
    if (!prime_power_base(q))
        fail(error_kind::invalid_input, "q must be a prime power, got " + std::to_string(q));
    std::vector<splitting_data> out;
    if (q > 3)
        return out;
    for (unsigned a = 0; a < q; ++a) {
        std::string const label = a == 0 ? "(t)" : "(t-" + std::to_string(a) + ")";
        out.push_back({unsigned(q), 1, {{unsigned(q), 1, 1, label}}});
    }
    return out;
}

/* field specs */

void validate(field_spec const& spec)
{
    std::visit(overloaded{
                   [](field::rational const&) {},
                   [](field::quadratic const& q) {
                       if (q.d == 0 || q.d == 1 || !is_squarefree(q.d))
                           fail(error_kind::invalid_input,
                                "quadratic field needs squarefree d not in {0, 1}, got " + std::to_string(q.d));
                   },
                   [](field::cyclotomic const& c) { normalize_cyclotomic(c.n); },
                   [](field::general_poly const& g) {
                       if (g.f.degree() < 1 || !g.f.is_monic())
                           fail(error_kind::invalid_input,
                                "defining polynomial must be monic of degree >= 1, got " + g.f.to_string());
                   },
                   [](field::rational_function const& r) {
                       if (!prime_power_base(r.q))
                           fail(error_kind::invalid_input, "q must be a prime power, got " + std::to_string(r.q));
                   },
                   [](field::user_supplied const& u) {
                       if (u.degree < 1)
                           fail(error_kind::invalid_input, "user-supplied field needs degree >= 1");
                       if (u.is_function_field()) {
                           if (!prime_power_base(*u.q))
                               fail(error_kind::invalid_input, "q must be a prime power, got " + std::to_string(*u.q));
                           if (u.infinite_places < 1)
                               fail(error_kind::invalid_input, "a function field has at least one infinite place");
                           for (auto const& pa : u.function_field_primes)
                               if (pa.e < 1 || pa.f < 1)
                                   fail(error_kind::invalid_input, "prime " + pa.label + " has e or f < 1");
                           return;
                       }
                       if (!u.sig || !u.split2 || !u.split3)
                           fail(error_kind::invalid_input,
                                "user-supplied number field needs signature, split2 and split3");
                       if (u.sig->degree() != u.degree)
                           fail(error_kind::invalid_input, "signature does not match the degree (r1 + 2 r2 != n)");
                       if (u.split2->p != 2 || u.split3->p != 3)
                           fail(error_kind::invalid_input, "split2/split3 must be the splittings at 2 and 3");
                       u.split2->check_fundamental_identity();
                       u.split3->check_fundamental_identity();
                   },
               },
               spec);
}

std::string describe(field_spec const& spec)
{
    return std::visit(
        overloaded{
            [](field::rational const&) -> std::string { return "Q"; },
            [](field::quadratic const& q) -> std::string {
                std::string const w = ((q.d % 4) + 4) % 4 == 1 ? "(1+sqrt(" + std::to_string(q.d) + "))/2"
                                                               : "sqrt(" + std::to_string(q.d) + ")";
                return "Q(sqrt(" + std::to_string(q.d) + ")), O_K = Z[w], w = " + w;
            },
            [](field::cyclotomic const& c) -> std::string {
                return "Q(zeta_" + std::to_string(c.n) + "), O_K = Z[zeta]";
            },
            [](field::general_poly const& g) -> std::string {
                return "Q(x), x a root of " + g.f.to_string();
            },
            [](field::rational_function const& r) -> std::string {
                return "F_" + std::to_string(r.q) + "(t), O_K = F_" + std::to_string(r.q) + "[t]";
            },
            [](field::user_supplied const& u) -> std::string {
                if (u.is_function_field())
                    return "user-supplied extension of degree " + std::to_string(u.degree) + " of F_" +
                           std::to_string(*u.q) + "(t)";
                return "user-supplied number field of degree " + std::to_string(u.degree);
            },
        },
        spec);
}

bool is_function_field(field_spec const& spec)
{
    if (std::holds_alternative<field::rational_function>(spec))
        return true;
    if (auto const* u = std::get_if<field::user_supplied>(&spec))
        return u->is_function_field();
    return false;
}

signature field_signature(field_spec const& spec)
{
    return std::visit(
        overloaded{
            [](field::rational const&) { return signature{1, 0}; },
            [](field::quadratic const& q) { return q.d > 0 ? signature{2, 0} : signature{0, 1}; },
            [](field::cyclotomic const& c) {
                std::uint64_t const n = normalize_cyclotomic(c.n);
                return n == 1 ? signature{1, 0} : signature{0, unsigned(euler_phi(n) / 2)};
            },
            [](field::general_poly const& g) {
                unsigned const r1 = sturm_real_roots(g.f);
                return signature{r1, (unsigned(g.f.degree()) - r1) / 2};
            },
            [](field::rational_function const&) -> signature {
                fail(error_kind::invalid_input, "a function field has no archimedean signature");
            },
            [](field::user_supplied const& u) -> signature {
                if (u.is_function_field() || !u.sig)
                    fail(error_kind::invalid_input, "user-supplied field has no signature");
                return *u.sig;
            },
        },
        spec);
}

unsigned field_degree(field_spec const& spec)
{
    return std::visit(overloaded{
                          [](field::rational const&) { return 1u; },
                          [](field::quadratic const&) { return 2u; },
                          [](field::cyclotomic const& c) { return unsigned(euler_phi(normalize_cyclotomic(c.n))); },
                          [](field::general_poly const& g) { return unsigned(g.f.degree()); },
                          [](field::rational_function const&) { return 1u; },
                          [](field::user_supplied const& u) { return u.degree; },
                      },
                      spec);
}

splitting_data split_at(field_spec const& spec, unsigned p)
{
    require_small_prime(p);
    return std::visit(
        overloaded{
            [p](field::rational const&) {
                return splitting_data{p, 1, {{p, 1, 1, "(" + std::to_string(p) + ")"}}};
            },
            [p](field::quadratic const& q) { return quadratic_split(q.d, p); },
            [p](field::cyclotomic const& c) { return cyclotomic_split(c.n, p); },
            [p](field::general_poly const& g) { return dedekind_split(g.f, p); },
            [](field::rational_function const&) -> splitting_data {
                fail(error_kind::invalid_input, "function fields are split at the primes t - a");
            },
            [p](field::user_supplied const& u) -> splitting_data {
                auto const& sd = p == 2 ? u.split2 : u.split3;
                if (u.is_function_field() || !sd)
                    fail(error_kind::invalid_input, "no user-supplied splitting at " + std::to_string(p));
                return *sd;
            },
        },
        spec);
}

/* JSON */

void to_json(nlohmann::json& j, prime_above const& pa)
{
    j = nlohmann::json{{"e", pa.e}, {"f", pa.f}, {"label", pa.label}};
}

void to_json(nlohmann::json& j, splitting_data const& sd)
{
    j = nlohmann::json{{"p", sd.p}, {"primes", sd.primes}};
}

void to_json(nlohmann::json& j, signature const& s)
{
    j = nlohmann::json{{"r1", s.r1}, {"r2", s.r2}};
}

void to_json(nlohmann::json& j, field_spec const& spec)
{
    std::visit(overloaded{
                   [&](field::rational const&) { j = {{"kind", "rational"}}; },
                   [&](field::quadratic const& q) { j = {{"kind", "quadratic"}, {"d", q.d}}; },
                   [&](field::cyclotomic const& c) { j = {{"kind", "cyclotomic"}, {"n", c.n}}; },
                   [&](field::general_poly const& g) {
                       std::vector<std::string> c;
                       for (auto const& v : g.f.coeffs())
                           c.push_back(v.get_str());
                       j = {{"kind", "poly"}, {"coefficients", c}};
                   },
                   [&](field::rational_function const& r) { j = {{"kind", "function_field"}, {"q", r.q}}; },
                   [&](field::user_supplied const& u) {
                       j = {{"kind", "user"}, {"degree", u.degree}};
                       if (u.is_function_field()) {
                           j["q"] = *u.q;
                           j["infinite_places"] = u.infinite_places;
                           j["primes"] = u.function_field_primes;
                       } else {
                           if (u.sig)
                               j["signature"] = *u.sig;
                           if (u.split2)
                               j["split2"] = *u.split2;
                           if (u.split3)
                               j["split3"] = *u.split3;
                       }
                   },
               },
               spec);
}

namespace {

std::vector<prime_above> primes_from_json(nlohmann::json const& arr, unsigned p)
{
    std::vector<prime_above> out;
    unsigned i = 0;
    for (auto const& e : arr) {
        ++i;
        prime_above pa;
        pa.p = p;
        pa.e = e.at("e").get<unsigned>();
        pa.f = e.at("f").get<unsigned>();
        pa.label = e.contains("label") ? e.at("label").get<std::string>()
                                       : "P" + std::to_string(p) + "_" + std::to_string(i);
        out.push_back(std::move(pa));
    }
    return out;
}

}  // namespace

splitting_data splitting_from_json(nlohmann::json const& j, unsigned p, unsigned degree)
{
    try {
        auto const& arr = j.is_array() ? j : j.at("primes");
        if (j.is_object() && j.contains("p") && j.at("p").get<unsigned>() != p)
            fail(error_kind::parse, "splitting data at " + std::to_string(p) + " labelled with another prime");
        return splitting_data{p, degree, primes_from_json(arr, p)};
    } catch (nlohmann::json::exception const& e) {
        fail(error_kind::parse, std::string("bad splitting JSON: ") + e.what());
    }
}

field_spec field_spec_from_json(nlohmann::json const& j)
{
    try {
        auto const kind = j.at("kind").get<std::string>();
        if (kind == "rational")
            return field::rational{};
        if (kind == "quadratic")
            return field::quadratic{j.at("d").get<std::int64_t>()};
        if (kind == "cyclotomic")
            return field::cyclotomic{j.at("n").get<std::uint64_t>()};
        if (kind == "poly") {
            std::vector<mpz_class> c;
            for (auto const& v : j.at("coefficients")) {
                if (v.is_string()) {
                    mpz_class z;
                    if (z.set_str(v.get<std::string>(), 10) != 0)
                        fail(error_kind::parse, "bad coefficient " + v.dump());
                    c.push_back(z);
                } else {
                    c.emplace_back(static_cast<long>(v.get<std::int64_t>()));
                }
            }
            return field::general_poly{int_poly(std::move(c))};
        }
        if (kind == "function_field")
            return field::rational_function{j.at("q").get<std::uint64_t>()};
        if (kind == "user") {
            field::user_supplied u;
            u.degree = j.at("degree").get<unsigned>();
            if (j.contains("q")) {
                u.q = j.at("q").get<std::uint64_t>();
                u.infinite_places = j.value("infinite_places", 1u);
                auto const base = prime_power_base(*u.q);
                u.function_field_primes = primes_from_json(j.at("primes"), base ? unsigned(*base) : 0);
            } else {
                auto const& s = j.at("signature");
                u.sig = signature{s.at("r1").get<unsigned>(), s.at("r2").get<unsigned>()};
                u.split2 = splitting_from_json(j.at("split2"), 2, u.degree);
                u.split3 = splitting_from_json(j.at("split3"), 3, u.degree);
            }
            return u;
        }
        fail(error_kind::parse, "unknown field kind \"" + kind + "\"");
    } catch (nlohmann::json::exception const& e) {
        fail(error_kind::parse, std::string("bad field JSON: ") + e.what());
    }
}

}  // namespace sl2ab
