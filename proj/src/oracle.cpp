#include "sl2ab/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "sl2ab/error.hpp"
#include "sl2ab/numtheory.hpp"

namespace sl2ab {

/* ring specs */

finite_ring_spec finite_ring_spec::zmod(std::uint64_t n)
{
    if (n < 2)
        fail(error_kind::invalid_input, "Z/n needs n >= 2, got " + std::to_string(n));
    finite_ring_spec r;
    for (auto const& [p, k] : factor_integer(n))
        r.factors.push_back(zmod_pk{std::uint32_t(p), k});
    return r;
}

namespace {

std::uint64_t factor_order(local_factor const& f)
{
    if (auto const* z = std::get_if<zmod_pk>(&f))
        return checked_pow(z->p, z->k);
    auto const& q = std::get<poly_quot>(f);
    return checked_pow(q.p, unsigned(q.h.degree()));
}

void validate_factor(local_factor const& f)
{
    if (auto const* z = std::get_if<zmod_pk>(&f)) {
        if (!is_prime(z->p) || z->k < 1)
            fail(error_kind::invalid_input, "Z/p^k factor needs p prime and k >= 1");
        return;
    }
    auto const& q = std::get<poly_quot>(f);
    if (!is_prime(q.p) || q.h.modulus() != q.p)
        fail(error_kind::invalid_input, "F_p[x]/(h) factor needs p prime and h over F_p");
    if (q.h.degree() < 1 || !q.h.is_monic())
        fail(error_kind::invalid_input, "F_p[x]/(h) factor needs h monic of degree >= 1");
}

std::string describe_factor(local_factor const& f)
{
    if (auto const* z = std::get_if<zmod_pk>(&f))
        return "Z/" + std::to_string(checked_pow(z->p, z->k));
    auto const& q = std::get<poly_quot>(f);
    return "F_" + std::to_string(q.p) + "[x]/(" + q.h.to_string() + ")";
}

}  // namespace

std::uint64_t finite_ring_spec::order() const
{
    std::uint64_t n = 1;
    for (auto const& f : factors) {
        std::uint64_t const m = factor_order(f);
        if (n > (std::uint64_t(1) << 40) / m)
            fail(error_kind::resource, "ring order too large");
        n *= m;
    }
    return n;
}

std::string finite_ring_spec::describe() const
{
    std::string s;
    for (auto const& f : factors)
        s += (s.empty() ? "" : " x ") + describe_factor(f);
    return s.empty() ? "0" : s;
}

void to_json(nlohmann::json& j, finite_ring_spec const& r)
{
    auto arr = nlohmann::json::array();
    for (auto const& f : r.factors) {
        if (auto const* z = std::get_if<zmod_pk>(&f)) {
            arr.push_back({{"kind", "zmodpk"}, {"p", z->p}, {"k", z->k}});
        } else {
            auto const& q = std::get<poly_quot>(f);
            arr.push_back({{"kind", "polyquot"}, {"p", q.p}, {"h", q.h.coeffs()}});
        }
    }
    j = nlohmann::json{{"factors", arr}};
}

finite_ring_spec ring_spec_from_json(nlohmann::json const& j)
{
    try {
        if (j.contains("zmod"))
            return finite_ring_spec::zmod(j.at("zmod").get<std::uint64_t>());
        finite_ring_spec r;
        for (auto const& f : j.at("factors")) {
            auto const kind = f.at("kind").get<std::string>();
            auto const p = f.at("p").get<std::uint32_t>();
            if (kind == "zmodpk") {
                r.factors.push_back(zmod_pk{p, f.at("k").get<unsigned>()});
            } else if (kind == "polyquot") {
                if (p < 2)
                    fail(error_kind::invalid_input, "F_p[x]/(h) factor needs p prime");
                r.factors.push_back(poly_quot{p, mod_poly(p, f.at("h").get<std::vector<std::uint32_t>>())});
            } else {
                fail(error_kind::parse, "unknown ring factor kind \"" + kind + "\"");
            }
        }
        if (r.factors.empty())
            fail(error_kind::parse, "ring spec has no factors");
        for (auto const& f : r.factors)
            validate_factor(f);
        return r;
    } catch (nlohmann::json::exception const& e) {
        fail(error_kind::parse, std::string("bad ring JSON: ") + e.what());
    }
}

/* finite_ring */

namespace {

struct factor_tables {
    std::uint32_t n;
    std::uint32_t one;
    std::vector<std::uint32_t> add, mul;
};

factor_tables tabulate(local_factor const& f)
{
    factor_tables t;
    t.n = std::uint32_t(factor_order(f));
    t.add.resize(std::size_t(t.n) * t.n);
    t.mul.resize(std::size_t(t.n) * t.n);
    if (std::holds_alternative<zmod_pk>(f)) {
        t.one = 1 % t.n;
        for (std::uint32_t x = 0; x < t.n; ++x)
            for (std::uint32_t y = 0; y < t.n; ++y) {
                t.add[x * t.n + y] = (x + y) % t.n;
                t.mul[x * t.n + y] = std::uint32_t(std::uint64_t(x) * y % t.n);
            }
        return t;
    }
    auto const& q = std::get<poly_quot>(f);
    unsigned const deg = unsigned(q.h.degree());
    auto decode = [&](std::uint32_t x) {
        std::vector<std::uint32_t> c(deg);
        for (unsigned i = 0; i < deg; ++i, x /= q.p)
            c[i] = x % q.p;
        return mod_poly(q.p, c);
    };
    auto encode = [&](mod_poly const& m) {
        std::uint32_t x = 0;
        for (unsigned i = deg; i-- > 0;)
            x = x * q.p + m.coeff(i);
        return x;
    };
    std::vector<mod_poly> elems;
    for (std::uint32_t x = 0; x < t.n; ++x)
        elems.push_back(decode(x));
    t.one = encode(mod_poly::one(q.p) % q.h);
    for (std::uint32_t x = 0; x < t.n; ++x)
        for (std::uint32_t y = 0; y < t.n; ++y) {
            t.add[x * t.n + y] = encode(elems[x] + elems[y]);
            t.mul[x * t.n + y] = encode(elems[x] * elems[y] % q.h);
        }
    return t;
}

}  // namespace

finite_ring::finite_ring(finite_ring_spec spec) : spec_(std::move(spec))
{
    if (spec_.factors.empty())
        fail(error_kind::invalid_input, "ring spec has no factors");
    for (auto const& f : spec_.factors)
        validate_factor(f);
    std::uint64_t const order = spec_.order();
    if (order > max_tabulated_order)
        fail(error_kind::resource, "ring " + spec_.describe() + " has order " + std::to_string(order) +
                                       ", above the tabulation limit " + std::to_string(max_tabulated_order));
    n_ = std::uint32_t(order);

    std::vector<factor_tables> ft;
    for (auto const& f : spec_.factors) {
        ft.push_back(tabulate(f));
        sizes_.push_back(ft.back().n);
    }

    // mixed radix, first factor least significant
    auto split = [&](std::uint32_t x) {
        std::vector<std::uint32_t> c(ft.size());
        for (std::size_t i = 0; i < ft.size(); ++i) {
            c[i] = x % ft[i].n;
            x /= ft[i].n;
        }
        return c;
    };
    auto join = [&](std::vector<std::uint32_t> const& c) {
        std::uint32_t x = 0;
        for (std::size_t i = ft.size(); i-- > 0;)
            x = x * ft[i].n + c[i];
        return x;
    };

    std::vector<std::vector<std::uint32_t>> comps(n_);
    for (std::uint32_t x = 0; x < n_; ++x)
        comps[x] = split(x);

    std::vector<std::uint32_t> one_c;
    for (auto const& t : ft)
        one_c.push_back(t.one);
    one_ = {join(one_c)};

    add_.resize(std::size_t(n_) * n_);
    mul_.resize(std::size_t(n_) * n_);
    std::vector<std::uint32_t> s(ft.size()), m(ft.size());
    for (std::uint32_t x = 0; x < n_; ++x)
        for (std::uint32_t y = 0; y < n_; ++y) {
            for (std::size_t i = 0; i < ft.size(); ++i) {
                s[i] = ft[i].add[comps[x][i] * ft[i].n + comps[y][i]];
                m[i] = ft[i].mul[comps[x][i] * ft[i].n + comps[y][i]];
            }
            add_[x * n_ + y] = join(s);
            mul_[x * n_ + y] = join(m);
        }

    neg_.assign(n_, 0);
    unit_.assign(n_, 0);
    for (std::uint32_t x = 0; x < n_; ++x)
        for (std::uint32_t y = 0; y < n_; ++y) {
            if (add_[x * n_ + y] == 0)
                neg_[x] = y;
            if (mul_[x * n_ + y] == one_.index)
                unit_[x] = 1;
        }
}

std::vector<std::uint32_t> finite_ring::components(ring_element a) const
{
    std::vector<std::uint32_t> c;
    std::uint32_t x = a.index;
    for (auto n : sizes_) {
        c.push_back(x % n);
        x /= n;
    }
    return c;
}

std::string finite_ring::to_string(ring_element a) const
{
    auto const c = components(a);
    std::ostringstream os;
    if (c.size() > 1)
        os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            os << ", ";
        if (auto const* q = std::get_if<poly_quot>(&spec_.factors[i])) {
            std::vector<std::uint32_t> coeffs;
            for (std::uint32_t x = c[i]; x; x /= q->p)
                coeffs.push_back(x % q->p);
            os << mod_poly(q->p, coeffs).to_string();
        } else {
            os << c[i];
        }
    }
    if (c.size() > 1)
        os << ')';
    return os.str();
}

/* matrices */

mat2 identity(finite_ring const& r)
{
    return {r.one(), r.zero(), r.zero(), r.one()};
}

mat2 elementary_12(finite_ring const& r, ring_element x)
{
    return {r.one(), x, r.zero(), r.one()};
}

mat2 elementary_21(finite_ring const& r, ring_element x)
{
    return {r.one(), r.zero(), x, r.one()};
}

mat2 mul(finite_ring const& r, mat2 const& x, mat2 const& y)
{
    return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
            r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

mat2 inverse(finite_ring const& r, mat2 const& x)
{
    return {x.d, r.neg(x.b), r.neg(x.c), x.a};
}

ring_element det(finite_ring const& r, mat2 const& x)
{
    return r.sub(r.mul(x.a, x.d), r.mul(x.b, x.c));
}

std::uint64_t code(finite_ring const& r, mat2 const& x)
{
    std::uint64_t const n = r.size();
    return ((std::uint64_t(x.a.index) * n + x.b.index) * n + x.c.index) * n + x.d.index;
}

namespace {

void check_budget(finite_ring const& r, oracle_budget const& budget)
{
    if (r.size() > budget.max_ring_order)
        fail(error_kind::resource,
             "ring " + r.spec().describe() + " has order " + std::to_string(r.size()) +
                 ", above the enumeration cap " + std::to_string(budget.max_ring_order) + " (the scan visits |R|^4 = " +
                 std::to_string(std::uint64_t(r.size()) * r.size() * r.size() * r.size()) +
                 " matrices); raise the cap to proceed");
}

/* Dense index over all |R|^4 matrix codes; |R| is small enough that this
 * beats hashing. */
class code_index {
  public:
    static constexpr std::uint64_t max_slots = std::uint64_t(1) << 26;

    explicit code_index(finite_ring const& r) : r_(r)
    {
        std::uint64_t const n = r.size();
        if (n * n * n * n > max_slots)
            fail(error_kind::resource, "ring " + r.spec().describe() + " is too large for matrix group scans");
        slot_.assign(n * n * n * n, -1);
    }
    std::int32_t& operator[](mat2 const& m) { return slot_[code(r_, m)]; }
    std::int32_t at(mat2 const& m) const { return slot_[code(r_, m)]; }

  private:
    finite_ring const& r_;
    std::vector<std::int32_t> slot_;
};

// closure of {identity} under right multiplication by gens; sorted
std::vector<mat2> closure(finite_ring const& r, std::vector<mat2> const& gens)
{
    code_index seen(r);
    std::vector<mat2> out{identity(r)};
    seen[out.front()] = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        mat2 const x = out[i];
        for (auto const& g : gens) {
            mat2 const y = mul(r, x, g);
            auto& s = seen[y];
            if (s < 0) {
                s = std::int32_t(out.size());
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<mat2> enumerate_sl2_direct(finite_ring const& r, oracle_budget const& budget)
{
    check_budget(r, budget);
    std::uint32_t const n = r.size();
    std::vector<mat2> out;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t d = 0; d < n; ++d) {
                    mat2 const m{{a}, {b}, {c}, {d}};
                    if (det(r, m) == r.one())
                        out.push_back(m);
                }
    return out;
}

std::vector<mat2> generate_from_elementary(finite_ring const& r, oracle_budget const& budget)
{
    check_budget(r, budget);
    std::vector<mat2> gens;
    for (std::uint32_t x = 1; x < r.size(); ++x) {
        gens.push_back(elementary_12(r, {x}));
        gens.push_back(elementary_21(r, {x}));
    }
    return closure(r, gens);
}

std::vector<mat2> commutator_subgroup(finite_ring const& r, std::span<const mat2> group)
{
    code_index is_comm(r);
    std::vector<mat2> comms;
    for (auto const& g : group) {
        mat2 const gi = inverse(r, g);
        for (auto const& h : group) {
            mat2 const c = mul(r, mul(r, g, h), mul(r, gi, inverse(r, h)));
            auto& s = is_comm[c];
            if (s < 0) {
                s = 0;
                comms.push_back(c);
            }
        }
    }
    return closure(r, comms);
}

abelian_group abelianization(finite_ring const& r, std::span<const mat2> group)
{
    if (group.empty())
        fail(error_kind::invalid_input, "abelianization of an empty set");
    auto const h = commutator_subgroup(r, group);

    code_index coset(r);
    std::vector<mat2> reps;
    for (auto const& g : group) {
        if (coset.at(g) >= 0)
            continue;
        auto const id = std::int32_t(reps.size());
        reps.push_back(g);
        for (auto const& x : h)
            coset[mul(r, g, x)] = id;
    }

    std::int32_t const trivial = coset.at(identity(r));
    std::map<std::uint64_t, std::uint64_t> profile;
    for (auto const& rep : reps) {
        std::uint64_t ord = 1;
        mat2 x = rep;
        while (coset.at(x) != trivial) {
            x = mul(r, x, rep);
            if (coset.at(x) < 0)
                fail(error_kind::invalid_input, "abelianization: input is not closed under multiplication");
            ++ord;
        }
        ++profile[ord];
    }
    return from_order_statistics(profile);
}

bool is_local(finite_ring const& r)
{
    std::vector<ring_element> m;
    for (std::uint32_t x = 0; x < r.size(); ++x)
        if (!r.is_unit({x}))
            m.push_back({x});
    for (auto a : m)
        for (auto b : m)
            if (r.is_unit(r.add(a, b)))
                return false;
    return true;
}

abelian_group local_ring_formula(finite_ring const& r)
{
    if (!is_local(r))
        fail(error_kind::invalid_input, "ring " + r.spec().describe() + " is not local: its non-units are not closed under addition");

    std::vector<ring_element> m;
    for (std::uint32_t x = 0; x < r.size(); ++x)
        if (!r.is_unit({x}))
            m.push_back({x});
    std::uint64_t const residue = r.size() / m.size();
    if (residue == 3)
        return abelian_group::cyclic(3);
    if (residue != 2)
        return {};

    // m^2 as the additive span of all products
    std::vector<char> in_m2(r.size(), 0);
    std::vector<ring_element> m2{r.zero()};
    in_m2[0] = 1;
    for (auto a : m)
        for (auto b : m) {
            auto const ab = r.mul(a, b);
            if (!in_m2[ab.index]) {
                in_m2[ab.index] = 1;
                m2.push_back(ab);
            }
        }
    for (std::size_t i = 0; i < m2.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            auto const s = r.add(m2[i], m2[j]);
            if (!in_m2[s.index]) {
                in_m2[s.index] = 1;
                m2.push_back(s);
            }
        }

    // additive orders in A / m^2, one tally per coset
    std::map<std::uint64_t, std::uint64_t> profile;
    for (std::uint32_t x = 0; x < r.size(); ++x) {
        std::uint64_t k = 1;
        for (ring_element y{x}; !in_m2[y.index]; y = r.add(y, {x}))
            ++k;
        ++profile[k];
    }
    for (auto& [ord, c] : profile)
        c /= m2.size();
    return from_order_statistics(profile);
}

}  // namespace sl2ab
