#include "sl2ab/polyarith.hpp"

#include <algorithm>
#include <sstream>

#include "sl2ab/error.hpp"

namespace sl2ab {

namespace {

template <typename C>
std::string render(std::vector<C> const& c, std::string_view var, auto const& is_neg, auto const& abs_str)
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        bool const neg = is_neg(c[i]);
        std::string const mag = abs_str(c[i]);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        if (i == 0 || mag != "1")
            os << mag;
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return std::uint32_t(std::uint64_t(a) * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat; p is prime
    std::uint32_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1)
            r = mulmod(r, b, p);
        b = mulmod(b, b, p);
    }
    return r;
}

}  // namespace

/* int_poly */

int_poly::int_poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

int_poly::int_poly(std::initializer_list<long> coeffs)
{
    for (long v : coeffs)
        c_.emplace_back(v);
    normalize();
}

int_poly int_poly::monomial(unsigned deg, mpz_class c)
{
    std::vector<mpz_class> v(deg + 1, 0);
    v[deg] = std::move(c);
    return int_poly(std::move(v));
}

void int_poly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

int_poly int_poly::derivative() const
{
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * mpz_class(static_cast<unsigned long>(i)));
    return int_poly(std::move(d));
}

std::string int_poly::to_string(std::string_view var) const
{
    return render(c_, var, [](mpz_class const& v) { return sgn(v) < 0; },
                  [](mpz_class const& v) { return mpz_class(abs(v)).get_str(); });
}

int_poly operator+(int_poly const& a, int_poly const& b)
{
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return int_poly(std::move(c));
}

int_poly operator-(int_poly const& a, int_poly const& b)
{
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return int_poly(std::move(c));
}

int_poly operator*(int_poly const& a, int_poly const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return int_poly(std::move(c));
}

std::pair<int_poly, int_poly> divmod_monic(int_poly const& a, int_poly const& b)
{
    if (!b.is_monic())
        fail(error_kind::invalid_input, "divmod_monic: divisor must be monic");
    std::vector<mpz_class> r = a.coeffs();
    int const db = b.degree();
    if (a.degree() < db)
        return {int_poly(), a};
    std::vector<mpz_class> q(a.degree() - db + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        mpz_class const t = r[i];
        q[i - db] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b.coeff(j);
    }
    return {int_poly(std::move(q)), int_poly(std::move(r))};
}

/* mod_poly */

mod_poly::mod_poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (p < 2)
        fail(error_kind::invalid_input, "mod_poly: modulus must be prime");
    for (auto& v : c_)
        v %= p;
    normalize();
}

mod_poly mod_poly::reduce(int_poly const& f, std::uint32_t p)
{
    std::vector<std::uint32_t> c;
    mpz_class r;
    for (auto const& v : f.coeffs()) {
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        c.push_back(std::uint32_t(r.get_ui()));
    }
    return mod_poly(p, std::move(c));
}

void mod_poly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mod_poly mod_poly::derivative() const
{
    std::vector<std::uint32_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(mulmod(c_[i], std::uint32_t(i % p_), p_));
    return mod_poly(p_, std::move(d));
}

mod_poly mod_poly::monic() const
{
    if (is_zero())
        return *this;
    std::uint32_t const li = inv_mod(lead(), p_);
    std::vector<std::uint32_t> c(c_);
    for (auto& v : c)
        v = mulmod(v, li, p_);
    return mod_poly(p_, std::move(c));
}

std::uint32_t mod_poly::eval(std::uint32_t x) const
{
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = (mulmod(r, x % p_, p_) + c_[i]) % p_;
    return r;
}

int_poly mod_poly::lift() const
{
    std::vector<mpz_class> c;
    for (auto v : c_)
        c.emplace_back(static_cast<unsigned long>(v));
    return int_poly(std::move(c));
}

std::string mod_poly::to_string(std::string_view var) const
{
    return render(c_, var, [](std::uint32_t) { return false; },
                  [](std::uint32_t v) { return std::to_string(v); });
}

mod_poly operator+(mod_poly const& a, mod_poly const& b)
{
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    return mod_poly(a.p_, std::move(c));
}

mod_poly operator-(mod_poly const& a, mod_poly const& b)
{
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    return mod_poly(a.p_, std::move(c));
}

mod_poly operator*(mod_poly const& a, mod_poly const& b)
{
    if (a.is_zero() || b.is_zero())
        return mod_poly(a.p_, {});
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % a.p_;
    return mod_poly(a.p_, std::vector<std::uint32_t>(c.begin(), c.end()));
}

bool operator<(mod_poly const& a, mod_poly const& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::pair<mod_poly, mod_poly> divmod(mod_poly const& a, mod_poly const& b)
{
    if (b.is_zero())
        fail(error_kind::invalid_input, "mod_poly division by zero");
    std::uint32_t const p = a.modulus();
    std::vector<std::uint32_t> r = a.coeffs();
    int const db = b.degree();
    if (a.degree() < db)
        return {mod_poly(p, {}), a};
    std::uint32_t const li = inv_mod(b.lead(), p);
    std::vector<std::uint32_t> q(a.degree() - db + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        std::uint32_t const t = mulmod(r[i], li, p);
        q[i - db] = t;
        if (!t)
            continue;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = (r[i - db + j] + p - mulmod(t, b.coeff(j), p)) % p;
    }
    return {mod_poly(p, std::move(q)), mod_poly(p, std::move(r))};
}

mod_poly gcd(mod_poly a, mod_poly b)
{
    while (!b.is_zero()) {
        mod_poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

mod_poly pow_mod(mod_poly base, std::uint64_t e, mod_poly const& m)
{
    mod_poly r = mod_poly::one(m.modulus()) % m;
    base = base % m;
    for (; e; e >>= 1) {
        if (e & 1)
            r = r * base % m;
        base = base * base % m;
    }
    return r;
}

namespace {

// f' = 0 means f(x) = g(x^p) = g(x)^p over F_p
mod_poly pth_root(mod_poly const& f)
{
    std::uint32_t const p = f.modulus();
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c.push_back(f.coeffs()[i]);
    return mod_poly(p, std::move(c));
}

mod_factorization squarefree_decomposition(mod_poly const& f)
{
    mod_factorization out;
    std::uint32_t const p = f.modulus();
    mod_poly c = gcd(f, f.derivative());
    mod_poly w = f / c;
    for (unsigned i = 1; !w.is_one(); ++i) {
        mod_poly y = gcd(w, c);
        mod_poly fac = w / y;
        if (!fac.is_one())
            out.emplace_back(fac, i);
        w = y;
        c = c / y;
    }
    if (!c.is_one())
        for (auto& [g, m] : squarefree_decomposition(pth_root(c)))
            out.emplace_back(std::move(g), m * p);
    return out;
}

// monic irreducible factors of a monic squarefree g
std::vector<mod_poly> split_squarefree(mod_poly g)
{
    std::uint32_t const p = g.modulus();
    std::vector<mod_poly> out;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        std::vector<std::uint32_t> c(d + 1, 0);
        c[d] = 1;
        for (;;) {
            mod_poly h(p, c);
            auto [q, r] = divmod(g, h);
            if (r.is_zero()) {
                out.push_back(h);
                g = q;
                if (2 * d > g.degree())
                    break;
            }
            // next monic candidate of degree d
            int k = 0;
            while (k < d && ++c[k] == p)
                c[k++] = 0;
            if (k == d)
                break;
        }
    }
    if (g.degree() >= 1)
        out.push_back(g);
    return out;
}

}  // namespace

mod_factorization factor_mod_p(mod_poly const& f)
{
    if (f.degree() < 1 || !f.is_monic())
        fail(error_kind::invalid_input, "factor_mod_p: input must be monic of degree >= 1, got " + f.to_string());
    if (f.modulus() > 7 || !is_prime(f.modulus()))
        fail(error_kind::invalid_input, "factor_mod_p: modulus must be a prime <= 7");

    mod_factorization out;
    for (auto const& [part, mult] : squarefree_decomposition(f))
        for (auto& g : split_squarefree(part))
            out.emplace_back(std::move(g), mult);
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    return out;
}

bool is_irreducible_mod_p(mod_poly const& f)
{
    if (f.degree() < 1)
        return false;
    mod_poly const g = f.monic();
    std::uint32_t const p = g.modulus();
    auto const n = std::uint64_t(g.degree());
    mod_poly const x = mod_poly::x(p);
    // x^(p^k) mod g, k = 0..n
    std::vector<mod_poly> frob{x % g};
    for (std::uint64_t k = 1; k <= n; ++k)
        frob.push_back(pow_mod(frob.back(), p, g));
    if (!(frob[n] - x % g).is_zero())
        return false;
    for (auto const& [r, e] : factor_integer(n))
        if (!gcd(frob[n / r] - x, g).is_one())
            return false;
    return true;
}

namespace {

// polynomials over Q, used only for Sturm chains
using qpoly = std::vector<mpq_class>;

void trim(qpoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

qpoly qrem(qpoly a, qpoly const& b)
{
    trim(a);
    int const db = int(b.size()) - 1;
    while (int(a.size()) - 1 >= db && !a.empty()) {
        int const da = int(a.size()) - 1;
        mpq_class const t = a.back() / b.back();
        for (int j = 0; j <= db; ++j)
            a[da - db + j] -= t * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

qpoly qquo(qpoly a, qpoly const& b)
{
    int const db = int(b.size()) - 1;
    int const da = int(a.size()) - 1;
    if (da < db)
        return {};
    qpoly q(da - db + 1);
    for (int i = da; i >= db; --i) {
        mpq_class const t = a[i] / b.back();
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] -= t * b[j];
    }
    trim(q);
    return q;
}

qpoly qderiv(qpoly const& a)
{
    qpoly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(a[i] * mpq_class(static_cast<unsigned long>(i)));
    trim(d);
    return d;
}

int sign_changes(std::vector<int> const& s)
{
    int n = 0, last = 0;
    for (int v : s) {
        if (!v)
            continue;
        if (last && v != last)
            ++n;
        last = v;
    }
    return n;
}

}  // namespace

unsigned sturm_real_roots(int_poly const& f)
{
    if (f.is_zero())
        fail(error_kind::invalid_input, "sturm_real_roots: zero polynomial");
    if (f.degree() == 0)
        return 0;

    qpoly a;
    for (auto const& c : f.coeffs())
        a.emplace_back(c);

    // squarefree part a / gcd(a, a')
    qpoly g = a, h = qderiv(a);
    while (!h.empty()) {
        qpoly r = qrem(g, h);
        g = std::move(h);
        h = std::move(r);
    }
    if (g.size() > 1)
        a = qquo(a, g);

    std::vector<qpoly> chain{a, qderiv(a)};
    while (chain.back().size() > 1) {
        qpoly r = qrem(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        chain.push_back(std::move(r));
    }

    std::vector<int> at_neg, at_pos;
    for (auto const& p : chain) {
        int const s = sgn(p.back());
        int const deg = int(p.size()) - 1;
        at_pos.push_back(s);
        at_neg.push_back(deg % 2 ? -s : s);
    }
    return unsigned(sign_changes(at_neg) - sign_changes(at_pos));
}

int_poly cyclotomic_polynomial(std::uint64_t n)
{
    if (n == 0)
        fail(error_kind::invalid_input, "cyclotomic_polynomial: N must be positive");
    std::vector<std::pair<std::uint64_t, int_poly>> phi;
    for (std::uint64_t d : divisors(n)) {
        int_poly p = int_poly::monomial(unsigned(d)) - int_poly{1};
        for (auto const& [e, pe] : phi)
            if (d % e == 0)
                p = divmod_monic(p, pe).first;
        phi.emplace_back(d, std::move(p));
    }
    return phi.back().second;
}

std::optional<bool> has_integer_root(int_poly const& f)
{
    if (f.is_zero())
        return true;
    mpz_class const c0 = abs(f.coeff(0));
    if (c0 == 0)
        return true;
    if (c0 > mpz_class("1000000000000"))
        return std::nullopt;
    auto eval = [&](long long x) {
        mpz_class r = 0;
        for (std::size_t i = f.coeffs().size(); i-- > 0;)
            r = r * mpz_class(static_cast<long>(x)) + f.coeffs()[i];
        return r;
    };
    for (std::uint64_t d : divisors(c0.get_ui()))
        if (eval((long long)d) == 0 || eval(-(long long)d) == 0)
            return true;
    return false;
}

int_poly parse_int_poly(std::string_view text)
{
    std::string s(text);
    for (std::size_t pos; (pos = s.find("\xE2\x88\x92")) != std::string::npos;)
        s.replace(pos, 3, "-");
    std::vector<mpz_class> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto const b = tok.find_first_not_of(" \t");
        auto const e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            fail(error_kind::parse, "empty coefficient in polynomial \"" + std::string(text) + "\"");
        tok = tok.substr(b, e - b + 1);
        if (tok.front() == '+')
            tok.erase(0, 1);
        mpz_class v;
        if (tok.empty() || v.set_str(tok, 10) != 0)
            fail(error_kind::parse, "bad coefficient \"" + tok + "\" in polynomial \"" + std::string(text) + "\"");
        c.push_back(v);
    }
    if (c.empty())
        fail(error_kind::parse, "empty polynomial");
    return int_poly(std::move(c));
}

}  // namespace sl2ab
