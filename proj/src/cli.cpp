#include "sl2ab/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2ab/oracle.hpp"
#include "sl2ab/theorems.hpp"
#include "sl2ab/verify.hpp"

namespace sl2ab::cli {

using nlohmann::json;

int exit_code_for(error_kind kind)
{
    switch (kind) {
    case error_kind::precondition:
    case error_kind::not_covered: return theorem_not_applicable;
    case error_kind::not_p_maximal: return not_p_maximal;
    case error_kind::resource: return budget_exceeded;
    case error_kind::invalid_input:
    case error_kind::invalid_profile:
    case error_kind::parse: return bad_input;
    }
    return bad_input;
}

namespace {

struct compute_opts {
    bool rational = false;
    std::optional<std::int64_t> quadratic;
    std::optional<std::uint64_t> cyclotomic;
    std::optional<std::string> poly;
    std::optional<std::uint64_t> function_field;
    std::optional<std::string> field_file;
    std::vector<unsigned> galois;
    std::vector<std::uint64_t> invert;
    std::vector<std::string> remove;
    unsigned extra = 0;
    bool as_json = false;
};

struct oracle_opts {
    std::optional<std::uint64_t> zmod;
    std::optional<std::string> ring_file;
    bool compare = false;
    std::uint64_t cap = oracle_budget{}.max_ring_order;
    bool as_json = false;
};

struct table_opts {
    std::string kind;
    std::int64_t min = 0;
    std::int64_t max = 0;
    bool as_json = false;
};

json read_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        fail(error_kind::parse, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (json::exception const& e) {
        fail(error_kind::parse, path + ": " + e.what());
    }
}

void emit_json(std::ostream& out, json const& j)
{
    out << j.dump(2) << '\n';
}

/* compute */

void parse_removals(std::vector<std::string> const& items, s_set& s)
{
    for (auto const& item : items) {
        auto const colon = item.find(':');
        std::size_t idx = 0;
        unsigned long p = 0;
        try {
            if (colon == std::string::npos)
                throw std::invalid_argument(item);
            std::size_t used = 0;
            p = std::stoul(item.substr(0, colon), &used);
            if (used != colon)
                throw std::invalid_argument(item);
            std::string const rest = item.substr(colon + 1);
            idx = std::stoul(rest, &used);
            if (used != rest.size() || rest.front() == '-')
                throw std::invalid_argument(item);
        } catch (std::exception const&) {
            fail(error_kind::parse, "--remove-prime expects p:index with p in {2, 3}, got \"" + item + "\"");
        }
        if (p == 2)
            s.removed_above_2.insert(idx);
        else if (p == 3)
            s.removed_above_3.insert(idx);
        else
            fail(error_kind::parse, "--remove-prime only addresses primes above 2 and 3; use --extra-s-primes "
                                    "for others");
    }
}

std::vector<std::string> poly_warnings(int_poly const& f)
{
    std::vector<std::string> w;
    if (f.degree() <= 1)
        return w;
    auto const root = has_integer_root(f);
    if (root && *root)
        fail(error_kind::invalid_input, f.to_string() + " has an integer root, so it is reducible over Q");
    for (std::uint32_t p = 2; p <= 19; ++p) {
        if (!is_prime(p))
            continue;
        if (is_irreducible_mod_p(mod_poly::reduce(f, p)))
            return w;  // irreducible mod p and monic: irreducible over Q
    }
    w.push_back("irreducibility of " + f.to_string() + " over Q is user-asserted (no certificate mod p <= 19)");
    return w;
}

void print_human(std::ostream& out, arithmetic_ring_spec const& spec, sl2ab_result const& r,
                 std::vector<std::string> const& warnings)
{
    auto row = [&](std::string const& k) -> std::ostream& { return out << std::left << std::setw(12) << k << ": "; };
    row("field") << describe(spec.field) << '\n';
    if (r.sig)
        row("signature") << "r1=" << r.sig->r1 << " r2=" << r.sig->r2 << '\n';
    if (r.s_size > 0)
        row("|S|") << r.s_size << " (" << (r.s_size - spec.s.finite_count()) << " infinite, "
               << spec.s.finite_count() << " finite, of which " << spec.s.other_finite_primes
               << " not above 2 or 3)\n";

    // splitting tables with the per-prime breakdown
    // function-field primes are indexed as one list
    bool const flat = is_function_field(spec.field);
    if (flat)
        out << "degree-one primes of the polynomial ring:\n";
    std::size_t ci = 0;
    for (auto const& sd : r.splittings) {
        if (!flat)
            out << "primes above " << sd.p << ":\n";
        for (std::size_t i = 0; i < sd.primes.size(); ++i) {
            auto const& q = sd.primes[i];
            out << "  [" << (flat ? ci : i) << "] " << std::left << std::setw(22) << q.label << " e=" << q.e << " f=" << q.f;
            if (r.taken != route::known_case && ci < r.contributions.size()) {
                auto const& c = r.contributions[ci++];
                out << (c.in_s ? "  in S     " : "  not in S ") << "-> " << c.summand_string();
            }
            out << '\n';
        }
    }
    row("route") << to_string(r.taken) << '\n';
    row("SL2(A)^ab") << r.group.to_string() << '\n';
    row("primary") << r.group.primary_string() << '\n';
    for (auto const& w : warnings)
        row("warning") << w << '\n';
}

int do_compute(compute_opts const& o, std::ostream& out)
{
    int const chosen = int(o.rational) + o.quadratic.has_value() + o.cyclotomic.has_value() + o.poly.has_value() +
                       o.function_field.has_value() + o.field_file.has_value() + !o.galois.empty();
    if (chosen != 1)
        fail(error_kind::parse, "choose exactly one of --rational, --quadratic, --cyclotomic, --poly, "
                                "--function-field, --field, --galois");

    if (!o.galois.empty()) {
        if (o.galois.size() != 5)
            fail(error_kind::parse, "--galois expects n,e2,f2,e3,f3");
        if (!o.invert.empty() || !o.remove.empty() || o.extra)
            fail(error_kind::parse, "--galois computes SL2(O_K)^ab; S options do not apply");
        auto const r = galois_result(o.galois[0], o.galois[1], o.galois[2], o.galois[3], o.galois[4]);
        field::user_supplied u;
        u.degree = o.galois[0];
        u.split2 = r.splittings[0];
        u.split3 = r.splittings[1];
        arithmetic_ring_spec const spec{u, {}};
        if (o.as_json) {
            json j = r;
            j["input"] = {{"kind", "galois"}, {"n", o.galois[0]}, {"e2", o.galois[1]}, {"f2", o.galois[2]},
                          {"e3", o.galois[3]}, {"f3", o.galois[4]}};
            j["warnings"] = json::array();
            emit_json(out, j);
        } else {
            print_human(out, spec, r, {});
        }
        return ok;
    }

    arithmetic_ring_spec spec;
    std::vector<std::string> warnings;
    if (o.rational)
        spec.field = field::rational{};
    else if (o.quadratic)
        spec.field = field::quadratic{*o.quadratic};
    else if (o.cyclotomic)
        spec.field = field::cyclotomic{*o.cyclotomic};
    else if (o.function_field)
        spec.field = field::rational_function{*o.function_field};
    else if (o.field_file)
        spec.field = field_spec_from_json(read_json_file(*o.field_file));
    else
        spec.field = field::general_poly{parse_int_poly(*o.poly)};
    validate(spec.field);
    if (auto const* g = std::get_if<field::general_poly>(&spec.field))
        warnings = poly_warnings(g->f);

    if (!o.invert.empty()) {
        if (!std::holds_alternative<field::rational>(spec.field))
            fail(error_kind::parse, "--invert applies to --rational; use --remove-prime for other fields");
        std::set<std::uint64_t> distinct(o.invert.begin(), o.invert.end());
        for (auto p : distinct) {
            if (!is_prime(p))
                fail(error_kind::invalid_input, "--invert expects primes, got " + std::to_string(p));
            if (p == 2)
                spec.s.removed_above_2.insert(0);
            else if (p == 3)
                spec.s.removed_above_3.insert(0);
            else
                ++spec.s.other_finite_primes;
        }
    }
    parse_removals(o.remove, spec.s);
    spec.s.other_finite_primes += o.extra;

    auto const r = compute(spec);
    int code = ok;
    if (r.taken == route::known_case) {
        // finite units: the structure results do not apply, report the recorded value
        warnings.push_back("the ring has finitely many units (|S| = " + std::to_string(r.s_size) +
                           " < 2); the structure results need |S| >= 2. Reporting the recorded value.");
        code = theorem_not_applicable;
    }

    if (o.as_json) {
        json j = r;
        to_json(j["input"], spec.field);
        j["warnings"] = warnings;
        emit_json(out, j);
    } else {
        print_human(out, spec, r, warnings);
    }
    return code;
}

/* oracle */

int do_oracle(oracle_opts const& o, std::ostream& out)
{
    if (o.zmod.has_value() == o.ring_file.has_value())
        fail(error_kind::parse, "choose exactly one of --zmod, --ring");
    finite_ring_spec const spec =
        o.zmod ? finite_ring_spec::zmod(*o.zmod) : ring_spec_from_json(read_json_file(*o.ring_file));
    oracle_budget const budget{o.cap};
    if (spec.order() > budget.max_ring_order)
        fail(error_kind::resource, "ring " + spec.describe() + " has order " + std::to_string(spec.order()) +
                                       ", above the enumeration cap " + std::to_string(budget.max_ring_order) +
                                       "; raise it with --cap");
    finite_ring const ring(spec);

    auto const group = enumerate_sl2_direct(ring, budget);
    auto const comm = commutator_subgroup(ring, group);
    auto const ab = abelianization(ring, group);
    bool const local = is_local(ring);

    json j{{"ring", spec},
           {"ring_order", ring.size()},
           {"local", local},
           {"sl2_order", group.size()},
           {"commutator_order", comm.size()},
           {"group", ab}};

    int code = ok;
    std::string comparison;
    if (o.compare) {
        // each factor must be local; SL_2 of a product is the product of the SL_2's
        abelian_group formula;
        bool all_local = true;
        for (auto const& f : spec.factors) {
            finite_ring const fr(finite_ring_spec{{f}});
            if (!is_local(fr)) {
                all_local = false;
                break;
            }
            formula = direct_sum(formula, local_ring_formula(fr));
        }
        if (!all_local)
            fail(error_kind::invalid_input, "--compare needs every factor of " + spec.describe() + " to be local");
        bool const generated_equal = generate_from_elementary(ring, budget) == group;
        bool const matches = formula == ab;
        comparison = std::string(matches ? "matches" : "DIFFERS FROM") + " the local-ring formula " +
                     (spec.factors.size() > 1 ? "summed over factors " : "") + "(" + formula.to_string() + ")";
        j["comparison"] = {{"formula", formula},
                           {"matches", matches},
                           {"elementary_generation_equal", generated_equal}};
        if (!matches || !generated_equal)
            code = verification_failed;
        if (!generated_equal)
            comparison += "; elementary matrices do NOT generate SL_2";
    }

    if (o.as_json) {
        emit_json(out, j);
        return code;
    }
    out << "ring        : " << spec.describe() << " (order " << ring.size() << (local ? ", local" : "") << ")\n"
        << "|SL2(R)|    : " << group.size() << '\n'
        << "|[G,G]|     : " << comm.size() << '\n'
        << "SL2(R)^ab   : " << ab.to_string() << '\n'
        << "primary     : " << ab.primary_string() << '\n';
    if (o.compare)
        out << "comparison  : " << comparison << '\n';
    return code;
}

/* tables */

int do_table(table_opts const& o, std::ostream& out)
{
    json rows = json::array();
    json skipped = json::array();
    std::ostringstream text;

    if (o.kind == "quadratic") {
        std::int64_t const lo = o.min ? o.min : 2, hi = o.max ? o.max : 100;
        if (lo <= 1 || lo > hi)
            fail(error_kind::parse, "table quadratic needs 1 < min <= max");
        text << std::setw(8) << "d" << std::setw(10) << "d mod 24" << "  SL2(O_d)^ab\n";
        for (std::int64_t d = lo; d <= hi; ++d) {
            if (!is_squarefree(d)) {
                skipped.push_back(d);
                continue;
            }
            auto const g = sl2ab_quadratic_positive(d);
            rows.push_back({{"d", d}, {"d_mod_24", d % 24}, {"group", g}});
            text << std::setw(8) << d << std::setw(10) << d % 24 << "  " << g.to_string() << "  ["
                 << g.primary_string() << "]\n";
        }
        if (!skipped.empty())
            text << "(skipped " << skipped.size() << " non-squarefree d)\n";
    } else if (o.kind == "cyclotomic") {
        std::int64_t const lo = o.min ? o.min : 1, hi = o.max ? o.max : 60;
        if (lo < 1 || lo > hi)
            fail(error_kind::parse, "table cyclotomic needs 1 <= min <= max");
        text << std::setw(6) << "N" << std::setw(8) << "phi(N)" << "  SL2(Z[zeta_N])^ab\n";
        for (std::int64_t n = lo; n <= hi; ++n) {
            auto const g = sl2ab_cyclotomic(std::uint64_t(n));
            rows.push_back({{"n", n}, {"phi", euler_phi(std::uint64_t(n))}, {"group", g}});
            text << std::setw(6) << n << std::setw(8) << euler_phi(std::uint64_t(n)) << "  " << g.to_string()
                 << '\n';
        }
    } else if (o.kind == "z-inv-n") {
        std::int64_t const lo = o.min ? o.min : 2, hi = o.max ? o.max : 30;
        if (lo < 2 || lo > hi)
            fail(error_kind::parse, "table z-inv-n needs 2 <= min <= max");
        text << std::setw(6) << "n" << "  SL2(Z[1/n])^ab\n";
        for (std::int64_t n = lo; n <= hi; ++n) {
            s_set s;
            for (auto const& [p, k] : factor_integer(std::uint64_t(n))) {
                if (p == 2)
                    s.removed_above_2.insert(0);
                else if (p == 3)
                    s.removed_above_3.insert(0);
                else
                    ++s.other_finite_primes;
            }
            auto const g = compute({field::rational{}, s}).group;
            rows.push_back({{"n", n}, {"group", g}});
            text << std::setw(6) << n << "  " << g.to_string() << '\n';
        }
    } else {
        fail(error_kind::parse, "unknown table \"" + o.kind + "\" (quadratic, cyclotomic, z-inv-n)");
    }

    if (o.as_json) {
        json j{{"table", o.kind}, {"rows", rows}};
        if (o.kind == "quadratic")
            j["skipped"] = skipped;
        emit_json(out, j);
    } else {
        out << text.str();
    }
    return ok;
}

/* verify */

int do_verify(std::string const& suite, bool as_json, std::ostream& out)
{
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};

    json reports = json::array();
    bool all_pass = true;
    for (auto const& name : names) {
        auto const rep = run_suite(name);
        all_pass = all_pass && rep.passed();
        if (as_json) {
            json cases = json::array();
            for (auto const& c : rep.cases)
                cases.push_back({{"case", c.label}, {"pass", c.pass}, {"detail", c.detail}});
            reports.push_back({{"suite", rep.name}, {"passed", rep.cases.size() - rep.failures()},
                               {"failed", rep.failures()}, {"cases", cases}});
            continue;
        }
        for (auto const& c : rep.cases)
            out << (c.pass ? "PASS " : "FAIL ") << rep.name << ": " << c.label << " -- " << c.detail << '\n';
        out << rep.name << ": " << rep.cases.size() - rep.failures() << "/" << rep.cases.size() << " passed\n";
    }
    if (as_json)
        emit_json(out, json{{"suites", reports}, {"ok", all_pass}});
    return all_pass ? ok : verification_failed;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"SL_2 abelianization over Dedekind domains of arithmetic type", "sl2ab"};
    app.require_subcommand(1);

    compute_opts co;
    auto* compute_cmd = app.add_subcommand("compute", "SL2(O_{K,S})^ab from the splitting of 2 and 3");
    compute_cmd->add_flag("--rational", co.rational, "K = Q");
    compute_cmd->add_option("--quadratic", co.quadratic, "K = Q(sqrt d), d squarefree");
    compute_cmd->add_option("--cyclotomic", co.cyclotomic, "K = Q(zeta_N)");
    compute_cmd->add_option("--poly", co.poly, "K = Q[x]/(f), coefficients c0,c1,... (f monic)");
    compute_cmd->add_option("--function-field", co.function_field, "K = F_q(t)");
    compute_cmd->add_option("--field", co.field_file, "field spec JSON file (any kind, including user-supplied)");
    compute_cmd->add_option("--galois", co.galois, "Galois K of degree n: n,e2,f2,e3,f3")->delimiter(',');
    compute_cmd->add_option("--invert", co.invert, "rational primes to invert (with --rational)")->delimiter(',');
    compute_cmd->add_option("--remove-prime", co.remove, "put a prime above 2 or 3 into S: p:index")
        ->delimiter(',');
    compute_cmd->add_option("--extra-s-primes", co.extra, "number of further finite primes in S");
    compute_cmd->add_flag("--json", co.as_json, "JSON output");

    oracle_opts oo;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force SL2(R)^ab for a finite ring R");
    oracle_cmd->add_option("--zmod", oo.zmod, "R = Z/n");
    oracle_cmd->add_option("--ring", oo.ring_file, "ring spec JSON file");
    oracle_cmd->add_flag("--compare", oo.compare, "compare with the local-ring formula");
    oracle_cmd->add_option("--cap", oo.cap, "maximum ring order to enumerate (default 16)");
    oracle_cmd->add_flag("--json", oo.as_json, "JSON output");

    table_opts to;
    auto* table_cmd = app.add_subcommand("table", "regenerate a table: quadratic, cyclotomic, z-inv-n");
    table_cmd->add_option("kind", to.kind, "quadratic | cyclotomic | z-inv-n")->required();
    table_cmd->add_option("--min", to.min, "first d / N / n");
    table_cmd->add_option("--max", to.max, "last d / N / n");
    table_cmd->add_flag("--json", to.as_json, "JSON output");

    std::string suite;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run a cross-validation suite");
    verify_cmd->add_option("suite", suite,
                           "quadratic-table | cyclotomic-table | z-inv-n | oracle-local | ge2 | product-lemma | all")
        ->required();
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    std::vector<std::string> argv_store{"sl2ab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (CLI::ParseError const& e) {
        err << "sl2ab: " << e.what() << '\n';
        return bad_input;
    }

    try {
        if (compute_cmd->parsed())
            return do_compute(co, out);
        if (oracle_cmd->parsed())
            return do_oracle(oo, out);
        if (table_cmd->parsed())
            return do_table(to, out);
        if (verify_cmd->parsed()) {
            if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
                fail(error_kind::parse, "unknown suite \"" + suite + "\"");
            return do_verify(suite, verify_json, out);
        }
    } catch (error const& e) {
        err << "sl2ab: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return bad_input;
}

}  // namespace sl2ab::cli
