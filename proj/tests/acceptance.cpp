// Acceptance suite: one criterion per line, exit code = number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "brute_force_oracle.hpp"
#include "sea/algebra_file.hpp"
#include "sea/carriers.hpp"
#include "sea/construct.hpp"
#include "sea/fuzzy.hpp"
#include "sea/hilbert.hpp"
#include "sea/seq_order.hpp"
#include "sea/solver.hpp"
#include "sea/symbolic.hpp"

using namespace sea;

namespace {

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<bool(std::ostream&)> body;
};

bool require(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) log << "    failed: " << what << "\n";
    return ok;
}

// --- criterion 1 ---

bool criterion_axiom_engine(std::ostream& log) {
    bool ok = true;
    for (const auto& ea :
         {catalog_chain(1), catalog_chain(2), catalog_chain(3), catalog_boolean(2),
          catalog_boolean(3), catalog_diamond()})
        ok &= require(log, check_effect_axioms(ea).pass(), ea.name() + " axioms");
    ok &= require(
        log,
        check_effect_axioms_windowed(SymbolicEffectAlgebra::omega_omega_star(), 20)
            .pass(),
        "omega+omega* window K=20 axioms");

    // 50 seeded single-cell mutations of Boolean 8, each rejected by a
    // parse conflict or an axiom failure
    const auto b8 = catalog_boolean(3);
    const std::string base = serialize_algebra({"B8", b8, std::nullopt});
    std::vector<std::string> lines;
    {
        std::istringstream is(base);
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }
    std::vector<size_t> sum_lines;
    for (size_t i = 0; i < lines.size(); ++i)
        if (lines[i].rfind("sum ", 0) == 0) sum_lines.push_back(i);

    std::mt19937_64 rng(20240);
    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> mutated = lines;
        const auto random_element = [&] {
            return b8.element_name(ElemId(rng() % std::uint64_t(b8.size())));
        };
        const int kind = int(rng() % 3);
        if (kind == 0) {
            // rewrite the right-hand side of an existing sum line
            auto& line = mutated[sum_lines[rng() % sum_lines.size()]];
            const auto eq = line.rfind("= ");
            std::string replacement = random_element();
            while (line.substr(eq + 2) == replacement) replacement = random_element();
            line = line.substr(0, eq + 2) + replacement;
        } else if (kind == 1) {
            // define a previously undefined (overlapping) pair
            for (;;) {
                const ElemId a = ElemId(rng() % std::uint64_t(b8.size()));
                const ElemId b = ElemId(rng() % std::uint64_t(b8.size()));
                if (b8.defined(a, b)) continue;
                mutated.push_back("sum " + b8.element_name(a) + " " +
                                  b8.element_name(b) + " = " + random_element());
                break;
            }
        } else {
            // contradict an existing line outright: a parse conflict
            const auto& line = lines[sum_lines[rng() % sum_lines.size()]];
            const auto eq = line.rfind("= ");
            std::string replacement = random_element();
            while (line.substr(eq + 2) == replacement) replacement = random_element();
            mutated.push_back(line.substr(0, eq + 2) + replacement);
        }

        std::string text;
        for (const auto& l : mutated) text += l + "\n";
        try {
            const auto parsed = parse_algebra(text);
            if (!check_effect_axioms(parsed.algebra).pass()) ++rejected;
        } catch (const ParseError&) {
            ++rejected;
        }
    }
    ok &= require(log, rejected == 50,
                  "rejected " + std::to_string(rejected) + "/50 mutants");
    return ok;
}

// --- criterion 2 ---

bool criterion_solver_none(std::ostream& log) {
    bool ok = true;
    const auto models = std::vector<FiniteEffectAlgebra>{
        catalog_chain(2),
        catalog_diamond(),
        catalog_chain(3),
        catalog_chain(4),
        horizontal_sum({catalog_boolean(2), catalog_chain(2)}),
        cartesian_product({catalog_boolean(2), catalog_chain(2)}).algebra};
    for (const auto& ea : models) {
        const auto outcome = enumerate_products(ea);
        ok &= require(log, outcome.verdict == SolveVerdict::none,
                      ea.name() + " admits no product");
    }
    return ok;
}

// --- criterion 3 ---

bool criterion_solver_unique(std::ostream& log) {
    bool ok = true;
    for (int k : {2, 3}) {
        const auto ea = catalog_boolean(k);
        const auto outcome = enumerate_products(ea);
        ok &= require(log, outcome.verdict == SolveVerdict::unique,
                      ea.name() + " unique");
        ok &= require(log,
                      !outcome.tables.empty() && outcome.tables.front() == meet_product(ea),
                      ea.name() + " table equals meet");
    }
    const auto prod = cartesian_product({catalog_chain(1), catalog_chain(1)});
    const auto outcome = enumerate_products(prod.algebra);
    ok &= require(log, outcome.verdict == SolveVerdict::unique, "C2 x C2 unique");
    const auto b4 = catalog_boolean(2);
    const auto iso = find_isomorphism(b4, prod.algebra);
    ok &= require(log, iso.has_value(), "C2 x C2 isomorphic to Boolean 4");
    if (iso && !outcome.tables.empty()) {
        const auto transported =
            transport_product(b4, prod.algebra, *iso, meet_product(b4));
        ok &= require(log, outcome.tables.front() == transported,
                      "unique table is the transported meet");
    }
    return ok;
}

// --- criterion 4 ---

bool criterion_solver_oracle(std::ostream& log) {
    bool ok = true;
    for (int n : {1, 2}) {
        const auto ea = catalog_chain(n);
        const auto oracle = sea_test::brute_force_products(ea, sea_test::Forcing::none);
        const auto solver = enumerate_products(ea).tables;
        ok &= require(log, oracle == solver,
                      ea.name() + ": oracle and solver sets match (" +
                          std::to_string(oracle.size()) + " tables)");
    }
    return ok;
}

// --- criterion 5 ---

bool criterion_omega(std::ostream& log) {
    bool ok = true;
    const auto omega = SymbolicEffectAlgebra::omega_omega_star();
    const SymbolicWindowView view(omega, 20);
    const auto sea_report = check_sea_axioms_on(
        view, [&](SymElem x, SymElem y) { return omega.product(x, y); });
    ok &= require(log, sea_report.pass(), "closed-form product passes S1-S5 on K=20");

    const order::OmegaSeaModel m(20);
    const SymElem a{0, 1}, two_a{0, 2};
    const auto cond1 = order::check_condition1(m, {{a, two_a}});
    ok &= require(log, !cond1.pass(), "condition (1) counterexample at (a, 2a)");

    ok &= require(log,
                  m.eq(m.product(a, two_a), m.zero()) &&
                      m.eq(m.product(a, a), m.zero()),
                  "premise a∘2a = 0 = a∘a");
    const auto cond2 = order::check_condition2(m, {{a, two_a, a}});
    ok &= require(log, !cond2.pass(), "condition (2) counterexample at (a, 2a, a)");
    ok &= require(log,
                  m.eq(m.product(m.hat(a), two_a), two_a) && !m.leq(two_a, a),
                  "â∘2a = 2a not below â∘a = a");
    return ok;
}

// --- criterion 6 ---

bool criterion_lex(std::ostream& log) {
    bool ok = true;
    {
        const auto lex = SymbolicEffectAlgebra::lex_extension(catalog_chain(1));
        const auto omega = SymbolicEffectAlgebra::omega_omega_star();
        const ElemId zero = lex.base().zero();
        const auto map = [&](SymElem x) -> SymElem {
            return x.base == zero ? SymElem{0, x.offset} : SymElem{1, -x.offset};
        };
        const auto window = lex.window(10);
        bool iso = window.size() == omega.window(10).size();
        for (const auto& x : window) {
            iso = iso && omega.contains(map(x)) &&
                  map(lex.complement(x)) == omega.complement(map(x));
            for (const auto& y : window) {
                const auto s = lex.sum(x, y);
                const auto t = omega.sum(map(x), map(y));
                iso = iso && s.has_value() == t.has_value() && (!s || map(*s) == *t);
            }
        }
        ok &= require(log, iso, "lex_extension(C2) window-isomorphic to omega (K=10)");
    }
    {
        const auto base = catalog_boolean(2);
        const auto lex = SymbolicEffectAlgebra::lex_extension(base);
        const auto sharp = sharp_in_window(lex, 10);
        ok &= require(log,
                      sharp.size() == 2 && sharp[0] == lex.zero() &&
                          sharp[1] == lex.one(),
                      "window-sharp set of E_Z(Boolean4) is {(0,0),(1,0)}");
        bool preserves = true;
        for (ElemId a = 0; a < base.size(); ++a)
            for (ElemId b = 0; b < base.size(); ++b) {
                const auto s = base.sum(a, b);
                const auto ls = lex.sum(lex.embed(a), lex.embed(b));
                preserves = preserves && s.has_value() == ls.has_value() &&
                            (!s || *ls == lex.embed(*s));
            }
        ok &= require(log, preserves, "embedding preserves ⊕ on all defined pairs");
    }
    return ok;
}

// --- criterion 7 ---

bool criterion_hilbert(std::ostream& log) {
    bool ok = true;
    const hilbert::Tolerances tol;  // 1e-9 comparisons, 1e-8 quotient
    for (const int dim : {2, 3, 4, 6}) {
        const std::uint64_t seed = 1000 + std::uint64_t(dim);
        const auto axioms = hilbert::check_axioms(dim, 500, seed, tol);
        ok &= require(log, axioms.pass(), "dim " + std::to_string(dim) + " S1-S5 at 1e-9");
        const auto thm48 = hilbert::check_thm48(dim, 500, seed, tol);
        ok &= require(log, thm48.pass(), "dim " + std::to_string(dim) + " thm 4.8 at 1e-9");
        const auto thm51 = hilbert::check_sequential_order(dim, 500, seed, tol);
        ok &= require(log, thm51.pass(), "dim " + std::to_string(dim) + " thm 5.1 at 1e-8");
        const auto quotient = hilbert::check_quotient(dim, 500, seed, tol);
        ok &= require(log, quotient.pass(),
                      "dim " + std::to_string(dim) + " quotient round trip at 1e-8");
    }
    return ok;
}

// --- criterion 8 ---

bool criterion_fuzzy(std::ostream& log) {
    bool ok = true;
    ok &= require(log, fuzzy::check_axioms(4, 1000, 99).pass(),
                  "SEA axioms exact on 1000 sampled triples, |X| = 4");

    const auto space = fuzzy::make_space({"x0", "x1", "x2", "x3"});
    const order::FuzzySeaModel m(space);
    fuzzy::FuzzySampler sampler(space, 424242);
    std::vector<fuzzy::FuzzyElement> xs{m.zero(), m.one()};
    for (int i = 0; i < 5; ++i) {
        xs.push_back(sampler.element());
        xs.push_back(sampler.with_zeros());
    }
    xs.push_back(fuzzy::fuzzy_hat(xs[4]));

    std::vector<std::pair<fuzzy::FuzzyElement, fuzzy::FuzzyElement>> pairs;
    std::vector<std::array<fuzzy::FuzzyElement, 3>> triples;
    for (const auto& a : xs)
        for (const auto& b : xs) {
            pairs.emplace_back(a, b);
            for (const auto& c : xs) triples.push_back({a, b, c});
        }
    ok &= require(log, order::check_condition1(m, pairs).pass(), "condition (1) exact");
    ok &= require(log, order::check_condition2(m, triples).pass(), "condition (2) exact");

    const auto identities = order::identity_suite(m, xs);
    ok &= require(log, identities.pass(),
                  "Lemma 5.4, Theorem 5.5(i)-(vi), Corollary 5.3 exact");
    const auto characterization = order::quotient_characterization(
        m,
        [&](const fuzzy::FuzzyElement& f, const fuzzy::FuzzyElement& g) {
            return order::sequential_quotient(m, f, g);
        },
        xs);
    ok &= require(log, characterization.pass(), "Lemma 5.6 characterization exact");

    auto top = sampler.with_zeros();
    if (top == m.zero()) top = m.one();
    std::vector<fuzzy::FuzzyElement> below;
    for (const auto& e : xs) below.push_back(m.product(top, e));
    below.push_back(top);
    const auto interval = order::interval_sea_checks(m, top, below, xs);
    ok &= require(log, interval.pass(), "Theorem 5.8 interval identity exact");
    return ok;
}

// --- criterion 9 ---

bool criterion_hs(std::ostream& log) {
    const auto report = hilbert::check_hs(3, 300, 777);
    bool ok = true;
    for (const auto& line : report.lines)
        ok &= require(log, line.pass, "hs: " + line.name + " " + line.detail);
    return ok;
}

// --- criterion 10 ---

bool criterion_polynomial(std::ostream& log) {
    const auto report = fuzzy::polynomial_counterexample(64, 6, 5);
    bool ok = true;
    for (const auto& line : report.lines)
        ok &= require(log, line.pass, "poly: " + line.name + " " + line.detail);
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1. axiom engine on the 7-item catalog; 50 Boolean-8 mutants rejected", 1.0,
         criterion_axiom_engine},
        {"2. solver nonexistence: C3, D, chain(3), chain(4), HS(B4,C3), B4xC3", 10.0,
         criterion_solver_none},
        {"3. solver uniqueness: Boolean 4/8 = meet; C2xC2 = transported meet", 60.0,
         criterion_solver_unique},
        {"4. brute-force oracle matches the solver on C2 and C3", 60.0,
         criterion_solver_oracle},
        {"5. omega+omega*: S1-S5 on K=20; both order counterexamples found", 60.0,
         criterion_omega},
        {"6. lex extension: C2 case isomorphic to omega; Boolean-4 case unsharp", 60.0,
         criterion_lex},
        {"7. Hilbert suites at dims 2,3,4,6 with 500 samples", 30.0,
         criterion_hilbert},
        {"8. fuzzy suites exact: axioms, conditions, identities, interval", 60.0,
         criterion_fuzzy},
        {"9. HS(E(H),[0,1]) product: axioms, W sensitivity, condition (2)", 60.0,
         criterion_hs},
        {"10. polynomial counterexample and its condition (2) side", 60.0,
         criterion_polynomial},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.body(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > criterion.budget_seconds) {
            ok = false;
            log << "    over budget: " << elapsed << "s > "
                << criterion.budget_seconds << "s\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.label << " ("
                  << elapsed << "s)\n"
                  << log.str();
        if (!ok) ++failures;
    }
    return failures;
}
