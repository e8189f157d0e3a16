#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sea/construct.hpp"
#include "sea/solver.hpp"
#include "sea/symbolic.hpp"

using namespace sea;

TEST_CASE("cartesian products") {
    const auto c2 = catalog_chain(1);
    const auto prod = cartesian_product({c2, c2});
    CHECK(prod.algebra.size() == 4);
    CHECK(check_effect_axioms(prod.algebra).pass());
    CHECK(find_isomorphism(prod.algebra, catalog_boolean(2)).has_value());

    const auto chain_c2 = cartesian_product({catalog_chain(2), c2});
    CHECK(chain_c2.algebra.size() == 6);
    CHECK(check_effect_axioms(chain_c2.algebra).pass());
    const auto sharp =
        sharp_elements(chain_c2.algebra, OrderRelation(chain_c2.algebra));
    const ElemId f1 = chain_c2.marker(0);
    CHECK(chain_c2.algebra.element_name(f1) == "(1,0)");
    CHECK(sharp.is_sharp(f1));

    // componentwise order: (a,0) <= (a,1)
    const OrderRelation order(chain_c2.algebra);
    CHECK(order.leq(chain_c2.algebra.id_of("(a,0)"), chain_c2.algebra.id_of("(a,1)")));

    CHECK_THROWS_AS(cartesian_product({}), StructuralError);
}

TEST_CASE("marker encoding round trips") {
    const auto prod = cartesian_product({catalog_boolean(2), catalog_chain(2)});
    for (ElemId x = 0; x < prod.algebra.size(); ++x)
        CHECK(prod.encode(prod.decode(x)) == x);
    CHECK(prod.marker_ids.size() == 2);
}

TEST_CASE("horizontal sums") {
    const auto c3 = catalog_chain(2);
    const auto hs = horizontal_sum({c3, c3});
    CHECK(hs.size() == 4);
    CHECK(check_effect_axioms(hs).pass());
    const auto iso = find_isomorphism(hs, catalog_diamond());
    CHECK(iso.has_value());

    // C2 summands contribute no proper elements
    const auto trivial = horizontal_sum({catalog_chain(1), catalog_chain(1)});
    CHECK(trivial.size() == 2);

    const auto mixed = horizontal_sum({catalog_boolean(2), c3});
    CHECK(mixed.size() == 5);  // 0, 1, two boolean atoms, one chain midpoint
    CHECK(check_effect_axioms(mixed).pass());
    CHECK_FALSE(mixed.defined(mixed.id_of("0:x"), mixed.id_of("1:a")));
}

TEST_CASE("interval algebras") {
    const auto b8 = catalog_boolean(3);
    const auto interval = interval_algebra(b8, b8.id_of("xy"));
    CHECK(interval.algebra.size() == 4);
    CHECK(check_effect_axioms(interval.algebra).pass());
    CHECK(find_isomorphism(interval.algebra, catalog_boolean(2)).has_value());

    const auto chain = catalog_chain(2);
    const auto c2_again = interval_algebra(chain, chain.id_of("a"));
    CHECK(c2_again.algebra.size() == 2);

    CHECK_THROWS_AS(interval_algebra(b8, b8.zero()), StructuralError);
}

TEST_CASE("omega interval [0,2a] is a 3-chain") {
    const auto omega = SymbolicEffectAlgebra::omega_omega_star();
    const auto interval = interval_algebra(omega, SymElem{0, 2}, 8);
    CHECK(interval.algebra.size() == 3);
    CHECK(check_effect_axioms(interval.algebra).pass());
    CHECK(find_isomorphism(interval.algebra, catalog_chain(2)).has_value());
    // upper-copy tops capture infinitely many elements; the window refuses
    CHECK_THROWS_AS(interval_algebra(omega, SymElem{1, 2}, 8), StructuralError);
}

TEST_CASE("lex extension admission and sums") {
    const auto lex = SymbolicEffectAlgebra::lex_extension(catalog_chain(2));
    const auto& base = lex.base();
    const ElemId zero = base.zero(), one = base.one(), a = base.id_of("a");

    CHECK(lex.contains({zero, 5}));
    CHECK_FALSE(lex.contains({zero, -1}));
    CHECK(lex.contains({one, -5}));
    CHECK_FALSE(lex.contains({one, 1}));
    CHECK(lex.contains({a, -7}));

    // (0,1) ⊕ (0,2) = (0,3)
    CHECK(lex.sum({zero, 1}, {zero, 2}) == SymElem{zero, 3});
    // (a,-5) ⊕ (a,7) would land on (1,2), which is not admitted
    CHECK_FALSE(lex.sum({a, -5}, {a, 7}).has_value());
    CHECK(lex.sum({a, -5}, {a, 5}) == SymElem{one, 0});
    CHECK(lex.complement({a, 3}) == SymElem{a, -3});
    CHECK(lex.embed(a) == SymElem{a, 0});

    const auto report = check_effect_axioms_windowed(lex, 6);
    CHECK(report.pass());
}

TEST_CASE("lex extension of C2 is window-isomorphic to omega+omega*") {
    const auto lex = SymbolicEffectAlgebra::lex_extension(catalog_chain(1));
    const auto omega = SymbolicEffectAlgebra::omega_omega_star();
    const ElemId zero = lex.base().zero(), one = lex.base().one();
    const int k = 10;

    const auto map = [&](SymElem x) -> SymElem {
        if (x.base == zero) return {0, x.offset};
        return {1, -x.offset};
    };

    const auto window = lex.window(k);
    CHECK(window.size() == omega.window(k).size());
    CHECK(map(lex.zero()) == omega.zero());
    CHECK(map(lex.one()) == omega.one());
    for (const auto& x : window) {
        CHECK(omega.contains(map(x)));
        CHECK(map(lex.complement(x)) == omega.complement(map(x)));
        for (const auto& y : window) {
            const auto s = lex.sum(x, y);
            const auto t = omega.sum(map(x), map(y));
            CHECK(s.has_value() == t.has_value());
            if (s) CHECK(map(*s) == *t);
            CHECK(lex.leq(x, y) == omega.leq(map(x), map(y)));
        }
    }
}

TEST_CASE("lex extension kills sharpness and the embedding preserves sums") {
    const auto base = catalog_boolean(2);
    const auto lex = SymbolicEffectAlgebra::lex_extension(base);
    const int k = 5;

    const auto sharp = sharp_in_window(lex, k);
    REQUIRE(sharp.size() == 2);
    CHECK(sharp[0] == lex.zero());
    CHECK(sharp[1] == lex.one());

    for (ElemId a = 0; a < base.size(); ++a) {
        for (ElemId b = 0; b < base.size(); ++b) {
            const auto s = base.sum(a, b);
            const auto ls = lex.sum(lex.embed(a), lex.embed(b));
            CHECK(s.has_value() == ls.has_value());
            if (s) CHECK(*ls == lex.embed(*s));
        }
        CHECK(lex.complement(lex.embed(a)) == lex.embed(*base.complement(a)));
        // fuzziness is noncontextual: proper base elements sit above (0,1)
        if (a != base.zero() && a != base.one()) {
            CHECK(lex.leq({base.zero(), 1}, lex.embed(a)));
            CHECK(lex.leq({base.zero(), 1}, lex.complement(lex.embed(a))));
        }
    }
}

TEST_CASE("transport of products along isomorphisms") {
    const auto b4 = catalog_boolean(2);
    const auto meet = meet_product(b4);

    SUBCASE("identity") {
        EAIsomorphism id;
        for (ElemId a = 0; a < b4.size(); ++a) {
            id.forward.push_back(a);
            id.inverse.push_back(a);
        }
        CHECK(transport_product(b4, b4, id, meet) == meet);
    }

    SUBCASE("atom swap maps meet to meet") {
        EAIsomorphism swap;
        const ElemId x = b4.id_of("x"), y = b4.id_of("y");
        swap.forward.assign(size_t(b4.size()), kUndefined);
        swap.forward[size_t(b4.zero())] = b4.zero();
        swap.forward[size_t(b4.one())] = b4.one();
        swap.forward[size_t(x)] = y;
        swap.forward[size_t(y)] = x;
        swap.inverse = swap.forward;
        CHECK(verify_isomorphism(b4, b4, swap).empty());
        CHECK(transport_product(b4, b4, swap, meet) == meet);
    }

    SUBCASE("C2 x C2 to Boolean 4 carries the componentwise product to meet") {
        const auto prod = cartesian_product({catalog_chain(1), catalog_chain(1)});
        const auto iso = find_isomorphism(prod.algebra, b4);
        REQUIRE(iso.has_value());
        const auto componentwise = unique_product(prod.algebra);
        REQUIRE(componentwise.has_value());
        const auto transported =
            transport_product(prod.algebra, b4, *iso, *componentwise);
        CHECK(check_sea_axioms(b4, transported).pass());
        CHECK(transported == meet);
    }

    SUBCASE("broken maps are rejected") {
        EAIsomorphism bogus;
        bogus.forward.assign(size_t(b4.size()), 0);
        bogus.inverse = bogus.forward;
        CHECK_FALSE(verify_isomorphism(b4, b4, bogus).empty());
        CHECK_THROWS_AS(transport_product(b4, b4, bogus, meet), StructuralError);
    }
}

TEST_CASE("every constructed algebra re-verifies") {
    const auto b4 = catalog_boolean(2);
    const auto c3 = catalog_chain(2);
    for (const auto& ea :
         {cartesian_product({b4, c3}).algebra, horizontal_sum({b4, c3}),
          interval_algebra(catalog_boolean(3), catalog_boolean(3).id_of("xz")).algebra})
        CHECK(check_effect_axioms(ea).pass());
}

TEST_CASE("boolean recognizer") {
    CHECK(is_boolean_algebra(catalog_boolean(2)));
    CHECK(is_boolean_algebra(catalog_boolean(3)));
    CHECK(is_boolean_algebra(cartesian_product({catalog_chain(1), catalog_chain(1)}).algebra));
    CHECK_FALSE(is_boolean_algebra(catalog_diamond()));  // 4 elements, not 2^2
    CHECK_FALSE(is_boolean_algebra(catalog_chain(2)));
    CHECK_FALSE(is_boolean_algebra(catalog_chain(3)));
}
