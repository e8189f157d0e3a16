#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>

#include "sea/effect_algebra.hpp"

namespace sea {

/// A carrier slice on which the effect-algebra axioms can be evaluated:
/// a finite list of elements (the whole carrier, or a window of an infinite
/// one) together with exact operations. Operations must be total on every
/// element reachable from the universe by sums and complements, so checks may
/// compare elements that fall outside the window itself.
template <class V>
concept AlgebraView = requires(const V& v, const typename V::Element& a,
                               const typename V::Element& b) {
    { v.universe() } -> std::convertible_to<std::vector<typename V::Element>>;
    { v.eq(a, b) } -> std::convertible_to<bool>;
    { v.orthosum(a, b) } -> std::convertible_to<std::optional<typename V::Element>>;
    { v.zero() } -> std::convertible_to<typename V::Element>;
    { v.one() } -> std::convertible_to<typename V::Element>;
    { v.describe(a) } -> std::convertible_to<std::string>;
};

namespace detail {

template <class V>
std::string tuple_desc(const V& v, std::initializer_list<typename V::Element> xs) {
    std::string s = "(";
    bool first = true;
    for (const auto& x : xs) {
        if (!first) s += ", ";
        s += v.describe(x);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

/// (A1)–(A4) evaluated with all quantifiers ranging over v.universe().
template <AlgebraView V>
AxiomReport check_effect_axioms_on(const V& v) {
    const auto& u = v.universe();
    using E = typename V::Element;
    AxiomReport report;

    AxiomCheck a1{"A1"};
    for (size_t i = 0; i < u.size() && a1.pass; ++i)
        for (size_t j = 0; j < u.size(); ++j) {
            const auto ab = v.orthosum(u[i], u[j]);
            const auto ba = v.orthosum(u[j], u[i]);
            if (ab.has_value() != ba.has_value() ||
                (ab && !v.eq(*ab, *ba))) {
                a1.pass = false;
                a1.witness = detail::tuple_desc(v, {u[i], u[j]});
                break;
            }
        }
    report.checks.push_back(a1);

    AxiomCheck a2{"A2"};
    for (size_t i = 0; i < u.size() && a2.pass; ++i)
        for (size_t j = 0; j < u.size() && a2.pass; ++j) {
            const auto ab = v.orthosum(u[i], u[j]);
            if (!ab) continue;
            for (size_t k = 0; k < u.size(); ++k) {
                const auto ab_c = v.orthosum(*ab, u[k]);
                if (!ab_c) continue;
                const auto bc = v.orthosum(u[j], u[k]);
                std::optional<E> a_bc;
                if (bc) a_bc = v.orthosum(u[i], *bc);
                if (!bc || !a_bc || !v.eq(*a_bc, *ab_c)) {
                    a2.pass = false;
                    a2.witness = detail::tuple_desc(v, {u[i], u[j], u[k]});
                    break;
                }
            }
        }
    report.checks.push_back(a2);

    AxiomCheck a3{"A3"};
    for (const auto& a : u) {
        int complements = 0;
        for (const auto& x : u) {
            const auto s = v.orthosum(a, x);
            if (s && v.eq(*s, v.one())) ++complements;
        }
        if (complements != 1) {
            a3.pass = false;
            a3.witness = v.describe(a) + " has " + std::to_string(complements) +
                         " complements";
            break;
        }
    }
    report.checks.push_back(a3);

    AxiomCheck a4{"A4"};
    for (const auto& a : u) {
        if (v.orthosum(a, v.one()) && !v.eq(a, v.zero())) {
            a4.pass = false;
            a4.witness = v.describe(a);
            break;
        }
    }
    report.checks.push_back(a4);

    return report;
}

/// (S1)–(S5) for a total product, quantifiers over v.universe().
/// Also reports commutativity, which licenses the shortcut of verifying only
/// (S1), (S2) and associativity for commutative candidates.
template <AlgebraView V, class Product>
SeaReport check_sea_axioms_on(const V& v, Product&& prod) {
    const auto& u = v.universe();
    SeaReport report;
    using E = typename V::Element;

    const auto commutes = [&](const E& a, const E& b) {
        return v.eq(prod(a, b), prod(b, a));
    };

    AxiomCheck s1{"S1"};
    for (size_t i = 0; i < u.size() && s1.pass; ++i)
        for (size_t j = 0; j < u.size() && s1.pass; ++j)
            for (size_t k = j; k < u.size(); ++k) {
                const auto bc = v.orthosum(u[j], u[k]);
                if (!bc) continue;
                const auto lhs = prod(u[i], *bc);
                const auto sum = v.orthosum(prod(u[i], u[j]), prod(u[i], u[k]));
                if (!sum || !v.eq(lhs, *sum)) {
                    s1.pass = false;
                    s1.witness = detail::tuple_desc(v, {u[i], u[j], u[k]});
                    break;
                }
            }
    report.checks.push_back(s1);

    AxiomCheck s2{"S2"};
    for (const auto& a : u)
        if (!v.eq(prod(v.one(), a), a)) {
            s2.pass = false;
            s2.witness = v.describe(a);
            break;
        }
    report.checks.push_back(s2);

    AxiomCheck s3{"S3"};
    for (size_t i = 0; i < u.size() && s3.pass; ++i)
        for (size_t j = 0; j < u.size(); ++j)
            if (v.eq(prod(u[i], u[j]), v.zero()) && !commutes(u[i], u[j])) {
                s3.pass = false;
                s3.witness = detail::tuple_desc(v, {u[i], u[j]});
                break;
            }
    report.checks.push_back(s3);

    report.commutative = true;
    for (size_t i = 0; i < u.size() && report.commutative; ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (!commutes(u[i], u[j])) {
                report.commutative = false;
                break;
            }

    AxiomCheck s4{"S4"};
    for (size_t i = 0; i < u.size() && s4.pass; ++i)
        for (size_t j = 0; j < u.size() && s4.pass; ++j) {
            if (!commutes(u[i], u[j])) continue;
            if constexpr (requires { v.complement(u[j]); }) {
                const auto bp = v.complement(u[j]);
                if (!v.eq(prod(u[i], bp), prod(bp, u[i]))) {
                    s4.pass = false;
                    s4.witness = detail::tuple_desc(v, {u[i], u[j]}) + " vs complement";
                    break;
                }
            }
            for (size_t k = 0; k < u.size(); ++k) {
                if (!v.eq(prod(u[i], prod(u[j], u[k])),
                          prod(prod(u[i], u[j]), u[k]))) {
                    s4.pass = false;
                    s4.witness = detail::tuple_desc(v, {u[i], u[j], u[k]});
                    break;
                }
            }
        }
    report.checks.push_back(s4);

    AxiomCheck s5{"S5"};
    for (size_t i = 0; i < u.size() && s5.pass; ++i)
        for (size_t j = 0; j < u.size() && s5.pass; ++j) {
            if (!commutes(u[i], u[j])) continue;
            for (size_t k = 0; k < u.size(); ++k) {
                if (!commutes(u[i], u[k])) continue;
                // here c = u[i] commutes with a = u[j] and b = u[k]
                if (!commutes(u[i], prod(u[j], u[k]))) {
                    s5.pass = false;
                    s5.witness = detail::tuple_desc(v, {u[i], u[j], u[k]}) + " product";
                    break;
                }
                const auto ab = v.orthosum(u[j], u[k]);
                if (ab && !commutes(u[i], *ab)) {
                    s5.pass = false;
                    s5.witness = detail::tuple_desc(v, {u[i], u[j], u[k]}) + " orthosum";
                    break;
                }
            }
        }
    report.checks.push_back(s5);

    return report;
}

}  // namespace sea
