#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sea/effect_algebra.hpp"

namespace sea {

/// Element descriptor for the windowed symbolic carriers.
///
/// omega+omega*:      base 0 = ma (lower copy), base 1 = (ma)' (upper copy),
///                    offset m >= 0. Zero is {0,0}, one is {1,0}.
/// lex extension E_Z: base is an element id of the underlying finite algebra,
///                    offset is the integer component g of (a, g).
struct SymElem {
    std::int32_t base = 0;
    std::int64_t offset = 0;

    friend bool operator==(const SymElem&, const SymElem&) = default;
};

enum class SymKind { omega_omega_star, lex_extension };

/// A computable infinite effect algebra checked on finite windows. Sums,
/// complements and the order are exact on every admitted descriptor, so
/// window checks may compare elements that land outside the window.
class SymbolicEffectAlgebra {
public:
    static SymbolicEffectAlgebra omega_omega_star();

    /// Theorem-style lexicographic extension E_Z of a verified finite algebra,
    /// with group fixed to the integers: pairs (a, g) admitted iff a is
    /// proper, or a = 0 with g >= 0, or a = 1 with g <= 0.
    static SymbolicEffectAlgebra lex_extension(FiniteEffectAlgebra base);

    SymKind kind() const { return kind_; }
    const FiniteEffectAlgebra& base() const;

    bool contains(SymElem x) const;
    std::optional<SymElem> sum(SymElem x, SymElem y) const;
    SymElem complement(SymElem x) const;
    bool leq(SymElem x, SymElem y) const;
    SymElem zero() const;
    SymElem one() const;

    /// omega: {0, a, ..., Ka, (Ka)', ..., a', 1}.
    /// lex:   all admitted (a, g) with |g| <= K, ordered lexicographically.
    std::vector<SymElem> window(int k) const;

    /// The embedding phi(a) = (a, 0) of the base algebra (lex kind only).
    SymElem embed(ElemId a) const;

    std::string describe(SymElem x) const;

    /// Unique sequential product on omega+omega* (closed form); throws for
    /// the lex kind, which carries no product here.
    SymElem product(SymElem x, SymElem y) const;

private:
    SymbolicEffectAlgebra(SymKind kind, std::shared_ptr<const FiniteEffectAlgebra> base)
        : kind_(kind), base_(std::move(base)) {}

    void require(SymElem x) const;

    SymKind kind_;
    std::shared_ptr<const FiniteEffectAlgebra> base_;
    std::shared_ptr<const OrderRelation> base_order_;  // lex kind only
};

/// AlgebraView adapter over a window; see axiom_check.hpp.
struct SymbolicWindowView {
    using Element = SymElem;
    const SymbolicEffectAlgebra& alg;
    std::vector<SymElem> elems;

    SymbolicWindowView(const SymbolicEffectAlgebra& a, int k)
        : alg(a), elems(a.window(k)) {}

    const std::vector<SymElem>& universe() const { return elems; }
    bool eq(SymElem a, SymElem b) const { return a == b; }
    std::optional<SymElem> orthosum(SymElem a, SymElem b) const { return alg.sum(a, b); }
    SymElem complement(SymElem a) const { return alg.complement(a); }
    SymElem zero() const { return alg.zero(); }
    SymElem one() const { return alg.one(); }
    std::string describe(SymElem a) const { return alg.describe(a); }
};

AxiomReport check_effect_axioms_windowed(const SymbolicEffectAlgebra& alg, int k);

/// Sharpness scanned inside the window: elements with no nonzero common lower
/// bound with their complement among window elements. Bounded evidence.
std::vector<SymElem> sharp_in_window(const SymbolicEffectAlgebra& alg, int k);

}  // namespace sea
