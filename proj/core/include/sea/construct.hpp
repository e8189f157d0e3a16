#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sea/effect_algebra.hpp"
#include "sea/symbolic.hpp"

namespace sea {

/// Cartesian product with componentwise partial sum, plus the sharp unit
/// markers f_j (1 in slot j, 0 elsewhere) used in product-uniqueness checks.
struct ProductAlgebra {
    FiniteEffectAlgebra algebra;
    std::vector<int> factor_sizes;
    std::vector<ElemId> marker_ids;

    ElemId encode(const std::vector<ElemId>& tuple) const;
    std::vector<ElemId> decode(ElemId x) const;
    /// f_j: the sharp marker of factor j.
    ElemId marker(size_t j) const;
};

ProductAlgebra cartesian_product(const std::vector<FiniteEffectAlgebra>& factors);

/// Horizontal sum: summands glued at shared 0 and 1, no cross-summand sums.
/// Proper element names are prefixed "i:" by summand index.
FiniteEffectAlgebra horizontal_sum(const std::vector<FiniteEffectAlgebra>& summands);

/// The interval [0, b] of a verified algebra, with unit b and c ⊕_b d defined
/// when c ⊕ d <= b.
struct IntervalAlgebra {
    FiniteEffectAlgebra algebra;
    std::vector<ElemId> parent_of;  // interval id -> parent id
};

IntervalAlgebra interval_algebra(const FiniteEffectAlgebra& ea, ElemId b);

/// Windowed interval of a symbolic carrier. Fails unless the window's
/// restriction to [0, b] is sum-closed, i.e. the interval is finite and
/// fully captured at this window size.
IntervalAlgebra interval_algebra(const SymbolicEffectAlgebra& alg, SymElem b, int k);

/// Bijection between two carriers preserving 0, 1 and ⊕ both ways.
struct EAIsomorphism {
    std::vector<ElemId> forward;  // E id -> F id
    std::vector<ElemId> inverse;  // F id -> E id
};

/// Validates bijectivity and morphism properties; empty string when valid.
std::string verify_isomorphism(const FiniteEffectAlgebra& e,
                               const FiniteEffectAlgebra& f,
                               const EAIsomorphism& iso);

/// Exhaustive search with degree pruning; intended for carriers <= 64.
std::optional<EAIsomorphism> find_isomorphism(const FiniteEffectAlgebra& e,
                                              const FiniteEffectAlgebra& f);

/// a * b = phi[ phi^{-1}(a) ∘ phi^{-1}(b) ]: a sequential product on F from
/// one on E along an isomorphism.
SeqProductTable transport_product(const FiniteEffectAlgebra& e,
                                  const FiniteEffectAlgebra& f,
                                  const EAIsomorphism& iso,
                                  const SeqProductTable& t);

// --- named finite models ---

/// chain(n): {0, a, 2a, ..., na = 1}, n >= 1. chain(1) is C_2, chain(2) is C_3.
FiniteEffectAlgebra catalog_chain(int n);
/// boolean(k): the Boolean algebra 2^{k atoms} with a ⊕ b = a ∨ b for disjoint.
FiniteEffectAlgebra catalog_boolean(int k);
/// diamond D = {0, a, b, 1} with 2a = 2b = 1.
FiniteEffectAlgebra catalog_diamond();

/// Meet table of a Boolean-style algebra; the unique sequential product there.
SeqProductTable meet_product(const FiniteEffectAlgebra& ea);

/// True when the carrier is isomorphic to 2^k atoms (|E| = 2^k <= 64).
bool is_boolean_algebra(const FiniteEffectAlgebra& ea);

}  // namespace sea
