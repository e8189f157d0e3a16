#include "sea/symbolic.hpp"

#include <algorithm>

#include "sea/axiom_check.hpp"

namespace sea {

SymbolicEffectAlgebra SymbolicEffectAlgebra::omega_omega_star() {
    return SymbolicEffectAlgebra(SymKind::omega_omega_star, nullptr);
}

SymbolicEffectAlgebra SymbolicEffectAlgebra::lex_extension(FiniteEffectAlgebra base) {
    auto report = check_effect_axioms(base);
    if (!report.pass())
        throw StructuralError("lex_extension: base '" + base.name() +
                              "' is not an effect algebra");
    auto shared = std::make_shared<const FiniteEffectAlgebra>(std::move(base));
    SymbolicEffectAlgebra alg(SymKind::lex_extension, shared);
    alg.base_order_ = std::make_shared<const OrderRelation>(*shared);
    return alg;
}

const FiniteEffectAlgebra& SymbolicEffectAlgebra::base() const {
    if (!base_) throw StructuralError("symbolic algebra has no base");
    return *base_;
}

bool SymbolicEffectAlgebra::contains(SymElem x) const {
    if (kind_ == SymKind::omega_omega_star)
        return (x.base == 0 || x.base == 1) && x.offset >= 0;
    if (x.base < 0 || x.base >= base_->size()) return false;
    if (x.base == base_->zero()) return x.offset >= 0;
    if (x.base == base_->one()) return x.offset <= 0;
    return true;
}

void SymbolicEffectAlgebra::require(SymElem x) const {
    if (!contains(x))
        throw StructuralError("descriptor not in symbolic carrier");
}

SymElem SymbolicEffectAlgebra::zero() const {
    if (kind_ == SymKind::omega_omega_star) return {0, 0};
    return {base_->zero(), 0};
}

SymElem SymbolicEffectAlgebra::one() const {
    if (kind_ == SymKind::omega_omega_star) return {1, 0};
    return {base_->one(), 0};
}

std::optional<SymElem> SymbolicEffectAlgebra::sum(SymElem x, SymElem y) const {
    require(x);
    require(y);
    if (kind_ == SymKind::omega_omega_star) {
        // (ma) + (na) = (m+n)a; (ma)' + (na) = ((m-n)a)' for n <= m.
        if (x.base == 0 && y.base == 0) return SymElem{0, x.offset + y.offset};
        if (x.base == 1 && y.base == 1) return std::nullopt;
        const auto upper = x.base == 1 ? x : y;
        const auto lower = x.base == 1 ? y : x;
        if (lower.offset > upper.offset) return std::nullopt;
        return SymElem{1, upper.offset - lower.offset};
    }
    const auto ab = base_->sum(x.base, y.base);
    if (!ab) return std::nullopt;
    const SymElem r{*ab, x.offset + y.offset};
    if (!contains(r)) return std::nullopt;
    return r;
}

SymElem SymbolicEffectAlgebra::complement(SymElem x) const {
    require(x);
    if (kind_ == SymKind::omega_omega_star) return {1 - x.base, x.offset};
    const auto c = base_->complement(x.base);
    if (!c) throw StructuralError("lex base complement missing");
    return {*c, -x.offset};
}

bool SymbolicEffectAlgebra::leq(SymElem x, SymElem y) const {
    require(x);
    require(y);
    if (kind_ == SymKind::omega_omega_star) {
        // chain: 0 < a < 2a < ... < (2a)' < a' < 1
        if (x.base == 0 && y.base == 0) return x.offset <= y.offset;
        if (x.base == 1 && y.base == 1) return x.offset >= y.offset;
        return x.base == 0;  // every ma lies below every (na)'
    }
    // lexicographic: a < b, or a = b and g <= h
    if (x.base == y.base) return x.offset <= y.offset;
    return base_order_->lt(x.base, y.base);
}

std::vector<SymElem> SymbolicEffectAlgebra::window(int k) const {
    if (k < 0) throw StructuralError("window size must be nonnegative");
    std::vector<SymElem> out;
    if (kind_ == SymKind::omega_omega_star) {
        for (int m = 0; m <= k; ++m) out.push_back({0, m});
        for (int m = k; m >= 0; --m) out.push_back({1, m});
        return out;
    }
    for (ElemId a = 0; a < base_->size(); ++a)
        for (int g = -k; g <= k; ++g)
            if (SymElem e{a, g}; contains(e)) out.push_back(e);
    return out;
}

SymElem SymbolicEffectAlgebra::embed(ElemId a) const {
    if (kind_ != SymKind::lex_extension)
        throw StructuralError("embed is defined for lex extensions only");
    if (a < 0 || a >= base_->size()) throw StructuralError("embed: bad element id");
    return {a, 0};
}

std::string SymbolicEffectAlgebra::describe(SymElem x) const {
    if (kind_ == SymKind::omega_omega_star) {
        std::string core = x.offset == 0   ? "0"
                           : x.offset == 1 ? "a"
                                           : std::to_string(x.offset) + "a";
        if (x.base == 0) return core;
        return x.offset == 0 ? "1" : "(" + core + ")'";
    }
    return "(" + base_->element_name(x.base) + "," + std::to_string(x.offset) + ")";
}

SymElem SymbolicEffectAlgebra::product(SymElem x, SymElem y) const {
    if (kind_ != SymKind::omega_omega_star)
        throw StructuralError("no closed-form product on this carrier");
    require(x);
    require(y);
    if (x.base == 0 && y.base == 0) return {0, 0};
    if (x.base == 1 && y.base == 1) return {1, x.offset + y.offset};
    // mixed: ma ∧ (na)', and ma <= (na)' always, so the meet is the lower copy
    return x.base == 0 ? x : y;
}

AxiomReport check_effect_axioms_windowed(const SymbolicEffectAlgebra& alg, int k) {
    auto report = check_effect_axioms_on(SymbolicWindowView(alg, k));
    report.window = k;
    return report;
}

std::vector<SymElem> sharp_in_window(const SymbolicEffectAlgebra& alg, int k) {
    const auto win = alg.window(k);
    std::vector<SymElem> sharp;
    for (const auto& s : win) {
        const auto sc = alg.complement(s);
        bool ok = true;
        for (const auto& z : win) {
            if (z == alg.zero()) continue;
            if (alg.leq(z, s) && alg.leq(z, sc)) { ok = false; break; }
        }
        if (ok) sharp.push_back(s);
    }
    return sharp;
}

}  // namespace sea
