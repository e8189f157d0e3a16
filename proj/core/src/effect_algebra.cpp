#include "sea/effect_algebra.hpp"

#include <algorithm>
#include <array>

#include "sea/axiom_check.hpp"

namespace sea {

FiniteEffectAlgebra::FiniteEffectAlgebra(std::string name,
                                         std::vector<std::string> elements,
                                         const std::string& zero,
                                         const std::string& one)
    : name_(std::move(name)), elements_(std::move(elements)) {
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].empty())
            throw StructuralError(name_ + ": empty element name");
        for (size_t j = i + 1; j < elements_.size(); ++j)
            if (elements_[i] == elements_[j])
                throw StructuralError(name_ + ": duplicate element '" + elements_[i] + "'");
    }
    const auto z = find(zero), o = find(one);
    if (!z) throw StructuralError(name_ + ": missing zero element '" + zero + "'");
    if (!o) throw StructuralError(name_ + ": missing one element '" + one + "'");
    if (*z == *o) throw StructuralError(name_ + ": zero and one coincide");
    zero_ = *z;
    one_ = *o;
    table_.assign(elements_.size() * elements_.size(), kUndefined);
}

std::optional<ElemId> FiniteEffectAlgebra::find(const std::string& name) const {
    for (size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == name) return ElemId(i);
    return std::nullopt;
}

ElemId FiniteEffectAlgebra::id_of(const std::string& name) const {
    const auto id = find(name);
    if (!id) throw StructuralError(name_ + ": unknown element '" + name + "'");
    return *id;
}

void FiniteEffectAlgebra::set_sum(ElemId a, ElemId b, ElemId c) {
    index(c, c);  // range check
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        ElemId& slot = cell_mut(x, y);
        if (slot != kUndefined && slot != c)
            throw StructuralError(name_ + ": conflicting sum " + element_name(x) +
                                  " + " + element_name(y) + " = " + element_name(c) +
                                  " vs " + element_name(slot));
        slot = c;
    }
}

std::optional<ElemId> FiniteEffectAlgebra::complement(ElemId a) const {
    std::optional<ElemId> result;
    for (ElemId x = 0; x < size(); ++x)
        if (cell(a, x) == one_) {
            if (result) return std::nullopt;  // not unique
            result = x;
        }
    return result;
}

std::vector<std::array<ElemId, 3>> FiniteEffectAlgebra::sum_triples() const {
    std::vector<std::array<ElemId, 3>> out;
    for (ElemId a = 0; a < size(); ++a)
        for (ElemId b = a; b < size(); ++b)
            if (const ElemId c = cell(a, b); c != kUndefined)
                out.push_back({a, b, c});
    return out;
}

namespace {

/// AlgebraView over the whole finite carrier.
struct FiniteView {
    using Element = ElemId;
    const FiniteEffectAlgebra& ea;
    std::vector<ElemId> all;

    explicit FiniteView(const FiniteEffectAlgebra& e) : ea(e) {
        all.resize(size_t(e.size()));
        for (ElemId i = 0; i < e.size(); ++i) all[size_t(i)] = i;
    }
    const std::vector<ElemId>& universe() const { return all; }
    bool eq(ElemId a, ElemId b) const { return a == b; }
    std::optional<ElemId> orthosum(ElemId a, ElemId b) const { return ea.sum(a, b); }
    ElemId zero() const { return ea.zero(); }
    ElemId one() const { return ea.one(); }
    std::string describe(ElemId a) const { return ea.element_name(a); }
};

/// Same view with complements available, for verified algebras.
struct VerifiedFiniteView : FiniteView {
    using FiniteView::FiniteView;
    ElemId complement(ElemId a) const {
        const auto c = ea.complement(a);
        if (!c) throw StructuralError(ea.name() + ": no unique complement");
        return *c;
    }
};

}  // namespace

AxiomReport check_effect_axioms(const FiniteEffectAlgebra& ea) {
    return check_effect_axioms_on(FiniteView(ea));
}

SeaReport check_sea_axioms(const FiniteEffectAlgebra& ea, const SeqProductTable& t) {
    if (t.size() != ea.size())
        throw StructuralError("product table size does not match carrier");
    if (!t.total())
        throw StructuralError("product table is not total");
    return check_sea_axioms_on(VerifiedFiniteView(ea),
                               [&](ElemId a, ElemId b) { return t.at(a, b); });
}

OrderRelation::OrderRelation(const FiniteEffectAlgebra& ea)
    : n_(ea.size()), ea_(&ea), leq_(size_t(n_) * size_t(n_), 0) {
    for (ElemId a = 0; a < n_; ++a)
        for (ElemId c = 0; c < n_; ++c)
            if (const auto b = ea.sum(a, c)) leq_[size_t(a) * size_t(n_) + size_t(*b)] = 1;
}

ElemId OrderRelation::subtract(ElemId b, ElemId a) const {
    std::optional<ElemId> found;
    for (ElemId c = 0; c < n_; ++c) {
        const auto s = ea_->sum(a, c);
        if (s && *s == b) {
            if (found && *found != c)
                throw StructuralError(ea_->name() + ": subtraction not unique for " +
                                      ea_->element_name(b) + " - " + ea_->element_name(a));
            found = c;
        }
    }
    if (!found)
        throw StructuralError(ea_->name() + ": " + ea_->element_name(a) +
                              " not below " + ea_->element_name(b));
    return *found;
}

std::vector<ElemId> OrderRelation::lower_bounds(ElemId a, ElemId b) const {
    std::vector<ElemId> out;
    for (ElemId c = 0; c < n_; ++c)
        if (leq(c, a) && leq(c, b)) out.push_back(c);
    return out;
}

std::optional<ElemId> OrderRelation::meet(ElemId a, ElemId b) const {
    const auto lbs = lower_bounds(a, b);
    std::vector<ElemId> maximal;
    for (ElemId m : lbs) {
        bool is_max = true;
        for (ElemId x : lbs)
            if (x != m && leq(m, x)) { is_max = false; break; }
        if (is_max) maximal.push_back(m);
    }
    if (maximal.size() == 1) return maximal.front();
    return std::nullopt;
}

SharpInfo sharp_elements(const FiniteEffectAlgebra& ea, const OrderRelation& order) {
    SharpInfo info;
    info.orthoalgebra = true;
    for (ElemId a = 0; a < ea.size(); ++a) {
        if (ea.defined(a, a) && a != ea.zero()) info.orthoalgebra = false;
        const auto ac = ea.complement(a);
        if (!ac) throw StructuralError(ea.name() + ": no unique complement");
        bool sharp = true;
        for (ElemId c : order.lower_bounds(a, *ac))
            if (c != ea.zero()) { sharp = false; break; }
        if (sharp) info.sharp.push_back(a);
    }
    return info;
}

std::optional<MackeyTriple> coexistence_witness(const FiniteEffectAlgebra& ea,
                                                ElemId a, ElemId b) {
    for (ElemId c = 0; c < ea.size(); ++c)
        for (ElemId d = 0; d < ea.size(); ++d) {
            const auto cd = ea.sum(c, d);
            if (!cd || *cd != a) continue;
            for (ElemId e = 0; e < ea.size(); ++e) {
                const auto ce = ea.sum(c, e);
                if (!ce || *ce != b) continue;
                if (ea.defined(*cd, e)) return MackeyTriple{c, d, e};
            }
        }
    return std::nullopt;
}

}  // namespace sea
