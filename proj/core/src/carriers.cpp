#include "sea/carriers.hpp"

namespace sea::order {

FiniteSeaModel::FiniteSeaModel(FiniteEffectAlgebra ea, SeqProductTable table)
    : ea_(std::move(ea)), table_(std::move(table)) {
    if (!check_effect_axioms(ea_).pass())
        throw StructuralError("FiniteSeaModel: not an effect algebra");
    if (!check_sea_axioms(ea_, table_).pass())
        throw StructuralError("FiniteSeaModel: table fails S1-S5");
    order_ = OrderRelation(ea_);
    sharp_ = sharp_elements(ea_, order_);

    for (ElemId a = 0; a < ea_.size(); ++a) {
        std::vector<ElemId> dominators;
        for (ElemId s : sharp_.sharp)
            if (order_.leq(a, s)) dominators.push_back(s);
        std::optional<ElemId> least;
        for (ElemId s : dominators) {
            bool below_all = true;
            for (ElemId t : dominators)
                if (!order_.leq(s, t)) { below_all = false; break; }
            if (below_all) { least = s; break; }
        }
        if (!least)
            throw NotSharplyDominating(
                "FiniteSeaModel: no least sharp element above " +
                ea_.element_name(a) + " in " + ea_.name());
        hat_.push_back(*least);
    }
}

std::vector<ElemId> FiniteSeaModel::enumerate() const {
    std::vector<ElemId> all;
    for (ElemId a = 0; a < ea_.size(); ++a) all.push_back(a);
    return all;
}

std::optional<SymElem> OmegaSeaModel::subtract(SymElem b, SymElem a) const {
    if (!alg_.leq(a, b)) return std::nullopt;
    // the unique c with a ⊕ c = b, case-split on the two copies
    if (a.base == 0 && b.base == 0) return SymElem{0, b.offset - a.offset};
    if (a.base == 0 && b.base == 1) return SymElem{1, b.offset + a.offset};
    if (a.base == 1 && b.base == 1) return SymElem{0, a.offset - b.offset};
    return std::nullopt;  // upper below lower never holds
}

std::optional<SymElem> OmegaSeaModel::solve_condition1(SymElem a, SymElem b) const {
    if (b.base == 0) {
        // (mb)∘y is 0 for lower y and mb for upper y; nothing else is reachable
        if (a == zero()) return zero();
        if (a == b && b.offset > 0) return SymElem{1, 0};
        return std::nullopt;
    }
    // b = (mb)': lower targets come back unchanged, upper targets shift
    if (a.base == 0) return a;
    if (a.offset >= b.offset) return SymElem{1, a.offset - b.offset};
    return std::nullopt;
}

std::optional<hilbert::HsElem> HsSeaModel::subtract(const Element& b,
                                                    const Element& a) const {
    using K = hilbert::HsElem::Kind;
    if (!model_.leq(a, b)) return std::nullopt;
    if (a.kind == K::zero) return b;
    if (model_.eq(a, b)) return zero();
    if (b.kind == K::one) return model_.complement(a);
    if (a.kind == K::scalar && b.kind == K::scalar)
        return model_.from_scalar(b.s - a.s);
    if (a.kind == K::matrix && b.kind == K::matrix)
        return model_.from_matrix(
            hilbert::MatrixEffect(b.m->matrix() - a.m->matrix()));
    return std::nullopt;
}

bool HsSeaModel::sharp(const Element& a) const {
    using K = hilbert::HsElem::Kind;
    switch (a.kind) {
        case K::zero:
        case K::one: return true;
        case K::scalar: return false;
        case K::matrix: return hilbert::is_projection(*a.m);
    }
    return false;
}

std::optional<hilbert::HsElem> HsSeaModel::solve_condition1(const Element& a,
                                                            const Element& b) const {
    using K = hilbert::HsElem::Kind;
    if (!model_.leq(a, b)) return std::nullopt;
    if (b.kind == K::one) return a;       // 1∘a = a
    if (a.kind == K::zero) return zero(); // b∘0 = 0
    if (b.kind == K::zero) return std::nullopt;
    if (a.kind == K::scalar && b.kind == K::scalar)
        return model_.from_scalar(a.s / b.s);
    if (a.kind == K::matrix && b.kind == K::matrix) {
        try {
            return model_.from_matrix(hilbert::sequential_quotient(*a.m, *b.m).c);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace sea::order
