#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sea/construct.hpp"
#include "sea/effect_algebra.hpp"
#include "sea/fuzzy.hpp"
#include "sea/hilbert.hpp"
#include "sea/seq_order.hpp"
#include "sea/symbolic.hpp"

namespace sea::order {

class NotSharplyDominating : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// Finite effect algebra with a verified product table. Exhaustive in every
/// check; hats come from scanning the sharp elements for least dominators,
/// and construction fails when the algebra is not sharply dominating.
class FiniteSeaModel {
public:
    using Element = ElemId;

    FiniteSeaModel(FiniteEffectAlgebra ea, SeqProductTable table);

    bool eq(ElemId a, ElemId b) const { return a == b; }
    bool leq(ElemId a, ElemId b) const { return order_.leq(a, b); }
    ElemId zero() const { return ea_.zero(); }
    ElemId one() const { return ea_.one(); }
    ElemId product(ElemId a, ElemId b) const { return table_.at(a, b); }
    std::optional<ElemId> orthosum(ElemId a, ElemId b) const { return ea_.sum(a, b); }
    std::optional<ElemId> subtract(ElemId b, ElemId a) const {
        if (!order_.leq(a, b)) return std::nullopt;
        return order_.subtract(b, a);
    }
    ElemId complement(ElemId a) const { return *ea_.complement(a); }
    ElemId hat(ElemId a) const { return hat_[size_t(a)]; }
    bool sharp(ElemId a) const { return sharp_.is_sharp(a); }
    std::optional<ElemId> solve_condition1(ElemId a, ElemId b) const {
        for (ElemId d = 0; d < ea_.size(); ++d)
            if (table_.at(b, d) == a) return d;
        return std::nullopt;
    }
    std::string describe(ElemId a) const { return ea_.element_name(a); }
    std::vector<ElemId> enumerate() const;

    const FiniteEffectAlgebra& algebra() const { return ea_; }
    const SeqProductTable& table() const { return table_; }

private:
    FiniteEffectAlgebra ea_;
    SeqProductTable table_;
    OrderRelation order_;
    SharpInfo sharp_;
    std::vector<ElemId> hat_;
};

/// Full fuzzy set system [0,1]^X over exact rationals.
class FuzzySeaModel {
public:
    using Element = fuzzy::FuzzyElement;

    explicit FuzzySeaModel(fuzzy::SpacePtr space) : space_(std::move(space)) {}

    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool leq(const Element& a, const Element& b) const {
        return fuzzy::fuzzy_leq(a, b);
    }
    Element zero() const { return fuzzy::FuzzyElement::zero(space_); }
    Element one() const { return fuzzy::FuzzyElement::one(space_); }
    Element product(const Element& a, const Element& b) const {
        return fuzzy::fuzzy_product(a, b);
    }
    std::optional<Element> orthosum(const Element& a, const Element& b) const {
        return fuzzy::fuzzy_sum(a, b);
    }
    std::optional<Element> subtract(const Element& b, const Element& a) const {
        if (!fuzzy::fuzzy_leq(a, b)) return std::nullopt;
        return fuzzy::fuzzy_subtract(b, a);
    }
    Element complement(const Element& a) const { return fuzzy::fuzzy_complement(a); }
    Element hat(const Element& a) const { return fuzzy::fuzzy_hat(a); }
    bool sharp(const Element& a) const { return fuzzy::fuzzy_sharp(a); }
    std::optional<Element> solve_condition1(const Element& a, const Element& b) const {
        if (!fuzzy::fuzzy_leq(a, b)) return std::nullopt;
        return fuzzy::fuzzy_quotient(a, b);
    }
    std::string describe(const Element& a) const { return a.str(); }
    const fuzzy::SpacePtr& space() const { return space_; }

private:
    fuzzy::SpacePtr space_;
};

/// E(H) with the standard product; tolerance-based equality and order.
class HilbertSeaModel {
public:
    using Element = hilbert::MatrixEffect;

    explicit HilbertSeaModel(int dim, hilbert::Tolerances tol = {})
        : dim_(dim), tol_(tol) {}

    bool eq(const Element& a, const Element& b) const {
        return (a.matrix() - b.matrix()).frobenius_norm() <= tol_.quotient;
    }
    bool leq(const Element& a, const Element& b) const {
        return hilbert::loewner_leq(a, b, tol_);
    }
    Element zero() const { return hilbert::MatrixEffect::zero(dim_); }
    Element one() const { return hilbert::MatrixEffect::identity(dim_); }
    Element product(const Element& a, const Element& b) const {
        return hilbert::std_product(a, b, tol_);
    }
    std::optional<Element> orthosum(const Element& a, const Element& b) const {
        const Matrix sum = a.matrix() + b.matrix();
        if (min_eigenvalue(Matrix::identity(dim_) - sum) < -tol_.loewner)
            return std::nullopt;
        return hilbert::MatrixEffect(sum, tol_);
    }
    std::optional<Element> subtract(const Element& b, const Element& a) const {
        if (!leq(a, b)) return std::nullopt;
        return hilbert::MatrixEffect(b.matrix() - a.matrix(), tol_);
    }
    Element complement(const Element& a) const {
        return hilbert::MatrixEffect(Matrix::identity(dim_) - a.matrix(), tol_);
    }
    Element hat(const Element& a) const {
        return hilbert::support_projection(a, tol_);
    }
    bool sharp(const Element& a) const { return hilbert::is_projection(a); }
    std::optional<Element> solve_condition1(const Element& a, const Element& b) const {
        if (!leq(a, b)) return std::nullopt;
        try {
            return hilbert::sequential_quotient(a, b, tol_).c;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    std::string describe(const Element& a) const {
        return "effect(dim " + std::to_string(a.dim()) + ", tr " +
               std::to_string(a.matrix().trace().real()) + ")";
    }
    int dim() const { return dim_; }
    const hilbert::Tolerances& tolerances() const { return tol_; }

private:
    int dim_;
    hilbert::Tolerances tol_;
};

/// ω+ω* with its closed-form product, windowed for enumeration. Sums,
/// order and products are exact on all descriptors; enumerate() is the
/// window and makes counterexample searches bounded evidence.
class OmegaSeaModel {
public:
    using Element = SymElem;

    explicit OmegaSeaModel(int window = 20)
        : alg_(SymbolicEffectAlgebra::omega_omega_star()), window_(window) {}

    bool eq(SymElem a, SymElem b) const { return a == b; }
    bool leq(SymElem a, SymElem b) const { return alg_.leq(a, b); }
    SymElem zero() const { return alg_.zero(); }
    SymElem one() const { return alg_.one(); }
    SymElem product(SymElem a, SymElem b) const { return alg_.product(a, b); }
    std::optional<SymElem> orthosum(SymElem a, SymElem b) const {
        return alg_.sum(a, b);
    }
    std::optional<SymElem> subtract(SymElem b, SymElem a) const;
    SymElem complement(SymElem a) const { return alg_.complement(a); }
    SymElem hat(SymElem a) const { return a == zero() ? zero() : one(); }
    bool sharp(SymElem a) const { return a == zero() || a == one(); }
    /// Analytic: the row of ma takes only the values {0, ma}; rows of (ma)'
    /// reach Low(n) and Up(m+n).
    std::optional<SymElem> solve_condition1(SymElem a, SymElem b) const;
    std::string describe(SymElem a) const { return alg_.describe(a); }
    std::vector<SymElem> enumerate() const { return alg_.window(window_); }
    const SymbolicEffectAlgebra& algebra() const { return alg_; }
    int window() const { return window_; }

private:
    SymbolicEffectAlgebra alg_;
    int window_;
};

/// HS(E(H), [0,1]) with the Example-7 product for a fixed faithful W.
class HsSeaModel {
public:
    using Element = hilbert::HsElem;

    explicit HsSeaModel(hilbert::HsModel model) : model_(std::move(model)) {}

    bool eq(const Element& a, const Element& b) const { return model_.eq(a, b); }
    bool leq(const Element& a, const Element& b) const { return model_.leq(a, b); }
    Element zero() const { return hilbert::HsElem::shared_zero(); }
    Element one() const { return hilbert::HsElem::shared_one(); }
    Element product(const Element& a, const Element& b) const {
        return model_.product(a, b);
    }
    std::optional<Element> orthosum(const Element& a, const Element& b) const {
        return model_.sum(a, b);
    }
    std::optional<Element> subtract(const Element& b, const Element& a) const;
    Element complement(const Element& a) const { return model_.complement(a); }
    Element hat(const Element& a) const { return model_.hat(a); }
    bool sharp(const Element& a) const;
    std::optional<Element> solve_condition1(const Element& a, const Element& b) const;
    std::string describe(const Element& a) const { return model_.describe(a); }
    const hilbert::HsModel& model() const { return model_; }

private:
    hilbert::HsModel model_;
};

}  // namespace sea::order
