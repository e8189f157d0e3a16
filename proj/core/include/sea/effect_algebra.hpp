#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sea {

using ElemId = std::int32_t;
inline constexpr ElemId kUndefined = -1;

/// Raised for malformed structures (undeclared elements, conflicting table
/// entries, bad arguments). Distinct from axiom failure, which is a verdict.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite effect algebra candidate: interned element names, designated
/// 0 and 1, and a partial binary sum stored as a dense table. The table can
/// represent asymmetric or otherwise broken sums so that axiom checking can
/// report on adversarial inputs; use check_effect_axioms to obtain a verdict.
class FiniteEffectAlgebra {
public:
    FiniteEffectAlgebra(std::string name, std::vector<std::string> elements,
                        const std::string& zero = "0", const std::string& one = "1");

    const std::string& name() const { return name_; }
    int size() const { return int(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element_name(ElemId a) const { return elements_.at(size_t(a)); }
    std::optional<ElemId> find(const std::string& name) const;
    ElemId id_of(const std::string& name) const;

    ElemId zero() const { return zero_; }
    ElemId one() const { return one_; }

    bool defined(ElemId a, ElemId b) const { return cell(a, b) != kUndefined; }
    std::optional<ElemId> sum(ElemId a, ElemId b) const {
        const ElemId v = cell(a, b);
        if (v == kUndefined) return std::nullopt;
        return v;
    }

    /// Stores a ⊕ b = c in both (a,b) and (b,a). Throws StructuralError if
    /// either cell already holds a different value.
    void set_sum(ElemId a, ElemId b, ElemId c);

    /// Writes a single directed cell, without the symmetric mirror and without
    /// conflict detection. For constructing adversarial tables.
    void set_sum_raw(ElemId a, ElemId b, ElemId c) { cell_mut(a, b) = c; }

    void clear_sum_raw(ElemId a, ElemId b) { cell_mut(a, b) = kUndefined; }

    /// Unique x with a ⊕ x = 1, if exactly one exists in the table.
    std::optional<ElemId> complement(ElemId a) const;

    /// All defined unordered sums (a, b, a ⊕ b) with a <= b.
    std::vector<std::array<ElemId, 3>> sum_triples() const;

    bool same_table(const FiniteEffectAlgebra& other) const {
        return elements_ == other.elements_ && zero_ == other.zero_ &&
               one_ == other.one_ && table_ == other.table_;
    }

private:
    ElemId cell(ElemId a, ElemId b) const { return table_[index(a, b)]; }
    ElemId& cell_mut(ElemId a, ElemId b) { return table_[index(a, b)]; }
    size_t index(ElemId a, ElemId b) const {
        if (a < 0 || b < 0 || a >= size() || b >= size())
            throw StructuralError("element id out of range in " + name_);
        return size_t(a) * size_t(size()) + size_t(b);
    }

    std::string name_;
    std::vector<std::string> elements_;
    ElemId zero_ = kUndefined;
    ElemId one_ = kUndefined;
    std::vector<ElemId> table_;
};

/// Total binary operation table on a finite carrier; a candidate (or, once
/// check_sea_axioms passes, verified) sequential product.
class SeqProductTable {
public:
    SeqProductTable() = default;
    explicit SeqProductTable(int n) : n_(n), cells_(size_t(n) * size_t(n), kUndefined) {}

    int size() const { return n_; }
    ElemId at(ElemId a, ElemId b) const { return cells_[size_t(a) * size_t(n_) + size_t(b)]; }
    void set(ElemId a, ElemId b, ElemId v) { cells_[size_t(a) * size_t(n_) + size_t(b)] = v; }
    bool total() const {
        for (ElemId v : cells_)
            if (v == kUndefined) return false;
        return true;
    }
    const std::vector<ElemId>& cells() const { return cells_; }

    friend bool operator==(const SeqProductTable&, const SeqProductTable&) = default;
    /// Lexicographic on the flattened table; the canonical output order.
    friend bool operator<(const SeqProductTable& a, const SeqProductTable& b) {
        return a.cells_ < b.cells_;
    }

private:
    int n_ = 0;
    std::vector<ElemId> cells_;
};

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;  // empty when pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    std::optional<int> window;  // set for bounded symbolic evidence

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& axiom) const {
        for (const auto& c : checks)
            if (c.axiom == axiom) return &c;
        return nullptr;
    }
};

struct SeaReport : AxiomReport {
    bool commutative = false;
};

/// Derived order structure of a verified effect algebra: a <= b iff some c
/// has a ⊕ c = b, plus subtraction and scan-based meets.
class OrderRelation {
public:
    OrderRelation() = default;
    OrderRelation(const FiniteEffectAlgebra& ea);

    bool leq(ElemId a, ElemId b) const { return leq_[size_t(a) * size_t(n_) + size_t(b)]; }
    bool lt(ElemId a, ElemId b) const { return a != b && leq(a, b); }

    /// The unique c with a ⊕ c = b; requires a <= b.
    ElemId subtract(ElemId b, ElemId a) const;

    std::vector<ElemId> lower_bounds(ElemId a, ElemId b) const;

    /// Meet as the unique maximal common lower bound, when one exists.
    std::optional<ElemId> meet(ElemId a, ElemId b) const;

    int size() const { return n_; }

private:
    int n_ = 0;
    const FiniteEffectAlgebra* ea_ = nullptr;
    std::vector<std::uint8_t> leq_;
};

struct SharpInfo {
    std::vector<ElemId> sharp;
    bool orthoalgebra = false;  // a ⊥ a implies a = 0

    bool is_sharp(ElemId a) const {
        for (ElemId s : sharp)
            if (s == a) return true;
        return false;
    }
};

/// Mackey decomposition witness: a = c ⊕ d, b = c ⊕ e with c ⊕ d ⊕ e defined.
struct MackeyTriple {
    ElemId c, d, e;
};

AxiomReport check_effect_axioms(const FiniteEffectAlgebra& ea);
OrderRelation derive_order(const FiniteEffectAlgebra& ea);
SharpInfo sharp_elements(const FiniteEffectAlgebra& ea, const OrderRelation& order);
SeaReport check_sea_axioms(const FiniteEffectAlgebra& ea, const SeqProductTable& t);
std::optional<MackeyTriple> coexistence_witness(const FiniteEffectAlgebra& ea,
                                                ElemId a, ElemId b);

}  // namespace sea
