#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sea/effect_algebra.hpp"

namespace sea {

enum class SolveVerdict { none, unique, multiple };

struct SolveStats {
    long nodes = 0;
    long prunes = 0;
    std::array<long, 5> firings{};  // propagation firings attributed to S1..S5
    double wall_seconds = 0;
};

/// Complete enumeration result. Tables are pairwise distinct, each re-verified
/// by check_sea_axioms, and listed in canonical (flattened-lexicographic)
/// order. `truncated` is set when the limit cut off enumeration.
struct SolveOutcome {
    SolveVerdict verdict = SolveVerdict::none;
    std::vector<SeqProductTable> tables;
    bool truncated = false;
    SolveStats stats;
};

class CarrierTooLargeError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// Two distinct products exist where a unique one was requested.
class MultipleProductsError : public std::runtime_error {
public:
    MultipleProductsError(SeqProductTable first, SeqProductTable second)
        : std::runtime_error("sequential product is not unique"),
          witnesses{std::move(first), std::move(second)} {}
    std::array<SeqProductTable, 2> witnesses;
};

/// All sequential products on a verified finite effect algebra, by
/// backtracking table completion with (S1)-(S5) constraint propagation.
/// Refuses carriers above max_carrier outright rather than timing out.
SolveOutcome enumerate_products(const FiniteEffectAlgebra& ea, int limit = 64,
                                int max_carrier = 16);

/// The product table iff the verdict is unique; nullopt when none exists.
std::optional<SeqProductTable> unique_product(const FiniteEffectAlgebra& ea);

std::string search_statistics(const SolveOutcome& outcome);

}  // namespace sea
