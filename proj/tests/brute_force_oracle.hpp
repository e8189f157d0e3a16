#pragma once

// Test-side oracle: enumerate total product tables and filter by a direct
// transcription of (S1)-(S5). Kept independent of the solver's propagation.

#include <algorithm>
#include <array>
#include <vector>

#include "sea/effect_algebra.hpp"

namespace sea_test {

using sea::ElemId;
using sea::FiniteEffectAlgebra;
using sea::SeqProductTable;

struct DirectSeaChecker {
    const FiniteEffectAlgebra& ea;
    int n;
    std::vector<std::array<ElemId, 3>> triples;

    explicit DirectSeaChecker(const FiniteEffectAlgebra& e) : ea(e), n(e.size()) {
        for (ElemId b = 0; b < n; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (const auto s = ea.sum(b, c)) triples.push_back({b, c, *s});
        // zero-column triples first; they invalidate most tables immediately
        std::stable_sort(triples.begin(), triples.end(),
                         [&](const auto& x, const auto& y) {
                             const int zx =
                                 x[0] == ea.zero() || x[1] == ea.zero() ? 0 : 1;
                             const int zy =
                                 y[0] == ea.zero() || y[1] == ea.zero() ? 0 : 1;
                             return zx < zy;
                         });
    }

    bool check(const SeqProductTable& t) const {
        for (ElemId a = 0; a < n; ++a)
            if (t.at(ea.one(), a) != a) return false;  // S2
        for (ElemId a = 0; a < n; ++a)
            for (const auto& [b, c, d] : triples) {    // S1
                const auto sum = ea.sum(t.at(a, b), t.at(a, c));
                if (!sum || *sum != t.at(a, d)) return false;
            }
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b)             // S3
                if (t.at(a, b) == ea.zero() && t.at(b, a) != ea.zero()) return false;
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b) {
                if (t.at(a, b) != t.at(b, a)) continue;
                const ElemId bp = *ea.complement(b);   // S4
                if (t.at(a, bp) != t.at(bp, a)) return false;
                for (ElemId c = 0; c < n; ++c)
                    if (t.at(a, t.at(b, c)) != t.at(t.at(a, b), c)) return false;
            }
        for (ElemId c = 0; c < n; ++c)
            for (ElemId a = 0; a < n; ++a) {
                if (t.at(c, a) != t.at(a, c)) continue;
                for (ElemId b = 0; b < n; ++b) {
                    if (t.at(c, b) != t.at(b, c)) continue;  // S5
                    const ElemId ab = t.at(a, b);
                    if (t.at(c, ab) != t.at(ab, c)) return false;
                    const auto s = ea.sum(a, b);
                    if (s && t.at(c, *s) != t.at(*s, c)) return false;
                }
            }
        return true;
    }
};

enum class Forcing { none, s2_row, unit_frame };

/// s2_row pins 1∘b = b. unit_frame also pins the rows/columns of 0 and 1,
/// all forced in any table satisfying (S1)-(S5); it brings 5-element
/// carriers within reach.
inline std::vector<SeqProductTable> brute_force_products(
    const FiniteEffectAlgebra& ea, Forcing forcing) {
    const int n = ea.size();
    SeqProductTable t(n);
    std::vector<size_t> free_cells;
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b) {
            if (forcing != Forcing::none && a == ea.one()) {
                t.set(a, b, b);
                continue;
            }
            if (forcing == Forcing::unit_frame &&
                (a == ea.zero() || b == ea.zero() || b == ea.one())) {
                t.set(a, b, a == ea.zero() || b == ea.zero() ? ea.zero() : a);
                continue;
            }
            free_cells.push_back(size_t(a) * size_t(n) + size_t(b));
        }

    const DirectSeaChecker checker(ea);
    std::vector<SeqProductTable> found;
    std::vector<ElemId> counter(free_cells.size(), 0);
    for (const size_t cell : free_cells)
        t.set(ElemId(cell / size_t(n)), ElemId(cell % size_t(n)), 0);
    for (;;) {
        if (checker.check(t)) found.push_back(t);
        size_t i = 0;
        for (; i < counter.size(); ++i) {
            const ElemId row = ElemId(free_cells[i] / size_t(n));
            const ElemId col = ElemId(free_cells[i] % size_t(n));
            if (++counter[i] < ElemId(n)) {
                t.set(row, col, counter[i]);
                break;
            }
            counter[i] = 0;
            t.set(row, col, 0);
        }
        if (i == counter.size()) break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace sea_test
