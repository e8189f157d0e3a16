#include "sea/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>

namespace sea {

namespace {

using Mask = std::uint32_t;

struct Engine {
    const FiniteEffectAlgebra& ea;
    int n;
    ElemId zero, one;
    std::vector<ElemId> comp;                     // complements
    std::vector<std::array<ElemId, 3>> triples;   // (b, c, d): b <= c, b ⊕ c = d
    std::vector<std::vector<int>> col_triples;    // column id -> triple indices
    std::vector<std::vector<ElemId>> sum_of;      // -1 when undefined
    std::vector<int> rank;                        // #{y : y < x}, for cell order
    int limit;

    std::vector<SeqProductTable> solutions;
    bool truncated = false;
    SolveStats stats;

    explicit Engine(const FiniteEffectAlgebra& e, int lim)
        : ea(e), n(e.size()), zero(e.zero()), one(e.one()), limit(lim) {
        for (ElemId a = 0; a < n; ++a) {
            const auto c = ea.complement(a);
            if (!c) throw StructuralError("solver: carrier lacks unique complements");
            comp.push_back(*c);
        }
        sum_of.assign(size_t(n), std::vector<ElemId>(size_t(n), kUndefined));
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b)
                if (const auto s = ea.sum(a, b)) sum_of[size_t(a)][size_t(b)] = *s;

        col_triples.assign(size_t(n), {});
        for (ElemId b = 0; b < n; ++b)
            for (ElemId c = b; c < n; ++c)
                if (const ElemId d = sum_of[size_t(b)][size_t(c)]; d != kUndefined) {
                    const int idx = int(triples.size());
                    triples.push_back({b, c, d});
                    for (ElemId x : {b, c, d}) {
                        auto& lst = col_triples[size_t(x)];
                        if (std::find(lst.begin(), lst.end(), idx) == lst.end())
                            lst.push_back(idx);
                    }
                }

        const OrderRelation order(ea);
        rank.assign(size_t(n), 0);
        for (ElemId x = 0; x < n; ++x)
            for (ElemId y = 0; y < n; ++y)
                if (order.lt(y, x)) ++rank[size_t(x)];
    }

    size_t cell(ElemId a, ElemId b) const { return size_t(a) * size_t(n) + size_t(b); }

    // --- propagation over a candidate-mask table ---

    struct Domain {
        std::vector<Mask> cand;
        std::vector<std::uint8_t> dirty;
        std::vector<size_t> queue;
    };

    bool set_mask(Domain& d, size_t cell_idx, Mask m, int rule) {
        if (m == d.cand[cell_idx]) return true;
        ++stats.firings[size_t(rule)];
        d.cand[cell_idx] = m;
        if (!d.dirty[cell_idx]) {
            d.dirty[cell_idx] = 1;
            d.queue.push_back(cell_idx);
        }
        return m != 0;
    }

    // S1 arc consistency on cells (a,b), (a,c), (a,d) for one sum triple.
    bool filter_triple(Domain& d, ElemId a, const std::array<ElemId, 3>& t) {
        const auto [b, c, dd] = t;
        const size_t ib = cell(a, b), ic = cell(a, c), id = cell(a, dd);
        const Mask mb = d.cand[ib], mc = d.cand[ic], md = d.cand[id];

        Mask nb = 0, nc = 0, nd = 0;
        if (b == c) {
            // same cell on both operands: supports are pairs (v, v)
            for (Mask vb = mb; vb;) {
                const int v = std::countr_zero(vb);
                vb &= vb - 1;
                const ElemId s = sum_of[size_t(v)][size_t(v)];
                if (s == kUndefined || !(md & (Mask(1) << s))) continue;
                nb |= Mask(1) << v;
                nd |= Mask(1) << s;
            }
            return set_mask(d, ib, nb, 0) && set_mask(d, id, nd, 0);
        }
        for (Mask vb = mb; vb;) {
            const int v = std::countr_zero(vb);
            vb &= vb - 1;
            const auto& row = sum_of[size_t(v)];
            for (Mask vc = mc; vc;) {
                const int u = std::countr_zero(vc);
                vc &= vc - 1;
                const ElemId s = row[size_t(u)];
                if (s == kUndefined || !(md & (Mask(1) << s))) continue;
                nb |= Mask(1) << v;
                nc |= Mask(1) << u;
                nd |= Mask(1) << s;
            }
        }
        return set_mask(d, ib, nb, 0) && set_mask(d, ic, nc, 0) &&
               set_mask(d, id, nd, 0);
    }

    bool intersect_cells(Domain& d, size_t p, size_t q, int rule) {
        const Mask m = d.cand[p] & d.cand[q];
        return set_mask(d, p, m, rule) && set_mask(d, q, m, rule);
    }

    bool decided(const Domain& d, size_t idx) const {
        return std::popcount(d.cand[idx]) == 1;
    }
    ElemId value(const Domain& d, size_t idx) const {
        return ElemId(std::countr_zero(d.cand[idx]));
    }

    bool drain_queue(Domain& d) {
        while (!d.queue.empty()) {
            const size_t idx = d.queue.back();
            d.queue.pop_back();
            d.dirty[idx] = 0;
            if (d.cand[idx] == 0) return false;
            const ElemId a = ElemId(idx / size_t(n));
            const ElemId x = ElemId(idx % size_t(n));
            for (const int ti : col_triples[size_t(x)])
                if (!filter_triple(d, a, triples[size_t(ti)])) return false;
            // S3: a∘b = 0 forces b∘a = 0; a∘b surely nonzero forbids b∘a = 0.
            const size_t mirror = cell(x, a);
            const Mask zbit = Mask(1) << zero;
            if (d.cand[idx] == zbit) {
                if (!set_mask(d, mirror, d.cand[mirror] & zbit, 2)) return false;
            } else if (!(d.cand[idx] & zbit)) {
                if (!set_mask(d, mirror, d.cand[mirror] & ~zbit, 2)) return false;
            }
        }
        return true;
    }

    // Lazy S4/S5 closure on decided commuting pairs. Returns false on
    // contradiction; sets progressed when any mask narrowed.
    bool sweep_s45(Domain& d, bool& progressed) {
        progressed = false;
        std::vector<std::vector<ElemId>> partners;
        partners.resize(size_t(n));
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b) {
                const size_t ab = cell(a, b), ba = cell(b, a);
                if (decided(d, ab) && decided(d, ba) &&
                    value(d, ab) == value(d, ba))
                    partners[size_t(a)].push_back(b);
            }

        const size_t before = count_bits(d);
        for (ElemId a = 0; a < n; ++a)
            for (const ElemId b : partners[size_t(a)]) {
                // S4: a | b implies a | b'
                if (!intersect_cells(d, cell(a, comp[size_t(b)]),
                                     cell(comp[size_t(b)], a), 3))
                    return false;
                // S4: a | b implies a∘(b∘c) = (a∘b)∘c
                const ElemId ab = value(d, cell(a, b));
                for (ElemId c = 0; c < n; ++c) {
                    const size_t bc = cell(b, c);
                    if (!decided(d, bc)) continue;
                    if (!intersect_cells(d, cell(a, value(d, bc)), cell(ab, c), 3))
                        return false;
                }
            }

        for (ElemId c = 0; c < n; ++c) {
            const auto& ps = partners[size_t(c)];
            for (const ElemId a : ps)
                for (const ElemId b : ps) {
                    const size_t ab = cell(a, b);
                    if (decided(d, ab)) {
                        const ElemId w = value(d, ab);
                        if (!intersect_cells(d, cell(c, w), cell(w, c), 4))
                            return false;
                    }
                    const ElemId s = sum_of[size_t(a)][size_t(b)];
                    if (s != kUndefined &&
                        !intersect_cells(d, cell(c, s), cell(s, c), 4))
                        return false;
                }
        }
        progressed = count_bits(d) != before;
        return true;
    }

    size_t count_bits(const Domain& d) const {
        size_t total = 0;
        for (const Mask m : d.cand) total += size_t(std::popcount(m));
        return total;
    }

    bool propagate(Domain& d) {
        for (;;) {
            if (!drain_queue(d)) return false;
            bool progressed = false;
            if (!sweep_s45(d, progressed)) return false;
            if (!progressed && d.queue.empty()) return true;
        }
    }

    // --- search ---

    std::optional<size_t> pick_cell(const Domain& d) const {
        std::optional<size_t> best;
        int best_count = 0, best_rank = 0;
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b) {
                const size_t idx = cell(a, b);
                const int cnt = std::popcount(d.cand[idx]);
                if (cnt <= 1) continue;
                const int r = rank[size_t(b)];
                if (!best || cnt < best_count ||
                    (cnt == best_count && r < best_rank)) {
                    best = idx;
                    best_count = cnt;
                    best_rank = r;
                }
            }
        return best;
    }

    void emit(const Domain& d) {
        SeqProductTable t(n);
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b) t.set(a, b, value(d, cell(a, b)));
        // independent re-verification; propagation is not trusted here
        if (!check_sea_axioms(ea, t).pass())
            throw std::logic_error("solver emitted a table failing S1-S5");
        solutions.push_back(std::move(t));
        // truncation means enumeration was actually cut, i.e. a solution
        // beyond the limit was reached; exactly `limit` solutions is not a cut
        if (int(solutions.size()) > limit) truncated = true;
    }

    void search(Domain& d) {
        if (truncated) return;
        const auto choice = pick_cell(d);
        if (!choice) {
            emit(d);
            return;
        }
        const Mask options = d.cand[*choice];
        for (Mask m = options; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            Domain child = d;
            ++stats.nodes;
            if (!set_mask(child, *choice, Mask(1) << v, 0)) continue;
            if (propagate(child)) {
                search(child);
                if (truncated) return;
            } else {
                ++stats.prunes;
            }
        }
    }

    SolveOutcome run() {
        const auto start = std::chrono::steady_clock::now();
        Domain d;
        d.cand.assign(size_t(n) * size_t(n), (Mask(1) << n) - 1);
        d.dirty.assign(d.cand.size(), 0);

        // rows/columns of 0 and 1 are forced in every sequential product
        bool consistent = true;
        for (ElemId x = 0; x < n && consistent; ++x) {
            consistent =
                set_mask(d, cell(one, x), d.cand[cell(one, x)] & (Mask(1) << x), 1) &&
                set_mask(d, cell(zero, x), d.cand[cell(zero, x)] & (Mask(1) << zero), 0) &&
                set_mask(d, cell(x, zero), d.cand[cell(x, zero)] & (Mask(1) << zero), 2) &&
                set_mask(d, cell(x, one), d.cand[cell(x, one)] & (Mask(1) << x), 3);
        }
        if (consistent && propagate(d)) search(d);
        else ++stats.prunes;

        std::sort(solutions.begin(), solutions.end());
        solutions.erase(std::unique(solutions.begin(), solutions.end()),
                        solutions.end());
        if (int(solutions.size()) > limit) solutions.resize(size_t(limit));

        SolveOutcome out;
        out.tables = std::move(solutions);
        out.truncated = truncated;
        out.verdict = out.tables.empty()      ? SolveVerdict::none
                      : out.tables.size() == 1 && !out.truncated
                          ? SolveVerdict::unique
                          : SolveVerdict::multiple;
        out.stats = stats;
        out.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return out;
    }
};

}  // namespace

SolveOutcome enumerate_products(const FiniteEffectAlgebra& ea, int limit,
                                int max_carrier) {
    if (ea.size() > max_carrier)
        throw CarrierTooLargeError(
            "enumerate_products: carrier " + ea.name() + " has " +
            std::to_string(ea.size()) + " elements, above the bound of " +
            std::to_string(max_carrier) + "; refusing");
    if (limit < 1) throw StructuralError("enumerate_products: limit must be >= 1");
    if (!check_effect_axioms(ea).pass())
        throw StructuralError("enumerate_products: '" + ea.name() +
                              "' is not an effect algebra");
    Engine engine(ea, limit);
    return engine.run();
}

std::optional<SeqProductTable> unique_product(const FiniteEffectAlgebra& ea) {
    auto outcome = enumerate_products(ea, 2);
    switch (outcome.verdict) {
        case SolveVerdict::none:
            return std::nullopt;
        case SolveVerdict::unique:
            return outcome.tables.front();
        case SolveVerdict::multiple:
            throw MultipleProductsError(outcome.tables[0], outcome.tables[1]);
    }
    return std::nullopt;
}

std::string search_statistics(const SolveOutcome& outcome) {
    std::ostringstream os;
    os << "verdict=";
    switch (outcome.verdict) {
        case SolveVerdict::none: os << "none"; break;
        case SolveVerdict::unique: os << "unique"; break;
        case SolveVerdict::multiple:
            os << "multiple(" << outcome.tables.size()
               << (outcome.truncated ? ", limit hit" : "") << ")";
            break;
    }
    os << " solutions=" << outcome.tables.size() << " nodes=" << outcome.stats.nodes
       << " prunes=" << outcome.stats.prunes << " firings=[";
    for (size_t i = 0; i < outcome.stats.firings.size(); ++i)
        os << (i ? "," : "") << "S" << i + 1 << ":" << outcome.stats.firings[i];
    os << "] wall=" << outcome.stats.wall_seconds << "s";
    return os.str();
}

}  // namespace sea
