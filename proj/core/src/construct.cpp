#include "sea/construct.hpp"

#include <algorithm>
#include <numeric>

namespace sea {

namespace {

constexpr int kMaxCarrier = 4096;

void require_verified(const FiniteEffectAlgebra& ea, const char* what) {
    if (!check_effect_axioms(ea).pass())
        throw StructuralError(std::string(what) + ": '" + ea.name() +
                              "' is not an effect algebra");
}

}  // namespace

ElemId ProductAlgebra::encode(const std::vector<ElemId>& tuple) const {
    if (tuple.size() != factor_sizes.size())
        throw StructuralError("product tuple arity mismatch");
    long code = 0;
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= factor_sizes[i])
            throw StructuralError("product tuple component out of range");
        code = code * factor_sizes[i] + tuple[i];
    }
    return ElemId(code);
}

std::vector<ElemId> ProductAlgebra::decode(ElemId x) const {
    std::vector<ElemId> tuple(factor_sizes.size());
    long code = x;
    for (size_t i = factor_sizes.size(); i-- > 0;) {
        tuple[i] = ElemId(code % factor_sizes[i]);
        code /= factor_sizes[i];
    }
    return tuple;
}

ElemId ProductAlgebra::marker(size_t j) const { return marker_ids.at(j); }

ProductAlgebra cartesian_product(const std::vector<FiniteEffectAlgebra>& factors) {
    if (factors.empty()) throw StructuralError("cartesian_product: no factors");
    long total = 1;
    for (const auto& f : factors) {
        require_verified(f, "cartesian_product");
        total *= f.size();
        if (total > kMaxCarrier)
            throw StructuralError("cartesian_product: carrier too large");
    }

    ProductAlgebra out{FiniteEffectAlgebra("tmp", {"0", "1"}), {}};
    for (const auto& f : factors) out.factor_sizes.push_back(f.size());

    const auto tuple_at = [&](long code) {
        std::vector<ElemId> t(factors.size());
        for (size_t i = factors.size(); i-- > 0;) {
            t[i] = ElemId(code % factors[i].size());
            code /= factors[i].size();
        }
        return t;
    };
    const auto name_of = [&](const std::vector<ElemId>& t) {
        std::string s = "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += factors[i].element_name(t[i]);
        }
        return s + ")";
    };

    std::vector<std::string> names;
    for (long code = 0; code < total; ++code) names.push_back(name_of(tuple_at(code)));

    std::vector<ElemId> zero_t, one_t;
    for (const auto& f : factors) {
        zero_t.push_back(f.zero());
        one_t.push_back(f.one());
    }

    std::string pname = "Prod(";
    for (size_t i = 0; i < factors.size(); ++i)
        pname += (i ? "," : "") + factors[i].name();
    pname += ")";

    FiniteEffectAlgebra prod(pname, names, name_of(zero_t), name_of(one_t));
    for (long x = 0; x < total; ++x)
        for (long y = x; y < total; ++y) {
            const auto tx = tuple_at(x), ty = tuple_at(y);
            std::vector<ElemId> tz(factors.size());
            bool ok = true;
            for (size_t i = 0; i < factors.size() && ok; ++i) {
                const auto s = factors[i].sum(tx[i], ty[i]);
                if (!s) ok = false;
                else tz[i] = *s;
            }
            if (ok) prod.set_sum(ElemId(x), ElemId(y), prod.id_of(name_of(tz)));
        }

    out.algebra = std::move(prod);
    for (size_t j = 0; j < factors.size(); ++j) {
        auto t = zero_t;
        t[j] = factors[j].one();
        out.marker_ids.push_back(out.algebra.id_of(name_of(t)));
    }
    return out;
}

FiniteEffectAlgebra horizontal_sum(const std::vector<FiniteEffectAlgebra>& summands) {
    if (summands.empty()) throw StructuralError("horizontal_sum: no summands");
    std::vector<std::string> names{"0", "1"};
    std::string hname = "HS(";
    for (size_t i = 0; i < summands.size(); ++i) {
        require_verified(summands[i], "horizontal_sum");
        hname += (i ? "," : "") + summands[i].name();
        for (ElemId a = 0; a < summands[i].size(); ++a)
            if (a != summands[i].zero() && a != summands[i].one())
                names.push_back(std::to_string(i) + ":" + summands[i].element_name(a));
    }
    hname += ")";
    if (int(names.size()) > kMaxCarrier)
        throw StructuralError("horizontal_sum: carrier too large");

    FiniteEffectAlgebra hs(hname, names, "0", "1");
    const auto glued = [&](size_t i, ElemId a) -> ElemId {
        if (a == summands[i].zero()) return hs.zero();
        if (a == summands[i].one()) return hs.one();
        return hs.id_of(std::to_string(i) + ":" + summands[i].element_name(a));
    };
    for (size_t i = 0; i < summands.size(); ++i)
        for (ElemId a = 0; a < summands[i].size(); ++a)
            for (ElemId b = a; b < summands[i].size(); ++b)
                if (const auto c = summands[i].sum(a, b))
                    hs.set_sum(glued(i, a), glued(i, b), glued(i, *c));
    return hs;
}

IntervalAlgebra interval_algebra(const FiniteEffectAlgebra& ea, ElemId b) {
    require_verified(ea, "interval_algebra");
    if (b == ea.zero()) throw StructuralError("interval_algebra: b must be nonzero");
    const OrderRelation order(ea);

    IntervalAlgebra out{FiniteEffectAlgebra("tmp", {"0", "1"}), {}};
    std::vector<std::string> names;
    for (ElemId a = 0; a < ea.size(); ++a)
        if (order.leq(a, b)) {
            out.parent_of.push_back(a);
            names.push_back(ea.element_name(a));
        }
    FiniteEffectAlgebra ia(ea.name() + "[0," + ea.element_name(b) + "]", names,
                           ea.element_name(ea.zero()), ea.element_name(b));
    for (size_t i = 0; i < out.parent_of.size(); ++i)
        for (size_t j = i; j < out.parent_of.size(); ++j) {
            const auto s = ea.sum(out.parent_of[i], out.parent_of[j]);
            if (s && order.leq(*s, b))
                ia.set_sum(ElemId(i), ElemId(j), ia.id_of(ea.element_name(*s)));
        }
    out.algebra = std::move(ia);
    return out;
}

IntervalAlgebra interval_algebra(const SymbolicEffectAlgebra& alg, SymElem b, int k) {
    if (b == alg.zero())
        throw StructuralError("interval_algebra: b must be nonzero");
    std::vector<SymElem> carrier;
    for (const auto& x : alg.window(k))
        if (alg.leq(x, b)) carrier.push_back(x);

    // sum-closure within the window, otherwise the interval is not captured
    for (const auto& x : carrier)
        for (const auto& y : carrier) {
            const auto s = alg.sum(x, y);
            if (s && alg.leq(*s, b) &&
                std::find(carrier.begin(), carrier.end(), *s) == carrier.end())
                throw StructuralError(
                    "interval_algebra: [0," + alg.describe(b) +
                    "] is not sum-closed within window K=" + std::to_string(k));
        }

    std::vector<std::string> names;
    for (const auto& x : carrier) names.push_back(alg.describe(x));
    FiniteEffectAlgebra ia("interval[0," + alg.describe(b) + "]", names,
                           alg.describe(alg.zero()), alg.describe(b));
    for (size_t i = 0; i < carrier.size(); ++i)
        for (size_t j = i; j < carrier.size(); ++j) {
            const auto s = alg.sum(carrier[i], carrier[j]);
            if (s && alg.leq(*s, b))
                ia.set_sum(ElemId(i), ElemId(j), ia.id_of(alg.describe(*s)));
        }
    IntervalAlgebra out{std::move(ia), {}};
    return out;
}

std::string verify_isomorphism(const FiniteEffectAlgebra& e,
                               const FiniteEffectAlgebra& f,
                               const EAIsomorphism& iso) {
    if (e.size() != f.size()) return "carrier sizes differ";
    if (int(iso.forward.size()) != e.size() || int(iso.inverse.size()) != f.size())
        return "map sizes do not match carriers";
    for (ElemId a = 0; a < e.size(); ++a) {
        const ElemId fa = iso.forward[size_t(a)];
        if (fa < 0 || fa >= f.size()) return "forward image out of range";
        if (iso.inverse[size_t(fa)] != a) return "inverse does not invert forward";
    }
    if (iso.forward[size_t(e.zero())] != f.zero()) return "zero not preserved";
    if (iso.forward[size_t(e.one())] != f.one()) return "one not preserved";
    for (ElemId a = 0; a < e.size(); ++a)
        for (ElemId b = 0; b < e.size(); ++b) {
            const auto s = e.sum(a, b);
            const auto fs = f.sum(iso.forward[size_t(a)], iso.forward[size_t(b)]);
            if (s.has_value() != fs.has_value())
                return "orthogonality not preserved at (" + e.element_name(a) + "," +
                       e.element_name(b) + ")";
            if (s && iso.forward[size_t(*s)] != *fs)
                return "sum not preserved at (" + e.element_name(a) + "," +
                       e.element_name(b) + ")";
        }
    return {};
}

namespace {

int sum_degree(const FiniteEffectAlgebra& ea, ElemId a) {
    int d = 0;
    for (ElemId x = 0; x < ea.size(); ++x)
        if (ea.defined(a, x)) ++d;
    return d;
}

bool extend_iso(const FiniteEffectAlgebra& e, const FiniteEffectAlgebra& f,
                std::vector<ElemId>& fwd, std::vector<ElemId>& used, ElemId next,
                const std::vector<int>& deg_e, const std::vector<int>& deg_f) {
    const int n = e.size();
    if (next == n) return true;
    if (fwd[size_t(next)] != kUndefined)
        return extend_iso(e, f, fwd, used, next + 1, deg_e, deg_f);
    for (ElemId img = 0; img < n; ++img) {
        if (used[size_t(img)]) continue;
        if (deg_e[size_t(next)] != deg_f[size_t(img)]) continue;
        bool ok = true;
        for (ElemId a = 0; a < n && ok; ++a) {
            if (fwd[size_t(a)] == kUndefined) continue;
            for (auto [x, y] : {std::pair{next, a}, std::pair{a, next}}) {
                const auto s = e.sum(x, y);
                const ElemId fx = x == next ? img : fwd[size_t(x)];
                const ElemId fy = y == next ? img : fwd[size_t(y)];
                const auto fs = f.sum(fx, fy);
                if (s.has_value() != fs.has_value()) { ok = false; break; }
                if (s && fwd[size_t(*s)] != kUndefined && fwd[size_t(*s)] != *fs) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        fwd[size_t(next)] = img;
        used[size_t(img)] = 1;
        if (extend_iso(e, f, fwd, used, next + 1, deg_e, deg_f)) return true;
        fwd[size_t(next)] = kUndefined;
        used[size_t(img)] = 0;
    }
    return false;
}

}  // namespace

std::optional<EAIsomorphism> find_isomorphism(const FiniteEffectAlgebra& e,
                                              const FiniteEffectAlgebra& f) {
    if (e.size() != f.size()) return std::nullopt;
    if (e.size() > 64) throw StructuralError("find_isomorphism: carrier above 64");
    std::vector<int> deg_e, deg_f;
    for (ElemId a = 0; a < e.size(); ++a) deg_e.push_back(sum_degree(e, a));
    for (ElemId a = 0; a < f.size(); ++a) deg_f.push_back(sum_degree(f, a));

    std::vector<ElemId> fwd(size_t(e.size()), kUndefined);
    std::vector<ElemId> used(size_t(f.size()), 0);
    fwd[size_t(e.zero())] = f.zero();
    used[size_t(f.zero())] = 1;
    fwd[size_t(e.one())] = f.one();
    used[size_t(f.one())] = 1;
    if (!extend_iso(e, f, fwd, used, 0, deg_e, deg_f)) return std::nullopt;

    EAIsomorphism iso;
    iso.forward = fwd;
    iso.inverse.assign(size_t(f.size()), kUndefined);
    for (ElemId a = 0; a < e.size(); ++a) iso.inverse[size_t(fwd[size_t(a)])] = a;
    const auto err = verify_isomorphism(e, f, iso);
    if (!err.empty()) throw StructuralError("find_isomorphism: " + err);
    return iso;
}

SeqProductTable transport_product(const FiniteEffectAlgebra& e,
                                  const FiniteEffectAlgebra& f,
                                  const EAIsomorphism& iso,
                                  const SeqProductTable& t) {
    const auto err = verify_isomorphism(e, f, iso);
    if (!err.empty()) throw StructuralError("transport_product: " + err);
    if (t.size() != e.size())
        throw StructuralError("transport_product: table does not match domain");
    SeqProductTable out(f.size());
    for (ElemId a = 0; a < f.size(); ++a)
        for (ElemId b = 0; b < f.size(); ++b)
            out.set(a, b,
                    iso.forward[size_t(
                        t.at(iso.inverse[size_t(a)], iso.inverse[size_t(b)]))]);
    return out;
}

FiniteEffectAlgebra catalog_chain(int n) {
    if (n < 1) throw StructuralError("catalog_chain: n must be >= 1");
    std::vector<std::string> names{"0"};
    for (int i = 1; i < n; ++i)
        names.push_back(i == 1 ? "a" : std::to_string(i) + "a");
    names.push_back("1");
    FiniteEffectAlgebra chain("C" + std::to_string(n + 1), names, "0", "1");
    for (int i = 0; i <= n; ++i)
        for (int j = i; i + j <= n; ++j)
            chain.set_sum(ElemId(i), ElemId(j), ElemId(i + j));
    return chain;
}

FiniteEffectAlgebra catalog_boolean(int k) {
    if (k < 1 || k > 6) throw StructuralError("catalog_boolean: k in [1,6]");
    const int n = 1 << k;
    static constexpr char kAtoms[] = "xyzuvw";
    std::vector<std::string> names;
    for (int mask = 0; mask < n; ++mask) {
        if (mask == 0) { names.push_back("0"); continue; }
        if (mask == n - 1) { names.push_back("1"); continue; }
        std::string s;
        for (int bit = 0; bit < k; ++bit)
            if (mask & (1 << bit)) s += kAtoms[bit];
        names.push_back(s);
    }
    FiniteEffectAlgebra boolean("B" + std::to_string(n), names, "0", "1");
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            if ((a & b) == 0) boolean.set_sum(ElemId(a), ElemId(b), ElemId(a | b));
    return boolean;
}

FiniteEffectAlgebra catalog_diamond() {
    FiniteEffectAlgebra d("D", {"0", "a", "b", "1"}, "0", "1");
    const ElemId a = d.id_of("a"), b = d.id_of("b"), one = d.one(), zero = d.zero();
    d.set_sum(a, a, one);
    d.set_sum(b, b, one);
    for (ElemId x : {zero, a, b, one}) d.set_sum(zero, x, x);
    return d;
}

bool is_boolean_algebra(const FiniteEffectAlgebra& ea) {
    const int n = ea.size();
    if (n < 2 || (n & (n - 1)) != 0 || n > 64) return false;
    int k = 0;
    while ((1 << k) < n) ++k;
    return find_isomorphism(ea, catalog_boolean(k)).has_value();
}

SeqProductTable meet_product(const FiniteEffectAlgebra& ea) {
    const OrderRelation order(ea);
    SeqProductTable t(ea.size());
    for (ElemId a = 0; a < ea.size(); ++a)
        for (ElemId b = 0; b < ea.size(); ++b) {
            const auto m = order.meet(a, b);
            if (!m)
                throw StructuralError("meet_product: meet missing in " + ea.name());
            t.set(a, b, *m);
        }
    return t;
}

}  // namespace sea
