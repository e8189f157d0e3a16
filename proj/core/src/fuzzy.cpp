#include "sea/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace sea::fuzzy {

SpacePtr make_space(std::vector<std::string> points) {
    if (points.empty()) throw std::invalid_argument("fuzzy space must be nonempty");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("duplicate point '" + points[i] + "'");
    return std::make_shared<const FuzzySpace>(FuzzySpace{std::move(points)});
}

FuzzyElement::FuzzyElement(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_ || space_->points.size() != values_.size())
        throw std::invalid_argument("fuzzy element arity mismatch");
    for (const auto& v : values_)
        if (!v.in_unit_interval())
            throw std::invalid_argument("fuzzy value " + v.str() + " outside [0,1]");
}

FuzzyElement FuzzyElement::constant(const SpacePtr& space, const Rational& r) {
    return FuzzyElement(space, std::vector<Rational>(space->points.size(), r));
}

FuzzyElement FuzzyElement::zero(const SpacePtr& space) {
    return constant(space, Rational::zero());
}

FuzzyElement FuzzyElement::one(const SpacePtr& space) {
    return constant(space, Rational::one());
}

std::string FuzzyElement::str() const {
    std::string s;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ",";
        s += space_->points[i] + "=" + values_[i].str();
    }
    return s;
}

FuzzyElement FuzzyElement::parse(const SpacePtr& space, const std::string& text) {
    std::vector<Rational> values(space->points.size(), Rational::zero());
    std::vector<bool> seen(space->points.size(), false);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("fuzzy element item '" + item +
                                        "' lacks '='");
        const std::string key = item.substr(0, eq);
        const auto it =
            std::find(space->points.begin(), space->points.end(), key);
        if (it == space->points.end())
            throw std::invalid_argument("unknown point '" + key + "'");
        const size_t idx = size_t(it - space->points.begin());
        if (seen[idx]) throw std::invalid_argument("duplicate point '" + key + "'");
        seen[idx] = true;
        values[idx] = Rational::parse(item.substr(eq + 1));
        pos = comma + 1;
    }
    return FuzzyElement(space, std::move(values));
}

namespace {

void require_same_space(const FuzzyElement& f, const FuzzyElement& g) {
    if (f.space()->points != g.space()->points)
        throw std::invalid_argument("fuzzy elements live on different base sets");
}

}  // namespace

std::optional<FuzzyElement> fuzzy_sum(const FuzzyElement& f, const FuzzyElement& g) {
    require_same_space(f, g);
    std::vector<Rational> out;
    for (int i = 0; i < f.size(); ++i) {
        const Rational s = f.value(i) + g.value(i);
        if (s > Rational::one()) return std::nullopt;
        out.push_back(s);
    }
    return FuzzyElement(f.space(), std::move(out));
}

FuzzyElement fuzzy_product(const FuzzyElement& f, const FuzzyElement& g) {
    require_same_space(f, g);
    std::vector<Rational> out;
    for (int i = 0; i < f.size(); ++i) out.push_back(f.value(i) * g.value(i));
    return FuzzyElement(f.space(), std::move(out));
}

FuzzyElement fuzzy_complement(const FuzzyElement& f) {
    std::vector<Rational> out;
    for (int i = 0; i < f.size(); ++i) out.push_back(Rational::one() - f.value(i));
    return FuzzyElement(f.space(), std::move(out));
}

bool fuzzy_leq(const FuzzyElement& f, const FuzzyElement& g) {
    require_same_space(f, g);
    for (int i = 0; i < f.size(); ++i)
        if (f.value(i) > g.value(i)) return false;
    return true;
}

FuzzyElement fuzzy_subtract(const FuzzyElement& g, const FuzzyElement& f) {
    if (!fuzzy_leq(f, g))
        throw std::invalid_argument("fuzzy_subtract: f not below g");
    std::vector<Rational> out;
    for (int i = 0; i < f.size(); ++i) out.push_back(g.value(i) - f.value(i));
    return FuzzyElement(f.space(), std::move(out));
}

FuzzyElement fuzzy_hat(const FuzzyElement& f) {
    std::vector<Rational> out;
    for (int i = 0; i < f.size(); ++i)
        out.push_back(f.value(i).is_zero() ? Rational::zero() : Rational::one());
    return FuzzyElement(f.space(), std::move(out));
}

bool fuzzy_sharp(const FuzzyElement& f) {
    for (int i = 0; i < f.size(); ++i)
        if (!f.value(i).is_zero() && !f.value(i).is_one()) return false;
    return true;
}

FuzzyElement fuzzy_quotient(const FuzzyElement& f, const FuzzyElement& g) {
    if (!fuzzy_leq(f, g))
        throw std::invalid_argument("fuzzy_quotient: f not below g");
    std::vector<Rational> out;
    for (int i = 0; i < f.size(); ++i)
        out.push_back(g.value(i).is_zero() ? Rational::zero()
                                           : f.value(i) / g.value(i));
    return FuzzyElement(f.space(), std::move(out));
}

Rational FuzzySampler::rational() {
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den_);
    const std::int64_t den = den_dist(rng_);
    std::uniform_int_distribution<std::int64_t> num_dist(0, den);
    return Rational(num_dist(rng_), den);
}

FuzzyElement FuzzySampler::element() {
    std::vector<Rational> out;
    for (size_t i = 0; i < space_->points.size(); ++i) out.push_back(rational());
    return FuzzyElement(space_, std::move(out));
}

FuzzyElement FuzzySampler::below(const FuzzyElement& g) {
    std::vector<Rational> out;
    for (int i = 0; i < g.size(); ++i) out.push_back(rational() * g.value(i));
    return FuzzyElement(space_, std::move(out));
}

FuzzyElement FuzzySampler::with_zeros() {
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<Rational> out;
    for (size_t i = 0; i < space_->points.size(); ++i)
        out.push_back(coin(rng_) == 0 ? Rational::zero() : rational());
    return FuzzyElement(space_, std::move(out));
}

SuiteReport check_axioms(int set_size, int samples, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "fuzzy axioms";
    std::vector<std::string> points;
    for (int i = 0; i < set_size; ++i) points.push_back("x" + std::to_string(i));
    const auto space = make_space(points);
    FuzzySampler sampler(space, seed);
    const auto one = FuzzyElement::one(space);
    const auto zero = FuzzyElement::zero(space);

    auto& s1 = report.add("S1 additivity");
    auto& s2 = report.add("S2 unit");
    auto& s3 = report.add("S3 zero symmetry");
    auto& s4 = report.add("S4 complement and associativity");
    auto& s5 = report.add("S5 closure");
    auto& comm = report.add("commutativity");

    const auto fail = [](CheckLine& line, const std::string& witness) {
        if (line.pass) {
            line.pass = false;
            line.detail = witness;
        }
    };

    for (int it = 0; it < samples; ++it) {
        const auto a = sampler.element();
        const auto b = sampler.with_zeros();
        const auto c = sampler.element();

        // b ⊥ g with g = c·(1-b) <= 1-b
        const auto g = fuzzy_product(c, fuzzy_complement(b));
        const auto bg = fuzzy_sum(b, g);
        if (!bg) {
            fail(s1, "orthogonal pair rejected at sample " + std::to_string(it));
        } else {
            const auto lhs = fuzzy_product(a, *bg);
            const auto rhs = fuzzy_sum(fuzzy_product(a, b), fuzzy_product(a, g));
            if (!rhs || lhs != *rhs)
                fail(s1, "sample " + std::to_string(it) + ": a=" + a.str());
        }

        if (fuzzy_product(one, a) != a) fail(s2, "a=" + a.str());

        // masked vanishes on supp(b), so masked∘b = 0; S3 demands b∘masked = 0
        const auto masked = fuzzy_product(a, fuzzy_complement(fuzzy_hat(b)));
        if (fuzzy_product(masked, b) != zero)
            fail(s3, "premise broke at sample " + std::to_string(it));
        else if (fuzzy_product(b, masked) != zero)
            fail(s3, "sample " + std::to_string(it));

        if (fuzzy_product(a, fuzzy_complement(b)) !=
            fuzzy_product(fuzzy_complement(b), a))
            fail(s4, "complement at sample " + std::to_string(it));
        if (fuzzy_product(a, fuzzy_product(b, c)) !=
            fuzzy_product(fuzzy_product(a, b), c))
            fail(s4, "associativity at sample " + std::to_string(it));

        const auto ab = fuzzy_product(a, b);
        if (fuzzy_product(c, ab) != fuzzy_product(ab, c))
            fail(s5, "product closure at sample " + std::to_string(it));
        const auto half_sum = fuzzy_sum(fuzzy_product(a, FuzzyElement::constant(space, Rational(1, 2))),
                                        fuzzy_product(b, FuzzyElement::constant(space, Rational(1, 2))));
        if (half_sum && fuzzy_product(c, *half_sum) != fuzzy_product(*half_sum, c))
            fail(s5, "orthosum closure at sample " + std::to_string(it));

        if (fuzzy_product(a, b) != fuzzy_product(b, a))
            fail(comm, "sample " + std::to_string(it));
    }
    return report;
}

SuiteReport rational_uniqueness_probe(const ScalarProduct& t, int n_max,
                                      const std::vector<Rational>& samples) {
    SuiteReport report;
    report.suite = "rational uniqueness probe";
    auto& line = report.add("t(a, m/n) = (m/n)a for 1 <= m <= n <= " +
                            std::to_string(n_max));
    long checked = 0;
    for (const auto& a : samples) {
        for (int n = 1; n <= n_max; ++n)
            for (int m = 1; m <= n; ++m) {
                const Rational r(m, n);
                const Rational forced = r * a;  // from 1 = n·(1/n) and S1/S2
                const Rational got = t(a, r);
                ++checked;
                if (got != forced) {
                    line.pass = false;
                    line.detail = "a=" + a.str() + ", r=" + r.str() + ": forced " +
                                  forced.str() + ", got " + got.str();
                    return report;
                }
            }
    }
    line.detail = std::to_string(checked) + " forced values agree";
    return report;
}

// --- polynomials ---

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == Rational::zero())
        coeffs_.pop_back();
}

int Polynomial::degree() const { return int(coeffs_.size()) - 1; }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = Rational::zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial{};
    std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1,
                              Rational::zero());
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()),
                              Rational::zero());
    for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()),
                              Rational::zero());
    for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
    // Lagrange basis, assembled coefficientwise in exact rationals
    Polynomial acc;
    for (size_t i = 0; i < points.size(); ++i) {
        Polynomial basis({Rational::one()});
        Rational denom = Rational::one();
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial({-points[j].first, Rational::one()});
            denom *= points[i].first - points[j].first;
        }
        std::vector<Rational> scaled;
        for (const auto& c : basis.coeffs()) scaled.push_back(c * points[i].second / denom);
        acc = acc + Polynomial(std::move(scaled));
    }
    return acc;
}

SuiteReport polynomial_counterexample(int grid_points, int max_degree,
                                      std::uint64_t seed) {
    SuiteReport report;
    report.suite = "polynomial counterexample";

    const auto h = [](const Rational& x) { return x / (x + Rational::one()); };
    const Polynomial f({Rational::zero(), Rational(1, 2)});
    const Polynomial g({Rational(1, 2), Rational(1, 2)});

    std::vector<Rational> grid;
    for (int k = 0; k < grid_points; ++k) grid.emplace_back(k, grid_points - 1);

    auto& leq_line = report.add("f <= g on the grid");
    for (const auto& x : grid)
        if (f(x) > g(x)) {
            leq_line.pass = false;
            leq_line.detail = "x=" + x.str();
            break;
        }

    auto& sol_line = report.add("h = f/g pointwise, h(x) = x/(x+1)");
    for (const auto& x : grid) {
        const Rational expected = g(x).is_zero() ? Rational::zero() : f(x) / g(x);
        if (expected != h(x)) {
            sol_line.pass = false;
            sol_line.detail = "x=" + x.str();
            break;
        }
    }

    for (int d = 0; d <= max_degree; ++d) {
        auto& line = report.add("degree " + std::to_string(d) +
                                " interpolant misses h at a held-out point");
        std::vector<std::pair<Rational, Rational>> nodes;
        for (int i = 0; i <= d; ++i) {
            const size_t idx = d == 0 ? 0 : size_t(i) * size_t(grid_points - 1) / size_t(d);
            nodes.emplace_back(grid[idx], h(grid[idx]));
        }
        const Polynomial p = Polynomial::interpolate(nodes);
        bool found = false;
        for (const auto& z : grid) {
            bool is_node = false;
            for (const auto& [x, y] : nodes)
                if (x == z) { is_node = true; break; }
            if (is_node) continue;
            if (p(z) != h(z)) {
                found = true;
                line.detail = "z=" + z.str() + ": interpolant " + p(z).str() +
                              " vs h " + h(z).str();
                break;
            }
        }
        line.pass = found;
    }

    // Condition (2) on polynomial samples: hf <= hg on the grid forces
    // ĥf = f <= g = ĥg there (ĥ = 1 for h != 0, zeros of h being finite)
    auto& cond2 = report.add("condition (2) on polynomial samples");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> num(0, 8);
    const auto random_poly = [&](int deg) {
        std::vector<Rational> cs;
        Rational budget = Rational::one();
        for (int i = 0; i <= deg; ++i) {
            const Rational c = Rational(num(rng), 24);
            cs.push_back(c <= budget ? c : budget);
            budget -= cs.back();
        }
        return Polynomial(std::move(cs));
    };
    for (int it = 0; it < 50 && cond2.pass; ++it) {
        const Polynomial hr = random_poly(2);
        if (hr.is_zero()) continue;
        const Polynomial fr = random_poly(2);
        // gr >= fr by adding a nonnegative-coefficient slack within budget
        Polynomial slack = random_poly(2);
        Polynomial gr = fr + slack;
        bool in_range = true;
        for (const auto& x : grid)
            if (!gr(x).in_unit_interval()) { in_range = false; break; }
        if (!in_range) continue;
        bool premise = true;
        for (const auto& x : grid)
            if ((hr * fr)(x) > (hr * gr)(x)) { premise = false; break; }
        if (!premise) continue;
        for (const auto& x : grid)
            if (fr(x) > gr(x)) {
                cond2.pass = false;
                cond2.detail = "x=" + x.str();
                break;
            }
    }

    return report;
}

}  // namespace sea::fuzzy
