#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sea/rational.hpp"
#include "sea/suite.hpp"

namespace sea::fuzzy {

/// Finite ordered base set X of a fuzzy set system [0,1]^X.
struct FuzzySpace {
    std::vector<std::string> points;
};

using SpacePtr = std::shared_ptr<const FuzzySpace>;

SpacePtr make_space(std::vector<std::string> points);

/// Exact-rational function X -> [0,1]. The scalar unit interval is the
/// |X| = 1 case.
class FuzzyElement {
public:
    FuzzyElement(SpacePtr space, std::vector<Rational> values);

    static FuzzyElement constant(const SpacePtr& space, const Rational& r);
    static FuzzyElement zero(const SpacePtr& space);
    static FuzzyElement one(const SpacePtr& space);

    const SpacePtr& space() const { return space_; }
    int size() const { return int(values_.size()); }
    const Rational& value(int i) const { return values_[size_t(i)]; }
    const std::vector<Rational>& values() const { return values_; }

    /// "p=1/2,q=0" with coordinates in space order.
    std::string str() const;
    static FuzzyElement parse(const SpacePtr& space, const std::string& text);

    friend bool operator==(const FuzzyElement& f, const FuzzyElement& g) {
        return f.values_ == g.values_;
    }
    friend bool operator!=(const FuzzyElement& f, const FuzzyElement& g) {
        return !(f == g);
    }

private:
    SpacePtr space_;
    std::vector<Rational> values_;
};

/// f ⊕ g = f + g when f + g <= 1 pointwise.
std::optional<FuzzyElement> fuzzy_sum(const FuzzyElement& f, const FuzzyElement& g);
/// f ∘ g = fg, the pointwise sequential product.
FuzzyElement fuzzy_product(const FuzzyElement& f, const FuzzyElement& g);
FuzzyElement fuzzy_complement(const FuzzyElement& f);
bool fuzzy_leq(const FuzzyElement& f, const FuzzyElement& g);
/// g ⊖ f for f <= g.
FuzzyElement fuzzy_subtract(const FuzzyElement& g, const FuzzyElement& f);
/// f̂: characteristic function of supp(f), the least sharp dominator.
FuzzyElement fuzzy_hat(const FuzzyElement& f);
bool fuzzy_sharp(const FuzzyElement& f);
/// h with g∘h = f and h <= ĝ: pointwise f/g on supp(g), zero elsewhere.
/// Requires f <= g.
FuzzyElement fuzzy_quotient(const FuzzyElement& f, const FuzzyElement& g);

/// Seeded sampling with numerators/denominators bounded by max_den.
class FuzzySampler {
public:
    FuzzySampler(SpacePtr space, std::uint64_t seed, int max_den = 64)
        : space_(std::move(space)), rng_(seed), max_den_(max_den) {}

    Rational rational();
    FuzzyElement element();
    /// Element <= the given one (coordinatewise scaled).
    FuzzyElement below(const FuzzyElement& g);
    /// Element with some coordinates forced to zero.
    FuzzyElement with_zeros();
    const SpacePtr& space() const { return space_; }

private:
    SpacePtr space_;
    std::mt19937_64 rng_;
    int max_den_;
};

/// SEA axioms for (⊕, pointwise ∘) on sampled triples; exact, zero tolerance.
/// The product is commutative, so S1, S2 and associativity carry the load;
/// S3-S5 instances are still exercised directly.
SuiteReport check_axioms(int set_size, int samples, std::uint64_t seed);

/// Theorem-style uniqueness skeleton on the scalar carrier: values a∘(m/n)
/// forced by S1/S2 from splitting 1 into n parts must agree with the
/// candidate product t for all 1 <= m <= n <= n_max.
using ScalarProduct = std::function<Rational(const Rational&, const Rational&)>;
SuiteReport rational_uniqueness_probe(const ScalarProduct& t, int n_max,
                                      const std::vector<Rational>& samples);

// --- polynomial fuzzy system (the Condition (1) counterexample) ---

/// Polynomial with exact rational coefficients, ascending degree order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    int degree() const;
    Rational operator()(const Rational& x) const;
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Unique interpolant of degree <= points.size()-1 through distinct nodes.
    static Polynomial interpolate(
        const std::vector<std::pair<Rational, Rational>>& points);

private:
    std::vector<Rational> coeffs_;
};

/// f(x) = x/2 <= g(x) = 1/2 + x/2 on a rational grid, yet the pointwise
/// solution h(x) = x/(x+1) of f = g·h is matched by no polynomial of degree
/// <= max_degree: every interpolant misses h at a held-out grid point. Also
/// verifies Condition (2) on sampled polynomial triples.
SuiteReport polynomial_counterexample(int grid_points = 64, int max_degree = 6,
                                      std::uint64_t seed = 1);

}  // namespace sea::fuzzy
