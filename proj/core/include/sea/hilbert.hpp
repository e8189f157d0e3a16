#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sea/matrix.hpp"
#include "sea/suite.hpp"

namespace sea::hilbert {

struct Tolerances {
    double hermitian = 1e-10;       // hermiticity defect on construction
    double loewner = 1e-9;          // Löwner comparisons
    double quotient = 1e-8;         // quotient certification
    double support_cutoff = 1e-8;   // eigenvalue cutoff, relative to λ_max
};

class LoewnerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateSpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hermitian A with 0 <= A <= I. Validated on construction: hermiticity to
/// tolerance, spectrum within [-tol, 1+tol], then clamped into [0,1].
class MatrixEffect {
public:
    explicit MatrixEffect(const Matrix& m, const Tolerances& tol = {});

    static MatrixEffect zero(int dim);
    static MatrixEffect identity(int dim);
    static MatrixEffect diag(const std::vector<double>& entries,
                             const Tolerances& tol = {});

    int dim() const { return mat_.dim(); }
    const Matrix& matrix() const { return mat_; }

private:
    MatrixEffect() = default;
    Matrix mat_;
};

/// Positive, trace-one W; faithful iff strictly positive definite.
class DensityOperator {
public:
    explicit DensityOperator(const Matrix& m, const Tolerances& tol = {});
    int dim() const { return mat_.dim(); }
    const Matrix& matrix() const { return mat_; }
    bool faithful() const { return faithful_; }

private:
    Matrix mat_;
    bool faithful_ = false;
};

/// P_x = x x* for a unit vector x.
struct RankOneProjection {
    std::vector<Complex> x;
    Matrix p;

    explicit RankOneProjection(std::vector<Complex> v);
};

/// A ∘ B = A^{1/2} B A^{1/2}, the standard sequential product.
MatrixEffect std_product(const MatrixEffect& a, const MatrixEffect& b,
                         const Tolerances& tol = {});

/// Löwner order to tolerance: smallest eigenvalue of b - a >= -tol.
bool loewner_leq(const MatrixEffect& a, const MatrixEffect& b,
                 const Tolerances& tol = {});

/// Â: projection onto the span of eigenvectors above the support cutoff; the
/// least sharp element above a. Throws DegenerateSpectrumError when the
/// spectrum crowds the cutoff.
MatrixEffect support_projection(const MatrixEffect& a, const Tolerances& tol = {});

bool is_projection(const MatrixEffect& a, double tol = 1e-9);

struct QuotientWitness {
    MatrixEffect a, b, c;      // a = b ∘ c with c <= b̂
    double residual_product;   // ‖B^{1/2} C B^{1/2} - A‖_F
    double residual_support;   // max(0, -λ_min(P_B - C))
};

/// The sequential quotient a/b via C = T T*, T = pinv(B^{1/2}) A^{1/2}.
/// Requires a <= b; certifies the defining properties or throws
/// CertificationError carrying the residual norms.
QuotientWitness sequential_quotient(const MatrixEffect& a, const MatrixEffect& b,
                                    const Tolerances& tol = {});

/// Deterministic seeded sampling of effects and related objects.
class EffectSampler {
public:
    EffectSampler(int dim, std::uint64_t seed) : dim_(dim), rng_(seed) {}

    MatrixEffect effect();
    /// Effect dominated by (I - a), so that a ⊥ result.
    MatrixEffect orthogonal_to(const MatrixEffect& a);
    /// Effect supported inside the given projection.
    MatrixEffect inside(const MatrixEffect& projection);
    MatrixEffect projection(int rank);
    /// Random effect with some eigenvalues zeroed (rank-deficient half the time).
    MatrixEffect possibly_singular_effect();
    /// Pair commuting with each other (common eigenbasis).
    std::pair<MatrixEffect, MatrixEffect> commuting_pair();
    /// (c, a, b) with [c,a] = [c,b] = 0 but a, b generally noncommuting.
    std::array<MatrixEffect, 3> block_commuting_triple();
    std::vector<Complex> unit_vector();
    double uniform01() { return std::uniform_real_distribution<double>(0, 1)(rng_); }
    DensityOperator faithful_density();
    int dim() const { return dim_; }
    std::mt19937_64& rng() { return rng_; }

private:
    Matrix gaussian_hermitian();
    int dim_;
    std::mt19937_64 rng_;
    Tolerances tol_;
};

// --- check suites (one SuiteReport per CLI suite name) ---

SuiteReport check_axioms(int dim, int samples, std::uint64_t seed,
                         const Tolerances& tol = {});
SuiteReport check_thm48(int dim, int samples, std::uint64_t seed,
                        const Tolerances& tol = {});
SuiteReport check_sequential_order(int dim, int samples, std::uint64_t seed,
                                   const Tolerances& tol = {});
SuiteReport check_quotient(int dim, int samples, std::uint64_t seed,
                           const Tolerances& tol = {});

// --- Example-7 horizontal sum HS(E(H), [0,1]) ---

/// Element of HS(E(H), [0,1]): the shared bounds, a proper scalar in (0,1),
/// or a proper matrix effect (not 0, not I).
struct HsElem {
    enum class Kind { zero, one, scalar, matrix };
    Kind kind = Kind::zero;
    double s = 0;
    std::optional<MatrixEffect> m;

    static HsElem shared_zero() { return {}; }
    static HsElem shared_one() {
        HsElem e;
        e.kind = Kind::one;
        return e;
    }
};

/// The horizontal-sum SEA with product fixed by a faithful W:
/// A∘B = A^{1/2}BA^{1/2}, a∘b = ab, A∘a = aA, a∘A = a·tr(WA).
class HsModel {
public:
    HsModel(DensityOperator w, const Tolerances& tol = {});

    int dim() const { return w_.dim(); }
    const DensityOperator& density() const { return w_; }

    HsElem from_scalar(double s) const;
    HsElem from_matrix(const MatrixEffect& m) const;

    HsElem product(const HsElem& a, const HsElem& b) const;
    std::optional<HsElem> sum(const HsElem& a, const HsElem& b) const;
    HsElem complement(const HsElem& a) const;
    bool eq(const HsElem& a, const HsElem& b) const;
    bool leq(const HsElem& a, const HsElem& b) const;
    HsElem hat(const HsElem& a) const;
    std::string describe(const HsElem& a) const;

private:
    DensityOperator w_;
    Tolerances tol_;
};

SuiteReport check_hs(int dim, int samples, std::uint64_t seed,
                     const Tolerances& tol = {});

}  // namespace sea::hilbert
