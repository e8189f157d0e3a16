#include "sea/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sea::hilbert {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Matrix rebuild_clamped(const EigenSystem& sys, double lo, double hi) {
    const int n = sys.vectors.dim();
    Matrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lam = std::clamp(sys.values[size_t(k)], lo, hi);
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += lam * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

}  // namespace

MatrixEffect::MatrixEffect(const Matrix& m, const Tolerances& tol) {
    if (m.dim() == 0) throw std::invalid_argument("MatrixEffect: empty matrix");
    const auto sys = hermitian_eigensystem(m, tol.hermitian);
    if (sys.values.front() < -tol.loewner || sys.values.back() > 1 + tol.loewner)
        throw LoewnerError("MatrixEffect: spectrum [" + fmt(sys.values.front()) +
                           ", " + fmt(sys.values.back()) + "] escapes [0,1]");
    mat_ = rebuild_clamped(sys, 0.0, 1.0);
}

MatrixEffect MatrixEffect::zero(int dim) {
    MatrixEffect e;
    e.mat_ = Matrix(dim);
    return e;
}

MatrixEffect MatrixEffect::identity(int dim) {
    MatrixEffect e;
    e.mat_ = Matrix::identity(dim);
    return e;
}

MatrixEffect MatrixEffect::diag(const std::vector<double>& entries,
                                const Tolerances& tol) {
    return MatrixEffect(Matrix::diagonal(entries), tol);
}

DensityOperator::DensityOperator(const Matrix& m, const Tolerances& tol) {
    const auto sys = hermitian_eigensystem(m, tol.hermitian);
    if (sys.values.front() < -tol.loewner)
        throw LoewnerError("DensityOperator: not positive semidefinite");
    if (std::abs(m.trace().real() - 1.0) > 1e-9 || std::abs(m.trace().imag()) > 1e-9)
        throw std::invalid_argument("DensityOperator: trace must be 1");
    mat_ = rebuild_clamped(sys, 0.0, 1.0);
    faithful_ = sys.values.front() > tol.support_cutoff * sys.values.back();
}

RankOneProjection::RankOneProjection(std::vector<Complex> v) : x(std::move(v)) {
    double norm2 = 0;
    for (const auto& z : x) norm2 += std::norm(z);
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw std::invalid_argument("RankOneProjection: vector is not unit");
    p = Matrix(int(x.size()));
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j)
            p(i, j) = x[size_t(i)] * std::conj(x[size_t(j)]);
}

MatrixEffect std_product(const MatrixEffect& a, const MatrixEffect& b,
                         const Tolerances& tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("std_product: dimension mismatch");
    const Matrix s = matrix_sqrt_psd(a.matrix(), tol.hermitian);
    return MatrixEffect(s * b.matrix() * s, tol);
}

bool loewner_leq(const MatrixEffect& a, const MatrixEffect& b,
                 const Tolerances& tol) {
    return min_eigenvalue(b.matrix() - a.matrix()) >= -tol.loewner;
}

MatrixEffect support_projection(const MatrixEffect& a, const Tolerances& tol) {
    const auto sys = hermitian_eigensystem(a.matrix(), tol.hermitian);
    const double top = std::max(sys.values.back(), 0.0);
    const double cutoff = tol.support_cutoff * top;
    double below = 0.0;
    bool any_above = false;
    double above = 0.0;
    for (const double lam : sys.values) {
        if (lam <= cutoff) below = std::max(below, lam);
        else if (!any_above || lam < above) { any_above = true; above = lam; }
    }
    if (any_above && above - below < cutoff)
        throw DegenerateSpectrumError(
            "support_projection: spectral gap " + fmt(above - below) +
            " below cutoff " + fmt(cutoff));
    const int n = a.dim();
    Matrix p(n);
    for (int k = 0; k < n; ++k) {
        if (sys.values[size_t(k)] <= cutoff) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                p(i, j) += sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return MatrixEffect(p, tol);
}

bool is_projection(const MatrixEffect& a, double tol) {
    // sharp in E(H) iff the spectrum avoids (0,1): min(λ, 1-λ) ≈ 0 throughout
    const auto sys = hermitian_eigensystem(a.matrix());
    for (const double lam : sys.values)
        if (std::min(lam, 1.0 - lam) > tol) return false;
    return true;
}

QuotientWitness sequential_quotient(const MatrixEffect& a, const MatrixEffect& b,
                                    const Tolerances& tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("sequential_quotient: dimension mismatch");
    const double gap = min_eigenvalue(b.matrix() - a.matrix());
    if (gap < -tol.loewner)
        throw LoewnerError("sequential_quotient: a not below b (λ_min(b-a) = " +
                           fmt(gap) + ")");

    const Matrix sb = matrix_sqrt_psd(b.matrix(), tol.hermitian);
    const Matrix sb_pinv = pinv_sqrt_psd(b.matrix(), tol.support_cutoff, tol.hermitian);
    const Matrix sa = matrix_sqrt_psd(a.matrix(), tol.hermitian);
    const Matrix t = sb_pinv * sa;
    const Matrix c_raw = t * t.adjoint();

    const MatrixEffect support = support_projection(b, tol);
    const double residual_product =
        (sb * c_raw * sb - a.matrix()).frobenius_norm();
    const double support_gap = min_eigenvalue(support.matrix() - c_raw);
    const double residual_support = std::max(0.0, -support_gap);
    const double unit_gap = min_eigenvalue(Matrix::identity(a.dim()) - c_raw);
    const double psd_gap = min_eigenvalue(c_raw);

    if (residual_product > tol.quotient || residual_support > tol.quotient ||
        unit_gap < -tol.quotient || psd_gap < -tol.quotient)
        throw CertificationError(
            "sequential_quotient: certification failed (product residual " +
            fmt(residual_product) + ", support residual " + fmt(residual_support) +
            ", λ_min(C) " + fmt(psd_gap) + ", λ_min(I-C) " + fmt(unit_gap) + ")");

    return QuotientWitness{a, b, MatrixEffect(c_raw, tol), residual_product,
                           residual_support};
}

// --- sampling ---

Matrix EffectSampler::gaussian_hermitian() {
    std::normal_distribution<double> g;
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = Complex(g(rng_), g(rng_));
    return 0.5 * (r + r.adjoint());
}

MatrixEffect EffectSampler::effect() {
    // random eigenbasis with uniform spectrum in [0,1]
    const auto sys = hermitian_eigensystem(gaussian_hermitian());
    const int n = dim_;
    Matrix m(n);
    for (int k = 0; k < n; ++k) {
        const double lam = uniform01();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) += lam * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return MatrixEffect(m, tol_);
}

MatrixEffect EffectSampler::orthogonal_to(const MatrixEffect& a) {
    const MatrixEffect rest(Matrix::identity(dim_) - a.matrix(), tol_);
    return std_product(rest, effect(), tol_);
}

MatrixEffect EffectSampler::inside(const MatrixEffect& projection) {
    return std_product(projection, effect(), tol_);
}

MatrixEffect EffectSampler::projection(int rank) {
    const auto sys = hermitian_eigensystem(gaussian_hermitian());
    Matrix p(dim_);
    for (int k = 0; k < rank && k < dim_; ++k)
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                p(i, j) += sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    return MatrixEffect(p, tol_);
}

MatrixEffect EffectSampler::possibly_singular_effect() {
    const auto sys = hermitian_eigensystem(gaussian_hermitian());
    Matrix m(dim_);
    for (int k = 0; k < dim_; ++k) {
        const bool zeroed = uniform01() < 0.4 && k < dim_ - 1;
        const double lam = zeroed ? 0.0 : 0.05 + 0.95 * uniform01();
        if (lam == 0.0) continue;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                m(i, j) += lam * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return MatrixEffect(m, tol_);
}

std::pair<MatrixEffect, MatrixEffect> EffectSampler::commuting_pair() {
    const auto sys = hermitian_eigensystem(gaussian_hermitian());
    Matrix m1(dim_), m2(dim_);
    for (int k = 0; k < dim_; ++k) {
        const double l1 = uniform01(), l2 = uniform01();
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const Complex vv = sys.vectors(i, k) * std::conj(sys.vectors(j, k));
                m1(i, j) += l1 * vv;
                m2(i, j) += l2 * vv;
            }
    }
    return {MatrixEffect(m1, tol_), MatrixEffect(m2, tol_)};
}

std::array<MatrixEffect, 3> EffectSampler::block_commuting_triple() {
    // c is scalar on each block; a, b are block-diagonal compressions of
    // random effects, so [c,a] = [c,b] = 0 while a and b need not commute
    const auto sys = hermitian_eigensystem(gaussian_hermitian());
    const int blocks = dim_ >= 3 ? 2 : 1;
    std::vector<int> block_of(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) block_of[size_t(k)] = k < dim_ / 2 ? 0 : blocks - 1;

    std::vector<double> gamma;
    for (int bl = 0; bl < blocks; ++bl) gamma.push_back(uniform01());

    Matrix c(dim_);
    std::vector<Matrix> proj(static_cast<size_t>(blocks), Matrix(dim_));
    for (int k = 0; k < dim_; ++k)
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const Complex vv = sys.vectors(i, k) * std::conj(sys.vectors(j, k));
                c(i, j) += gamma[size_t(block_of[size_t(k)])] * vv;
                proj[size_t(block_of[size_t(k)])](i, j) += vv;
            }

    const auto compress = [&](const MatrixEffect& raw) {
        Matrix m(dim_);
        for (const auto& p : proj) m = m + p * raw.matrix() * p;
        return MatrixEffect(m, tol_);
    };
    return {MatrixEffect(c, tol_), compress(effect()), compress(effect())};
}

std::vector<Complex> EffectSampler::unit_vector() {
    std::normal_distribution<double> g;
    std::vector<Complex> x(static_cast<size_t>(dim_));
    double norm2 = 0;
    do {
        norm2 = 0;
        for (auto& z : x) {
            z = Complex(g(rng_), g(rng_));
            norm2 += std::norm(z);
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : x) z *= inv;
    return x;
}

DensityOperator EffectSampler::faithful_density() {
    const auto sys = hermitian_eigensystem(gaussian_hermitian());
    std::vector<double> w;
    double total = 0;
    for (int k = 0; k < dim_; ++k) {
        w.push_back(0.05 + uniform01());
        total += w.back();
    }
    Matrix m(dim_);
    for (int k = 0; k < dim_; ++k)
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                m(i, j) += (w[size_t(k)] / total) * sys.vectors(i, k) *
                           std::conj(sys.vectors(j, k));
    return DensityOperator(m, tol_);
}

// --- suites ---

namespace {

void track(CheckLine& line, double residual, const std::string& witness) {
    if (residual > line.worst) {
        line.worst = residual;
        line.detail = witness;
    }
}

void finish(CheckLine& line, double tol) {
    line.pass = line.worst <= tol;
    if (line.pass) line.detail.clear();
}

}  // namespace

SuiteReport check_axioms(int dim, int samples, std::uint64_t seed,
                         const Tolerances& tol) {
    SuiteReport report;
    report.suite = "axioms";
    EffectSampler sampler(dim, seed);
    const MatrixEffect unit = MatrixEffect::identity(dim);

    auto& s1 = report.add("S1 additivity");
    auto& s2 = report.add("S2 unit");
    auto& s3 = report.add("S3 zero symmetry");
    auto& s4c = report.add("S4 complement commutation");
    auto& s4a = report.add("S4 associativity");
    auto& s5p = report.add("S5 product commutation");
    auto& s5s = report.add("S5 orthosum commutation");

    for (int it = 0; it < samples; ++it) {
        const auto a = sampler.effect();
        const auto b1 = sampler.effect();
        const auto b2 = sampler.orthogonal_to(b1);
        const MatrixEffect b_sum(b1.matrix() + b2.matrix(), tol);
        track(s1,
              (std_product(a, b_sum, tol).matrix() - std_product(a, b1, tol).matrix() -
               std_product(a, b2, tol).matrix())
                  .frobenius_norm(),
              "sample " + std::to_string(it));

        track(s2, (std_product(unit, a, tol).matrix() - a.matrix()).frobenius_norm(),
              "sample " + std::to_string(it));

        // orthogonal supports give a∘b = 0; S3 then requires b∘a = 0
        const auto p = sampler.projection(std::max(1, dim / 2));
        const MatrixEffect q(Matrix::identity(dim) - p.matrix(), tol);
        const auto ain = sampler.inside(p);
        const auto bin = sampler.inside(q);
        track(s3, std_product(ain, bin, tol).matrix().frobenius_norm(),
              "forward, sample " + std::to_string(it));
        track(s3, std_product(bin, ain, tol).matrix().frobenius_norm(),
              "mirror, sample " + std::to_string(it));

        const auto [ca, cb] = sampler.commuting_pair();
        const MatrixEffect cbp(Matrix::identity(dim) - cb.matrix(), tol);
        track(s4c,
              (std_product(ca, cbp, tol).matrix() - std_product(cbp, ca, tol).matrix())
                  .frobenius_norm(),
              "sample " + std::to_string(it));
        const auto any_c = sampler.effect();
        track(s4a,
              (std_product(ca, std_product(cb, any_c, tol), tol).matrix() -
               std_product(std_product(ca, cb, tol), any_c, tol).matrix())
                  .frobenius_norm(),
              "sample " + std::to_string(it));

        const auto [c, fa, fb] = sampler.block_commuting_triple();
        const auto fab = std_product(fa, fb, tol);
        track(s5p,
              (std_product(c, fab, tol).matrix() - std_product(fab, c, tol).matrix())
                  .frobenius_norm(),
              "sample " + std::to_string(it));
        const MatrixEffect half_sum(0.5 * fa.matrix() + 0.5 * fb.matrix(), tol);
        track(s5s,
              (std_product(c, half_sum, tol).matrix() -
               std_product(half_sum, c, tol).matrix())
                  .frobenius_norm(),
              "sample " + std::to_string(it));
    }

    for (auto& line : report.lines) finish(line, tol.loewner);
    return report;
}

SuiteReport check_thm48(int dim, int samples, std::uint64_t seed,
                        const Tolerances& tol) {
    SuiteReport report;
    report.suite = "thm48";
    EffectSampler sampler(dim, seed);

    auto& c1 = report.add("(1) finite additivity");
    auto& c2 = report.add("(2) scalar homogeneity");
    auto& c3 = report.add("(3) rank-one inner products, f = sqrt");

    for (int it = 0; it < samples; ++it) {
        const auto a = sampler.effect();
        const auto b1 = sampler.effect();
        const auto b2 = sampler.orthogonal_to(b1);
        const MatrixEffect b_sum(b1.matrix() + b2.matrix(), tol);
        track(c1,
              (std_product(a, b_sum, tol).matrix() - std_product(a, b1, tol).matrix() -
               std_product(a, b2, tol).matrix())
                  .frobenius_norm(),
              "sample " + std::to_string(it));

        const double lam = sampler.uniform01();
        const MatrixEffect la(lam * a.matrix(), tol);
        track(c2,
              (std_product(la, b1, tol).matrix() -
               Complex(lam) * std_product(a, b1, tol).matrix())
                  .frobenius_norm(),
              "λ = " + fmt(lam) + ", sample " + std::to_string(it));

        const RankOneProjection px(sampler.unit_vector());
        const auto y = sampler.unit_vector();
        const MatrixEffect pxe(px.p, tol);
        const auto lhs = inner(y, matvec(std_product(a, pxe, tol).matrix(), y));
        const Matrix root_a = matrix_sqrt_psd(a.matrix(), tol.hermitian);
        const auto fax_y = inner(matvec(root_a, px.x), y);
        // conjugation convention cancels inside |·|²
        track(c3, std::abs(lhs.real() - std::norm(fax_y)) + std::abs(lhs.imag()),
              "sample " + std::to_string(it));
    }

    for (auto& line : report.lines) finish(line, tol.loewner);
    return report;
}

SuiteReport check_sequential_order(int dim, int samples, std::uint64_t seed,
                                   const Tolerances& tol) {
    SuiteReport report;
    report.suite = "thm51";
    EffectSampler sampler(dim, seed);

    auto& c1 = report.add("(1) a <= b admits a = b∘c");
    auto& c2 = report.add("(2) c∘a <= c∘b lifts to ĉ∘a <= ĉ∘b");
    auto& c2r = report.add("(2) rejection-sampled triples");

    for (int it = 0; it < samples; ++it) {
        const auto b = sampler.possibly_singular_effect();
        const auto r = sampler.effect();
        const auto a = std_product(b, r, tol);
        try {
            const auto w = sequential_quotient(a, b, tol);
            track(c1,
                  (std_product(b, w.c, tol).matrix() - a.matrix()).frobenius_norm(),
                  "sample " + std::to_string(it));
        } catch (const std::exception& e) {
            track(c1, 1.0, std::string("quotient failed: ") + e.what());
        }

        // constructed premise: B - A = s·PDP - u·QEQ with P the support of C,
        // so √C(B-A)√C = s·√C(PDP)√C >= 0 while B - A itself is indefinite
        const auto c = sampler.possibly_singular_effect();
        const auto pc = support_projection(c, tol);
        const MatrixEffect qc(Matrix::identity(dim) - pc.matrix(), tol);
        const Matrix pos = pc.matrix() * sampler.effect().matrix() * pc.matrix();
        const Matrix neg = qc.matrix() * sampler.effect().matrix() * qc.matrix();
        const Matrix delta = 0.2 * pos - 0.2 * neg;
        const auto mid = sampler.effect();
        const Matrix a2 = 0.25 * Matrix::identity(dim) + 0.5 * mid.matrix();
        const MatrixEffect ea(a2, tol);
        const MatrixEffect eb(a2 + delta, tol);
        const Matrix sc = matrix_sqrt_psd(c.matrix(), tol.hermitian);
        const double premise =
            min_eigenvalue(sc * (eb.matrix() - ea.matrix()) * sc);
        if (premise >= -tol.loewner) {
            const double conclusion = min_eigenvalue(
                pc.matrix() * (eb.matrix() - ea.matrix()) * pc.matrix());
            track(c2, std::max(0.0, -conclusion), "sample " + std::to_string(it));
        }

        // rejection sampling on unconstrained pairs
        const auto ra = sampler.effect();
        const auto rb = sampler.effect();
        const double rp = min_eigenvalue(sc * (rb.matrix() - ra.matrix()) * sc);
        if (rp >= -1e-12) {
            const double conclusion = min_eigenvalue(
                pc.matrix() * (rb.matrix() - ra.matrix()) * pc.matrix());
            track(c2r, std::max(0.0, -conclusion), "sample " + std::to_string(it));
        }
    }

    finish(c1, tol.quotient);
    finish(c2, tol.quotient);
    finish(c2r, tol.quotient);
    return report;
}

SuiteReport check_quotient(int dim, int samples, std::uint64_t seed,
                           const Tolerances& tol) {
    SuiteReport report;
    report.suite = "quotient";
    EffectSampler sampler(dim, seed);

    auto& round_trip = report.add("round trip b∘(a/b) = a");
    auto& planted = report.add("planted c0 <= P_b recovered");
    auto& self_hat = report.add("a/a = â");
    auto& sharp_id = report.add("b projection: a/b = a");

    for (int it = 0; it < samples; ++it) {
        const auto b = sampler.possibly_singular_effect();
        const auto pb = support_projection(b, tol);
        const auto c0 = sampler.inside(pb);
        const auto a = std_product(b, c0, tol);
        try {
            const auto w = sequential_quotient(a, b, tol);
            track(round_trip,
                  (std_product(b, w.c, tol).matrix() - a.matrix()).frobenius_norm(),
                  "sample " + std::to_string(it));
            track(planted, (w.c.matrix() - c0.matrix()).frobenius_norm(),
                  "sample " + std::to_string(it));
        } catch (const std::exception& e) {
            track(round_trip, 1.0, std::string("quotient failed: ") + e.what());
        }

        try {
            const auto w = sequential_quotient(b, b, tol);
            track(self_hat, (w.c.matrix() - pb.matrix()).frobenius_norm(),
                  "sample " + std::to_string(it));
        } catch (const std::exception& e) {
            track(self_hat, 1.0, std::string("quotient failed: ") + e.what());
        }

        const auto proj = sampler.projection(1 + int(sampler.uniform01() * dim) % dim);
        const auto below = sampler.inside(proj);
        try {
            const auto w = sequential_quotient(below, proj, tol);
            track(sharp_id, (w.c.matrix() - below.matrix()).frobenius_norm(),
                  "sample " + std::to_string(it));
        } catch (const std::exception& e) {
            track(sharp_id, 1.0, std::string("quotient failed: ") + e.what());
        }
    }

    for (auto& line : report.lines) finish(line, tol.quotient);
    return report;
}

// --- HS(E(H), [0,1]) ---

HsModel::HsModel(DensityOperator w, const Tolerances& tol)
    : w_(std::move(w)), tol_(tol) {
    if (!w_.faithful())
        throw std::invalid_argument("HsModel: density operator must be faithful");
}

HsElem HsModel::from_scalar(double s) const {
    if (s < -tol_.loewner || s > 1 + tol_.loewner)
        throw std::invalid_argument("HsModel: scalar outside [0,1]");
    if (s <= tol_.loewner) return HsElem::shared_zero();
    if (s >= 1 - tol_.loewner) return HsElem::shared_one();
    HsElem e;
    e.kind = HsElem::Kind::scalar;
    e.s = s;
    return e;
}

HsElem HsModel::from_matrix(const MatrixEffect& m) const {
    if (m.dim() != dim()) throw std::invalid_argument("HsModel: dimension mismatch");
    if (m.matrix().frobenius_norm() <= tol_.loewner) return HsElem::shared_zero();
    if ((m.matrix() - Matrix::identity(dim())).frobenius_norm() <= tol_.loewner)
        return HsElem::shared_one();
    HsElem e;
    e.kind = HsElem::Kind::matrix;
    e.m = m;
    return e;
}

HsElem HsModel::product(const HsElem& a, const HsElem& b) const {
    using K = HsElem::Kind;
    // the shared bounds act before the summand case split
    if (a.kind == K::zero || b.kind == K::zero) return HsElem::shared_zero();
    if (a.kind == K::one) return b;
    if (b.kind == K::one) return a;
    if (a.kind == K::scalar && b.kind == K::scalar)
        return from_scalar(a.s * b.s);
    if (a.kind == K::matrix && b.kind == K::matrix)
        return from_matrix(std_product(*a.m, *b.m, tol_));
    if (a.kind == K::matrix) {  // A ∘ a = aA
        return from_matrix(MatrixEffect(b.s * a.m->matrix(), tol_));
    }
    // a ∘ A = a·tr(WA)
    const double tr = (w_.matrix() * b.m->matrix()).trace().real();
    return from_scalar(a.s * tr);
}

std::optional<HsElem> HsModel::sum(const HsElem& a, const HsElem& b) const {
    using K = HsElem::Kind;
    if (a.kind == K::zero) return b;
    if (b.kind == K::zero) return a;
    if (a.kind == K::one || b.kind == K::one) return std::nullopt;
    if (a.kind == K::scalar && b.kind == K::scalar) {
        const double s = a.s + b.s;
        if (s > 1 + tol_.loewner) return std::nullopt;
        return from_scalar(std::min(s, 1.0));
    }
    if (a.kind == K::matrix && b.kind == K::matrix) {
        const Matrix m = a.m->matrix() + b.m->matrix();
        if (min_eigenvalue(Matrix::identity(dim()) - m) < -tol_.loewner)
            return std::nullopt;
        return from_matrix(MatrixEffect(m, tol_));
    }
    return std::nullopt;  // no cross-summand orthosums
}

HsElem HsModel::complement(const HsElem& a) const {
    using K = HsElem::Kind;
    switch (a.kind) {
        case K::zero: return HsElem::shared_one();
        case K::one: return HsElem::shared_zero();
        case K::scalar: return from_scalar(1.0 - a.s);
        case K::matrix:
            return from_matrix(
                MatrixEffect(Matrix::identity(dim()) - a.m->matrix(), tol_));
    }
    return HsElem::shared_zero();
}

bool HsModel::eq(const HsElem& a, const HsElem& b) const {
    using K = HsElem::Kind;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case K::zero:
        case K::one: return true;
        case K::scalar: return std::abs(a.s - b.s) <= tol_.loewner;
        case K::matrix:
            return (a.m->matrix() - b.m->matrix()).frobenius_norm() <= tol_.loewner;
    }
    return false;
}

bool HsModel::leq(const HsElem& a, const HsElem& b) const {
    using K = HsElem::Kind;
    if (a.kind == K::zero || b.kind == K::one) return true;
    if (b.kind == K::zero) return a.kind == K::zero;
    if (a.kind == K::one) return false;
    if (a.kind != b.kind) return false;  // summands share only the bounds
    if (a.kind == K::scalar) return a.s <= b.s + tol_.loewner;
    return loewner_leq(*a.m, *b.m, tol_);
}

HsElem HsModel::hat(const HsElem& a) const {
    using K = HsElem::Kind;
    switch (a.kind) {
        case K::zero: return HsElem::shared_zero();
        case K::one: return HsElem::shared_one();
        case K::scalar: return HsElem::shared_one();  // scalar sharps are 0, 1
        case K::matrix: return from_matrix(support_projection(*a.m, tol_));
    }
    return HsElem::shared_zero();
}

std::string HsModel::describe(const HsElem& a) const {
    using K = HsElem::Kind;
    switch (a.kind) {
        case K::zero: return "0";
        case K::one: return "1";
        case K::scalar: return fmt(a.s);
        case K::matrix: return "matrix(dim " + std::to_string(dim()) + ")";
    }
    return "?";
}

SuiteReport check_hs(int dim, int samples, std::uint64_t seed,
                     const Tolerances& tol) {
    SuiteReport report;
    report.suite = "hs";
    EffectSampler sampler(dim, seed);
    const HsModel model(sampler.faithful_density(), tol);

    auto& s1_scalar_row = report.add("S1 scalar row over matrix pairs");
    auto& s1_matrix_row = report.add("S1 matrix row over scalar pairs");
    auto& s2 = report.add("S2 shared unit");
    auto& s3 = report.add("S3 zero symmetry");
    auto& s4 = report.add("S4 on commuting same-summand pairs");
    auto& s5 = report.add("S5 on commuting same-summand triples");
    auto& w_sensitive = report.add("distinct faithful W differ");
    auto& cond2_counter = report.add("condition (2) counterexample");

    const auto residual = [&](const HsElem& x, const HsElem& y) -> double {
        using K = HsElem::Kind;
        if (x.kind != y.kind) return 1.0;
        if (x.kind == K::scalar) return std::abs(x.s - y.s);
        if (x.kind == K::matrix)
            return (x.m->matrix() - y.m->matrix()).frobenius_norm();
        return 0.0;
    };

    for (int it = 0; it < samples; ++it) {
        const double a_s = 0.05 + 0.9 * sampler.uniform01();
        const auto a = model.from_scalar(a_s);
        const auto b1m = sampler.effect();
        const auto b1 = model.from_matrix(b1m);
        const auto b2 = model.from_matrix(sampler.orthogonal_to(b1m));
        if (const auto bsum = model.sum(b1, b2)) {
            const auto lhs = model.product(a, *bsum);
            const auto parts = model.sum(model.product(a, b1), model.product(a, b2));
            track(s1_scalar_row, parts ? residual(lhs, *parts) : 1.0,
                  "sample " + std::to_string(it));
        }

        const auto am = model.from_matrix(sampler.effect());
        const double u = 0.4 * sampler.uniform01() + 0.05;
        const double v = 0.4 * sampler.uniform01() + 0.05;
        const auto su = model.from_scalar(u), sv = model.from_scalar(v);
        if (const auto ssum = model.sum(su, sv)) {
            const auto lhs = model.product(am, *ssum);
            const auto parts = model.sum(model.product(am, su), model.product(am, sv));
            track(s1_matrix_row, parts ? residual(lhs, *parts) : 1.0,
                  "sample " + std::to_string(it));
        }

        track(s2, residual(model.product(HsElem::shared_one(), am), am), "matrix");
        track(s2, residual(model.product(HsElem::shared_one(), a), a), "scalar");

        // a∘b = 0 happens only with a shared-zero operand here; verify both ways
        const auto z = model.product(HsElem::shared_zero(), am);
        track(s3, z.kind == HsElem::Kind::zero ? 0.0 : 1.0, "zero row");
        const auto z2 = model.product(am, HsElem::shared_zero());
        track(s3, z2.kind == HsElem::Kind::zero ? 0.0 : 1.0, "zero column");

        // S4 on commuting pairs within each summand
        const auto [cma, cmb] = sampler.commuting_pair();
        const auto ca = model.from_matrix(cma), cb = model.from_matrix(cmb);
        if (ca.kind == HsElem::Kind::matrix && cb.kind == HsElem::Kind::matrix) {
            const auto cbp = model.complement(cb);
            track(s4, residual(model.product(ca, cbp), model.product(cbp, ca)),
                  "matrix complement, sample " + std::to_string(it));
            for (const HsElem& c :
                 {model.from_scalar(0.3), model.from_matrix(sampler.effect())}) {
                track(s4,
                      residual(model.product(ca, model.product(cb, c)),
                               model.product(model.product(ca, cb), c)),
                      "matrix assoc, sample " + std::to_string(it));
            }
        }
        const auto sa = model.from_scalar(0.2 + 0.6 * sampler.uniform01());
        const auto sb = model.from_scalar(0.2 + 0.6 * sampler.uniform01());
        for (const HsElem& c :
             {model.from_scalar(0.7), model.from_matrix(sampler.effect())}) {
            track(s4,
                  residual(model.product(sa, model.product(sb, c)),
                           model.product(model.product(sa, sb), c)),
                  "scalar assoc, sample " + std::to_string(it));
        }

        // S5 within the matrix summand
        const auto [c5, f5a, f5b] = sampler.block_commuting_triple();
        const auto hc = model.from_matrix(c5);
        const auto ha = model.from_matrix(f5a);
        const auto hb = model.from_matrix(f5b);
        if (hc.kind == HsElem::Kind::matrix && ha.kind == HsElem::Kind::matrix &&
            hb.kind == HsElem::Kind::matrix) {
            const auto prod = model.product(ha, hb);
            track(s5, residual(model.product(hc, prod), model.product(prod, hc)),
                  "sample " + std::to_string(it));
        }
    }

    // two faithful densities must give different products on a witness pair
    {
        std::vector<double> w1(size_t(dim), 1.0 / dim);
        std::vector<double> w2(size_t(dim), 0.0);
        w2[0] = 0.5;
        for (int i = 1; i < dim; ++i) w2[size_t(i)] = 0.5 / (dim - 1);
        const HsModel m1(DensityOperator(Matrix::diagonal(w1), tol), tol);
        const HsModel m2(DensityOperator(Matrix::diagonal(w2), tol), tol);
        std::vector<double> e1(size_t(dim), 0.0);
        e1[0] = 1.0;
        const auto witness = m1.from_matrix(MatrixEffect::diag(e1, tol));
        const auto half = m1.from_scalar(0.5);
        const auto p1 = m1.product(half, witness);
        const auto p2 = m2.product(half, witness);
        w_sensitive.pass = p1.kind == HsElem::Kind::scalar &&
                           p2.kind == HsElem::Kind::scalar &&
                           std::abs(p1.s - p2.s) > 1e-6;
        w_sensitive.detail = "a=1/2, A=diag(1,0,...): " + fmt(p1.s) + " vs " + fmt(p2.s);
    }

    // a∘A <= a∘B iff tr(WA) <= tr(WB), which does not force A <= B
    {
        EffectSampler search(dim, seed + 1);
        cond2_counter.pass = false;
        for (int tries = 0; tries < 400 && !cond2_counter.pass; ++tries) {
            const auto A = model.from_matrix(search.effect());
            const auto B = model.from_matrix(search.effect());
            if (A.kind != HsElem::Kind::matrix || B.kind != HsElem::Kind::matrix)
                continue;
            const auto a_scal = model.from_scalar(0.5);
            const auto pa = model.product(a_scal, A);
            const auto pb = model.product(a_scal, B);
            if (!(pa.kind == HsElem::Kind::scalar && pb.kind == HsElem::Kind::scalar))
                continue;
            if (pa.s <= pb.s && !model.leq(model.product(model.hat(a_scal), A),
                                           model.product(model.hat(a_scal), B))) {
                cond2_counter.pass = true;
                cond2_counter.detail =
                    "a=1/2: a∘A = " + fmt(pa.s) + " <= a∘B = " + fmt(pb.s) +
                    " yet â∘A = A is not below â∘B = B";
            }
        }
    }

    const double numeric_tol = tol.loewner;
    for (auto& line : report.lines) {
        if (&line == &w_sensitive || &line == &cond2_counter) continue;
        finish(line, numeric_tol);
    }
    return report;
}

}  // namespace sea::hilbert
