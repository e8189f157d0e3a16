#include "sea/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sea {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& entries) {
    Matrix m(int(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[size_t(i)];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double Matrix::hermiticity_defect() const {
    double worst = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            worst = std::max(worst,
                             std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

Complex Matrix::trace() const {
    Complex t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix m(x.n_);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
    return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix m(x.n_);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    const int n = x.n_;
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex v = x(i, k);
            if (v == Complex(0)) continue;
            for (int j = 0; j < n; ++j) m(i, j) += v * y(k, j);
        }
    return m;
}

Matrix operator*(Complex s, const Matrix& x) {
    Matrix m(x.n_);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = s * x.a_[i];
    return m;
}

Matrix operator*(double s, const Matrix& x) { return Complex(s) * x; }

namespace {

double offdiag_norm(const Matrix& m) {
    double s = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const Matrix& input, double hermitian_tol) {
    const int n = input.dim();
    if (n == 0) return {};
    if (input.hermiticity_defect() > hermitian_tol)
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");

    // work on the exactly Hermitian average
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    Matrix v = Matrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());
    const double stop = 1e-14 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        if (sweep == 99)
            throw std::runtime_error("hermitian_eigensystem: Jacobi did not converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const Complex z = a(p, q);
                const double r = std::abs(z);
                if (r <= 1e-300 || r <= 1e-18 * scale) continue;
                const Complex phase = z / r;  // e^{i phi}
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double sigma = (beta - alpha) / (2.0 * r);
                const double sgn = sigma >= 0 ? 1.0 : -1.0;
                const double t =
                    -sgn / (std::abs(sigma) + std::sqrt(sigma * sigma + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = alpha * c * c + 2.0 * r * c * s + beta * s * s;
                a(q, q) = alpha * s * s - 2.0 * r * c * s + beta * c * c;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    v(k, q) = -s * phase * vkp + c * vkq;
                }
            }
    }

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem sys;
    sys.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        sys.values.push_back(a(perm[size_t(j)], perm[size_t(j)]).real());
        for (int i = 0; i < n; ++i) sys.vectors(i, j) = v(i, perm[size_t(j)]);
    }
    return sys;
}

Matrix apply_spectral(const Matrix& m, double (*f)(double), double hermitian_tol) {
    const auto sys = hermitian_eigensystem(m, hermitian_tol);
    const int n = m.dim();
    Matrix out(n);
    for (int k = 0; k < n; ++k) {
        const double fv = f(sys.values[size_t(k)]);
        if (fv == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += fv * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

Matrix matrix_sqrt_psd(const Matrix& m, double hermitian_tol) {
    return apply_spectral(
        m, [](double x) { return x > 0 ? std::sqrt(x) : 0.0; }, hermitian_tol);
}

Matrix pinv_sqrt_psd(const Matrix& m, double rel_cutoff, double hermitian_tol) {
    const auto sys = hermitian_eigensystem(m, hermitian_tol);
    const double top = sys.values.empty() ? 0.0 : sys.values.back();
    const double cutoff = rel_cutoff * std::max(top, 0.0);
    const int n = m.dim();
    Matrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lam = sys.values[size_t(k)];
        if (lam <= cutoff || lam <= 0) continue;
        const double g = 1.0 / std::sqrt(lam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += g * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

double min_eigenvalue(const Matrix& m) {
    // symmetrize: callers routinely pass differences of computed products
    Matrix h(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    const auto sys = hermitian_eigensystem(h, 1e300);
    return sys.values.empty() ? 0.0 : sys.values.front();
}

std::vector<Complex> matvec(const Matrix& m, const std::vector<Complex>& x) {
    std::vector<Complex> y(size_t(m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
        Complex s = 0;
        for (int j = 0; j < m.dim(); ++j) s += m(i, j) * x[size_t(j)];
        y[size_t(i)] = s;
    }
    return y;
}

Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

}  // namespace sea
