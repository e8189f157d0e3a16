#pragma once

#include <complex>
#include <vector>

namespace sea {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the workbench's dimensions
/// (<= 8); no attempt at large-scale performance.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(size_t(n) * size_t(n)) {}

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<double>& entries);

    int dim() const { return n_; }
    Complex& operator()(int i, int j) { return a_[size_t(i) * size_t(n_) + size_t(j)]; }
    const Complex& operator()(int i, int j) const {
        return a_[size_t(i) * size_t(n_) + size_t(j)];
    }

    Matrix adjoint() const;
    double frobenius_norm() const;
    /// Largest |entry| gap from the adjoint; 0 for exactly Hermitian.
    double hermiticity_defect() const;
    Complex trace() const;

    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator*(Complex s, const Matrix& x);
    friend Matrix operator*(double s, const Matrix& x);

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // columns are orthonormal eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Accurate and robust at these dimensions. Throws on non-Hermitian input
/// (defect above `hermitian_tol`) or failure to converge.
EigenSystem hermitian_eigensystem(const Matrix& m, double hermitian_tol = 1e-10);

/// V f(Λ) V* for the Hermitian m = V Λ V*.
Matrix apply_spectral(const Matrix& m, double (*f)(double), double hermitian_tol = 1e-10);

Matrix matrix_sqrt_psd(const Matrix& m, double hermitian_tol = 1e-10);

/// Moore-Penrose pseudoinverse of the PSD square root: V diag(g) V* with
/// g = 1/sqrt(λ) for λ above cutoff·λ_max, else 0.
Matrix pinv_sqrt_psd(const Matrix& m, double rel_cutoff = 1e-8,
                     double hermitian_tol = 1e-10);

/// Smallest eigenvalue; the workhorse for Löwner comparisons.
double min_eigenvalue(const Matrix& m);

std::vector<Complex> matvec(const Matrix& m, const std::vector<Complex>& x);
Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y);

}  // namespace sea
