#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chronocalc {

using Complex = std::complex<double>;

/// Thrown by linear solves when the system matrix is numerically singular.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what, double cond)
        : std::runtime_error(what), condition_estimate(cond) {}
    double condition_estimate;
};

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const { return a_; }
    std::vector<Complex>& entries() { return a_; }

    bool is_finite() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(const ComplexMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexMatrix operator*(double s, ComplexMatrix m);

/// Dense complex vector (state vector).
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : v_(dim) {}
    explicit Vector(std::vector<Complex> entries) : v_(std::move(entries)) {}

    static Vector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return v_.size(); }
    Complex& operator[](std::size_t i) { return v_[i]; }
    const Complex& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Complex>& entries() const { return v_; }

    double norm() const;

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector& operator*=(Complex s);

private:
    std::vector<Complex> v_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator*(Complex s, Vector v);
Vector operator*(const ComplexMatrix& m, const Vector& v);

/// <x, y> = sum_i x_i * conj(y_i).
Complex dot(const Vector& x, const Vector& y);

double frobenius_norm(const ComplexMatrix& m);
double one_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

/// Largest singular value, fixed-iteration power method on A*A with a
/// deterministic start vector. Deterministic and slightly pessimistic
/// (never overestimates beyond round-off).
double operator_norm(const ComplexMatrix& m);

/// Solves A X = B by LU with partial pivoting. Throws SingularMatrixError
/// (with a crude condition estimate) when a pivot collapses.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
Vector solve(const ComplexMatrix& a, const Vector& b);
ComplexMatrix inverse(const ComplexMatrix& a);

/// Eigendecomposition A = V diag(values) V* of a Hermitian matrix,
/// cyclic complex Jacobi. Eigenvalues ascending.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;  // columns are eigenvectors
};
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);

}  // namespace chronocalc
