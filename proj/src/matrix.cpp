#include "chronocalc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chronocalc {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim * dim)
        throw std::invalid_argument("ComplexMatrix: entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

namespace {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimension mismatch");
}
}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator-(const ComplexMatrix& m) {
    ComplexMatrix r = m;
    for (auto& z : r.entries()) z = -z;
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs);
    const std::size_t n = lhs.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += lik * rhs(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s); }

Vector Vector::basis(std::size_t dim, std::size_t k) {
    Vector v(dim);
    v[k] = 1.0;
    return v;
}

double Vector::norm() const {
    double s = 0.0;
    for (const auto& z : v_) s += std::norm(z);
    return std::sqrt(s);
}

Vector& Vector::operator+=(const Vector& rhs) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += rhs.v_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= rhs.v_[i];
    return *this;
}

Vector& Vector::operator*=(Complex s) {
    for (auto& z : v_) z *= s;
    return *this;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator*(Complex s, Vector v) { return v *= s; }

Vector operator*(const ComplexMatrix& m, const Vector& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("matrix/vector dimension mismatch");
    Vector r(v.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Complex dot(const Vector& x, const Vector& y) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double one_norm(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.dim(); ++i) col += std::abs(m(i, j));
        best = std::max(best, col);
    }
    return best;
}

double max_abs(const ComplexMatrix& m) {
    double best = 0.0;
    for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

double operator_norm(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 0.0;
    // Power method on A*A; start vector deterministic and generic.
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.5 * double(i % 7) / 7.0, 0.25 * double(i % 3));
    auto normalize = [&](std::vector<Complex>& x) {
        double s = 0.0;
        for (auto& z : x) s += std::norm(z);
        s = std::sqrt(s);
        if (s == 0.0) return 0.0;
        for (auto& z : x) z /= s;
        return s;
    };
    normalize(v);
    std::vector<Complex> av(n), aav(n);
    double lambda = 0.0;
    constexpr int kIterations = 128;
    for (int it = 0; it < kIterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
            av[i] = s;
        }
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += std::conj(m(i, j)) * av[i];
            aav[j] = s;
        }
        lambda = normalize(aav);
        if (lambda == 0.0) return 0.0;
        v.swap(aav);
    }
    return std::sqrt(lambda);
}

namespace {

struct Lu {
    std::size_t n = 0;
    std::vector<Complex> a;          // packed LU factors
    std::vector<std::size_t> piv;
    double min_pivot = 0.0;
    double max_pivot = 0.0;

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

Lu lu_factor(const ComplexMatrix& m) {
    Lu lu;
    lu.n = m.dim();
    lu.a = m.entries();
    lu.piv.resize(lu.n);
    std::iota(lu.piv.begin(), lu.piv.end(), std::size_t{0});
    lu.min_pivot = std::numeric_limits<double>::infinity();
    lu.max_pivot = 0.0;
    for (std::size_t k = 0; k < lu.n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu.at(k, k));
        for (std::size_t i = k + 1; i < lu.n; ++i) {
            const double cand = std::abs(lu.at(i, k));
            if (cand > best) { best = cand; p = i; }
        }
        if (p != k) {
            for (std::size_t j = 0; j < lu.n; ++j) std::swap(lu.at(k, j), lu.at(p, j));
            std::swap(lu.piv[k], lu.piv[p]);
        }
        const double pv = std::abs(lu.at(k, k));
        lu.min_pivot = std::min(lu.min_pivot, pv);
        lu.max_pivot = std::max(lu.max_pivot, pv);
        if (pv == 0.0 || lu.max_pivot / pv > 1e15) {
            const double cond = pv == 0.0 ? std::numeric_limits<double>::infinity()
                                          : lu.max_pivot / pv;
            throw SingularMatrixError("singular system in LU solve", cond);
        }
        const Complex inv = 1.0 / lu.at(k, k);
        for (std::size_t i = k + 1; i < lu.n; ++i) {
            const Complex f = lu.at(i, k) * inv;
            lu.at(i, k) = f;
            for (std::size_t j = k + 1; j < lu.n; ++j) lu.at(i, j) -= f * lu.at(k, j);
        }
    }
    return lu;
}

void lu_solve_inplace(const Lu& lu, std::vector<Complex>& x) {
    const std::size_t n = lu.n;
    // forward
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) x[i] -= lu.at(i, k) * x[k];
    // backward
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= lu.at(ii, k) * x[k];
        x[ii] /= lu.at(ii, ii);
    }
}

}  // namespace

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const Lu lu = lu_factor(a);
    const std::size_t n = a.dim();
    ComplexMatrix x(n);
    std::vector<Complex> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = b(lu.piv[i], j);
        lu_solve_inplace(lu, col);
        for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
    }
    return x;
}

Vector solve(const ComplexMatrix& a, const Vector& b) {
    const Lu lu = lu_factor(a);
    std::vector<Complex> x(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) x[i] = b[lu.piv[i]];
    lu_solve_inplace(lu, x);
    return Vector(std::move(x));
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return solve(a, ComplexMatrix::identity(a.dim()));
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    const double scale = std::max(1.0, max_abs(a));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol * scale) return false;
    return true;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix h = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    // enforce exact Hermitian symmetry of the working copy
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = Complex(h(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (h(i, j) + std::conj(h(j, i)));
            h(i, j) = m;
            h(j, i) = std::conj(m);
        }
    }

    const double scale = std::max(1.0, max_abs(h));
    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(h(p, q));
        if (std::sqrt(off) <= 1e-15 * scale * double(n)) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                if (std::abs(hpq) <= 1e-18 * scale) continue;
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                // unitary 2x2 rotation diagonalizing [[app, hpq],[conj(hpq), aqq]]
                const double abspq = std::abs(hpq);
                const Complex phase = hpq / abspq;
                const double theta = 0.5 * std::atan2(2.0 * abspq, app - aqq);
                const double c = std::cos(theta);
                const Complex s = std::sin(theta) * phase;
                // rows/cols update: H <- J* H J with J acting on (p,q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = c * hkp + std::conj(s) * hkq;
                    h(k, q) = -s * hkp + c * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = c * hpk + s * hqk;
                    h(q, k) = -std::conj(s) * hpk + c * hqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + std::conj(s) * vkq;
                    v(k, q) = -s * vkp + c * vkq;
                }
            }
        }
    }

    HermitianEigen out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = h(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
    out.vectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace chronocalc
