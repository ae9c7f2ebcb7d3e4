// Dense real matrices and the small-scale decompositions the operator layer needs:
// symmetric eigen-decomposition (Householder tridiagonalization + implicit QL),
// cyclic Jacobi eigen-decomposition, and one-sided Jacobi SVD.

#ifndef SZT_LINALG_HPP
#define SZT_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "szt/error.hpp"

namespace szt
{

class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : m_rows(rows), m_cols(cols), m_data(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return m_rows; }
    [[nodiscard]] std::size_t cols() const noexcept { return m_cols; }
    [[nodiscard]] bool is_square() const noexcept { return m_rows == m_cols; }

    double &operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    [[nodiscard]] std::span<const double> data() const noexcept { return m_data; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const { return {m_data.data() + i * m_cols, m_cols}; }

    [[nodiscard]] Matrix transposed() const
    {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    [[nodiscard]] double frobenius() const
    {
        double s = 0.0;
        for (const double x : m_data) {
            s += x * x;
        }
        return std::sqrt(s);
    }

    [[nodiscard]] double trace() const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < std::min(m_rows, m_cols); ++i) {
            s += (*this)(i, i);
        }
        return s;
    }

    [[nodiscard]] bool is_symmetric() const
    {
        if (!is_square()) {
            return false;
        }
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = i + 1; j < m_cols; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    [[nodiscard]] std::vector<double> apply(std::span<const double> x) const
    {
        if (x.size() != m_cols) {
            throw PreconditionError("matrix-vector dimension mismatch");
        }
        std::vector<double> y(m_rows, 0.0);
        for (std::size_t i = 0; i < m_rows; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m_cols; ++j) {
                s += (*this)(i, j) * x[j];
            }
            y[i] = s;
        }
        return y;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows) {
            throw PreconditionError("matrix product dimension mismatch");
        }
        Matrix c(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.m_cols; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<double> m_data;
};

inline double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Quadratic form <M x, y>.
inline double bilinear(const Matrix &m, std::span<const double> x, std::span<const double> y)
{
    return dot(m.apply(x), y);
}

/// Eigenpairs, descending; vectors[j] pairs with values[j].
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

/// Singular triples, descending: m = Σ_j values[j] left[j] right[j]^T.
struct SvdDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> left;
    std::vector<std::vector<double>> right;
};

namespace detail
{

// First component with magnitude above a relative floor is made positive.
inline bool normalize_sign(std::vector<double> &v)
{
    double big = 0.0;
    for (const double x : v) {
        big = std::max(big, std::abs(x));
    }
    if (big == 0.0) {
        return false;
    }
    for (const double x : v) {
        if (std::abs(x) > 1e-12 * big) {
            if (x < 0) {
                for (auto &y : v) {
                    y = -y;
                }
                return true;
            }
            return false;
        }
    }
    return false;
}

inline EigenDecomposition sorted_descending(std::vector<double> values, const Matrix &vecs_by_column)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    EigenDecomposition out;
    for (const auto j : order) {
        out.values.push_back(values[j]);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = vecs_by_column(i, j);
        }
        normalize_sign(v);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// Symmetric eigen-decomposition by Householder reduction to tridiagonal form
/// followed by the implicit QL iteration with accumulated transformations.
inline EigenDecomposition symmetric_eigen(const Matrix &a)
{
    if (!a.is_symmetric()) {
        throw PreconditionError("symmetric_eigen requires a symmetric matrix");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return {};
    }
    Matrix v = a;
    std::vector<double> d(n), e(n);

    for (std::size_t j = 0; j < n; ++j) {
        d[j] = v(n - 1, j);
    }
    // Householder tridiagonalization.
    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k) {
            scale += std::abs(d[k]);
        }
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] = 0.0;
            }
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (std::size_t k = j + 1; k <= i - 1; ++k) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j) {
                e[j] -= hh * d[j];
            }
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (std::size_t k = j; k <= i - 1; ++k) {
                    v(k, j) -= (f * e[k] + g * d[k]);
                }
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }
    // Accumulate transformations.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k) {
                d[k] = v(k, i + 1) / h;
            }
            for (std::size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k) {
                    g += v(k, i + 1) * v(k, j);
                }
                for (std::size_t k = 0; k <= i; ++k) {
                    v(k, j) -= g * d[k];
                }
            }
        }
        for (std::size_t k = 0; k <= i; ++k) {
            v(k, i + 1) = 0.0;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;

    // Implicit QL on the tridiagonal (d, e).
    for (std::size_t i = 1; i < n; ++i) {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) {
                break;
            }
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 100) {
                    throw Error("symmetric_eigen: QL iteration did not converge");
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) {
                    d[i] -= h;
                }
                f += h;

                p = d[m];
                double c = 1.0;
                double c2 = c;
                double c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0;
                double s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (std::size_t k = 0; k < n; ++k) {
                        h = v(k, ii + 1);
                        v(k, ii + 1) = s * v(k, ii) + c * h;
                        v(k, ii) = c * v(k, ii) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
    return detail::sorted_descending(std::move(d), v);
}

/// Cyclic Jacobi eigen-decomposition; stops once the off-diagonal Frobenius
/// norm is at most tol times the full Frobenius norm.
inline EigenDecomposition jacobi_eigen(const Matrix &a, double tol = 1e-12, int max_sweeps = 100)
{
    if (!a.is_symmetric()) {
        throw PreconditionError("jacobi_eigen requires a symmetric matrix");
    }
    const std::size_t n = a.rows();
    Matrix m = a;
    Matrix v = Matrix::identity(n);
    const double frob = a.frobenius();
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    s += m(i, j) * m(i, j);
                }
            }
        }
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol * frob; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p);
                    const double mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k);
                    const double mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (off_norm() > tol * frob) {
        throw Error("jacobi_eigen did not converge");
    }
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = m(i, i);
    }
    return detail::sorted_descending(std::move(d), v);
}

namespace detail
{

// One-sided (Hestenes) Jacobi on a rows >= cols matrix.
inline SvdDecomposition svd_tall(const Matrix &a, int max_sweeps)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // Work column-major for contiguous column access.
    std::vector<std::vector<double>> u(n, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u[j][i] = a(i, j);
        }
    }
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        v[j][j] = 1.0;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    // Columns below eps·‖A‖_F are numerically null; rotating them only stirs rounding noise.
    const double null_sq = (eps * a.frobenius()) * (eps * a.frobenius());
    bool rotated = true;
    for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
        rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = dot(u[p], u[p]);
                const double beta = dot(u[q], u[q]);
                const double gamma = dot(u[p], u[q]);
                if (gamma == 0.0 || alpha <= null_sq || beta <= null_sq || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double up = u[p][i];
                    const double uq = u[q][i];
                    u[p][i] = c * up - s * uq;
                    u[q][i] = s * up + c * uq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vp = v[p][i];
                    const double vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
    }
    if (rotated) {
        throw Error("svd: one-sided Jacobi did not converge");
    }
    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        sigma[j] = norm2(u[j]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });
    const double smax = n ? sigma[order[0]] : 0.0;
    const double null_floor = std::max(smax, 1.0) * 1e-13;

    SvdDecomposition out;
    std::vector<std::size_t> pending; // indices in `out` needing a completed left vector
    for (const auto j : order) {
        std::vector<double> left(m, 0.0);
        if (sigma[j] > null_floor) {
            for (std::size_t i = 0; i < m; ++i) {
                left[i] = u[j][i] / sigma[j];
            }
        } else {
            pending.push_back(out.values.size());
        }
        std::vector<double> right = v[j];
        if (normalize_sign(right)) {
            for (auto &x : left) {
                x = -x;
            }
        }
        out.values.push_back(sigma[j]);
        out.left.push_back(std::move(left));
        out.right.push_back(std::move(right));
    }
    // Left vectors of null singular values: complete to an orthonormal family.
    std::size_t basis = 0;
    for (const auto idx : pending) {
        while (basis < m) {
            std::vector<double> cand(m, 0.0);
            cand[basis++] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < out.left.size(); ++k) {
                    if (k == idx || norm2(out.left[k]) == 0.0) {
                        continue;
                    }
                    const double proj = dot(cand, out.left[k]);
                    for (std::size_t i = 0; i < m; ++i) {
                        cand[i] -= proj * out.left[k][i];
                    }
                }
            }
            const double nrm = norm2(cand);
            if (nrm > 1e-8) {
                for (auto &x : cand) {
                    x /= nrm;
                }
                normalize_sign(cand);
                out.left[idx] = std::move(cand);
                break;
            }
        }
    }
    return out;
}

} // namespace detail

/// Thin SVD with min(rows, cols) triples, descending singular values.
inline SvdDecomposition svd(const Matrix &a, int max_sweeps = 80)
{
    if (a.rows() >= a.cols()) {
        return detail::svd_tall(a, max_sweeps);
    }
    auto t = detail::svd_tall(a.transposed(), max_sweeps);
    std::swap(t.left, t.right);
    return t;
}

} // namespace szt

#endif
