#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "szt/linalg.hpp"

using szt::Matrix;

namespace
{

Matrix from_rows(const std::vector<std::vector<double>> &rows)
{
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix random_symmetric(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = m(j, i) = d(rng);
        }
    }
    return m;
}

double residual(const Matrix &m, double lambda, const std::vector<double> &v)
{
    const auto mv = m.apply(v);
    double r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        r = std::max(r, std::abs(mv[i] - lambda * v[i]));
    }
    return r;
}

} // namespace

TEST(Linalg, ThreeByThreeClosedForm)
{
    const auto m = from_rows({{3, 2, 1}, {2, 3, 2}, {1, 2, 3}});
    const auto e = szt::symmetric_eigen(m);
    ASSERT_EQ(e.values.size(), 3u);
    EXPECT_NEAR(e.values[0], (7 + std::sqrt(33.0)) / 2, 1e-12);
    EXPECT_NEAR(e.values[1], 2.0, 1e-12);
    EXPECT_NEAR(e.values[2], (7 - std::sqrt(33.0)) / 2, 1e-12);
    // antisymmetric eigenvector (1, 0, -1)/sqrt2, first nonzero component positive
    EXPECT_NEAR(e.vectors[1][0], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(e.vectors[1][1], 0.0, 1e-12);
    EXPECT_NEAR(e.vectors[1][2], -1 / std::sqrt(2.0), 1e-12);
}

TEST(Linalg, TrivialSpectra)
{
    const auto id = szt::symmetric_eigen(Matrix::identity(5));
    for (const double v : id.values) {
        EXPECT_NEAR(v, 1.0, 1e-14);
    }
    const auto ones = szt::symmetric_eigen(Matrix(6, 6, 1.0));
    EXPECT_NEAR(ones.values[0], 6.0, 1e-12);
    for (std::size_t i = 1; i < 6; ++i) {
        EXPECT_NEAR(ones.values[i], 0.0, 1e-12);
    }
    EXPECT_THROW(szt::symmetric_eigen(from_rows({{1, 2}, {3, 4}})), szt::PreconditionError);
}

TEST(Linalg, EigenAgreesWithJacobiOracle)
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng() % 25;
        const auto m = random_symmetric(rng, n);
        const auto e = szt::symmetric_eigen(m);
        const auto j = szt::jacobi_eigen(m);
        double sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_NEAR(e.values[i], j.values[i], 1e-10);
            EXPECT_LT(residual(m, e.values[i], e.vectors[i]), 1e-10);
            EXPECT_NEAR(szt::norm2(e.vectors[i]), 1.0, 1e-12);
            sum += e.values[i];
            if (i > 0) {
                EXPECT_GE(e.values[i - 1], e.values[i]);
            }
        }
        EXPECT_NEAR(sum, m.trace(), 1e-9);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                EXPECT_NEAR(szt::dot(e.vectors[a], e.vectors[b]), 0.0, 1e-10);
            }
        }
    }
}

TEST(Linalg, SvdExamples)
{
    const auto ones = szt::svd(Matrix(2, 2, 1.0));
    EXPECT_NEAR(ones.values[0], 2.0, 1e-14);
    EXPECT_NEAR(ones.values[1], 0.0, 1e-14);
    const auto zero = szt::svd(Matrix(3, 2, 0.0));
    for (const double v : zero.values) {
        EXPECT_EQ(v, 0.0);
    }
    const auto diag = szt::svd(from_rows({{1, 0}, {0, 3}}));
    EXPECT_NEAR(diag.values[0], 3.0, 1e-14);
    EXPECT_NEAR(diag.values[1], 1.0, 1e-14);
}

TEST(Linalg, SvdReconstructsRandomMatrices)
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + rng() % 20;
        const std::size_t c = 1 + rng() % 20;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                m(i, j) = d(rng);
            }
        }
        const auto s = szt::svd(m);
        ASSERT_EQ(s.values.size(), std::min(r, c));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                double v = 0;
                for (std::size_t k = 0; k < s.values.size(); ++k) {
                    v += s.values[k] * s.left[k][i] * s.right[k][j];
                }
                EXPECT_NEAR(v, m(i, j), 1e-10);
            }
        }
        // squared singular values are the eigenvalues of m^T m
        const auto gram = szt::jacobi_eigen(m.transposed() * m);
        for (std::size_t k = 0; k < s.values.size(); ++k) {
            EXPECT_NEAR(s.values[k] * s.values[k], gram.values[k], 1e-9);
        }
    }
}

TEST(Linalg, SvdOfRankOneIndicator)
{
    const auto s = szt::svd(Matrix(7, 3, 1.0));
    EXPECT_NEAR(s.values[0], std::sqrt(21.0), 1e-12);
    EXPECT_NEAR(s.values[1], 0.0, 1e-12);
    for (const double x : s.left[0]) {
        EXPECT_NEAR(std::abs(x), 1 / std::sqrt(7.0), 1e-12);
    }
    for (const double x : s.right[0]) {
        EXPECT_NEAR(std::abs(x), 1 / std::sqrt(3.0), 1e-12);
    }
}
