#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "szt/szt_estimation.hpp"

using szt::FiniteRealSet;
using szt::Rational;

TEST(SzTEstimation, TailExamples)
{
    const FiniteRealSet g{1, 2, 4, 8};
    const auto p = szt::tail_profile(g, g);
    EXPECT_EQ(p.at(1), 10u);
    EXPECT_EQ(p.at(2), 6u);
    EXPECT_EQ(p.at(3), 0u);
    EXPECT_EQ(p.at(4), 0u);
    EXPECT_EQ(p.mass(), 16u);
    const FiniteRealSet a{3, 5, 9};
    const auto s = szt::tail_profile(a, FiniteRealSet{1});
    EXPECT_EQ(s.at(1), 3u);
    EXPECT_EQ(s.at(2), 0u);
    EXPECT_THROW((void)s.at(0), szt::PreconditionError);
}

TEST(SzTEstimation, ArithmeticProgressionTail)
{
    for (std::size_t n = 1; n <= 9; ++n) {
        const auto ap = szt::generate({szt::FamilyKind::arithmetic_progression, n, 0, {}});
        const auto p = szt::tail_profile(ap, ap);
        for (std::size_t tau = 1; tau <= n; ++tau) {
            EXPECT_EQ(p.at(tau), 2 * n - 2 * tau + 1);
        }
    }
}

TEST(SzTEstimation, TailMatchesNaiveCounts)
{
    std::mt19937_64 rng(19);
    for (int t = 0; t < 40; ++t) {
        const auto xa = oracle::random_ints(rng, 1 + rng() % 20, 30);
        const auto xb = oracle::random_ints(rng, 1 + rng() % 20, 30);
        const auto p = szt::tail_profile(oracle::to_set(xa), oracle::to_set(xb));
        const auto counts = oracle::sum_counts(xa, xb);
        for (std::size_t tau = 1; tau <= p.max_tau() + 1; ++tau) {
            std::uint64_t expected = 0;
            for (const auto &[x, c] : counts) {
                expected += static_cast<std::uint64_t>(c) >= tau ? 1 : 0;
            }
            EXPECT_EQ(p.at(tau), expected);
        }
        EXPECT_EQ(p.mass(), xa.size() * xb.size());
    }
}

TEST(SzTEstimation, EstimateExamples)
{
    const FiniteRealSet single{5};
    const FiniteRealSet probes[] = {FiniteRealSet{0, 1, 2}, FiniteRealSet{0, 10}};
    const auto e = szt::estimate_c(single, probes, 2.0);
    EXPECT_NEAR(e.c_hat, 1.0 / 2, 1e-15);
    EXPECT_EQ(e.witness.probe, 1u);
    const FiniteRealSet a{1, 4, 9, 16, 25};
    const FiniteRealSet point[] = {FiniteRealSet{0}};
    const auto e2 = szt::estimate_c(a, point, 2.0);
    EXPECT_EQ(e2.c_hat, 5.0);
    EXPECT_EQ(e2.witness.tau, 1u);
    EXPECT_THROW(szt::estimate_c(a, point, 0.5), szt::PreconditionError);
    EXPECT_THROW(szt::estimate_c(a, std::span<const FiniteRealSet>{}, 2.0), szt::PreconditionError);
}

TEST(SzTEstimation, EstimateIsMaxOverProbesAndLevels)
{
    const auto a = szt::generate({szt::FamilyKind::convex_squares, 64, 0, {}});
    const auto probes = szt::default_probes(a, 77);
    const auto e = szt::estimate_c(a, probes, 2.0);
    double best = 0;
    for (const auto &b : probes) {
        const auto p = szt::tail_profile(a, b);
        for (std::size_t tau = 1; tau <= p.max_tau(); ++tau) {
            const double t = static_cast<double>(tau);
            best = std::max(best, static_cast<double>(p.at(tau)) * t * t * t / (static_cast<double>(b.size()) * b.size()));
        }
    }
    EXPECT_EQ(e.c_hat, best);
    const auto w = szt::tail_profile(a, probes[e.witness.probe]);
    const double t = static_cast<double>(e.witness.tau);
    EXPECT_EQ(e.c_hat, static_cast<double>(w.at(e.witness.tau)) * t * t * t / (64.0 * 64.0));
}

TEST(SzTEstimation, QExamples)
{
    const FiniteRealSet a{0, 1, 2};
    const FiniteRealSet self[] = {a};
    EXPECT_NEAR(szt::q_of(a, self), 25.0 / 3, 1e-15);
    const FiniteRealSet two[] = {a, FiniteRealSet{0}};
    EXPECT_NEAR(szt::q_of(a, two), 25.0 / 3, 1e-15);
    const FiniteRealSet c3[] = {FiniteRealSet{1, 5, 6}};
    EXPECT_EQ(szt::q_of(FiniteRealSet{9}, c3), 3.0);
}

TEST(SzTEstimation, QPrimeExamples)
{
    const FiniteRealSet a{1, 2};
    const FiniteRealSet c1[] = {FiniteRealSet{1}};
    EXPECT_EQ(szt::q_prime(a, 1, c1), 4.0);
    const FiniteRealSet c2[] = {FiniteRealSet{1}, FiniteRealSet{1, 2}};
    EXPECT_EQ(szt::q_prime(a, 1, c2), 4.0);
    EXPECT_THROW(szt::q_prime(a, 0, c1), szt::PreconditionError);
    EXPECT_THROW(szt::q_prime(FiniteRealSet{-1, 2}, 1, c1), szt::PreconditionError);
    const FiniteRealSet bad[] = {FiniteRealSet{0, 1}};
    EXPECT_THROW(szt::q_prime(a, 1, bad), szt::PreconditionError);
}

TEST(SzTEstimation, FamilyConstants)
{
    EXPECT_EQ(szt::family_c(FiniteRealSet{1, 4, 9, 16}, szt::SzTFamily::convex), 4.0);
    EXPECT_NEAR(szt::family_c(FiniteRealSet{1, 2, 4, 8}, szt::SzTFamily::small_product), 12.25, 1e-15);
    const FiniteRealSet a{0, 1, 2};
    EXPECT_NEAR(szt::family_c(a, szt::SzTFamily::convex_image), 25.0 / 3, 1e-15);
    EXPECT_THROW(szt::family_c(FiniteRealSet{0, 1, 2, 3}, szt::SzTFamily::convex), szt::PreconditionError);
    EXPECT_EQ(szt::parse_szt_family("small-product"), szt::SzTFamily::small_product);
}
