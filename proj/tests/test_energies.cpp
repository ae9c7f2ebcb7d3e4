#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "szt/energies.hpp"

using szt::FiniteRealSet;
using szt::Rational;

namespace
{

long exact_long(const szt::EnergyValue &e)
{
    EXPECT_TRUE(e.is_exact());
    return e.exact->get_si();
}

const FiniteRealSet kA{0, 1, 2};

} // namespace

TEST(Energies, IntegerExamples)
{
    EXPECT_EQ(exact_long(szt::energy_k({kA, kA})), 19);
    EXPECT_EQ(exact_long(szt::energy_k(kA, 3)), 45);
    EXPECT_EQ(exact_long(szt::energy_k(FiniteRealSet{7}, 2)), 1);
    EXPECT_EQ(exact_long(szt::energy_k(FiniteRealSet{7}, 5)), 1);
    EXPECT_THROW(szt::energy_k(kA, 1), szt::PreconditionError);
    EXPECT_THROW(szt::energy_k({kA}), szt::PreconditionError);
}

TEST(Energies, FractionalExamples)
{
    const double e32 = szt::energy_fractional(kA, 1.5).approx;
    EXPECT_NEAR(e32, std::pow(3.0, 1.5) + 2 * std::pow(2.0, 1.5) + 2, 1e-12);
    EXPECT_NEAR(e32, 12.8530, 5e-5);
    EXPECT_NEAR(szt::energy_fractional(kA, 2.0).approx, 19.0, 19.0 * 1e-12);
    EXPECT_NEAR(szt::energy_fractional(FiniteRealSet{3}, 0.7).approx, 1.0, 1e-15);
    EXPECT_THROW(szt::energy_fractional(kA, 0.0), szt::PreconditionError);
}

TEST(Energies, MixedExamples)
{
    EXPECT_EQ(exact_long(szt::mixed_energy(kA, kA, kA, kA)), 19);
    const FiniteRealSet b{0, 2, 4};
    EXPECT_EQ(exact_long(szt::mixed_energy(kA, kA, b, b)), 13);
    const FiniteRealSet x{0, 1, 5, 9};
    const FiniteRealSet y{1, 2, 9};
    EXPECT_EQ(exact_long(szt::mixed_energy(x, y, FiniteRealSet{4}, FiniteRealSet{4})), 2);
}

TEST(Energies, WeightedCorrExamples)
{
    EXPECT_NEAR(szt::weighted_corr(kA, kA, 0.5, 1.0).approx, szt::energy_fractional(kA, 1.5).approx, 1e-12);
    const FiniteRealSet b{0, 3, 4, 10};
    EXPECT_NEAR(szt::weighted_corr(kA, b, 1.0, 1.0).approx, szt::mixed_energy(kA, kA, b, b).approx, 1e-12);
    EXPECT_NEAR(szt::weighted_corr(FiniteRealSet{2}, b, 1.0, 0.5).approx, 2.0, 1e-15);
}

TEST(Energies, AgreeWithTupleEnumeration)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const std::size_t n = 1 + rng() % (k == 4 ? 4 : 6);
        std::vector<oracle::Ints> raw;
        std::vector<FiniteRealSet> sets;
        for (int j = 0; j < k; ++j) {
            raw.push_back(oracle::random_ints(rng, n, 6));
            sets.push_back(oracle::to_set(raw.back()));
        }
        const long expected = oracle::energy_by_tuples(raw);
        EXPECT_EQ(exact_long(szt::energy_k(sets)), expected);
        EXPECT_EQ(exact_long(szt::energy_bruteforce(sets)), expected);
    }
}

TEST(Energies, BruteforceExamplesAndBudget)
{
    const std::vector<FiniteRealSet> two{kA, kA};
    const std::vector<FiniteRealSet> three{kA, kA, kA};
    EXPECT_EQ(exact_long(szt::energy_bruteforce(two)), 19);
    EXPECT_EQ(exact_long(szt::energy_bruteforce(three)), 45);
    const std::vector<FiniteRealSet> single{FiniteRealSet{4}, FiniteRealSet{4}, FiniteRealSet{4}};
    EXPECT_EQ(exact_long(szt::energy_bruteforce(single)), 1);
    EXPECT_THROW(szt::energy_bruteforce(two, szt::EnergyBudget{10}), szt::BudgetError);
}

TEST(Energies, SymmetricUnderPermutation)
{
    const FiniteRealSet a{0, 1, 3, 7};
    const FiniteRealSet b{2, 3, 5};
    const FiniteRealSet c{0, 4, 8, 12, 13};
    const long abc = exact_long(szt::energy_k({a, b, c}));
    EXPECT_EQ(exact_long(szt::energy_k({c, a, b})), abc);
    EXPECT_EQ(exact_long(szt::energy_k({b, c, a})), abc);
}

TEST(Energies, PropertiesOnRandomSets)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
        const auto xa = oracle::random_ints(rng, 1 + rng() % 20, 50);
        const auto xb = oracle::random_ints(rng, 1 + rng() % 20, 50);
        const auto a = oracle::to_set(xa);
        const auto b = oracle::to_set(xb);
        const auto e2 = szt::energy_k(a, 2);
        const auto e3 = szt::energy_k(a, 3);
        EXPECT_LE(*e3.exact, mpz_class(static_cast<unsigned long>(a.size())) * *e2.exact);
        mpz_class n3 = static_cast<unsigned long>(a.size() * a.size() * a.size());
        EXPECT_GE(*e3.exact, n3);
        // E(A,B) two ways: Σ (A∘A)(B∘B) and Σ (A∘B)^2
        long s = 0;
        for (const auto &[x, c] : oracle::diff_counts(xa, xb)) {
            s += c * c;
        }
        EXPECT_EQ(exact_long(szt::mixed_energy(a, a, b, b)), s);
        EXPECT_EQ(exact_long(szt::pair_energy(a, b)), s);
        EXPECT_NEAR(szt::energy_fractional(a, 2.0).approx, e2.approx, e2.approx * 1e-12);
        EXPECT_NEAR(szt::energy_fractional(a, 1.5).approx, static_cast<double>(oracle::energy_power(xa, 1.5L)),
                    1e-12 * e2.approx);
        // Cauchy-Schwarz for the mixed energy
        const FiniteRealSet z = oracle::to_set(oracle::random_ints(rng, 1 + rng() % 10, 30));
        const auto m = szt::mixed_energy(a, b, z, a);
        EXPECT_LE(*m.exact * *m.exact, *szt::pair_energy(a, b).exact * *szt::pair_energy(z, a).exact);
    }
}

TEST(Energies, RationalElements)
{
    const Rational h(mpz_class(1), mpz_class(2));
    const FiniteRealSet a{0, h, 1};
    EXPECT_EQ(exact_long(szt::energy_k(a, 2)), 19);
    EXPECT_EQ(exact_long(szt::energy_k(szt::affine_image(a, Rational(mpz_class(2), mpz_class(7)), 3), 3)), 45);
}

TEST(Energies, CorrelationTensorExamples)
{
    const std::vector<FiniteRealSet> two{kA, kA};
    const auto c2 = szt::correlation_tensor(two);
    const auto conv = szt::convolve_minus(kA, kA);
    ASSERT_EQ(c2.entries.size(), conv.size());
    for (const auto &[x, c] : conv) {
        EXPECT_EQ(c2.at({x}), c);
    }
    const std::vector<FiniteRealSet> three{kA, kA, kA};
    const auto c3 = szt::correlation_tensor(three);
    EXPECT_EQ(c3.at({0, 0}), 3u);
    EXPECT_EQ(c3.at({1, 1}), 2u);
    EXPECT_EQ(c3.sum_of_squares(), 45);
    EXPECT_THROW(szt::correlation_tensor(three, szt::TensorBudget{2}), szt::BudgetError);
}

TEST(Energies, CorrelationTensorSquareSumIsEnergy)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const int order = 2 + static_cast<int>(rng() % 3);
        std::vector<FiniteRealSet> sets;
        for (int j = 0; j < order; ++j) {
            sets.push_back(oracle::to_set(oracle::random_ints(rng, 1 + rng() % 10, 15)));
        }
        EXPECT_EQ(szt::correlation_tensor(sets).sum_of_squares(), *szt::energy_k(sets).exact);
    }
}

TEST(Energies, Log2OfHugeValue)
{
    const FiniteRealSet a{0, 1, 2};
    const auto e = szt::energy_k(a, 40);
    EXPECT_NEAR(static_cast<double>(e.log2()), std::log2(e.approx), 1e-9);
}
