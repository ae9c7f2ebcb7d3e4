#include <gtest/gtest.h>

#include "szt/families.hpp"

using szt::FamilyKind;
using szt::FamilySpec;
using szt::FiniteRealSet;
using szt::Rational;

namespace
{

std::vector<Rational> elems(const FiniteRealSet &s) { return {s.begin(), s.end()}; }

Rational q(long p, long d) { return Rational(mpz_class(p), mpz_class(d)); }

} // namespace

TEST(Families, Examples)
{
    EXPECT_EQ(elems(szt::generate({FamilyKind::convex_squares, 4, 0, {}})), (std::vector<Rational>{1, 4, 9, 16}));
    EXPECT_EQ(elems(szt::generate({FamilyKind::geometric_progression, 4, 0, {Rational(2)}})), (std::vector<Rational>{1, 2, 4, 8}));
    EXPECT_EQ(elems(szt::generate({FamilyKind::convex_cubes, 3, 0, {}})), (std::vector<Rational>{1, 8, 27}));
    EXPECT_EQ(elems(szt::generate({FamilyKind::arithmetic_progression, 3, 0, {Rational(5), q(1, 2)}})),
              (std::vector<Rational>{5, q(11, 2), 6}));
}

TEST(Families, RandomGapsAreConvexAndSeeded)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = szt::generate({FamilyKind::convex_random_gaps, 50, seed, {}});
        EXPECT_EQ(a.size(), 50u);
        EXPECT_TRUE(szt::is_convex(a));
        EXPECT_EQ(elems(a), elems(szt::generate({FamilyKind::convex_random_gaps, 50, seed, {}})));
    }
    EXPECT_NE(elems(szt::generate({FamilyKind::convex_random_gaps, 50, 1, {}})),
              elems(szt::generate({FamilyKind::convex_random_gaps, 50, 2, {}})));
}

TEST(Families, ConvexKinds)
{
    for (const auto k : {FamilyKind::convex_squares, FamilyKind::convex_cubes, FamilyKind::convex_random_gaps}) {
        EXPECT_TRUE(szt::is_convex(szt::generate({k, 40, 9, {}})));
    }
    EXPECT_TRUE(szt::is_convex(szt::generate({FamilyKind::geometric_progression, 40, 0, {}})));
    EXPECT_TRUE(szt::is_convex(szt::generate({FamilyKind::convex_image, 20, 0, {Rational(2)}})));
}

TEST(Families, RandomUniform)
{
    const auto a = szt::generate({FamilyKind::random_uniform, 30, 5, {Rational(100)}});
    EXPECT_EQ(a.size(), 30u);
    EXPECT_GE(a.min(), Rational(0));
    EXPECT_LT(a.max(), Rational(100));
    EXPECT_THROW(szt::generate({FamilyKind::random_uniform, 30, 5, {Rational(10)}}), szt::PreconditionError);
}

TEST(Families, Errors)
{
    EXPECT_THROW(szt::generate({FamilyKind::convex_squares, 0, 0, {}}), szt::PreconditionError);
    EXPECT_THROW(szt::generate({FamilyKind::geometric_progression, 4, 0, {Rational(1)}}), szt::PreconditionError);
    EXPECT_THROW(szt::generate({FamilyKind::geometric_progression, 4, 0, {Rational(0)}}), szt::PreconditionError);
    EXPECT_THROW(szt::generate({FamilyKind::arithmetic_progression, 4, 0, {Rational(0), Rational(0)}}), szt::PreconditionError);
    EXPECT_THROW(szt::generate({FamilyKind::convex_image, 4, 0, {Rational(7)}}), szt::PreconditionError);
    EXPECT_THROW(szt::generate({FamilyKind::convex_random_gaps, 4, 0, {q(1, 2)}}), szt::PreconditionError);
}

TEST(Families, ConvexMaps)
{
    EXPECT_EQ(elems(szt::apply_convex_map(FiniteRealSet{1, 2, 3, 4}, szt::ConvexMap::square)), (std::vector<Rational>{1, 4, 9, 16}));
    EXPECT_EQ(elems(szt::apply_convex_map(FiniteRealSet{1, 2, 4, 8}, szt::ConvexMap::dyadic_log)), (std::vector<Rational>{0, 1, 2, 3}));
    EXPECT_EQ(elems(szt::apply_convex_map(FiniteRealSet{1, 2}, szt::ConvexMap::reciprocal)), (std::vector<Rational>{q(1, 2), 1}));
    EXPECT_EQ(elems(szt::apply_convex_map(FiniteRealSet{q(1, 4), 8}, szt::ConvexMap::dyadic_log)), (std::vector<Rational>{-2, 3}));
    EXPECT_THROW(szt::apply_convex_map(FiniteRealSet{1, 3}, szt::ConvexMap::dyadic_log), szt::PreconditionError);
    EXPECT_THROW(szt::apply_convex_map(FiniteRealSet{-1, 3}, szt::ConvexMap::square), szt::PreconditionError);
}

TEST(Families, NameParsing)
{
    EXPECT_EQ(szt::parse_family_kind("squares"), FamilyKind::convex_squares);
    EXPECT_EQ(szt::parse_family_kind("gp"), FamilyKind::geometric_progression);
    EXPECT_EQ(szt::parse_family_kind(szt::to_string(FamilyKind::random_uniform)), FamilyKind::random_uniform);
    EXPECT_THROW(szt::parse_family_kind("primes"), szt::PreconditionError);
    EXPECT_EQ(szt::parse_convex_map(szt::to_string(szt::ConvexMap::cube)), szt::ConvexMap::cube);
}

TEST(Families, GeometricClosedForms)
{
    for (std::size_t n = 4; n <= 64; n += 12) {
        const auto a = szt::generate({FamilyKind::geometric_progression, n, 0, {Rational(2)}});
        EXPECT_EQ(szt::product_set(a, a).size(), 2 * n - 1);
        EXPECT_EQ(szt::sumset(a, a).size(), n * (n + 1) / 2);
    }
}

TEST(Families, RandomSubset)
{
    const auto s = szt::generate({FamilyKind::convex_squares, 30, 0, {}});
    const auto sub = szt::random_subset(s, 10, 3);
    EXPECT_EQ(sub.size(), 10u);
    EXPECT_TRUE(sub.is_subset_of(s));
    EXPECT_EQ(elems(sub), elems(szt::random_subset(s, 10, 3)));
    EXPECT_THROW(szt::random_subset(s, 31, 3), szt::PreconditionError);
}
