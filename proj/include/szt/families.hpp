// Seeded generators for the set families the sumset bounds apply to.
//
// Randomness comes from std::mt19937_64 raw outputs (the engine is fully
// specified by the standard) with rejection-based range reduction, so a spec
// regenerates the same set on every platform.

#ifndef SZT_FAMILIES_HPP
#define SZT_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "szt/error.hpp"
#include "szt/finite_set.hpp"

namespace szt
{

enum class FamilyKind {
    convex_squares,
    convex_cubes,
    convex_random_gaps,
    arithmetic_progression,
    geometric_progression,
    convex_image,
    random_uniform,
};

/// Exact rational maps usable as strictly convex/concave f.
enum class ConvexMap { square, cube, reciprocal, dyadic_log };

struct FamilySpec {
    FamilyKind kind = FamilyKind::convex_squares;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    // Kind-specific parameters:
    //   arithmetic-progression: {start, step}        default {0, 1}
    //   geometric-progression:  {ratio, start}       default {2, 1}
    //   convex-random-gaps:     {max extra gap}      default {n}
    //   convex-image:           {map id: 0 square, 1 cube, 2 reciprocal} over {1..n}
    //   random-uniform:         {range}              default {4 n^2}
    std::vector<Rational> params;
};

inline const char *to_string(FamilyKind k)
{
    switch (k) {
    case FamilyKind::convex_squares:
        return "convex-squares";
    case FamilyKind::convex_cubes:
        return "convex-cubes";
    case FamilyKind::convex_random_gaps:
        return "convex-random-gaps";
    case FamilyKind::arithmetic_progression:
        return "arithmetic-progression";
    case FamilyKind::geometric_progression:
        return "geometric-progression";
    case FamilyKind::convex_image:
        return "convex-image";
    case FamilyKind::random_uniform:
        return "random-uniform";
    }
    return "?";
}

/// Accepts canonical names and the short aliases squares, cubes, random-gaps, ap, gp, image, random.
inline FamilyKind parse_family_kind(const std::string &s)
{
    if (s == "convex-squares" || s == "squares") {
        return FamilyKind::convex_squares;
    }
    if (s == "convex-cubes" || s == "cubes") {
        return FamilyKind::convex_cubes;
    }
    if (s == "convex-random-gaps" || s == "random-gaps") {
        return FamilyKind::convex_random_gaps;
    }
    if (s == "arithmetic-progression" || s == "ap") {
        return FamilyKind::arithmetic_progression;
    }
    if (s == "geometric-progression" || s == "gp") {
        return FamilyKind::geometric_progression;
    }
    if (s == "convex-image" || s == "image") {
        return FamilyKind::convex_image;
    }
    if (s == "random-uniform" || s == "random") {
        return FamilyKind::random_uniform;
    }
    throw PreconditionError("unknown family kind '" + s + "'");
}

inline bool is_convex_kind(FamilyKind k)
{
    return k == FamilyKind::convex_squares || k == FamilyKind::convex_cubes || k == FamilyKind::convex_random_gaps ||
           k == FamilyKind::convex_image;
}

inline const char *to_string(ConvexMap m)
{
    switch (m) {
    case ConvexMap::square:
        return "square";
    case ConvexMap::cube:
        return "cube";
    case ConvexMap::reciprocal:
        return "reciprocal";
    case ConvexMap::dyadic_log:
        return "dyadic-log";
    }
    return "?";
}

inline ConvexMap parse_convex_map(const std::string &s)
{
    if (s == "square" || s == "squaring") {
        return ConvexMap::square;
    }
    if (s == "cube") {
        return ConvexMap::cube;
    }
    if (s == "reciprocal") {
        return ConvexMap::reciprocal;
    }
    if (s == "dyadic-log" || s == "log2") {
        return ConvexMap::dyadic_log;
    }
    throw PreconditionError("unknown convex map '" + s + "'");
}

namespace detail
{

/// Unbiased draw from [0, bound) using raw engine output.
inline std::uint64_t draw_below(std::mt19937_64 &rng, std::uint64_t bound)
{
    if (bound == 0) {
        throw PreconditionError("draw_below(0)");
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline long param_long(const FamilySpec &spec, std::size_t i, long fallback)
{
    if (spec.params.size() <= i) {
        return fallback;
    }
    const auto &p = spec.params[i];
    if (!p.is_integer() || !p.numerator().fits_slong_p()) {
        throw PreconditionError(std::string(to_string(spec.kind)) + ": parameter must be a machine integer");
    }
    return p.numerator().get_si();
}

inline Rational map_value(ConvexMap map, const Rational &x)
{
    switch (map) {
    case ConvexMap::square:
        if (x.sign() <= 0) {
            throw PreconditionError("square map is applied on positive elements only");
        }
        return x * x;
    case ConvexMap::cube:
        if (x.sign() <= 0) {
            throw PreconditionError("cube map is applied on positive elements only");
        }
        return x * x * x;
    case ConvexMap::reciprocal:
        if (x.sign() <= 0) {
            throw PreconditionError("reciprocal map is applied on positive elements only");
        }
        return Rational(1) / x;
    case ConvexMap::dyadic_log: {
        // Defined exactly on 2^k for integer k (including negative k).
        if (x.sign() <= 0) {
            throw PreconditionError("dyadic log needs positive elements");
        }
        const mpz_class num = x.numerator();
        const mpz_class den = x.denominator();
        auto is_pow2 = [](const mpz_class &v) { return v > 0 && mpz_popcount(v.get_mpz_t()) == 1; };
        if (!is_pow2(num) || !is_pow2(den)) {
            throw PreconditionError("dyadic log is defined on exact powers of two only: " + x.to_string());
        }
        const long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
        return Rational(e);
    }
    }
    throw PreconditionError("unknown map");
}

} // namespace detail

/// f(A) as a set; every built-in map is injective on its domain so |f(A)| = |A|.
inline FiniteRealSet apply_convex_map(const FiniteRealSet &a, ConvexMap map)
{
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto &x : a) {
        out.push_back(detail::map_value(map, x));
    }
    return FiniteRealSet(std::move(out));
}

inline FiniteRealSet generate(const FamilySpec &spec)
{
    const std::size_t n = spec.n;
    if (n == 0) {
        throw PreconditionError("family size must be at least 1");
    }
    std::vector<Rational> v;
    v.reserve(n);
    switch (spec.kind) {
    case FamilyKind::convex_squares:
        for (std::size_t i = 1; i <= n; ++i) {
            v.emplace_back(mpz_class(mpz_class(static_cast<unsigned long>(i)) * static_cast<unsigned long>(i)));
        }
        break;
    case FamilyKind::convex_cubes:
        for (std::size_t i = 1; i <= n; ++i) {
            const mpz_class k(static_cast<unsigned long>(i));
            v.emplace_back(mpz_class(k * k * k));
        }
        break;
    case FamilyKind::convex_random_gaps: {
        // Gaps g_1 < g_2 < ... with g_{i+1} = g_i + 1 + U[0, spread).
        const long spread = detail::param_long(spec, 0, static_cast<long>(n));
        if (spread < 1) {
            throw PreconditionError("convex-random-gaps: spread must be >= 1");
        }
        std::mt19937_64 rng(spec.seed);
        mpz_class value = 1;
        mpz_class gap = 0;
        v.emplace_back(value);
        for (std::size_t i = 1; i < n; ++i) {
            gap += 1 + static_cast<unsigned long>(detail::draw_below(rng, static_cast<std::uint64_t>(spread)));
            value += gap;
            v.emplace_back(value);
        }
        break;
    }
    case FamilyKind::arithmetic_progression: {
        const Rational start = spec.params.size() > 0 ? spec.params[0] : Rational(0);
        const Rational step = spec.params.size() > 1 ? spec.params[1] : Rational(1);
        if (step.sign() == 0) {
            throw PreconditionError("arithmetic-progression: step must be nonzero");
        }
        Rational x = start;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(x);
            x += step;
        }
        break;
    }
    case FamilyKind::geometric_progression: {
        const Rational ratio = spec.params.size() > 0 ? spec.params[0] : Rational(2);
        const Rational start = spec.params.size() > 1 ? spec.params[1] : Rational(1);
        if (ratio.sign() == 0 || ratio == Rational(1) || ratio == Rational(-1)) {
            throw PreconditionError("geometric-progression: ratio must be nonzero and different from +-1");
        }
        if (start.sign() == 0) {
            throw PreconditionError("geometric-progression: start must be nonzero");
        }
        Rational x = start;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(x);
            x = x * ratio;
        }
        break;
    }
    case FamilyKind::convex_image: {
        const long id = detail::param_long(spec, 0, 0);
        if (id < 0 || id > 2) {
            throw PreconditionError("convex-image: map id must be 0 (square), 1 (cube) or 2 (reciprocal)");
        }
        std::vector<Rational> base;
        for (std::size_t i = 1; i <= n; ++i) {
            base.emplace_back(static_cast<long>(i));
        }
        return apply_convex_map(FiniteRealSet(std::move(base)), static_cast<ConvexMap>(id));
    }
    case FamilyKind::random_uniform: {
        const long range = detail::param_long(spec, 0, static_cast<long>(4 * n * n));
        if (range < static_cast<long>(n)) {
            throw PreconditionError("random-uniform: range must be at least n");
        }
        std::mt19937_64 rng(spec.seed);
        std::set<std::uint64_t> picked;
        while (picked.size() < n) {
            picked.insert(detail::draw_below(rng, static_cast<std::uint64_t>(range)));
        }
        for (const auto x : picked) {
            v.emplace_back(mpz_class(static_cast<unsigned long>(x)));
        }
        break;
    }
    }
    return FiniteRealSet(std::move(v));
}

/// Random subset of `s` with `k` elements (k <= |s|), deterministic in the seed.
inline FiniteRealSet random_subset(const FiniteRealSet &s, std::size_t k, std::uint64_t seed)
{
    if (k == 0 || k > s.size()) {
        throw PreconditionError("random_subset size out of range");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(s.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(detail::draw_below(rng, idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(s[idx[i]]);
    }
    return FiniteRealSet(std::move(out));
}

} // namespace szt

#endif
