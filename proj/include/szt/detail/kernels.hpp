// Pair-counting kernels shared by convolutions and energies.
//
// Two interchangeable representations of a group of sets:
//   * an integer frame: every element scaled by a common denominator and
//     stored as int64 (fast, used whenever the scaled values fit);
//   * raw Rational keys with hash-map accumulation (always applicable).
// Both produce identical counts; tests compare them bit-exactly.

#ifndef SZT_DETAIL_KERNELS_HPP
#define SZT_DETAIL_KERNELS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "szt/finite_set.hpp"
#include "szt/rational.hpp"

namespace szt::detail
{

/// plus: x + y.  minus: y - x (so that counts are (X o Y)(z) = #{y - x = z}).
enum class PairOp { plus, minus };

template <typename K>
using Counts = std::vector<std::pair<K, std::uint64_t>>;

struct IntFrame {
    mpz_class scale; // common denominator
};

// Scaled magnitudes stay below 2^61, so sums and differences of two fit in int64.
inline constexpr long kLiftBits = 61;

using SetRefs = std::vector<std::reference_wrapper<const FiniteRealSet>>;

inline std::optional<IntFrame> integer_frame(const SetRefs &sets)
{
    mpz_class scale = 1;
    for (const FiniteRealSet &s : sets) {
        for (const auto &x : s) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.value().get_den_mpz_t());
        }
    }
    const mpz_class limit = mpz_class(1) << kLiftBits;
    for (const FiniteRealSet &s : sets) {
        for (const auto &x : s) {
            const mpz_class v = x.numerator() * (scale / x.denominator());
            if (abs(v) >= limit) {
                return std::nullopt;
            }
        }
    }
    return IntFrame{scale};
}

inline std::vector<std::int64_t> lift(const FiniteRealSet &s, const IntFrame &frame)
{
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (const auto &x : s) {
        const mpz_class v = x.numerator() * (frame.scale / x.denominator());
        out.push_back(static_cast<std::int64_t>(v.get_si()));
    }
    return out;
}

inline Rational unlift(std::int64_t v, const IntFrame &frame)
{
    return Rational(mpz_class(static_cast<long>(v)), frame.scale);
}

inline std::vector<Rational> as_keys(const FiniteRealSet &s) { return {s.begin(), s.end()}; }

// Dense counting arrays are used when the value range is at most this long
// and not much larger than the work it replaces.
inline constexpr std::int64_t kDenseSpanLimit = std::int64_t{1} << 24;

inline bool dense_fits(std::int64_t lo, std::int64_t hi, std::uint64_t work)
{
    const std::int64_t span = hi - lo + 1;
    return span <= kDenseSpanLimit && static_cast<std::uint64_t>(span) <= 8 * work + (1u << 16);
}

inline std::int64_t apply(PairOp op, std::int64_t x, std::int64_t y) { return op == PairOp::plus ? x + y : y - x; }
inline Rational apply(PairOp op, const Rational &x, const Rational &y) { return op == PairOp::plus ? x + y : y - x; }

/// All nonzero counts of op(x, y) over xs × ys, sorted by key. Inputs sorted ascending.
inline Counts<std::int64_t> pair_counts(std::span<const std::int64_t> xs, std::span<const std::int64_t> ys, PairOp op)
{
    Counts<std::int64_t> out;
    if (xs.empty() || ys.empty()) {
        return out;
    }
    const std::uint64_t work = xs.size() * ys.size();
    const std::int64_t lo = op == PairOp::plus ? xs.front() + ys.front() : ys.front() - xs.back();
    const std::int64_t hi = op == PairOp::plus ? xs.back() + ys.back() : ys.back() - xs.front();
    if (dense_fits(lo, hi, work)) {
        std::vector<std::uint32_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto x : xs) {
            for (const auto y : ys) {
                ++counts[static_cast<std::size_t>(apply(op, x, y) - lo)];
            }
        }
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] != 0) {
                out.emplace_back(lo + static_cast<std::int64_t>(i), counts[i]);
            }
        }
        return out;
    }
    // Sorted-merge path.
    std::vector<std::int64_t> all;
    all.reserve(work);
    for (const auto x : xs) {
        for (const auto y : ys) {
            all.push_back(apply(op, x, y));
        }
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) {
            ++j;
        }
        out.emplace_back(all[i], j - i);
        i = j;
    }
    return out;
}

/// Hash-map accumulation over Rational keys; the reference path.
inline Counts<Rational> pair_counts(std::span<const Rational> xs, std::span<const Rational> ys, PairOp op)
{
    std::unordered_map<Rational, std::uint64_t, RationalHash> acc;
    acc.reserve(xs.size() * ys.size());
    for (const auto &x : xs) {
        for (const auto &y : ys) {
            ++acc[apply(op, x, y)];
        }
    }
    Counts<Rational> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

/// counts[i] = #{(x, y) : op(x, y) == support[i]}. `support` sorted ascending.
inline std::vector<std::uint64_t> restricted_pair_counts(std::span<const std::int64_t> xs, std::span<const std::int64_t> ys,
                                                         PairOp op, std::span<const std::int64_t> support)
{
    std::vector<std::uint64_t> out(support.size(), 0);
    if (support.empty() || xs.empty() || ys.empty()) {
        return out;
    }
    const std::int64_t lo = support.front();
    const std::int64_t hi = support.back();
    const std::uint64_t work = xs.size() * ys.size();
    // For fixed x the admissible y form a contiguous run of the sorted ys.
    auto y_range = [&](std::int64_t x) {
        const std::int64_t ylo = op == PairOp::plus ? lo - x : lo + x;
        const std::int64_t yhi = op == PairOp::plus ? hi - x : hi + x;
        const auto first = std::lower_bound(ys.begin(), ys.end(), ylo);
        const auto last = std::upper_bound(first, ys.end(), yhi);
        return std::pair{first, last};
    };
    if (dense_fits(lo, hi, work + support.size())) {
        std::vector<std::uint32_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto x : xs) {
            const auto [first, last] = y_range(x);
            for (auto it = first; it != last; ++it) {
                ++counts[static_cast<std::size_t>(apply(op, x, *it) - lo)];
            }
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
            out[i] = counts[static_cast<std::size_t>(support[i] - lo)];
        }
        return out;
    }
    std::unordered_map<std::int64_t, std::size_t> index;
    index.reserve(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        index.emplace(support[i], i);
    }
    for (const auto x : xs) {
        const auto [first, last] = y_range(x);
        for (auto it = first; it != last; ++it) {
            const auto found = index.find(apply(op, x, *it));
            if (found != index.end()) {
                ++out[found->second];
            }
        }
    }
    return out;
}

inline std::vector<std::uint64_t> restricted_pair_counts(std::span<const Rational> xs, std::span<const Rational> ys, PairOp op,
                                                         std::span<const Rational> support)
{
    std::vector<std::uint64_t> out(support.size(), 0);
    std::unordered_map<Rational, std::size_t, RationalHash> index;
    index.reserve(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        index.emplace(support[i], i);
    }
    for (const auto &x : xs) {
        for (const auto &y : ys) {
            const auto found = index.find(apply(op, x, y));
            if (found != index.end()) {
                ++out[found->second];
            }
        }
    }
    return out;
}

/// Runs `fn` with the element vectors of `sets` in a shared representation:
/// int64 when an integer frame exists, Rational keys otherwise. `fn` receives
/// (std::vector<std::vector<K>> elems, auto to_rational).
template <typename Fn>
decltype(auto) with_frame(const SetRefs &sets, Fn &&fn)
{
    if (const auto frame = integer_frame(sets)) {
        std::vector<std::vector<std::int64_t>> elems;
        for (const FiniteRealSet &s : sets) {
            elems.push_back(lift(s, *frame));
        }
        const IntFrame f = *frame;
        return fn(elems, [f](std::int64_t v) { return unlift(v, f); });
    }
    std::vector<std::vector<Rational>> elems;
    for (const FiniteRealSet &s : sets) {
        elems.push_back(as_keys(s));
    }
    return fn(elems, [](const Rational &v) { return v; });
}

} // namespace szt::detail

#endif
