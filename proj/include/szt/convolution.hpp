// Representation functions (A*B)(x), (A∘B)(x) and their level sets.

#ifndef SZT_CONVOLUTION_HPP
#define SZT_CONVOLUTION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "szt/detail/kernels.hpp"
#include "szt/finite_set.hpp"

namespace szt
{

/// Finitely supported map Rational -> positive count, sorted by key.
class MultiplicityMap
{
public:
    using Entry = std::pair<Rational, std::uint64_t>;

    MultiplicityMap() = default;
    explicit MultiplicityMap(std::vector<Entry> sorted_entries) : m_entries(std::move(sorted_entries)) {}

    [[nodiscard]] const std::vector<Entry> &entries() const noexcept { return m_entries; }
    [[nodiscard]] std::size_t size() const noexcept { return m_entries.size(); }
    [[nodiscard]] auto begin() const noexcept { return m_entries.begin(); }
    [[nodiscard]] auto end() const noexcept { return m_entries.end(); }

    [[nodiscard]] std::uint64_t at(const Rational &x) const
    {
        const auto it = std::lower_bound(m_entries.begin(), m_entries.end(), x,
                                         [](const Entry &e, const Rational &v) { return e.first < v; });
        return (it != m_entries.end() && it->first == x) ? it->second : 0;
    }

    [[nodiscard]] std::uint64_t total_mass() const
    {
        return std::accumulate(m_entries.begin(), m_entries.end(), std::uint64_t{0},
                               [](std::uint64_t acc, const Entry &e) { return acc + e.second; });
    }

    [[nodiscard]] std::uint64_t max_value() const
    {
        std::uint64_t m = 0;
        for (const auto &e : m_entries) {
            m = std::max(m, e.second);
        }
        return m;
    }

    [[nodiscard]] FiniteRealSet support() const
    {
        std::vector<Rational> keys;
        keys.reserve(m_entries.size());
        for (const auto &e : m_entries) {
            keys.push_back(e.first);
        }
        return FiniteRealSet::from_sorted_unique(std::move(keys));
    }

    friend bool operator==(const MultiplicityMap &, const MultiplicityMap &) = default;

private:
    std::vector<Entry> m_entries;
};

namespace detail
{

inline MultiplicityMap convolve(const FiniteRealSet &a, const FiniteRealSet &b, PairOp op)
{
    return with_frame({a, b}, [op](const auto &elems, auto to_rational) {
        const auto counts = pair_counts(std::span(elems[0]), std::span(elems[1]), op);
        std::vector<MultiplicityMap::Entry> entries;
        entries.reserve(counts.size());
        for (const auto &[k, v] : counts) {
            entries.emplace_back(to_rational(k), v);
        }
        return MultiplicityMap(std::move(entries));
    });
}

// Reference path: Rational hash-map accumulation, never lifted.
inline MultiplicityMap convolve_hashed(const FiniteRealSet &a, const FiniteRealSet &b, PairOp op)
{
    const auto xs = as_keys(a);
    const auto ys = as_keys(b);
    return MultiplicityMap(pair_counts(std::span<const Rational>(xs), std::span<const Rational>(ys), op));
}

} // namespace detail

/// (A*B)(x) = #{(a, b) in A×B : a + b = x}
inline MultiplicityMap convolve_plus(const FiniteRealSet &a, const FiniteRealSet &b)
{
    return detail::convolve(a, b, detail::PairOp::plus);
}

/// (A∘B)(x) = #{(a, b) in A×B : b - a = x}
inline MultiplicityMap convolve_minus(const FiniteRealSet &a, const FiniteRealSet &b)
{
    return detail::convolve(a, b, detail::PairOp::minus);
}

/// Points of multiplicity at least tau; possibly empty. Monotone decreasing in tau.
inline FiniteRealSet level_set(const MultiplicityMap &conv, double tau)
{
    if (!(tau > 0)) {
        throw PreconditionError("level_set threshold must be positive");
    }
    std::vector<Rational> keys;
    for (const auto &[x, count] : conv) {
        if (static_cast<double>(count) >= tau) {
            keys.push_back(x);
        }
    }
    return FiniteRealSet::from_sorted_unique(std::move(keys));
}

/// Exact-threshold variant: multiplicity >= tau for rational tau.
inline FiniteRealSet level_set(const MultiplicityMap &conv, const Rational &tau)
{
    if (tau.sign() <= 0) {
        throw PreconditionError("level_set threshold must be positive");
    }
    std::vector<Rational> keys;
    for (const auto &[x, count] : conv) {
        if (Rational(mpz_class(static_cast<unsigned long>(count))) >= tau) {
            keys.push_back(x);
        }
    }
    return FiniteRealSet::from_sorted_unique(std::move(keys));
}

} // namespace szt

#endif
