// Higher energies E_k, fractional and mixed energies, correlation tensors,
// and a brute-force counting oracle for E_k.

#ifndef SZT_ENERGIES_HPP
#define SZT_ENERGIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "szt/convolution.hpp"
#include "szt/detail/kernels.hpp"
#include "szt/error.hpp"
#include "szt/finite_set.hpp"

namespace szt
{

/// An energy: exact big integer whenever the value is an integer count,
/// plus its double approximation (the only value for fractional powers).
struct EnergyValue {
    std::optional<mpz_class> exact;
    double approx = 0.0;

    static EnergyValue from_exact(mpz_class v)
    {
        EnergyValue e;
        e.approx = v.get_d();
        e.exact = std::move(v);
        return e;
    }
    static EnergyValue from_approx(double v)
    {
        EnergyValue e;
        e.approx = v;
        return e;
    }
    [[nodiscard]] bool is_exact() const noexcept { return exact.has_value(); }
    [[nodiscard]] long double log2() const
    {
        return exact ? log2_of(*exact) : std::log2(static_cast<long double>(approx));
    }
};

struct EnergyBudget {
    std::uint64_t tuple_evaluations = 100'000'000;
};

namespace detail
{

/// Deterministic pairwise summation; terms should be supplied in a canonical order.
inline double pairwise_sum(std::span<const double> xs)
{
    if (xs.size() <= 8) {
        double s = 0.0;
        for (const double x : xs) {
            s += x;
        }
        return s;
    }
    const auto half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

/// Representation counts of several difference convolutions restricted to the
/// intersection of their supports: counts[j][i] = (P_j ∘ Q_j)(x_i) > 0 for every j.
struct JointCounts {
    std::vector<std::vector<std::uint64_t>> counts;
    std::vector<Rational> keys; // filled only on request

    [[nodiscard]] std::size_t points() const { return counts.empty() ? 0 : counts.front().size(); }
};

using SetPair = std::pair<std::reference_wrapper<const FiniteRealSet>, std::reference_wrapper<const FiniteRealSet>>;

inline JointCounts joint_difference_counts(const std::vector<SetPair> &pairs, bool want_keys = false)
{
    if (pairs.empty()) {
        throw PreconditionError("joint counts need at least one pair");
    }
    SetRefs refs;
    for (const auto &[p, q] : pairs) {
        refs.push_back(p);
        refs.push_back(q);
    }
    return with_frame(refs, [&](const auto &elems, auto to_rational) {
        using K = typename std::decay_t<decltype(elems)>::value_type::value_type;
        const std::size_t m = pairs.size();

        // Identical pairs share one count vector.
        std::vector<std::size_t> canon(m);
        for (std::size_t j = 0; j < m; ++j) {
            canon[j] = j;
            for (std::size_t i = 0; i < j; ++i) {
                if (canon[i] == i && pairs[i].first.get() == pairs[j].first.get() &&
                    pairs[i].second.get() == pairs[j].second.get()) {
                    canon[j] = i;
                    break;
                }
            }
        }
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < m; ++j) {
            if (canon[j] == j) {
                order.push_back(j);
            }
        }
        auto work = [&](std::size_t j) { return elems[2 * j].size() * elems[2 * j + 1].size(); };
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return work(x) < work(y); });

        std::vector<K> keys;
        std::vector<std::vector<std::uint64_t>> distinct(m);
        {
            const std::size_t j0 = order.front();
            const auto full = pair_counts(std::span<const K>(elems[2 * j0]), std::span<const K>(elems[2 * j0 + 1]), PairOp::minus);
            keys.reserve(full.size());
            distinct[j0].reserve(full.size());
            for (const auto &[k, v] : full) {
                keys.push_back(k);
                distinct[j0].push_back(v);
            }
        }
        for (std::size_t t = 1; t < order.size(); ++t) {
            const std::size_t j = order[t];
            auto c = restricted_pair_counts(std::span<const K>(elems[2 * j]), std::span<const K>(elems[2 * j + 1]), PairOp::minus,
                                            std::span<const K>(keys));
            // Drop points where this factor vanishes.
            std::size_t w = 0;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (c[i] != 0) {
                    keys[w] = keys[i];
                    for (std::size_t s = 0; s < t; ++s) {
                        distinct[order[s]][w] = distinct[order[s]][i];
                    }
                    c[w] = c[i];
                    ++w;
                }
            }
            keys.resize(w);
            for (std::size_t s = 0; s < t; ++s) {
                distinct[order[s]].resize(w);
            }
            c.resize(w);
            distinct[j] = std::move(c);
        }

        JointCounts out;
        out.counts.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            out.counts[j] = distinct[canon[j]];
        }
        if (want_keys) {
            out.keys.reserve(keys.size());
            for (const auto &k : keys) {
                out.keys.push_back(to_rational(k));
            }
        }
        return out;
    });
}

inline mpz_class sum_of_products(const JointCounts &jc)
{
    mpz_class total = 0;
    mpz_class term;
    for (std::size_t i = 0; i < jc.points(); ++i) {
        term = 1;
        for (const auto &c : jc.counts) {
            term *= static_cast<unsigned long>(c[i]);
        }
        total += term;
    }
    return total;
}

/// Σ over points of Π_j counts[j]^exponents[j], grouped by the tuple of counts
/// so the float reduction is independent of where the points lie.
inline double powered_sum(const JointCounts &jc, std::span<const double> exponents)
{
    std::map<std::vector<std::uint64_t>, std::uint64_t> histogram;
    std::vector<std::uint64_t> key(jc.counts.size());
    for (std::size_t i = 0; i < jc.points(); ++i) {
        for (std::size_t j = 0; j < jc.counts.size(); ++j) {
            key[j] = jc.counts[j][i];
        }
        ++histogram[key];
    }
    std::vector<double> terms;
    terms.reserve(histogram.size());
    for (const auto &[k, mult] : histogram) {
        double t = static_cast<double>(mult);
        for (std::size_t j = 0; j < k.size(); ++j) {
            t *= std::pow(static_cast<double>(k[j]), exponents[j]);
        }
        terms.push_back(t);
    }
    return pairwise_sum(terms);
}

} // namespace detail

/// E_k(A_1, ..., A_k) = Σ_x Π_j (A_j ∘ A_j)(x), exact.
inline EnergyValue energy_k(std::span<const FiniteRealSet> sets)
{
    if (sets.size() < 2) {
        throw PreconditionError("energy_k needs k >= 2 sets");
    }
    std::vector<detail::SetPair> pairs;
    for (const auto &s : sets) {
        pairs.emplace_back(s, s);
    }
    return EnergyValue::from_exact(detail::sum_of_products(detail::joint_difference_counts(pairs)));
}

inline EnergyValue energy_k(std::initializer_list<FiniteRealSet> sets)
{
    const std::vector<FiniteRealSet> v(sets);
    return energy_k(std::span<const FiniteRealSet>(v));
}

/// E_k(A) for one set and integer k >= 2.
inline EnergyValue energy_k(const FiniteRealSet &a, int k)
{
    if (k < 2) {
        throw PreconditionError("energy_k needs k >= 2");
    }
    const std::vector<FiniteRealSet> v(static_cast<std::size_t>(k), a);
    return energy_k(std::span<const FiniteRealSet>(v));
}

/// E_k(A) = Σ_x (A∘A)(x)^k for real k > 0, in double precision.
inline EnergyValue energy_fractional(const FiniteRealSet &a, double k)
{
    if (!(k > 0)) {
        throw PreconditionError("fractional energy needs k > 0");
    }
    const auto jc = detail::joint_difference_counts({{a, a}});
    const double e[] = {k};
    return EnergyValue::from_approx(detail::powered_sum(jc, e));
}

/// Σ_x (X∘Y)(x) (Z∘W)(x). With X=Y=A, Z=W=B this is E(A,B).
inline EnergyValue mixed_energy(const FiniteRealSet &x, const FiniteRealSet &y, const FiniteRealSet &z, const FiniteRealSet &w)
{
    return EnergyValue::from_exact(detail::sum_of_products(detail::joint_difference_counts({{x, y}, {z, w}})));
}

/// E(X,Y) in the pair sense: Σ_x (X∘Y)(x)^2.
inline EnergyValue pair_energy(const FiniteRealSet &x, const FiniteRealSet &y) { return mixed_energy(x, y, x, y); }

/// Σ_x (X∘X)(x)^p (Y∘Y)(x)^q over the common support.
inline EnergyValue weighted_corr(const FiniteRealSet &x, const FiniteRealSet &y, double p, double q)
{
    if (!(p > 0) || !(q > 0)) {
        throw PreconditionError("weighted_corr exponents must be positive");
    }
    const auto jc = detail::joint_difference_counts({{x, x}, {y, y}});
    const double e[] = {p, q};
    return EnergyValue::from_approx(detail::powered_sum(jc, e));
}

// ---------------------------------------------------------------------------

/// Sparse C_{k+1}(A_1, ..., A_{k+1}) keyed by the difference tuple (x_1, ..., x_k).
struct CorrelationTensor {
    std::size_t order = 0; // k + 1
    std::vector<std::pair<std::vector<Rational>, std::uint64_t>> entries; // sorted by key

    [[nodiscard]] std::uint64_t at(const std::vector<Rational> &key) const
    {
        const auto it = std::lower_bound(entries.begin(), entries.end(), key,
                                         [](const auto &e, const std::vector<Rational> &k) { return e.first < k; });
        return (it != entries.end() && it->first == key) ? it->second : 0;
    }

    [[nodiscard]] mpz_class sum_of_squares() const
    {
        mpz_class s = 0;
        for (const auto &e : entries) {
            mpz_class v(static_cast<unsigned long>(e.second));
            s += v * v;
        }
        return s;
    }
};

struct TensorBudget {
    std::uint64_t tuples = 50'000'000;
};

/// C_{k+1}(x_1..x_k) = Σ_z A_1(z) A_2(z + x_1) ... A_{k+1}(z + x_k).
inline CorrelationTensor correlation_tensor(std::span<const FiniteRealSet> sets, TensorBudget budget = {})
{
    if (sets.size() < 2) {
        throw PreconditionError("correlation tensor needs at least two sets");
    }
    mpz_class required = 1;
    for (const auto &s : sets) {
        required *= static_cast<unsigned long>(s.size());
    }
    if (required > mpz_class(static_cast<unsigned long>(budget.tuples))) {
        throw BudgetError("correlation tensor", required.fits_ulong_p() ? required.get_ui() : ~0ULL, budget.tuples);
    }
    const std::size_t k = sets.size() - 1;
    struct VecHash {
        std::size_t operator()(const std::vector<Rational> &v) const noexcept
        {
            std::size_t h = 0x84222325u;
            for (const auto &r : v) {
                h ^= r.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
            return h;
        }
    };
    std::unordered_map<std::vector<Rational>, std::uint64_t, VecHash> acc;
    std::vector<Rational> key(k);
    std::vector<std::size_t> idx(k, 0);
    for (const auto &z : sets[0]) {
        // Odometer over A_2 × ... × A_{k+1}.
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t j = 0; j < k; ++j) {
                key[j] = sets[j + 1][idx[j]] - z;
            }
            ++acc[key];
            std::size_t j = 0;
            while (j < k && ++idx[j] == sets[j + 1].size()) {
                idx[j] = 0;
                ++j;
            }
            if (j == k) {
                break;
            }
        }
    }
    CorrelationTensor out;
    out.order = sets.size();
    out.entries.assign(acc.begin(), acc.end());
    std::sort(out.entries.begin(), out.entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------

/// Counting oracle for E_k: the number of 2k-tuples (a_1, a_1', ..., a_k, a_k')
/// with a_j' - a_j all equal. For each (a_1, a_1') the matching pairs of every
/// other set are counted by a plain scan, with no hashing or integer lifting.
/// Cost |A_1|^2 · Σ_{j>1} |A_j|^2 comparisons, checked against the budget.
inline EnergyValue energy_bruteforce(std::span<const FiniteRealSet> sets, EnergyBudget budget = {})
{
    if (sets.size() < 2) {
        throw PreconditionError("energy_bruteforce needs k >= 2 sets");
    }
    mpz_class cost = 0;
    for (std::size_t j = 1; j < sets.size(); ++j) {
        cost += static_cast<unsigned long>(sets[j].size() * sets[j].size());
    }
    cost *= static_cast<unsigned long>(sets[0].size() * sets[0].size());
    if (cost > mpz_class(static_cast<unsigned long>(budget.tuple_evaluations))) {
        throw BudgetError("energy_bruteforce", cost.fits_ulong_p() ? cost.get_ui() : ~0ULL, budget.tuple_evaluations);
    }
    std::vector<std::vector<Rational>> diffs(sets.size());
    for (std::size_t j = 0; j < sets.size(); ++j) {
        for (const auto &a : sets[j]) {
            for (const auto &b : sets[j]) {
                diffs[j].push_back(b - a);
            }
        }
    }
    mpz_class total = 0;
    mpz_class term;
    for (const auto &d : diffs[0]) {
        term = 1;
        for (std::size_t j = 1; j < sets.size() && term != 0; ++j) {
            unsigned long matches = 0;
            for (const auto &e : diffs[j]) {
                if (e == d) {
                    ++matches;
                }
            }
            term *= matches;
        }
        total += term;
    }
    return EnergyValue::from_exact(total);
}

} // namespace szt

#endif
