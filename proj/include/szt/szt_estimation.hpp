// Empirical side of the SzT-type condition: tail profiles, c-hat over a probe
// family, and the min-over-candidates quantities q and q'.

#ifndef SZT_SZT_ESTIMATION_HPP
#define SZT_SZT_ESTIMATION_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "szt/convolution.hpp"
#include "szt/error.hpp"
#include "szt/families.hpp"
#include "szt/finite_set.hpp"

namespace szt
{

/// tail[τ-1] = |{x : (A*B)(x) >= τ}| for τ = 1..min(|A|,|B|).
struct TailProfile {
    std::vector<std::uint64_t> tail;

    [[nodiscard]] std::size_t max_tau() const noexcept { return tail.size(); }
    [[nodiscard]] std::uint64_t at(std::size_t tau) const
    {
        if (tau == 0) {
            throw PreconditionError("tau starts at 1");
        }
        return tau <= tail.size() ? tail[tau - 1] : 0;
    }
    /// Σ_τ tail(τ); equals |A||B| by the layer-cake identity.
    [[nodiscard]] std::uint64_t mass() const
    {
        std::uint64_t m = 0;
        for (const auto t : tail) {
            m += t;
        }
        return m;
    }
};

inline TailProfile tail_profile(const MultiplicityMap &conv, std::size_t max_tau)
{
    // histogram of multiplicities, then suffix sums
    std::vector<std::uint64_t> hist(max_tau + 2, 0);
    for (const auto &[x, count] : conv) {
        hist[std::min<std::uint64_t>(count, max_tau + 1)] += 1;
    }
    TailProfile p;
    p.tail.assign(max_tau, 0);
    std::uint64_t acc = hist[max_tau + 1];
    for (std::size_t tau = max_tau; tau >= 1; --tau) {
        acc += hist[tau];
        p.tail[tau - 1] = acc;
    }
    return p;
}

inline TailProfile tail_profile(const FiniteRealSet &a, const FiniteRealSet &b)
{
    if (a.is_empty() || b.is_empty()) {
        return {};
    }
    return tail_profile(convolve_plus(a, b), std::min(a.size(), b.size()));
}

struct SzTWitness {
    std::size_t probe = 0;
    std::size_t tau = 0;
};

struct SzTEstimate {
    double alpha = 2.0;
    double c_hat = 0.0;
    SzTWitness witness;
    /// Least-squares slope of log tail(τ) against log τ on the witness probe, diagnostic only.
    double tail_exponent = std::numeric_limits<double>::quiet_NaN();
};

namespace detail
{

inline double loglog_slope(const TailProfile &p)
{
    std::vector<std::pair<double, double>> pts;
    for (std::size_t tau = 1; tau <= p.max_tau(); ++tau) {
        if (p.at(tau) > 0) {
            pts.emplace_back(std::log2(static_cast<double>(tau)), std::log2(static_cast<double>(p.at(tau))));
        }
    }
    if (pts.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double mx = 0;
    double my = 0;
    for (const auto &[x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0;
    double sxx = 0;
    for (const auto &[x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxx > 0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

} // namespace detail

/// c_hat = max over probes B and τ of tail(τ)·τ^3 / |B|^α. Ties keep the first
/// (probe index, τ) in lexicographic order.
inline SzTEstimate estimate_c(const FiniteRealSet &a, std::span<const FiniteRealSet> probes, double alpha)
{
    if (probes.empty()) {
        throw PreconditionError("estimate_c needs at least one probe");
    }
    if (!(alpha >= 1.0)) {
        throw PreconditionError("SzT parameter alpha must be >= 1");
    }
    SzTEstimate est;
    est.alpha = alpha;
    est.c_hat = -1.0;
    TailProfile best_profile;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const auto &b = probes[i];
        if (b.is_empty()) {
            throw PreconditionError("estimate_c probe is empty");
        }
        const auto profile = tail_profile(a, b);
        const double denom = std::pow(static_cast<double>(b.size()), alpha);
        bool improved = false;
        for (std::size_t tau = 1; tau <= profile.max_tau(); ++tau) {
            const double t = static_cast<double>(tau);
            const double v = static_cast<double>(profile.at(tau)) * t * t * t / denom;
            if (v > est.c_hat) {
                est.c_hat = v;
                est.witness = {i, tau};
                improved = true;
            }
        }
        if (improved) {
            best_profile = profile;
        }
    }
    est.tail_exponent = detail::loglog_slope(best_profile);
    return est;
}

/// {A, -A, random |A|-subset of A+A, random sets of size |A|, AP of size |A|}.
inline std::vector<FiniteRealSet> default_probes(const FiniteRealSet &a, std::uint64_t seed, std::size_t random_sets = 2)
{
    if (a.is_empty()) {
        throw PreconditionError("default_probes of an empty set");
    }
    const std::size_t n = a.size();
    std::vector<FiniteRealSet> probes{a, negated(a)};
    const auto ss = sumset(a, a);
    probes.push_back(random_subset(ss, std::min(n, ss.size()), seed));
    for (std::size_t i = 0; i < random_sets; ++i) {
        probes.push_back(generate({FamilyKind::random_uniform, n, seed + 1 + i, {}}));
    }
    probes.push_back(generate({FamilyKind::arithmetic_progression, n, 0, {}}));
    return probes;
}

/// q(A) restricted to the candidate list: min |A+C|^2 / |C|.
inline double q_of(const FiniteRealSet &a, std::span<const FiniteRealSet> candidates)
{
    if (candidates.empty()) {
        throw PreconditionError("q_of needs at least one candidate");
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto &c : candidates) {
        if (c.is_empty()) {
            throw PreconditionError("q_of candidate is empty");
        }
        const double s = static_cast<double>(sumset(a, c).size());
        best = std::min(best, s * s / static_cast<double>(c.size()));
    }
    return best;
}

/// q'(A) restricted to the candidate list: min |(A+a)C|^2 / |C|, A positive, a != 0.
inline double q_prime(const FiniteRealSet &a, const Rational &shift, std::span<const FiniteRealSet> candidates)
{
    if (shift.sign() == 0) {
        throw PreconditionError("q_prime shift must be nonzero");
    }
    if (a.is_empty() || a.min().sign() <= 0) {
        throw PreconditionError("q_prime needs a set of positive elements");
    }
    if (candidates.empty()) {
        throw PreconditionError("q_prime needs at least one candidate");
    }
    const auto shifted = affine_image(a, Rational(1), shift);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &c : candidates) {
        if (c.is_empty() || c.contains(Rational(0))) {
            throw PreconditionError("q_prime candidates must be nonempty sets of nonzero elements");
        }
        const double p = static_cast<double>(product_set(shifted, c).size());
        best = std::min(best, p * p / static_cast<double>(c.size()));
    }
    return best;
}

enum class SzTFamily { convex, convex_image, small_product };

inline const char *to_string(SzTFamily k)
{
    switch (k) {
    case SzTFamily::convex:
        return "convex";
    case SzTFamily::convex_image:
        return "convex-image";
    case SzTFamily::small_product:
        return "small-product";
    }
    return "?";
}

inline SzTFamily parse_szt_family(const std::string &s)
{
    if (s == "convex") {
        return SzTFamily::convex;
    }
    if (s == "convex-image") {
        return SzTFamily::convex_image;
    }
    if (s == "small-product") {
        return SzTFamily::small_product;
    }
    throw PreconditionError("unknown SzT family '" + s + "'");
}

/// The prescribed c(A):
///   convex         |A|            (A or -A convex; reflection keeps the SzT type)
///   convex-image   q_of(A, candidates), candidates default to {A}
///   small-product  (|AA|/|A|)^2 |A|
inline double family_c(const FiniteRealSet &a, SzTFamily kind, std::span<const FiniteRealSet> candidates = {})
{
    if (a.is_empty()) {
        throw PreconditionError("family_c of an empty set");
    }
    const double n = static_cast<double>(a.size());
    switch (kind) {
    case SzTFamily::convex:
        if (!is_convex(a) && !is_convex(negated(a))) {
            throw PreconditionError("family_c: set claimed convex but is not");
        }
        return n;
    case SzTFamily::convex_image:
        if (candidates.empty()) {
            const FiniteRealSet self[] = {a};
            return q_of(a, self);
        }
        return q_of(a, candidates);
    case SzTFamily::small_product: {
        const double m = static_cast<double>(product_set(a, a).size()) / n;
        return m * m * n;
    }
    }
    throw PreconditionError("unknown SzT family");
}

} // namespace szt

#endif
