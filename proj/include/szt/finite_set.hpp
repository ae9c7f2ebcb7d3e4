// Finite sets of exact rationals and the elementary set arithmetic on them.

#ifndef SZT_FINITE_SET_HPP
#define SZT_FINITE_SET_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "szt/error.hpp"
#include "szt/rational.hpp"

namespace szt
{

/// Strictly increasing sequence of rationals.
///
/// Constructors reject empty input; the only way to obtain an empty set is
/// FiniteRealSet::empty(), which level sets and filters return.
class FiniteRealSet
{
public:
    explicit FiniteRealSet(std::vector<Rational> values)
    {
        if (values.empty()) {
            throw PreconditionError("empty set");
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        m_elements = std::move(values);
    }

    FiniteRealSet(std::initializer_list<Rational> values) : FiniteRealSet(std::vector<Rational>(values)) {}

    static FiniteRealSet empty() { return FiniteRealSet(); }

    // Caller guarantees the input is strictly increasing; may be empty.
    static FiniteRealSet from_sorted_unique(std::vector<Rational> values)
    {
        FiniteRealSet s;
        s.m_elements = std::move(values);
        return s;
    }

    [[nodiscard]] std::size_t size() const noexcept { return m_elements.size(); }
    [[nodiscard]] bool is_empty() const noexcept { return m_elements.empty(); }
    [[nodiscard]] std::span<const Rational> elements() const noexcept { return m_elements; }
    [[nodiscard]] const Rational &operator[](std::size_t i) const { return m_elements[i]; }
    [[nodiscard]] const Rational &min() const { return m_elements.front(); }
    [[nodiscard]] const Rational &max() const { return m_elements.back(); }
    [[nodiscard]] auto begin() const noexcept { return m_elements.begin(); }
    [[nodiscard]] auto end() const noexcept { return m_elements.end(); }

    [[nodiscard]] bool contains(const Rational &x) const
    {
        return std::binary_search(m_elements.begin(), m_elements.end(), x);
    }

    // Position of x, or size() when absent.
    [[nodiscard]] std::size_t index_of(const Rational &x) const
    {
        const auto it = std::lower_bound(m_elements.begin(), m_elements.end(), x);
        return (it != m_elements.end() && *it == x) ? static_cast<std::size_t>(it - m_elements.begin()) : size();
    }

    [[nodiscard]] bool is_subset_of(const FiniteRealSet &other) const
    {
        return std::includes(other.begin(), other.end(), begin(), end());
    }

    friend bool operator==(const FiniteRealSet &, const FiniteRealSet &) = default;

private:
    FiniteRealSet() = default;

    std::vector<Rational> m_elements;
};

inline FiniteRealSet make_set(std::vector<Rational> values) { return FiniteRealSet(std::move(values)); }

namespace detail
{

template <typename Op>
FiniteRealSet pairwise_image(const FiniteRealSet &a, const FiniteRealSet &b, Op op)
{
    std::vector<Rational> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(op(x, y));
        }
    }
    return FiniteRealSet(std::move(out));
}

} // namespace detail

/// {a + b : a in A, b in B}
inline FiniteRealSet sumset(const FiniteRealSet &a, const FiniteRealSet &b)
{
    return detail::pairwise_image(a, b, [](const Rational &x, const Rational &y) { return x + y; });
}

/// {a - b : a in A, b in B}
inline FiniteRealSet difference_set(const FiniteRealSet &a, const FiniteRealSet &b)
{
    return detail::pairwise_image(a, b, [](const Rational &x, const Rational &y) { return x - y; });
}

/// {a * b : a in A, b in B}
inline FiniteRealSet product_set(const FiniteRealSet &a, const FiniteRealSet &b)
{
    return detail::pairwise_image(a, b, [](const Rational &x, const Rational &y) { return x * y; });
}

/// Strictly increasing consecutive gaps. Sets with fewer than three elements are vacuously convex.
inline bool is_convex(const FiniteRealSet &a)
{
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (!(a[i + 1] - a[i] > a[i] - a[i - 1])) {
            return false;
        }
    }
    return true;
}

/// x -> scale * x + shift applied elementwise; scale must be nonzero.
inline FiniteRealSet affine_image(const FiniteRealSet &a, const Rational &scale, const Rational &shift)
{
    if (scale.sign() == 0) {
        throw PreconditionError("affine image with zero scale");
    }
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto &x : a) {
        out.push_back(scale * x + shift);
    }
    return FiniteRealSet(std::move(out));
}

inline FiniteRealSet negated(const FiniteRealSet &a) { return affine_image(a, Rational(-1), Rational(0)); }

/// Elements of `a` satisfying `pred`; may be empty.
template <typename Pred>
FiniteRealSet filter(const FiniteRealSet &a, Pred pred)
{
    std::vector<Rational> out;
    for (const auto &x : a) {
        if (pred(x)) {
            out.push_back(x);
        }
    }
    return FiniteRealSet::from_sorted_unique(std::move(out));
}

// ---------------------------------------------------------------------------
// Set file format: one element per line ("n" or "p/q"), '#' comments, blank
// lines skipped, duplicates folded on load.

inline FiniteRealSet read_set(std::istream &in, const std::string &origin = "<stream>")
{
    std::vector<Rational> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        try {
            values.push_back(Rational::parse(line));
        } catch (const ParseError &e) {
            throw ParseError(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (values.empty()) {
        throw ParseError(origin + ": empty set");
    }
    return FiniteRealSet(std::move(values));
}

inline FiniteRealSet load_set(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open set file '" + path + "'");
    }
    return read_set(in, path);
}

inline void write_set(std::ostream &out, const FiniteRealSet &a)
{
    for (const auto &x : a) {
        out << x.to_string() << '\n';
    }
}

inline std::string to_string(const FiniteRealSet &a)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << (i ? "," : "") << a[i];
    }
    os << '}';
    return os.str();
}

} // namespace szt

#endif
