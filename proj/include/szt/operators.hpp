// The eigenvalue-method operators
//   T^g_{A,B}(x, y) = g(x - y) A(x) B(y)    (difference kind)
//   T~^g_{A,B}(x, y) = g(x + y) A(x) B(y)   (sum kind)
// their spectra and singular systems, and checks of the operator lemmas.

#ifndef SZT_OPERATORS_HPP
#define SZT_OPERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "szt/convolution.hpp"
#include "szt/energies.hpp"
#include "szt/error.hpp"
#include "szt/finite_set.hpp"
#include "szt/linalg.hpp"
#include "szt/report.hpp"

namespace szt
{

/// Nonnegative finitely supported weight g : Q -> R.
class WeightFunction
{
public:
    using Entry = std::pair<Rational, double>;

    WeightFunction() = default;

    explicit WeightFunction(std::vector<Entry> entries)
    {
        std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) { return a.first < b.first; });
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!(entries[i].second >= 0.0) || !std::isfinite(entries[i].second)) {
                throw PreconditionError("weight function values must be finite and nonnegative");
            }
            if (i > 0 && entries[i].first == entries[i - 1].first) {
                throw PreconditionError("weight function has a repeated point");
            }
        }
        std::erase_if(entries, [](const Entry &e) { return e.second == 0.0; });
        m_entries = std::move(entries);
        m_lookup.reserve(m_entries.size());
        for (const auto &[x, w] : m_entries) {
            m_lookup.emplace(x, w);
        }
    }

    static WeightFunction indicator(const FiniteRealSet &s)
    {
        std::vector<Entry> e;
        e.reserve(s.size());
        for (const auto &x : s) {
            e.emplace_back(x, 1.0);
        }
        return WeightFunction(std::move(e));
    }

    /// x -> conv(x)^power (power 1 gives the convolution itself).
    static WeightFunction from_counts(const MultiplicityMap &conv, double power = 1.0)
    {
        std::vector<Entry> e;
        e.reserve(conv.size());
        for (const auto &[x, c] : conv) {
            e.emplace_back(x, power == 1.0 ? static_cast<double>(c) : std::pow(static_cast<double>(c), power));
        }
        return WeightFunction(std::move(e));
    }

    static WeightFunction point_mass(const Rational &x, double w = 1.0) { return WeightFunction({{x, w}}); }

    [[nodiscard]] double operator()(const Rational &x) const
    {
        const auto it = m_lookup.find(x);
        return it == m_lookup.end() ? 0.0 : it->second;
    }

    [[nodiscard]] const std::vector<Entry> &entries() const noexcept { return m_entries; }

    /// g(-x) == g(x) everywhere.
    [[nodiscard]] bool is_hermitian() const
    {
        return std::all_of(m_entries.begin(), m_entries.end(), [&](const Entry &e) { return (*this)(-e.first) == e.second; });
    }

    [[nodiscard]] double l2_squared() const
    {
        std::vector<double> sq;
        sq.reserve(m_entries.size());
        for (const auto &e : m_entries) {
            sq.push_back(e.second * e.second);
        }
        std::sort(sq.begin(), sq.end());
        return detail::pairwise_sum(sq);
    }

    [[nodiscard]] double sup() const
    {
        double m = 0.0;
        for (const auto &e : m_entries) {
            m = std::max(m, e.second);
        }
        return m;
    }

private:
    std::vector<Entry> m_entries;
    std::unordered_map<Rational, double, RationalHash> m_lookup;
};

enum class OperatorKind { difference, sum };

inline const char *to_string(OperatorKind k) { return k == OperatorKind::difference ? "difference" : "sum"; }

struct OperatorBudget {
    std::uint64_t dense_entries = 4'000'000;
};

/// Matrix with rows indexed by A and columns by B.
struct DenseOperator {
    FiniteRealSet rows;
    FiniteRealSet cols;
    OperatorKind kind;
    WeightFunction weight;
    Matrix matrix;
};

inline DenseOperator build_operator(const WeightFunction &g, const FiniteRealSet &a, const FiniteRealSet &b, OperatorKind kind,
                                    OperatorBudget budget = {})
{
    const std::uint64_t entries = static_cast<std::uint64_t>(a.size()) * b.size();
    if (entries > budget.dense_entries) {
        throw BudgetError("dense operator", entries, budget.dense_entries);
    }
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            m(i, j) = g(kind == OperatorKind::difference ? a[i] - b[j] : a[i] + b[j]);
        }
    }
    return DenseOperator{a, b, kind, g, std::move(m)};
}

enum class SpectrumKind { eigen, singular };

/// Descending eigenvalues (or singular values) with their unit vectors.
struct SpectrumResult {
    SpectrumKind kind = SpectrumKind::eigen;
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;      // eigenvectors, or right singular vectors v_j
    std::vector<std::vector<double>> left_vectors; // u_j (singular kind only)
};

namespace detail
{

inline Matrix reversed(const Matrix &m)
{
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    Matrix out(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            out(i, j) = m(r - 1 - i, c - 1 - j);
        }
    }
    return out;
}

/// True when index reversal gives the lexicographically smaller family of
/// matrices. Operators of A and of -A differ exactly by reversal, so solving in
/// the chosen orientation gives bit-identical spectra for both.
inline bool prefer_reversed(std::span<const Matrix *const> family)
{
    for (const Matrix *m : family) {
        const auto d = m->data();
        const std::size_t n = d.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double fwd = d[i];
            const double rev = d[n - 1 - i];
            if (rev != fwd) {
                return rev < fwd;
            }
        }
    }
    return false;
}

inline std::vector<double> reversed(std::vector<double> v)
{
    std::reverse(v.begin(), v.end());
    return v;
}

} // namespace detail

/// Full spectrum of a symmetric operator, descending, orthonormal eigenvectors
/// with the first nonzero component positive.
inline SpectrumResult eigen_spectrum(const Matrix &m)
{
    if (!m.is_square() || !m.is_symmetric()) {
        throw PreconditionError("eigen_spectrum requires a square symmetric operator");
    }
    const Matrix *family[] = {&m};
    const bool flip = detail::prefer_reversed(family);
    auto eig = symmetric_eigen(flip ? detail::reversed(m) : m);
    SpectrumResult out;
    out.kind = SpectrumKind::eigen;
    out.values = std::move(eig.values);
    for (auto &v : eig.vectors) {
        if (flip) {
            v = detail::reversed(std::move(v));
            detail::normalize_sign(v);
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

inline SpectrumResult eigen_spectrum(const DenseOperator &op) { return eigen_spectrum(op.matrix); }

/// Singular triples (λ_j, u_j, v_j), λ descending; min(|A|, |B|) of them.
inline SpectrumResult singular_spectrum(const DenseOperator &op)
{
    auto s = svd(op.matrix);
    SpectrumResult out;
    out.kind = SpectrumKind::singular;
    out.values = std::move(s.values);
    out.vectors = std::move(s.right);
    out.left_vectors = std::move(s.left);
    return out;
}

/// <op·a, b> with a a function on the column set and b on the row set.
inline double apply_action(const DenseOperator &op, std::span<const double> a, std::span<const double> b)
{
    if (a.size() != op.cols.size() || b.size() != op.rows.size()) {
        throw PreconditionError("apply_action dimension mismatch");
    }
    return bilinear(op.matrix, a, b);
}

/// The same pairing computed on the group side:
///   difference kind: Σ_z g(z) (a∘b)(z),  (a∘b)(z) = Σ_y a(y) b(y + z)
///   sum kind:        Σ_z g(z) (a*b)(z),  (a*b)(z) = Σ_y a(y) b(z - y)
/// Returns {value, scale} where scale bounds the magnitude of the summands.
inline std::pair<double, double> action_via_convolution(const DenseOperator &op, std::span<const double> a, std::span<const double> b)
{
    if (a.size() != op.cols.size() || b.size() != op.rows.size()) {
        throw PreconditionError("action dimension mismatch");
    }
    std::map<Rational, std::pair<double, double>> conv; // z -> (Σ a b, Σ |a b|)
    for (std::size_t j = 0; j < op.cols.size(); ++j) {
        if (a[j] == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < op.rows.size(); ++i) {
            if (b[i] == 0.0) {
                continue;
            }
            const Rational z = op.kind == OperatorKind::difference ? op.rows[i] - op.cols[j] : op.rows[i] + op.cols[j];
            auto &slot = conv[z];
            slot.first += a[j] * b[i];
            slot.second += std::abs(a[j] * b[i]);
        }
    }
    double value = 0.0;
    double scale = 0.0;
    for (const auto &[z, c] : conv) {
        const double w = op.weight(z);
        value += w * c.first;
        scale += w * c.second;
    }
    return {value, scale};
}

// ---------------------------------------------------------------------------

/// With A - B ⊆ D (difference kind) or A + B ⊆ S (sum kind) the indicator
/// operator has rank one: λ_1 = (|A||B|)^{1/2}, u_1 = A/|A|^{1/2},
/// v_1 = B/|B|^{1/2}, every other singular value zero.
inline InequalityReport verify_rank_one_lemma(const FiniteRealSet &a, const FiniteRealSet &b, const FiniteRealSet &s, OperatorKind kind,
                                              OperatorBudget budget = {})
{
    const FiniteRealSet image = kind == OperatorKind::difference ? difference_set(a, b) : sumset(a, b);
    if (!image.is_subset_of(s)) {
        throw PreconditionError(kind == OperatorKind::difference ? "A - B is not contained in D" : "A + B is not contained in S");
    }
    const auto op = build_operator(WeightFunction::indicator(s), a, b, kind, budget);
    const auto spec = singular_spectrum(op);
    const double expected = std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
    auto report = make_report("lemma-rank-one", Relation::eq, Quantity::of(spec.values.at(0)), Quantity::of(expected), 1.0);

    const double lambda2 = spec.values.size() > 1 ? spec.values[1] : 0.0;
    double u_err = 0.0;
    double v_err = 0.0;
    {
        // Up to a common sign.
        const auto &u = spec.left_vectors[0];
        const auto &v = spec.vectors[0];
        const double su = u[0] >= 0 ? 1.0 : -1.0;
        const double sv = v[0] >= 0 ? 1.0 : -1.0;
        const double ua = 1.0 / std::sqrt(static_cast<double>(a.size()));
        const double vb = 1.0 / std::sqrt(static_cast<double>(b.size()));
        for (const double x : u) {
            u_err = std::max(u_err, std::abs(su * x - ua));
        }
        for (const double x : v) {
            v_err = std::max(v_err, std::abs(sv * x - vb));
        }
    }
    const bool rank_one = lambda2 <= 1e-9 * spec.values[0];
    report.passed = report.passed && rank_one && u_err <= 1e-8 && v_err <= 1e-8;
    report.instance = {{"A_size", a.size()}, {"B_size", b.size()}, {"S_size", s.size()}, {"kind", to_string(kind)}};
    report.details = {{"lambda_1", spec.values[0]}, {"lambda_2", lambda2}, {"u1_max_error", u_err}, {"v1_max_error", v_err}};
    return report;
}

/// <T^{A∘A}_A f_1, f_1> >= μ_1^3 / (‖g‖_2^2 ‖g‖_∞) for the main eigenpair
/// (μ_1, f_1) of T^g_A (difference kind) or T~^g_A (sum kind).
inline InequalityReport verify_action_g_bound(const FiniteRealSet &a, const WeightFunction &g, OperatorKind kind,
                                              double assert_constant = 1.0, OperatorBudget budget = {})
{
    if (kind == OperatorKind::difference && !g.is_hermitian()) {
        throw PreconditionError("difference-kind operator needs g(-x) = g(x)");
    }
    auto g_op = build_operator(g, a, a, kind, budget);
    auto corr_op = build_operator(WeightFunction::from_counts(convolve_minus(a, a)), a, a, OperatorKind::difference, budget);

    const Matrix *family[] = {&g_op.matrix, &corr_op.matrix};
    const bool flip = detail::prefer_reversed(family);
    const Matrix gm = flip ? detail::reversed(g_op.matrix) : g_op.matrix;
    const Matrix cm = flip ? detail::reversed(corr_op.matrix) : corr_op.matrix;

    const auto eig = symmetric_eigen(gm);
    const double mu1 = eig.values.at(0);
    const auto &f1 = eig.vectors.at(0);
    const double lhs = bilinear(cm, f1, f1);
    const double g2 = g.l2_squared();
    const double ginf = g.sup();
    const Quantity rhs = Quantity::of(mu1).pow(3) / Quantity::of(g2 * ginf);

    auto report = make_report("lemma-action-g", Relation::ge, Quantity::of(lhs), rhs, assert_constant);
    report.instance = {{"A_size", a.size()}, {"kind", to_string(kind)}, {"g_support", g.entries().size()}};
    report.details = {{"mu_1", mu1}, {"g_l2_squared", g2}, {"g_sup", ginf}};
    return report;
}

// ---------------------------------------------------------------------------

/// CSV dump: header row of column labels, then one row per matrix row led by its label.
inline void write_operator_csv(std::ostream &os, const DenseOperator &op)
{
    os << "row";
    for (const auto &y : op.cols) {
        os << ',' << y;
    }
    os << '\n';
    for (std::size_t i = 0; i < op.rows.size(); ++i) {
        os << op.rows[i];
        for (std::size_t j = 0; j < op.cols.size(); ++j) {
            os << ',' << format_double(op.matrix(i, j));
        }
        os << '\n';
    }
}

inline void write_spectrum_csv(std::ostream &os, const SpectrumResult &s, const FiniteRealSet &index)
{
    os << "j,value";
    for (const auto &x : index) {
        os << ',' << x;
    }
    os << '\n';
    for (std::size_t j = 0; j < s.values.size(); ++j) {
        os << j + 1 << ',' << format_double(s.values[j]);
        for (const double c : s.vectors[j]) {
            os << ',' << format_double(c);
        }
        os << '\n';
    }
}

} // namespace szt

#endif
