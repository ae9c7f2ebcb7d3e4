// Instantiations of the lemma and theorem inequalities on concrete sets.
//
// Every check returns InequalityReports. Exact quantities (cardinalities,
// integer energies) feed the left-hand sides; right-hand sides are evaluated in
// the log2 domain. A violated hypothesis throws PreconditionError and is never
// reported as a failed inequality.

#ifndef SZT_HARNESS_HPP
#define SZT_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "szt/convolution.hpp"
#include "szt/energies.hpp"
#include "szt/error.hpp"
#include "szt/families.hpp"
#include "szt/finite_set.hpp"
#include "szt/linalg.hpp"
#include "szt/operators.hpp"
#include "szt/report.hpp"

namespace szt
{

struct CheckContext {
    std::map<std::string, double> assert_constants; // by statement id; missing ids use 1
    OperatorBudget operator_budget;
    double ratio_guard_low = 0.5; // c_1 <= |C|/|A| <= c_2
    double ratio_guard_high = 2.0;

    [[nodiscard]] double constant(const std::string &id) const
    {
        const auto it = assert_constants.find(id);
        return it == assert_constants.end() ? 1.0 : it->second;
    }
};

namespace detail
{

class Stopwatch
{
public:
    Stopwatch() : m_start(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - m_start).count();
    }

private:
    std::chrono::steady_clock::time_point m_start;
};

inline void stamp(std::vector<InequalityReport> &rs, const Stopwatch &sw)
{
    const double t = sw.ms();
    for (auto &r : rs) {
        r.runtime_ms = t;
    }
}

inline void require_size(const FiniteRealSet &s, const char *what, std::size_t min_size = 4)
{
    if (s.size() < min_size) {
        throw PreconditionError(std::string(what) + " needs |" + what + "| >= " + std::to_string(min_size) + ", got " +
                                std::to_string(s.size()));
    }
}

inline Quantity card(std::size_t n) { return Quantity::of(static_cast<double>(n)); }
inline Quantity card(const FiniteRealSet &s) { return card(s.size()); }
inline Quantity qty(const EnergyValue &e) { return Quantity::from_log2(e.log2()); }
inline Quantity log2_size(const FiniteRealSet &s) { return Quantity::of(std::log2(static_cast<double>(s.size()))); }

inline std::string exact_string(const EnergyValue &e) { return e.exact ? e.exact->get_str() : format_double(e.approx); }

/// Multiplier for constants hidden as "<<_{(alpha-1)^{-1}}".
inline double alpha_penalty(double alpha) { return alpha < 2.0 ? std::max(1.0, 1.0 / (alpha - 1.0)) : 1.0; }

inline FiniteRealSet signed_sumset(const FiniteRealSet &a, const FiniteRealSet &b, int sign)
{
    if (sign != 1 && sign != -1) {
        throw PreconditionError("sign must be +1 or -1");
    }
    return sign > 0 ? sumset(a, b) : difference_set(a, b);
}

} // namespace detail

// ---------------------------------------------------------------------------

/// E_3(A) << c|A|^α log|A|;  E(A)^3 << E_{3/2}(A)^2 c|A|^α;  E(A,B) << (c|B|^α |A||B|)^{1/2}.
inline std::vector<InequalityReport> check_lemma_szt(const FiniteRealSet &a, const FiniteRealSet &b, double c, double alpha,
                                                     const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    detail::require_size(a, "A");
    if (b.is_empty()) {
        throw PreconditionError("B must be nonempty");
    }
    using detail::card;
    const Quantity qc = Quantity::of(c);
    const Quantity L = detail::log2_size(a);
    const Quantity ca = qc * card(a).pow(alpha); // c(A,A)
    const Quantity cb = qc * card(b).pow(alpha); // c(A,B)

    const auto e3 = energy_k(a, 3);
    const auto e2 = energy_k(a, 2);
    const auto e32 = energy_fractional(a, 1.5);
    const auto eab = mixed_energy(a, a, b, b);

    const json inst = {{"A_size", a.size()}, {"B_size", b.size()}, {"alpha", alpha}, {"c", c}};
    std::vector<InequalityReport> out;
    out.push_back(make_report("lemma-szt-e3", Relation::le, detail::qty(e3), ca * L, ctx.constant("lemma-szt-e3")));
    out.back().details = {{"E3", detail::exact_string(e3)}};
    out.push_back(make_report("lemma-szt-energy-cubed", Relation::le, detail::qty(e2).pow(3), detail::qty(e32).pow(2) * ca,
                              ctx.constant("lemma-szt-energy-cubed")));
    out.back().details = {{"E", detail::exact_string(e2)}, {"E_3/2", e32.approx}};
    out.push_back(make_report("lemma-szt-mixed", Relation::le, detail::qty(eab), (cb * card(a) * card(b)).pow(0.5L),
                              ctx.constant("lemma-szt-mixed")));
    out.back().details = {{"E(A,B)", detail::exact_string(eab)}};
    for (auto &r : out) {
        r.instance = inst;
    }
    detail::stamp(out, sw);
    return out;
}

/// E(A_*,A)^{2α-1} << W^{2α-2} c^{1/3} c_*^{α/3} |A|^{2/3} |A_*|^{α²/3},
/// W = Σ_x (A_*∘A_*)^{1/2}(x) (A∘A)(x). The implied constant is allowed to grow like 1/(α-1).
inline InequalityReport check_lemma_szt1(const FiniteRealSet &a_star, const FiniteRealSet &a, double c, double c_star, double alpha,
                                         const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    if (!(alpha > 1.0)) {
        throw PreconditionError("lemma-szt1 needs alpha > 1");
    }
    detail::require_size(a_star, "A_*");
    detail::require_size(a, "A");
    using detail::card;
    const auto e = mixed_energy(a_star, a_star, a, a);
    const auto w = weighted_corr(a_star, a, 0.5, 1.0);
    const long double al = alpha;
    const Quantity lhs = detail::qty(e).pow(2 * al - 1);
    const Quantity rhs = detail::qty(w).pow(2 * al - 2) * Quantity::of(c).pow(1.0L / 3) * Quantity::of(c_star).pow(al / 3) *
                         card(a).pow(2.0L / 3) * card(a_star).pow(al * al / 3);
    const double constant = ctx.constant("lemma-szt1") * detail::alpha_penalty(alpha);
    auto r = make_report("lemma-szt1", Relation::le, lhs, rhs, constant);
    r.instance = {{"A_size", a.size()}, {"A_star_size", a_star.size()}, {"alpha", alpha}, {"c", c}, {"c_star", c_star}};
    r.details = {{"E(A_*,A)", detail::exact_string(e)}, {"W", w.approx}};
    r.runtime_ms = sw.ms();
    return r;
}

namespace detail
{

/// B ⊆ {x : (A∘A)(x) >= Δ} or B ⊆ {x : (A*A)(x) >= Δ}; returns which one held.
inline std::string require_level_containment(const FiniteRealSet &a, const FiniteRealSet &b, double delta)
{
    if (b.is_subset_of(level_set(convolve_minus(a, a), delta))) {
        return "difference";
    }
    if (b.is_subset_of(level_set(convolve_plus(a, a), delta))) {
        return "sum";
    }
    throw PreconditionError("B is not contained in a level set {x : (A∘A)(x) >= Δ} or {x : (A*A)(x) >= Δ}");
}

} // namespace detail

/// E_3(A,A,B) << Δ^{-4/(3α-1)} c^{(5α+1)/(2(3α-1))} |A|^{(2α²+5α-1)/(2(3α-1))} |B|^{3(α²-1)/(2(3α-1))} log|A|.
inline InequalityReport check_lemma_e3(const FiniteRealSet &a, const FiniteRealSet &b, double delta, double c, double alpha,
                                       const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    if (!(delta >= 1.0)) {
        throw PreconditionError("lemma-e3 needs Delta >= 1");
    }
    detail::require_size(a, "A");
    if (b.is_empty()) {
        throw PreconditionError("B must be nonempty");
    }
    const std::string level = detail::require_level_containment(a, b, delta);
    using detail::card;
    const auto e = energy_k({a, a, b});
    const long double al = alpha;
    const long double den = 3 * al - 1;
    const Quantity rhs = Quantity::of(delta).pow(-4 / den) * Quantity::of(c).pow((5 * al + 1) / (2 * den)) *
                         card(a).pow((2 * al * al + 5 * al - 1) / (2 * den)) * card(b).pow(3 * (al * al - 1) / (2 * den)) *
                         detail::log2_size(a);
    auto r = make_report("lemma-e3", Relation::le, detail::qty(e), rhs, ctx.constant("lemma-e3"));
    r.instance = {{"A_size", a.size()}, {"B_size", b.size()}, {"Delta", delta}, {"alpha", alpha}, {"c", c}, {"level", level}};
    r.details = {{"E3(A,A,B)", detail::exact_string(e)}};
    r.runtime_ms = sw.ms();
    return r;
}

/// Dyadic classes Q_j = {x : 2^j <= (A∘A)(x) < 2^{j+1}} partition E_3(A,A,B)
/// exactly, and the heaviest class carries at least 1/⌈log2|A| + 1⌉ of it.
inline InequalityReport check_dyadic_decomposition(const FiniteRealSet &a, const FiniteRealSet &b, double delta = 1.0,
                                                   const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    if (a.is_empty() || b.is_empty()) {
        throw PreconditionError("dyadic decomposition needs nonempty A and B");
    }
    if (!(delta >= 1.0)) {
        throw PreconditionError("dyadic decomposition needs Delta >= 1");
    }
    detail::require_level_containment(a, b, delta);

    const auto jc = detail::joint_difference_counts({{a, a}, {b, b}});
    std::map<int, std::pair<std::size_t, mpz_class>> classes; // j -> (|Q_j ∩ supp|, Σ)
    for (std::size_t i = 0; i < jc.points(); ++i) {
        const std::uint64_t r = jc.counts[0][i];
        int j = 0;
        while ((std::uint64_t{2} << j) <= r) {
            ++j;
        }
        mpz_class term(static_cast<unsigned long>(r));
        term *= static_cast<unsigned long>(r);
        term *= static_cast<unsigned long>(jc.counts[1][i]);
        auto &slot = classes[j];
        slot.first += 1;
        slot.second += term;
    }
    mpz_class total = 0;
    mpz_class heaviest = 0;
    int witness = -1;
    json class_list = json::array();
    for (const auto &[j, slot] : classes) {
        total += slot.second;
        if (slot.second > heaviest) {
            heaviest = slot.second;
            witness = j;
        }
        class_list.push_back({{"j", j}, {"points", slot.first}, {"sum", slot.second.get_str()}});
    }
    const auto e3 = energy_k({a, a, b});
    const bool identity = e3.exact && *e3.exact == total;
    const double classes_bound = std::ceil(std::log2(static_cast<double>(a.size())) + 1.0);

    auto r = make_report("dyadic-decomposition", Relation::ge, Quantity::from_log2(log2_of(heaviest)),
                         Quantity::from_log2(log2_of(total)) / Quantity::of(classes_bound), ctx.constant("dyadic-decomposition"));
    r.passed = r.passed && identity;
    r.instance = {{"A_size", a.size()}, {"B_size", b.size()}, {"Delta", delta}};
    r.details = {{"E3(A,A,B)", detail::exact_string(e3)},
                 {"class_total", total.get_str()},
                 {"identity_holds", identity},
                 {"witness_class", witness},
                 {"classes", class_list},
                 {"class_count_bound", classes_bound}};
    r.runtime_ms = sw.ms();
    return r;
}

/// |A+A| >> c^{(1-11α)/D} |A|^{(-8α²+57α-3)/D} (log|A|)^{-4(3α-1)/D}, D = 3α²+12α+1.
inline InequalityReport check_thm_main(const FiniteRealSet &a, double c, double alpha, const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    detail::require_size(a, "A");
    using detail::card;
    const long double al = alpha;
    const long double d = 3 * al * al + 12 * al + 1;
    const auto ss = sumset(a, a);
    const Quantity rhs = Quantity::of(c).pow((1 - 11 * al) / d) * card(a).pow((-8 * al * al + 57 * al - 3) / d) *
                         detail::log2_size(a).pow(-4 * (3 * al - 1) / d);
    auto r = make_report("thm-main", Relation::ge, card(ss), rhs, ctx.constant("thm-main"));
    r.instance = {{"A_size", a.size()}, {"alpha", alpha}, {"c", c}};
    r.details = {{"sumset_size", ss.size()}};
    r.runtime_ms = sw.ms();
    return r;
}

namespace detail
{

inline Matrix reversed_if(const Matrix &m, bool flip) { return flip ? reversed(m) : m; }

} // namespace detail

/// The eigenvalue steps behind the main theorem, with S = A+A, d = |S|,
/// S_1 = {z ∈ S : (A*A)(z) >= a²/(2d)} and (μ_j, f_j) the spectrum of T~^{S_1}_A:
///   thm-main-mu1                 μ_1 >= a/2
///   lemma-action-g               <T^{A∘A}_A f_1, f_1> >= μ_1^3 / |S_1|
///   proof-chain-sigma-lower      σ >= μ_1² <T^{A∘A}_A f_1, f_1>      (only when with_sigma)
///   proof-chain-cauchy-schwarz   σ² <= E_3(A) E_3(A,A,S_1)          (only when with_sigma)
/// σ = Σ_{x,y,z ∈ A} (A∘A)(x-y) S_1(x+z) S_1(y+z) is computed exactly and also as Σ_j μ_j² <T f_j, f_j>.
inline std::vector<InequalityReport> check_main_eigen_steps(const FiniteRealSet &a, bool with_sigma, const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    detail::require_size(a, "A");
    using detail::card;
    const std::size_t n = a.size();
    const auto conv_plus = convolve_plus(a, a);
    const std::size_t d = conv_plus.size();
    const Rational threshold = Rational(mpz_class(static_cast<unsigned long>(n * n)), mpz_class(static_cast<unsigned long>(2 * d)));
    const auto s1 = level_set(conv_plus, threshold);

    const auto g = WeightFunction::indicator(s1);
    const auto s1_op = build_operator(g, a, a, OperatorKind::sum, ctx.operator_budget);
    const auto corr_op =
        build_operator(WeightFunction::from_counts(convolve_minus(a, a)), a, a, OperatorKind::difference, ctx.operator_budget);
    const Matrix *family[] = {&s1_op.matrix, &corr_op.matrix};
    const bool flip = detail::prefer_reversed(family);
    const Matrix sm = detail::reversed_if(s1_op.matrix, flip);
    const Matrix cm = detail::reversed_if(corr_op.matrix, flip);

    const auto eig = symmetric_eigen(sm);
    const double mu1 = eig.values.at(0);
    const double form1 = bilinear(cm, eig.vectors[0], eig.vectors[0]);

    const json inst = {{"A_size", n}, {"S_size", d}, {"S1_size", s1.size()}};
    std::vector<InequalityReport> out;
    out.push_back(make_report("thm-main-mu1", Relation::ge, Quantity::of(mu1), card(n) / Quantity::of(2.0),
                              ctx.constant("thm-main-mu1")));
    out.back().details = {{"mu_1", mu1}};
    out.push_back(verify_action_g_bound(a, g, OperatorKind::sum, ctx.constant("lemma-action-g"), ctx.operator_budget));
    out.back().details["g"] = "S1";

    if (with_sigma) {
        // exact σ = Σ_{x,y} T(x,y) · #{z : x+z ∈ S_1, y+z ∈ S_1}
        mpz_class sigma = 0;
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const double t = corr_op.matrix(x, y);
                if (t == 0.0) {
                    continue;
                }
                unsigned long common = 0;
                for (std::size_t z = 0; z < n; ++z) {
                    if (s1_op.matrix(x, z) != 0.0 && s1_op.matrix(y, z) != 0.0) {
                        ++common;
                    }
                }
                sigma += mpz_class(static_cast<unsigned long>(t)) * common;
            }
        }
        std::vector<double> terms;
        for (std::size_t j = 0; j < n; ++j) {
            terms.push_back(eig.values[j] * eig.values[j] * bilinear(cm, eig.vectors[j], eig.vectors[j]));
        }
        const double sigma_spectral = detail::pairwise_sum(terms);
        const double sigma_exact = sigma.get_d();
        const double spectral_error = std::abs(sigma_spectral - sigma_exact) / std::max(1.0, sigma_exact);

        out.push_back(make_report("proof-chain-sigma-lower", Relation::ge, Quantity::from_log2(log2_of(sigma)),
                                  Quantity::of(mu1).pow(2) * Quantity::of(form1), ctx.constant("proof-chain-sigma-lower")));
        out.back().passed = out.back().passed && spectral_error <= 1e-9;
        out.back().details = {{"sigma", sigma.get_str()}, {"sigma_spectral", sigma_spectral}, {"spectral_relative_error", spectral_error}};

        const auto e3 = energy_k(a, 3);
        const auto e3s = energy_k({a, a, s1});
        out.push_back(make_report("proof-chain-cauchy-schwarz", Relation::le, Quantity::from_log2(2 * log2_of(sigma)),
                                  detail::qty(e3) * detail::qty(e3s), ctx.constant("proof-chain-cauchy-schwarz")));
        out.back().details = {{"sigma", sigma.get_str()}, {"E3(A)", detail::exact_string(e3)}, {"E3(A,A,S1)", detail::exact_string(e3s)}};
    }
    for (auto &r : out) {
        r.instance = inst;
    }
    detail::stamp(out, sw);
    return out;
}

// ---------------------------------------------------------------------------

namespace detail
{

struct DiffSides {
    long double la; // log2 |A|
    long double ls; // log2 |A_*|
    long double lc; // log2 c(A)
    long double lcs;
    long double lL; // log2 log2(|A||A_*|)
};

inline Quantity main_diff_general_branch(const DiffSides &s, long double al, bool swap)
{
    const long double den = 3 * (7 + al);
    const long double la = swap ? s.ls : s.la;
    const long double ls = swap ? s.la : s.ls;
    const long double lc = swap ? s.lcs : s.lc;
    const long double lcs = swap ? s.lc : s.lcs;
    return Quantity::from_log2(-2 / den * lcs - 13 / den * lc + 2 * (24 - al) / den * ls + (33 - 10 * al) / den * la);
}

inline Quantity main_diff_new_branch(const DiffSides &s, long double al, bool swap)
{
    const long double den = 3 * (al * al + 4 * al - 3);
    const long double la = swap ? s.ls : s.la;
    const long double ls = swap ? s.la : s.ls;
    const long double lc = swap ? s.lcs : s.lc;
    const long double lcs = swap ? s.lc : s.lcs;
    return Quantity::from_log2(-(4 * al - 2) / den * lc - (7 * al - 5) / den * lcs + (28 * al - 4 * al * al - 16) / den * la +
                               (35 * al - 4 * al * al - 21) / den * ls);
}

inline Quantity qmax(Quantity x, Quantity y) { return x.log2 >= y.log2 ? x : y; }
inline Quantity qmin(Quantity x, Quantity y) { return x.log2 <= y.log2 ? x : y; }

} // namespace detail

/// Bounds for |A ± A_*|:
///   thm-main-diff-general  min of the two (7+α) branches · L^{-2/(7+α)}
///   thm-main-diff-new      α > 1 branch, constant allowed to grow like 1/(α-1)
///   thm-main-diff-alpha2   α = 2 display: max{new(A,A_*), new(A_*,A), min{general}} · L^{-2/9}
///   thm-main-diff-mixed    |A±A_*|^{(α+1)/2} |A-A| vs |A|^{(33-4α)/6} |A_*|^{(6-α)/3} c^{-7/6} c_*^{-1/3} L^{-1}
///   cor-convex-diff        when both sets are convex (either orientation)
/// with L = log2(|A||A_*|).
inline std::vector<InequalityReport> check_thm_main_diff(const FiniteRealSet &a, const FiniteRealSet &a_star, double c, double c_star,
                                                         double alpha, int sign, const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    detail::require_size(a, "A");
    detail::require_size(a_star, "A_*");
    if (!(alpha > 1.0)) {
        throw PreconditionError("thm-main-diff new branch needs alpha > 1");
    }
    using detail::card;
    const auto s = detail::signed_sumset(a, a_star, sign);
    const auto dd = difference_set(a, a);
    const long double al = alpha;
    const long double log_prod = std::log2(static_cast<long double>(a.size())) + std::log2(static_cast<long double>(a_star.size()));
    const detail::DiffSides sides{std::log2(static_cast<long double>(a.size())), std::log2(static_cast<long double>(a_star.size())),
                                  std::log2(static_cast<long double>(c)), std::log2(static_cast<long double>(c_star)),
                                  std::log2(log_prod)};
    const Quantity L = Quantity::from_log2(sides.lL);
    const Quantity lhs = card(s);

    std::vector<InequalityReport> out;
    const Quantity general =
        detail::qmin(detail::main_diff_general_branch(sides, al, false), detail::main_diff_general_branch(sides, al, true)) *
        L.pow(-2 / (7 + al));
    out.push_back(make_report("thm-main-diff-general", Relation::ge, lhs, general, ctx.constant("thm-main-diff-general")));

    const Quantity fresh = detail::main_diff_new_branch(sides, al, false) * L.pow(-2 * (al - 1) / (al * al + 4 * al - 3));
    out.push_back(make_report("thm-main-diff-new", Relation::ge, lhs, fresh,
                              ctx.constant("thm-main-diff-new") * detail::alpha_penalty(alpha)));

    if (alpha == 2.0) {
        const Quantity best = detail::qmax(detail::qmax(detail::main_diff_new_branch(sides, 2, false), detail::main_diff_new_branch(sides, 2, true)),
                                           detail::qmin(detail::main_diff_general_branch(sides, 2, false),
                                                        detail::main_diff_general_branch(sides, 2, true))) *
                              L.pow(-2.0L / 9);
        out.push_back(make_report("thm-main-diff-alpha2", Relation::ge, lhs, best, ctx.constant("thm-main-diff-alpha2")));
    }

    const Quantity mixed_rhs = card(a).pow((33 - 4 * al) / 6) * card(a_star).pow((6 - al) / 3) * Quantity::of(c).pow(-7.0L / 6) *
                               Quantity::of(c_star).pow(-1.0L / 3) / L;
    out.push_back(make_report("thm-main-diff-mixed", Relation::ge, lhs.pow((al + 1) / 2) * card(dd), mixed_rhs,
                              ctx.constant("thm-main-diff-mixed")));

    const auto convex_either = [](const FiniteRealSet &x) { return is_convex(x) || is_convex(negated(x)); };
    if (convex_either(a) && convex_either(a_star)) {
        const Quantity cor = detail::qmax(card(a).pow(8.0L / 9) * card(a_star).pow(2.0L / 3), card(a_star).pow(8.0L / 9) * card(a).pow(2.0L / 3)) *
                             L.pow(-2.0L / 9);
        out.push_back(make_report("cor-convex-diff", Relation::ge, lhs, cor, ctx.constant("cor-convex-diff")));
    }

    const json inst = {{"A_size", a.size()}, {"A_star_size", a_star.size()}, {"alpha", alpha}, {"c", c}, {"c_star", c_star},
                       {"sign", sign > 0 ? "+" : "-"}};
    for (auto &r : out) {
        r.instance = inst;
        r.details = {{"sumset_size", s.size()}, {"difference_set_size", dd.size()}};
    }
    detail::stamp(out, sw);
    return out;
}

/// Sum-product bounds through a convex map f (C given, |C|/|A| within the ratio guard):
///   thm-lrn-prime                |f(A)+C|^42 |A+A|^37 >> |A|^100 L^-20
///   thm-lrn-prime-max            max{|f(A)+f(A)|, |A+A|} >> |A|^{100/79} L^{-20/79}
///   thm-lrn-prime-product        |AA|^42 |A+A|^37 >> |A|^100 L^-20
///   cor-sum-image                |A+f(A)| >> |A|^{24/19} L^{-2/19}
///   cor-product-difference       |AA|^6 |A-A|^5 >> |A|^14 L^-2
///   cor-product-difference-max   max{|AA|, |A-A|} >> |A|^{14/11} L^{-2/11}
/// with L = log2|A|.
inline std::vector<InequalityReport> check_convex_map_theorems(const FiniteRealSet &a, const FiniteRealSet &c, ConvexMap map,
                                                               const CheckContext &ctx = {})
{
    detail::Stopwatch sw;
    detail::require_size(a, "A");
    const double ratio = static_cast<double>(c.size()) / static_cast<double>(a.size());
    if (ratio < ctx.ratio_guard_low || ratio > ctx.ratio_guard_high) {
        throw PreconditionError("|C|/|A| = " + format_double(ratio) + " outside the size-ratio guard [" +
                                format_double(ctx.ratio_guard_low) + ", " + format_double(ctx.ratio_guard_high) + "]");
    }
    using detail::card;
    const auto fa = apply_convex_map(a, map);
    const std::size_t fa_c = sumset(fa, c).size();
    const std::size_t fa_fa = sumset(fa, fa).size();
    const std::size_t a_a = sumset(a, a).size();
    const std::size_t aa = product_set(a, a).size();
    const std::size_t a_fa = sumset(a, fa).size();
    const std::size_t a_minus_a = difference_set(a, a).size();
    const Quantity L = detail::log2_size(a);
    const Quantity n = card(a);

    std::vector<InequalityReport> out;
    out.push_back(make_report("thm-lrn-prime", Relation::ge, card(fa_c).pow(42) * card(a_a).pow(37), n.pow(100) * L.pow(-20),
                              ctx.constant("thm-lrn-prime")));
    out.push_back(make_report("thm-lrn-prime-max", Relation::ge, card(std::max(fa_fa, a_a)), n.pow(100.0L / 79) * L.pow(-20.0L / 79),
                              ctx.constant("thm-lrn-prime-max")));
    out.push_back(make_report("thm-lrn-prime-product", Relation::ge, card(aa).pow(42) * card(a_a).pow(37), n.pow(100) * L.pow(-20),
                              ctx.constant("thm-lrn-prime-product")));
    out.push_back(make_report("cor-sum-image", Relation::ge, card(a_fa), n.pow(24.0L / 19) * L.pow(-2.0L / 19),
                              ctx.constant("cor-sum-image")));
    out.push_back(make_report("cor-product-difference", Relation::ge, card(aa).pow(6) * card(a_minus_a).pow(5), n.pow(14) * L.pow(-2),
                              ctx.constant("cor-product-difference")));
    out.push_back(make_report("cor-product-difference-max", Relation::ge, card(std::max(aa, a_minus_a)),
                              n.pow(14.0L / 11) * L.pow(-2.0L / 11), ctx.constant("cor-product-difference-max")));

    const json inst = {{"A_size", a.size()}, {"C_size", c.size()}, {"map", to_string(map)}};
    const json details = {{"f(A)+C", fa_c}, {"f(A)+f(A)", fa_fa}, {"A+A", a_a},         {"AA", aa},
                          {"A+f(A)", a_fa}, {"A-A", a_minus_a}};
    for (auto &r : out) {
        r.instance = inst;
        r.details = details;
    }
    detail::stamp(out, sw);
    return out;
}

} // namespace szt

#endif
