// Runs the additive checks on (A, B) and on (λA + t, λB + s) and lists every
// report whose lhs, rhs or verdict changed.

#ifndef SZT_TESTS_INVARIANCE_HPP
#define SZT_TESTS_INVARIANCE_HPP

#include <string>
#include <vector>

#include "szt/harness.hpp"

namespace invariance
{

using szt::FiniteRealSet;
using szt::InequalityReport;
using szt::Rational;

inline std::vector<InequalityReport> additive_reports(const FiniteRealSet &a, const FiniteRealSet &b, double c)
{
    std::vector<InequalityReport> out;
    auto add = [&](std::vector<InequalityReport> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    add(szt::check_lemma_szt(a, b, c, 2.0));
    out.push_back(szt::check_lemma_szt1(b, a, c, c, 2.0));
    const auto level = szt::level_set(szt::convolve_minus(a, a), 2.0);
    out.push_back(szt::check_lemma_e3(a, level, 2.0, c, 2.0));
    out.push_back(szt::check_dyadic_decomposition(a, level, 2.0));
    out.push_back(szt::check_thm_main(a, c, 2.0));
    add(szt::check_main_eigen_steps(a, true));
    add(szt::check_thm_main_diff(a, b, c, c, 2.0, 1));
    add(szt::check_thm_main_diff(a, b, c, c, 2.0, -1));
    out.push_back(szt::verify_rank_one_lemma(a, b, szt::sumset(a, b), szt::OperatorKind::sum));
    return out;
}

// Sum-product reports that only see |AA|, |A+A| and |A-A|; these survive a pure dilation.
inline std::vector<InequalityReport> dilation_reports(const FiniteRealSet &a)
{
    std::vector<InequalityReport> out;
    for (auto &r : szt::check_convex_map_theorems(a, a, szt::ConvexMap::square)) {
        if (r.statement_id == "thm-lrn-prime-product" || r.statement_id == "cor-product-difference" ||
            r.statement_id == "cor-product-difference-max") {
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<std::string> compare(const std::vector<InequalityReport> &x, const std::vector<InequalityReport> &y)
{
    std::vector<std::string> bad;
    if (x.size() != y.size()) {
        bad.push_back("report count " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
        return bad;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].statement_id != y[i].statement_id || x[i].lhs.log2 != y[i].lhs.log2 || x[i].rhs.log2 != y[i].rhs.log2 ||
            x[i].passed != y[i].passed) {
            bad.push_back(x[i].statement_id);
        }
    }
    return bad;
}

/// Positive elements are needed by the square map, so dilation checks use λ > 0 on positive sets.
inline std::vector<std::string> violations(const FiniteRealSet &a, const FiniteRealSet &b, const Rational &lambda, const Rational &t,
                                           const Rational &s)
{
    const double c = static_cast<double>(a.size());
    auto bad = compare(additive_reports(a, b, c),
                       additive_reports(szt::affine_image(a, lambda, t), szt::affine_image(b, lambda, s), c));
    if (a.min().sign() > 0 && lambda.sign() > 0) {
        for (auto &m : compare(dilation_reports(a), dilation_reports(szt::affine_image(a, lambda, 0)))) {
            bad.push_back("dilation " + m);
        }
    }
    return bad;
}

} // namespace invariance

#endif
