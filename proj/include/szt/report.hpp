// Per-instance inequality records and their JSON/CSV encodings.

#ifndef SZT_REPORT_HPP
#define SZT_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace szt
{

using json = nlohmann::json;

/// A positive quantity kept in the log2 domain so that products such as
/// |AA|^42 |A+A|^37 never overflow; `value` is the plain double when finite.
struct Quantity {
    long double log2 = -std::numeric_limits<long double>::infinity();

    static Quantity of(double v)
    {
        Quantity q;
        q.log2 = v > 0 ? std::log2(static_cast<long double>(v)) : -std::numeric_limits<long double>::infinity();
        return q;
    }
    static Quantity from_log2(long double l)
    {
        Quantity q;
        q.log2 = l;
        return q;
    }
    [[nodiscard]] double value() const
    {
        return static_cast<double>(std::exp2(log2));
    }
    Quantity pow(long double e) const { return from_log2(log2 * e); }
    friend Quantity operator*(Quantity a, Quantity b) { return from_log2(a.log2 + b.log2); }
    friend Quantity operator/(Quantity a, Quantity b) { return from_log2(a.log2 - b.log2); }
};

/// lhs <= C·rhs (le), lhs >= rhs / C (ge), or lhs == rhs within tolerance (eq).
enum class Relation { le, ge, eq };

inline const char *to_string(Relation r)
{
    switch (r) {
    case Relation::le:
        return "le";
    case Relation::ge:
        return "ge";
    case Relation::eq:
        return "eq";
    }
    return "?";
}

inline constexpr double kComparisonTolerance = 1e-9;

struct InequalityReport {
    std::string statement_id;
    json instance = json::object();
    Relation relation = Relation::le;
    Quantity lhs;
    Quantity rhs; // without the implied constant
    double assert_constant = 1.0;
    bool diagnostic = false; // recorded, never asserted
    bool passed = false;
    double runtime_ms = 0.0;
    json details = json::object();

    /// Smallest constant making the relation hold on this instance.
    [[nodiscard]] long double log2_effective_constant() const
    {
        switch (relation) {
        case Relation::le:
        case Relation::eq:
            return lhs.log2 - rhs.log2;
        case Relation::ge:
            return rhs.log2 - lhs.log2;
        }
        return 0;
    }
    [[nodiscard]] double effective_constant() const { return static_cast<double>(std::exp2(log2_effective_constant())); }

    /// The ratio lhs/rhs, regardless of direction.
    [[nodiscard]] double ratio() const { return static_cast<double>(std::exp2(lhs.log2 - rhs.log2)); }
};

/// Builds a report and decides pass/fail: the effective constant must not
/// exceed assert_constant·(1 + 1e-9). For eq, |lhs/rhs - 1| <= tolerance.
inline InequalityReport make_report(std::string id, Relation rel, Quantity lhs, Quantity rhs, double assert_constant,
                                    double eq_tolerance = kComparisonTolerance)
{
    InequalityReport r;
    r.statement_id = std::move(id);
    r.relation = rel;
    r.lhs = lhs;
    r.rhs = rhs;
    r.assert_constant = assert_constant;
    if (rel == Relation::eq) {
        r.passed = std::abs(r.ratio() - 1.0) <= eq_tolerance;
    } else {
        const long double bound = std::log2(static_cast<long double>(assert_constant)) +
                                  std::log2(1.0L + static_cast<long double>(kComparisonTolerance));
        r.passed = r.log2_effective_constant() <= bound;
    }
    return r;
}

namespace detail
{

inline json finite_or_null(double v)
{
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

inline json finite_or_null(long double v) { return finite_or_null(static_cast<double>(v)); }

} // namespace detail

inline json to_json(const InequalityReport &r, bool with_timing = false)
{
    json j;
    j["statement_id"] = r.statement_id;
    j["instance"] = r.instance;
    j["relation"] = to_string(r.relation);
    j["lhs"] = detail::finite_or_null(r.lhs.value());
    j["rhs_without_constant"] = detail::finite_or_null(r.rhs.value());
    j["log2_lhs"] = detail::finite_or_null(r.lhs.log2);
    j["log2_rhs"] = detail::finite_or_null(r.rhs.log2);
    j["effective_constant"] = detail::finite_or_null(r.effective_constant());
    j["log2_effective_constant"] = detail::finite_or_null(r.log2_effective_constant());
    j["assert_constant"] = r.assert_constant;
    j["diagnostic"] = r.diagnostic;
    j["passed"] = r.passed;
    j["details"] = r.details;
    if (with_timing) {
        j["runtime_ms"] = r.runtime_ms;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Canonical JSON: keys sorted (nlohmann's default object is ordered), floats
// with 17 significant digits, so equal reports serialize byte-identically.

inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

namespace detail
{

inline void dump_canonical(std::ostream &os, const json &j, int indent, int depth)
{
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    const char *nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << '{' << nl;
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) {
                os << ',' << nl;
            }
            first = false;
            os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
            dump_canonical(os, it.value(), indent, depth + 1);
        }
        os << nl << close_pad << '}';
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        os << '[' << nl;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) {
                os << ',' << nl;
            }
            os << pad;
            dump_canonical(os, j[i], indent, depth + 1);
        }
        os << nl << close_pad << ']';
        return;
    }
    case json::value_t::number_float:
        os << format_double(j.get<double>());
        return;
    default:
        os << j.dump();
        return;
    }
}

} // namespace detail

inline std::string dump_canonical(const json &j, int indent = 2)
{
    std::ostringstream os;
    detail::dump_canonical(os, j, indent, 0);
    return os.str();
}

// ---------------------------------------------------------------------------

inline std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

inline std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : ""; }

inline constexpr const char *kReportCsvHeader =
    "statement_id,instance,relation,lhs,rhs_without_constant,log2_lhs,log2_rhs,effective_constant,assert_constant,diagnostic,passed";

inline std::string to_csv_row(const InequalityReport &r)
{
    std::ostringstream os;
    os << csv_escape(r.statement_id) << ',' << csv_escape(r.instance.dump()) << ',' << to_string(r.relation) << ','
       << csv_number(r.lhs.value()) << ',' << csv_number(r.rhs.value()) << ',' << csv_number(static_cast<double>(r.lhs.log2))
       << ',' << csv_number(static_cast<double>(r.rhs.log2)) << ',' << csv_number(r.effective_constant()) << ','
       << csv_number(r.assert_constant) << ',' << (r.diagnostic ? "true" : "false") << ',' << (r.passed ? "true" : "false");
    return os.str();
}

} // namespace szt

#endif
