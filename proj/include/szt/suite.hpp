// Suite configuration (INI text), the sweep driver and the aggregate report.

#ifndef SZT_SUITE_HPP
#define SZT_SUITE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "szt/error.hpp"
#include "szt/families.hpp"
#include "szt/harness.hpp"
#include "szt/operators.hpp"
#include "szt/report.hpp"
#include "szt/szt_estimation.hpp"

namespace szt
{

inline constexpr const char *kSuiteVersion = "1";

/// Statement ids grouped by the check that produces them.
struct CheckGroup {
    const char *name;
    std::vector<std::string> statements;
};

inline const std::vector<CheckGroup> &check_groups()
{
    static const std::vector<CheckGroup> groups = {
        {"lemma-szt", {"lemma-szt-e3", "lemma-szt-energy-cubed", "lemma-szt-mixed"}},
        {"lemma-szt1", {"lemma-szt1"}},
        {"lemma-e3", {"lemma-e3"}},
        {"dyadic", {"dyadic-decomposition"}},
        {"thm-main", {"thm-main"}},
        {"eigen-steps", {"thm-main-mu1", "lemma-action-g", "proof-chain-sigma-lower", "proof-chain-cauchy-schwarz"}},
        {"main-diff",
         {"thm-main-diff-general", "thm-main-diff-new", "thm-main-diff-alpha2", "thm-main-diff-mixed", "cor-convex-diff"}},
        {"convex-map",
         {"thm-lrn-prime", "thm-lrn-prime-max", "thm-lrn-prime-product", "cor-sum-image", "cor-product-difference",
          "cor-product-difference-max"}},
        {"rank-one", {"lemma-rank-one"}},
    };
    return groups;
}

inline const CheckGroup &find_group(const std::string &name)
{
    for (const auto &g : check_groups()) {
        if (name == g.name) {
            return g;
        }
    }
    throw PreconditionError("unknown check group '" + name + "'");
}

/// Groups whose right-hand side involves c(A).
inline bool uses_c(const std::string &group)
{
    return group == "lemma-szt" || group == "lemma-szt1" || group == "lemma-e3" || group == "thm-main" || group == "main-diff";
}

inline std::vector<std::string> all_statement_ids()
{
    std::vector<std::string> ids;
    for (const auto &g : check_groups()) {
        ids.insert(ids.end(), g.statements.begin(), g.statements.end());
    }
    return ids;
}

struct FamilyEntry {
    FamilyKind kind;
    std::vector<Rational> params;
};

struct SuiteConfig {
    std::string suite_version = kSuiteVersion;
    std::uint64_t seed = 20141019;
    unsigned workers = 1;
    double alpha = 2.0;
    std::vector<FamilyEntry> families;
    std::vector<std::size_t> sizes;
    std::optional<std::vector<std::string>> statements; // unset: all
    std::map<std::string, double> assert_constants;
    OperatorBudget operator_budget;

    double delta = 2.0;
    std::string szt_partner = "ap";
    std::string szt1_partner = "self";
    std::string diff_partner = "cubes";
    std::vector<int> diff_signs = {1, -1};
    std::string rank_one_partner = "ap";
    ConvexMap convex_map = ConvexMap::square;
    double ratio_guard_low = 0.5;
    double ratio_guard_high = 2.0;
    std::size_t proof_chain_max_n = 64;
    bool estimate_c = true;
    std::size_t random_probes = 2;

    [[nodiscard]] bool selected(const std::string &id) const
    {
        return !statements || std::find(statements->begin(), statements->end(), id) != statements->end();
    }
    [[nodiscard]] bool group_selected(const CheckGroup &g) const
    {
        return std::any_of(g.statements.begin(), g.statements.end(), [&](const std::string &s) { return selected(s); });
    }
};

/// The acceptance sweep: {squares, cubes, random-gap convex, GP} × n ∈ {16, ..., 256}.
inline SuiteConfig default_suite_config()
{
    SuiteConfig c;
    c.families = {{FamilyKind::convex_squares, {}},
                  {FamilyKind::convex_cubes, {}},
                  {FamilyKind::convex_random_gaps, {}},
                  {FamilyKind::geometric_progression, {Rational(2)}}};
    c.sizes = {16, 32, 64, 128, 256};
    return c;
}

// ---------------------------------------------------------------------------
// INI parsing

namespace detail
{

inline std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

template <typename T>
T parse_value(const std::string &key, const std::string &text)
{
    std::istringstream in(text);
    T v{};
    in >> v;
    if (!in || !(in >> std::ws).eof()) {
        throw ConfigError("config key '" + key + "': cannot parse '" + text + "'");
    }
    return v;
}

inline bool parse_bool(const std::string &key, const std::string &text)
{
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError("config key '" + key + "': expected a boolean, got '" + text + "'");
}

inline void reject_unknown(const boost::property_tree::ptree &node, const std::string &where, const std::set<std::string> &known)
{
    for (const auto &[k, v] : node) {
        if (!known.count(k)) {
            throw ConfigError("unknown config key '" + k + "' in " + where);
        }
    }
}

} // namespace detail

/// Checks semantic validity and budget feasibility; throws ConfigError.
inline void validate(const SuiteConfig &c)
{
    if (c.suite_version != kSuiteVersion) {
        throw ConfigError("unsupported suite_version '" + c.suite_version + "' (expected " + kSuiteVersion + ")");
    }
    if (c.workers == 0) {
        throw ConfigError("workers must be >= 1");
    }
    if (!(c.alpha >= 1.0)) {
        throw ConfigError("alpha must be >= 1");
    }
    const auto ids = all_statement_ids();
    if (c.statements) {
        for (const auto &s : *c.statements) {
            if (std::find(ids.begin(), ids.end(), s) == ids.end()) {
                throw ConfigError("unknown statement id '" + s + "'");
            }
        }
    }
    for (const auto &[id, v] : c.assert_constants) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
            throw ConfigError("assert constant for unknown statement '" + id + "'");
        }
        if (!(v > 0)) {
            throw ConfigError("assert constant for '" + id + "' must be positive");
        }
    }
    for (const auto n : c.sizes) {
        if (n < 4) {
            throw ConfigError("sweep sizes must be >= 4 (log2 guard)");
        }
    }
    if (!(c.delta >= 1.0)) {
        throw ConfigError("delta must be >= 1");
    }
    if (!(c.ratio_guard_low > 0) || c.ratio_guard_low > c.ratio_guard_high) {
        throw ConfigError("ratio guard must satisfy 0 < low <= high");
    }
    for (const int s : c.diff_signs) {
        if (s != 1 && s != -1) {
            throw ConfigError("diff signs must be + or -");
        }
    }
    const bool alpha_gt_1 = c.alpha > 1.0;
    if (!alpha_gt_1 && (c.selected("lemma-szt1") || c.group_selected(find_group("main-diff")))) {
        throw ConfigError("lemma-szt1 and thm-main-diff need alpha > 1");
    }
    for (const auto &p : {c.szt_partner, c.szt1_partner, c.diff_partner, c.rank_one_partner}) {
        if (p != "self") {
            try {
                parse_family_kind(p);
            } catch (const PreconditionError &e) {
                throw ConfigError(std::string("partner: ") + e.what());
            }
        }
    }
    // Budget feasibility: the operator checks build |A| x |A| (and |A| x |B|) dense matrices.
    const bool needs_dense = c.group_selected(find_group("eigen-steps")) || c.group_selected(find_group("rank-one"));
    if (needs_dense) {
        for (const auto n : c.sizes) {
            const std::uint64_t entries = static_cast<std::uint64_t>(n) * n;
            if (entries > c.operator_budget.dense_entries) {
                throw ConfigError("budget infeasible: n = " + std::to_string(n) + " needs " + std::to_string(entries) +
                                  " dense entries, budget " + std::to_string(c.operator_budget.dense_entries));
            }
        }
    }
}

inline SuiteConfig parse_suite_config(std::istream &in, const std::string &origin = "<config>")
{
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(origin + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    SuiteConfig c = default_suite_config();
    c.families.clear();
    c.sizes.clear();

    const std::set<std::string> sections = {"sweep", "constants", "budget", "checks", "family-params"};
    const std::set<std::string> root_keys = {"suite_version", "seed", "workers", "alpha", "statements"};
    // An empty section and a key with an empty value look alike in the tree.
    for (const auto &[k, v] : tree) {
        if (sections.count(k) || (v.empty() && root_keys.count(k))) {
            continue;
        }
        throw ConfigError(v.empty() ? "unknown config key '" + k + "'" : "unknown config section [" + k + "]");
    }
    auto get = [&](const std::string &path) -> std::optional<std::string> {
        if (const auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '/'))) {
            return *v;
        }
        return std::nullopt;
    };

    if (const auto v = get("suite_version")) {
        c.suite_version = *v;
    }
    if (const auto v = get("seed")) {
        c.seed = detail::parse_value<std::uint64_t>("seed", *v);
    }
    if (const auto v = get("workers")) {
        c.workers = detail::parse_value<unsigned>("workers", *v);
    }
    if (const auto v = get("alpha")) {
        c.alpha = detail::parse_value<double>("alpha", *v);
    }
    if (const auto v = get("statements")) {
        c.statements = detail::split_list(*v);
    }

    if (const auto sweep = tree.get_child_optional("sweep")) {
        detail::reject_unknown(*sweep, "[sweep]", {"families", "sizes"});
    }
    std::map<std::string, std::vector<Rational>> params;
    if (const auto fp = tree.get_child_optional("family-params")) {
        for (const auto &[k, v] : *fp) {
            std::vector<Rational> ps;
            for (const auto &tok : detail::split_list(v.data())) {
                try {
                    ps.push_back(Rational::parse(tok));
                } catch (const ParseError &e) {
                    throw ConfigError("[family-params] " + k + ": " + e.what());
                }
            }
            try {
                params[to_string(parse_family_kind(k))] = std::move(ps);
            } catch (const PreconditionError &e) {
                throw ConfigError(std::string("[family-params]: ") + e.what());
            }
        }
    }
    for (const auto &name : detail::split_list(get("sweep/families").value_or(""))) {
        try {
            const auto kind = parse_family_kind(name);
            const auto it = params.find(to_string(kind));
            c.families.push_back({kind, it == params.end() ? std::vector<Rational>{} : it->second});
        } catch (const PreconditionError &e) {
            throw ConfigError(std::string("[sweep] families: ") + e.what());
        }
    }
    for (const auto &tok : detail::split_list(get("sweep/sizes").value_or(""))) {
        c.sizes.push_back(detail::parse_value<std::size_t>("sizes", tok));
    }

    if (const auto consts = tree.get_child_optional("constants")) {
        for (const auto &[k, v] : *consts) {
            c.assert_constants[k] = detail::parse_value<double>("constants." + k, v.data());
        }
    }
    if (const auto budget = tree.get_child_optional("budget")) {
        detail::reject_unknown(*budget, "[budget]", {"dense_entries"});
        if (const auto v = get("budget/dense_entries")) {
            c.operator_budget.dense_entries = detail::parse_value<std::uint64_t>("dense_entries", *v);
        }
    }
    if (const auto checks = tree.get_child_optional("checks")) {
        detail::reject_unknown(*checks, "[checks]",
                               {"delta", "szt_partner", "szt1_partner", "diff_partner", "diff_signs", "rank_one_partner", "convex_map",
                                "ratio_guard_low", "ratio_guard_high", "proof_chain_max_n", "estimate_c", "random_probes"});
        if (const auto v = get("checks/delta")) {
            c.delta = detail::parse_value<double>("delta", *v);
        }
        c.szt_partner = get("checks/szt_partner").value_or(c.szt_partner);
        c.szt1_partner = get("checks/szt1_partner").value_or(c.szt1_partner);
        c.diff_partner = get("checks/diff_partner").value_or(c.diff_partner);
        c.rank_one_partner = get("checks/rank_one_partner").value_or(c.rank_one_partner);
        if (const auto v = get("checks/diff_signs")) {
            c.diff_signs.clear();
            for (const auto &s : detail::split_list(*v)) {
                if (s == "+") {
                    c.diff_signs.push_back(1);
                } else if (s == "-") {
                    c.diff_signs.push_back(-1);
                } else {
                    throw ConfigError("diff_signs: expected + or -, got '" + s + "'");
                }
            }
        }
        if (const auto v = get("checks/convex_map")) {
            try {
                c.convex_map = parse_convex_map(*v);
            } catch (const PreconditionError &e) {
                throw ConfigError(e.what());
            }
        }
        if (const auto v = get("checks/ratio_guard_low")) {
            c.ratio_guard_low = detail::parse_value<double>("ratio_guard_low", *v);
        }
        if (const auto v = get("checks/ratio_guard_high")) {
            c.ratio_guard_high = detail::parse_value<double>("ratio_guard_high", *v);
        }
        if (const auto v = get("checks/proof_chain_max_n")) {
            c.proof_chain_max_n = detail::parse_value<std::size_t>("proof_chain_max_n", *v);
        }
        if (const auto v = get("checks/estimate_c")) {
            c.estimate_c = detail::parse_bool("estimate_c", *v);
        }
        if (const auto v = get("checks/random_probes")) {
            c.random_probes = detail::parse_value<std::size_t>("random_probes", *v);
        }
    }
    validate(c);
    return c;
}

inline SuiteConfig load_suite_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_suite_config(in, path);
}

// ---------------------------------------------------------------------------
// Report aggregate

struct StatementSummary {
    std::size_t count = 0;
    std::size_t asserted = 0;
    std::size_t passed = 0;
    long double min_log2_effective = std::numeric_limits<long double>::infinity();
    long double max_log2_effective = -std::numeric_limits<long double>::infinity();
};

struct SuiteError {
    json instance;
    std::string group;
    std::string message;
};

struct SuiteReport {
    std::string suite_version = kSuiteVersion;
    std::uint64_t seed = 0;
    std::vector<InequalityReport> reports;
    json c_diagnostics = json::array();
    std::vector<SuiteError> errors;

    [[nodiscard]] std::map<std::string, StatementSummary> summary() const
    {
        std::map<std::string, StatementSummary> out;
        for (const auto &r : reports) {
            auto &s = out[r.statement_id];
            ++s.count;
            if (!r.diagnostic) {
                ++s.asserted;
                s.passed += r.passed ? 1 : 0;
            }
            s.min_log2_effective = std::min(s.min_log2_effective, r.log2_effective_constant());
            s.max_log2_effective = std::max(s.max_log2_effective, r.log2_effective_constant());
        }
        return out;
    }

    [[nodiscard]] std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [](const InequalityReport &r) { return !r.diagnostic && !r.passed; }));
    }

    [[nodiscard]] bool all_passed() const { return failures() == 0 && errors.empty(); }
};

inline json to_json(const SuiteReport &s, bool with_timing = false)
{
    json reports = json::array();
    for (const auto &r : s.reports) {
        reports.push_back(to_json(r, with_timing));
    }
    json summary = json::object();
    for (const auto &[id, st] : s.summary()) {
        summary[id] = {{"count", st.count},
                       {"asserted", st.asserted},
                       {"passed", st.passed},
                       {"pass_rate", st.asserted ? static_cast<double>(st.passed) / static_cast<double>(st.asserted) : 1.0},
                       {"min_effective_constant", detail::finite_or_null(std::exp2(st.min_log2_effective))},
                       {"max_effective_constant", detail::finite_or_null(std::exp2(st.max_log2_effective))}};
    }
    json errors = json::array();
    for (const auto &e : s.errors) {
        errors.push_back({{"instance", e.instance}, {"group", e.group}, {"message", e.message}});
    }
    return {{"suite_version", s.suite_version},
            {"seed", s.seed},
            {"reports", reports},
            {"summary", summary},
            {"c_diagnostics", s.c_diagnostics},
            {"errors", errors},
            {"failures", s.failures()},
            {"passed", s.all_passed()}};
}

inline void write_csv(std::ostream &os, const SuiteReport &s)
{
    os << kReportCsvHeader << '\n';
    for (const auto &r : s.reports) {
        os << to_csv_row(r) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Driver

namespace detail
{

/// splitmix64 finalizer, used to derive per-instance seeds from the suite seed.
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline json describe(const FamilySpec &spec)
{
    json params = json::array();
    for (const auto &p : spec.params) {
        params.push_back(p.to_string());
    }
    return {{"family", to_string(spec.kind)}, {"n", spec.n}, {"seed", spec.seed}, {"params", params}};
}

struct SweepInstance {
    FamilySpec spec;
    FiniteRealSet set;
    double c = 0;       // prescribed c(A), or c_hat when the family has none
    bool prescribed = false;
};

inline FamilySpec partner_spec(const std::string &name, std::size_t n, std::uint64_t seed)
{
    FamilySpec s{parse_family_kind(name), n, seed, {}};
    return s;
}

} // namespace detail

inline SuiteReport run_suite(const SuiteConfig &config)
{
    validate(config);
    SuiteReport out;
    out.suite_version = config.suite_version;
    out.seed = config.seed;

    CheckContext ctx;
    ctx.assert_constants = config.assert_constants;
    ctx.operator_budget = config.operator_budget;
    ctx.ratio_guard_low = config.ratio_guard_low;
    ctx.ratio_guard_high = config.ratio_guard_high;

    // Instances in sweep order.
    std::vector<detail::SweepInstance> instances;
    for (std::size_t fi = 0; fi < config.families.size(); ++fi) {
        for (const auto n : config.sizes) {
            FamilySpec spec{config.families[fi].kind, n, detail::mix_seed(config.seed ^ detail::mix_seed(fi * 1000003ULL + n)),
                            config.families[fi].params};
            try {
                instances.push_back({spec, generate(spec), 0, false});
            } catch (const PreconditionError &e) {
                throw ConfigError(std::string("family ") + to_string(spec.kind) + ": " + e.what());
            }
        }
    }

    struct Task {
        std::size_t instance;
        std::size_t group; // check_groups() index, or npos for the c estimate
    };
    constexpr std::size_t kEstimate = static_cast<std::size_t>(-1);
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        tasks.push_back({i, kEstimate});
    }

    // c(A) first: prescribed for convex sets (either orientation), otherwise the estimate.
    std::vector<std::optional<SzTEstimate>> estimates(instances.size());
    for (auto &inst : instances) {
        if (is_convex(inst.set) || is_convex(negated(inst.set))) {
            inst.c = family_c(inst.set, SzTFamily::convex);
            inst.prescribed = true;
        }
    }
    auto run_tasks = [&](const std::vector<Task> &list, auto &&body) {
        std::vector<std::exception_ptr> errs(list.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t; (t = next.fetch_add(1)) < list.size();) {
                try {
                    body(t);
                } catch (...) {
                    errs[t] = std::current_exception();
                }
            }
        };
        const unsigned nthreads = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(list.size())));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < nthreads; ++w) {
            pool.emplace_back(worker);
        }
        worker();
        for (auto &th : pool) {
            th.join();
        }
        return errs;
    };

    const bool need_estimates = config.estimate_c || std::any_of(instances.begin(), instances.end(), [](const auto &i) { return !i.prescribed; });
    if (need_estimates) {
        auto errs = run_tasks(tasks, [&](std::size_t t) {
            const auto &inst = instances[tasks[t].instance];
            const auto probes = default_probes(inst.set, detail::mix_seed(inst.spec.seed), config.random_probes);
            estimates[tasks[t].instance] = estimate_c(inst.set, probes, config.alpha);
        });
        for (std::size_t t = 0; t < errs.size(); ++t) {
            if (errs[t]) {
                std::rethrow_exception(errs[t]);
            }
        }
        for (std::size_t i = 0; i < instances.size(); ++i) {
            auto &inst = instances[i];
            const auto &est = *estimates[i];
            if (!inst.prescribed) {
                inst.c = est.c_hat;
            }
            json row = detail::describe(inst.spec);
            row["c_prescribed"] = inst.prescribed ? json(inst.c) : json(nullptr);
            row["c_hat"] = est.c_hat;
            row["c_hat_over_size"] = est.c_hat / static_cast<double>(inst.set.size());
            row["witness_probe"] = est.witness.probe;
            row["witness_tau"] = est.witness.tau;
            row["tail_exponent"] = detail::finite_or_null(est.tail_exponent);
            row["alpha"] = config.alpha;
            out.c_diagnostics.push_back(row);
        }
    }

    // Checks.
    const auto &groups = check_groups();
    tasks.clear();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (config.group_selected(groups[g])) {
                tasks.push_back({i, g});
            }
        }
    }
    std::vector<std::vector<InequalityReport>> results(tasks.size());
    auto errs = run_tasks(tasks, [&](std::size_t t) {
        const detail::Stopwatch sw;
        const auto &inst = instances[tasks[t].instance];
        const auto &a = inst.set;
        const std::size_t n = a.size();
        const double c = inst.c;
        const double alpha = config.alpha;
        const std::uint64_t pseed = detail::mix_seed(inst.spec.seed + 1);
        auto partner = [&](const std::string &name) -> std::pair<FiniteRealSet, json> {
            if (name == "self") {
                return {a, "self"};
            }
            const auto spec = detail::partner_spec(name, n, pseed);
            return {generate(spec), detail::describe(spec)};
        };
        auto partner_c = [&](const FiniteRealSet &b) {
            if (b == a) {
                return c;
            }
            if (is_convex(b) || is_convex(negated(b))) {
                return family_c(b, SzTFamily::convex);
            }
            const auto probes = default_probes(b, detail::mix_seed(pseed), config.random_probes);
            return estimate_c(b, probes, alpha).c_hat;
        };
        std::vector<InequalityReport> rs;
        json extra = json::object();
        switch (tasks[t].group) {
        case 0: {
            const auto [b, desc] = partner(config.szt_partner);
            rs = check_lemma_szt(a, b, c, alpha, ctx);
            extra["partner"] = desc;
            break;
        }
        case 1: {
            const auto [b, desc] = partner(config.szt1_partner);
            rs.push_back(check_lemma_szt1(b, a, c, partner_c(b), alpha, ctx));
            extra["partner"] = desc;
            break;
        }
        case 2:
            rs.push_back(check_lemma_e3(a, level_set(convolve_minus(a, a), config.delta), config.delta, c, alpha, ctx));
            break;
        case 3:
            rs.push_back(check_dyadic_decomposition(a, level_set(convolve_minus(a, a), config.delta), config.delta, ctx));
            break;
        case 4:
            rs.push_back(check_thm_main(a, c, alpha, ctx));
            break;
        case 5:
            rs = check_main_eigen_steps(a, n <= config.proof_chain_max_n, ctx);
            break;
        case 6: {
            const auto [b, desc] = partner(config.diff_partner);
            const double cb = partner_c(b);
            for (const int sign : config.diff_signs) {
                auto part = check_thm_main_diff(a, b, c, cb, alpha, sign, ctx);
                rs.insert(rs.end(), part.begin(), part.end());
            }
            extra["partner"] = desc;
            break;
        }
        case 7:
            rs = check_convex_map_theorems(a, apply_convex_map(a, config.convex_map), config.convex_map, ctx);
            break;
        case 8: {
            const auto [b, desc] = partner(config.rank_one_partner);
            rs.push_back(verify_rank_one_lemma(a, b, sumset(a, b), OperatorKind::sum, ctx.operator_budget));
            extra["partner"] = desc;
            break;
        }
        default:
            break;
        }
        const json family = detail::describe(inst.spec);
        std::vector<InequalityReport> kept;
        for (auto &r : rs) {
            if (!config.selected(r.statement_id)) {
                continue;
            }
            json instance = r.instance;
            instance["family"] = family;
            instance["c_source"] = inst.prescribed ? "prescribed" : "estimate";
            for (auto it = extra.begin(); it != extra.end(); ++it) {
                instance[it.key()] = it.value();
            }
            r.instance = std::move(instance);
            // Without a prescribed c(A) the bound is only informative.
            r.diagnostic = r.diagnostic || (!inst.prescribed && uses_c(groups[tasks[t].group].name));
            if (r.runtime_ms == 0.0) {
                r.runtime_ms = sw.ms();
            }
            kept.push_back(std::move(r));
        }
        results[t] = std::move(kept);
    });
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (errs[t]) {
            std::string msg;
            try {
                std::rethrow_exception(errs[t]);
            } catch (const std::exception &e) {
                msg = e.what();
            }
            out.errors.push_back({detail::describe(instances[tasks[t].instance].spec), groups[tasks[t].group].name, msg});
            continue;
        }
        for (auto &r : results[t]) {
            out.reports.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace szt

#endif
