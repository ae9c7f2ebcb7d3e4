// szt: generate sets, compute additive objects, run the inequality suite.
//
// Exit status: 0 success, 1 asserted check failed, 2 usage/config/input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szt/szt.hpp"

namespace
{

using namespace szt;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Output {
    std::string path;
    std::ofstream file;
    std::ostream &stream()
    {
        if (path.empty() || path == "-") {
            return std::cout;
        }
        if (!file.is_open()) {
            file.open(path);
            if (!file) {
                throw ConfigError("cannot open output file '" + path + "'");
            }
        }
        return file;
    }
};

FiniteRealSet read_input(const std::string &path)
{
    if (path == "-") {
        return read_set(std::cin, "<stdin>");
    }
    return load_set(path);
}

std::string fmt(double v) { return format_double(v); }

void print_values(std::ostream &os, const std::string &format, const std::string &key, const std::vector<double> &values)
{
    if (format == "json") {
        json j = json::array();
        for (const double v : values) {
            j.push_back(detail::finite_or_null(v));
        }
        os << dump_canonical({{key, j}}) << '\n';
        return;
    }
    for (const double v : values) {
        os << fmt(v) << '\n';
    }
}

// ---------------------------------------------------------------------------

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
};

int cmd_gen(const GenOptions &o, Output &out)
{
    FamilySpec spec;
    spec.kind = parse_family_kind(o.kind);
    spec.n = o.n;
    spec.seed = o.seed;
    for (const auto &p : o.params) {
        spec.params.push_back(Rational::parse(p));
    }
    write_set(out.stream(), generate(spec));
    return 0;
}

// ---------------------------------------------------------------------------

struct ComputeOptions {
    std::string object;
    std::string set;
    std::string a;
    std::string b;
    std::vector<std::string> sets;
    std::vector<std::string> candidates;
    std::string op = "plus";
    std::string k = "2";
    std::string g = "self-corr";
    std::string shift;
    double alpha = 2.0;
    std::uint64_t seed = 0;
    std::uint64_t dense_entries = OperatorBudget{}.dense_entries;
    std::string format = "text";
};

FiniteRealSet primary_set(const ComputeOptions &o)
{
    if (!o.set.empty()) {
        return read_input(o.set);
    }
    if (!o.a.empty()) {
        return read_input(o.a);
    }
    throw ConfigError("compute " + o.object + " needs --set (or --a)");
}

FiniteRealSet second_set(const ComputeOptions &o, const FiniteRealSet &first)
{
    return o.b.empty() ? first : read_input(o.b);
}

int cmd_compute(const ComputeOptions &o, Output &out)
{
    std::ostream &os = out.stream();
    const bool as_json = o.format == "json";

    if (o.object == "sumset") {
        const auto a = primary_set(o);
        const auto s = sumset(a, second_set(o, a));
        if (as_json) {
            json j = json::array();
            for (const auto &x : s) {
                j.push_back(x.to_string());
            }
            os << dump_canonical({{"size", s.size()}, {"elements", j}}) << '\n';
        } else {
            write_set(os, s);
        }
        return 0;
    }
    if (o.object == "conv") {
        const auto a = primary_set(o);
        const auto b = second_set(o, a);
        if (o.op != "plus" && o.op != "minus") {
            throw ConfigError("--op must be plus or minus");
        }
        const auto conv = o.op == "plus" ? convolve_plus(a, b) : convolve_minus(a, b);
        if (as_json) {
            json j = json::array();
            for (const auto &[x, c] : conv) {
                j.push_back({x.to_string(), c});
            }
            os << dump_canonical({{"op", o.op}, {"entries", j}}) << '\n';
        } else {
            for (const auto &[x, c] : conv) {
                os << x.to_string() << ' ' << c << '\n';
            }
        }
        return 0;
    }
    if (o.object == "energy") {
        EnergyValue e;
        if (!o.sets.empty()) {
            std::vector<FiniteRealSet> ss;
            for (const auto &p : o.sets) {
                ss.push_back(read_input(p));
            }
            e = energy_k(std::span<const FiniteRealSet>(ss));
        } else {
            const auto a = primary_set(o);
            const Rational k = Rational::parse(o.k);
            if (k.is_integer() && k.numerator() >= 2 && k.numerator().fits_sint_p()) {
                e = energy_k(a, static_cast<int>(k.numerator().get_si()));
            } else {
                e = energy_fractional(a, k.to_double());
            }
        }
        const std::string text = e.exact ? e.exact->get_str() : fmt(e.approx);
        if (as_json) {
            os << dump_canonical({{"exact", e.is_exact()}, {"value", text}}) << '\n';
        } else {
            os << text << '\n';
        }
        return 0;
    }
    if (o.object == "spectrum") {
        const auto a = primary_set(o);
        const OperatorBudget budget{o.dense_entries};
        WeightFunction g;
        OperatorKind kind = OperatorKind::difference;
        if (o.g == "self-corr") {
            g = WeightFunction::from_counts(convolve_minus(a, a));
        } else if (o.g == "self-corr-sqrt") {
            g = WeightFunction::from_counts(convolve_minus(a, a), 0.5);
        } else if (o.g == "sumset-indicator") {
            g = WeightFunction::indicator(sumset(a, a));
            kind = OperatorKind::sum;
        } else if (o.g == "s1") {
            const auto conv = convolve_plus(a, a);
            const Rational th(mpz_class(static_cast<unsigned long>(a.size() * a.size())),
                              mpz_class(static_cast<unsigned long>(2 * conv.size())));
            g = WeightFunction::indicator(level_set(conv, th));
            kind = OperatorKind::sum;
        } else {
            throw ConfigError("--g must be self-corr, self-corr-sqrt, sumset-indicator or s1");
        }
        const auto spec = eigen_spectrum(build_operator(g, a, a, kind, budget));
        print_values(os, o.format, "eigenvalues", spec.values);
        return 0;
    }
    if (o.object == "tail") {
        const auto a = primary_set(o);
        const auto p = tail_profile(a, second_set(o, a));
        if (as_json) {
            json j = json::array();
            for (std::size_t t = 1; t <= p.max_tau(); ++t) {
                j.push_back({t, p.at(t)});
            }
            os << dump_canonical({{"tail", j}}) << '\n';
        } else {
            for (std::size_t t = 1; t <= p.max_tau(); ++t) {
                os << t << ' ' << p.at(t) << '\n';
            }
        }
        return 0;
    }
    if (o.object == "q") {
        const auto a = primary_set(o);
        std::vector<FiniteRealSet> cands;
        for (const auto &p : o.candidates) {
            cands.push_back(read_input(p));
        }
        if (cands.empty()) {
            cands.push_back(a);
        }
        const double q = o.shift.empty() ? q_of(a, cands) : q_prime(a, Rational::parse(o.shift), cands);
        if (as_json) {
            os << dump_canonical({{o.shift.empty() ? "q" : "q_prime", q}}) << '\n';
        } else {
            os << fmt(q) << '\n';
        }
        return 0;
    }
    if (o.object == "estimate-c") {
        const auto a = primary_set(o);
        std::vector<FiniteRealSet> probes;
        for (const auto &p : o.candidates) {
            probes.push_back(read_input(p));
        }
        if (probes.empty()) {
            probes = default_probes(a, o.seed);
        }
        const auto est = estimate_c(a, probes, o.alpha);
        const json j = {{"alpha", est.alpha},
                        {"c_hat", est.c_hat},
                        {"c_hat_over_size", est.c_hat / static_cast<double>(a.size())},
                        {"witness_probe", est.witness.probe},
                        {"witness_tau", est.witness.tau},
                        {"tail_exponent", detail::finite_or_null(est.tail_exponent)}};
        if (as_json) {
            os << dump_canonical(j) << '\n';
        } else {
            os << "c_hat " << fmt(est.c_hat) << "\nwitness_probe " << est.witness.probe << "\nwitness_tau " << est.witness.tau
               << "\ntail_exponent " << fmt(est.tail_exponent) << '\n';
        }
        return 0;
    }
    throw ConfigError("unknown compute object '" + o.object + "'");
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string config;
    std::vector<std::string> only;
    std::string family;
    std::vector<std::size_t> n;
    std::optional<unsigned> workers;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> dense_entries;
    std::string format = "json";
    bool timings = false;
};

int cmd_verify(const VerifyOptions &o, Output &out)
{
    SuiteConfig cfg;
    try {
        cfg = o.config.empty() ? default_suite_config() : load_suite_config(o.config);
        if (!o.only.empty()) {
            cfg.statements = o.only;
        }
        if (!o.family.empty()) {
            cfg.families = {{parse_family_kind(o.family), {}}};
        }
        if (!o.n.empty()) {
            cfg.sizes = o.n;
        }
        if (o.workers) {
            cfg.workers = *o.workers;
        }
        if (o.seed) {
            cfg.seed = *o.seed;
        }
        if (o.dense_entries) {
            cfg.operator_budget.dense_entries = *o.dense_entries;
        }
        validate(cfg);
    } catch (const PreconditionError &e) {
        throw ConfigError(e.what());
    }
    const auto report = run_suite(cfg);
    std::ostream &os = out.stream();
    if (o.format == "csv") {
        write_csv(os, report);
    } else {
        os << dump_canonical(to_json(report, o.timings)) << '\n';
    }
    for (const auto &e : report.errors) {
        std::cerr << "error: " << e.group << " on " << e.instance.dump() << ": " << e.message << '\n';
    }
    const auto failures = report.failures();
    std::cerr << report.reports.size() << " reports, " << failures << " failed assertions, " << report.errors.size() << " errors\n";
    return report.all_passed() ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Sumset bounds for SzT-type sets: generators, additive energies, operator spectra and inequality checks"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--out,-o", out.path, "Output file (default stdout)");

    GenOptions gen;
    auto *g = app.add_subcommand("gen", "Generate a set file from a family spec");
    g->add_option("--kind", gen.kind, "squares|cubes|random-gaps|ap|gp|image|random (or canonical names)")->required();
    g->add_option("--n", gen.n, "Cardinality")->required();
    g->add_option("--seed", gen.seed, "Seed for random families");
    g->add_option("--param", gen.params, "Kind-specific rational parameter (repeatable)");
    g->fallthrough();

    ComputeOptions comp;
    auto *c = app.add_subcommand("compute", "Compute one object");
    c->add_option("object", comp.object, "sumset|conv|energy|spectrum|tail|q|estimate-c")
        ->required()
        ->check(CLI::IsMember({"sumset", "conv", "energy", "spectrum", "tail", "q", "estimate-c"}));
    c->add_option("--set", comp.set, "Input set file ('-' for stdin)");
    c->add_option("--a", comp.a, "First set file");
    c->add_option("--b", comp.b, "Second set file (default: the first)");
    c->add_option("--sets", comp.sets, "Set files for E_k(A_1, ..., A_k)");
    c->add_option("--candidates,--probes", comp.candidates, "Candidate/probe set files for q and estimate-c");
    c->add_option("--op", comp.op, "conv: plus|minus");
    c->add_option("--k", comp.k, "energy order (integer, or rational for E_k with fractional k)");
    c->add_option("--g", comp.g, "spectrum weight: self-corr|self-corr-sqrt|sumset-indicator|s1");
    c->add_option("--shift", comp.shift, "q: nonzero shift a, computes q'");
    c->add_option("--alpha", comp.alpha, "estimate-c: SzT parameter");
    c->add_option("--seed", comp.seed, "estimate-c: probe seed");
    c->add_option("--budget", comp.dense_entries, "Dense operator entry budget");
    c->add_option("--format", comp.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    c->fallthrough();

    VerifyOptions ver;
    auto *v = app.add_subcommand("verify", "Run the inequality suite");
    v->add_option("--config", ver.config, "Suite config (INI); built-in default sweep when omitted");
    v->add_option("--only", ver.only, "Statement ids to keep")->delimiter(',');
    v->add_option("--family", ver.family, "Restrict the sweep to one family");
    v->add_option("--n", ver.n, "Restrict the sweep sizes")->delimiter(',');
    v->add_option("--workers", ver.workers, "Worker threads");
    v->add_option("--seed", ver.seed, "Suite seed");
    v->add_option("--budget", ver.dense_entries, "Dense operator entry budget");
    v->add_option("--format", ver.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    v->add_flag("--timings", ver.timings, "Include runtime_ms in JSON reports");
    v->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (*g) {
            return cmd_gen(gen, out);
        }
        if (*c) {
            return cmd_compute(comp, out);
        }
        return cmd_verify(ver, out);
    } catch (const BudgetError &e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
    } catch (const szt::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitError;
}
