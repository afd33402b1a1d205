// pqmet: command line front end. Every subcommand is seeded and deterministic;
// identical argv produce byte-identical structured output. Exit codes:
// 0 all checks pass, 1 a check failed (report emitted), 2 usage/input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pqmet/axioms.hpp"
#include "pqmet/completeness.hpp"
#include "pqmet/errors.hpp"
#include "pqmet/kannan.hpp"
#include "pqmet/oracle.hpp"
#include "pqmet/rng.hpp"
#include "pqmet/sequence.hpp"
#include "pqmet/serialize.hpp"
#include "pqmet/solver.hpp"
#include "pqmet/space.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::uint64_t seed = 42;
    double tolerance = 1e-12;
    double slack = 1e-9;
    std::uint64_t samples = 10'000;
    std::size_t horizon = 256;
    std::uint64_t max_iter = 1'000'000;
    double cap = 1e6;
    double margin = 1e-9;
    std::string format = "human";

    bool human() const { return format == "human"; }
    bool structured() const { return format == "structured"; }
    bool delimited() const { return format == "delimited"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pqmet::ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_builtin_space(const std::string& name) {
    for (const auto& known : pqmet::builtin_space_names())
        if (known == name) return true;
    return false;
}

pqmet::Space resolve_space(const std::string& arg) {
    if (is_builtin_space(arg)) return pqmet::builtin_space(arg);
    return pqmet::load_finite_space(read_file(arg));
}

pqmet::Mapping resolve_mapping(const std::string& arg, const pqmet::Space& space,
                               const GlobalOpts& opts) {
    if (arg == "example_map") return pqmet::builtin_mapping(arg);
    if (arg == "converse_map") {
        auto cmap = pqmet::build_counterexample_map(
            space, pqmet::Sequence::geometric(0.5, opts.horizon), opts.tolerance);
        return cmap.mapping();
    }
    return pqmet::load_mapping(read_file(arg));
}

pqmet::CheckStrategy strategy_for(const pqmet::Space& space, const GlobalOpts& opts) {
    pqmet::CheckStrategy s = space.is_finite()
                                 ? pqmet::CheckStrategy::exhaustive(opts.slack)
                                 : pqmet::CheckStrategy::sampled(opts.samples, opts.seed,
                                                                 opts.slack);
    s.upper_cap = opts.cap;
    s.margin = opts.margin;
    return s;
}

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw pqmet::ParseError("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw pqmet::ParseError("empty value list '" + list + "'");
    return out;
}

pqmet::Point parse_point(const std::string& text, const pqmet::Space& space) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw pqmet::ParseError("cannot parse point '" + text + "'");
    if (space.is_finite()) {
        if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
            throw pqmet::ParseError("finite-space point must be a non-negative index, got '" +
                                    text + "'");
        return pqmet::Point::index(static_cast<std::size_t>(v));
    }
    return pqmet::Point::coord(v);
}

std::vector<pqmet::Point> parse_points(const std::string& list, const pqmet::Space& space) {
    std::vector<pqmet::Point> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_point(item, space));
    }
    return out;
}

pqmet::Sequence parse_sequence(const std::string& spec, std::size_t horizon) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "geometric")
        return pqmet::Sequence::geometric(args.empty() ? 0.5 : std::stod(args), horizon);
    if (name == "harmonic") return pqmet::Sequence::harmonic(horizon);
    if (name == "custom") {
        if (args.empty()) throw pqmet::ParseError("custom sequence requires values: custom:a,b,...");
        return pqmet::Sequence::custom(parse_values(args));
    }
    throw pqmet::ParseError("unknown sequence '" + spec +
                            "' (use geometric[:ratio], harmonic or custom:v1,v2,...)");
}

std::string format_seconds(double x) {
    std::ostringstream out;
    out.precision(15);
    out << x;
    return out.str();
}

void print_report(const pqmet::VerificationReport& report, const pqmet::Space& space) {
    for (const auto& rec : report.records) {
        std::cout << "check " << rec.id << ": " << (rec.pass() ? "pass" : "FAIL") << " ("
                  << rec.checks << " checks";
        if (!rec.pass()) std::cout << ", " << rec.violations << " violations";
        std::cout << ")";
        if (rec.worst) {
            std::cout << "  worst at (";
            for (std::size_t i = 0; i < rec.worst->points.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << space.describe_point(rec.worst->points[i]);
            }
            std::cout << "): lhs=" << format_seconds(rec.worst->lhs)
                      << " rhs=" << format_seconds(rec.worst->rhs)
                      << " deficit=" << format_seconds(rec.worst->deficit);
        }
        std::cout << "\n";
    }
}

json params_json(const GlobalOpts& opts) {
    return json{{"seed", opts.seed},     {"tolerance", opts.tolerance},
                {"slack", opts.slack},   {"samples", opts.samples},
                {"horizon", opts.horizon}, {"cap", opts.cap}};
}

void emit_structured(const std::string& command, const GlobalOpts& opts, json result) {
    json doc{{"command", command}, {"params", params_json(opts)}, {"result", std::move(result)}};
    std::cout << doc.dump() << "\n";
}

int run_axioms(const std::string& space_arg, const GlobalOpts& opts) {
    const pqmet::Space space = resolve_space(space_arg);
    const auto strategy = strategy_for(space, opts);
    const auto cls = pqmet::classify_structure(space, strategy);

    bool axioms_pass = true;
    for (const char* id : {"1a", "1b", "2", "3"})
        axioms_pass = axioms_pass && cls.report.find(id)->pass();

    if (opts.structured()) {
        emit_structured("axioms", opts,
                        json{{"space", space.label()},
                             {"classification", json::parse(pqmet::to_json(cls))},
                             {"pass", axioms_pass}});
    } else {
        std::cout << "space: " << space.describe() << "\n";
        print_report(cls.report, space);
        std::cout << "classification: " << pqmet::to_string(cls.structure) << "\n";
        std::cout << "result: " << (axioms_pass ? "pass" : "fail") << "\n";
    }
    return axioms_pass ? 0 : 1;
}

int run_derived(const std::string& space_arg, const GlobalOpts& opts) {
    const pqmet::Space space = resolve_space(space_arg);
    const auto report = pqmet::check_derived_lemma(space, strategy_for(space, opts));
    if (opts.structured()) {
        emit_structured("derived", opts,
                        json{{"space", space.label()},
                             {"report", json::parse(pqmet::to_json(report))}});
    } else {
        std::cout << "space: " << space.describe() << "\n";
        print_report(report, space);
        std::cout << "result: " << (report.pass() ? "pass" : "fail") << "\n";
    }
    return report.pass() ? 0 : 1;
}

int run_kannan(const std::string& space_arg, const std::string& map_arg,
               std::optional<double> lambda, bool estimate, const GlobalOpts& opts) {
    const pqmet::Space space = resolve_space(space_arg);
    const pqmet::Mapping map = resolve_mapping(map_arg, space, opts);
    const auto strategy = strategy_for(space, opts);

    if (lambda && estimate)
        throw pqmet::ParseError("--lambda and --estimate are mutually exclusive");

    if (lambda) {
        const auto report = pqmet::check_kannan(space, map, pqmet::KannanConstant(*lambda),
                                                strategy);
        if (opts.structured()) {
            emit_structured("kannan", opts,
                            json{{"space", space.label()},
                                 {"mapping", map.name()},
                                 {"lambda", *lambda},
                                 {"report", json::parse(pqmet::to_json(report))}});
        } else {
            std::cout << "space: " << space.describe() << "\nmapping: " << map.name()
                      << "\nlambda: " << format_seconds(*lambda) << "\n";
            print_report(report, space);
            std::cout << "result: " << (report.pass() ? "pass" : "fail") << "\n";
        }
        return report.pass() ? 0 : 1;
    }

    const auto est = pqmet::estimate_lambda(space, map, strategy);
    const bool certifies = est.feasible && est.lambda_hat < 0.25;
    if (opts.structured()) {
        emit_structured("kannan", opts,
                        json{{"space", space.label()},
                             {"mapping", map.name()},
                             {"estimate", json::parse(pqmet::to_json(est))},
                             {"pass", certifies}});
    } else {
        std::cout << "space: " << space.describe() << "\nmapping: " << map.name() << "\n";
        if (!est.feasible)
            std::cout << "estimate: infeasible (positive numerator over zero denominator)\n";
        else
            std::cout << "estimate: lambda_hat = " << format_seconds(est.lambda_hat) << "\n";
        std::cout << "result: "
                  << (certifies ? "pass (admits a constant below 1/4)"
                                : "fail (no constant below 1/4 on the checked pairs)")
                  << "\n";
    }
    return certifies ? 0 : 1;
}

int run_solve(const std::string& space_arg, const std::string& map_arg,
              const std::string& start_arg, const std::string& trace_path,
              const GlobalOpts& opts) {
    const pqmet::Space space = resolve_space(space_arg);
    const pqmet::Mapping map = resolve_mapping(map_arg, space, opts);
    const pqmet::Point start = parse_point(start_arg, space);

    pqmet::IterateOptions iter_opts;
    iter_opts.tolerance = opts.tolerance;
    iter_opts.max_iter = opts.max_iter;

    try {
        const auto [trace, result] = pqmet::iterate(space, map, start, iter_opts);
        if (!trace_path.empty()) {
            std::ofstream out(trace_path, std::ios::binary);
            if (!out) throw pqmet::ParseError("cannot write trace file '" + trace_path + "'");
            out << pqmet::to_csv(trace);
        }
        if (opts.delimited()) {
            std::cout << pqmet::to_csv(trace);
        } else if (opts.structured()) {
            emit_structured("solve", opts,
                            json{{"space", space.label()},
                                 {"mapping", map.name()},
                                 {"summary", json::parse(pqmet::to_json(
                                                 result, trace.terminated_by))}});
        } else {
            std::cout << "space: " << space.describe() << "\nmapping: " << map.name() << "\n"
                      << "fixed point: " << space.describe_point(result.point) << "\n"
                      << "iterations: " << result.iterations << "\n"
                      << "residual p+(z, Tz): " << format_seconds(result.residual) << "\n"
                      << "self-distance p(z, z): " << format_seconds(result.self_distance) << "\n"
                      << "terminated by: " << pqmet::to_string(trace.terminated_by) << "\n";
        }
        return 0;
    } catch (const pqmet::NonConvergenceError& e) {
        if (!trace_path.empty()) {
            std::ofstream out(trace_path, std::ios::binary);
            if (out) out << pqmet::to_csv(e.trace());
        }
        std::cerr << "pqmet: " << e.what() << "\n";
        if (opts.structured())
            emit_structured("solve", opts,
                            json{{"space", space.label()},
                                 {"mapping", map.name()},
                                 {"summary", json{{"terminated_by", "max_iter"},
                                                  {"iterations", e.trace().steps.size()}}}});
        else
            std::cout << "result: fail (no convergence within " << e.trace().steps.size()
                      << " iterations)\n";
        return 1;
    }
}

int run_classify_seq(const std::string& space_arg, const std::string& seq_arg,
                     const std::string& candidates_arg, const GlobalOpts& opts) {
    const pqmet::Space space = resolve_space(space_arg);
    const pqmet::Sequence seq = parse_sequence(seq_arg, opts.horizon);
    const std::vector<pqmet::Point> candidates =
        candidates_arg.empty() ? std::vector<pqmet::Point>{}
                               : parse_points(candidates_arg, space);
    const auto cls = pqmet::classify_sequence(space, seq, candidates, opts.tolerance);

    if (opts.structured()) {
        emit_structured("classify-seq", opts,
                        json{{"space", space.label()},
                             {"sequence", seq.name()},
                             {"classification", json::parse(pqmet::to_json(cls))}});
    } else {
        std::cout << "space: " << space.describe() << "\nsequence: " << seq.name()
                  << " (horizon " << seq.horizon() << ")\n"
                  << "left p-Cauchy: " << (cls.left_p_cauchy ? "yes" : "no")
                  << " (limit ~ " << format_seconds(cls.left_p_limit) << ")\n"
                  << "tau(p+)-Cauchy: " << (cls.tau_p_plus_cauchy ? "yes" : "no")
                  << " (limit ~ " << format_seconds(cls.tau_p_plus_limit) << ")\n";
        std::cout << "tau(p)-convergent to: "
                  << (cls.tau_p_convergent_to
                          ? space.describe_point(*cls.tau_p_convergent_to)
                          : std::string("none of the candidates"))
                  << "\n";
        std::cout << "tau(p+)-convergent to: "
                  << (cls.tau_p_plus_convergent_to
                          ? space.describe_point(*cls.tau_p_plus_convergent_to)
                          : std::string("none of the candidates"))
                  << "\n";
    }
    return 0;
}

int run_probe(const std::string& space_arg, const std::string& candidates_arg,
              const GlobalOpts& opts) {
    const pqmet::Space space = resolve_space(space_arg);

    std::vector<pqmet::Sequence> family;
    std::vector<pqmet::Point> candidates;
    if (space.is_finite()) {
        for (std::size_t i = 0; i < space.point_count(); ++i) {
            candidates.push_back(pqmet::Point::index(i));
            family.push_back(pqmet::Sequence(
                "constant(" + space.point_labels()[i] + ")", opts.horizon,
                [i](std::size_t) { return pqmet::Point::index(i); }));
        }
    } else {
        family.push_back(pqmet::Sequence::geometric(0.5, opts.horizon));
        family.push_back(pqmet::Sequence::harmonic(opts.horizon));
        family.push_back(pqmet::Sequence::towards_one(opts.horizon));
        for (double c : {0.0, 0.1, 0.5, 1.0})
            if (space.domain().contains(c)) candidates.push_back(pqmet::Point::coord(c));
    }
    if (!candidates_arg.empty()) candidates = parse_points(candidates_arg, space);

    const auto report = pqmet::probe_completeness(space, family, candidates, opts.tolerance);

    if (opts.structured()) {
        emit_structured("probe", opts,
                        json{{"space", space.label()},
                             {"report", json::parse(pqmet::to_json(report))}});
    } else {
        std::cout << "space: " << space.describe() << "\n";
        for (const auto& f : report.findings) {
            std::cout << f.notion << ": ";
            if (f.counterexample_found)
                std::cout << "counterexample '" << f.sequence << "' (" << f.note << ")";
            else
                std::cout << f.note;
            std::cout << "\n";
        }
        std::cout << "note: " << report.disclaimer << "\n";
        std::cout << "result: " << (report.pass() ? "pass" : "fail") << "\n";
    }
    return report.pass() ? 0 : 1;
}

int run_converse_demo(const GlobalOpts& opts, bool cap_given) {
    const pqmet::Space space = pqmet::builtin_space("paper_example_punctured");
    const pqmet::Sequence seq = pqmet::Sequence::geometric(0.5, opts.horizon);
    const auto cmap = pqmet::build_counterexample_map(space, seq, opts.tolerance);

    pqmet::CheckStrategy strategy = pqmet::CheckStrategy::sampled(opts.samples, opts.seed,
                                                                  opts.slack);
    strategy.upper_cap = cap_given ? opts.cap : 1e3;
    strategy.margin = opts.margin;

    const auto report = pqmet::audit_counterexample(space, cmap, strategy);

    // smallest sampled displacement, over the same points the audit visited
    double min_displacement = std::numeric_limits<double>::infinity();
    {
        pqmet::SplitMix64 rng(pqmet::substream_seed(strategy.seed, "audit/points"));
        const pqmet::Mapping map = cmap.mapping();
        const double lo = space.domain().lo + strategy.margin;
        for (std::uint64_t k = 0; k < strategy.sample_count; ++k) {
            const pqmet::Point x = pqmet::Point::coord(rng.uniform(lo, strategy.upper_cap));
            min_displacement =
                std::min(min_displacement, space.sym_distance(x, map.apply(space, x)));
        }
    }

    if (opts.structured()) {
        emit_structured("converse-demo", opts,
                        json{{"space", space.label()},
                             {"sequence", seq.name()},
                             {"threshold_fraction", cmap.threshold_fraction()},
                             {"min_sampled_p_plus_displacement", min_displacement},
                             {"report", json::parse(pqmet::to_json(report))}});
    } else {
        std::cout << "space: " << space.describe() << "\n"
                  << "sequence: " << seq.name() << " (horizon " << seq.horizon() << ")\n"
                  << "map: T x = x_{n(x)} with threshold "
                  << format_seconds(cmap.threshold_fraction()) << "\n"
                  << "  e.g. n(0.25) = " << cmap.selector(0.25) << ", T(0.25) = "
                  << format_seconds(cmap.mapping().apply(space, pqmet::Point::coord(0.25)).coord())
                  << "\n";
        print_report(report, space);
        std::cout << "min sampled p+(x, Tx): " << format_seconds(min_displacement) << "\n";
        std::cout << "result: " << (report.pass() ? "pass (contraction without a fixed point)"
                                                  : "fail")
                  << "\n";
    }
    return report.pass() ? 0 : 1;
}

int run_oracle(std::optional<std::size_t> n, const std::string& space_path,
               const GlobalOpts& opts) {
    pqmet::Space space = [&] {
        if (!space_path.empty()) return pqmet::load_finite_space(read_file(space_path));
        if (n) return pqmet::random_finite_space(opts.seed, *n);
        throw pqmet::ParseError("oracle requires --n or --space");
    }();
    if (!space_path.empty() && n && *n != space.point_count())
        throw pqmet::ParseError("--n " + std::to_string(*n) + " does not match loaded space size " +
                                std::to_string(space.point_count()));

    const auto audit = pqmet::exhaustive_kannan_audit(space);

    if (opts.structured()) {
        emit_structured("oracle", opts,
                        json{{"space", space.label()},
                             {"audit", json::parse(pqmet::to_json(audit))}});
    } else {
        std::cout << "space: " << space.describe() << "\n";
        if (space_path.empty()) {
            const auto& m = space.matrix();
            for (std::size_t i = 0; i < audit.point_count; ++i) {
                std::cout << "  [";
                for (std::size_t j = 0; j < audit.point_count; ++j) {
                    if (j) std::cout << ", ";
                    std::cout << format_seconds(m[i * audit.point_count + j]);
                }
                std::cout << "]\n";
            }
        }
        std::cout << "maps enumerated: " << audit.maps_total << "\n"
                  << "contraction maps (lambda_min < 1/4): " << audit.kannan_maps.size() << "\n"
                  << "violations: " << audit.violations.size() << "\n";
        for (const auto& v : audit.violations) {
            std::cout << "  table [";
            for (std::size_t i = 0; i < v.table.size(); ++i)
                std::cout << (i ? "," : "") << v.table[i];
            std::cout << "]: " << v.reason << "\n";
        }
        std::cout << "result: " << (audit.violations.empty() ? "pass" : "fail") << "\n";
    }
    return audit.violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial quasi-metric spaces: axioms, contractions, fixed points"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "seed for all sampling")->capture_default_str();
    app.add_option("--tolerance", opts.tolerance, "solver/classifier tolerance")
        ->capture_default_str();
    app.add_option("--slack", opts.slack, "inequality slack for checks")->capture_default_str();
    app.add_option("--samples", opts.samples, "sample count for analytic spaces")
        ->capture_default_str();
    app.add_option("--horizon", opts.horizon, "sequence horizon")->capture_default_str();
    app.add_option("--max-iter", opts.max_iter, "iteration cap for solve")
        ->capture_default_str();
    auto* cap_opt =
        app.add_option("--cap", opts.cap, "sampling cap for unbounded domains")
            ->capture_default_str();
    app.add_option("--margin", opts.margin, "sampling offset for open endpoints")
        ->capture_default_str();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"human", "structured", "delimited"}))
        ->capture_default_str();

    std::string space_arg, map_arg, start_arg, trace_path, seq_arg, candidates_arg,
        oracle_space_path;
    std::optional<double> lambda;
    bool estimate = false;
    std::optional<std::size_t> oracle_n;

    auto* cmd_axioms = app.add_subcommand("axioms", "check the space axioms and classify");
    cmd_axioms->add_option("space", space_arg, "built-in name or finite-space file")->required();

    auto* cmd_derived = app.add_subcommand("derived",
                                           "check the conjugate and symmetrization constructions");
    cmd_derived->add_option("space", space_arg)->required();

    auto* cmd_kannan = app.add_subcommand("kannan", "check or estimate a contraction constant");
    cmd_kannan->add_option("space", space_arg)->required();
    cmd_kannan->add_option("map", map_arg, "built-in name or mapping file")->required();
    double lambda_value = 0.0;
    auto* lambda_opt = cmd_kannan->add_option("--lambda", lambda_value, "constant to verify");
    cmd_kannan->add_flag("--estimate", estimate, "estimate the minimal constant (default)");

    auto* cmd_solve = app.add_subcommand("solve", "Picard iteration to a fixed point");
    cmd_solve->add_option("space", space_arg)->required();
    cmd_solve->add_option("map", map_arg)->required();
    cmd_solve->add_option("--start", start_arg, "start point")->required();
    cmd_solve->add_option("--trace", trace_path, "write the iteration trace as CSV");

    auto* cmd_classify = app.add_subcommand("classify-seq", "classify a sequence");
    cmd_classify->add_option("space", space_arg)->required();
    cmd_classify->add_option("--seq", seq_arg, "geometric[:ratio] | harmonic | custom:v1,v2,...")
        ->required();
    cmd_classify->add_option("--candidates", candidates_arg, "comma-separated limit candidates");

    auto* cmd_probe = app.add_subcommand("probe", "look for completeness counterexamples");
    cmd_probe->add_option("space", space_arg)->required();
    cmd_probe->add_option("--candidates", candidates_arg, "comma-separated limit candidates");

    auto* cmd_demo = app.add_subcommand(
        "converse-demo", "fixed-point-free contraction on the punctured space (cap 1e3)");

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive self-map audit");
    std::size_t oracle_n_value = 0;
    auto* n_opt = cmd_oracle->add_option("--n", oracle_n_value, "random valid space size");
    cmd_oracle->add_option("--space", oracle_space_path, "finite-space file");

    for (auto* sub : {cmd_axioms, cmd_derived, cmd_kannan, cmd_solve, cmd_classify, cmd_probe,
                      cmd_demo, cmd_oracle})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*lambda_opt) lambda = lambda_value;
    if (*n_opt) oracle_n = oracle_n_value;

    try {
        if (opts.delimited() && !app.got_subcommand(cmd_solve))
            throw pqmet::ParseError("--format delimited is only available for solve traces");

        if (app.got_subcommand(cmd_axioms)) return run_axioms(space_arg, opts);
        if (app.got_subcommand(cmd_derived)) return run_derived(space_arg, opts);
        if (app.got_subcommand(cmd_kannan))
            return run_kannan(space_arg, map_arg, lambda, estimate, opts);
        if (app.got_subcommand(cmd_solve))
            return run_solve(space_arg, map_arg, start_arg, trace_path, opts);
        if (app.got_subcommand(cmd_classify))
            return run_classify_seq(space_arg, seq_arg, candidates_arg, opts);
        if (app.got_subcommand(cmd_probe)) return run_probe(space_arg, candidates_arg, opts);
        if (app.got_subcommand(cmd_demo)) return run_converse_demo(opts, cap_opt->count() > 0);
        if (app.got_subcommand(cmd_oracle)) return run_oracle(oracle_n, oracle_space_path, opts);
        return 2;
    } catch (const pqmet::PreconditionError& e) {
        // a prerequisite check failed: report it as a failed check
        std::cerr << "pqmet: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "pqmet: " << e.what() << "\n";
        return 2;
    }
}
