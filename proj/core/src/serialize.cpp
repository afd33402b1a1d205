#include "pqmet/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace pqmet {

namespace {

using nlohmann::json;

json point_json(const Point& p) {
    if (p.is_index()) return p.index();
    return p.coord();
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    json points = json::array();
    for (const auto& p : w->points) points.push_back(point_json(p));
    return json{{"points", points}, {"lhs", w->lhs}, {"rhs", w->rhs}, {"deficit", w->deficit}};
}

json record_json(const CheckRecord& r) {
    return json{{"axiom", r.id},
                {"pass", r.pass()},
                {"violations", r.violations},
                {"worst", witness_json(r.worst)},
                {"checks", r.checks}};
}

json report_json(const VerificationReport& report) {
    json records = json::array();
    for (const auto& r : report.records) records.push_back(record_json(r));
    return json{{"checks", records}, {"pass", report.pass()}};
}

json optional_point_json(const std::optional<Point>& p) {
    if (!p) return nullptr;
    return point_json(*p);
}

} // namespace

std::string to_json(const VerificationReport& report) { return report_json(report).dump(); }

std::string to_json(const StructureClassification& c) {
    return json{{"structure", to_string(c.structure)},
                {"symmetric", c.symmetric},
                {"zero_self_distance", c.zero_self_distance},
                {"report", report_json(c.report)}}
        .dump();
}

std::string to_json(const LambdaEstimate& e) {
    json out{{"feasible", e.feasible}, {"witness", witness_json(e.witness)}};
    if (e.feasible) out["lambda_hat"] = e.lambda_hat;
    return out.dump();
}

std::string to_json(const FixedPointResult& r, Termination terminated_by) {
    return json{{"point", point_json(r.point)},
                {"residual", r.residual},
                {"self_distance", r.self_distance},
                {"iterations", r.iterations},
                {"terminated_by", to_string(terminated_by)}}
        .dump();
}

std::string to_json(const UniquenessProbe& p) {
    json points = json::array();
    for (const auto& z : p.fixed_points) points.push_back(point_json(z));
    return json{{"pass", p.pass},
                {"fixed_points", points},
                {"max_pairwise_p_plus", p.max_pairwise},
                {"failed_start", optional_point_json(p.failed_start)},
                {"note", p.note}}
        .dump();
}

std::string to_json(const SequenceClassification& c) {
    return json{{"left_p_cauchy", c.left_p_cauchy},
                {"left_p_limit", c.left_p_limit},
                {"tau_p_plus_cauchy", c.tau_p_plus_cauchy},
                {"tau_p_plus_limit", c.tau_p_plus_limit},
                {"strict_pair_limit", c.strict_pair_limit},
                {"strict_pair_limit_value", c.strict_pair_limit_value},
                {"tau_p_convergent_to", optional_point_json(c.tau_p_convergent_to)},
                {"tau_p_plus_convergent_to", optional_point_json(c.tau_p_plus_convergent_to)}}
        .dump();
}

std::string to_json(const CompletenessReport& report) {
    json findings = json::array();
    for (const auto& f : report.findings) {
        json item{{"notion", f.notion},
                  {"counterexample_found", f.counterexample_found},
                  {"note", f.note}};
        item["sequence"] = f.counterexample_found ? json(f.sequence) : json(nullptr);
        findings.push_back(item);
    }
    return json{{"findings", findings},
                {"candidates_insufficient", report.candidates_insufficient},
                {"disclaimer", report.disclaimer},
                {"pass", report.pass()}}
        .dump();
}

std::string to_json(const FiniteAudit& audit) {
    json violations = json::array();
    for (const auto& v : audit.violations)
        violations.push_back(
            json{{"table", v.table}, {"lambda_min", v.lambda_min}, {"reason", v.reason}});
    return json{{"n", audit.point_count},
                {"maps_total", audit.maps_total},
                {"kannan_count", audit.kannan_maps.size()},
                {"violations", violations}}
        .dump();
}

std::string to_csv(const IterationTrace& trace) {
    std::ostringstream out;
    out.precision(17);
    out << "iter,point,step_p_plus,self_p\n";
    for (const auto& step : trace.steps) {
        out << step.n << ',';
        if (step.point.is_index())
            out << step.point.index();
        else
            out << step.point.coord();
        out << ',' << step.step_displacement << ',' << step.self_distance << '\n';
    }
    return out.str();
}

} // namespace pqmet
