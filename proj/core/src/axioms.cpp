#include "pqmet/axioms.hpp"

#include <cmath>
#include <utility>

#include "pqmet/errors.hpp"
#include "record_builder.hpp"
#include "sampling.hpp"

namespace pqmet {

using detail::pair_sum_deficit;
using detail::RecordBuilder;

std::string to_string(StructureClass c) {
    switch (c) {
        case StructureClass::quasi_metric: return "quasi-metric";
        case StructureClass::partial_quasi_metric: return "partial quasi-metric";
        case StructureClass::partial_metric: return "partial metric";
        case StructureClass::lopsided_partial_quasi_metric:
            return "lopsided partial quasi-metric";
        case StructureClass::invalid: return "invalid";
    }
    return "invalid";
}

namespace {

// (1a), (1b) and the distinctness direction of (3) on one pair sweep.
// (3) also counts diagonal pairs: p(x,x) = p(x,x) holds trivially.
void check_pair_axioms(const Space& space, const CheckStrategy& strategy, RecordBuilder& a1a,
                       RecordBuilder& a1b, RecordBuilder& a3) {
    const double slack = strategy.slack;
    detail::visit_pairs(space, strategy, "axioms/pairs", [&](const Point& x, const Point& y) {
        const double pxx = space.distance(x, x);
        const double pxy = space.distance(x, y);
        const double pyx = space.distance(y, x);
        const double pyy = space.distance(y, y);

        a1a.count();
        if (pxx > pxy + slack) a1a.violation({x, y}, pxx, pxy, pxx - pxy);

        a1b.count();
        if (pxx > pyx + slack) a1b.violation({x, y}, pxx, pyx, pxx - pyx);

        a3.count();
        if (x != y) {
            const double r1 = std::abs(pxx - pxy);
            const double r2 = std::abs(pyy - pyx);
            if (r1 <= slack && r2 <= slack)
                a3.violation({x, y}, r1, r2, slack - std::max(r1, r2));
        }
        return true;
    });
}

void check_triangle(const Space& space, const CheckStrategy& strategy, RecordBuilder& a2) {
    const double slack = strategy.slack;
    detail::visit_triples(space, strategy, "axioms/triples",
                          [&](const Point& x, const Point& y, const Point& z) {
                              const double lhs1 = space.distance(x, z);
                              const double lhs2 = space.distance(y, y);
                              const double rhs1 = space.distance(x, y);
                              const double rhs2 = space.distance(y, z);
                              a2.count();
                              const double deficit = pair_sum_deficit(lhs1, lhs2, rhs1, rhs2);
                              if (deficit > slack)
                                  a2.violation({x, y, z}, lhs1 + lhs2, rhs1 + rhs2, deficit);
                              return true;
                          });
}

} // namespace

VerificationReport check_axioms(const Space& space, const CheckStrategy& strategy) {
    detail::validate_strategy(space, strategy);
    RecordBuilder a1a("1a"), a1b("1b"), a2("2"), a3("3");
    check_pair_axioms(space, strategy, a1a, a1b, a3);
    check_triangle(space, strategy, a2);
    VerificationReport report;
    report.records.push_back(a1a.take());
    report.records.push_back(a1b.take());
    report.records.push_back(a2.take());
    report.records.push_back(a3.take());
    return report;
}

StructureClassification classify_structure(const Space& space, const CheckStrategy& strategy) {
    StructureClassification out;
    out.report = check_axioms(space, strategy);

    const double slack = strategy.slack;
    RecordBuilder sym("4-symmetry"), self0("self-distance-zero");
    detail::visit_pairs(space, strategy, "axioms/pairs", [&](const Point& x, const Point& y) {
        const double pxy = space.distance(x, y);
        const double pyx = space.distance(y, x);
        sym.count();
        const double diff = std::abs(pxy - pyx);
        if (diff > slack) sym.violation({x, y}, pxy, pyx, diff);
        return true;
    });
    detail::visit_points(space, strategy, "axioms/points", [&](const Point& x) {
        const double pxx = space.distance(x, x);
        self0.count();
        if (pxx > slack) self0.violation({x}, pxx, 0.0, pxx);
        return true;
    });

    CheckRecord sym_rec = sym.take();
    CheckRecord self_rec = self0.take();
    out.symmetric = sym_rec.pass();
    out.zero_self_distance = self_rec.pass();

    const bool ok_1a = out.report.find("1a")->pass();
    const bool ok_1b = out.report.find("1b")->pass();
    const bool ok_2 = out.report.find("2")->pass();
    const bool ok_3 = out.report.find("3")->pass();

    if (!(ok_1a && ok_2 && ok_3))
        out.structure = StructureClass::invalid;
    else if (!ok_1b)
        out.structure = StructureClass::lopsided_partial_quasi_metric;
    else if (out.zero_self_distance)
        out.structure = StructureClass::quasi_metric;
    else if (out.symmetric)
        out.structure = StructureClass::partial_metric;
    else
        out.structure = StructureClass::partial_quasi_metric;

    out.report.records.push_back(std::move(sym_rec));
    out.report.records.push_back(std::move(self_rec));
    return out;
}

VerificationReport check_derived_lemma(const Space& space, const CheckStrategy& strategy) {
    VerificationReport base = check_axioms(space, strategy);
    if (!base.pass()) {
        for (const auto& rec : base.records)
            if (!rec.pass())
                throw PreconditionError("check_derived_lemma: space '" + space.label() +
                                        "' fails axiom (" + rec.id + ") with " +
                                        std::to_string(rec.violations) + " violation(s)");
    }

    VerificationReport report;

    VerificationReport conj = check_axioms(space.conjugate(), strategy);
    for (auto& rec : conj.records) {
        rec.id = "conjugate." + rec.id;
        report.records.push_back(std::move(rec));
    }

    const Space sym = space.symmetrized();
    const double slack = strategy.slack;
    RecordBuilder pm1("symmetrization.pm1"), pm2("symmetrization.pm2"),
        pm3("symmetrization.pm3"), pm4("symmetrization.pm4");

    detail::visit_pairs(sym, strategy, "axioms/pairs", [&](const Point& x, const Point& y) {
        const double qxx = sym.distance(x, x);
        const double qxy = sym.distance(x, y);
        const double qyx = sym.distance(y, x);
        const double qyy = sym.distance(y, y);

        pm1.count();
        if (x != y) {
            const double r1 = std::abs(qxx - qxy);
            const double r2 = std::abs(qyy - qxy);
            if (r1 <= slack && r2 <= slack)
                pm1.violation({x, y}, r1, r2, slack - std::max(r1, r2));
        }

        pm2.count();
        if (qxx > qxy + slack) pm2.violation({x, y}, qxx, qxy, qxx - qxy);

        pm3.count();
        const double diff = std::abs(qxy - qyx);
        if (diff > slack) pm3.violation({x, y}, qxy, qyx, diff);
        return true;
    });

    detail::visit_triples(sym, strategy, "axioms/triples",
                          [&](const Point& x, const Point& y, const Point& z) {
                              const double lhs1 = sym.distance(x, y);
                              const double lhs2 = sym.distance(z, z);
                              const double rhs1 = sym.distance(x, z);
                              const double rhs2 = sym.distance(z, y);
                              pm4.count();
                              const double deficit = pair_sum_deficit(lhs1, lhs2, rhs1, rhs2);
                              if (deficit > slack)
                                  pm4.violation({x, y, z}, lhs1 + lhs2, rhs1 + rhs2, deficit);
                              return true;
                          });

    report.records.push_back(pm1.take());
    report.records.push_back(pm2.take());
    report.records.push_back(pm3.take());
    report.records.push_back(pm4.take());
    return report;
}

} // namespace pqmet
