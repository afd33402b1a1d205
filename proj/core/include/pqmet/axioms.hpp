#pragma once

#include <string>

#include "pqmet/report.hpp"
#include "pqmet/space.hpp"
#include "pqmet/strategy.hpp"

namespace pqmet {

enum class StructureClass {
    quasi_metric,
    partial_quasi_metric,
    partial_metric,
    lopsided_partial_quasi_metric,
    invalid,
};

std::string to_string(StructureClass c);

struct StructureClassification {
    StructureClass structure = StructureClass::invalid;
    bool symmetric = false;          // p(x,y) == p(y,x) on all checks
    bool zero_self_distance = false; // p(x,x) == 0 on all checks
    VerificationReport report;       // axioms 1a,1b,2,3 plus the two observations
};

/// Verify the defining axioms of an asymmetric distance with positive
/// self-distances:
///   (1a) p(x,x) <= p(x,y)
///   (1b) p(x,x) <= p(y,x)
///   (2)  p(x,z) + p(y,y) <= p(x,y) + p(y,z)
///   (3)  on distinct pairs, not both p(x,x) = p(x,y) and p(y,y) = p(y,x)
/// Exhaustive mode checks (1a),(1b),(3) on all n^2 ordered pairs and (2) on
/// all n^3 ordered triples. The four-addend deficit of (2) is accumulated
/// exactly, so slack-0 exhaustive runs compare exact sums.
VerificationReport check_axioms(const Space& space, const CheckStrategy& strategy);

/// Decide the most specific structure label: which axioms hold, whether the
/// distance is symmetric, and whether all self-distances vanish. Zero
/// self-distances win over symmetry (a symmetric zero-self-distance space is
/// reported as quasi-metric).
StructureClassification classify_structure(const Space& space, const CheckStrategy& strategy);

/// Check the two derived constructions of a verified space: the conjugate
/// satisfies (1a),(1b),(2),(3) and the symmetrization satisfies the partial
/// metric axioms (pm1)-(pm4), where
///   (pm1) on distinct pairs, not p(x,x) = p(x,y) = p(y,y)
///   (pm2) p(x,x) <= p(x,y)
///   (pm3) p(x,y) = p(y,x)
///   (pm4) p(x,y) + p(z,z) <= p(x,z) + p(z,y)
/// Record ids are prefixed "conjugate." and "symmetrization.".
/// Throws PreconditionError when the space itself fails check_axioms.
VerificationReport check_derived_lemma(const Space& space, const CheckStrategy& strategy);

} // namespace pqmet
