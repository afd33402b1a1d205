#pragma once

#include <string>

#include "pqmet/axioms.hpp"
#include "pqmet/completeness.hpp"
#include "pqmet/kannan.hpp"
#include "pqmet/oracle.hpp"
#include "pqmet/report.hpp"
#include "pqmet/solver.hpp"

namespace pqmet {

// JSON documents with sorted keys; identical inputs serialize to identical
// bytes. Points render as integers (finite indices) or numbers (coordinates).

std::string to_json(const VerificationReport& report);
std::string to_json(const StructureClassification& classification);
std::string to_json(const LambdaEstimate& estimate);
std::string to_json(const FixedPointResult& result, Termination terminated_by);
std::string to_json(const UniquenessProbe& probe);
std::string to_json(const SequenceClassification& classification);
std::string to_json(const CompletenessReport& report);
std::string to_json(const FiniteAudit& audit);

/// Delimited trace rows: header "iter,point,step_p_plus,self_p".
std::string to_csv(const IterationTrace& trace);

} // namespace pqmet
