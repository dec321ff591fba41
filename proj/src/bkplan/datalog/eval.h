#pragma once

#include <functional>

#include "bkplan/datalog/factset.h"

namespace bkplan::datalog {

struct EvalLimits {
    std::size_t max_atoms = 10'000'000; // derived-atom cap
};

// Bottom-up canonical model: per stratum, least fixpoint by semi-naive
// iteration with delta relations; negation reads the completed lower strata.
// The program must be stratified (stratify() was run). The result extends
// `facts` and is closed under all rules.
FactSet canonical_model(const DatalogProgram &program, const FactSet &facts,
                        const EvalLimits &limits = {});

// Enumerates every substitution v (indexed by rule-local VarId) with
// model |= v(body(rule)). Used for grounding parameterized rules over a
// completed model; `model` must already be a fixpoint for negation to be
// meaningful. Substitutions arrive in a deterministic order.
using SubstitutionCallback = std::function<void(const Tuple &assignment)>;
void for_each_body_match(const Rule &rule, const FactSet &model,
                         const SubstitutionCallback &callback);

} // namespace bkplan::datalog
