#pragma once

#include <unordered_map>
#include <vector>

#include "bkplan/model/model.h"

namespace bkplan::model {

// All type-respecting instantiations of every schema. Ordering is fixed:
// schemata by name, bindings lexicographically by object name. Downstream
// tie-breaking ("arbitrarily" in the execution protocols) leans on this.
struct GroundedActions {
    std::vector<GroundAction> actions;
    // action-head ground atom (interned in the task) -> index into actions
    std::unordered_map<AtomId, std::size_t> by_head_atom;
    // Head atoms use these per-schema predicates, interned alongside the
    // task's regular atoms; ids are disjoint from domain predicates.
    std::vector<AtomId> head_atoms; // parallel to actions
};

class ActionHeadSpace {
public:
    // Registers one head predicate per schema in a private namespace so head
    // atoms can be interned in the task's atom table without clashing with
    // state atoms. Head predicate id = domain predicate count + schema id.
    static PredicateId head_predicate(const Domain &domain, SchemaId schema) {
        return static_cast<PredicateId>(domain.predicates.size()) + schema;
    }
};

GroundedActions ground_actions(LiftedTask &task);

} // namespace bkplan::model
