#include "bkplan/model/grounding.h"

#include <algorithm>

namespace bkplan::model {

namespace {

std::vector<AtomId> instantiate(LiftedTask &task,
                                const std::vector<AtomicFormula> &formulas,
                                const std::vector<ObjectId> &binding) {
    std::vector<AtomId> out;
    out.reserve(formulas.size());
    for (const AtomicFormula &f : formulas) {
        std::vector<ObjectId> args;
        args.reserve(f.args.size());
        for (const Term &t : f.args)
            args.push_back(t.is_variable ? binding[t.index] : t.index);
        out.push_back(task.intern_atom(f.predicate, std::move(args)));
    }
    sort_unique(out);
    return out;
}

} // namespace

GroundedActions ground_actions(LiftedTask &task) {
    const Domain &domain = task.domain();
    GroundedActions result;

    std::vector<SchemaId> schema_order(domain.schemata.size());
    for (SchemaId s = 0; s < schema_order.size(); ++s) schema_order[s] = s;
    std::sort(schema_order.begin(), schema_order.end(), [&](SchemaId a, SchemaId b) {
        return domain.schemata[a].name < domain.schemata[b].name;
    });

    for (SchemaId schema_id : schema_order) {
        const ActionSchema &schema = domain.schemata[schema_id];
        // Candidate objects per parameter, sorted by name for a stable order.
        std::vector<std::vector<ObjectId>> candidates(schema.variables.size());
        bool feasible = true;
        for (std::size_t v = 0; v < schema.variables.size(); ++v) {
            candidates[v] = task.objects_of_type(schema.variables[v].type);
            std::sort(candidates[v].begin(), candidates[v].end(),
                      [&](ObjectId a, ObjectId b) {
                          return task.object_name(a) < task.object_name(b);
                      });
            if (candidates[v].empty()) feasible = false;
        }
        if (!feasible && !schema.variables.empty()) continue;

        std::vector<ObjectId> binding(schema.variables.size());
        std::vector<std::size_t> cursor(schema.variables.size(), 0);
        while (true) {
            for (std::size_t v = 0; v < binding.size(); ++v)
                binding[v] = candidates[v][cursor[v]];

            GroundAction action;
            action.schema = schema_id;
            action.binding = binding;
            action.pre = instantiate(task, schema.pre, binding);
            action.pre_neg = instantiate(task, schema.pre_neg, binding);
            action.add = instantiate(task, schema.add, binding);
            action.del = instantiate(task, schema.del, binding);

            AtomId head = task.intern_atom(
                ActionHeadSpace::head_predicate(domain, schema_id), binding);
            result.by_head_atom.emplace(head, result.actions.size());
            result.head_atoms.push_back(head);
            result.actions.push_back(std::move(action));

            if (binding.empty()) break; // nullary schema: one instantiation
            // Advance the rightmost position (lexicographic odometer).
            std::size_t v = binding.size();
            bool wrapped = true;
            while (v > 0) {
                --v;
                if (++cursor[v] < candidates[v].size()) {
                    wrapped = false;
                    break;
                }
                cursor[v] = 0;
            }
            if (wrapped) break;
        }
    }
    return result;
}

} // namespace bkplan::model
