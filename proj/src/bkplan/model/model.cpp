#include "bkplan/model/model.h"

#include <algorithm>

namespace bkplan::model {

bool Domain::is_subtype(TypeId t, TypeId ancestor) const {
    while (true) {
        if (t == ancestor) return true;
        if (t == object_type()) return false;
        t = type_parent[t];
    }
}

std::size_t GroundAtomHash::operator()(const GroundAtomData &a) const {
    std::size_t h = std::hash<Id>{}(a.predicate);
    for (ObjectId o : a.args)
        h ^= std::hash<Id>{}(o) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::size_t StateHash::operator()(const State &s) const {
    std::size_t h = 1469598103934665603ull;
    for (AtomId id : s) {
        h ^= id;
        h *= 1099511628211ull;
    }
    return h;
}

LiftedTask::LiftedTask(const Domain &domain, std::string name)
    : domain_(&domain), name_(std::move(name)) {
    for (const auto &[cname, ctype] : domain.constants) add_object(cname, ctype);
}

ObjectId LiftedTask::add_object(const std::string &name, TypeId type) {
    if (objects_.contains(name))
        throw ValidationError("duplicate object: " + name);
    ObjectId id = objects_.intern(name);
    object_types_.push_back(type);
    return id;
}

AtomId LiftedTask::intern_atom(PredicateId pred, std::vector<ObjectId> args) {
    GroundAtomData data{pred, std::move(args)};
    auto it = atom_ids_.find(data);
    if (it != atom_ids_.end()) return it->second;
    AtomId id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(data);
    atom_ids_.emplace(std::move(data), id);
    return id;
}

AtomId LiftedTask::lookup_atom(PredicateId pred,
                               const std::vector<ObjectId> &args) const {
    auto it = atom_ids_.find(GroundAtomData{pred, args});
    return it == atom_ids_.end() ? kNoId : it->second;
}

std::string LiftedTask::atom_text(AtomId id) const {
    const GroundAtomData &a = atoms_[id];
    // Predicates beyond the domain's table are schema-head predicates used
    // for ground-action atoms (see ActionHeadSpace).
    std::string out =
        a.predicate < domain_->predicates.size()
            ? domain_->predicates[a.predicate].name
            : domain_->schemata[a.predicate - domain_->predicates.size()].name;
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ',';
        out += objects_.name(a.args[i]);
    }
    out += ')';
    return out;
}

std::vector<ObjectId> LiftedTask::objects_of_type(TypeId type) const {
    std::vector<ObjectId> out;
    for (ObjectId o = 0; o < object_types_.size(); ++o)
        if (domain_->is_subtype(object_types_[o], type)) out.push_back(o);
    return out;
}

bool sorted_subset(const std::vector<Id> &sub, const std::vector<Id> &super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool sorted_disjoint(const std::vector<Id> &a, const std::vector<Id> &b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return false;
    }
    return true;
}

void sort_unique(std::vector<Id> &ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

bool applicable(const GroundAction &action, const State &state) {
    return sorted_subset(action.pre, state) &&
           sorted_disjoint(action.pre_neg, state);
}

State apply(const GroundAction &action, const State &state) {
    if (!applicable(action, state))
        throw InapplicableActionError("action not applicable in state");
    State out;
    out.reserve(state.size() + action.add.size());
    // s \ del
    std::set_difference(state.begin(), state.end(), action.del.begin(),
                        action.del.end(), std::back_inserter(out));
    // ... then union with add
    State result;
    result.reserve(out.size() + action.add.size());
    std::set_union(out.begin(), out.end(), action.add.begin(), action.add.end(),
                   std::back_inserter(result));
    return result;
}

bool is_goal(const State &state, const State &goal) {
    return sorted_subset(goal, state);
}

std::string action_text(const LiftedTask &task, const GroundAction &action) {
    std::string out = "(" + task.domain().schemata[action.schema].name;
    for (ObjectId o : action.binding) out += " " + task.object_name(o);
    out += ")";
    return out;
}

} // namespace bkplan::model
