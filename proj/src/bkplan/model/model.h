#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bkplan/model/symbols.h"

namespace bkplan::model {

using TypeId = Id;
using PredicateId = Id;
using ObjectId = Id;
using SchemaId = Id;
using AtomId = Id;

struct Predicate {
    std::string name;
    std::vector<TypeId> param_types;
    std::size_t arity() const { return param_types.size(); }
};

// A term of an atomic formula: either a schema variable (by index into the
// schema's variable list) or a constant object.
struct Term {
    bool is_variable = false;
    Id index = 0; // variable index or ObjectId

    static Term variable(Id v) { return {true, v}; }
    static Term object(ObjectId o) { return {false, o}; }
    bool operator==(const Term &other) const = default;
};

struct AtomicFormula {
    PredicateId predicate = kNoId;
    std::vector<Term> args;
    bool operator==(const AtomicFormula &other) const = default;
};

struct SchemaVariable {
    std::string name; // "?x"
    TypeId type = kNoId;
};

struct ActionSchema {
    std::string name;
    std::vector<SchemaVariable> variables;
    std::vector<AtomicFormula> pre;     // positive preconditions
    std::vector<AtomicFormula> pre_neg; // negative preconditions
    std::vector<AtomicFormula> add;
    std::vector<AtomicFormula> del;
};

struct Domain {
    std::string name;
    SymbolTable types; // index 0 is always "object"
    std::vector<TypeId> type_parent;
    SymbolTable predicate_names;
    std::vector<Predicate> predicates;
    SymbolTable schema_names;
    std::vector<ActionSchema> schemata;
    std::vector<std::pair<std::string, TypeId>> constants;

    TypeId object_type() const { return 0; }
    bool is_subtype(TypeId t, TypeId ancestor) const;
    PredicateId predicate_id(const std::string &name) const {
        return predicate_names.require(name, "predicate");
    }
    SchemaId schema_id(const std::string &name) const {
        return schema_names.require(name, "action schema");
    }
};

// Ground atoms are interned per task; a State is a sorted id set, so set
// operations and hashing stay cheap.
struct GroundAtomData {
    PredicateId predicate;
    std::vector<ObjectId> args;
    bool operator==(const GroundAtomData &other) const = default;
};

struct GroundAtomHash {
    std::size_t operator()(const GroundAtomData &a) const;
};

using State = std::vector<AtomId>; // strictly increasing ids

struct StateHash {
    std::size_t operator()(const State &s) const;
};

struct GroundAction {
    SchemaId schema = kNoId;
    std::vector<ObjectId> binding;
    std::vector<AtomId> pre;
    std::vector<AtomId> pre_neg;
    std::vector<AtomId> add;
    std::vector<AtomId> del;
};

class LiftedTask {
public:
    LiftedTask(const Domain &domain, std::string name);

    const Domain &domain() const { return *domain_; }
    const std::string &name() const { return name_; }

    ObjectId add_object(const std::string &name, TypeId type);
    ObjectId object_id(const std::string &name) const {
        return objects_.require(name, "object");
    }
    const std::string &object_name(ObjectId o) const { return objects_.name(o); }
    TypeId object_type(ObjectId o) const { return object_types_[o]; }
    std::size_t object_count() const { return objects_.size(); }

    AtomId intern_atom(PredicateId pred, std::vector<ObjectId> args);
    AtomId lookup_atom(PredicateId pred, const std::vector<ObjectId> &args) const;
    const GroundAtomData &atom(AtomId id) const { return atoms_[id]; }
    std::size_t atom_count() const { return atoms_.size(); }
    std::string atom_text(AtomId id) const;

    State &initial_state() { return initial_state_; }
    const State &initial_state() const { return initial_state_; }
    State &goal() { return goal_; }
    const State &goal() const { return goal_; }

    // Objects of a type (including subtypes), in insertion order.
    std::vector<ObjectId> objects_of_type(TypeId type) const;

private:
    const Domain *domain_;
    std::string name_;
    SymbolTable objects_;
    std::vector<TypeId> object_types_;
    std::vector<GroundAtomData> atoms_;
    std::unordered_map<GroundAtomData, AtomId, GroundAtomHash> atom_ids_;
    State initial_state_;
    State goal_;
};

// Transition semantics.
bool applicable(const GroundAction &action, const State &state);
State apply(const GroundAction &action, const State &state); // throws InapplicableActionError
bool is_goal(const State &state, const State &goal);

// Set helpers over sorted id vectors.
bool sorted_subset(const std::vector<Id> &sub, const std::vector<Id> &super);
bool sorted_disjoint(const std::vector<Id> &a, const std::vector<Id> &b);
void sort_unique(std::vector<Id> &ids);

std::string action_text(const LiftedTask &task, const GroundAction &action);

} // namespace bkplan::model
