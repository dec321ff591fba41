#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bkplan/model/symbols.h"

namespace bkplan::datalog {

using Id = model::Id;
using PredId = Id;
using ConstId = Id;
using VarId = Id;
constexpr Id kNoId = model::kNoId;

// Predicate vocabulary of a program. Constants live in a separate table that
// callers populate (planning tasks reuse their object table).
class PredTable {
public:
    PredId declare(const std::string &name, std::size_t arity);
    PredId lookup(const std::string &name) const;
    const std::string &name(PredId p) const { return names_.name(p); }
    std::size_t arity(PredId p) const { return arities_[p]; }
    std::size_t size() const { return arities_.size(); }

private:
    model::SymbolTable names_;
    std::vector<std::size_t> arities_;
};

// A term in a rule: variable (rule-local index) or constant.
struct RuleTerm {
    bool is_variable = false;
    Id index = 0;
    bool operator==(const RuleTerm &other) const = default;
};

struct Literal {
    PredId predicate = kNoId;
    std::vector<RuleTerm> args;
    bool negated = false;
    bool operator==(const Literal &other) const = default;
};

struct Rule {
    Literal head; // never negated
    std::vector<Literal> body;
    std::vector<std::string> variable_names; // rule-local, index = VarId
    std::size_t variable_count() const { return variable_names.size(); }
    bool operator==(const Rule &other) const = default;
};

struct DatalogProgram {
    PredTable predicates;
    std::vector<Rule> rules;
    std::vector<int> strata; // per predicate, filled by stratify()
    int stratum_count = 0;

    std::string rule_text(const Rule &rule) const;
    std::string literal_text(const Literal &lit, const Rule &rule) const;
};

// Range restriction: every head variable and every variable of a negated
// literal must occur in some positive body literal. Throws ValidationError.
void check_safety(const DatalogProgram &program, const Rule &rule);

// Minimal stratification via SCC condensation of the predicate dependency
// graph. Fills program.strata; throws NotStratifiableError with one
// negative-edge cycle as witness.
void stratify(DatalogProgram &program);

// Rule-file syntax: one rule per line terminated by '.', `%` comments,
// `not ` prefixed literals, uppercase-initial variables. Predicates are
// declared implicitly by use; arities must be consistent.
// `head.` and `head :- .` both denote an empty body.
struct ParsedRuleFile {
    std::vector<Rule> rules;
    std::vector<bool> pre_marked; // true for rules written with `:-pre`
};

ParsedRuleFile parse_rules(const std::string &text, PredTable &predicates,
                           model::SymbolTable &constants);

} // namespace bkplan::datalog
