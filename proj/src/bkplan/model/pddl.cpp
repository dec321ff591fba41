#include "bkplan/model/pddl.h"

#include <fstream>
#include <set>
#include <sstream>

#include "bkplan/model/sexpr.h"

namespace bkplan::model {

namespace {

const std::set<std::string> kSupportedRequirements = {
    ":strips", ":typing", ":negative-preconditions"};

struct TypedEntry {
    std::string name;
    std::string type; // empty means unspecified -> object
    int line = 0;
    int column = 0;
};

// Parses PDDL typed lists: "a b - t c d" -> [(a,t),(b,t),(c,),(d,)].
std::vector<TypedEntry> parse_typed_list(const Sexpr &list, std::size_t from) {
    std::vector<TypedEntry> out;
    std::vector<TypedEntry> pending;
    for (std::size_t i = from; i < list.size(); ++i) {
        const Sexpr &item = list.at(i);
        if (!item.is_atom) throw item.error("expected a symbol in typed list");
        if (item.atom == "-") {
            const Sexpr &type = list.at(++i);
            if (!type.is_atom) throw type.error("expected a type name after '-'");
            for (auto &entry : pending) entry.type = type.atom;
            out.insert(out.end(), pending.begin(), pending.end());
            pending.clear();
        } else {
            pending.push_back({item.atom, "", item.line, item.column});
        }
    }
    out.insert(out.end(), pending.begin(), pending.end());
    return out;
}

TypeId resolve_type(const Domain &domain, const TypedEntry &entry) {
    if (entry.type.empty()) return domain.object_type();
    Id id = domain.types.lookup(entry.type);
    if (id == kNoId)
        throw ParseError("undeclared type: " + entry.type, entry.line,
                         entry.column);
    return id;
}

AtomicFormula parse_formula(const Sexpr &expr, const Domain &domain,
                            const std::unordered_map<std::string, Id> &vars) {
    if (expr.is_atom || expr.size() == 0 || !expr.at(0).is_atom)
        throw expr.error("expected an atomic formula");
    const std::string &pname = expr.at(0).atom;
    Id pred = domain.predicate_names.lookup(pname);
    if (pred == kNoId)
        throw ParseError("undeclared predicate: " + pname, expr.line, expr.column);
    AtomicFormula formula;
    formula.predicate = pred;
    for (std::size_t i = 1; i < expr.size(); ++i) {
        const Sexpr &arg = expr.at(i);
        if (!arg.is_atom) throw arg.error("expected a term");
        if (!arg.atom.empty() && arg.atom[0] == '?') {
            auto it = vars.find(arg.atom);
            if (it == vars.end())
                throw ParseError("unbound variable " + arg.atom + " in " + pname,
                                 arg.line, arg.column);
            formula.args.push_back(Term::variable(it->second));
        } else {
            throw ParseError("constants in schema formulas are not supported: " +
                                 arg.atom,
                             arg.line, arg.column);
        }
    }
    if (formula.args.size() != domain.predicates[pred].arity())
        throw ParseError("arity mismatch for predicate " + pname + ": expected " +
                             std::to_string(domain.predicates[pred].arity()),
                         expr.line, expr.column);
    return formula;
}

// Collects "(and ...)" / single literal into positive and negative atom lists.
void parse_condition(const Sexpr &expr, const Domain &domain,
                     const std::unordered_map<std::string, Id> &vars,
                     std::vector<AtomicFormula> &pos,
                     std::vector<AtomicFormula> &neg, bool allow_negative) {
    if (expr.head_is("and")) {
        for (std::size_t i = 1; i < expr.size(); ++i)
            parse_condition(expr.at(i), domain, vars, pos, neg, allow_negative);
        return;
    }
    if (expr.head_is("not")) {
        if (!allow_negative)
            throw expr.error("negation is not allowed here");
        if (expr.size() != 2) throw expr.error("'not' takes exactly one formula");
        neg.push_back(parse_formula(expr.at(1), domain, vars));
        return;
    }
    pos.push_back(parse_formula(expr, domain, vars));
}

void check_schema_types(const Domain &domain, const ActionSchema &schema,
                        const AtomicFormula &formula) {
    const Predicate &pred = domain.predicates[formula.predicate];
    for (std::size_t i = 0; i < formula.args.size(); ++i) {
        const Term &t = formula.args[i];
        if (!t.is_variable) continue;
        TypeId var_type = schema.variables[t.index].type;
        if (!domain.is_subtype(var_type, pred.param_types[i]))
            throw ValidationError("type mismatch in schema " + schema.name +
                                  ": argument " + std::to_string(i + 1) + " of " +
                                  pred.name);
    }
}

ActionSchema parse_action(const Sexpr &expr, const Domain &domain) {
    ActionSchema schema;
    if (expr.size() < 2 || !expr.at(1).is_atom)
        throw expr.error("expected an action name");
    schema.name = expr.at(1).atom;

    std::unordered_map<std::string, Id> vars;
    std::size_t i = 2;
    while (i < expr.size()) {
        const Sexpr &key = expr.at(i);
        if (!key.is_atom) throw key.error("expected an :action keyword");
        if (key.atom == ":parameters") {
            const Sexpr &params = expr.at(i + 1);
            for (const TypedEntry &entry : parse_typed_list(params, 0)) {
                if (entry.name.empty() || entry.name[0] != '?')
                    throw ParseError("parameter must start with '?': " + entry.name,
                                     entry.line, entry.column);
                if (vars.count(entry.name))
                    throw ParseError("duplicate parameter " + entry.name, entry.line,
                                     entry.column);
                vars.emplace(entry.name, static_cast<Id>(schema.variables.size()));
                schema.variables.push_back({entry.name, resolve_type(domain, entry)});
            }
        } else if (key.atom == ":precondition") {
            parse_condition(expr.at(i + 1), domain, vars, schema.pre,
                            schema.pre_neg, true);
        } else if (key.atom == ":effect") {
            parse_condition(expr.at(i + 1), domain, vars, schema.add, schema.del,
                            true);
        } else {
            throw UnsupportedRequirementError(key.atom);
        }
        i += 2;
    }
    for (const auto &f : schema.pre) check_schema_types(domain, schema, f);
    for (const auto &f : schema.pre_neg) check_schema_types(domain, schema, f);
    for (const auto &f : schema.add) check_schema_types(domain, schema, f);
    for (const auto &f : schema.del) check_schema_types(domain, schema, f);
    return schema;
}

} // namespace

Domain parse_domain(const std::string &text) {
    Sexpr root = parse_sexpr(text);
    if (!root.head_is("define")) throw root.error("expected (define (domain ...))");
    const Sexpr &header = root.at(1);
    if (!header.head_is("domain") || header.size() != 2)
        throw header.error("expected (domain NAME)");

    Domain domain;
    domain.name = header.at(1).atom;
    domain.types.intern("object");
    domain.type_parent.push_back(0);

    for (std::size_t i = 2; i < root.size(); ++i) {
        const Sexpr &section = root.at(i);
        if (section.head_is(":requirements")) {
            for (std::size_t j = 1; j < section.size(); ++j) {
                const std::string &req = section.at(j).atom;
                if (!kSupportedRequirements.count(req))
                    throw UnsupportedRequirementError(req);
            }
        } else if (section.head_is(":types")) {
            // Two passes so forward references to sibling types resolve.
            auto entries = parse_typed_list(section, 1);
            for (const auto &entry : entries) {
                if (domain.types.contains(entry.name))
                    throw ParseError("duplicate type: " + entry.name, entry.line,
                                     entry.column);
                domain.types.intern(entry.name);
                domain.type_parent.push_back(0);
            }
            for (const auto &entry : entries) {
                if (entry.type.empty()) continue;
                Id parent = domain.types.lookup(entry.type);
                if (parent == kNoId) {
                    parent = domain.types.intern(entry.type);
                    domain.type_parent.push_back(0);
                }
                domain.type_parent[domain.types.lookup(entry.name)] = parent;
            }
        } else if (section.head_is(":constants")) {
            for (const auto &entry : parse_typed_list(section, 1))
                domain.constants.emplace_back(entry.name,
                                              resolve_type(domain, entry));
        } else if (section.head_is(":predicates")) {
            for (std::size_t j = 1; j < section.size(); ++j) {
                const Sexpr &p = section.at(j);
                if (p.is_atom || p.size() == 0 || !p.at(0).is_atom)
                    throw p.error("expected (name ?params...)");
                const std::string &pname = p.at(0).atom;
                if (domain.predicate_names.contains(pname))
                    throw p.error("duplicate predicate: " + pname);
                Predicate pred;
                pred.name = pname;
                for (const auto &entry : parse_typed_list(p, 1))
                    pred.param_types.push_back(resolve_type(domain, entry));
                domain.predicate_names.intern(pname);
                domain.predicates.push_back(std::move(pred));
            }
        } else if (section.head_is(":action")) {
            ActionSchema schema = parse_action(section, domain);
            if (domain.schema_names.contains(schema.name))
                throw section.error("duplicate action: " + schema.name);
            domain.schema_names.intern(schema.name);
            domain.schemata.push_back(std::move(schema));
        } else if (!section.is_atom && section.size() > 0 &&
                   section.at(0).is_atom) {
            throw UnsupportedRequirementError(section.at(0).atom);
        } else {
            throw section.error("unexpected domain section");
        }
    }
    return domain;
}

namespace {

AtomId intern_ground(LiftedTask &task, const Sexpr &expr) {
    const Domain &domain = task.domain();
    if (expr.is_atom || expr.size() == 0 || !expr.at(0).is_atom)
        throw expr.error("expected a ground atom");
    const std::string &pname = expr.at(0).atom;
    Id pred = domain.predicate_names.lookup(pname);
    if (pred == kNoId)
        throw ParseError("undeclared predicate: " + pname, expr.line, expr.column);
    const Predicate &predicate = domain.predicates[pred];
    std::vector<ObjectId> args;
    for (std::size_t i = 1; i < expr.size(); ++i) {
        const Sexpr &arg = expr.at(i);
        if (!arg.is_atom || (!arg.atom.empty() && arg.atom[0] == '?'))
            throw arg.error("expected an object name");
        Id obj = task.object_id(arg.atom);
        args.push_back(obj);
    }
    if (args.size() != predicate.arity())
        throw ParseError("arity mismatch for " + pname, expr.line, expr.column);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!domain.is_subtype(task.object_type(args[i]), predicate.param_types[i]))
            throw ValidationError("object " + task.object_name(args[i]) +
                                  " has the wrong type for " + pname);
    }
    return task.intern_atom(pred, std::move(args));
}

void collect_goal(const Sexpr &expr, LiftedTask &task, State &goal) {
    if (expr.head_is("and")) {
        for (std::size_t i = 1; i < expr.size(); ++i)
            collect_goal(expr.at(i), task, goal);
        return;
    }
    if (expr.head_is("not"))
        throw expr.error("negated goal atoms are not supported");
    goal.push_back(intern_ground(task, expr));
}

} // namespace

std::unique_ptr<LiftedTask> parse_problem(const std::string &text,
                                          const Domain &domain) {
    Sexpr root = parse_sexpr(text);
    if (!root.head_is("define"))
        throw root.error("expected (define (problem ...))");
    const Sexpr &header = root.at(1);
    if (!header.head_is("problem") || header.size() != 2)
        throw header.error("expected (problem NAME)");

    auto task = std::make_unique<LiftedTask>(domain, header.at(1).atom);
    bool saw_goal = false;
    for (std::size_t i = 2; i < root.size(); ++i) {
        const Sexpr &section = root.at(i);
        if (section.head_is(":domain")) {
            if (section.at(1).atom != domain.name)
                throw section.error("problem references domain '" +
                                    section.at(1).atom + "' but '" + domain.name +
                                    "' was loaded");
        } else if (section.head_is(":objects")) {
            for (const auto &entry : parse_typed_list(section, 1)) {
                TypeId type = resolve_type(domain, entry);
                task->add_object(entry.name, type);
            }
        } else if (section.head_is(":init")) {
            for (std::size_t j = 1; j < section.size(); ++j)
                task->initial_state().push_back(intern_ground(*task, section.at(j)));
        } else if (section.head_is(":goal")) {
            if (section.size() != 2) throw section.error("goal takes one formula");
            collect_goal(section.at(1), *task, task->goal());
            saw_goal = true;
        } else if (!section.is_atom && section.size() > 0 && section.at(0).is_atom) {
            throw UnsupportedRequirementError(section.at(0).atom);
        } else {
            throw section.error("unexpected problem section");
        }
    }
    if (!saw_goal) throw root.error("problem has no :goal section");
    sort_unique(task->initial_state());
    sort_unique(task->goal());
    return task;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

Domain parse_domain_file(const std::string &path) {
    return parse_domain(read_file(path));
}

std::unique_ptr<LiftedTask> parse_problem_file(const std::string &path,
                                               const Domain &domain) {
    return parse_problem(read_file(path), domain);
}

namespace {

std::string formula_text(const Domain &domain, const ActionSchema &schema,
                         const AtomicFormula &f, bool negated) {
    std::string out = negated ? "(not (" : "(";
    out += domain.predicates[f.predicate].name;
    for (const Term &t : f.args) {
        out += " ";
        out += t.is_variable ? schema.variables[t.index].name
                             : "<const>"; // schema constants rejected at parse
    }
    out += negated ? "))" : ")";
    return out;
}

} // namespace

std::string pretty_print(const Domain &domain) {
    std::ostringstream out;
    out << "(define (domain " << domain.name << ")\n";
    out << "  (:requirements :strips :typing :negative-preconditions)\n";
    if (domain.types.size() > 1) {
        out << "  (:types";
        for (Id t = 1; t < domain.types.size(); ++t) {
            out << " " << domain.types.name(t);
            if (domain.type_parent[t] != domain.object_type())
                out << " - " << domain.types.name(domain.type_parent[t]);
        }
        out << ")\n";
    }
    if (!domain.constants.empty()) {
        out << "  (:constants";
        for (const auto &[name, type] : domain.constants)
            out << " " << name << " - " << domain.types.name(type);
        out << ")\n";
    }
    out << "  (:predicates";
    for (const Predicate &p : domain.predicates) {
        out << "\n    (" << p.name;
        for (std::size_t i = 0; i < p.arity(); ++i)
            out << " ?x" << i + 1 << " - " << domain.types.name(p.param_types[i]);
        out << ")";
    }
    out << ")\n";
    for (const ActionSchema &schema : domain.schemata) {
        out << "  (:action " << schema.name << "\n    :parameters (";
        for (std::size_t i = 0; i < schema.variables.size(); ++i) {
            if (i) out << " ";
            out << schema.variables[i].name << " - "
                << domain.types.name(schema.variables[i].type);
        }
        out << ")\n    :precondition (and";
        for (const auto &f : schema.pre)
            out << " " << formula_text(domain, schema, f, false);
        for (const auto &f : schema.pre_neg)
            out << " " << formula_text(domain, schema, f, true);
        out << ")\n    :effect (and";
        for (const auto &f : schema.add)
            out << " " << formula_text(domain, schema, f, false);
        for (const auto &f : schema.del)
            out << " " << formula_text(domain, schema, f, true);
        out << "))\n";
    }
    out << ")\n";
    return out.str();
}

std::string pretty_print(const LiftedTask &task) {
    const Domain &domain = task.domain();
    std::ostringstream out;
    out << "(define (problem " << task.name() << ")\n  (:domain " << domain.name
        << ")\n  (:objects";
    for (ObjectId o = 0; o < task.object_count(); ++o) {
        bool is_constant = o < domain.constants.size();
        if (is_constant) continue; // re-declared by the domain
        out << " " << task.object_name(o) << " - "
            << domain.types.name(task.object_type(o));
    }
    out << ")\n  (:init";
    for (AtomId id : task.initial_state()) {
        const GroundAtomData &a = task.atom(id);
        out << " (" << domain.predicates[a.predicate].name;
        for (ObjectId arg : a.args) out << " " << task.object_name(arg);
        out << ")";
    }
    out << ")\n  (:goal (and";
    for (AtomId id : task.goal()) {
        const GroundAtomData &a = task.atom(id);
        out << " (" << domain.predicates[a.predicate].name;
        for (ObjectId arg : a.args) out << " " << task.object_name(arg);
        out << ")";
    }
    out << ")))\n";
    return out.str();
}

} // namespace bkplan::model
