#include "bkplan/datalog/program.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "bkplan/util/errors.h"
#include "bkplan/util/text.h"

namespace bkplan::datalog {

PredId PredTable::declare(const std::string &name, std::size_t arity) {
    PredId existing = names_.lookup(name);
    if (existing != kNoId) {
        if (arities_[existing] != arity)
            throw ValidationError("predicate " + name + " used with arity " +
                                  std::to_string(arity) + " but declared with " +
                                  std::to_string(arities_[existing]));
        return existing;
    }
    PredId id = names_.intern(name);
    arities_.push_back(arity);
    return id;
}

PredId PredTable::lookup(const std::string &name) const {
    return names_.lookup(name);
}

std::string DatalogProgram::literal_text(const Literal &lit,
                                         const Rule &rule) const {
    std::string out = lit.negated ? "not " : "";
    out += predicates.name(lit.predicate);
    if (!lit.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < lit.args.size(); ++i) {
            if (i) out += ',';
            const RuleTerm &t = lit.args[i];
            out += t.is_variable ? rule.variable_names[t.index]
                                 : "$" + std::to_string(t.index);
        }
        out += ')';
    }
    return out;
}

std::string DatalogProgram::rule_text(const Rule &rule) const {
    std::string out = literal_text(rule.head, rule);
    out += " :- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
        if (i) out += ", ";
        out += literal_text(rule.body[i], rule);
    }
    out += ".";
    return out;
}

void check_safety(const DatalogProgram &program, const Rule &rule) {
    std::set<VarId> positive_vars;
    for (const Literal &lit : rule.body) {
        if (lit.negated) continue;
        for (const RuleTerm &t : lit.args)
            if (t.is_variable) positive_vars.insert(t.index);
    }
    auto check = [&](const Literal &lit, const char *where) {
        for (const RuleTerm &t : lit.args) {
            if (t.is_variable && !positive_vars.count(t.index))
                throw ValidationError(
                    "unsafe rule (" + std::string(where) + " variable " +
                    rule.variable_names[t.index] +
                    " not bound by a positive body literal): " +
                    program.rule_text(rule));
        }
    };
    check(rule.head, "head");
    for (const Literal &lit : rule.body)
        if (lit.negated) check(lit, "negated");
}

namespace {

// Tarjan SCC over the predicate dependency graph.
struct SccState {
    std::vector<std::vector<std::pair<PredId, bool>>> edges; // (target, negated)
    std::vector<int> index, low, component;
    std::vector<bool> on_stack;
    std::vector<PredId> stack;
    int counter = 0;
    int components = 0;

    void strongconnect(PredId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (const auto &[w, neg] : edges[v]) {
            if (index[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                PredId w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component[w] = components;
                if (w == v) break;
            }
            ++components;
        }
    }
};

std::vector<std::string> find_negative_cycle(const DatalogProgram &program,
                                             const SccState &scc, PredId from,
                                             PredId to) {
    // A negative edge from->to inside one SCC; recover a path to->...->from
    // within the component by BFS, then close it with the negative edge.
    std::vector<PredId> parent(program.predicates.size(), kNoId);
    std::vector<PredId> queue{to};
    std::vector<bool> seen(program.predicates.size(), false);
    seen[to] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        PredId v = queue[qi];
        if (v == from) break;
        for (const auto &[w, neg] : scc.edges[v]) {
            if (scc.component[w] != scc.component[to] || seen[w]) continue;
            seen[w] = true;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<std::string> cycle;
    PredId v = from;
    while (v != kNoId && v != to) {
        cycle.push_back(program.predicates.name(v));
        v = parent[v];
    }
    cycle.push_back(program.predicates.name(to));
    std::reverse(cycle.begin(), cycle.end());
    // cycle = to -> ... -> from; the closing edge from -> to is the negation.
    cycle.push_back(program.predicates.name(to));
    return cycle;
}

} // namespace

void stratify(DatalogProgram &program) {
    const std::size_t n = program.predicates.size();
    SccState scc;
    scc.edges.resize(n);
    scc.index.assign(n, -1);
    scc.low.assign(n, 0);
    scc.component.assign(n, -1);
    scc.on_stack.assign(n, false);

    // head depends on each body predicate
    for (const Rule &rule : program.rules)
        for (const Literal &lit : rule.body)
            scc.edges[rule.head.predicate].emplace_back(lit.predicate, lit.negated);

    for (PredId p = 0; p < n; ++p)
        if (scc.index[p] < 0) scc.strongconnect(p);

    // A negative edge inside one SCC breaks stratifiability.
    for (PredId p = 0; p < n; ++p)
        for (const auto &[q, neg] : scc.edges[p])
            if (neg && scc.component[p] == scc.component[q])
                throw NotStratifiableError(
                    "program is not stratifiable: negation through predicate " +
                        program.predicates.name(q),
                    find_negative_cycle(program, scc, p, q));

    // Minimal levels: longest negative-edge count along any dependency chain.
    // Tarjan numbers components in reverse topological order, so ascending
    // component id is a valid evaluation order for dependencies.
    std::vector<int> comp_level(scc.components, 0);
    std::vector<std::vector<std::pair<int, bool>>> comp_edges(scc.components);
    for (PredId p = 0; p < n; ++p)
        for (const auto &[q, neg] : scc.edges[p])
            if (scc.component[p] != scc.component[q])
                comp_edges[scc.component[p]].emplace_back(scc.component[q], neg);

    for (int c = 0; c < scc.components; ++c)
        for (const auto &[d, neg] : comp_edges[c])
            comp_level[c] = std::max(comp_level[c], comp_level[d] + (neg ? 1 : 0));

    program.strata.assign(n, 0);
    int max_level = 0;
    for (PredId p = 0; p < n; ++p) {
        program.strata[p] = comp_level[scc.component[p]];
        max_level = std::max(max_level, program.strata[p]);
    }
    program.stratum_count = max_level + 1;
}

namespace {

struct RuleCursor {
    const std::string &text;
    std::size_t pos = 0;
    int line = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') ++line;
        ++pos;
    }
    void skip_blank() {
        while (!eof()) {
            if (peek() == '%') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else {
                break;
            }
        }
    }
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, line, 1);
    }
};

std::string read_name(RuleCursor &cur) {
    std::string out;
    while (!cur.eof()) {
        char c = cur.peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            out += c;
            cur.advance();
        } else {
            break;
        }
    }
    if (out.empty()) cur.fail("expected an identifier");
    return out;
}

Literal read_literal(RuleCursor &cur, PredTable &predicates,
                     model::SymbolTable &constants,
                     std::unordered_map<std::string, VarId> &vars,
                     std::vector<std::string> &var_names) {
    cur.skip_blank();
    Literal lit;
    std::string name = read_name(cur);
    if (name == "not") {
        lit.negated = true;
        cur.skip_blank();
        name = read_name(cur);
    }
    if (std::isupper(static_cast<unsigned char>(name[0])))
        cur.fail("predicate names must start lowercase: " + name);
    cur.skip_blank();
    if (!cur.eof() && cur.peek() == '(') {
        cur.advance();
        while (true) {
            cur.skip_blank();
            std::string term = read_name(cur);
            if (std::isupper(static_cast<unsigned char>(term[0]))) {
                auto [it, inserted] =
                    vars.emplace(term, static_cast<VarId>(var_names.size()));
                if (inserted) var_names.push_back(term);
                lit.args.push_back({true, it->second});
            } else {
                lit.args.push_back({false, constants.intern(term)});
            }
            cur.skip_blank();
            if (!cur.eof() && cur.peek() == ',') {
                cur.advance();
                continue;
            }
            if (!cur.eof() && cur.peek() == ')') {
                cur.advance();
                break;
            }
            cur.fail("expected ',' or ')' in argument list");
        }
    }
    lit.predicate = predicates.declare(name, lit.args.size());
    return lit;
}

} // namespace

ParsedRuleFile parse_rules(const std::string &text, PredTable &predicates,
                           model::SymbolTable &constants) {
    ParsedRuleFile out;
    RuleCursor cur{text};
    while (true) {
        cur.skip_blank();
        if (cur.eof()) break;
        Rule rule;
        std::unordered_map<std::string, VarId> vars;
        rule.head = read_literal(cur, predicates, constants, vars,
                                 rule.variable_names);
        if (rule.head.negated) cur.fail("rule head cannot be negated");
        cur.skip_blank();
        bool pre_marked = false;
        if (!cur.eof() && cur.peek() == ':') {
            cur.advance();
            if (cur.eof() || cur.peek() != '-') cur.fail("expected ':-'");
            cur.advance();
            // ':-pre' marker: must directly follow ':-' and end the token.
            if (cur.text.compare(cur.pos, 3, "pre") == 0 &&
                (cur.pos + 3 >= cur.text.size() ||
                 (!std::isalnum(static_cast<unsigned char>(cur.text[cur.pos + 3])) &&
                  cur.text[cur.pos + 3] != '_' && cur.text[cur.pos + 3] != '('))) {
                cur.advance();
                cur.advance();
                cur.advance();
                pre_marked = true;
            }
            while (true) {
                cur.skip_blank();
                if (!cur.eof() && cur.peek() == '.') break; // empty or done
                rule.body.push_back(read_literal(cur, predicates, constants, vars,
                                                 rule.variable_names));
                cur.skip_blank();
                if (!cur.eof() && cur.peek() == ',') {
                    cur.advance();
                    continue;
                }
                break;
            }
        }
        cur.skip_blank();
        if (cur.eof() || cur.peek() != '.') cur.fail("expected '.' ending the rule");
        cur.advance();
        out.rules.push_back(std::move(rule));
        out.pre_marked.push_back(pre_marked);
    }
    return out;
}

} // namespace bkplan::datalog
