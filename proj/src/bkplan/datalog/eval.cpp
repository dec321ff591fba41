#include "bkplan/datalog/eval.h"

#include <algorithm>

#include "bkplan/util/errors.h"

namespace bkplan::datalog {

namespace {

constexpr std::size_t kNoLimit = SIZE_MAX;

// Backtracking join over the body's positive literals with index selection
// on bound positions. Row visibility can be limited per predicate (snapshot
// semantics for semi-naive rounds) and one literal can be pinned to a delta
// row range.
struct JoinContext {
    const Rule &rule;
    const FactSet &db;
    const std::vector<std::size_t> *row_limit = nullptr; // per predicate, or null
    std::size_t delta_literal = kNoLimit; // body index evaluated on the delta
    std::size_t delta_begin = 0;
    std::size_t delta_end = 0;

    Tuple assign;
    std::vector<std::size_t> positives;
    std::vector<std::size_t> negatives;
    const SubstitutionCallback *callback = nullptr;

    std::size_t limit_for(PredId p) const {
        std::size_t n = db.relation(p).rows.size();
        if (row_limit) n = std::min(n, (*row_limit)[p]);
        return n;
    }

    bool unify(const Literal &lit, const Tuple &row,
               std::vector<VarId> &newly_bound) {
        for (std::size_t i = 0; i < lit.args.size(); ++i) {
            const RuleTerm &t = lit.args[i];
            if (t.is_variable) {
                if (assign[t.index] == kNoId) {
                    assign[t.index] = row[i];
                    newly_bound.push_back(t.index);
                } else if (assign[t.index] != row[i]) {
                    return false;
                }
            } else if (t.index != row[i]) {
                return false;
            }
        }
        return true;
    }

    void unbind(const std::vector<VarId> &vars) {
        for (VarId v : vars) assign[v] = kNoId;
    }

    bool negatives_hold() {
        Tuple ground;
        for (std::size_t bi : negatives) {
            const Literal &lit = rule.body[bi];
            ground.clear();
            for (const RuleTerm &t : lit.args)
                ground.push_back(t.is_variable ? assign[t.index] : t.index);
            if (db.contains(lit.predicate, ground)) return false;
        }
        return true;
    }

    void match(std::size_t next) {
        if (next == positives.size()) {
            if (negatives_hold()) (*callback)(assign);
            return;
        }
        std::size_t bi = positives[next];
        const Literal &lit = rule.body[bi];
        const FactSet::Relation &rel = db.relation(lit.predicate);
        if (rel.rows.empty()) return; // also keeps index access in bounds

        std::size_t lo = 0;
        std::size_t hi = limit_for(lit.predicate);
        if (bi == delta_literal) {
            lo = delta_begin;
            hi = std::min(hi, delta_end);
        }

        // Pick the bound argument position with the smallest posting list.
        const std::vector<std::size_t> *bucket = nullptr;
        for (std::size_t i = 0; i < lit.args.size(); ++i) {
            const RuleTerm &t = lit.args[i];
            ConstId value;
            if (t.is_variable) {
                if (assign[t.index] == kNoId) continue;
                value = assign[t.index];
            } else {
                value = t.index;
            }
            auto it = rel.index[i].find(value);
            if (it == rel.index[i].end()) return; // no row can match
            if (!bucket || it->second.size() < bucket->size()) bucket = &it->second;
        }

        std::vector<VarId> newly_bound;
        auto try_row = [&](std::size_t row_idx) {
            if (row_idx < lo || row_idx >= hi) return;
            newly_bound.clear();
            if (unify(lit, rel.rows[row_idx], newly_bound)) {
                match(next + 1);
            }
            unbind(newly_bound);
        };

        if (bucket) {
            for (std::size_t row_idx : *bucket) try_row(row_idx);
        } else {
            for (std::size_t row_idx = lo; row_idx < hi; ++row_idx) try_row(row_idx);
        }
    }

    void run(const SubstitutionCallback &cb) {
        callback = &cb;
        assign.assign(rule.variable_count(), kNoId);
        positives.clear();
        negatives.clear();
        for (std::size_t i = 0; i < rule.body.size(); ++i) {
            if (rule.body[i].negated) negatives.push_back(i);
            else positives.push_back(i);
        }
        match(0);
    }
};

Tuple instantiate_head(const Rule &rule, const Tuple &assign) {
    Tuple args;
    args.reserve(rule.head.args.size());
    for (const RuleTerm &t : rule.head.args)
        args.push_back(t.is_variable ? assign[t.index] : t.index);
    return args;
}

} // namespace

void for_each_body_match(const Rule &rule, const FactSet &model,
                         const SubstitutionCallback &callback) {
    JoinContext ctx{rule, model};
    ctx.run(callback);
}

FactSet canonical_model(const DatalogProgram &program, const FactSet &facts,
                        const EvalLimits &limits) {
    if (program.strata.size() != program.predicates.size())
        throw ValidationError("program must be stratified before evaluation");

    FactSet db = facts;
    db.ensure_predicates(program.predicates.size());
    const std::size_t npreds = program.predicates.size();
    const std::size_t input_atoms = db.size();

    std::vector<std::vector<const Rule *>> by_stratum(program.stratum_count);
    for (const Rule &rule : program.rules)
        by_stratum[program.strata[rule.head.predicate]].push_back(&rule);

    std::vector<std::pair<PredId, Tuple>> pending;
    auto flush_pending = [&]() {
        bool grew = false;
        for (auto &[pred, args] : pending)
            grew |= db.insert(pred, std::move(args));
        pending.clear();
        if (db.size() - input_atoms > limits.max_atoms)
            throw ResourceLimitError(
                "derived-atom cap exceeded (" + std::to_string(limits.max_atoms) +
                "); the program may not be safe for this input");
        return grew;
    };

    std::vector<std::size_t> prev_mark(npreds, 0);
    std::vector<std::size_t> cur_mark(npreds, 0);
    auto snapshot = [&](std::vector<std::size_t> &marks) {
        for (PredId p = 0; p < npreds; ++p)
            marks[p] = db.relation(p).rows.size();
    };

    for (int s = 0; s < program.stratum_count; ++s) {
        const auto &rules = by_stratum[s];
        if (rules.empty()) continue;

        // Round 0: full evaluation against the current database.
        snapshot(cur_mark);
        for (const Rule *rule : rules) {
            JoinContext ctx{*rule, db, &cur_mark};
            ctx.run([&](const Tuple &assign) {
                pending.emplace_back(rule->head.predicate,
                                     instantiate_head(*rule, assign));
            });
        }
        bool grew = flush_pending();

        // Delta rounds: at least one positive literal must match a fact that
        // is new since the previous round.
        while (grew) {
            prev_mark = cur_mark;
            snapshot(cur_mark);
            for (const Rule *rule : rules) {
                for (std::size_t bi = 0; bi < rule->body.size(); ++bi) {
                    const Literal &lit = rule->body[bi];
                    if (lit.negated) continue;
                    std::size_t lo = prev_mark[lit.predicate];
                    std::size_t hi = cur_mark[lit.predicate];
                    if (lo >= hi) continue; // no delta for this predicate
                    JoinContext ctx{*rule, db, &cur_mark, bi, lo, hi};
                    ctx.run([&](const Tuple &assign) {
                        pending.emplace_back(rule->head.predicate,
                                             instantiate_head(*rule, assign));
                    });
                }
            }
            grew = flush_pending();
        }
    }
    return db;
}

} // namespace bkplan::datalog
