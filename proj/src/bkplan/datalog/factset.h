#pragma once

#include <unordered_map>
#include <vector>

#include "bkplan/datalog/program.h"

namespace bkplan::datalog {

using Tuple = std::vector<ConstId>;

struct TupleHash {
    std::size_t operator()(const Tuple &t) const {
        std::size_t h = 1469598103934665603ull;
        for (ConstId c : t) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Ground atoms grouped by predicate, with per-argument-position hash indexes
// maintained on insert. Row order is insertion order and is never reused,
// so delta ranges can be expressed as row-index intervals.
class FactSet {
public:
    struct Relation {
        std::vector<Tuple> rows;
        std::unordered_map<Tuple, std::size_t, TupleHash> row_ids;
        // index[pos][constant] = row indices with that constant at pos
        std::vector<std::unordered_map<ConstId, std::vector<std::size_t>>> index;
    };

    explicit FactSet(std::size_t predicate_count)
        : relations_(predicate_count) {}

    // Returns true if the atom is new.
    bool insert(PredId p, Tuple args);
    bool contains(PredId p, const Tuple &args) const;
    const Relation &relation(PredId p) const { return relations_[p]; }
    std::size_t predicate_count() const { return relations_.size(); }
    std::size_t size() const { return total_; }

    void ensure_predicates(std::size_t count) {
        if (count > relations_.size()) relations_.resize(count);
    }

    // All atoms as (predicate, tuple), sorted; for equality checks in tests.
    std::vector<std::pair<PredId, Tuple>> sorted_atoms() const;
    bool operator==(const FactSet &other) const {
        return sorted_atoms() == other.sorted_atoms();
    }

private:
    std::vector<Relation> relations_;
    std::size_t total_ = 0;
};

} // namespace bkplan::datalog
