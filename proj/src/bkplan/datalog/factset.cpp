#include "bkplan/datalog/factset.h"

#include <algorithm>

namespace bkplan::datalog {

bool FactSet::insert(PredId p, Tuple args) {
    Relation &rel = relations_[p];
    if (rel.index.empty() && !args.empty()) rel.index.resize(args.size());
    auto [it, inserted] = rel.row_ids.emplace(args, rel.rows.size());
    if (!inserted) return false;
    std::size_t row = rel.rows.size();
    for (std::size_t pos = 0; pos < args.size(); ++pos)
        rel.index[pos][args[pos]].push_back(row);
    rel.rows.push_back(std::move(args));
    ++total_;
    return true;
}

bool FactSet::contains(PredId p, const Tuple &args) const {
    const Relation &rel = relations_[p];
    return rel.row_ids.count(args) > 0;
}

std::vector<std::pair<PredId, Tuple>> FactSet::sorted_atoms() const {
    std::vector<std::pair<PredId, Tuple>> out;
    out.reserve(total_);
    for (PredId p = 0; p < relations_.size(); ++p)
        for (const Tuple &row : relations_[p].rows) out.emplace_back(p, row);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bkplan::datalog
