#include "bkplan/model/symbols.h"

namespace bkplan::model {

Id SymbolTable::intern(const std::string &name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    Id id = static_cast<Id>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

Id SymbolTable::lookup(const std::string &name) const {
    auto it = ids_.find(name);
    return it == ids_.end() ? kNoId : it->second;
}

Id SymbolTable::require(const std::string &name, const std::string &kind) const {
    Id id = lookup(name);
    if (id == kNoId) throw ValidationError("undeclared " + kind + ": " + name);
    return id;
}

} // namespace bkplan::model
