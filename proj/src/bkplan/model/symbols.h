#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bkplan/util/errors.h"

namespace bkplan::model {

using Id = std::uint32_t;
constexpr Id kNoId = UINT32_MAX;

// Bidirectional name <-> id table. Ids are dense and assigned in insertion
// order, which fixes all downstream iteration orders.
class SymbolTable {
public:
    Id intern(const std::string &name);
    Id lookup(const std::string &name) const; // kNoId if absent
    Id require(const std::string &name, const std::string &kind) const;
    const std::string &name(Id id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }
    bool contains(const std::string &name) const { return lookup(name) != kNoId; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Id> ids_;
};

} // namespace bkplan::model
