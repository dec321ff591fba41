#pragma once

#include <string>
#include <vector>

#include "bkplan/util/errors.h"

namespace bkplan::model {

// Minimal s-expression reader for the PDDL subset. Atoms keep their source
// position so later validation can report where a symbol came from.
struct Sexpr {
    bool is_atom = false;
    std::string atom;
    std::vector<Sexpr> items;
    int line = 0;
    int column = 0;

    const Sexpr &at(std::size_t i) const;
    std::size_t size() const { return items.size(); }
    bool head_is(const std::string &symbol) const;
    ParseError error(const std::string &msg) const { return {msg, line, column}; }
};

// Parses exactly one toplevel expression; trailing content is an error.
Sexpr parse_sexpr(const std::string &text);

// Parses a whole file as a sequence of toplevel expressions.
std::vector<Sexpr> parse_sexpr_stream(const std::string &text);

} // namespace bkplan::model
