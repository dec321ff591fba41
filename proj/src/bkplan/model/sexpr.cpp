#include "bkplan/model/sexpr.h"

namespace bkplan::model {

namespace {

struct Cursor {
    const std::string &text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char take() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    void skip_blank() {
        while (!eof()) {
            char c = peek();
            if (c == ';') {
                while (!eof() && peek() != '\n') take();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else {
                break;
            }
        }
    }
};

bool is_atom_char(char c) {
    return c != '(' && c != ')' && c != ';' && c != ' ' && c != '\t' &&
           c != '\r' && c != '\n';
}

Sexpr parse_one(Cursor &cur) {
    cur.skip_blank();
    if (cur.eof()) throw ParseError("unexpected end of input", cur.line, cur.column);
    Sexpr node;
    node.line = cur.line;
    node.column = cur.column;
    if (cur.peek() == '(') {
        cur.take();
        while (true) {
            cur.skip_blank();
            if (cur.eof())
                throw ParseError("unterminated list", node.line, node.column);
            if (cur.peek() == ')') {
                cur.take();
                break;
            }
            node.items.push_back(parse_one(cur));
        }
        return node;
    }
    if (cur.peek() == ')')
        throw ParseError("unexpected ')'", cur.line, cur.column);
    node.is_atom = true;
    while (!cur.eof() && is_atom_char(cur.peek())) node.atom += cur.take();
    return node;
}

} // namespace

const Sexpr &Sexpr::at(std::size_t i) const {
    if (is_atom || i >= items.size())
        throw ParseError("malformed expression: missing element " +
                             std::to_string(i),
                         line, column);
    return items[i];
}

bool Sexpr::head_is(const std::string &symbol) const {
    return !is_atom && !items.empty() && items[0].is_atom && items[0].atom == symbol;
}

Sexpr parse_sexpr(const std::string &text) {
    Cursor cur{text};
    Sexpr node = parse_one(cur);
    cur.skip_blank();
    if (!cur.eof())
        throw ParseError("trailing content after expression", cur.line, cur.column);
    return node;
}

std::vector<Sexpr> parse_sexpr_stream(const std::string &text) {
    Cursor cur{text};
    std::vector<Sexpr> out;
    while (true) {
        cur.skip_blank();
        if (cur.eof()) break;
        out.push_back(parse_one(cur));
    }
    return out;
}

} // namespace bkplan::model
