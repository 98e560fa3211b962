#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "spexlab/errors.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// AST for the graph construction language.
//
//   expr  := union ('+' union)*          join, lowest precedence
//   union := term ('u' term)*            disjoint union
//   term  := INT '*' atom | atom         repetition
//   atom  := '~' atom | '(' expr ')' | NAME
//   NAME  := K<n> | K<a>,<b> | P<n> | C<n> | M<n> | E<n>
//          | S<l1>,...,<lj> | D<a>,<b> | D2,2* | F<k>
//
// K = complete / complete bipartite, P = path, C = cycle, M = matching on n
// vertices, E = empty, S = spider with given leg lengths, D = double star,
// D2,2* = D_{2,2} with one leaf subdivided outward, F = friendship graph.
struct GraphExpr {
    enum class Kind { Atom, Join, Union, Repeat, Complement };

    Kind kind = Kind::Atom;
    // atom payload
    char letter = 0;
    std::vector<int> params;
    bool starred = false;
    // operator payload
    std::vector<GraphExpr> kids;
    int count = 0;  // Repeat only; 0 is allowed and realizes to the empty graph
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    GraphExpr parse() {
        GraphExpr e = parse_join();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    GraphExpr parse_join() {
        GraphExpr e = parse_union();
        while (peek() == '+') {
            ++pos_;
            GraphExpr rhs = parse_union();
            GraphExpr j;
            j.kind = GraphExpr::Kind::Join;
            j.kids = {std::move(e), std::move(rhs)};
            e = std::move(j);
        }
        return e;
    }

    GraphExpr parse_union() {
        GraphExpr e = parse_term();
        while (peek() == 'u') {
            ++pos_;
            GraphExpr rhs = parse_term();
            GraphExpr un;
            un.kind = GraphExpr::Kind::Union;
            un.kids = {std::move(e), std::move(rhs)};
            e = std::move(un);
        }
        return e;
    }

    GraphExpr parse_term() {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            size_t at = pos_;
            int count = parse_int();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '*')
                fail("expected '*' after repetition count", at);
            ++pos_;
            GraphExpr r;
            r.kind = GraphExpr::Kind::Repeat;
            r.count = count;
            r.kids.push_back(parse_atom());
            return r;
        }
        return parse_atom();
    }

    GraphExpr parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '~') {
            ++pos_;
            GraphExpr e;
            e.kind = GraphExpr::Kind::Complement;
            e.kids.push_back(parse_atom());
            return e;
        }
        if (c == '(') {
            ++pos_;
            GraphExpr e = parse_join();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        return parse_name();
    }

    GraphExpr parse_name() {
        size_t at = pos_;
        char c = s_[pos_];
        static const std::string atoms = "KPCMESDF";
        if (atoms.find(c) == std::string::npos)
            fail(std::string("unknown graph name '") + c + "'", at);
        ++pos_;
        GraphExpr e;
        e.kind = GraphExpr::Kind::Atom;
        e.letter = c;
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            fail("graph name needs a numeric parameter", at);
        e.params.push_back(parse_int());
        while (peek_raw() == ',') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
                fail("expected integer after ','", pos_);
            e.params.push_back(parse_int());
        }
        // D2,2* is lexed as a single name; '*' is never a postfix operator.
        if (c == 'D' && peek_raw() == '*') {
            ++pos_;
            e.starred = true;
        }
        validate_atom(e, at);
        return e;
    }

    void validate_atom(const GraphExpr& e, size_t at) {
        const auto& p = e.params;
        auto need = [&](bool ok, const char* msg) { if (!ok) fail(msg, at); };
        switch (e.letter) {
            case 'K':
                need(p.size() <= 2, "K takes one or two parameters");
                for (int v : p) need(v >= 0, "K parameters must be >= 0");
                break;
            case 'P': case 'M': case 'E':
                need(p.size() == 1 && p[0] >= 0, "order must be a single integer >= 0");
                break;
            case 'C':
                need(p.size() == 1 && p[0] >= 3, "cycle needs order >= 3");
                break;
            case 'S':
                for (int v : p) need(v >= 1, "spider legs must be >= 1");
                break;
            case 'D':
                need(p.size() == 2, "double star takes two parameters");
                need(p[0] >= 0 && p[1] >= 0, "double star leaf counts must be >= 0");
                if (e.starred) need(p[0] == 2 && p[1] == 2, "only D2,2* is defined");
                break;
            case 'F':
                need(p.size() == 1 && p[0] >= 1, "friendship graph needs k >= 1");
                break;
        }
    }

    int parse_int() {
        size_t at = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000) fail("integer too large", at);
            ++pos_;
        }
        return int(v);
    }

    // next non-space char without consuming
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg, size_t at = std::string::npos) {
        throw parse_error(msg, at == std::string::npos ? pos_ : at);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline GraphExpr parse_expr(const std::string& text) {
    return detail::ExprParser(text).parse();
}

inline Graph realize(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Join:
            return join(realize(e.kids[0]), realize(e.kids[1]));
        case GraphExpr::Kind::Union:
            return disjoint_union(realize(e.kids[0]), realize(e.kids[1]));
        case GraphExpr::Kind::Repeat: {
            if (e.count == 0) return Graph(0);
            return repeated_union(e.count, realize(e.kids[0]));
        }
        case GraphExpr::Kind::Complement:
            return realize(e.kids[0]).complement();
        case GraphExpr::Kind::Atom:
            break;
    }
    const auto& p = e.params;
    switch (e.letter) {
        case 'K': return p.size() == 2 ? complete_bipartite(p[0], p[1]) : complete_graph(p[0]);
        case 'P': return path_graph(p[0]);
        case 'C': return cycle_graph(p[0]);
        case 'M': return matching_graph(p[0]);
        case 'E': return empty_graph(p[0]);
        case 'S': return spider_graph(p);
        case 'D': return e.starred ? double_star_22_ext() : double_star(p[0], p[1]);
        case 'F': return friendship_graph(p[0]);
    }
    throw std::logic_error("unreachable atom");
}

inline Graph realize(const std::string& text) { return realize(parse_expr(text)); }

inline std::string to_text(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Join:
            return to_text(e.kids[0]) + "+" + to_text(e.kids[1]);
        case GraphExpr::Kind::Union: {
            auto wrap = [](const GraphExpr& k) {
                std::string s = to_text(k);
                return k.kind == GraphExpr::Kind::Join ? "(" + s + ")" : s;
            };
            return wrap(e.kids[0]) + " u " + wrap(e.kids[1]);
        }
        case GraphExpr::Kind::Repeat: {
            std::string s = to_text(e.kids[0]);
            if (e.kids[0].kind != GraphExpr::Kind::Atom) s = "(" + s + ")";
            return std::to_string(e.count) + "*" + s;
        }
        case GraphExpr::Kind::Complement: {
            std::string s = to_text(e.kids[0]);
            if (e.kids[0].kind != GraphExpr::Kind::Atom) s = "(" + s + ")";
            return "~" + s;
        }
        case GraphExpr::Kind::Atom:
            break;
    }
    std::string s(1, e.letter);
    for (size_t i = 0; i < e.params.size(); ++i)
        s += (i ? "," : "") + std::to_string(e.params[i]);
    if (e.starred) s += "*";
    return s;
}

// As many disjoint copies of g as fit in n vertices, isolated vertices fill
// the remainder.
inline Graph maximal_union(const Graph& g, int n) {
    if (n < 0) throw std::invalid_argument("maximal_union: n must be >= 0");
    if (g.order() == 0) {
        if (n > 0) throw std::invalid_argument("maximal_union of the empty graph");
        return Graph(0);
    }
    int copies = n / g.order();
    Graph r(n);
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges()) r.add_edge(c * g.order() + u, c * g.order() + v);
    return r;
}

}  // namespace spexlab
