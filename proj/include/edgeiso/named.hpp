#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"

namespace edgeiso {

// Named-graph grammar:
//   expr   := term ('+' term)*          disjoint union
//   term   := power ('x' power)*        Cartesian product
//   power  := atom ('^' int)?
//   atom   := 'K' int (',' int)? | 'P' int | 'C' int | 'petersen' | '(' expr ')'
// Examples: "K5", "K3,3", "petersen^2xK2", "K5+K4", "C5^3".
class GraphSpecParser {
public:
    explicit GraphSpecParser(std::string_view text) : text_(text) {}

    Graph parse()
    {
        Graph g = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return g;
    }

private:
    Graph expr()
    {
        std::vector<Graph> parts{term()};
        while (accept('+')) parts.push_back(term());
        return parts.size() == 1 ? parts[0] : disjoint_union(parts);
    }

    Graph term()
    {
        std::vector<Graph> parts{power()};
        while (accept('x')) parts.push_back(power());
        return parts.size() == 1 ? parts[0] : cartesian_product(parts);
    }

    Graph power()
    {
        Graph g = atom();
        if (accept('^')) {
            std::size_t d = integer();
            if (d < 1) fail("exponent must be >= 1");
            return d == 1 ? g : cartesian_power(g, d);
        }
        return g;
    }

    Graph atom()
    {
        skip_space();
        if (accept('(')) {
            Graph g = expr();
            if (!accept(')')) fail("expected ')'");
            return g;
        }
        if (text_.substr(pos_, 8) == "petersen" || text_.substr(pos_, 8) == "Petersen") {
            pos_ += 8;
            return make_petersen();
        }
        if (pos_ >= text_.size()) fail("expected a graph name");
        char c = text_[pos_++];
        try {
            switch (c) {
            case 'K': {
                std::size_t a = integer();
                if (accept(',')) return make_complete_bipartite(a, integer());
                return make_clique(a);
            }
            case 'P': return make_path(integer());
            case 'C': return make_cycle(integer());
            default: break;
            }
        } catch (const ParameterError& e) {
            fail(e.what());
        }
        --pos_;
        fail("unknown graph name");
    }

    std::size_t integer()
    {
        skip_space();
        std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos_;
        }
        if (start == pos_) fail("expected a number");
        return v;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("graph spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Graph parse_graph_spec(std::string_view text) { return GraphSpecParser(text).parse(); }

} // namespace edgeiso
