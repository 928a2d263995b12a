#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcalg/arc_diagram.hpp"
#include "arcalg/error.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

// An oriented circle diagram (a lam b): a cup diagram, a weight orienting
// it, and a cap diagram. The degree (clockwise cups plus clockwise caps) is
// computed once at construction.
//
// Text grammar: "arcs|weight|arcs" with arcs "(i,j);(k,l)" 1-based and
// sorted by left endpoint; rays and free vertices are inferred from the
// weight. Example: "(1,4);(2,3)|v^v^|(1,2);(3,4)".
class BasisDiagram {
public:
    BasisDiagram(ArcDiagram cup, Weight weight, ArcDiagram cap)
        : cup_(std::move(cup)), weight_(std::move(weight)), cap_(std::move(cap)) {
        if (cup_.size() != weight_.size() || cap_.size() != weight_.size())
            throw ContractViolation("basis diagram: mismatched number lines");
        if (cup_.free_positions() != cap_.free_positions())
            throw ContractViolation("basis diagram: cup and cap free vertices differ");
        if (!is_oriented(cup_, weight_))
            throw ContractViolation("basis diagram: cup side is not oriented");
        if (!is_oriented(cap_, weight_))
            throw ContractViolation("basis diagram: cap side is not oriented");
        degree_ = half_degree(cup_, weight_) + half_degree(cap_, weight_);
    }

    const ArcDiagram& cup() const { return cup_; }
    const Weight& weight() const { return weight_; }
    const ArcDiagram& cap() const { return cap_; }
    int degree() const { return degree_; }

    bool closed() const { return cup_.closed() && cap_.closed(); }

    // e_lam, the degree zero diagram of a weight.
    static BasisDiagram idempotent(const Weight& lam) {
        ArcDiagram d = cup_diagram_of(lam);
        return BasisDiagram(d, lam, d);
    }

    // The * anti-automorphism at the diagram level: mirror in the number
    // line, (a lam b) -> (b* lam a*).
    BasisDiagram mirrored() const { return BasisDiagram(cap_, weight_, cup_); }

    // 180 degree rotation, landing in the rotated block.
    BasisDiagram rotated() const {
        return BasisDiagram(cap_.rotated(), weight_.rotated(), cup_.rotated());
    }

    static BasisDiagram parse(std::string_view text) {
        auto first = text.find('|');
        auto last = text.rfind('|');
        if (first == std::string_view::npos || last == first)
            throw ParseError("basis diagram must be arcs|weight|arcs: " + std::string(text));
        Weight w = Weight::parse(text.substr(first + 1, last - first - 1));
        ArcDiagram cup = ArcDiagram::for_weight(w, parse_arcs(text.substr(0, first)));
        ArcDiagram cap = ArcDiagram::for_weight(w, parse_arcs(text.substr(last + 1)));
        return BasisDiagram(std::move(cup), std::move(w), std::move(cap));
    }

    std::string str() const {
        return arcs_str(cup_) + "|" + weight_.str() + "|" + arcs_str(cap_);
    }

    friend bool operator==(const BasisDiagram& a, const BasisDiagram& b) {
        return a.weight_ == b.weight_ && a.cup_ == b.cup_ && a.cap_ == b.cap_;
    }

private:
    static std::vector<Arc> parse_arcs(std::string_view s) {
        std::vector<Arc> arcs;
        std::size_t i = 0;
        auto skip_ws = [&]() { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
        skip_ws();
        while (i < s.size()) {
            if (s[i] != '(') throw ParseError("expected '(' in arc list: " + std::string(s));
            ++i;
            auto read_int = [&]() {
                std::size_t start = i;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
                if (i == start) throw ParseError("expected vertex number in arc list: " + std::string(s));
                return std::stoi(std::string(s.substr(start, i - start)));
            };
            skip_ws();
            int a = read_int();
            skip_ws();
            if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in arc: " + std::string(s));
            ++i;
            skip_ws();
            int b = read_int();
            skip_ws();
            if (i >= s.size() || s[i] != ')') throw ParseError("expected ')' in arc: " + std::string(s));
            ++i;
            if (a < 1 || b < 1 || a == b) throw ParseError("bad arc endpoints in: " + std::string(s));
            if (a > b) std::swap(a, b);
            arcs.emplace_back(a - 1, b - 1);
            skip_ws();
            if (i < s.size()) {
                if (s[i] != ';') throw ParseError("expected ';' between arcs: " + std::string(s));
                ++i;
                skip_ws();
            }
        }
        return arcs;
    }

    static std::string arcs_str(const ArcDiagram& d) {
        std::string out;
        bool first = true;
        for (const Arc& a : d.arcs()) {
            if (!first) out += ";";
            first = false;
            out += "(" + std::to_string(a.first + 1) + "," + std::to_string(a.second + 1) + ")";
        }
        return out;
    }

    ArcDiagram cup_;
    Weight weight_;
    ArcDiagram cap_;
    int degree_ = 0;
};

inline std::string to_string(const BasisDiagram& d) { return d.str(); }

// Canonical basis order: weight in block order, then cup arcs, then cap
// arcs, lexicographically. Gives deterministic element printing and matrix
// indexing.
inline bool canonical_less(const BasisDiagram& a, const BasisDiagram& b) {
    if (a.weight() != b.weight()) return canonical_weight_less(a.weight(), b.weight());
    if (a.cup() != b.cup()) return a.cup().arcs() < b.cup().arcs();
    return a.cap().arcs() < b.cap().arcs();
}

struct CanonicalLess {
    bool operator()(const BasisDiagram& a, const BasisDiagram& b) const {
        return canonical_less(a, b);
    }
};

} // namespace arcalg
