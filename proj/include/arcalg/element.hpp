#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "arcalg/basis_diagram.hpp"
#include "arcalg/error.hpp"

namespace arcalg {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
    return r;
}

// A finite integer combination of basis diagrams, all from one block.
// Zero coefficients are never stored; iteration follows the canonical
// basis order.
class Element {
public:
    Element() = default;

    explicit Element(const BasisDiagram& d, std::int64_t coeff = 1) { add(d, coeff); }

    void add(const BasisDiagram& d, std::int64_t coeff) {
        if (coeff == 0) return;
        if (!terms_.empty() && !same_block(terms_.begin()->first.weight(), d.weight()))
            throw BlockMismatch("element terms drawn from different blocks");
        auto [it, inserted] = terms_.try_emplace(d, coeff);
        if (!inserted) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const Element& other, std::int64_t scale = 1) {
        if (scale == 0) return;
        for (const auto& [d, c] : other.terms_) add(d, checked_mul(c, scale));
    }

    Element& operator+=(const Element& other) {
        add(other);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) {
        a += b;
        return a;
    }

    Element scaled(std::int64_t k) const {
        Element out;
        out.add(*this, k);
        return out;
    }

    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::int64_t coeff(const BasisDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? 0 : it->second;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    // "+1·(arcs|weight|arcs)" terms joined by single spaces, canonical
    // order; the zero element prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) out += " ";
            first = false;
            out += c < 0 ? "-" : "+";
            out += std::to_string(c < 0 ? -c : c);
            out += "·(" + d.str() + ")";
        }
        return out;
    }

    // Accepts either a bare basis diagram or the printed form above.
    static Element parse(std::string_view text) {
        Element out;
        std::size_t i = 0;
        auto skip_ws = [&]() { while (i < text.size() && text[i] == ' ') ++i; };
        skip_ws();
        if (i >= text.size()) throw ParseError("empty element");
        if (text.substr(i) == "0") return out;
        if (text[i] != '+' && text[i] != '-') {
            out.add(BasisDiagram::parse(text.substr(i)), 1);
            return out;
        }
        while (i < text.size()) {
            skip_ws();
            if (i >= text.size()) break;
            std::int64_t sign = 1;
            if (text[i] == '+') {
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw ParseError("expected '+' or '-' in element at offset " + std::to_string(i));
            }
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw ParseError("expected coefficient in element at offset " + std::to_string(i));
            std::int64_t mag = std::stoll(std::string(text.substr(start, i - start)));
            // coefficient separator: UTF-8 middle dot or plain '*'
            if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xc2 &&
                static_cast<unsigned char>(text[i + 1]) == 0xb7) {
                i += 2;
            } else if (i < text.size() && text[i] == '*') {
                ++i;
            } else {
                throw ParseError("expected '·' after coefficient in element");
            }
            if (i >= text.size() || text[i] != '(')
                throw ParseError("expected '(' around diagram in element");
            int depth = 0;
            std::size_t open = i;
            while (i < text.size()) {
                if (text[i] == '(') ++depth;
                if (text[i] == ')') {
                    --depth;
                    if (depth == 0) break;
                }
                ++i;
            }
            if (depth != 0) throw ParseError("unbalanced parentheses in element");
            out.add(BasisDiagram::parse(text.substr(open + 1, i - open - 1)), sign * mag);
            ++i;
        }
        return out;
    }

private:
    std::map<BasisDiagram, std::int64_t, CanonicalLess> terms_;
};

inline std::string to_string(const Element& e) { return e.str(); }

} // namespace arcalg
