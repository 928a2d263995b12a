#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "arcalg/element.hpp"
#include "arcalg/error.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

// Exact Laurent polynomial in q with integer coefficients. Zero
// coefficients are never stored; text form lists terms by ascending
// exponent ("0", "1", "q", "1+q^2", "q^-1+2q").
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms) : c_(terms) {
        prune();
    }

    static LaurentPoly constant(std::int64_t v) {
        LaurentPoly p;
        p.set(0, v);
        return p;
    }
    static LaurentPoly q_power(int e, std::int64_t coeff = 1) {
        LaurentPoly p;
        p.set(e, coeff);
        return p;
    }

    bool zero() const { return c_.empty(); }

    std::int64_t coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0 : it->second;
    }

    void add_term(int e, std::int64_t v) {
        if (v == 0) return;
        auto [it, inserted] = c_.try_emplace(e, v);
        if (!inserted) {
            it->second = checked_add(it->second, v);
            if (it->second == 0) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) out.add_term(ea + eb, checked_mul(va, vb));
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::int64_t eval_at_one() const {
        std::int64_t s = 0;
        for (const auto& [e, v] : c_) s = checked_add(s, v);
        return s;
    }

    int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, v] : c_) {
            std::int64_t mag = v < 0 ? -v : v;
            if (v < 0)
                out += "-";
            else if (!first)
                out += "+";
            first = false;
            if (e == 0) {
                out += std::to_string(mag);
            } else {
                if (mag != 1) out += std::to_string(mag);
                out += "q";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void set(int e, std::int64_t v) {
        if (v != 0) c_[e] = v;
    }
    void prune() {
        for (auto it = c_.begin(); it != c_.end();)
            it = it->second == 0 ? c_.erase(it) : std::next(it);
    }
    std::map<int, std::int64_t> c_;
};

inline std::string to_string(const LaurentPoly& p) { return p.str(); }

// Square matrix of Laurent polynomials indexed by a block's member order.
class PolyMatrix {
public:
    explicit PolyMatrix(Block block)
        : block_(std::move(block)),
          m_(block_.size(), std::vector<LaurentPoly>(block_.size())) {}

    const Block& block() const { return block_; }
    std::size_t size() const { return m_.size(); }

    LaurentPoly& at(std::size_t r, std::size_t c) { return m_[r][c]; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return m_[r][c]; }

    const LaurentPoly& at(const Weight& r, const Weight& c) const {
        return m_[static_cast<std::size_t>(block_.index_of(r))]
                 [static_cast<std::size_t>(block_.index_of(c))];
    }

    PolyMatrix transposed() const {
        PolyMatrix out(block_);
        for (std::size_t r = 0; r < size(); ++r)
            for (std::size_t c = 0; c < size(); ++c) out.m_[c][r] = m_[r][c];
        return out;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (!(a.block_ == b.block_)) throw BlockMismatch("matrix product across blocks");
        PolyMatrix out(a.block_);
        for (std::size_t r = 0; r < a.size(); ++r)
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a.m_[r][k].zero()) continue;
                for (std::size_t c = 0; c < a.size(); ++c)
                    out.m_[r][c] += a.m_[r][k] * b.m_[k][c];
            }
        return out;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.block_ == b.block_ && a.m_ == b.m_;
    }

    // Header row and column carry the weight strings in block order; ends
    // with a trailing newline. Byte-stable across runs.
    std::string csv() const {
        std::string out;
        for (const Weight& w : block_.members()) {
            out += ",";
            out += w.str();
        }
        out += "\n";
        for (std::size_t r = 0; r < size(); ++r) {
            out += block_[r].str();
            for (std::size_t c = 0; c < size(); ++c) {
                out += ",";
                out += m_[r][c].str();
            }
            out += "\n";
        }
        return out;
    }

private:
    Block block_;
    std::vector<std::vector<LaurentPoly>> m_;
};

} // namespace arcalg
