#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arcalg/error.hpp"

namespace arcalg {

// Vertex labels on the number line. Text forms: o, x, v, ^.
enum class Label : unsigned char { nought, cross, down, up };

inline char to_char(Label l) {
    switch (l) {
        case Label::nought: return 'o';
        case Label::cross: return 'x';
        case Label::down: return 'v';
        case Label::up: return '^';
    }
    throw ContractViolation("bad Label value");
}

// A label sits on an orientable slot if it is v or ^ (as opposed to the
// inert o / x vertices).
inline bool is_slot(Label l) { return l == Label::down || l == Label::up; }

inline Label flipped(Label l) {
    if (l == Label::down) return Label::up;
    if (l == Label::up) return Label::down;
    return l;
}

// A weight: a finite labelling of vertices 1..n by o, x, v, ^.
// Immutable after construction. Internally 0-indexed; all text I/O and
// error messages use 1-based vertex positions.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Label> labels) : labels_(std::move(labels)) {}

    static Weight parse(std::string_view text) {
        std::vector<Label> labels;
        labels.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case 'o': labels.push_back(Label::nought); break;
                case 'x': labels.push_back(Label::cross); break;
                case 'v': labels.push_back(Label::down); break;
                case '^': labels.push_back(Label::up); break;
                default:
                    throw ParseError("weight parse error at position " + std::to_string(i + 1) +
                                     ": unexpected character '" + std::string(1, text[i]) + "'");
            }
        }
        return Weight(std::move(labels));
    }

    std::string str() const {
        std::string s;
        s.reserve(labels_.size());
        for (Label l : labels_) s.push_back(to_char(l));
        return s;
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    Label operator[](std::size_t i) const { return labels_[i]; }

    friend bool operator==(const Weight&, const Weight&) = default;
    // Raw lexicographic order on label values; canonical block order is
    // block_less below.
    friend auto operator<=>(const Weight&, const Weight&) = default;

    int count(Label l) const {
        return static_cast<int>(std::count(labels_.begin(), labels_.end(), l));
    }

    // 0-based positions of the v labels, ascending.
    std::vector<int> down_positions() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == Label::down) out.push_back(static_cast<int>(i));
        return out;
    }

    // lambda^*: reverse every orientation in place (v <-> ^). Bounded
    // weights only, which is all this library represents.
    Weight star() const {
        std::vector<Label> out(labels_);
        for (Label& l : out) l = flipped(l);
        return Weight(std::move(out));
    }

    // lambda with the diagram rotated through 180 degrees: the sequence is
    // reversed and every v / ^ swaps (an arrow turned upside down points the
    // other way).
    Weight rotated() const {
        std::vector<Label> out(labels_.rbegin(), labels_.rend());
        for (Label& l : out) l = flipped(l);
        return Weight(std::move(out));
    }

    Weight with(std::size_t i, Label l) const {
        std::vector<Label> out(labels_);
        out[i] = l;
        return Weight(std::move(out));
    }

private:
    std::vector<Label> labels_;
};

inline std::string to_string(const Weight& w) { return w.str(); }

// Two weights lie in the same block iff they agree on o / x placement and
// have equal v and ^ counts.
inline bool same_block(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool sa = is_slot(a[i]), sb = is_slot(b[i]);
        if (sa != sb) return false;
        if (!sa && a[i] != b[i]) return false;
    }
    return a.count(Label::down) == b.count(Label::down);
}

// Bruhat order: generated by swapping a v with an ^ to its right; weights
// get bigger as v's move right. Equivalent prefix characterisation used
// here: lam <= mu iff same block and every prefix of lam holds at least as
// many v's as the same prefix of mu. The equivalence is validated against
// the generative definition in the test suite.
inline bool bruhat_leq(const Weight& lam, const Weight& mu) {
    if (lam.size() != mu.size())
        throw PreconditionError("bruhat_leq: weights live on different number lines");
    if (!same_block(lam, mu)) return false;
    int dl = 0, dm = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] == Label::down) ++dl;
        if (mu[i] == Label::down) ++dm;
        if (dl < dm) return false;
    }
    return true;
}

inline bool bruhat_less(const Weight& lam, const Weight& mu) {
    return lam != mu && bruhat_leq(lam, mu);
}

// Canonical order of a block's members: compare the tuples of v positions
// starting from the rightmost one. Moving a v to the right makes a weight
// strictly larger in this order, so it linearly extends the Bruhat order
// with the minimal weight (all v's packed left) first.
inline bool block_less(const Weight& a, const Weight& b) {
    std::vector<int> da = a.down_positions(), db = b.down_positions();
    for (std::size_t k = da.size(); k-- > 0;) {
        if (da[k] != db[k]) return da[k] < db[k];
    }
    return false;
}

// Total order on arbitrary weights: by length, then by the block key, then
// raw labels. Within one block this coincides with block_less.
inline bool canonical_weight_less(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::vector<int> da = a.down_positions(), db = b.down_positions();
    if (da.size() != db.size()) return da.size() < db.size();
    for (std::size_t k = da.size(); k-- > 0;) {
        if (da[k] != db[k]) return da[k] < db[k];
    }
    return a < b;
}

// A block: the equivalence class of a weight under permuting its v's and
// ^'s, listed in canonical order.
class Block {
public:
    explicit Block(const Weight& representative) : rep_(representative) {
        std::vector<int> slots;
        for (std::size_t i = 0; i < representative.size(); ++i)
            if (is_slot(representative[i])) slots.push_back(static_cast<int>(i));
        const int d = representative.count(Label::down);
        // All redistributions of d v's over the slots.
        std::vector<int> choose(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) choose[static_cast<std::size_t>(i)] = i;
        const int s = static_cast<int>(slots.size());
        auto emit = [&]() {
            Weight w = representative;
            for (int p : slots) w = w.with(static_cast<std::size_t>(p), Label::up);
            for (int c : choose) w = w.with(static_cast<std::size_t>(slots[static_cast<std::size_t>(c)]), Label::down);
            members_.push_back(w);
        };
        if (d == 0) {
            emit();
        } else {
            while (true) {
                emit();
                int i = d - 1;
                while (i >= 0 && choose[static_cast<std::size_t>(i)] == s - d + i) --i;
                if (i < 0) break;
                ++choose[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < d; ++j)
                    choose[static_cast<std::size_t>(j)] = choose[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        std::sort(members_.begin(), members_.end(), block_less);
    }

    const Weight& representative() const { return rep_; }
    const std::vector<Weight>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const Weight& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const Weight& w) const { return same_block(rep_, w); }

    // Position in the canonical member order; throws if w is not a member.
    int index_of(const Weight& w) const {
        if (!contains(w)) throw BlockMismatch("weight " + w.str() + " is not in this block");
        auto it = std::lower_bound(members_.begin(), members_.end(), w, block_less);
        return static_cast<int>(it - members_.begin());
    }

    friend bool operator==(const Block& a, const Block& b) { return a.members_ == b.members_; }

private:
    Weight rep_;
    std::vector<Weight> members_;
};

inline Block enumerate_block(const Weight& w) { return Block(w); }

} // namespace arcalg
