#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arcalg/error.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

using Arc = std::pair<int, int>;

// One half of a circle diagram: a non-crossing set of arcs plus rays on a
// number line. The same structure serves as a cup diagram (arcs drawn below
// the line, rays down) and as a cap diagram (mirror image); which role it
// plays is decided by the diagram holding it. Mirroring therefore fixes the
// arc data, and rotation reverses it.
class ArcDiagram {
public:
    static constexpr int kFree = -2;
    static constexpr int kRay = -1;

    ArcDiagram() = default;

    // partner[i] = j for an arc (i, j), kRay for a ray, kFree for a free
    // vertex. Validates symmetry, planarity and that no ray sits strictly
    // under an arc.
    explicit ArcDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
        validate();
    }

    static ArcDiagram from_arcs(std::size_t n, const std::vector<Arc>& arcs,
                                const std::vector<int>& free_positions) {
        std::vector<int> partner(n, kRay);
        for (int f : free_positions) {
            if (f < 0 || f >= static_cast<int>(n)) throw ContractViolation("free vertex out of range");
            partner[static_cast<std::size_t>(f)] = kFree;
        }
        for (auto [i, j] : arcs) {
            if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n) || i == j)
                throw ContractViolation("arc endpoint out of range");
            if (partner[static_cast<std::size_t>(i)] != kRay || partner[static_cast<std::size_t>(j)] != kRay)
                throw ContractViolation("arc endpoints collide with another arc or a free vertex");
            partner[static_cast<std::size_t>(i)] = j;
            partner[static_cast<std::size_t>(j)] = i;
        }
        return ArcDiagram(std::move(partner));
    }

    // Arcs drawn from the given list; every other vertex is a ray if the
    // weight holds v / ^ there and free if it holds o / x.
    static ArcDiagram for_weight(const Weight& w, const std::vector<Arc>& arcs) {
        std::vector<int> free_positions;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!is_slot(w[i])) free_positions.push_back(static_cast<int>(i));
        return from_arcs(w.size(), arcs, free_positions);
    }

    std::size_t size() const { return partner_.size(); }
    bool is_free(int i) const { return partner_[static_cast<std::size_t>(i)] == kFree; }
    bool is_ray(int i) const { return partner_[static_cast<std::size_t>(i)] == kRay; }
    bool is_arc_end(int i) const { return partner_[static_cast<std::size_t>(i)] >= 0; }
    int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }

    // Arcs as (i, j) with i < j, sorted by left endpoint.
    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (partner(i) > i) out.emplace_back(i, partner(i));
        return out;
    }

    std::vector<int> rays() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (is_ray(i)) out.push_back(i);
        return out;
    }

    std::vector<int> free_positions() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (is_free(i)) out.push_back(i);
        return out;
    }

    int arc_count() const {
        int c = 0;
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (partner(i) > i) ++c;
        return c;
    }

    bool closed() const {
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (is_ray(i)) return false;
        return true;
    }

    // 180 degree rotation: vertex i goes to n-1-i. (A rotated cup diagram is
    // used as a cap diagram and vice versa.)
    ArcDiagram rotated() const {
        const int n = static_cast<int>(size());
        std::vector<int> out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int p = partner(i);
            out[static_cast<std::size_t>(n - 1 - i)] = p >= 0 ? n - 1 - p : p;
        }
        return ArcDiagram(std::move(out));
    }

    friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
    friend auto operator<=>(const ArcDiagram&, const ArcDiagram&) = default;

private:
    void validate() const {
        const int n = static_cast<int>(size());
        for (int i = 0; i < n; ++i) {
            int p = partner(i);
            if (p == kFree || p == kRay) continue;
            if (p < 0 || p >= n || p == i || partner(p) != i)
                throw ContractViolation("arc diagram partner map is not a symmetric matching");
        }
        auto all_arcs = arcs();
        for (std::size_t a = 0; a < all_arcs.size(); ++a) {
            for (std::size_t b = a + 1; b < all_arcs.size(); ++b) {
                auto [i, j] = all_arcs[a];
                auto [k, l] = all_arcs[b];
                if (k < i) { std::swap(i, k); std::swap(j, l); }
                if (i < k && k < j && j < l)
                    throw ContractViolation("arcs cross");
            }
            for (int r = all_arcs[a].first + 1; r < all_arcs[a].second; ++r)
                if (is_ray(r)) throw ContractViolation("ray trapped under an arc");
        }
    }

    std::vector<int> partner_;
};

// The canonical arc diagram of a weight: repeatedly join a v^ pair that are
// neighbours (only o, x or already-joined vertices in between), then put
// rays at the remaining v / ^ vertices. Implemented with a bracket-matching
// stack, which realises the leftmost-first joining order; the result is
// independent of the joining order (property-tested).
//
// Used below the line this is the cup diagram of the weight; its mirror
// image is the matching cap diagram.
inline ArcDiagram cup_diagram_of(const Weight& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> partner(static_cast<std::size_t>(n), ArcDiagram::kRay);
    std::vector<int> open;
    for (int i = 0; i < n; ++i) {
        switch (w[static_cast<std::size_t>(i)]) {
            case Label::nought:
            case Label::cross:
                partner[static_cast<std::size_t>(i)] = ArcDiagram::kFree;
                break;
            case Label::down:
                open.push_back(i);
                break;
            case Label::up:
                if (!open.empty()) {
                    int j = open.back();
                    open.pop_back();
                    partner[static_cast<std::size_t>(i)] = j;
                    partner[static_cast<std::size_t>(j)] = i;
                }
                break;
        }
    }
    return ArcDiagram(std::move(partner));
}

inline ArcDiagram cap_diagram_of(const Weight& w) { return cup_diagram_of(w); }

// Orientation test for a half diagram against a weight. The conditions are
// the same on either side of the line:
//   - free vertices carry o or x, and only they do;
//   - the two ends of every arc carry one v and one ^;
//   - ray vertices carry v or ^, and no two rays read v then ^ left to right.
inline bool is_oriented(const ArcDiagram& d, const Weight& w) {
    if (d.size() != w.size()) return false;
    bool seen_down_ray = false;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        Label l = w[static_cast<std::size_t>(i)];
        if (d.is_free(i)) {
            if (is_slot(l)) return false;
        } else if (d.is_ray(i)) {
            if (!is_slot(l)) return false;
            if (l == Label::down) seen_down_ray = true;
            if (l == Label::up && seen_down_ray) return false;
        } else {
            if (!is_slot(l)) return false;
            int j = d.partner(i);
            if (j > i && w[static_cast<std::size_t>(j)] == l) return false;
        }
    }
    return true;
}

// An arc is clockwise when its left end carries ^ (equivalently its right
// end carries v), anti-clockwise when its left end carries v.
inline bool arc_clockwise(const Weight& w, const Arc& arc) {
    return w[static_cast<std::size_t>(arc.first)] == Label::up;
}

// Degree of an oriented half diagram: the number of clockwise arcs.
inline int half_degree(const ArcDiagram& d, const Weight& w) {
    int deg = 0;
    for (const Arc& a : d.arcs())
        if (arc_clockwise(w, a)) ++deg;
    return deg;
}

// Given an oriented half diagram (d, lam), the unique weight alpha with
// d = cup_diagram_of(alpha): reorient every clockwise arc anti-clockwise
// and keep ray and free labels.
inline Weight base_weight(const ArcDiagram& d, const Weight& w) {
    if (!is_oriented(d, w)) throw PreconditionError("base_weight: diagram is not oriented by the weight");
    Weight out = w;
    for (const Arc& a : d.arcs()) {
        out = out.with(static_cast<std::size_t>(a.first), Label::down);
        out = out.with(static_cast<std::size_t>(a.second), Label::up);
    }
    return out;
}

// mu subset lam: same block and the cup diagram of mu is oriented by lam.
inline bool subset_rel(const Weight& mu, const Weight& lam) {
    if (mu.size() != lam.size())
        throw PreconditionError("subset_rel: weights live on different number lines");
    return same_block(mu, lam) && is_oriented(cup_diagram_of(mu), lam);
}

// Number of arcs in the canonical cup diagram of lam.
inline int defect(const Weight& lam) { return cup_diagram_of(lam).arc_count(); }

inline int defect(const Block& block) {
    int best = 0;
    for (const Weight& w : block.members()) best = std::max(best, defect(w));
    return best;
}

// The weights of maximal defect in a block, in block order.
inline std::vector<Weight> maximal_defect_subset(const Block& block) {
    const int top = defect(block);
    std::vector<Weight> out;
    for (const Weight& w : block.members())
        if (defect(w) == top) out.push_back(w);
    return out;
}

// A connected component of a glued diagram: a circle (closed) or a line
// (has ray ends). Vertices are listed in traversal order.
struct Component {
    bool circle = false;
    std::vector<int> vertices;
};

// Components of the circle diagram obtained by gluing a cup diagram under a
// cap diagram on one number line. Lines are listed from their smaller end,
// circles from their leftmost vertex; components are ordered by leftmost
// vertex.
inline std::vector<Component> components(const ArcDiagram& cup, const ArcDiagram& cap) {
    if (cup.size() != cap.size() || cup.free_positions() != cap.free_positions())
        throw ContractViolation("components: cup and cap diagrams do not share free vertices");
    const int n = static_cast<int>(cup.size());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Component> out;

    auto walk = [&](int start, bool first_step_on_cup_side) {
        // Trace alternating cup-side / cap-side incidences until a ray stops
        // the walk or it closes up.
        Component comp;
        int v = start;
        const bool from_cup_side = first_step_on_cup_side;
        bool next_is_cup = from_cup_side;
        while (true) {
            comp.vertices.push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
            const ArcDiagram& side = next_is_cup ? cup : cap;
            if (side.is_ray(v)) break;
            v = side.partner(v);
            next_is_cup = !next_is_cup;
            if (v == start && next_is_cup == from_cup_side) {
                comp.circle = true;
                break;
            }
        }
        return comp;
    };

    for (int i = 0; i < n; ++i) {
        if (used[static_cast<std::size_t>(i)] || cup.is_free(i)) continue;
        if (cup.is_ray(i) || cap.is_ray(i)) {
            // A line; enter at this end through its ray, so the first
            // traversal step uses the opposite side.
            Component comp = walk(i, /*first_step_on_cup_side=*/!cup.is_ray(i));
            // Canonical direction: start from the smaller-position end.
            if (comp.vertices.back() < comp.vertices.front())
                std::reverse(comp.vertices.begin(), comp.vertices.end());
            out.push_back(std::move(comp));
        } else {
            Component comp = walk(i, /*first_step_on_cup_side=*/true);
            if (!comp.circle) throw ContractViolation("ray-free component failed to close");
            out.push_back(std::move(comp));
        }
    }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        return *std::min_element(a.vertices.begin(), a.vertices.end()) <
               *std::min_element(b.vertices.begin(), b.vertices.end());
    });
    return out;
}

// A circle is anti-clockwise iff its leftmost vertex carries v.
inline bool circle_anticlockwise(const Component& c, const Weight& w) {
    if (!c.circle) throw PreconditionError("circle_anticlockwise: component is a line");
    int leftmost = *std::min_element(c.vertices.begin(), c.vertices.end());
    return w[static_cast<std::size_t>(leftmost)] == Label::down;
}

} // namespace arcalg
