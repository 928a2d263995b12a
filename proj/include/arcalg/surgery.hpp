#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "arcalg/basis_diagram.hpp"
#include "arcalg/element.hpp"
#include "arcalg/error.hpp"

namespace arcalg {

struct SurgeryStats {
    long long steps = 0;
    long long line_line_steps = 0; // cut pair spanned two distinct lines
    long long yuk_survivals = 0;   // ...and the two-line output was produced
};

// A diagram mid-multiplication: the first factor's cup diagram and weight at
// the bottom, the second factor's weight and cap diagram at the top, and a
// symmetric middle section of mirror cup/cap pairs plus vertical segments
// (stitched rays). Exists only while a product is being computed.
struct StackedDiagram {
    ArcDiagram bottom_outer; // a: arcs and rays below the bottom line
    Weight bottom;           // sigma
    std::vector<Arc> pairs;  // middle mirror pairs, sorted by left endpoint
    std::vector<int> segments;
    Weight top;              // tau
    ArcDiagram top_outer;    // d: arcs and rays above the top line
};

namespace detail {

// Vertex ids: bottom i -> i, top i -> n + i.
struct MidEdge {
    enum Kind : unsigned char { none, pair, seg } kind = none;
    int other = -1;
};

inline std::vector<MidEdge> middle_index(const StackedDiagram& s) {
    std::vector<MidEdge> mid(s.bottom.size());
    for (const Arc& p : s.pairs) {
        mid[static_cast<std::size_t>(p.first)] = {MidEdge::pair, p.second};
        mid[static_cast<std::size_t>(p.second)] = {MidEdge::pair, p.first};
    }
    for (int k : s.segments) mid[static_cast<std::size_t>(k)] = {MidEdge::seg, k};
    return mid;
}

// One traversal of a connected component. seg_edge[k] tells whether the edge
// leaving seq[k] is a vertical segment (labels equal across it) rather than
// an arc (labels flip). Circles record the closing edge too, so for them
// seg_edge.size() == seq.size(); for lines it is seq.size() - 1.
struct StackedWalk {
    std::vector<int> seq;
    std::vector<bool> seg_edge;
    bool circle = false;
};

// side 0 = outer (cup/cap diagram of the factors), side 1 = middle.
inline StackedWalk walk_component(const StackedDiagram& s, const std::vector<MidEdge>& mid,
                                  int start, int first_side) {
    const int n = static_cast<int>(s.bottom.size());
    StackedWalk w;
    int v = start, side = first_side;
    while (true) {
        w.seq.push_back(v);
        const bool on_bottom = v < n;
        const int pos = on_bottom ? v : v - n;
        int next;
        bool is_seg = false;
        if (side == 0) {
            const ArcDiagram& outer = on_bottom ? s.bottom_outer : s.top_outer;
            if (outer.is_ray(pos)) return w; // line end
            next = on_bottom ? outer.partner(pos) : outer.partner(pos) + n;
        } else {
            const MidEdge& e = mid[static_cast<std::size_t>(pos)];
            if (e.kind == MidEdge::pair) {
                next = on_bottom ? e.other : e.other + n;
            } else if (e.kind == MidEdge::seg) {
                next = on_bottom ? pos + n : pos;
                is_seg = true;
            } else {
                throw ContractViolation("stacked diagram: uncovered middle vertex");
            }
        }
        w.seg_edge.push_back(is_seg);
        if (next == start) {
            w.circle = true;
            return w;
        }
        v = next;
        side = 1 - side;
    }
}

struct StackedComponents {
    std::vector<StackedWalk> comps;
    std::vector<int> comp_of; // vertex id -> component index, -1 for free
};

inline StackedComponents stacked_components(const StackedDiagram& s) {
    const int n = static_cast<int>(s.bottom.size());
    std::vector<MidEdge> mid = middle_index(s);
    StackedComponents out;
    out.comp_of.assign(static_cast<std::size_t>(2 * n), -1);
    auto claim = [&](const StackedWalk& w) {
        const int idx = static_cast<int>(out.comps.size());
        for (int v : w.seq) out.comp_of[static_cast<std::size_t>(v)] = idx;
    };
    // Lines first, traced from a ray end (rays only occur on the outer side).
    for (int v = 0; v < 2 * n; ++v) {
        const bool on_bottom = v < n;
        const int pos = on_bottom ? v : v - n;
        const ArcDiagram& outer = on_bottom ? s.bottom_outer : s.top_outer;
        if (outer.is_free(pos) || out.comp_of[static_cast<std::size_t>(v)] != -1) continue;
        if (outer.is_ray(pos)) {
            StackedWalk w = walk_component(s, mid, v, /*first_side=*/1);
            claim(w);
            out.comps.push_back(std::move(w));
        }
    }
    // Circles; scanning (position, bottom-before-top) makes each walk start
    // at its component's leftmost vertex.
    for (int pos = 0; pos < n; ++pos) {
        for (int line = 0; line < 2; ++line) {
            const int v = line == 0 ? pos : n + pos;
            const ArcDiagram& outer = line == 0 ? s.bottom_outer : s.top_outer;
            if (outer.is_free(pos) || out.comp_of[static_cast<std::size_t>(v)] != -1) continue;
            StackedWalk w = walk_component(s, mid, v, /*first_side=*/0);
            if (!w.circle) throw ContractViolation("ray-free stacked component failed to close");
            claim(w);
            out.comps.push_back(std::move(w));
        }
    }
    return out;
}

inline Label stacked_label(const StackedDiagram& s, int v) {
    const int n = static_cast<int>(s.bottom.size());
    return v < n ? s.bottom[static_cast<std::size_t>(v)] : s.top[static_cast<std::size_t>(v - n)];
}

inline void set_stacked_label(StackedDiagram& s, int v, Label l) {
    const int n = static_cast<int>(s.bottom.size());
    if (v < n)
        s.bottom = s.bottom.with(static_cast<std::size_t>(v), l);
    else
        s.top = s.top.with(static_cast<std::size_t>(v - n), l);
}

// Index into seq of the leftmost vertex (bottom line wins position ties).
inline std::size_t leftmost_index(const StackedWalk& w, int n) {
    auto key = [&](int v) { return std::make_pair(v < n ? v : v - n, v < n ? 0 : 1); };
    std::size_t best = 0;
    for (std::size_t k = 1; k < w.seq.size(); ++k)
        if (key(w.seq[k]) < key(w.seq[best])) best = k;
    return best;
}

inline bool walk_anticlockwise(const StackedDiagram& s, const StackedWalk& w) {
    const int n = static_cast<int>(s.bottom.size());
    return stacked_label(s, w.seq[leftmost_index(w, n)]) == Label::down;
}

// Reorient a circle to the requested direction: fix the leftmost vertex and
// propagate (arcs flip the label, segments keep it).
inline void relabel_circle(StackedDiagram& s, const StackedWalk& w, bool anticlockwise) {
    const int n = static_cast<int>(s.bottom.size());
    const std::size_t m = w.seq.size();
    const std::size_t start = leftmost_index(w, n);
    Label cur = anticlockwise ? Label::down : Label::up;
    set_stacked_label(s, w.seq[start], cur);
    for (std::size_t t = 0; t + 1 < m; ++t) {
        const std::size_t k = (start + t) % m;
        cur = w.seg_edge[k] ? cur : flipped(cur);
        set_stacked_label(s, w.seq[(k + 1) % m], cur);
    }
    const std::size_t last = (start + m - 1) % m;
    Label closing = w.seg_edge[last] ? cur : flipped(cur);
    if (closing != (anticlockwise ? Label::down : Label::up))
        throw ContractViolation("circle reorientation is inconsistent");
}

// Lines admit exactly one orientation, pinned by their rays (which never
// change). Propagate from one ray end and check the other.
inline void relabel_line(StackedDiagram& s, const StackedWalk& w) {
    if (w.circle) throw ContractViolation("relabel_line on a circle");
    Label cur = stacked_label(s, w.seq.front());
    const Label far_end = stacked_label(s, w.seq.back());
    for (std::size_t k = 0; k + 1 < w.seq.size(); ++k) {
        cur = w.seg_edge[k] ? cur : flipped(cur);
        set_stacked_label(s, w.seq[k + 1], cur);
    }
    if (cur != far_end)
        throw ContractViolation("line reorientation disagrees with its rays");
}

} // namespace detail

// One surgery move: cut the chosen mirror cup/cap pair open, stitch the
// loose ends into two vertical segments, and reorient the affected
// components. Merging two components applies
//   1(x)1 -> 1,  1(x)x -> x,  x(x)1 -> x,  x(x)x -> 0,
//   1(x)y -> y,  x(x)y -> 0,
//   y(x)y -> the two restitched lines when one old line has both rays ^ and
//            the other both rays v, nothing otherwise;
// splitting one component applies
//   1 -> 1(x)x + x(x)1,  x -> x(x)x,  y -> x(x)y,
// where 1 / x are anti-clockwise / clockwise circles and y is a line.
// Returns the 0, 1 or 2 resulting diagrams.
inline std::vector<StackedDiagram> surgery_step(const StackedDiagram& s, const Arc& pr,
                                                SurgeryStats* stats = nullptr) {
    auto it = std::find(s.pairs.begin(), s.pairs.end(), pr);
    if (it == s.pairs.end())
        throw ContractViolation("surgery_step: chosen pair is not in the middle section");
    for (const Arc& q : s.pairs)
        if (q != pr && q.first < pr.first && pr.second < q.second)
            throw ContractViolation("surgery_step: pair is enclosed by another and cannot be "
                                    "connected without crossings");
    if (stats) ++stats->steps;

    const int n = static_cast<int>(s.bottom.size());
    detail::StackedComponents before = detail::stacked_components(s);
    const int cap_comp = before.comp_of[static_cast<std::size_t>(pr.first)];
    const int cup_comp = before.comp_of[static_cast<std::size_t>(n + pr.first)];
    const detail::StackedWalk& wc = before.comps[static_cast<std::size_t>(cap_comp)];
    const detail::StackedWalk& wd = before.comps[static_cast<std::size_t>(cup_comp)];
    const bool same_component = cap_comp == cup_comp;

    StackedDiagram base = s;
    base.pairs.erase(std::find(base.pairs.begin(), base.pairs.end(), pr));
    base.segments.push_back(pr.first);
    base.segments.push_back(pr.second);
    std::sort(base.segments.begin(), base.segments.end());

    detail::StackedComponents after = detail::stacked_components(base);
    std::vector<int> touched;
    for (int v : {pr.first, pr.second, n + pr.first, n + pr.second}) {
        const int c = after.comp_of[static_cast<std::size_t>(v)];
        if (std::find(touched.begin(), touched.end(), c) == touched.end()) touched.push_back(c);
    }
    std::sort(touched.begin(), touched.end());

    std::vector<StackedDiagram> out;
    // each entry: (new component, circle direction) -- nullopt marks a line
    using Assignment = std::vector<std::pair<const detail::StackedWalk*, std::optional<bool>>>;
    auto emit = [&](const Assignment& assignment) {
        StackedDiagram d = base;
        for (const auto& [walk, acw] : assignment) {
            if (acw)
                detail::relabel_circle(d, *walk, *acw);
            else
                detail::relabel_line(d, *walk);
        }
        out.push_back(std::move(d));
    };
    auto new_comp = [&](std::size_t i) -> const detail::StackedWalk& {
        return after.comps[static_cast<std::size_t>(touched[i])];
    };

    if (!same_component) {
        if (wc.circle && wd.circle) {
            if (touched.size() != 1 || !new_comp(0).circle)
                throw ContractViolation("circle merge did not produce one circle");
            const bool t1 = detail::walk_anticlockwise(s, wc);
            const bool t2 = detail::walk_anticlockwise(s, wd);
            if (t1 && t2)
                emit({{&new_comp(0), true}});
            else if (t1 != t2)
                emit({{&new_comp(0), false}});
            // both clockwise: no diagram survives
        } else if (wc.circle != wd.circle) {
            if (touched.size() != 1 || new_comp(0).circle)
                throw ContractViolation("circle/line merge did not produce one line");
            const detail::StackedWalk& circ = wc.circle ? wc : wd;
            if (detail::walk_anticlockwise(s, circ)) emit({{&new_comp(0), std::nullopt}});
        } else {
            // two lines swap ends and stay two lines
            if (stats) ++stats->line_line_steps;
            if (touched.size() != 2 || new_comp(0).circle || new_comp(1).circle)
                throw ContractViolation("line/line surgery did not produce two lines");
            auto ends = [&](const detail::StackedWalk& w) {
                return std::make_pair(detail::stacked_label(s, w.seq.front()),
                                      detail::stacked_label(s, w.seq.back()));
            };
            auto [c1, c2] = ends(wc);
            auto [d1, d2] = ends(wd);
            const bool c_up = c1 == Label::up && c2 == Label::up;
            const bool c_down = c1 == Label::down && c2 == Label::down;
            const bool d_up = d1 == Label::up && d2 == Label::up;
            const bool d_down = d1 == Label::down && d2 == Label::down;
            if ((c_up && d_down) || (c_down && d_up)) {
                if (stats) ++stats->yuk_survivals;
                emit({{&new_comp(0), std::nullopt}, {&new_comp(1), std::nullopt}});
            }
        }
    } else if (wc.circle) {
        if (touched.size() != 2 || !new_comp(0).circle || !new_comp(1).circle)
            throw ContractViolation("circle split did not produce two circles");
        if (detail::walk_anticlockwise(s, wc)) {
            emit({{&new_comp(0), true}, {&new_comp(1), false}});
            emit({{&new_comp(0), false}, {&new_comp(1), true}});
        } else {
            emit({{&new_comp(0), false}, {&new_comp(1), false}});
        }
    } else {
        // a line splits off a clockwise circle
        if (touched.size() != 2 || new_comp(0).circle == new_comp(1).circle)
            throw ContractViolation("line split did not produce a circle and a line");
        const std::size_t circ = new_comp(0).circle ? 0 : 1;
        emit({{&new_comp(circ), false}, {&new_comp(1 - circ), std::nullopt}});
    }
    return out;
}

namespace detail {

inline std::vector<StackedDiagram> run_surgeries(
    StackedDiagram initial, const std::vector<Arc>& order, SurgeryStats* stats,
    const std::function<bool(const StackedDiagram&)>& keep) {
    std::vector<StackedDiagram> work;
    if (!keep || keep(initial)) work.push_back(std::move(initial));
    for (const Arc& pr : order) {
        std::vector<StackedDiagram> next;
        for (const StackedDiagram& sd : work)
            for (StackedDiagram& produced : surgery_step(sd, pr, stats))
                if (!keep || keep(produced)) next.push_back(std::move(produced));
        work = std::move(next);
    }
    return work;
}

inline Element diagram_product(const BasisDiagram& x, const BasisDiagram& y,
                               const std::vector<Arc>* order_override, SurgeryStats* stats,
                               const std::function<bool(const StackedDiagram&)>& keep = {}) {
    if (!same_block(x.weight(), y.weight()))
        throw BlockMismatch("product of diagrams from different blocks");
    if (!(x.cap() == y.cup())) return Element{};

    StackedDiagram init{x.cup(), x.weight(), x.cap().arcs(), x.cap().rays(), y.weight(), y.cap()};
    for (int k : init.segments)
        if (x.weight()[static_cast<std::size_t>(k)] != y.weight()[static_cast<std::size_t>(k)])
            throw ContractViolation("stitched rays carry unequal labels; invalid input pair");

    const std::vector<Arc>& order = order_override ? *order_override : init.pairs;
    std::vector<StackedDiagram> finals = run_surgeries(std::move(init), order, stats, keep);

    Element result;
    for (const StackedDiagram& sd : finals) {
        if (!sd.pairs.empty()) throw ContractViolation("surgery finished with pairs left over");
        if (sd.bottom != sd.top)
            throw ContractViolation("cannot collapse: top and bottom weights differ");
        result.add(BasisDiagram(sd.bottom_outer, sd.bottom, sd.top_outer), 1);
    }
    return result;
}

} // namespace detail

// Direct multiplication of two basis vectors by stitching rays and running
// the generalised surgery procedure; middle pairs are processed left to
// right (enclosing pairs before nested ones). Zero when the inner cap and
// cup diagrams are not mirror images.
inline Element multiply_generalized(const BasisDiagram& x, const BasisDiagram& y,
                                    SurgeryStats* stats = nullptr) {
    return detail::diagram_product(x, y, nullptr, stats);
}

// Same product computed with an explicit middle-pair order. The order must
// be admissible (never picks an enclosed pair early); used to test order
// independence.
inline Element multiply_generalized_with_order(const BasisDiagram& x, const BasisDiagram& y,
                                               const std::vector<Arc>& order) {
    return detail::diagram_product(x, y, &order, nullptr);
}

// All admissible processing orders of a middle section.
inline std::vector<std::vector<Arc>> admissible_orders(const std::vector<Arc>& pairs) {
    std::vector<std::vector<Arc>> out;
    std::vector<Arc> remaining = pairs, acc;
    std::function<void()> rec = [&]() {
        if (remaining.empty()) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            const Arc pr = remaining[i];
            bool blocked = false;
            for (const Arc& q : remaining)
                if (q != pr && q.first < pr.first && pr.second < q.second) blocked = true;
            if (blocked) continue;
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
            acc.push_back(pr);
            rec();
            acc.pop_back();
            remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(i), pr);
        }
    };
    rec();
    return out;
}

// Multiplication of closed diagrams (the plain surgery procedure).
inline Element multiply_closed(const BasisDiagram& x, const BasisDiagram& y,
                               SurgeryStats* stats = nullptr) {
    if (!x.closed() || !y.closed())
        throw PreconditionError("multiply_closed requires closed diagrams");
    return detail::diagram_product(x, y, nullptr, stats);
}

// The closed weight: p new v's on the left and q new ^'s on the right,
// where p / q count the ^'s / v's of lam.
inline Weight closed_weight(const Weight& lam) {
    const int p = lam.count(Label::up), q = lam.count(Label::down);
    std::vector<Label> labels;
    labels.reserve(lam.size() + static_cast<std::size_t>(p + q));
    for (int i = 0; i < p; ++i) labels.push_back(Label::down);
    for (std::size_t i = 0; i < lam.size(); ++i) labels.push_back(lam[i]);
    for (int i = 0; i < q; ++i) labels.push_back(Label::up);
    return Weight(std::move(labels));
}

// Close an oriented circle diagram into a closed one over the bigger
// number line; a degree preserving bijection onto the closed diagrams whose
// weight lies in the closure of the block.
inline BasisDiagram closure(const BasisDiagram& x) {
    const Weight alpha = base_weight(x.cup(), x.weight());
    const Weight beta = base_weight(x.cap(), x.weight());
    BasisDiagram closed(cup_diagram_of(closed_weight(alpha)), closed_weight(x.weight()),
                        cup_diagram_of(closed_weight(beta)));
    if (closed.degree() != x.degree())
        throw ContractViolation("closure changed the degree");
    return closed;
}

// Inverse of closure: strip the p outer-left and q outer-right vertices.
// Rejects closed diagrams whose weight leaves the closure image (those
// represent elements of the quotient ideal).
inline BasisDiagram open_diagram(const BasisDiagram& y, int p, int q) {
    const int total = static_cast<int>(y.weight().size());
    const int inner = total - p - q;
    if (p < 0 || q < 0 || inner < 0) throw PreconditionError("open_diagram: bad boundary sizes");
    for (int i = 0; i < p; ++i)
        if (y.weight()[static_cast<std::size_t>(i)] != Label::down)
            throw PreconditionError("open_diagram: weight lies outside the closure image");
    for (int i = total - q; i < total; ++i)
        if (y.weight()[static_cast<std::size_t>(i)] != Label::up)
            throw PreconditionError("open_diagram: weight lies outside the closure image");

    std::vector<Label> labels;
    labels.reserve(static_cast<std::size_t>(inner));
    for (int i = p; i < p + inner; ++i) labels.push_back(y.weight()[static_cast<std::size_t>(i)]);
    Weight w(std::move(labels));

    auto strip = [&](const ArcDiagram& d) {
        std::vector<Arc> arcs;
        auto outside = [&](int v) { return v < p || v >= p + inner; };
        for (const Arc& a : d.arcs()) {
            if (outside(a.first) && outside(a.second)) continue;
            if (outside(a.first) || outside(a.second)) continue; // surviving end becomes a ray
            arcs.emplace_back(a.first - p, a.second - p);
        }
        return ArcDiagram::for_weight(w, arcs);
    };
    return BasisDiagram(strip(y.cup()), w, strip(y.cap()));
}

// The quotient-route product: close both diagrams, multiply in the closed
// algebra, drop every term whose weight leaves the closure image, and open
// the survivors. Independent oracle for multiply_generalized. With
// early_discard, diagrams that have already acquired an ^ on an outer-left
// vertex or a v on an outer-right vertex are dropped between surgeries;
// the final filter makes this a pure optimisation.
inline Element multiply_via_closure(const BasisDiagram& x, const BasisDiagram& y,
                                    bool early_discard = false) {
    if (!same_block(x.weight(), y.weight()))
        throw BlockMismatch("product of diagrams from different blocks");
    if (!(x.cap() == y.cup())) return Element{};
    const int p = x.weight().count(Label::up), q = x.weight().count(Label::down);
    const BasisDiagram cx = closure(x), cy = closure(y);
    const int total = static_cast<int>(cx.weight().size());

    std::function<bool(const StackedDiagram&)> keep;
    if (early_discard) {
        keep = [p, q, total](const StackedDiagram& sd) {
            for (int i = 0; i < p; ++i)
                if (sd.bottom[static_cast<std::size_t>(i)] == Label::up ||
                    sd.top[static_cast<std::size_t>(i)] == Label::up)
                    return false;
            for (int i = total - q; i < total; ++i)
                if (sd.bottom[static_cast<std::size_t>(i)] == Label::down ||
                    sd.top[static_cast<std::size_t>(i)] == Label::down)
                    return false;
            return true;
        };
    }
    Element closed = detail::diagram_product(cx, cy, nullptr, nullptr, keep);

    Element result;
    for (const auto& [d, c] : closed) {
        bool in_image = true;
        for (int i = 0; i < p && in_image; ++i)
            if (d.weight()[static_cast<std::size_t>(i)] != Label::down) in_image = false;
        for (int i = total - q; i < total && in_image; ++i)
            if (d.weight()[static_cast<std::size_t>(i)] != Label::up) in_image = false;
        if (in_image) result.add(open_diagram(d, p, q), c);
    }
    return result;
}

} // namespace arcalg
