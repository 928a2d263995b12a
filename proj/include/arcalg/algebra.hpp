#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arcalg/arc_diagram.hpp"
#include "arcalg/basis_diagram.hpp"
#include "arcalg/element.hpp"
#include "arcalg/error.hpp"
#include "arcalg/surgery.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

enum class Route { generalized, via_closure };

// Basis of K over a block: every oriented circle diagram (a lam b) with lam
// in the block, in canonical order.
inline std::vector<BasisDiagram> basis_K(const Block& block) {
    std::vector<BasisDiagram> out;
    for (const Weight& lam : block.members()) {
        std::vector<ArcDiagram> halves;
        for (const Weight& mu : block.members())
            if (is_oriented(cup_diagram_of(mu), lam)) halves.push_back(cup_diagram_of(mu));
        for (const ArcDiagram& a : halves)
            for (const ArcDiagram& b : halves) out.emplace_back(a, lam, b);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

// Is the diagram's cup (and cap) side anchored at a maximal-defect weight?
inline bool in_H(const BasisDiagram& d, const Block& block) {
    const int top = defect(block);
    return defect(base_weight(d.cup(), d.weight())) == top &&
           defect(base_weight(d.cap(), d.weight())) == top;
}

// Basis of the subalgebra H: both half diagrams anchored at maximal-defect
// weights.
inline std::vector<BasisDiagram> basis_H(const Block& block) {
    std::vector<BasisDiagram> out;
    for (const BasisDiagram& d : basis_K(block))
        if (in_H(d, block)) out.push_back(d);
    return out;
}

// Sum of the idempotents e_lam: the identity of the finite-dimensional
// algebra.
inline Element identity(const Block& block) {
    Element out;
    for (const Weight& lam : block.members()) out.add(BasisDiagram::idempotent(lam), 1);
    return out;
}

// Bilinear extension of the diagram product. The generalised surgery route
// is the default; the closure route is kept as an independent oracle.
inline Element multiply(const Element& x, const Element& y, Route route = Route::generalized,
                        SurgeryStats* stats = nullptr) {
    Element out;
    for (const auto& [dx, cx] : x)
        for (const auto& [dy, cy] : y) {
            Element prod = route == Route::generalized ? multiply_generalized(dx, dy, stats)
                                                       : multiply_via_closure(dx, dy);
            out.add(prod, checked_mul(cx, cy));
        }
    return out;
}

// The * anti-automorphism, (a lam b) -> (b* lam a*).
inline Element star(const Element& x) {
    Element out;
    for (const auto& [d, c] : x) out.add(d.mirrored(), c);
    return out;
}

// The 180 degree rotation anti-isomorphism onto the rotated block.
inline Element rotate(const Element& x) {
    Element out;
    for (const auto& [d, c] : x) out.add(d.rotated(), c);
    return out;
}

// The scalar s_x(mu) in {0,1}: the coefficient of (a mu d) in
// (a lam b)(b* mu d), which is independent of d. Computed with d the
// canonical cap diagram of mu. Zero when (a, mu) is not oriented.
inline int structure_constant(const BasisDiagram& x, const Weight& mu) {
    if (!same_block(x.weight(), mu))
        throw BlockMismatch("structure_constant: weight from another block");
    if (!is_oriented(x.cap(), mu))
        throw PreconditionError("structure_constant: (b*, mu) is not an oriented cup diagram");
    if (!is_oriented(x.cup(), mu)) return 0;
    BasisDiagram right(x.cap(), mu, cup_diagram_of(mu));
    Element prod = multiply_generalized(x, right);
    BasisDiagram target(x.cup(), mu, cup_diagram_of(mu));
    const std::int64_t s = prod.coeff(target);
    if (s != 0 && s != 1) throw ContractViolation("structure constant outside {0,1}");
    return static_cast<int>(s);
}

// Block embedding at a fixed vertex offset: the weights of the source block
// appear as the labels of positions offset+1 .. offset+m of the target, and
// the remaining positions carry the unique admissible filling (all new ^'s
// before all new v's). Basis-to-basis, degree preserving and multiplicative.
class BlockEmbedding {
public:
    BlockEmbedding(Block source, Block target, int offset)
        : source_(std::move(source)), target_(std::move(target)), offset_(offset) {
        const int m = static_cast<int>(source_.representative().size());
        const int n = static_cast<int>(target_.representative().size());
        if (offset_ < 0 || offset_ + m > n)
            throw PreconditionError("block embedding: offset out of range");
        const Weight& t = target_.representative();
        const Weight& s = source_.representative();
        for (int i = 0; i < m; ++i) {
            const bool slot_s = is_slot(s[static_cast<std::size_t>(i)]);
            const bool slot_t = is_slot(t[static_cast<std::size_t>(i + offset_)]);
            if (slot_s != slot_t ||
                (!slot_s && s[static_cast<std::size_t>(i)] != t[static_cast<std::size_t>(i + offset_)]))
                throw PreconditionError("block embedding: o/x patterns do not match");
        }
        const int new_up = target_.representative().count(Label::up) - source_.representative().count(Label::up);
        const int new_down =
            target_.representative().count(Label::down) - source_.representative().count(Label::down);
        if (new_up < 0 || new_down < 0)
            throw PreconditionError("block embedding: target block is too small");
        // fill the new slot positions, left to right, with ^'s then v's
        int ups_left = new_up;
        for (int i = 0; i < n; ++i) {
            if (i >= offset_ && i < offset_ + m) continue;
            if (!is_slot(t[static_cast<std::size_t>(i)])) {
                filler_.emplace_back(i, t[static_cast<std::size_t>(i)]);
            } else if (ups_left > 0) {
                filler_.emplace_back(i, Label::up);
                --ups_left;
            } else {
                filler_.emplace_back(i, Label::down);
            }
        }
    }

    const Block& source() const { return source_; }
    const Block& target() const { return target_; }
    int offset() const { return offset_; }

    Weight extend(const Weight& gamma) const {
        if (!source_.contains(gamma))
            throw BlockMismatch("extend: weight is not in the source block");
        std::vector<Label> labels(target_.representative().size(), Label::nought);
        for (std::size_t i = 0; i < gamma.size(); ++i)
            labels[i + static_cast<std::size_t>(offset_)] = gamma[i];
        for (const auto& [pos, l] : filler_) labels[static_cast<std::size_t>(pos)] = l;
        Weight out{std::move(labels)};
        if (!target_.contains(out))
            throw PreconditionError("block embedding: extension leaves the target block");
        return out;
    }

    BasisDiagram extend(const BasisDiagram& d) const {
        const Weight alpha = extend(base_weight(d.cup(), d.weight()));
        const Weight beta = extend(base_weight(d.cap(), d.weight()));
        BasisDiagram out(cup_diagram_of(alpha), extend(d.weight()), cup_diagram_of(beta));
        if (out.degree() != d.degree())
            throw ContractViolation("block embedding changed a degree");
        return out;
    }

    Element extend(const Element& e) const {
        Element out;
        for (const auto& [d, c] : e) out.add(extend(d), c);
        return out;
    }

private:
    Block source_;
    Block target_;
    int offset_;
    std::vector<std::pair<int, Label>> filler_;
};

inline Element extend(const Block& source, const Block& target, int offset, const Element& e) {
    return BlockEmbedding(source, target, offset).extend(e);
}

// The involution # on the basis of H: mirror the diagram and reverse the
// orientation of every circle (line vertices keep their labels). Maps
// degree d to 2*defect(block) - d.
inline BasisDiagram hash_involution(const BasisDiagram& x, const Block& block) {
    if (!in_H(x, block)) throw PreconditionError("hash involution is defined on the basis of H");
    Weight mu = x.weight();
    for (const Component& comp : components(x.cup(), x.cap())) {
        if (!comp.circle) continue;
        for (int v : comp.vertices)
            mu = mu.with(static_cast<std::size_t>(v), flipped(mu[static_cast<std::size_t>(v)]));
    }
    return BasisDiagram(x.cap(), mu, x.cup());
}

// The symmetrising form on H: the coefficient sum in the top degree
// 2*defect(block). Rejects elements with support outside H.
inline std::int64_t tau(const Element& e, const Block& block) {
    const int top = 2 * defect(block);
    std::int64_t out = 0;
    for (const auto& [d, c] : e) {
        if (!block.contains(d.weight()))
            throw BlockMismatch("tau: element from another block");
        if (!in_H(d, block))
            throw PreconditionError("tau is defined on H, not on all of K");
        if (d.degree() == top) out = checked_add(out, c);
    }
    return out;
}

} // namespace arcalg
