#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcalg/algebra.hpp"
#include "arcalg/arc_diagram.hpp"
#include "arcalg/basis_diagram.hpp"
#include "arcalg/error.hpp"
#include "arcalg/laurent.hpp"
#include "arcalg/weight.hpp"

namespace arcalg {

// d_{lam,mu}(q) = q^deg(lam_cup mu) when lam subset mu, else 0.
inline LaurentPoly decomposition_entry(const Weight& lam, const Weight& mu) {
    if (!subset_rel(lam, mu)) return LaurentPoly{};
    return LaurentPoly::q_power(half_degree(cup_diagram_of(lam), mu));
}

// The q-decomposition matrix: upper unitriangular in block order.
inline PolyMatrix decomposition_matrix(const Block& block) {
    PolyMatrix D(block);
    for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < block.size(); ++c)
            D.at(r, c) = decomposition_entry(block[r], block[c]);
    return D;
}

// c_{lam,mu}(q) = sum over nu with lam subset nu superset mu of
// q^(deg(lam_cup nu) + deg(nu mu_cap)); the graded dimension of the
// (lam, mu) idempotent corner. Equals (D D^T)_{lam,mu}.
inline LaurentPoly cartan_entry(const Block& block, const Weight& lam, const Weight& mu) {
    LaurentPoly out;
    const ArcDiagram cl = cup_diagram_of(lam);
    const ArcDiagram cm = cup_diagram_of(mu);
    for (const Weight& nu : block.members()) {
        if (!is_oriented(cl, nu) || !is_oriented(cm, nu)) continue;
        out.add_term(half_degree(cl, nu) + half_degree(cm, nu), 1);
    }
    return out;
}

inline PolyMatrix cartan_matrix(const Block& block) {
    PolyMatrix C(block);
    for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < block.size(); ++c)
            C.at(r, c) = cartan_entry(block, block[r], block[c]);
    return C;
}

// The cell module V(mu): spanned by the oriented cup diagrams (c mu|, i.e.
// by the weights lam subset mu, graded by deg(lam_cup mu).
struct CellModule {
    struct Vec {
        Weight lambda;  // the anchor weight, c = cup diagram of lambda
        ArcDiagram cup;
        int degree;
    };
    Weight mu;
    Block block;
    std::vector<Vec> basis; // ordered by anchor weight in block order

    LaurentPoly graded_dim() const {
        LaurentPoly out;
        for (const Vec& v : basis) out.add_term(v.degree, 1);
        return out;
    }

    // layer j -> anchors of the degree-j vectors (the composition factors
    // L(lambda)<j> of the j-th radical layer)
    std::vector<std::vector<Weight>> layers() const {
        int top = 0;
        for (const Vec& v : basis) top = std::max(top, v.degree);
        std::vector<std::vector<Weight>> out(static_cast<std::size_t>(top + 1));
        for (const Vec& v : basis) out[static_cast<std::size_t>(v.degree)].push_back(v.lambda);
        return out;
    }

    int index_of(const Weight& lambda) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].lambda == lambda) return static_cast<int>(i);
        return -1;
    }
};

inline CellModule cell_module(const Block& block, const Weight& mu) {
    if (!block.contains(mu)) throw BlockMismatch("cell_module: weight outside the block");
    CellModule m{mu, block, {}};
    for (const Weight& lam : block.members()) {
        ArcDiagram c = cup_diagram_of(lam);
        if (!is_oriented(c, mu)) continue;
        const int deg = half_degree(c, mu);
        m.basis.push_back({lam, std::move(c), deg});
    }
    return m;
}

// (a lam b) . (c mu| = s_{a lam b}(mu) (a mu| when b* = c and (a, mu) is
// oriented, zero otherwise. Returns the index of the image basis vector
// when the action is nonzero.
inline std::optional<int> cell_action(const BasisDiagram& x, const CellModule& m, int index) {
    const CellModule::Vec& v = m.basis[static_cast<std::size_t>(index)];
    if (!(x.cap() == v.cup)) return std::nullopt;
    if (!is_oriented(x.cup(), m.mu)) return std::nullopt;
    if (structure_constant(x, m.mu) == 0) return std::nullopt;
    const Weight alpha = base_weight(x.cup(), m.mu);
    const int target = m.index_of(alpha);
    if (target < 0) throw ContractViolation("cell action left the module basis");
    return target;
}

// Apply an element to a vector of V(mu) written in the cell basis.
inline std::vector<std::int64_t> cell_apply(const Element& e, const CellModule& m,
                                            const std::vector<std::int64_t>& vec) {
    std::vector<std::int64_t> out(m.basis.size(), 0);
    for (const auto& [d, c] : e)
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i] == 0) continue;
            if (auto t = cell_action(d, m, static_cast<int>(i)))
                out[static_cast<std::size_t>(*t)] =
                    checked_add(out[static_cast<std::size_t>(*t)], checked_mul(c, vec[i]));
        }
    return out;
}

// Graded dimension of the projective module P(lam) = K e_lam.
inline LaurentPoly graded_dim_projective(const Block& block, const Weight& lam) {
    LaurentPoly out;
    const ArcDiagram cl = cup_diagram_of(lam);
    for (const Weight& mu : block.members()) {
        if (!is_oriented(cl, mu)) continue;
        const int shift = half_degree(cl, mu); // deg(mu lam_cap)
        for (const Weight& nu : block.members()) {
            const ArcDiagram cn = cup_diagram_of(nu);
            if (is_oriented(cn, mu)) out.add_term(shift + half_degree(cn, mu), 1);
        }
    }
    return out;
}

// The cell filtration of P(lam): the 2^defect(lam) weights mu superset lam,
// enumerated so larger weights come first (incomparable pairs fall back to
// block order), each with its grading shift deg(mu lam_cap).
struct Filtration {
    Weight lambda;
    std::vector<std::pair<Weight, int>> layers; // (mu_i, shift_i), lambda last
};

inline Filtration projective_filtration(const Block& block, const Weight& lam) {
    if (!block.contains(lam)) throw BlockMismatch("projective_filtration: weight outside block");
    const ArcDiagram cl = cup_diagram_of(lam);
    std::vector<Weight> ups;
    for (const Weight& mu : block.members())
        if (is_oriented(cl, mu)) ups.push_back(mu);
    // topological: repeatedly take the block-order-smallest weight that is
    // maximal among the remainder
    Filtration out{lam, {}};
    std::vector<char> used(ups.size(), 0);
    for (std::size_t step = 0; step < ups.size(); ++step) {
        int pick = -1;
        for (std::size_t i = 0; i < ups.size(); ++i) {
            if (used[i]) continue;
            bool maximal = true;
            for (std::size_t j = 0; j < ups.size(); ++j)
                if (!used[j] && j != i && bruhat_less(ups[i], ups[j])) maximal = false;
            if (maximal) {
                pick = static_cast<int>(i);
                break; // members are in block order, so first hit is the tie-break
            }
        }
        if (pick < 0) throw ContractViolation("filtration ordering failed");
        used[static_cast<std::size_t>(pick)] = 1;
        const Weight& mu = ups[static_cast<std::size_t>(pick)];
        out.layers.emplace_back(mu, half_degree(cl, mu));
    }
    return out;
}

// Truncation to H: keep the vectors whose cup diagram is anchored at a
// maximal-defect weight.

// Graded dimension of e V(mu).
inline LaurentPoly truncated_cell_graded_dim(const Block& block, const Weight& mu) {
    const int top = defect(block);
    LaurentPoly out;
    for (const CellModule::Vec& v : cell_module(block, mu).basis)
        if (defect(v.lambda) == top) out.add_term(v.degree, 1);
    return out;
}

// Graded dimension of e P(lam) = H e_lam.
inline LaurentPoly truncated_projective_graded_dim(const Block& block, const Weight& lam) {
    const int top = defect(block);
    LaurentPoly out;
    const ArcDiagram cl = cup_diagram_of(lam);
    for (const Weight& mu : block.members()) {
        if (!is_oriented(cl, mu)) continue;
        const int shift = half_degree(cl, mu);
        for (const Weight& nu : block.members()) {
            if (defect(nu) != top) continue;
            const ArcDiagram cn = cup_diagram_of(nu);
            if (is_oriented(cn, mu)) out.add_term(shift + half_degree(cn, mu), 1);
        }
    }
    return out;
}

// e L(lam) is nonzero exactly for the maximal-defect weights.
inline bool truncated_simple_nonzero(const Block& block, const Weight& lam) {
    return defect(lam) == defect(block);
}

} // namespace arcalg
