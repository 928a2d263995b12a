#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arcalg/algebra.hpp"
#include "arcalg/rep_theory.hpp"
#include "arcalg/surgery.hpp"

namespace arcalg {

struct VerifyOptions {
    int max_vertices = 5;
    long long samples = 10000;
    std::uint64_t seed = 0x5eedf00dULL;
};

struct SuiteResult {
    std::string name;
    bool ok = true;
    long long checks = 0;
    std::vector<std::string> failures;

    void fail(const std::string& counterexample) {
        ok = false;
        if (failures.size() < 8) failures.push_back(counterexample);
    }
};

// Every block on at most max_vertices vertices, all o/x placements
// included, smallest number lines first.
inline void for_each_block(int max_vertices, const std::function<void(const Block&)>& fn) {
    for (int n = 0; n <= max_vertices; ++n) {
        std::vector<int> pattern(static_cast<std::size_t>(n), 0); // 0 slot, 1 nought, 2 cross
        while (true) {
            int slots = 0;
            for (int v : pattern)
                if (v == 0) ++slots;
            for (int d = 0; d <= slots; ++d) {
                std::vector<Label> labels;
                int downs = d;
                for (int v : pattern) {
                    if (v == 1)
                        labels.push_back(Label::nought);
                    else if (v == 2)
                        labels.push_back(Label::cross);
                    else if (downs-- > 0)
                        labels.push_back(Label::down);
                    else
                        labels.push_back(Label::up);
                }
                fn(Block(Weight(std::move(labels))));
            }
            int i = n - 1;
            while (i >= 0 && pattern[static_cast<std::size_t>(i)] == 2) {
                pattern[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++pattern[static_cast<std::size_t>(i)];
        }
    }
}

namespace detail {

template <class F>
void for_each_composable(const std::vector<BasisDiagram>& basis, F&& fn) {
    for (const BasisDiagram& x : basis)
        for (const BasisDiagram& y : basis)
            if (x.cap() == y.cup()) fn(x, y);
}

inline std::string pair_str(const BasisDiagram& x, const BasisDiagram& y) {
    return "(" + x.str() + ") * (" + y.str() + ")";
}

// Non-crossing perfect matchings of the given vertex list.
inline std::vector<std::vector<Arc>> noncrossing_matchings_of(const std::vector<int>& verts) {
    if (verts.empty()) return {{}};
    std::vector<std::vector<Arc>> out;
    for (std::size_t k = 1; k < verts.size(); k += 2) {
        const std::vector<int> inside(verts.begin() + 1, verts.begin() + static_cast<std::ptrdiff_t>(k));
        const std::vector<int> outside(verts.begin() + static_cast<std::ptrdiff_t>(k) + 1, verts.end());
        for (const auto& mi : noncrossing_matchings_of(inside))
            for (const auto& mo : noncrossing_matchings_of(outside)) {
                std::vector<Arc> m;
                m.emplace_back(verts.front(), verts[k]);
                m.insert(m.end(), mi.begin(), mi.end());
                m.insert(m.end(), mo.begin(), mo.end());
                out.push_back(std::move(m));
            }
    }
    return out;
}

inline std::vector<std::vector<Arc>> noncrossing_matchings(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return noncrossing_matchings_of(all);
}

} // namespace detail

// --- grading -------------------------------------------------------------
// Degree bookkeeping: every product term has degree deg(x) + deg(y); a
// circle's degree is caps-1 / caps+1 for anti-clockwise / clockwise;
// closure and the * involution preserve degree.
inline SuiteResult check_grading(const VerifyOptions& opt) {
    SuiteResult r{"grading"};

    // per-circle degree rule on all closed diagrams with at most 4 arcs
    for (int arcs = 1; arcs <= 4; ++arcs) {
        const int n = 2 * arcs;
        auto matchings = detail::noncrossing_matchings(n);
        for (const auto& cup_arcs : matchings)
            for (const auto& cap_arcs : matchings) {
                ArcDiagram cup = ArcDiagram::from_arcs(static_cast<std::size_t>(n), cup_arcs, {});
                ArcDiagram cap = ArcDiagram::from_arcs(static_cast<std::size_t>(n), cap_arcs, {});
                auto comps = components(cup, cap);
                const int k = static_cast<int>(comps.size());
                for (int mask = 0; mask < (1 << k); ++mask) {
                    // orient circle c anti-clockwise iff bit c unset
                    std::vector<Label> labels(static_cast<std::size_t>(n), Label::nought);
                    for (int c = 0; c < k; ++c) {
                        const auto& comp = comps[static_cast<std::size_t>(c)];
                        // propagate around the circle: arcs alternate labels
                        Label cur = (mask >> c) & 1 ? Label::up : Label::down;
                        int leftmost = *std::min_element(comp.vertices.begin(), comp.vertices.end());
                        std::size_t at = 0;
                        while (comp.vertices[at] != leftmost) ++at;
                        const std::size_t m = comp.vertices.size();
                        for (std::size_t t = 0; t < m; ++t) {
                            labels[static_cast<std::size_t>(comp.vertices[(at + t) % m])] =
                                t % 2 == 0 ? cur : flipped(cur);
                        }
                    }
                    Weight w{labels};
                    if (!is_oriented(cup, w) || !is_oriented(cap, w)) {
                        r.fail("orientation propagation failed on " + w.str());
                        continue;
                    }
                    BasisDiagram d(cup, w, cap);
                    int per_component = 0;
                    for (int c = 0; c < k; ++c) {
                        const auto& comp = comps[static_cast<std::size_t>(c)];
                        const int caps_in = static_cast<int>(comp.vertices.size()) / 2;
                        per_component += circle_anticlockwise(comp, w) ? caps_in - 1 : caps_in + 1;
                    }
                    ++r.checks;
                    if (per_component != d.degree())
                        r.fail("per-circle degree of " + d.str() + " is " +
                               std::to_string(per_component) + ", clockwise count gives " +
                               std::to_string(d.degree()));
                }
            }
    }

    // degree additivity on all products; closure preserves degree
    for_each_block(opt.max_vertices, [&](const Block& block) {
        auto basis = basis_K(block);
        for (const BasisDiagram& x : basis) {
            BasisDiagram cx = closure(x);
            ++r.checks;
            if (cx.degree() != x.degree())
                r.fail("closure changed degree of " + x.str());
            BasisDiagram sx = x.mirrored();
            ++r.checks;
            if (sx.degree() != x.degree()) r.fail("* changed degree of " + x.str());
        }
        detail::for_each_composable(basis, [&](const BasisDiagram& x, const BasisDiagram& y) {
            Element p = multiply_generalized(x, y);
            for (const auto& [t, c] : p) {
                (void)c;
                ++r.checks;
                if (t.degree() != x.degree() + y.degree())
                    r.fail("degree not additive in " + detail::pair_str(x, y) + " term " + t.str());
            }
        });
    });
    return r;
}

// --- assoc ---------------------------------------------------------------
// Algebra laws: associativity (exhaustive on small blocks, sampled on
// larger ones), idempotent orthogonality, two-sided identity, bilinearity.
inline SuiteResult check_assoc(const VerifyOptions& opt) {
    SuiteResult r{"assoc"};

    auto triple_ok = [&](const BasisDiagram& x, const BasisDiagram& y, const BasisDiagram& z) {
        Element left = multiply(multiply_generalized(x, y), Element(z));
        Element right = multiply(Element(x), multiply_generalized(y, z));
        ++r.checks;
        if (!(left == right))
            r.fail("associativity fails on (" + x.str() + ")(" + y.str() + ")(" + z.str() + ")");
    };

    // exhaustive: K over the ^v block; H over the vv^^ block
    {
        auto b5 = basis_K(Block(Weight::parse("^v")));
        for (const auto& x : b5)
            for (const auto& y : b5)
                for (const auto& z : b5) triple_ok(x, y, z);
        auto h12 = basis_H(Block(Weight::parse("vv^^")));
        for (const auto& x : h12)
            for (const auto& y : h12)
                for (const auto& z : h12) triple_ok(x, y, z);
    }

    // seeded random triples on the bigger Khovanov blocks
    {
        std::mt19937_64 rng(opt.seed);
        for (const char* rep : {"vv^^", "vvv^^^"}) {
            auto basis = basis_K(Block(Weight::parse(rep)));
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            for (long long s = 0; s < opt.samples; ++s)
                triple_ok(basis[pick(rng)], basis[pick(rng)], basis[pick(rng)]);
        }
    }

    // idempotents and the identity; bilinearity spot checks
    for_each_block(std::min(opt.max_vertices, 5), [&](const Block& block) {
        Element one = identity(block);
        for (const Weight& a : block.members())
            for (const Weight& b : block.members()) {
                Element p = multiply_generalized(BasisDiagram::idempotent(a),
                                                 BasisDiagram::idempotent(b));
                Element expect;
                if (a == b) expect.add(BasisDiagram::idempotent(a), 1);
                ++r.checks;
                if (!(p == expect)) r.fail("idempotent law fails for e_" + a.str() + " e_" + b.str());
            }
        for (const BasisDiagram& x : basis_K(block)) {
            ++r.checks;
            if (!(multiply(one, Element(x)) == Element(x)) ||
                !(multiply(Element(x), one) == Element(x)))
                r.fail("identity fails on " + x.str());
        }
    });
    {
        std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        auto basis = basis_K(Block(Weight::parse("vv^^")));
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (int s = 0; s < 200; ++s) {
            Element x(basis[pick(rng)], static_cast<std::int64_t>(pick(rng) % 5) - 2);
            Element y(basis[pick(rng)], 1 + static_cast<std::int64_t>(pick(rng) % 3));
            Element z(basis[pick(rng)], 1);
            ++r.checks;
            if (!(multiply(x + y, z) == multiply(x, z) + multiply(y, z)))
                r.fail("bilinearity fails");
        }
    }
    return r;
}

// --- oracle --------------------------------------------------------------
// The two multiplication routes agree, with and without early discarding,
// and the result does not depend on the admissible surgery order.
inline SuiteResult check_oracle(const VerifyOptions& opt) {
    SuiteResult r{"oracle"};
    for_each_block(opt.max_vertices, [&](const Block& block) {
        auto basis = basis_K(block);
        detail::for_each_composable(basis, [&](const BasisDiagram& x, const BasisDiagram& y) {
            Element direct = multiply_generalized(x, y);
            Element quotient = multiply_via_closure(x, y);
            ++r.checks;
            if (!(direct == quotient))
                r.fail("routes disagree on " + detail::pair_str(x, y) + ": direct " +
                       direct.str() + " vs closure " + quotient.str());
            Element pruned = multiply_via_closure(x, y, /*early_discard=*/true);
            ++r.checks;
            if (!(quotient == pruned))
                r.fail("early discard changes " + detail::pair_str(x, y));
        });
    });
    for_each_block(std::min(opt.max_vertices, 5), [&](const Block& block) {
        auto basis = basis_K(block);
        detail::for_each_composable(basis, [&](const BasisDiagram& x, const BasisDiagram& y) {
            Element reference = multiply_generalized(x, y);
            for (const auto& order : admissible_orders(x.cap().arcs())) {
                ++r.checks;
                if (!(multiply_generalized_with_order(x, y, order) == reference)) {
                    std::string o;
                    for (const Arc& a : order)
                        o += "(" + std::to_string(a.first + 1) + "," +
                             std::to_string(a.second + 1) + ")";
                    r.fail("surgery order " + o + " changes " + detail::pair_str(x, y));
                }
            }
        });
    });
    return r;
}

// --- triangular ----------------------------------------------------------
// Order-theoretic facts: subset implies Bruhat, product terms sit at
// weights above both factors, the distinguished coefficient is 1, and the
// decomposition matrix is upper unitriangular.
inline SuiteResult check_triangular(const VerifyOptions& opt) {
    SuiteResult r{"triangular"};
    for_each_block(opt.max_vertices, [&](const Block& block) {
        for (const Weight& mu : block.members())
            for (const Weight& lam : block.members()) {
                ++r.checks;
                if (subset_rel(mu, lam) && !bruhat_leq(mu, lam))
                    r.fail("subset without Bruhat: " + mu.str() + " inside " + lam.str());
            }

        auto basis = basis_K(block);
        detail::for_each_composable(basis, [&](const BasisDiagram& x, const BasisDiagram& y) {
            Element p = multiply_generalized(x, y);
            for (const auto& [t, c] : p) {
                ++r.checks;
                if (!(t.cup() == x.cup()) || !(t.cap() == y.cap()))
                    r.fail("product term changed outer diagrams in " + detail::pair_str(x, y));
                if (!bruhat_leq(x.weight(), t.weight()) || !bruhat_leq(y.weight(), t.weight()))
                    r.fail("triangularity fails in " + detail::pair_str(x, y) + ": term " + t.str());
                if (c <= 0) r.fail("non-positive coefficient in " + detail::pair_str(x, y));
            }
            // distinguished coefficient: b equal to the canonical cap of lam
            if (x.cap() == cup_diagram_of(x.weight()) && is_oriented(x.cup(), y.weight())) {
                BasisDiagram lead(x.cup(), y.weight(), y.cap());
                ++r.checks;
                if (p.coeff(lead) != 1)
                    r.fail("distinguished coefficient is not 1 in " + detail::pair_str(x, y));
            }
        });

        PolyMatrix D = decomposition_matrix(block);
        for (std::size_t i = 0; i < D.size(); ++i)
            for (std::size_t j = 0; j < D.size(); ++j) {
                ++r.checks;
                if (i == j && !(D.at(i, j) == LaurentPoly::constant(1)))
                    r.fail("diagonal of D is not 1 at " + block[i].str());
                if (i > j && !D.at(i, j).zero())
                    r.fail("D not upper triangular at (" + block[i].str() + "," + block[j].str() + ")");
            }
    });
    return r;
}

// --- cellularity ----------------------------------------------------------
// The Graham-Lehrer axiom: modulo diagrams with weight above mu, left
// multiplication acts on (gamma mu delta) with coefficients independent of
// delta; checked for K and for H, and in particular the structure constant
// is independent of the chosen cap diagram.
inline SuiteResult check_cellularity(const VerifyOptions& opt) {
    SuiteResult r{"cellularity"};
    auto run = [&](const Block& block, bool restrict_H) {
        auto basis = restrict_H ? basis_H(block) : basis_K(block);
        const int top = defect(block);
        for (const Weight& mu : block.members()) {
            std::vector<Weight> M;
            for (const Weight& g : block.members())
                if (subset_rel(g, mu) && (!restrict_H || defect(g) == top)) M.push_back(g);
            for (const BasisDiagram& x : basis)
                for (const Weight& gamma : M) {
                    // other x annihilate every (gamma mu delta), so the
                    // coefficient row is zero independent of delta
                    if (!(x.cap() == cup_diagram_of(gamma))) continue;
                    std::vector<std::vector<std::int64_t>> coeffs;
                    for (const Weight& delta : M) {
                        BasisDiagram cgd(cup_diagram_of(gamma), mu,
                                         cup_diagram_of(delta));
                        Element p = multiply_generalized(x, cgd);
                        std::vector<std::int64_t> row;
                        for (const Weight& gp : M)
                            row.push_back(p.coeff(
                                BasisDiagram(cup_diagram_of(gp), mu, cup_diagram_of(delta))));
                        coeffs.push_back(std::move(row));
                    }
                    for (std::size_t i = 1; i < coeffs.size(); ++i) {
                        ++r.checks;
                        if (coeffs[i] != coeffs[0])
                            r.fail("axiom (4) coefficients depend on delta for x=" + x.str() +
                                   " mu=" + mu.str() + " gamma=" + gamma.str() +
                                   (restrict_H ? " (H)" : " (K)"));
                    }
                }
        }
    };
    for_each_block(std::min(opt.max_vertices, 5), [&](const Block& block) {
        run(block, false);
        run(block, true);
    });

    // structure constant equals the coefficient extracted with every valid d
    for_each_block(std::min(opt.max_vertices, 6), [&](const Block& block) {
        auto basis = basis_K(block);
        for (const BasisDiagram& x : basis)
            for (const Weight& mu : block.members()) {
                if (!is_oriented(x.cap(), mu)) continue;
                const int s = structure_constant(x, mu);
                for (const Weight& delta : block.members()) {
                    if (!subset_rel(delta, mu)) continue;
                    BasisDiagram right(x.cap(), mu, cup_diagram_of(delta));
                    Element p = multiply_generalized(x, right);
                    std::int64_t got = is_oriented(x.cup(), mu)
                                           ? p.coeff(BasisDiagram(x.cup(), mu, cup_diagram_of(delta)))
                                           : 0;
                    ++r.checks;
                    if (got != s)
                        r.fail("structure constant depends on d: x=" + x.str() + " mu=" + mu.str() +
                               " d of " + delta.str());
                }
            }
    });
    return r;
}

// --- symmetric -----------------------------------------------------------
// H as a symmetric algebra: the # involution and its degree law, the Gram
// matrix of tau is the permutation pairing x with x^#, H is closed under
// multiplication, and the two-line surgery rule never produces output
// during H-basis products.
inline SuiteResult check_symmetric(const VerifyOptions& opt) {
    SuiteResult r{"symmetric"};
    for_each_block(std::min(opt.max_vertices, 6), [&](const Block& block) {
        auto h = basis_H(block);
        const int top2 = 2 * defect(block);
        for (const BasisDiagram& x : h) {
            BasisDiagram hx = hash_involution(x, block);
            ++r.checks;
            if (!(hash_involution(hx, block) == x))
                r.fail("# is not involutive on " + x.str());
            if (hx.degree() != top2 - x.degree())
                r.fail("# degree law fails on " + x.str());
        }
        SurgeryStats stats;
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j) {
                Element p = multiply_generalized(h[i], h[j], &stats);
                for (const auto& [t, c] : p) {
                    (void)c;
                    ++r.checks;
                    if (!in_H(t, block))
                        r.fail("H not closed under multiplication: " +
                               detail::pair_str(h[i], h[j]));
                }
                const std::int64_t g = tau(p, block);
                const bool paired = hash_involution(h[i], block) == h[j];
                ++r.checks;
                if (g != (paired ? 1 : 0))
                    r.fail("Gram matrix entry wrong at " + detail::pair_str(h[i], h[j]) + " = " +
                           std::to_string(g));
            }
        ++r.checks;
        if (stats.yuk_survivals != 0)
            r.fail("two-line rule produced output in maximal-defect products over " +
                   block.representative().str());
        // tau must reject elements outside H
        for (const BasisDiagram& x : basis_K(block)) {
            if (in_H(x, block)) continue;
            bool threw = false;
            try {
                (void)tau(Element(x), block);
            } catch (const PreconditionError&) {
                threw = true;
            }
            ++r.checks;
            if (!threw) r.fail("tau accepted a K-element outside H: " + x.str());
            break;
        }
    });
    return r;
}

// --- counts --------------------------------------------------------------
// Enumerative identities: Catalan counts for maximal-defect subsets of
// Khovanov blocks, the 2^defect count of weights above a given one, basis
// dimension formulas, the Cartan factorisation C = D D^T, and the graded
// dimension identities of cell filtrations.
inline SuiteResult check_counts(const VerifyOptions& opt) {
    SuiteResult r{"counts"};

    static const long long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        std::string rep(static_cast<std::size_t>(n), 'v');
        rep += std::string(static_cast<std::size_t>(n), '^');
        Block block(Weight::parse(rep));
        ++r.checks;
        if (static_cast<long long>(maximal_defect_subset(block).size()) != catalan[n])
            r.fail("maximal-defect count wrong for the rank " + std::to_string(n) + " block");
    }

    for_each_block(opt.max_vertices, [&](const Block& block) {
        // 2^defect and unique-base-weight recovery
        for (const Weight& lam : block.members()) {
            const ArcDiagram cl = cup_diagram_of(lam);
            long long above = 0;
            for (const Weight& mu : block.members())
                if (is_oriented(cl, mu)) ++above;
            ++r.checks;
            if (above != (1LL << defect(lam)))
                r.fail("count of weights above " + lam.str() + " is " + std::to_string(above));
            for (const Weight& mu : block.members()) {
                if (!is_oriented(cl, mu)) continue;
                Weight alpha = base_weight(cl, mu);
                ++r.checks;
                if (!(cup_diagram_of(alpha) == cl) || !subset_rel(alpha, mu))
                    r.fail("base weight recovery failed for " + lam.str() + " in " + mu.str());
                long long hits = 0;
                for (const Weight& g : block.members())
                    if (cup_diagram_of(g) == cl && subset_rel(g, mu)) ++hits;
                if (hits != 1)
                    r.fail("base weight not unique for " + lam.str() + " in " + mu.str());
            }
            // cup diagram injectivity on the block
            for (const Weight& mu : block.members()) {
                ++r.checks;
                if (!(lam == mu) && cup_diagram_of(lam) == cup_diagram_of(mu))
                    r.fail("distinct weights share a cup diagram: " + lam.str() + " " + mu.str());
            }
        }

        // dimension formulas
        PolyMatrix D = decomposition_matrix(block);
        long long dimK = 0, dimH = 0;
        const int top = defect(block);
        for (std::size_t c = 0; c < D.size(); ++c) {
            long long colK = 0, colH = 0;
            for (std::size_t rw = 0; rw < D.size(); ++rw) {
                const std::int64_t v = D.at(rw, c).eval_at_one();
                colK += v;
                if (defect(block[rw]) == top) colH += v;
            }
            dimK += colK * colK;
            dimH += colH * colH;
        }
        ++r.checks;
        if (dimK != static_cast<long long>(basis_K(block).size()))
            r.fail("basis_K size mismatch on block " + block.representative().str());
        if (dimH != static_cast<long long>(basis_H(block).size()))
            r.fail("basis_H size mismatch on block " + block.representative().str());

        // Cartan factorisation
        PolyMatrix C = cartan_matrix(block);
        ++r.checks;
        if (!(C == D * D.transposed()))
            r.fail("C != D D^T on block " + block.representative().str());
        for (std::size_t i = 0; i < C.size(); ++i)
            for (std::size_t j = 0; j < C.size(); ++j) {
                ++r.checks;
                if (!(C.at(i, j) == C.at(j, i))) r.fail("Cartan matrix not symmetric");
                if (C.at(i, j).coeff(0) != (i == j ? 1 : 0))
                    r.fail("Cartan constant term wrong at (" + block[i].str() + "," +
                           block[j].str() + ")");
            }

        // filtration identities
        for (const Weight& lam : block.members()) {
            Filtration f = projective_filtration(block, lam);
            ++r.checks;
            if (static_cast<long long>(f.layers.size()) != (1LL << defect(lam)))
                r.fail("filtration length wrong for " + lam.str());
            if (!(f.layers.back().first == lam) || f.layers.back().second != 0)
                r.fail("filtration does not end with (" + lam.str() + ", 0) on top");
            for (std::size_t i = 0; i < f.layers.size(); ++i)
                for (std::size_t j = i + 1; j < f.layers.size(); ++j)
                    if (bruhat_less(f.layers[i].first, f.layers[j].first))
                        r.fail("filtration order violated for " + lam.str());
            LaurentPoly sum;
            for (const auto& [mu, shift] : f.layers)
                sum += LaurentPoly::q_power(shift) * cell_module(block, mu).graded_dim();
            ++r.checks;
            if (!(sum == graded_dim_projective(block, lam)))
                r.fail("graded dimension of P(" + lam.str() + ") does not match its filtration");
        }
        for (const Weight& mu : block.members()) {
            CellModule V = cell_module(block, mu);
            LaurentPoly expect;
            for (const Weight& lam : block.members()) expect += decomposition_entry(lam, mu);
            ++r.checks;
            if (!(V.graded_dim() == expect))
                r.fail("V(" + mu.str() + ") layers do not match the decomposition column");
            auto layers = V.layers();
            for (std::size_t j = 0; j < layers.size(); ++j) {
                ++r.checks;
                if (static_cast<std::int64_t>(layers[j].size()) != expect.coeff(static_cast<int>(j)))
                    r.fail("layer " + std::to_string(j) + " of V(" + mu.str() + ") has wrong size");
            }
        }
    });

    // ring axioms for the polynomial type, randomised
    {
        std::mt19937_64 rng(opt.seed ^ 0xabcdefULL);
        std::uniform_int_distribution<int> exp(-4, 4);
        std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
        auto rand_poly = [&]() {
            LaurentPoly p;
            for (int t = 0; t < 4; ++t) p.add_term(exp(rng), coeff(rng));
            return p;
        };
        for (int s = 0; s < 1000; ++s) {
            LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
            ++r.checks;
            if (!(a + b == b + a) || !(a * b == b * a) || !((a + b) + c == a + (b + c)) ||
                !((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c))
                r.fail("Laurent polynomial ring axiom failed");
        }
    }
    return r;
}

inline std::vector<std::string> suite_names() {
    return {"grading", "assoc", "oracle", "triangular", "cellularity", "symmetric", "counts"};
}

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "grading") return check_grading(opt);
    if (name == "assoc") return check_assoc(opt);
    if (name == "oracle") return check_oracle(opt);
    if (name == "triangular") return check_triangular(opt);
    if (name == "cellularity") return check_cellularity(opt);
    if (name == "symmetric") return check_symmetric(opt);
    if (name == "counts") return check_counts(opt);
    throw PreconditionError("unknown verification suite: " + name);
}

} // namespace arcalg
