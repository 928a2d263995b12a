#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "arcalg/rep_theory.hpp"

using namespace arcalg;

TEST_CASE("laurent polynomial text and arithmetic") {
    REQUIRE(LaurentPoly{}.str() == "0");
    REQUIRE(LaurentPoly::constant(1).str() == "1");
    REQUIRE(LaurentPoly::q_power(1).str() == "q");
    REQUIRE((LaurentPoly::constant(1) + LaurentPoly::q_power(2)).str() == "1+q^2");
    REQUIRE((LaurentPoly::q_power(-1) + LaurentPoly::q_power(1, 2)).str() == "q^-1+2q");
    REQUIRE((LaurentPoly::constant(1) + LaurentPoly::q_power(1, -1)).str() == "1-q");
    LaurentPoly p = LaurentPoly::q_power(1) + LaurentPoly::constant(1);
    REQUIRE((p * p).str() == "1+2q+q^2");
    REQUIRE((p * p).eval_at_one() == 4);
    LaurentPoly cancel = LaurentPoly::q_power(3) + LaurentPoly::q_power(3, -1);
    REQUIRE(cancel.zero());
}

TEST_CASE("decomposition matrix of the two vertex block") {
    Block block(Weight::parse("v^"));
    PolyMatrix D = decomposition_matrix(block);
    REQUIRE(D.at(0, 0).str() == "1");
    REQUIRE(D.at(0, 1).str() == "q");
    REQUIRE(D.at(1, 0).str() == "0");
    REQUIRE(D.at(1, 1).str() == "1");
}

TEST_CASE("decomposition matrix of the rank two block matches the printed table") {
    Block block(Weight::parse("vv^^"));
    PolyMatrix D = decomposition_matrix(block);
    const std::vector<std::vector<std::string>> expect{
        {"1", "q", "0", "0", "q", "q^2"}, {"0", "1", "q", "q", "q^2", "0"},
        {"0", "0", "1", "0", "q", "0"},   {"0", "0", "0", "1", "q", "0"},
        {"0", "0", "0", "0", "1", "q"},   {"0", "0", "0", "0", "0", "1"},
    };
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            INFO("entry (" << block[r].str() << ", " << block[c].str() << ")");
            REQUIRE(D.at(r, c).str() == expect[r][c]);
        }
}

TEST_CASE("cartan matrix and its factorisation") {
    Block two(Weight::parse("v^"));
    PolyMatrix C = cartan_matrix(two);
    REQUIRE(C.at(0, 0).str() == "1+q^2");
    REQUIRE(C.at(0, 1).str() == "q");
    REQUIRE(C.at(1, 0).str() == "q");
    REQUIRE(C.at(1, 1).str() == "1");

    for (const char* rep : {"v^", "vv^^", "vox^v^", "v^^"}) {
        Block block(Weight::parse(rep));
        PolyMatrix D = decomposition_matrix(block);
        REQUIRE(cartan_matrix(block) == D * D.transposed());
    }

    // diagonal entries at q = 1 count the weights above
    Block block(Weight::parse("vv^^"));
    PolyMatrix C2 = cartan_matrix(block);
    for (std::size_t i = 0; i < block.size(); ++i)
        REQUIRE(C2.at(i, i).eval_at_one() == (1 << defect(block[i])));
}

TEST_CASE("cell modules of the two vertex block") {
    Block block(Weight::parse("^v"));
    CellModule Vtop = cell_module(block, Weight::parse("v^"));
    REQUIRE(Vtop.basis.size() == 1);
    REQUIRE(Vtop.graded_dim().str() == "1");

    CellModule V = cell_module(block, Weight::parse("^v"));
    REQUIRE(V.basis.size() == 2);
    REQUIRE(V.graded_dim().str() == "1+q");
    auto layers = V.layers();
    REQUIRE(layers.size() == 2);
    REQUIRE(layers[0] == std::vector<Weight>{Weight::parse("^v")});
    REQUIRE(layers[1] == std::vector<Weight>{Weight::parse("v^")});

    // the idempotent at v^ fixes the vector it anchors
    const int idx = V.index_of(Weight::parse("v^"));
    REQUIRE(idx >= 0);
    auto act = cell_action(BasisDiagram::idempotent(Weight::parse("v^")), V, idx);
    REQUIRE(act.has_value());
    REQUIRE(*act == idx);

    REQUIRE_THROWS_AS(cell_module(block, Weight::parse("vv")), BlockMismatch);
}

TEST_CASE("cell modules carry a genuine module structure") {
    for (const char* rep : {"^v", "vv^^"}) {
        Block block(Weight::parse(rep));
        auto basis = basis_K(block);
        for (const Weight& mu : block.members()) {
            CellModule V = cell_module(block, mu);
            for (const BasisDiagram& x : basis)
                for (const BasisDiagram& y : basis) {
                    Element xy = multiply_generalized(x, y);
                    for (std::size_t v = 0; v < V.basis.size(); ++v) {
                        std::vector<std::int64_t> unit(V.basis.size(), 0);
                        unit[v] = 1;
                        auto lhs = cell_apply(xy, V, unit);
                        auto rhs = cell_apply(Element(x), V, cell_apply(Element(y), V, unit));
                        INFO(rep << ": (" << x.str() << ")(" << y.str() << ") on vector " << v
                                 << " of V(" << mu.str() << ")");
                        REQUIRE(lhs == rhs);
                    }
                }
        }
    }
}

TEST_CASE("projective filtrations") {
    Block block(Weight::parse("^v"));
    Filtration f = projective_filtration(block, Weight::parse("v^"));
    REQUIRE(f.layers.size() == 2);
    REQUIRE(f.layers[0].first.str() == "^v");
    REQUIRE(f.layers[0].second == 1);
    REQUIRE(f.layers[1].first.str() == "v^");
    REQUIRE(f.layers[1].second == 0);
    REQUIRE(graded_dim_projective(block, Weight::parse("v^")).str() == "1+q+q^2");

    // a maximal weight has projective equal to its cell module
    Filtration top = projective_filtration(block, Weight::parse("^v"));
    REQUIRE(top.layers.size() == 1);
    REQUIRE(top.layers[0].first.str() == "^v");
    REQUIRE(graded_dim_projective(block, Weight::parse("^v")) ==
            cell_module(block, Weight::parse("^v")).graded_dim());

    // consistency of graded dimensions across a bigger block
    Block big(Weight::parse("vv^^"));
    for (const Weight& lam : big.members()) {
        Filtration ff = projective_filtration(big, lam);
        REQUIRE(static_cast<int>(ff.layers.size()) == (1 << defect(lam)));
        LaurentPoly sum;
        for (const auto& [mu, shift] : ff.layers)
            sum += LaurentPoly::q_power(shift) * cell_module(big, mu).graded_dim();
        REQUIRE(sum == graded_dim_projective(big, lam));
    }

    // incomparable layer weights are ordered by block order
    Filtration tie = projective_filtration(big, Weight::parse("v^v^"));
    std::vector<std::string> order;
    for (const auto& [mu, shift] : tie.layers) {
        (void)shift;
        order.push_back(mu.str());
    }
    REQUIRE(order == std::vector<std::string>{"^v^v", "^vv^", "v^^v", "v^v^"});
}

TEST_CASE("truncation to the symmetric subalgebra") {
    Block block(Weight::parse("^v"));
    REQUIRE(truncated_simple_nonzero(block, Weight::parse("v^")));
    REQUIRE_FALSE(truncated_simple_nonzero(block, Weight::parse("^v")));
    REQUIRE(truncated_cell_graded_dim(block, Weight::parse("^v")).str() == "q");
    REQUIRE(truncated_cell_graded_dim(block, Weight::parse("v^")).str() == "1");
    REQUIRE(truncated_projective_graded_dim(block, Weight::parse("v^")).str() == "1+q^2");
}

TEST_CASE("matrix csv output") {
    Block block(Weight::parse("v^"));
    REQUIRE(decomposition_matrix(block).csv() == ",v^,^v\nv^,1,q\n^v,0,1\n");
    REQUIRE(cartan_matrix(block).csv() == ",v^,^v\nv^,1+q^2,q\n^v,q,1\n");
    // byte-stable
    REQUIRE(decomposition_matrix(block).csv() == decomposition_matrix(block).csv());
}
