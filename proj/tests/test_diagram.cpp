#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arcalg/arc_diagram.hpp"
#include "arcalg/basis_diagram.hpp"
#include "arcalg/weight.hpp"

using namespace arcalg;

namespace {

std::vector<Arc> arcs1(const ArcDiagram& d) {
    std::vector<Arc> out;
    for (auto [i, j] : d.arcs()) out.emplace_back(i + 1, j + 1);
    return out;
}

} // namespace

TEST_CASE("canonical cup diagram of a weight") {
    ArcDiagram a = cup_diagram_of(Weight::parse("vv^^"));
    REQUIRE(arcs1(a) == std::vector<Arc>{{1, 4}, {2, 3}});
    REQUIRE(a.rays().empty());

    ArcDiagram b = cup_diagram_of(Weight::parse("^v"));
    REQUIRE(b.arc_count() == 0);
    REQUIRE(b.rays() == std::vector<int>{0, 1});

    ArcDiagram c = cup_diagram_of(Weight::parse("v^^vvx^ov"));
    REQUIRE(arcs1(c) == std::vector<Arc>{{1, 2}, {5, 7}});
    REQUIRE(c.rays() == std::vector<int>{2, 3, 8});
    REQUIRE(c.free_positions() == std::vector<int>{5, 7});
}

TEST_CASE("neighbour joining is independent of the pair chosen first") {
    // literal algorithm with a random eligible pair at each step
    auto randomized = [](const Weight& w, std::mt19937_64& rng) {
        const int n = static_cast<int>(w.size());
        std::vector<int> partner(static_cast<std::size_t>(n), ArcDiagram::kRay);
        for (int i = 0; i < n; ++i)
            if (!is_slot(w[static_cast<std::size_t>(i)]))
                partner[static_cast<std::size_t>(i)] = ArcDiagram::kFree;
        while (true) {
            std::vector<Arc> eligible;
            for (int i = 0; i < n; ++i) {
                if (partner[static_cast<std::size_t>(i)] != ArcDiagram::kRay ||
                    w[static_cast<std::size_t>(i)] != Label::down)
                    continue;
                for (int j = i + 1; j < n; ++j) {
                    if (partner[static_cast<std::size_t>(j)] == ArcDiagram::kFree ||
                        partner[static_cast<std::size_t>(j)] >= 0)
                        continue; // o/x or already joined: keep scanning
                    if (partner[static_cast<std::size_t>(j)] == ArcDiagram::kRay) {
                        if (w[static_cast<std::size_t>(j)] == Label::up)
                            eligible.emplace_back(i, j);
                        break; // an unjoined v/^ vertex blocks the neighbourhood
                    }
                }
            }
            if (eligible.empty()) break;
            const Arc pick = eligible[std::uniform_int_distribution<std::size_t>(
                0, eligible.size() - 1)(rng)];
            partner[static_cast<std::size_t>(pick.first)] = pick.second;
            partner[static_cast<std::size_t>(pick.second)] = pick.first;
        }
        return ArcDiagram(std::move(partner));
    };

    std::mt19937_64 rng(23);
    const char alphabet[] = {'o', 'x', 'v', '^'};
    std::uniform_int_distribution<int> len(0, 10), sym(0, 3);
    for (int t = 0; t < 400; ++t) {
        std::string s;
        for (int i = 0, n = len(rng); i < n; ++i) s.push_back(alphabet[sym(rng)]);
        Weight w = Weight::parse(s);
        REQUIRE(randomized(w, rng) == cup_diagram_of(w));
    }
}

TEST_CASE("orientation conditions") {
    // the canonical diagram is oriented with degree zero
    std::mt19937_64 rng(3);
    const char alphabet[] = {'o', 'x', 'v', '^'};
    std::uniform_int_distribution<int> len(0, 10), sym(0, 3);
    for (int t = 0; t < 200; ++t) {
        std::string s;
        for (int i = 0, n = len(rng); i < n; ++i) s.push_back(alphabet[sym(rng)]);
        Weight w = Weight::parse(s);
        REQUIRE(is_oriented(cup_diagram_of(w), w));
        REQUIRE(half_degree(cup_diagram_of(w), w) == 0);
    }

    // two rays labelled v then ^ are forbidden
    ArcDiagram rays = ArcDiagram::from_arcs(2, {}, {});
    REQUIRE_FALSE(is_oriented(rays, Weight::parse("v^")));
    REQUIRE(is_oriented(rays, Weight::parse("^v")));
    REQUIRE(is_oriented(rays, Weight::parse("^^")));
    REQUIRE(is_oriented(rays, Weight::parse("vv")));

    // a cup carrying ^v is oriented and clockwise
    ArcDiagram arc = ArcDiagram::from_arcs(2, {{0, 1}}, {});
    REQUIRE(is_oriented(arc, Weight::parse("^v")));
    REQUIRE(half_degree(arc, Weight::parse("^v")) == 1);
    REQUIRE_FALSE(is_oriented(arc, Weight::parse("^^")));
    REQUIRE_FALSE(is_oriented(arc, Weight::parse("ox")));
    REQUIRE(base_weight(arc, Weight::parse("^v")).str() == "v^");
}

TEST_CASE("degrees of small closed diagrams") {
    BasisDiagram anti = BasisDiagram::parse("(1,2)|v^|(1,2)");
    REQUIRE(anti.degree() == 0);
    BasisDiagram clock = BasisDiagram::parse("(1,2)|^v|(1,2)");
    REQUIRE(clock.degree() == 2);
}

TEST_CASE("subset relation") {
    REQUIRE(subset_rel(Weight::parse("v^"), Weight::parse("v^")));
    REQUIRE(subset_rel(Weight::parse("v^"), Weight::parse("^v")));
    REQUIRE_FALSE(subset_rel(Weight::parse("^v"), Weight::parse("v^")));
}

TEST_CASE("defect and maximal-defect weights") {
    REQUIRE(defect(Weight::parse("^v")) == 0);
    REQUIRE(defect(Weight::parse("v^")) == 1);
    REQUIRE(defect(Weight::parse("vv^^")) == 2);

    Block block(Weight::parse("vv^^"));
    auto top = maximal_defect_subset(block);
    REQUIRE(top.size() == 2);
    REQUIRE(top[0].str() == "vv^^");
    REQUIRE(top[1].str() == "v^v^");

    // weights above v^ are exactly v^ and ^v
    const ArcDiagram c = cup_diagram_of(Weight::parse("v^"));
    std::vector<std::string> above;
    for (const Weight& mu : Block(Weight::parse("v^")).members())
        if (is_oriented(c, mu)) above.push_back(mu.str());
    REQUIRE(above == std::vector<std::string>{"v^", "^v"});
}

TEST_CASE("components of glued diagrams") {
    ArcDiagram arc = ArcDiagram::from_arcs(2, {{0, 1}}, {});
    auto circle = components(arc, arc);
    REQUIRE(circle.size() == 1);
    REQUIRE(circle[0].circle);
    REQUIRE(circle[0].vertices == std::vector<int>{0, 1});
    REQUIRE(circle_anticlockwise(circle[0], Weight::parse("v^")));
    REQUIRE_FALSE(circle_anticlockwise(circle[0], Weight::parse("^v")));

    ArcDiagram rays = ArcDiagram::from_arcs(2, {}, {});
    auto lines = components(rays, rays);
    REQUIRE(lines.size() == 2);
    REQUIRE_FALSE(lines[0].circle);
    REQUIRE_FALSE(lines[1].circle);

    ArcDiagram cup = ArcDiagram::from_arcs(3, {{0, 1}}, {});
    ArcDiagram cap = ArcDiagram::from_arcs(3, {{1, 2}}, {});
    auto one_line = components(cup, cap);
    REQUIRE(one_line.size() == 1);
    REQUIRE_FALSE(one_line[0].circle);
    REQUIRE(one_line[0].vertices == std::vector<int>{0, 1, 2});

    ArcDiagram with_free = ArcDiagram::from_arcs(2, {}, {1});
    REQUIRE_THROWS_AS(components(with_free, rays), ContractViolation);
}

TEST_CASE("arc diagram validation") {
    REQUIRE_THROWS_AS(ArcDiagram::from_arcs(4, {{0, 2}, {1, 3}}, {}), ContractViolation);
    REQUIRE_THROWS_AS(ArcDiagram::from_arcs(3, {{0, 2}}, {}), ContractViolation); // trapped ray
    REQUIRE_NOTHROW(ArcDiagram::from_arcs(3, {{0, 2}}, {1}));                    // free inside is fine
    REQUIRE_THROWS_AS(ArcDiagram::from_arcs(2, {{0, 1}, {0, 1}}, {}), ContractViolation);
}

TEST_CASE("diagram involutions") {
    BasisDiagram a = BasisDiagram::parse("|^v|(1,2)");
    BasisDiagram b = BasisDiagram::parse("(1,2)|^v|");
    REQUIRE(a.mirrored() == b);
    REQUIRE(b.mirrored() == a);
    REQUIRE(a.mirrored().degree() == a.degree());

    BasisDiagram e = BasisDiagram::idempotent(Weight::parse("v^"));
    REQUIRE(e.mirrored() == e);

    // rotation reverses the line and swaps cup and cap
    BasisDiagram r = b.rotated();
    REQUIRE(r.weight().str() == "^v");
    REQUIRE(r.rotated() == b);
}

TEST_CASE("distinct block members have distinct cup diagrams") {
    for (const char* rep : {"vv^^", "vxv^o^^"}) {
        Block block(Weight::parse(rep));
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                REQUIRE_FALSE(cup_diagram_of(block[i]) == cup_diagram_of(block[j]));
    }
}
