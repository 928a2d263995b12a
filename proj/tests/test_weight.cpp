#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "arcalg/verify.hpp"
#include "arcalg/weight.hpp"

using namespace arcalg;

TEST_CASE("weight parsing and formatting") {
    Weight w = Weight::parse("v^");
    REQUIRE(w.size() == 2);
    REQUIRE(w[0] == Label::down);
    REQUIRE(w[1] == Label::up);

    Weight x = Weight::parse("xov^");
    REQUIRE(x[0] == Label::cross);
    REQUIRE(x[1] == Label::nought);
    REQUIRE(x[2] == Label::down);
    REQUIRE(x[3] == Label::up);

    REQUIRE(Weight::parse("").size() == 0);

    REQUIRE_THROWS_MATCHES(Weight::parse("v?^"), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("position 2")));
}

TEST_CASE("weight text round trip") {
    const char alphabet[] = {'o', 'x', 'v', '^'};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 10), sym(0, 3);
    for (int t = 0; t < 500; ++t) {
        std::string s;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) s.push_back(alphabet[sym(rng)]);
        REQUIRE(Weight::parse(s).str() == s);
    }
}

TEST_CASE("star and rotation") {
    REQUIRE(Weight::parse("v^").star().str() == "^v");
    // rotating through 180 degrees reverses the line and turns every arrow
    REQUIRE(Weight::parse("xov^").rotated().str() == "v^ox");
    REQUIRE(Weight::parse("xo^vvx^ov").rotated().str() == "^ovx^^vox");
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(0, 9), sym(0, 3);
    const char alphabet[] = {'o', 'x', 'v', '^'};
    for (int t = 0; t < 200; ++t) {
        std::string s;
        for (int i = 0, n = len(rng); i < n; ++i) s.push_back(alphabet[sym(rng)]);
        Weight w = Weight::parse(s);
        REQUIRE(w.star().star() == w);
        REQUIRE(w.rotated().rotated() == w);
    }
}

TEST_CASE("bruhat order examples") {
    REQUIRE(bruhat_leq(Weight::parse("v^"), Weight::parse("^v")));
    REQUIRE_FALSE(bruhat_leq(Weight::parse("^v"), Weight::parse("v^")));
    // two swaps: vv^^ -> v^v^ -> ^vv^ ... -> ^^vv
    REQUIRE(bruhat_leq(Weight::parse("vv^^"), Weight::parse("^^vv")));
    REQUIRE_THROWS_AS(bruhat_leq(Weight::parse("v^"), Weight::parse("v^^")), PreconditionError);
    REQUIRE_FALSE(bruhat_leq(Weight::parse("vo"), Weight::parse("ov"))); // different blocks
}

namespace {

// Generative definition: reachability by repeatedly swapping a v with an ^
// to its right.
std::map<std::string, std::set<std::string>> swap_reachability(const Block& block) {
    std::map<std::string, std::set<std::string>> above;
    for (const Weight& w : block.members()) {
        std::set<std::string>& reach = above[w.str()];
        std::vector<Weight> stack{w};
        reach.insert(w.str());
        while (!stack.empty()) {
            Weight cur = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] != Label::down) continue;
                for (std::size_t j = i + 1; j < cur.size(); ++j) {
                    if (cur[j] != Label::up) continue;
                    Weight nxt = cur.with(i, Label::up).with(j, Label::down);
                    if (reach.insert(nxt.str()).second) stack.push_back(nxt);
                }
            }
        }
    }
    return above;
}

} // namespace

TEST_CASE("prefix characterisation matches the generative Bruhat order") {
    long long blocks = 0;
    for_each_block(8, [&](const Block& block) {
        ++blocks;
        auto above = swap_reachability(block);
        for (const Weight& a : block.members())
            for (const Weight& b : block.members()) {
                const bool generative = above[a.str()].count(b.str()) > 0;
                REQUIRE(bruhat_leq(a, b) == generative);
            }
    });
    REQUIRE(blocks > 30000); // all o/x placements really were enumerated
}

TEST_CASE("block enumeration and member order") {
    Block b(Weight::parse("v^"));
    REQUIRE(b.size() == 2);
    REQUIRE(b[0].str() == "v^");
    REQUIRE(b[1].str() == "^v");

    Block big(Weight::parse("vv^^"));
    std::vector<std::string> got;
    for (const Weight& w : big.members()) got.push_back(w.str());
    REQUIRE(got == std::vector<std::string>{"vv^^", "v^v^", "^vv^", "v^^v", "^v^v", "^^vv"});

    Block ox(Weight::parse("ox"));
    REQUIRE(ox.size() == 1);
    REQUIRE(ox[0].str() == "ox");

    Block empty(Weight::parse(""));
    REQUIRE(empty.size() == 1);

    // binomial count and Bruhat refinement
    Block mixed(Weight::parse("vxv^o^^"));
    REQUIRE(mixed.size() == 10); // C(5,2)
    for (std::size_t i = 0; i < mixed.size(); ++i)
        for (std::size_t j = 0; j < mixed.size(); ++j)
            if (bruhat_less(mixed[i], mixed[j])) REQUIRE(i < j);

    REQUIRE(big.index_of(Weight::parse("^vv^")) == 2);
    REQUIRE_THROWS_AS(big.index_of(Weight::parse("^^^^")), BlockMismatch);
}
