/* test_symbols.cpp -- variable tables, symbols, projection */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ws1s/symbols.hpp"

using namespace ws1s;

TEST_CASE("zero symbol") {
    SUBCASE("single variable") {
        VarTable t({"X"});
        Symbol z = zero_symbol(t);
        CHECK(z.care == 1);
        CHECK(z.value == 0);
    }
    SUBCASE("empty table is the unary alphabet") {
        VarTable t;
        Symbol z = zero_symbol(t);
        CHECK(z.care == 0);
        CHECK(z.value == 0);
        CHECK(concretize(z, t).size() == 1);
    }
    SUBCASE("two variables render as all-zero") {
        VarTable t({"X1", "X2"});
        Symbol z = zero_symbol(t);
        CHECK(render_symbol(z, t) == "⟨X1↦0,X2↦0⟩");
    }
}

TEST_CASE("project_symbol") {
    VarTable t({"X1", "X2"});
    SUBCASE("dropping a track re-indexes the rest") {
        Symbol s{0b11, 0b10};  // X1=0, X2=1
        Symbol p = project_symbol(s, t.mask_of({"X2"}));
        CHECK(p.care == 0b1);
        CHECK(p.value == 0);
    }
    SUBCASE("projecting the only track leaves the empty symbol") {
        VarTable tx({"X"});
        Symbol p = project_symbol(Symbol{1, 1}, tx.mask_of({"X"}));
        CHECK(p.care == 0);
        CHECK(p.value == 0);
    }
    SUBCASE("projecting by nothing is the identity") {
        Symbol s{0b11, 0b01};
        CHECK(project_symbol(s, 0) == s);
    }
}

TEST_CASE("inverse_projection") {
    SUBCASE("one-variable block doubles the symbol") {
        VarTable reduced;
        VarTable full({"X"});
        auto out = inverse_projection(Symbol{}, reduced, full, {"X"});
        REQUIRE(out.size() == 2);
        CHECK(out[0] == Symbol{1, 0});
        CHECK(out[1] == Symbol{1, 1});
        auto compressed = inverse_projection(Symbol{}, reduced, full, {"X"}, true);
        REQUIRE(compressed.size() == 1);
        CHECK(compressed[0].care == 0);
    }
    SUBCASE("two-variable block has four extensions") {
        VarTable reduced({"X1"});
        VarTable full({"X1", "X2", "X3"});
        auto out = inverse_projection(Symbol{1, 0}, reduced, full, {"X2", "X3"});
        CHECK(out.size() == 4);
        for (const Symbol& s : out) {
            CHECK(s.care == 0b111);
            CHECK((s.value & 1) == 0);  // X1 stays 0
        }
    }
    SUBCASE("empty block is the identity") {
        VarTable none;
        auto out = inverse_projection(Symbol{}, none, none, {});
        REQUIRE(out.size() == 1);
        CHECK(out[0] == Symbol{});
    }
    SUBCASE("projection of every member recovers the original") {
        VarTable reduced({"X1"});
        VarTable full({"X1", "B1", "B2"});
        Symbol t{1, 1};
        for (const Symbol& s : inverse_projection(t, reduced, full, {"B1", "B2"}))
            CHECK(project_symbol(s, full.mask_of({"B1", "B2"})) == t);
    }
}

TEST_CASE("concretize") {
    VarTable t({"X1", "X2"});
    SUBCASE("fully cared symbol is a singleton") {
        CHECK(concretize(Symbol{0b11, 0b01}, t).size() == 1);
    }
    SUBCASE("one don't-care track gives two assignments") {
        auto out = concretize(Symbol{0b01, 0b01}, t);
        CHECK(out.size() == 2);
        for (const Symbol& s : out) CHECK(s.care == 0b11);
    }
    SUBCASE("cap exceeded raises the size guard") {
        std::vector<std::string> names;
        for (int i = 0; i < 25; ++i) names.push_back("V" + std::to_string(i));
        VarTable big(names);
        CHECK_THROWS_AS(concretize(Symbol{}, big), ResourceLimitError);
    }
    SUBCASE("count matches the non-care track count") {
        Symbol s{0b10, 0b10};
        CHECK(concretize(s, t).size() == 2);  // 2^1
    }
}

TEST_CASE("symbol rendering uses ? for don't-care") {
    VarTable t({"X1", "X2"});
    CHECK(render_symbol(Symbol{0b01, 0b00}, t) == "⟨X1↦0,X2↦?⟩");
    CHECK(render_symbol(Symbol{0b11, 0b10}, t) == "⟨X1↦0,X2↦1⟩");
}

TEST_CASE("compatibility and covering") {
    Symbol a{0b11, 0b01};
    Symbol b{0b01, 0b01};
    Symbol c{0b11, 0b10};
    CHECK(a.compatible(b));
    CHECK(!a.compatible(c));
    CHECK(b.covers(a));
    CHECK(!a.covers(b));
}
